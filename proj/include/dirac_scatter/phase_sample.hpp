#pragma once

#include <cmath>

namespace dscat {

/// One point of a phase-shift curve. delta lies on a branch continuous along
/// the curve it was produced with; tan_delta and sin2_delta are branch-free.
struct PhaseShiftSample {
  double E = 0.0;
  double k = 0.0;
  double delta = 0.0;
  double tan_delta = 0.0;
  double sin2_delta = 0.0;
};

inline PhaseShiftSample make_sample(double E, double k, double delta)
{
  const double s = std::sin(delta);
  return PhaseShiftSample{E, k, delta, std::tan(delta), s * s};
}

} // namespace dscat

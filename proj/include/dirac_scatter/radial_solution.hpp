#pragma once

#include <optional>
#include <vector>

namespace dscat {

/// Interior coefficients multiply the regular solution (a1) and the irregular
/// one (a2, always 0 here); exterior ones give f = r (b1 j + b2 n) so that
/// tan delta = -b2 / b1 and A^2 = b1^2 + b2^2.
struct MatchingCoefficients {
  double a1 = 1.0;
  double a2 = 0.0;
  double b1 = 0.0;
  double b2 = 0.0;
  double A = 0.0;
};

/// Sampled radial pair r psi = (f, g).
struct RadialSolution {
  std::vector<double> r;
  std::vector<double> f;
  std::vector<double> g;
  std::optional<MatchingCoefficients> coefficients;

  std::size_t size() const { return r.size(); }
};

} // namespace dscat

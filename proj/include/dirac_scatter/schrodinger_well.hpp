#pragma once

#include <vector>

#include "dirac_scatter/phase_sample.hpp"
#include "dirac_scatter/phase_tracking.hpp"

namespace dscat {

/// Non-relativistic spherical well of depth V (potential -V for r <= a),
/// hbar = 1, E = k^2 / 2m.
struct SchrodingerWell {
  double V = 0.0;
  double a = 1.0;
  double m = 1.0;

  /// Throws std::invalid_argument unless V >= 0 and a, m > 0.
  void validate() const;
  double interior_momentum(double k) const;
};

/// General-l matching of regular interior and free exterior solutions.
/// Requires k > 0.
PhaseComponents schrodinger_tan_components(const SchrodingerWell& w, int l, double k);

/// Closed forms for l = 0 and l = 1 written without tangent poles.
PhaseComponents schrodinger_tan_components_s(const SchrodingerWell& w, double k);
PhaseComponents schrodinger_tan_components_p(const SchrodingerWell& w, double k);

/// Phase shifts at momenta ks (any order, all > 0) on the branch that vanishes
/// at large k.
std::vector<PhaseShiftSample> schrodinger_phase_curve(const SchrodingerWell& w, int l,
                                                      const std::vector<double>& ks);

PhaseShiftSample schrodinger_phase_shift(const SchrodingerWell& w, int l, double k);

/// Depth V_c of the n-th (n >= 1) zero-energy state with angular momentum l.
double schrodinger_critical_depth(int l, int n, double m, double a);

/// 2 d delta / dE by finite differences on a non-uniform grid; second-order
/// one-sided stencils at the ends. Needs >= 3 samples with increasing E.
std::vector<double> wigner_time_delay(const std::vector<PhaseShiftSample>& samples);

} // namespace dscat

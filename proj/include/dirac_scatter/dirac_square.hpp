#pragma once

#include <vector>

#include "dirac_scatter/channel.hpp"
#include "dirac_scatter/phase_sample.hpp"
#include "dirac_scatter/phase_tracking.hpp"
#include "dirac_scatter/potential_sign.hpp"
#include "dirac_scatter/radial_solution.hpp"

namespace dscat {

/// Dirac particle of mass m in a square potential of value U for r <= a
/// (U = -V for a well of depth V, U = +V for a barrier of height V).
struct DiracSquareSystem {
  double U = 0.0;
  double a = 1.0;
  double m = 1.0;
  Channel channel = Channel::from_chi(-1);

  static DiracSquareSystem well(double depth, double a, double m, Channel ch);
  static DiracSquareSystem barrier(double height, double a, double m, Channel ch);
  static DiracSquareSystem make(PotentialSign s, double v, double a, double m, Channel ch);

  double magnitude() const { return U < 0.0 ? -U : U; }
  PotentialSign sign() const { return U > 0.0 ? PotentialSign::barrier : PotentialSign::well; }
  /// Throws std::invalid_argument unless a, m > 0 and U finite.
  void validate() const;
};

/// Momenta at energy E. Quantities that are not real are NaN.
struct DiracKinematics {
  double E = 0.0;
  double k = 0.0;     ///< exterior, k^2 = E^2 - m^2
  double kappa = 0.0; ///< exterior decay rate, kappa^2 = m^2 - E^2
  double p2 = 0.0;    ///< interior (E - U)^2 - m^2, may be negative
  double p = 0.0;     ///< sqrt(p2)
  double gamma = 0.0; ///< (p/k)(E+m)/(E-U+m)

  static DiracKinematics compute(const DiracSquareSystem& sys, double E);
};

/// tan(delta) from matching at r = a, written in terms of j_l(pr)/(pr)^l so it
/// stays finite and real for p^2 <= 0 and at E - U + m = 0. Requires |E| > m.
PhaseComponents dirac_tan_components(const DiracSquareSystem& sys, double E);

/// The same ratio in the familiar gamma-weighted Bessel form; requires p^2 > 0.
PhaseComponents dirac_tan_components_bessel(const DiracSquareSystem& sys, double E);

/// s1/2 closed form in sin/cos of ka and pa (cosh/sinh below the barrier top).
/// Requires chi = -1 and |E| > m.
PhaseComponents swave_tan_components(const DiracSquareSystem& sys, double E);

/// delta(E -> m+) / pi: the number of threshold zero-momentum states below the
/// potential strength, positive for wells and negative for barriers.
int dirac_threshold_branch(const DiracSquareSystem& sys);

/// Positive-energy phase shifts (all E > m) on the branch continuous in k
/// from threshold.
std::vector<PhaseShiftSample> dirac_phase_curve(const DiracSquareSystem& sys,
                                                const std::vector<double>& energies);

PhaseShiftSample dirac_phase_shift(const DiracSquareSystem& sys, double E);
PhaseShiftSample swave_phase_closed_form(const DiracSquareSystem& sys, double E);

/// Matching coefficients for the interior normalisation f = a1 r^{l+1} S_l(r),
/// S_l = j_l(pr)/(pr)^l, with a1 = +-1 chosen so that b1 >= 0.
MatchingCoefficients dirac_matching(const DiracSquareSystem& sys, double E);

/// Regular interior solution with the normalisation of dirac_matching.
RadialSolution interior_solution(const DiracSquareSystem& sys, double E, const std::vector<double>& r,
                                 double a1 = 1.0);

/// Free solution f = A r [cos d j_l(kr) - sin d n_l(kr)], g accordingly.
RadialSolution exterior_solution(const DiracSquareSystem& sys, double E, double delta,
                                 const std::vector<double>& r, double A = 1.0);

/// Interior for r <= a and exterior beyond, continuous at r = a.
RadialSolution matched_solution(const DiracSquareSystem& sys, double E, const std::vector<double>& r);

} // namespace dscat

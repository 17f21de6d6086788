#pragma once

#include <string>
#include <vector>

#include "dirac_scatter/channel.hpp"
#include "dirac_scatter/potential.hpp"
#include "dirac_scatter/potential_sign.hpp"

namespace dscat {

/// Zero-momentum state at E = energy_sign * m ("critical" for +1,
/// "supercritical" for -1) in a well or barrier.
struct CriticalCondition {
  Channel channel = Channel::from_chi(-1);
  int energy_sign = 1;
  PotentialSign sign = PotentialSign::well;

  /// Throws std::invalid_argument unless energy_sign is +-1.
  void validate() const;
  /// Interior p^2 = w (w + 2 s m) with w = +v for wells, -v for barriers.
  double p2(double v, double m) const;
  /// Interior momentum; throws std::domain_error below the real-momentum threshold.
  double p_crit(double v, double m) const;
  /// Coupling below which the square-well interior momentum is imaginary.
  double threshold(double m) const;
  /// Label in the style "s1/2(-)" plus energy, e.g. "s1/2(-) E=+m".
  std::string label() const;
};

struct CriticalCoupling {
  double value = 0.0;
  int n = 0;
  CriticalCondition condition;
  double residual = 0.0;
};

/// Zero-momentum matching condition for the square shape as a pole-free
/// combination of spherical Bessel functions of p a. v >= 0 is the magnitude.
double square_critical_residual(const CriticalCondition& cond, double v, double m, double a);

/// Equivalent trigonometric conditions for |chi| = 1, written without tangents.
double square_critical_trig_residual(const CriticalCondition& cond, double v, double m, double a);

struct RootScan {
  double step = 0.05;
  double v_max = 1e4;
  double rel_tol = 1e-10;
};

/// First `count` roots of square_critical_residual in increasing order.
/// Throws NumericalError if fewer are found below scan.v_max.
std::vector<CriticalCoupling> find_square_criticals(const CriticalCondition& cond, double m, double a,
                                                    int count, const RootScan& scan = {});

/// All roots with value < v_limit.
std::vector<CriticalCoupling> square_criticals_below(const CriticalCondition& cond, double m, double a,
                                                     double v_limit, const RootScan& scan = {});

int count_square_criticals_below(const CriticalCondition& cond, double m, double a, double v_limit);

/// Closed form for chi = +1 at E = m: p a = n pi, v = sqrt(m^2 + (n pi / a)^2) - m for a well
/// and + m for a barrier.
double p_sector_closed_form(PotentialSign sign, int n, double m, double a);

/// Partner under the crossing symmetry: sign flipped, E -> -E, chi -> -chi.
CriticalCondition crossing_partner(const CriticalCondition& cond);

struct ShootingOptions {
  double step = 0.05;
  double v_min = 0.0;
  double v_max = 30.0;
  /// Matching radius in units of a; extended automatically for slowly decaying shapes.
  double match_radius = 10.0;
  double rel_tol = 1e-10;
  /// RK step in units of a.
  double h = 1e-3;
};

/// Coefficient of the exterior branch that grows at E = +-m when the shape with
/// coupling v and sign cond.sign is integrated from the origin. Zero at a critical coupling.
double zero_momentum_residual(const PotentialSpec& shape, double v, const CriticalCondition& cond, double m,
                              const ShootingOptions& opts = {});

/// First `count` critical couplings of a general shape by shooting. Only the
/// shape and range of `shape` are used; coupling and sign come from the scan and cond.
std::vector<CriticalCoupling> find_general_criticals(const PotentialSpec& shape, const CriticalCondition& cond,
                                                     double m, int count, const ShootingOptions& opts = {});

} // namespace dscat

#pragma once

#include <string>
#include <vector>

#include "dirac_scatter/channel.hpp"
#include "dirac_scatter/dirac_square.hpp"
#include "dirac_scatter/potential.hpp"
#include "dirac_scatter/radial_solution.hpp"

namespace dscat {

/// Free solution the two-point fit at the node uses.
enum class PhaseReference {
  riccati,   ///< f = D (cos d x j_l(x) - sin d x n_l(x)), x = p r
  asymptotic ///< f = D sin(theta + p (r' - r)), delta from p r - l pi / 2
};

struct IntegrationConfig {
  double h = 1e-3;       ///< inner step
  double h_far = 1e-2;   ///< step beyond r_switch
  double r_switch = 20.0;
  double r0 = 1e-6;      ///< start radius
  int nu = 20;           ///< node of g used for the phase fit
  double r_max = 0.0;    ///< 0 selects r_switch + ((nu + 4) pi + 10) / p
  double C = 1.0;        ///< start amplitude
  int start_substeps = 400; ///< geometric steps from r0 to h; the same ratio continues until the spacing reaches h
  PhaseReference reference = PhaseReference::riccati;

  static IntegrationConfig defaults(double a);
  /// Throws std::invalid_argument on non-positive steps or nu < 1.
  void validate() const;
};

/// Leading small-r behaviour f = f_coeff r^f_power, g = g_coeff r^g_power.
struct StartAmplitudes {
  double f_coeff = 1.0;
  int f_power = 1;
  double g_coeff = 0.0;
  int g_power = 2;
};

/// Start for scattering: f = C r^{k+1}, g = sigma C r^k for chi > 0 with
/// sigma = (2k+1)/(E+m-V(0)); f = C r^k, g = sigma C r^{k+1} for chi < 0 with
/// sigma = (V(0)-E+m)/(2k+1); k = |chi|.
StartAmplitudes scattering_start(const PotentialSpec& pot, const Channel& ch, double m, double E, double C);

struct EndState {
  double r = 0.0;
  double f = 0.0;
  double g = 0.0;
};

/// Integrate the coupled radial equations
///   f' = -chi/r f + (E + m - V) g,   g' = -(E - m - V) f + chi/r g
/// with fixed-step RK4 on the grid of cfg up to r_end, storing every point.
RadialSolution integrate_dirac(const PotentialSpec& pot, const Channel& ch, double m, double E,
                               const StartAmplitudes& start, double r_end, const IntegrationConfig& cfg);

/// As integrate_dirac but keeps only the final point.
EndState integrate_to(const PotentialSpec& pot, const Channel& ch, double m, double E, const StartAmplitudes& start,
                      double r_end, const IntegrationConfig& cfg);

/// Scattering solution at E > m with the scattering start and amplitude cfg.C.
/// Throws NumericalError if the components exceed 1e200.
RadialSolution integrate_radial(const PotentialSpec& pot, const Channel& ch, double m, double E,
                                const IntegrationConfig& cfg);

/// Radius of the nu-th sign change of g (linear interpolation between grid points).
/// Throws NumericalError if there are fewer than nu.
double find_node(const RadialSolution& sol, int nu);

struct NumericalPhaseResult {
  double delta = 0.0;       ///< in [-pi/2, pi/2)
  double D = 0.0;           ///< local amplitude of f
  double theta = 0.0;       ///< local phase of f at the fit radius
  double node_radius = 0.0; ///< r_nu
  double fit_radius = 0.0;  ///< grid point used for the fit
  double C = 0.0;           ///< start amplitude giving unit asymptotic amplitude
};

/// Fit the free solution of cfg.reference to two consecutive grid points at
/// the nu-th node of g and reduce the phase to the window.
NumericalPhaseResult numerical_phase(const RadialSolution& sol, const Channel& ch, double p,
                                     const IntegrationConfig& cfg);

/// integrate_radial + numerical_phase at momentum p.
NumericalPhaseResult scatter(const PotentialSpec& pot, const Channel& ch, double m, double p,
                             const IntegrationConfig& cfg);

struct CurvePoint {
  double x = 0.0;
  double C = 0.0;
  double delta = 0.0;
  bool ok = false;
  std::string error;
  NumericalPhaseResult detail;
};

/// C(v) at fixed momentum p. Points are computed independently, in parallel
/// when threads != 1 (0 = hardware concurrency), and returned in grid order.
std::vector<CurvePoint> resonance_curve_vs_coupling(const PotentialSpec& shape, const Channel& ch, double m,
                                                    double p, const std::vector<double>& couplings,
                                                    const IntegrationConfig& cfg, unsigned threads = 0);

/// C(p) at the coupling of pot.
std::vector<CurvePoint> resonance_curve_vs_momentum(const PotentialSpec& pot, const Channel& ch, double m,
                                                    const std::vector<double>& momenta,
                                                    const IntegrationConfig& cfg, unsigned threads = 0);

struct AnalyticC {
  double C = 0.0;      ///< in the convention of numerical_phase (f ~ C r^{l+1} at the origin)
  double C_unit = 0.0; ///< |1/Psi(R)| with a1 = 1 multiplying r j_l(pr), i.e. (E+m)/A
};

/// Closed-form amplitude at the origin for the square shape.
AnalyticC analytic_C_square(const DiracSquareSystem& sys, double E);

} // namespace dscat

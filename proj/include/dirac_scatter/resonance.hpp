#pragma once

#include <functional>
#include <optional>
#include <stdexcept>
#include <vector>

#include "dirac_scatter/channel.hpp"
#include "dirac_scatter/phase_sample.hpp"

namespace dscat {

enum class PeakKind { resonance, anti_crossing };

const char* to_string(PeakKind k);

struct ResonancePeak {
  double E_R = 0.0;
  double delta_R = 0.0;          ///< the crossed value pi/2 + n pi
  double slope = 0.0;            ///< d delta / dE at E_R
  double tau = 0.0;              ///< Wigner time delay 2 d delta / dE
  double Gamma_time_delay = 0.0; ///< 1 / tau (approximate)
  double Gamma_slope = 0.0;      ///< 2 / slope, the Breit-Wigner width implied by the slope
  std::optional<double> Gamma;   ///< FWHM of sin^2 delta, when bracketed
  PeakKind kind = PeakKind::anti_crossing;
  std::optional<Channel> channel;
};

/// Distinguishes a non-bracketed half maximum from other errors.
class WidthNotBracketed : public std::domain_error {
public:
  using std::domain_error::domain_error;
};

/// Every crossing of delta = pi/2 (mod pi), located by linear interpolation.
/// Needs >= 10 samples with increasing E; throws NumericalError when adjacent
/// samples differ by more than pi/2.
std::vector<ResonancePeak> detect_resonances(const std::vector<PhaseShiftSample>& curve);

/// FWHM of sin^2 delta: width of the connected interval around E_R where
/// |delta - delta_R| <= pi/4. Throws WidthNotBracketed if an edge is missing.
double breit_wigner_width(const std::vector<PhaseShiftSample>& curve, const ResonancePeak& peak);

/// Ratio of FWHM widths when both are known, otherwise of the slope widths.
double width_ratio(const ResonancePeak& a, const ResonancePeak& b);

/// Phase samples on a continuous branch for increasing energies.
using PhaseSampler = std::function<std::vector<PhaseShiftSample>(const std::vector<double>&)>;

/// Resample [E_R - 5 G, E_R + 5 G] (G = Gamma_slope, clipped to [E_min, E_max])
/// with `points` samples and re-locate the crossing and width there.
ResonancePeak refine_resonance(const PhaseSampler& sampler, const ResonancePeak& coarse, double E_min,
                               double E_max, int points = 200);

/// Coarse scan on n points in [E_lo, E_hi], then refinement of each resonance.
std::vector<ResonancePeak> analyze_resonances(const PhaseSampler& sampler, double E_lo, double E_hi, int n,
                                              int refine_points = 200);

} // namespace dscat

#include "dirac_scatter/resonance.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

#include "dirac_scatter/errors.hpp"

namespace dscat {

using std::numbers::pi;

const char* to_string(PeakKind k) { return k == PeakKind::resonance ? "resonance" : "anti-crossing"; }

namespace {

std::vector<double> linspace(double lo, double hi, int n)
{
  std::vector<double> x(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i)
    x[static_cast<std::size_t>(i)] = n == 1 ? lo : lo + (hi - lo) * i / (n - 1);
  return x;
}

// energy where delta reaches `target` between samples i and i+1
double interpolate(const std::vector<PhaseShiftSample>& c, std::size_t i, double target)
{
  const double d0 = c[i].delta, d1 = c[i + 1].delta;
  if (d1 == d0)
    return c[i].E;
  return c[i].E + (target - d0) / (d1 - d0) * (c[i + 1].E - c[i].E);
}

// Bisect the crossing inside its bracketing samples and take the slope by a
// central difference there.
ResonancePeak polish(const PhaseSampler& sampler, const std::vector<PhaseShiftSample>& curve,
                     const ResonancePeak& pk)
{
  std::size_t i = 0;
  while (i + 2 < curve.size() && curve[i + 1].E < pk.E_R)
    ++i;
  double lo = curve[i].E, hi = curve[i + 1].E;
  const auto at = [&](double E) { return sampler({E}).front().delta - pk.delta_R; };
  double flo = curve[i].delta - pk.delta_R;
  for (int it = 0; it < 60 && hi - lo > 1e-13 * std::abs(hi); ++it) {
    const double mid = 0.5 * (lo + hi);
    const double fm = at(mid);
    if ((fm < 0.0) == (flo < 0.0)) {
      lo = mid;
      flo = fm;
    } else {
      hi = mid;
    }
  }
  ResonancePeak out = pk;
  out.E_R = 0.5 * (lo + hi);
  const double eps = 1e-3 * (curve[i + 1].E - curve[i].E);
  const auto pair = sampler({out.E_R - eps, out.E_R + eps});
  const double slope = (pair[1].delta - pair[0].delta) / (2.0 * eps);
  if (slope > 0.0) {
    out.slope = slope;
    out.tau = 2.0 * slope;
    out.Gamma_time_delay = 1.0 / out.tau;
    out.Gamma_slope = 2.0 / slope;
  }
  return out;
}

} // namespace

std::vector<ResonancePeak> detect_resonances(const std::vector<PhaseShiftSample>& curve)
{
  if (curve.size() < 10)
    throw std::invalid_argument("detect_resonances: need at least 10 samples");
  std::vector<ResonancePeak> peaks;
  for (std::size_t i = 0; i + 1 < curve.size(); ++i) {
    const double E0 = curve[i].E, E1 = curve[i + 1].E;
    const double d0 = curve[i].delta, d1 = curve[i + 1].delta;
    if (!(E1 > E0))
      throw std::invalid_argument("detect_resonances: energies must be strictly increasing");
    if (std::abs(d1 - d0) > pi / 2)
      throw NumericalError("detect_resonances: branch discontinuity between E = " + std::to_string(E0) +
                           " and E = " + std::to_string(E1));
    if (d1 == d0)
      continue;
    const double lo = std::min(d0, d1), hi = std::max(d0, d1);
    for (double n = std::floor((lo - pi / 2) / pi);; n += 1.0) {
      const double c = pi / 2 + n * pi;
      if (c > hi)
        break;
      if (!(c > lo))
        continue;
      ResonancePeak pk;
      pk.delta_R = c;
      pk.E_R = interpolate(curve, i, c);
      pk.slope = (d1 - d0) / (E1 - E0);
      pk.tau = 2.0 * pk.slope;
      pk.Gamma_time_delay = 1.0 / pk.tau;
      pk.Gamma_slope = 2.0 / pk.slope;
      pk.kind = pk.slope > 0.0 ? PeakKind::resonance : PeakKind::anti_crossing;
      peaks.push_back(pk);
    }
  }
  return peaks;
}

double breit_wigner_width(const std::vector<PhaseShiftSample>& curve, const ResonancePeak& peak)
{
  if (peak.kind != PeakKind::resonance)
    throw std::invalid_argument("breit_wigner_width: peak is not a resonance");
  if (curve.size() < 2)
    throw std::invalid_argument("breit_wigner_width: curve too short");
  const auto it = std::upper_bound(curve.begin(), curve.end(), peak.E_R,
                                   [](double E, const PhaseShiftSample& s) { return E < s.E; });
  if (it == curve.begin() || it == curve.end())
    throw WidthNotBracketed("breit_wigner_width: E_R outside the sampled range");
  const auto j = static_cast<std::size_t>(it - curve.begin()) - 1;
  const double quarter = pi / 4;
  const auto outside = [&](std::size_t i) { return std::abs(curve[i].delta - peak.delta_R) > quarter; };
  const auto edge_value = [&](std::size_t i) {
    return peak.delta_R + std::copysign(quarter, curve[i].delta - peak.delta_R);
  };

  double E_left = 0.0, E_right = 0.0;
  bool have_left = false, have_right = false;
  for (std::size_t i = j + 1; i-- > 0;) {
    if (outside(i)) {
      E_left = interpolate(curve, i, edge_value(i));
      have_left = true;
      break;
    }
  }
  for (std::size_t i = j + 1; i < curve.size(); ++i) {
    if (outside(i)) {
      E_right = interpolate(curve, i - 1, edge_value(i));
      have_right = true;
      break;
    }
  }
  if (!have_left || !have_right)
    throw WidthNotBracketed(std::string("breit_wigner_width: half maximum not bracketed on the ") +
                            (!have_left ? "low" : "high") + "-energy side of E_R = " + std::to_string(peak.E_R));
  return E_right - E_left;
}

double width_ratio(const ResonancePeak& a, const ResonancePeak& b)
{
  if (a.Gamma && b.Gamma)
    return *a.Gamma / *b.Gamma;
  return a.Gamma_slope / b.Gamma_slope;
}

ResonancePeak refine_resonance(const PhaseSampler& sampler, const ResonancePeak& coarse, double E_min,
                               double E_max, int points)
{
  if (coarse.kind != PeakKind::resonance)
    return coarse;
  if (points < 10)
    throw std::invalid_argument("refine_resonance: need at least 10 points");

  ResonancePeak best = coarse;
  bool polished = false;
  double factor = 5.0;
  for (int attempt = 0; attempt < 4; ++attempt, factor *= 3.0) {
    const double G = coarse.Gamma_slope;
    const double lo = std::max(E_min, coarse.E_R - factor * G);
    const double hi = std::min(E_max, coarse.E_R + factor * G);
    if (!(hi > lo))
      break;
    // keep the sample spacing of the first window when it grows
    const int n = std::max(points, static_cast<int>(std::ceil(points * (hi - lo) / (10.0 * G))));
    const auto curve = sampler(linspace(lo, hi, std::min(n, 100 * points)));
    const auto peaks = detect_resonances(curve);
    const ResonancePeak* pick = nullptr;
    for (const auto& pk : peaks) {
      if (pk.kind != PeakKind::resonance || pk.delta_R != coarse.delta_R)
        continue;
      if (!pick || std::abs(pk.E_R - coarse.E_R) < std::abs(pick->E_R - coarse.E_R))
        pick = &pk;
    }
    if (!pick)
      break;
    if (!polished) {
      best = polish(sampler, curve, *pick);
      best.channel = coarse.channel;
      polished = true;
    }
    try {
      best.Gamma = breit_wigner_width(curve, best);
      return best;
    } catch (const WidthNotBracketed&) {
      if (lo == E_min && hi == E_max)
        break;
    }
  }
  best.Gamma.reset();
  return best;
}

std::vector<ResonancePeak> analyze_resonances(const PhaseSampler& sampler, double E_lo, double E_hi, int n,
                                              int refine_points)
{
  if (!(E_hi > E_lo) || n < 10)
    throw std::invalid_argument("analyze_resonances: need E_hi > E_lo and n >= 10");
  const auto curve = sampler(linspace(E_lo, E_hi, n));
  auto peaks = detect_resonances(curve);
  for (auto& pk : peaks)
    if (pk.kind == PeakKind::resonance)
      pk = refine_resonance(sampler, pk, E_lo, E_hi, refine_points);
  return peaks;
}

} // namespace dscat

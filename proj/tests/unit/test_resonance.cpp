#include <doctest.h>

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <vector>

#include "dirac_scatter/critical.hpp"
#include "dirac_scatter/dirac_square.hpp"
#include "dirac_scatter/errors.hpp"
#include "dirac_scatter/resonance.hpp"

using namespace dscat;
using std::numbers::pi;

namespace {

// exact Breit-Wigner: delta = atan2(G/2, E_R - E) on (0, pi)
PhaseShiftSample bw(double E, double ER, double G) { return make_sample(E, 0.0, std::atan2(G / 2, ER - E)); }

std::vector<PhaseShiftSample> bw_curve(double lo, double hi, int n, double ER, double G)
{
  std::vector<PhaseShiftSample> c;
  for (int i = 0; i < n; ++i)
    c.push_back(bw(lo + (hi - lo) * i / (n - 1), ER, G));
  return c;
}

PhaseSampler dirac_sampler(const DiracSquareSystem& sys)
{
  return [sys](const std::vector<double>& E) { return dirac_phase_curve(sys, E); };
}

double fwhm(const DiracSquareSystem& sys, double E_hi, int n = 3000)
{
  const auto peaks = analyze_resonances(dirac_sampler(sys), sys.m * (1 + 1e-6), E_hi, n);
  for (const auto& p : peaks)
    if (p.kind == PeakKind::resonance && p.Gamma)
      return *p.Gamma;
  return NAN;
}

constexpr double hbarc = 197.3269631;

} // namespace

TEST_CASE("synthetic Breit-Wigner")
{
  const double ER = 1.001, G = 0.01;
  const auto c = bw_curve(0.9, 1.1, 20001, ER, G);
  const auto peaks = detect_resonances(c);
  REQUIRE(peaks.size() == 1);
  CHECK(peaks[0].kind == PeakKind::resonance);
  CHECK(peaks[0].E_R == doctest::Approx(ER).epsilon(1e-6));
  CHECK(peaks[0].delta_R == doctest::Approx(pi / 2));
  CHECK(peaks[0].slope > 0.0);
  CHECK(peaks[0].Gamma_slope == doctest::Approx(G).epsilon(1e-3));
  CHECK(peaks[0].tau == doctest::Approx(2 * peaks[0].slope));
  CHECK(breit_wigner_width(c, peaks[0]) == doctest::Approx(G).epsilon(1e-4));

  PhaseSampler s = [&](const std::vector<double>& E) {
    std::vector<PhaseShiftSample> out;
    for (double e : E)
      out.push_back(bw(e, ER, G));
    return out;
  };
  const auto refined = analyze_resonances(s, 0.9, 1.1, 100);
  REQUIRE(refined.size() == 1);
  REQUIRE(refined[0].Gamma);
  CHECK(*refined[0].Gamma == doctest::Approx(G).epsilon(1e-4));
  CHECK(refined[0].E_R == doctest::Approx(ER).epsilon(1e-9));
}

TEST_CASE("decreasing phase is an anti-crossing")
{
  std::vector<PhaseShiftSample> c;
  for (int i = 0; i < 50; ++i)
    c.push_back(make_sample(1.0 + 0.01 * i, 0.0, 2.0 - 0.02 * i));
  const auto peaks = detect_resonances(c);
  REQUIRE(peaks.size() == 1);
  CHECK(peaks[0].kind == PeakKind::anti_crossing);
  CHECK(peaks[0].tau < 0.0);
  CHECK_FALSE(peaks[0].Gamma);
  CHECK(std::string(to_string(PeakKind::anti_crossing)) != std::string(to_string(PeakKind::resonance)));
}

TEST_CASE("crossings of every odd multiple of pi/2")
{
  std::vector<PhaseShiftSample> c;
  for (int i = 0; i < 200; ++i)
    c.push_back(make_sample(i * 0.05, 0.0, 0.06 * i - 3.0));
  const auto peaks = detect_resonances(c);
  // -3 .. 8.94 crosses -pi/2, pi/2, 3pi/2, 5pi/2
  REQUIRE(peaks.size() == 4);
  for (std::size_t i = 0; i < peaks.size(); ++i) {
    CHECK(peaks[i].delta_R == doctest::Approx(-pi / 2 + pi * i));
    CHECK(peaks[i].kind == PeakKind::resonance);
  }
}

TEST_CASE("input checks")
{
  auto c = bw_curve(0.9, 1.1, 9, 1.0, 0.05);
  CHECK_THROWS_AS(detect_resonances(c), std::invalid_argument);
  c = bw_curve(0.9, 1.1, 30, 1.0, 0.05);
  c[10].delta += 2.0;
  CHECK_THROWS_AS(detect_resonances(c), NumericalError);
  // too narrow a window for the half maximum
  const auto narrow = bw_curve(0.999, 1.001, 50, 1.0, 0.05);
  const auto peaks = detect_resonances(narrow);
  REQUIRE(peaks.size() == 1);
  CHECK_THROWS_AS(breit_wigner_width(narrow, peaks[0]), WidthNotBracketed);
}

TEST_CASE("width ratio")
{
  ResonancePeak a, b;
  a.kind = b.kind = PeakKind::resonance;
  a.Gamma = 0.02;
  b.Gamma = 0.02;
  a.Gamma_slope = 0.3;
  b.Gamma_slope = 0.1;
  CHECK(width_ratio(a, b) == 1.0);
  CHECK(width_ratio(a, a) == 1.0);
  b.Gamma.reset();
  CHECK(width_ratio(a, b) == doctest::Approx(3.0));
}

TEST_CASE("Wigner positivity of reported resonances")
{
  const auto sys = DiracSquareSystem::well(75.187, 8.0 / hbarc, 0.511, Channel::from_chi(-1));
  const auto peaks = analyze_resonances(dirac_sampler(sys), 0.511 * (1 + 1e-6), 0.511 + 3.0, 3000);
  int resonances = 0;
  for (const auto& p : peaks) {
    if (p.kind != PeakKind::resonance)
      continue;
    ++resonances;
    const double h = 1e-7;
    const double d1 = dirac_phase_curve(sys, {p.E_R - h, p.E_R + h})[1].delta;
    const double d0 = dirac_phase_curve(sys, {p.E_R - h, p.E_R + h})[0].delta;
    CHECK(d1 > d0);
  }
  CHECK(resonances >= 1);
}

TEST_CASE("near-critical s1/2 widths shrink towards the critical depth")
{
  const double m = 0.511, a = 8.0 / hbarc;
  const double Vc = find_square_criticals({Channel::from_chi(-1), 1, PotentialSign::well}, m, a, 1)[0].value;
  const double g1 = fwhm(DiracSquareSystem::well(0.995 * Vc, a, m, Channel::from_chi(-1)), m + 3.0);
  const double g2 = fwhm(DiracSquareSystem::well(0.999 * Vc, a, m, Channel::from_chi(-1)), m + 3.0);
  CHECK(g1 > g2);
  CHECK(g2 > 0.0);
}

TEST_CASE("a = 8 fm widths")
{
  const double m = 0.511, a = 8.0 / hbarc;
  const auto s = Channel::from_chi(-1), p = Channel::from_chi(1);
  const double s_well = fwhm(DiracSquareSystem::well(75.187, a, m, s), m + 3.0) * 1e3;
  const double p_well = fwhm(DiracSquareSystem::well(76.205, a, m, p), m + 3.0) * 1e3;
  const double s_bar = fwhm(DiracSquareSystem::barrier(79.802, a, m, s), m + 3.0) * 1e3;
  const double p_bar = fwhm(DiracSquareSystem::barrier(78.777, a, m, p), m + 3.0) * 1e3;
  CHECK(s_well == doctest::Approx(41.83).epsilon(0.05));
  CHECK(p_well == doctest::Approx(11.5).epsilon(0.05));
  CHECK(s_bar == doctest::Approx(43.1).epsilon(0.05));
  CHECK(p_bar == doctest::Approx(11.8).epsilon(0.05));
  CHECK(s_well / p_well == doctest::Approx(3.6).epsilon(0.1));
  CHECK(s_bar / p_bar == doctest::Approx(3.7).epsilon(0.1));
}

TEST_CASE("s over p width ratio at a = 1/m")
{
  const auto first = [](const DiracSquareSystem& sys) {
    for (const auto& p : analyze_resonances(dirac_sampler(sys), sys.m * (1 + 1e-6), 3.0, 4000))
      if (p.kind == PeakKind::resonance)
        return p;
    FAIL("no resonance");
    return ResonancePeak{};
  };
  const auto s = first(DiracSquareSystem::well(4.195, 1.0, 1.0, Channel::from_chi(-1)));
  const auto p = first(DiracSquareSystem::well(2.25, 1.0, 1.0, Channel::from_chi(1)));
  // the broad s-wave peak never reaches delta_R + pi/4
  CHECK_FALSE(s.Gamma);
  REQUIRE(p.Gamma);
  CHECK(width_ratio(s, p) == doctest::Approx(s.Gamma_slope / p.Gamma_slope));
  CHECK(width_ratio(s, p) == doctest::Approx(230.0).epsilon(0.15));
}

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <numbers>
#include <stdexcept>
#include <string>
#include <vector>

#include "dirac_scatter/critical.hpp"
#include "dirac_scatter/dirac_square.hpp"
#include "dirac_scatter/radial_integrator.hpp"
#include "dirac_scatter/resonance.hpp"
#include "dirac_scatter/schrodinger_well.hpp"
#include "dirac_scatter/units.hpp"

using namespace dscat;
using std::numbers::pi;

namespace {

const Channel s12 = Channel::from_chi(-1);
const Channel p12 = Channel::from_chi(1);
constexpr double hbarc = units::hbarc_mev_fm;

struct Outcome {
  bool pass = false;
  std::string detail;
};

int failures = 0;

void criterion(int id, const char* title, double budget_s, const std::function<Outcome()>& body)
{
  const auto t0 = std::chrono::steady_clock::now();
  Outcome o;
  try {
    o = body();
  } catch (const std::exception& e) {
    o = {false, std::string("exception: ") + e.what()};
  }
  const double dt = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  bool ok = o.pass;
  if (budget_s > 0.0 && dt > budget_s) {
    ok = false;
    o.detail += " (over time budget)";
  }
  if (!ok)
    ++failures;
  std::printf("[%s] AC%d %s: %s [%.2f s]\n", ok ? "PASS" : "FAIL", id, title, o.detail.c_str(), dt);
  std::fflush(stdout);
}

std::string num(const char* f, double x)
{
  char b[64];
  std::snprintf(b, sizeof b, f, x);
  return b;
}

std::vector<double> values(const std::vector<CriticalCoupling>& c)
{
  std::vector<double> v;
  for (const auto& x : c)
    v.push_back(x.value);
  return v;
}

double fwhm(const DiracSquareSystem& sys, double E_hi, int n)
{
  const PhaseSampler s = [sys](const std::vector<double>& E) { return dirac_phase_curve(sys, E); };
  for (const auto& p : analyze_resonances(s, sys.m * (1 + 1e-6), E_hi, n))
    if (p.kind == PeakKind::resonance && p.Gamma)
      return *p.Gamma;
  return NAN;
}

bool within_rel(double x, double ref, double tol) { return std::abs(x / ref - 1.0) <= tol; }

const std::vector<CriticalCondition> table_columns{{s12, 1, PotentialSign::barrier},
                                                   {s12, 1, PotentialSign::well},
                                                   {p12, 1, PotentialSign::barrier},
                                                   {p12, 1, PotentialSign::well}};

} // namespace

int main()
{
  const double table1[4][3] = {{75.947, 153.434, 230.919},
                               {77.997, 155.480, 232.964},
                               {76.975, 154.458, 231.942},
                               {79.012, 156.498, 233.983}};
  const auto table1_gap = [&](double hc) {
    const std::vector<CriticalCondition> cols{{s12, 1, PotentialSign::well},
                                              {s12, -1, PotentialSign::well},
                                              {p12, 1, PotentialSign::well},
                                              {p12, -1, PotentialSign::well}};
    double worst = 0.0;
    for (int c = 0; c < 4; ++c) {
      const auto v = values(find_square_criticals(cols[c], 0.511, 8.0 / hc, 3));
      for (int n = 0; n < 3; ++n)
        worst = std::max(worst, std::abs(v[n] - table1[c][n]));
    }
    return worst;
  };
  criterion(1, "square-well critical depths (m=0.511 MeV, a=8 fm)", 1.0, [&] {
    const double worst = table1_gap(hbarc);
    return Outcome{worst <= 0.005, "max |dV| = " + num("%.4f", worst) + " MeV (tol 0.005) with hbar c = " +
                                       num("%.7f", hbarc)};
  });
  {
    // hbar c that best explains the published digits
    double best_hc = hbarc, best = table1_gap(hbarc);
    for (double hc = 197.28; hc <= 197.34; hc += 1e-4) {
      const double w = table1_gap(hc);
      if (w < best) {
        best = w;
        best_hc = hc;
      }
    }
    std::printf("       AC1 note: hbar c = %.4f MeV fm reproduces the table to %.4f MeV\n", best_hc, best);
  }

  criterion(2, "square-well critical couplings (m=1, a=1)", 1.0, [] {
    const double ref[4][3] = {{5.27, 8.40, 11.54}, {1.11, 4.20, 7.33}, {4.30, 7.36, 10.48}, {2.30, 5.36, 8.48}};
    double worst = 0.0, closed = 0.0;
    for (int c = 0; c < 4; ++c) {
      const auto v = values(find_square_criticals(table_columns[c], 1.0, 1.0, 3));
      for (int n = 0; n < 3; ++n) {
        worst = std::max(worst, std::abs(v[n] - ref[c][n]));
        if (c >= 2)
          closed = std::max(closed, std::abs(v[n] - p_sector_closed_form(table_columns[c].sign, n + 1, 1.0, 1.0)));
      }
    }
    return Outcome{worst <= 0.01 && closed <= 1e-6,
                   "max |dv| = " + num("%.4f", worst) + " (tol 0.01), p-sector closed-form gap " + num("%.1e", closed)};
  });

  criterion(3, "Gaussian critical couplings by shooting", 60.0, [] {
    const double ref[4][3] = {{6.75, 10.42, 14.04}, {1.26, 4.37, 7.70}, {5.62, 9.23, 12.83}, {2.96, 6.11, 9.44}};
    const auto g = PotentialSpec::make(ShapeKind::gaussian, PotentialSign::well, 0.0, 1.0);
    double worst = 0.0;
    std::string got;
    for (int c = 0; c < 4; ++c) {
      const auto v = values(find_general_criticals(g, table_columns[c], 1.0, 3));
      for (int n = 0; n < 3; ++n) {
        worst = std::max(worst, std::abs(v[n] - ref[c][n]));
        got += num(n ? " %.3f" : "%.3f", v[n]);
      }
      got += c < 3 ? "; " : "";
    }
    return Outcome{worst <= 0.02, "max |dv| = " + num("%.4f", worst) + " (tol 0.02) {" + got + "}"};
  });

  criterion(4, "a=8 fm widths and ratios", 60.0, [] {
    const double m = 0.511, a = 8.0 / hbarc;
    const double gsw = fwhm(DiracSquareSystem::well(75.187, a, m, s12), m + 3.0, 3000) * 1e3;
    const double gpw = fwhm(DiracSquareSystem::well(76.205, a, m, p12), m + 3.0, 3000) * 1e3;
    const double gsb = fwhm(DiracSquareSystem::barrier(79.802, a, m, s12), m + 3.0, 3000) * 1e3;
    const double gpb = fwhm(DiracSquareSystem::barrier(78.777, a, m, p12), m + 3.0, 3000) * 1e3;
    const bool ok = within_rel(gsw, 41.83, 0.05) && within_rel(gpw, 11.5, 0.05) && within_rel(gsb, 43.1, 0.05) &&
                    within_rel(gpb, 11.8, 0.05) && within_rel(gsw / gpw, 3.6, 0.1) && within_rel(gsb / gpb, 3.7, 0.1);
    return Outcome{ok, "well s " + num("%.2f", gsw) + ", p " + num("%.2f", gpw) + " keV (ratio " +
                           num("%.2f", gsw / gpw) + "); barrier s " + num("%.2f", gsb) + ", p " + num("%.2f", gpb) +
                           " keV (ratio " + num("%.2f", gsb / gpb) + ")"};
  });

  criterion(5, "s/p width ratio at a=1/m", 0.0, [] {
    const auto first = [](const DiracSquareSystem& sys) {
      const PhaseSampler smp = [sys](const std::vector<double>& E) { return dirac_phase_curve(sys, E); };
      for (const auto& p : analyze_resonances(smp, sys.m * (1 + 1e-6), 3.0, 4000))
        if (p.kind == PeakKind::resonance)
          return p;
      throw std::runtime_error("no resonance found");
    };
    const auto s = first(DiracSquareSystem::well(4.195, 1.0, 1.0, s12));
    const auto p = first(DiracSquareSystem::well(2.25, 1.0, 1.0, p12));
    const double ratio = width_ratio(s, p);
    const auto w = [](const ResonancePeak& pk) {
      return pk.Gamma ? "FWHM " + num("%.5g", *pk.Gamma) : "slope width " + num("%.5g", pk.Gamma_slope);
    };
    return Outcome{within_rel(ratio, 230.0, 0.15),
                   "s " + w(s) + ", p " + w(p) + ", ratio " + num("%.1f", ratio) + " (230 +- 15%)"};
  });

  criterion(6, "Gaussian barrier checkpoint v=6.8, p=0.1", 0.0, [] {
    const auto g = PotentialSpec::make(ShapeKind::gaussian, PotentialSign::barrier, 6.8, 1.0);
    const auto r = scatter(g, s12, 1.0, 0.1, IntegrationConfig::defaults(1.0));
    const bool ok = std::abs(r.node_radius - 635.2) <= 0.5 && std::abs(r.C - 12.8) <= 0.2;
    return Outcome{ok, "r20 = " + num("%.3f", r.node_radius) + " (635.2 +- 0.5), C = " + num("%.4f", r.C) +
                           " (12.8 +- 0.2), delta = " + num("%.5f", r.delta)};
  });

  criterion(7, "crossing theorem for square and Gaussian shapes", 0.0, [] {
    double worst = 0.0;
    const auto sq = PotentialSpec::make(ShapeKind::square, PotentialSign::well, 0.0, 1.0);
    const auto g = PotentialSpec::make(ShapeKind::gaussian, PotentialSign::well, 0.0, 1.0);
    for (const auto& ch : {s12, p12}) {
      const CriticalCondition c{ch, 1, PotentialSign::barrier};
      const auto x = values(find_square_criticals(c, 1.0, 1.0, 3));
      const auto y = values(find_square_criticals(crossing_partner(c), 1.0, 1.0, 3));
      const auto gx = values(find_general_criticals(g, c, 1.0, 3));
      const auto gy = values(find_general_criticals(g, crossing_partner(c), 1.0, 3));
      ShootingOptions o;
      o.v_max = y.back() + 1.0;
      const auto sy = values(find_general_criticals(sq, crossing_partner(c), 1.0, 3, o));
      for (int n = 0; n < 3; ++n) {
        worst = std::max(worst, std::abs(x[n] / y[n] - 1.0));
        worst = std::max(worst, std::abs(gx[n] / gy[n] - 1.0));
        worst = std::max(worst, std::abs(x[n] / sy[n] - 1.0));
      }
    }
    return Outcome{worst <= 1e-3, "max relative gap " + num("%.2e", worst) + " (tol 1e-3)"};
  });

  criterion(8, "numerical vs closed-form phase and C (square shape)", 0.0, [] {
    double dmax = 0.0, cmax = 0.0;
    for (double p : {0.05, 0.1, 0.3})
      for (const auto& ch : {s12, p12})
        for (auto sg : {PotentialSign::well, PotentialSign::barrier})
          for (double v : {1.0, 2.25, 4.195}) {
            const auto pot = PotentialSpec::make(ShapeKind::square, sg, v, 1.0);
            const auto sys = DiracSquareSystem::make(sg, v, 1.0, 1.0, ch);
            const double E = std::sqrt(1.0 + p * p);
            const auto r = scatter(pot, ch, 1.0, p, IntegrationConfig::defaults(1.0));
            dmax = std::max(dmax, std::abs(std::remainder(r.delta - dirac_phase_shift(sys, E).delta, pi)));
            cmax = std::max(cmax, std::abs(r.C / analytic_C_square(sys, E).C - 1.0));
          }
    return Outcome{dmax <= 5e-3 && cmax <= 1e-2,
                   "max |d delta| = " + num("%.2e", dmax) + " rad (tol 5e-3), max C rel = " + num("%.2e", cmax)};
  });

  criterion(9, "no Schrodinger s-wave resonance, Dirac s-wave resonance present", 0.0, [] {
    const double m = 0.5, a = 1.0;
    const double Vc = schrodinger_critical_depth(0, 1, m, a);
    std::vector<double> ks;
    for (int i = 1; i <= 600; ++i)
      ks.push_back(0.01 * i);
    int schro = 0;
    for (int iv = 1; iv <= 100; ++iv) {
      const auto c = schrodinger_phase_curve({Vc * iv / 100.0 * (1 - 1e-9), a, m}, 0, ks);
      for (const auto& pk : detect_resonances(c))
        schro += pk.kind == PeakKind::resonance;
    }
    int dirac = 0;
    std::vector<double> Es;
    for (int i = 0; i < 3000; ++i)
      Es.push_back(1.0 + 1e-6 + 2.0 * i / 2999.0);
    for (const auto& pk : detect_resonances(dirac_phase_curve(DiracSquareSystem::well(4.195, 1.0, 1.0, s12), Es)))
      dirac += pk.kind == PeakKind::resonance;
    return Outcome{schro == 0 && dirac >= 1, "Schrodinger positive crossings " + std::to_string(schro) +
                                                 " over 100 depths; Dirac (V=4.195 m, a=1/m) " + std::to_string(dirac)};
  });

  criterion(10, "Levinson limits at k=1e-4", 0.0, [] {
    const double m = 0.5, a = 1.0, k = 1e-4;
    const double Vc = schrodinger_critical_depth(0, 1, m, a);
    const double d0 = schrodinger_phase_shift({0.97 * Vc, a, m}, 0, k).delta;
    const double d1 = schrodinger_phase_shift({Vc, a, m}, 0, k).delta;
    const double d2 = schrodinger_phase_shift({1.05 * Vc, a, m}, 0, k).delta;
    const double e = std::max({std::abs(d0), std::abs(d1 - pi / 2), std::abs(d2 - pi)});
    return Outcome{e <= 1e-2, "delta = " + num("%.5f", d0) + ", " + num("%.5f", d1) + ", " + num("%.5f", d2) +
                                  " (max gap " + num("%.1e", e) + ")"};
  });

  criterion(11, "step halving and node independence (Gaussian, p=0.1)", 0.0, [] {
    double halving = 0.0, nodes = 0.0;
    bool monotone = true;
    for (const auto& ch : {s12, p12})
      for (auto sg : {PotentialSign::well, PotentialSign::barrier})
        for (double v : {1.0, 3.0, 6.8, 10.0}) {
          const auto pot = PotentialSpec::make(ShapeKind::gaussian, sg, v, 1.0);
          auto cfg = IntegrationConfig::defaults(1.0);
          const double d1 = scatter(pot, ch, 1.0, 0.1, cfg).delta;
          cfg.h /= 2;
          cfg.h_far /= 2;
          const double d2 = scatter(pot, ch, 1.0, 0.1, cfg).delta;
          cfg.h /= 2;
          cfg.h_far /= 2;
          const double d3 = scatter(pot, ch, 1.0, 0.1, cfg).delta;
          const double e12 = std::abs(std::remainder(d1 - d2, pi)), e23 = std::abs(std::remainder(d2 - d3, pi));
          halving = std::max(halving, e12);
          if (e12 > 1e-12 && e23 > e12)
            monotone = false;
          auto c25 = IntegrationConfig::defaults(1.0);
          c25.nu = 25;
          nodes = std::max(nodes, std::abs(std::remainder(d1 - scatter(pot, ch, 1.0, 0.1, c25).delta, pi)));
        }
    return Outcome{halving < 1e-4 && nodes < 1e-3 && monotone,
                   "halving " + num("%.2e", halving) + " (tol 1e-4, " + (monotone ? "monotone" : "not monotone") +
                       "), nu 20 vs 25 " + num("%.2e", nodes) + " (tol 1e-3)"};
  });

  std::printf("%d criteria failed\n", failures);
  return failures == 0 ? 0 : 1;
}

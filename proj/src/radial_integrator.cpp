#include "dirac_scatter/radial_integrator.hpp"

#include <algorithm>
#include <cstdio>
#include <atomic>
#include <cmath>
#include <numbers>
#include <stdexcept>
#include <thread>

#include "dirac_scatter/errors.hpp"
#include "dirac_scatter/phase_tracking.hpp"
#include "dirac_scatter/special_functions.hpp"

namespace dscat {

namespace sp = special;
using std::numbers::pi;

namespace {

constexpr double magnitude_cap = 1e200;

std::string num(double v)
{
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.6g", v);
  return buf;
}

std::vector<double> build_grid(const IntegrationConfig& cfg, double r_end)
{
  std::vector<double> r;
  const double first = cfg.h;
  r.push_back(cfg.r0);
  if (cfg.r0 < first) {
    const int n = std::max(1, cfg.start_substeps);
    const double ratio = std::pow(first / cfg.r0, 1.0 / n);
    double x = cfg.r0;
    for (int i = 1; i < n; ++i) {
      x *= ratio;
      r.push_back(x);
    }
    r.push_back(first);
    // keep the geometric spacing until it reaches h
    x = first;
    while (ratio > 1.0 && x * (ratio - 1.0) < cfg.h && x * ratio < std::min(cfg.r_switch, r_end)) {
      x *= ratio;
      r.push_back(x);
    }
  }
  if (r.back() >= r_end)
    return r;
  const auto inner = static_cast<long>(std::llround(cfg.r_switch / cfg.h));
  long i = static_cast<long>(std::llround(r.back() / cfg.h)) + 1;
  for (; i <= inner; ++i) {
    const double x = static_cast<double>(i) * cfg.h;
    if (x <= r.back())
      continue;
    r.push_back(x);
    if (x >= r_end)
      return r;
  }
  const double base = std::max(static_cast<double>(inner) * cfg.h, r.back());
  for (long j = 1;; ++j) {
    const double x = base + static_cast<double>(j) * cfg.h_far;
    r.push_back(x);
    if (x >= r_end)
      return r;
  }
}

struct Rhs {
  const PotentialSpec& pot;
  double chi;
  double m;
  double E;

  void operator()(double r, double r_pot, double f, double g, double& df, double& dg) const
  {
    const double U = pot.value(r_pot);
    df = -chi / r * f + (E + m - U) * g;
    dg = -(E - m - U) * f + chi / r * g;
  }
};

template <class Sink>
void run(const PotentialSpec& pot, const Channel& ch, double m, double E, const StartAmplitudes& start,
         const std::vector<double>& grid, Sink&& sink)
{
  const Rhs rhs{pot, static_cast<double>(ch.chi()), m, E};
  double f = start.f_coeff * std::pow(grid[0], start.f_power);
  double g = start.g_coeff * std::pow(grid[0], start.g_power);
  sink(0, f, g);
  for (std::size_t i = 1; i < grid.size(); ++i) {
    const double r = grid[i - 1];
    const double h = grid[i] - r;
    // potential sampled strictly inside the step so a jump at a grid point is seen one-sidedly
    const double lo = r + 1e-9 * h, hi = r + h - 1e-9 * h;
    const double mid = r + 0.5 * h;
    double k1f, k1g, k2f, k2g, k3f, k3g, k4f, k4g;
    rhs(r, lo, f, g, k1f, k1g);
    rhs(mid, mid, f + 0.5 * h * k1f, g + 0.5 * h * k1g, k2f, k2g);
    rhs(mid, mid, f + 0.5 * h * k2f, g + 0.5 * h * k2g, k3f, k3g);
    rhs(r + h, hi, f + h * k3f, g + h * k3g, k4f, k4g);
    f += h / 6.0 * (k1f + 2.0 * k2f + 2.0 * k3f + k4f);
    g += h / 6.0 * (k1g + 2.0 * k2g + 2.0 * k3g + k4g);
    if (!(std::abs(f) < magnitude_cap) || !(std::abs(g) < magnitude_cap))
      throw NumericalError("radial integration: solution exceeds " + num(magnitude_cap) + " at r = " +
                           num(grid[i]) + " (E = " + num(E) + ", v = " + num(pot.v) + ")");
    sink(i, f, g);
  }
}

void check_inputs(const PotentialSpec& pot, double m, const IntegrationConfig& cfg, double r_end)
{
  pot.validate();
  cfg.validate();
  if (!(m > 0.0))
    throw std::invalid_argument("radial integration: m must be > 0");
  if (!(r_end > cfg.r0))
    throw std::invalid_argument("radial integration: end radius must exceed r0");
}

} // namespace

IntegrationConfig IntegrationConfig::defaults(double a)
{
  IntegrationConfig c;
  c.h = 1e-3 * a;
  c.h_far = 1e-2 * a;
  c.r_switch = 20.0 * a;
  c.r0 = 1e-6 * a;
  return c;
}

void IntegrationConfig::validate() const
{
  if (!(h > 0.0) || !(h_far > 0.0))
    throw std::invalid_argument("integration: step sizes must be > 0");
  if (!(r0 > 0.0) || !(r0 <= h))
    throw std::invalid_argument("integration: need 0 < r0 <= h");
  if (!(r_switch > 0.0))
    throw std::invalid_argument("integration: r_switch must be > 0");
  if (nu < 1)
    throw std::invalid_argument("integration: nu must be >= 1");
  if (r_max < 0.0)
    throw std::invalid_argument("integration: r_max must be >= 0");
  if (!std::isfinite(C) || C == 0.0)
    throw std::invalid_argument("integration: start amplitude C must be finite and nonzero");
}

StartAmplitudes scattering_start(const PotentialSpec& pot, const Channel& ch, double m, double E, double C)
{
  const int k = ch.abs_chi();
  const double U0 = pot.value(0.0);
  if (ch.chi() > 0) {
    const double denom = E + m - U0;
    if (denom == 0.0)
      throw NumericalError("scattering start: E + m - V(0) = 0, the small-r ratio is undefined");
    return {C, k + 1, (2.0 * k + 1.0) / denom * C, k};
  }
  return {C, k, (U0 - E + m) / (2.0 * k + 1.0) * C, k + 1};
}

RadialSolution integrate_dirac(const PotentialSpec& pot, const Channel& ch, double m, double E,
                               const StartAmplitudes& start, double r_end, const IntegrationConfig& cfg)
{
  check_inputs(pot, m, cfg, r_end);
  RadialSolution sol;
  sol.r = build_grid(cfg, r_end);
  sol.f.resize(sol.r.size());
  sol.g.resize(sol.r.size());
  run(pot, ch, m, E, start, sol.r, [&](std::size_t i, double f, double g) {
    sol.f[i] = f;
    sol.g[i] = g;
  });
  return sol;
}

EndState integrate_to(const PotentialSpec& pot, const Channel& ch, double m, double E, const StartAmplitudes& start,
                      double r_end, const IntegrationConfig& cfg)
{
  check_inputs(pot, m, cfg, r_end);
  const auto grid = build_grid(cfg, r_end);
  EndState end;
  run(pot, ch, m, E, start, grid, [&](std::size_t i, double f, double g) {
    end = {grid[i], f, g};
  });
  return end;
}

RadialSolution integrate_radial(const PotentialSpec& pot, const Channel& ch, double m, double E,
                                const IntegrationConfig& cfg)
{
  if (!(E > m))
    throw std::domain_error("radial integration: scattering needs E > m, got E = " + num(E));
  const double p = std::sqrt((E - m) * (E + m));
  double r_end = cfg.r_max;
  if (r_end == 0.0)
    r_end = std::max(cfg.r_switch, pot.effective_range()) + ((cfg.nu + 4) * pi + 10.0) / p;
  return integrate_dirac(pot, ch, m, E, scattering_start(pot, ch, m, E, cfg.C), r_end, cfg);
}

double find_node(const RadialSolution& sol, int nu)
{
  if (nu < 1)
    throw std::invalid_argument("find_node: nu must be >= 1");
  int count = 0;
  for (std::size_t i = 1; i < sol.size(); ++i) {
    const double g0 = sol.g[i - 1], g1 = sol.g[i];
    if (g0 == 0.0)
      continue;
    if (g1 == 0.0 || (g0 < 0.0) != (g1 < 0.0)) {
      if (++count == nu)
        return sol.r[i - 1] + (sol.r[i] - sol.r[i - 1]) * g0 / (g0 - g1);
    }
  }
  throw NumericalError("find_node: only " + std::to_string(count) + " nodes of g before r = " +
                       num(sol.r.empty() ? 0.0 : sol.r.back()) + ", need " + std::to_string(nu));
}

NumericalPhaseResult numerical_phase(const RadialSolution& sol, const Channel& ch, double p,
                                     const IntegrationConfig& cfg)
{
  if (!(p > 0.0))
    throw std::domain_error("numerical phase: p must be > 0");
  NumericalPhaseResult res;
  res.node_radius = find_node(sol, cfg.nu);
  const auto it = std::upper_bound(sol.r.begin(), sol.r.end(), res.node_radius);
  auto i = static_cast<std::size_t>(it - sol.r.begin());
  i = std::clamp<std::size_t>(i == 0 ? 0 : i - 1, 0, sol.size() - 2);

  const double r = sol.r[i];
  const double h = sol.r[i + 1] - r;
  const double alpha = sol.f[i], beta = sol.f[i + 1];
  if (std::abs(alpha) < 1e-12 && std::abs(beta) < 1e-12)
    throw NumericalError("numerical phase: degenerate fit, |f| < 1e-12 at r = " + num(r));
  const double ph = p * h;
  const int l = ch.l_chi();
  res.fit_radius = r;
  if (cfg.reference == PhaseReference::riccati) {
    // f = D (cos d x j_l(x) - sin d x n_l(x)) at x = pr and x = p(r + h)
    const double x1 = p * r, x2 = p * (r + h);
    const double j1 = x1 * sp::sph_j(l, x1), n1 = -x1 * sp::sph_n(l, x1);
    const double j2 = x2 * sp::sph_j(l, x2), n2 = -x2 * sp::sph_n(l, x2);
    const double det = j1 * n2 - n1 * j2;
    if (std::abs(det) < 1e-300)
      throw NumericalError("numerical phase: singular fit at r = " + num(r));
    const double X = (alpha * n2 - beta * n1) / det;
    const double Y = (beta * j1 - alpha * j2) / det;
    const double d = std::atan2(Y, X);
    res.D = std::hypot(X, Y);
    res.theta = x1 - 0.5 * l * pi + sp::riccati_phase_offset(l, x1) + d;
    res.delta = reduce_half_window(d);
  } else {
    const double theta = std::atan2(alpha * std::sin(ph), beta - alpha * std::cos(ph));
    const double st = std::sin(theta);
    const double D = std::abs(st) > 1e-8 ? alpha / st : beta / std::sin(theta + ph);
    res.theta = theta;
    res.D = std::abs(D);
    const double d1 = theta - p * r + 0.5 * (l + 1) * pi;
    res.delta = d1 - pi * std::floor(d1 / pi) - pi / 2;
    if (res.delta >= pi / 2)
      res.delta -= pi;
  }
  res.C = std::abs(cfg.C) / res.D;
  return res;
}

NumericalPhaseResult scatter(const PotentialSpec& pot, const Channel& ch, double m, double p,
                             const IntegrationConfig& cfg)
{
  if (!(p > 0.0))
    throw std::domain_error("scatter: p must be > 0");
  const double E = std::sqrt(p * p + m * m);
  const auto sol = integrate_radial(pot, ch, m, E, cfg);
  return numerical_phase(sol, ch, p, cfg);
}

namespace {

template <class Eval>
std::vector<CurvePoint> parallel_curve(const std::vector<double>& xs, unsigned threads, Eval&& eval)
{
  std::vector<CurvePoint> out(xs.size());
  std::atomic<std::size_t> next{0};
  const auto worker = [&] {
    for (std::size_t i = next++; i < xs.size(); i = next++) {
      CurvePoint& pt = out[i];
      pt.x = xs[i];
      try {
        pt.detail = eval(xs[i]);
        pt.C = pt.detail.C;
        pt.delta = pt.detail.delta;
        pt.ok = true;
      } catch (const std::exception& e) {
        pt.ok = false;
        pt.error = e.what();
      }
    }
  };
  unsigned n = threads == 0 ? std::max(1u, std::thread::hardware_concurrency()) : threads;
  n = static_cast<unsigned>(std::min<std::size_t>(n, std::max<std::size_t>(1, xs.size())));
  if (n <= 1) {
    worker();
    return out;
  }
  std::vector<std::thread> pool;
  for (unsigned t = 0; t < n; ++t)
    pool.emplace_back(worker);
  for (auto& t : pool)
    t.join();
  return out;
}

} // namespace

std::vector<CurvePoint> resonance_curve_vs_coupling(const PotentialSpec& shape, const Channel& ch, double m,
                                                    double p, const std::vector<double>& couplings,
                                                    const IntegrationConfig& cfg, unsigned threads)
{
  return parallel_curve(couplings, threads, [&](double v) { return scatter(shape.with(shape.sign, v), ch, m, p, cfg); });
}

std::vector<CurvePoint> resonance_curve_vs_momentum(const PotentialSpec& pot, const Channel& ch, double m,
                                                    const std::vector<double>& momenta,
                                                    const IntegrationConfig& cfg, unsigned threads)
{
  return parallel_curve(momenta, threads, [&](double p) { return scatter(pot, ch, m, p, cfg); });
}

AnalyticC analytic_C_square(const DiracSquareSystem& sys, double E)
{
  const auto mc = dirac_matching(sys, E);
  const int l = sys.channel.l_chi();
  const double k = std::sqrt((E - sys.m) * (E + sys.m));
  const double e = E - sys.U;
  const double q = std::sqrt(std::abs((e - sys.m) * (e + sys.m)));
  AnalyticC out;
  out.C = k / (sp::double_factorial_real(2 * l + 1) * mc.A);
  out.C_unit = (E + sys.m) / (std::pow(q, l) * mc.A);
  return out;
}

} // namespace dscat

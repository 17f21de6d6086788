#include "dirac_scatter/critical.hpp"

#include <algorithm>
#include <cstdio>
#include <cmath>
#include <functional>
#include <numbers>
#include <stdexcept>
#include <string>

#include "dirac_scatter/errors.hpp"
#include "dirac_scatter/radial_integrator.hpp"
#include "dirac_scatter/special_functions.hpp"

namespace dscat {

namespace sp = special;
using std::numbers::pi;

namespace {

std::string num(double v)
{
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.6g", v);
  return buf;
}

// signed strength: positive inside a well
double signed_strength(const CriticalCondition& c, double v)
{
  return c.sign == PotentialSign::well ? v : -v;
}

double bisect(const std::function<double(double)>& f, double lo, double hi, double flo, double rel_tol)
{
  for (int it = 0; it < 200; ++it) {
    const double mid = 0.5 * (lo + hi);
    if (hi - lo <= rel_tol * std::max(1.0, std::abs(mid)))
      break;
    const double fm = f(mid);
    if (fm == 0.0)
      return mid;
    if ((fm < 0.0) == (flo < 0.0)) {
      lo = mid;
      flo = fm;
    } else {
      hi = mid;
    }
  }
  return 0.5 * (lo + hi);
}

// Sign-change scan of f on (v_start, v_end]; stops after `count` roots when count > 0.
std::vector<double> scan_roots(const std::function<double(double)>& f, double v_start, double v_end, double step,
                               double rel_tol, int count)
{
  std::vector<double> roots;
  double lo = v_start;
  double flo = f(lo);
  while (lo < v_end && (count <= 0 || static_cast<int>(roots.size()) < count)) {
    const double hi = std::min(lo + step, v_end);
    const double fhi = f(hi);
    if (fhi == 0.0) {
      roots.push_back(hi);
      lo = hi;
      flo = f(std::nextafter(hi, v_end + step));
      continue;
    }
    if (flo != 0.0 && (flo < 0.0) != (fhi < 0.0))
      roots.push_back(bisect(f, lo, hi, flo, rel_tol));
    lo = hi;
    flo = fhi;
  }
  return roots;
}

} // namespace

void CriticalCondition::validate() const
{
  if (energy_sign != 1 && energy_sign != -1)
    throw std::invalid_argument("critical condition: energy sign must be +1 or -1");
}

double CriticalCondition::p2(double v, double m) const
{
  const double w = signed_strength(*this, v);
  return w * (w + 2.0 * energy_sign * m);
}

double CriticalCondition::threshold(double m) const
{
  // p^2 >= 0 needs v >= 2m when the signed strength and the energy sign disagree
  const bool well = sign == PotentialSign::well;
  return (well == (energy_sign > 0)) ? 0.0 : 2.0 * m;
}

double CriticalCondition::p_crit(double v, double m) const
{
  validate();
  const double q2 = p2(v, m);
  if (q2 < 0.0)
    throw std::domain_error("critical condition " + label() + ": interior momentum is imaginary for v = " +
                            num(v) + " < " + num(threshold(m)));
  return std::sqrt(q2);
}

std::string CriticalCondition::label() const
{
  return channel.label() + (sign == PotentialSign::barrier ? "(+)" : "(-)") + (energy_sign > 0 ? " E=+m" : " E=-m");
}

double square_critical_residual(const CriticalCondition& cond, double v, double m, double a)
{
  const double p = cond.p_crit(v, m);
  const double y = p * a;
  const int chi = cond.channel.chi();
  const int l = cond.channel.l_chi(), lm = cond.channel.l_minus_chi();
  const double w = signed_strength(cond, v);
  if (cond.energy_sign > 0) {
    if (chi < 0)
      return (1.0 + 2.0 * chi) * (2.0 * m + w) * sp::sph_j(l, y) + 2.0 * m * y * sp::sph_j(lm, y);
    return sp::sph_j(chi - 1, y);
  }
  if (chi < 0)
    return sp::sph_j(-chi - 1, y);
  return 2.0 * m * a * w * sp::sph_j(chi, y) + (2.0 * chi - 1.0) * p * sp::sph_j(chi - 1, y);
}

double square_critical_trig_residual(const CriticalCondition& cond, double v, double m, double a)
{
  if (cond.channel.abs_chi() != 1)
    throw std::invalid_argument("trigonometric critical condition: only defined for j = 1/2");
  const double p = cond.p_crit(v, m);
  const double y = p * a;
  const double w = signed_strength(cond, v);
  const double s = std::sin(y), c = std::cos(y);
  if (cond.energy_sign > 0) {
    if (cond.channel.chi() < 0)
      return w * s + 2.0 * m * y * c; // tan(pa) = -2 m pa / w
    return s;                         // pa = n pi
  }
  if (cond.channel.chi() < 0)
    return s; // pa = n pi
  // tan(pa) = 2 m a w pa / (2 m a w + p pa)
  return s * (2.0 * m * a * w + p * y) - 2.0 * m * a * w * y * c;
}

std::vector<CriticalCoupling> square_criticals_below(const CriticalCondition& cond, double m, double a,
                                                     double v_limit, const RootScan& scan)
{
  cond.validate();
  if (!(m > 0.0) || !(a > 0.0))
    throw std::invalid_argument("square criticals: m and a must be > 0");
  const double start = cond.threshold(m) * (1.0 + 1e-12) + 1e-12 * scan.step;
  std::vector<CriticalCoupling> out;
  if (!(v_limit > start))
    return out;
  const auto f = [&](double v) { return square_critical_residual(cond, v, m, a); };
  const auto roots = scan_roots(f, start, v_limit, scan.step, scan.rel_tol, 0);
  for (const double r : roots) {
    if (!(r < v_limit))
      continue;
    out.push_back({r, static_cast<int>(out.size()) + 1, cond, f(r)});
  }
  return out;
}

std::vector<CriticalCoupling> find_square_criticals(const CriticalCondition& cond, double m, double a, int count,
                                                    const RootScan& scan)
{
  cond.validate();
  if (count < 1)
    throw std::invalid_argument("square criticals: count must be >= 1");
  if (!(m > 0.0) || !(a > 0.0))
    throw std::invalid_argument("square criticals: m and a must be > 0");
  const double start = cond.threshold(m) * (1.0 + 1e-12) + 1e-12 * scan.step;
  const auto f = [&](double v) { return square_critical_residual(cond, v, m, a); };
  const auto roots = scan_roots(f, start, scan.v_max, scan.step, scan.rel_tol, count);
  if (static_cast<int>(roots.size()) < count)
    throw NumericalError("square criticals " + cond.label() + ": found " + std::to_string(roots.size()) + " of " +
                         std::to_string(count) + " roots scanning v in (" + num(start) + ", " + num(scan.v_max) +
                         "]");
  std::vector<CriticalCoupling> out;
  for (int n = 0; n < count; ++n)
    out.push_back({roots[static_cast<std::size_t>(n)], n + 1, cond, f(roots[static_cast<std::size_t>(n)])});
  return out;
}

int count_square_criticals_below(const CriticalCondition& cond, double m, double a, double v_limit)
{
  return static_cast<int>(square_criticals_below(cond, m, a, v_limit).size());
}

double p_sector_closed_form(PotentialSign sign, int n, double m, double a)
{
  if (n < 1)
    throw std::invalid_argument("closed form: n must be >= 1");
  const double root = std::sqrt(m * m + (n * pi / a) * (n * pi / a));
  return sign == PotentialSign::well ? root - m : root + m;
}

CriticalCondition crossing_partner(const CriticalCondition& cond)
{
  CriticalCondition c = cond;
  c.channel = crossing_transform(cond.channel);
  c.energy_sign = -cond.energy_sign;
  c.sign = flip(cond.sign);
  return c;
}

double zero_momentum_residual(const PotentialSpec& shape, double v, const CriticalCondition& cond, double m,
                              const ShootingOptions& opts)
{
  cond.validate();
  const PotentialSpec pot = shape.with(cond.sign, v);
  const double a = pot.a;
  const double R = std::max(opts.match_radius * a, pot.effective_range());
  if (pot.shape == ShapeKind::tabulated && pot.table->w_last() > 1e-8)
    throw std::invalid_argument("zero-momentum shooting: tabulated shape does not decay (w = " +
                                num(pot.table->w_last()) + " at the last row)");

  const Channel& ch = cond.channel;
  const double E = cond.energy_sign * m;
  const int k = ch.abs_chi();
  const double U0 = pot.value(0.0);
  StartAmplitudes start;
  if (ch.chi() < 0) {
    start = {1.0, k, (U0 - E + m) / (2.0 * k + 1.0), k + 1};
  } else {
    start = {(E + m - U0) / (2.0 * k + 1.0), k + 1, 1.0, k};
  }

  IntegrationConfig cfg = IntegrationConfig::defaults(a);
  cfg.h = opts.h * a;
  const auto end = integrate_to(pot, ch, m, E, start, R, cfg);
  const double r = end.r, f = end.f, g = end.g;
  const int chi = ch.chi();
  if (cond.energy_sign > 0) {
    if (chi < 0)
      return (f - 2.0 * m * r * g / (2.0 * chi + 1.0)) * std::pow(r, chi);
    return g * std::pow(r, -chi);
  }
  if (chi < 0)
    return f * std::pow(r, chi);
  return (g - 2.0 * m * r * f / (1.0 - 2.0 * chi)) * std::pow(r, -chi);
}

std::vector<CriticalCoupling> find_general_criticals(const PotentialSpec& shape, const CriticalCondition& cond,
                                                     double m, int count, const ShootingOptions& opts)
{
  cond.validate();
  if (count < 1)
    throw std::invalid_argument("general criticals: count must be >= 1");
  if (!(m > 0.0))
    throw std::invalid_argument("general criticals: m must be > 0");
  const auto f = [&](double v) { return zero_momentum_residual(shape, v, cond, m, opts); };
  const double start = std::max(opts.v_min, 1e-6 * opts.step);
  const auto roots = scan_roots(f, start, opts.v_max, opts.step, opts.rel_tol, count);
  if (static_cast<int>(roots.size()) < count)
    throw NumericalError("general criticals " + cond.label() + " (" + to_string(shape.shape) + "): found " +
                         std::to_string(roots.size()) + " of " + std::to_string(count) + " roots scanning v in (" +
                         num(start) + ", " + num(opts.v_max) + "]");
  std::vector<CriticalCoupling> out;
  for (int n = 0; n < count; ++n) {
    const double v = roots[static_cast<std::size_t>(n)];
    out.push_back({v, n + 1, cond, f(v)});
  }
  return out;
}

} // namespace dscat

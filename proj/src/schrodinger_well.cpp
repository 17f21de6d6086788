#include "dirac_scatter/schrodinger_well.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

#include "dirac_scatter/special_functions.hpp"

namespace dscat {

namespace sp = special;
using std::numbers::pi;

void SchrodingerWell::validate() const
{
  if (!(V >= 0.0) || !std::isfinite(V))
    throw std::invalid_argument("schrodinger well: depth V must be >= 0");
  if (!(a > 0.0) || !(m > 0.0))
    throw std::invalid_argument("schrodinger well: a and m must be > 0");
}

double SchrodingerWell::interior_momentum(double k) const { return std::sqrt(k * k + 2.0 * m * V); }

namespace {

void require_k(double k)
{
  if (!(k > 0.0))
    throw std::domain_error("schrodinger phase shift: k must be > 0, got " + std::to_string(k));
}

} // namespace

PhaseComponents schrodinger_tan_components(const SchrodingerWell& w, int l, double k)
{
  w.validate();
  require_k(k);
  if (l < 0)
    throw std::invalid_argument("schrodinger phase shift: l must be >= 0");
  if (w.V == 0.0)
    return {0.0, 1.0};
  const double p = w.interior_momentum(k);
  const double x = k * w.a;
  const double y = p * w.a;
  const double jy = sp::sph_j(l, y);
  const double djy = sp::sph_j_prime(l, y);
  return {k * sp::sph_j_prime(l, x) * jy - p * sp::sph_j(l, x) * djy,
          k * sp::sph_n_prime(l, x) * jy - p * sp::sph_n(l, x) * djy};
}

PhaseComponents schrodinger_tan_components_s(const SchrodingerWell& w, double k)
{
  w.validate();
  require_k(k);
  const double p = w.interior_momentum(k);
  const double x = k * w.a, y = p * w.a;
  const double sx = std::sin(x), cx = std::cos(x), sy = std::sin(y), cy = std::cos(y);
  return {k * sy * cx - p * sx * cy, p * cx * cy + k * sx * sy};
}

PhaseComponents schrodinger_tan_components_p(const SchrodingerWell& w, double k)
{
  w.validate();
  require_k(k);
  const double p = w.interior_momentum(k);
  const double a = w.a;
  const double x = k * a, y = p * a;
  const double sx = std::sin(x), cx = std::cos(x), sy = std::sin(y), cy = std::cos(y);
  const double k2 = k * k, p2 = p * p;
  return {a * k * p2 * sy * cx - a * k2 * p * sx * cy + (k2 - p2) * sx * sy,
          a * k2 * p * cx * cy + (p2 - k2) * sy * cx + a * k * p2 * sx * sy};
}

std::vector<PhaseShiftSample> schrodinger_phase_curve(const SchrodingerWell& w, int l,
                                                      const std::vector<double>& ks)
{
  w.validate();
  double k_top = 0.0;
  for (const double k : ks) {
    require_k(k);
    k_top = std::max(k_top, k);
  }
  // far above every scale of the problem the principal value is the physical branch
  const double k_anchor =
      std::max({20.0 * w.m * w.V * w.a, 20.0 * (l + 1) / w.a, 2.0 * k_top, 1.0 / w.a});
  const auto comps = [&](double k) { return schrodinger_tan_components(w, l, k); };
  const double anchor = principal_phase(comps(k_anchor));

  TrackingOptions opts;
  opts.max_step = 0.05 / w.a;
  opts.rel_step = 0.005;
  const auto deltas = track_phase(comps, k_anchor, anchor, ks, opts);

  std::vector<PhaseShiftSample> out;
  out.reserve(ks.size());
  for (std::size_t i = 0; i < ks.size(); ++i) {
    const double k = ks[i];
    const auto c = comps(k);
    auto s = make_sample(k * k / (2.0 * w.m), k, deltas[i]);
    s.tan_delta = c.den == 0.0 ? std::copysign(INFINITY, c.num) : c.num / c.den;
    out.push_back(s);
  }
  return out;
}

PhaseShiftSample schrodinger_phase_shift(const SchrodingerWell& w, int l, double k)
{
  return schrodinger_phase_curve(w, l, {k}).front();
}

double schrodinger_critical_depth(int l, int n, double m, double a)
{
  if (l < 0 || n < 1)
    throw std::invalid_argument("critical depth: need l >= 0 and n >= 1");
  if (!(m > 0.0) || !(a > 0.0))
    throw std::invalid_argument("critical depth: m and a must be > 0");
  const auto depth = [&](double pa) { return pa * pa / (2.0 * m * a * a); };
  if (l == 0)
    return depth((2.0 * n - 1.0) * pi / 2.0);
  if (l == 1)
    return depth(n * pi);

  // zeros of j_{l-1}: the n-th root lies in (j pi, (j+1) pi) for some j; scan those brackets
  const int order = l - 1;
  int found = 0;
  for (int j = 1;; ++j) {
    double lo = j * pi, hi = (j + 1) * pi;
    double flo = sp::sph_j(order, lo), fhi = sp::sph_j(order, hi);
    if (flo == 0.0) {
      if (++found == n)
        return depth(lo);
      continue;
    }
    if (flo * fhi > 0.0)
      continue;
    while (hi - lo > 1e-12) {
      const double mid = 0.5 * (lo + hi);
      const double fm = sp::sph_j(order, mid);
      if ((fm < 0.0) == (flo < 0.0)) {
        lo = mid;
        flo = fm;
      } else {
        hi = mid;
      }
    }
    if (++found == n)
      return depth(0.5 * (lo + hi));
  }
}

std::vector<double> wigner_time_delay(const std::vector<PhaseShiftSample>& s)
{
  const std::size_t n = s.size();
  if (n < 3)
    throw std::invalid_argument("wigner_time_delay: need at least 3 samples");
  for (std::size_t i = 1; i < n; ++i)
    if (!(s[i].E > s[i - 1].E))
      throw std::invalid_argument("wigner_time_delay: energies must be strictly increasing");

  // derivative at x1 of the parabola through (x0,y0),(x1,y1),(x2,y2)
  const auto deriv = [](double x0, double y0, double x1, double y1, double x2, double y2, double at) {
    const double l0 = (2 * at - x1 - x2) / ((x0 - x1) * (x0 - x2));
    const double l1 = (2 * at - x0 - x2) / ((x1 - x0) * (x1 - x2));
    const double l2 = (2 * at - x0 - x1) / ((x2 - x0) * (x2 - x1));
    return y0 * l0 + y1 * l1 + y2 * l2;
  };

  std::vector<double> tau(n);
  for (std::size_t i = 0; i < n; ++i) {
    const std::size_t c = std::clamp<std::size_t>(i, 1, n - 2);
    tau[i] = 2.0 * deriv(s[c - 1].E, s[c - 1].delta, s[c].E, s[c].delta, s[c + 1].E, s[c + 1].delta, s[i].E);
  }
  return tau;
}

} // namespace dscat

#include "dirac_scatter/dirac_square.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>
#include <string>

#include "dirac_scatter/critical.hpp"
#include "dirac_scatter/special_functions.hpp"

namespace dscat {

namespace sp = special;
using std::numbers::pi;

namespace {

constexpr double nan = std::numeric_limits<double>::quiet_NaN();

// j_l(q r)/(q r)^l continued to q^2 = t <= 0
double scaled_regular(int l, double t, double r)
{
  if (t > 0.0)
    return sp::sph_j_scaled(l, std::sqrt(t) * r);
  if (t < 0.0)
    return sp::sph_i_scaled(l, std::sqrt(-t) * r);
  return 1.0 / sp::double_factorial_real(2 * l + 1);
}

double cos_continued(double t, double r)
{
  if (t >= 0.0)
    return std::cos(std::sqrt(t) * r);
  return std::cosh(std::sqrt(-t) * r);
}

void require_propagating(const DiracSquareSystem& sys, double E)
{
  if (!(std::abs(E) > sys.m))
    throw std::domain_error("dirac phase shift: need |E| > m, got E = " + std::to_string(E));
}

double momentum(const DiracSquareSystem& sys, double E)
{
  return std::sqrt((E - sys.m) * (E + sys.m));
}

double interior_p2(const DiracSquareSystem& sys, double E)
{
  const double e = E - sys.U;
  return (e - sys.m) * (e + sys.m);
}

PhaseComponents components_at(const DiracSquareSystem& sys, double E, double k)
{
  if (sys.U == 0.0)
    return {0.0, 1.0};
  const Channel& ch = sys.channel;
  const int l = ch.l_chi();
  const double a = sys.a;
  const double t = interior_p2(sys, E);
  const double x = k * a;
  const double w = (E + sys.m) / k;
  const double reg = scaled_regular(l, t, a);
  if (ch.chi() < 0) {
    const double c1 = w * (E - sys.U - sys.m) * a * scaled_regular(l + 1, t, a);
    return {c1 * sp::sph_j(l, x) - reg * sp::sph_j(l + 1, x), c1 * sp::sph_n(l, x) - reg * sp::sph_n(l + 1, x)};
  }
  const double u = E - sys.U + sys.m;
  const double c1 = w * scaled_regular(l - 1, t, a) / a;
  return {c1 * sp::sph_j(l, x) - u * reg * sp::sph_j(l - 1, x), c1 * sp::sph_n(l, x) - u * reg * sp::sph_n(l - 1, x)};
}

double tan_of(const PhaseComponents& c)
{
  return c.den == 0.0 ? std::copysign(std::numeric_limits<double>::infinity(), c.num) : c.num / c.den;
}

} // namespace

DiracSquareSystem DiracSquareSystem::well(double depth, double a, double m, Channel ch)
{
  return make(PotentialSign::well, depth, a, m, ch);
}

DiracSquareSystem DiracSquareSystem::barrier(double height, double a, double m, Channel ch)
{
  return make(PotentialSign::barrier, height, a, m, ch);
}

DiracSquareSystem DiracSquareSystem::make(PotentialSign s, double v, double a, double m, Channel ch)
{
  if (!(v >= 0.0))
    throw std::invalid_argument("dirac square: strength must be >= 0");
  DiracSquareSystem sys{sign_factor(s) * v, a, m, ch};
  sys.validate();
  return sys;
}

void DiracSquareSystem::validate() const
{
  if (!(a > 0.0) || !(m > 0.0))
    throw std::invalid_argument("dirac square: a and m must be > 0");
  if (!std::isfinite(U))
    throw std::invalid_argument("dirac square: potential must be finite");
}

DiracKinematics DiracKinematics::compute(const DiracSquareSystem& sys, double E)
{
  DiracKinematics kin;
  kin.E = E;
  const double ext = (E - sys.m) * (E + sys.m);
  kin.k = ext > 0.0 ? std::sqrt(ext) : nan;
  kin.kappa = ext < 0.0 ? std::sqrt(-ext) : nan;
  kin.p2 = interior_p2(sys, E);
  kin.p = kin.p2 >= 0.0 ? std::sqrt(kin.p2) : nan;
  kin.gamma = (ext > 0.0 && kin.p2 >= 0.0) ? kin.p / kin.k * (E + sys.m) / (E - sys.U + sys.m) : nan;
  return kin;
}

PhaseComponents dirac_tan_components(const DiracSquareSystem& sys, double E)
{
  sys.validate();
  require_propagating(sys, E);
  return components_at(sys, E, momentum(sys, E));
}

PhaseComponents dirac_tan_components_bessel(const DiracSquareSystem& sys, double E)
{
  sys.validate();
  require_propagating(sys, E);
  const auto kin = DiracKinematics::compute(sys, E);
  if (!(kin.p2 > 0.0))
    throw std::domain_error("dirac phase shift: Bessel form needs a real interior momentum");
  const int l = sys.channel.l_chi(), lm = sys.channel.l_minus_chi();
  const double x = kin.k * sys.a, y = kin.p * sys.a;
  const double g = kin.gamma;
  return {g * sp::sph_j(l, x) * sp::sph_j(lm, y) - sp::sph_j(l, y) * sp::sph_j(lm, x),
          g * sp::sph_j(lm, y) * sp::sph_n(l, x) - sp::sph_j(l, y) * sp::sph_n(lm, x)};
}

PhaseComponents swave_tan_components(const DiracSquareSystem& sys, double E)
{
  sys.validate();
  require_propagating(sys, E);
  if (sys.channel.chi() != -1)
    throw std::invalid_argument("s-wave closed form: channel must be s1/2");
  const double k = momentum(sys, E);
  const double t = interior_p2(sys, E);
  const double x = k * sys.a;
  const double s = scaled_regular(0, t, sys.a);
  const double c = cos_continued(t, sys.a);
  const double u = E - sys.U + sys.m;
  const double em = E + sys.m;
  const double sx = std::sin(x), cx = std::cos(x);
  return {sys.U * sx * s - em * sx * c + u * x * cx * s, u * x * sx * s - sys.U * cx * s + em * cx * c};
}

int dirac_threshold_branch(const DiracSquareSystem& sys)
{
  sys.validate();
  const double v = sys.magnitude();
  if (v == 0.0)
    return 0;
  CriticalCondition cond;
  cond.channel = sys.channel;
  cond.energy_sign = 1;
  cond.sign = sys.sign();
  const int n = count_square_criticals_below(cond, sys.m, sys.a, v);
  return sys.sign() == PotentialSign::well ? n : -n;
}

std::vector<PhaseShiftSample> dirac_phase_curve(const DiracSquareSystem& sys, const std::vector<double>& energies)
{
  sys.validate();
  double k_low = std::numeric_limits<double>::infinity();
  std::vector<double> ks;
  ks.reserve(energies.size());
  for (const double E : energies) {
    if (!(E > sys.m))
      throw std::domain_error("dirac phase curve: energies must exceed m, got E = " + std::to_string(E));
    ks.push_back(momentum(sys, E));
    k_low = std::min(k_low, ks.back());
  }
  if (ks.empty())
    return {};

  const auto comps = [&](double k) { return components_at(sys, std::sqrt(k * k + sys.m * sys.m), k); };
  const double k_anchor = std::min(1e-7 / sys.a, 0.5 * k_low);
  const double anchor = nearest_branch(principal_phase(comps(k_anchor)), pi * dirac_threshold_branch(sys));

  TrackingOptions opts;
  opts.max_step = 0.05 / sys.a;
  opts.rel_step = 0.005;
  const auto deltas = track_phase(comps, k_anchor, anchor, ks, opts);

  std::vector<PhaseShiftSample> out;
  out.reserve(ks.size());
  for (std::size_t i = 0; i < ks.size(); ++i) {
    auto s = make_sample(energies[i], ks[i], deltas[i]);
    s.tan_delta = tan_of(components_at(sys, energies[i], ks[i]));
    out.push_back(s);
  }
  return out;
}

PhaseShiftSample dirac_phase_shift(const DiracSquareSystem& sys, double E)
{
  return dirac_phase_curve(sys, {E}).front();
}

PhaseShiftSample swave_phase_closed_form(const DiracSquareSystem& sys, double E)
{
  const auto c = swave_tan_components(sys, E);
  // branch taken from the tracked general form; the closed form fixes the value mod pi
  const auto tracked = dirac_phase_shift(sys, E);
  auto s = make_sample(E, momentum(sys, E), nearest_branch(principal_phase(c), tracked.delta));
  s.tan_delta = tan_of(c);
  return s;
}

MatchingCoefficients dirac_matching(const DiracSquareSystem& sys, double E)
{
  sys.validate();
  require_propagating(sys, E);
  const Channel& ch = sys.channel;
  const int l = ch.l_chi(), lm = ch.l_minus_chi();
  const double a = sys.a;
  const double k = momentum(sys, E);
  const double x = k * a;

  const auto in = interior_solution(sys, E, {a});
  const double F = in.f[0] / a;
  const double G = in.g[0] * (E + sys.m) / (ch.tau() * k * a);

  const double jl = sp::sph_j(l, x), nl = sp::sph_n(l, x);
  const double jm = sp::sph_j(lm, x), nm = sp::sph_n(lm, x);
  const double det = jl * nm - nl * jm;

  MatchingCoefficients mc;
  mc.a1 = 1.0;
  mc.b1 = (F * nm - G * nl) / det;
  mc.b2 = (G * jl - F * jm) / det;
  if (mc.b1 < 0.0) {
    mc.a1 = -1.0;
    mc.b1 = -mc.b1;
    mc.b2 = -mc.b2;
  }
  mc.A = std::hypot(mc.b1, mc.b2);
  return mc;
}

RadialSolution interior_solution(const DiracSquareSystem& sys, double E, const std::vector<double>& r, double a1)
{
  sys.validate();
  const Channel& ch = sys.channel;
  const int l = ch.l_chi();
  const double t = interior_p2(sys, E);
  const double u = E - sys.U + sys.m;
  if (ch.chi() > 0 && u == 0.0)
    throw std::domain_error("dirac interior: E - U + m = 0 leaves f = 0 for chi > 0");

  RadialSolution sol;
  sol.r = r;
  sol.f.reserve(r.size());
  sol.g.reserve(r.size());
  for (const double ri : r) {
    const double base = a1 * std::pow(ri, l + 1);
    sol.f.push_back(base * scaled_regular(l, t, ri));
    if (ch.chi() < 0)
      sol.g.push_back(-base * (E - sys.U - sys.m) * ri * scaled_regular(l + 1, t, ri));
    else
      sol.g.push_back(a1 * std::pow(ri, l) * scaled_regular(l - 1, t, ri) / u);
  }
  return sol;
}

RadialSolution exterior_solution(const DiracSquareSystem& sys, double E, double delta, const std::vector<double>& r,
                                 double A)
{
  sys.validate();
  require_propagating(sys, E);
  const Channel& ch = sys.channel;
  const int l = ch.l_chi(), lm = ch.l_minus_chi();
  const double k = momentum(sys, E);
  const double c = std::cos(delta), s = std::sin(delta);

  RadialSolution sol;
  sol.r = r;
  sol.f.reserve(r.size());
  sol.g.reserve(r.size());
  for (const double ri : r) {
    if (!(ri > 0.0))
      throw std::domain_error("dirac exterior: radii must be > 0");
    const double kr = k * ri;
    sol.f.push_back(A * ri * (c * sp::sph_j(l, kr) - s * sp::sph_n(l, kr)));
    sol.g.push_back(ch.tau() * kr / (E + sys.m) * A * (c * sp::sph_j(lm, kr) - s * sp::sph_n(lm, kr)));
  }
  MatchingCoefficients mc;
  mc.b1 = A * c;
  mc.b2 = -A * s;
  mc.A = A;
  sol.coefficients = mc;
  return sol;
}

RadialSolution matched_solution(const DiracSquareSystem& sys, double E, const std::vector<double>& r)
{
  const auto mc = dirac_matching(sys, E);
  const double delta = std::atan2(-mc.b2, mc.b1);
  std::vector<double> inner, outer;
  for (const double ri : r)
    (ri <= sys.a ? inner : outer).push_back(ri);
  const auto in = interior_solution(sys, E, inner, mc.a1);
  const auto out = exterior_solution(sys, E, delta, outer, mc.A);

  RadialSolution sol;
  sol.r.reserve(r.size());
  std::size_t i = 0, o = 0;
  for (const double ri : r) {
    sol.r.push_back(ri);
    if (ri <= sys.a) {
      sol.f.push_back(in.f[i]);
      sol.g.push_back(in.g[i++]);
    } else {
      sol.f.push_back(out.f[o]);
      sol.g.push_back(out.g[o++]);
    }
  }
  sol.coefficients = mc;
  return sol;
}

} // namespace dscat

#include "cli_commands.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <memory>
#include <numbers>
#include <optional>
#include <sstream>
#include <vector>

#include "dirac_scatter/channel.hpp"
#include "dirac_scatter/critical.hpp"
#include "dirac_scatter/dirac_square.hpp"
#include "dirac_scatter/errors.hpp"
#include "dirac_scatter/phase_tracking.hpp"
#include "dirac_scatter/potential.hpp"
#include "dirac_scatter/radial_integrator.hpp"
#include "dirac_scatter/resonance.hpp"
#include "dirac_scatter/schrodinger_well.hpp"

namespace dscat::cli {

using std::numbers::pi;

const char* to_string(Command c)
{
  switch (c) {
  case Command::phase_shift: return "phase-shift";
  case Command::critical: return "critical";
  case Command::resonance_scan: return "resonance-scan";
  case Command::wavefunction: return "wavefunction";
  }
  return "?";
}

std::string fmt(double x)
{
  if (std::isnan(x))
    return "nan";
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.12g", x);
  return buf;
}

namespace {

[[noreturn]] void bad(const std::string& field, const std::string& why)
{
  throw ConfigError("--" + field + ": " + why);
}

std::string default_axis(Command c)
{
  switch (c) {
  case Command::phase_shift: return "E";
  case Command::resonance_scan: return "v";
  default: return "";
  }
}

std::string axis_of(const RunConfig& c) { return c.scan.empty() ? default_axis(c.command) : c.scan; }

std::vector<double> grid(const RunConfig& c)
{
  std::vector<double> x(static_cast<std::size_t>(c.points));
  for (int i = 0; i < c.points; ++i)
    x[static_cast<std::size_t>(i)] = c.from + (c.to - c.from) * i / (c.points - 1);
  return x;
}

// Everything the cores need, in natural units.
struct Problem {
  units::UnitSystem u;
  PotentialSpec pot;
  double m = 1.0;
  double a = 1.0;
  IntegrationConfig integ;
};

Problem problem(const RunConfig& c)
{
  Problem p;
  p.u.system = c.units == "mev_fm" ? units::System::mev_fm : units::System::natural;
  p.u.hbarc = c.hbarc;
  p.m = c.mass;
  p.a = p.u.length_in(c.range);
  const ShapeKind shape = parse_shape(c.shape);
  const PotentialSign sign = parse_sign(c.sign);
  if (shape == ShapeKind::tabulated) {
    std::shared_ptr<const TabulatedShape> t;
    try {
      t = std::make_shared<const TabulatedShape>(TabulatedShape::from_file(c.table));
    } catch (const std::exception& e) {
      bad("table", e.what());
    }
    p.pot = PotentialSpec::tabulated(t, sign, c.depth, p.a);
  } else {
    p.pot = PotentialSpec::make(shape, sign, c.depth, p.a);
  }
  p.integ = IntegrationConfig::defaults(p.a);
  if (c.step > 0.0) {
    const double h = p.u.length_in(c.step);
    p.integ.h_far *= h / p.integ.h;
    p.integ.h = h;
  }
  if (c.r0 > 0.0)
    p.integ.r0 = p.u.length_in(c.r0);
  p.integ.nu = c.nu;
  return p;
}

bool use_analytic(const RunConfig& c)
{
  if (c.solver == "analytic")
    return true;
  if (c.solver == "numerical")
    return false;
  return c.shape == "square";
}

int schrodinger_l(const std::string& text)
{
  if (text.size() == 1 && std::isalpha(static_cast<unsigned char>(text[0]))) {
    for (int l = 0; l < 22; ++l)
      if (orbital_letter(l) == text[0])
        return l;
    bad("channel", "unknown orbital letter '" + text + "'");
  }
  try {
    std::size_t used = 0;
    const int l = std::stoi(text, &used);
    if (used == text.size() && l >= 0)
      return l;
  } catch (const std::exception&) {
  }
  bad("channel", "schrodinger channel must be l >= 0 or an orbital letter, got '" + text + "'");
}

double scattering_momentum(const RunConfig& c)
{
  if (c.momentum > 0.0)
    return c.momentum;
  return std::sqrt(c.energy * c.energy - c.mass * c.mass);
}

std::vector<double> time_delay(const std::vector<PhaseShiftSample>& s)
{
  if (s.size() >= 3)
    return wigner_time_delay(s);
  const double d = 2.0 * (s[1].delta - s[0].delta) / (s[1].E - s[0].E);
  return {d, d};
}

void write_phase_rows(std::ostream& out, const std::string& axis, const std::vector<double>& x,
                      const std::vector<PhaseShiftSample>& s, const std::vector<double>& tau,
                      const std::vector<bool>& ok, const units::UnitSystem& u)
{
  out << axis << ",delta,tan_delta,sin2_delta,time_delay\n";
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (!ok[i]) {
      out << fmt(x[i]) << ",nan,nan,nan,nan\n";
      continue;
    }
    out << fmt(x[i]) << ',' << fmt(s[i].delta) << ',' << fmt(s[i].tan_delta) << ',' << fmt(s[i].sin2_delta) << ','
        << fmt(u.length_out(tau[i])) << '\n';
  }
}

void phase_shift(const RunConfig& c, std::ostream& out, std::ostream& log)
{
  const Problem P = problem(c);
  const std::string axis = axis_of(c);
  const auto x = grid(c);
  const double m = P.m;
  std::vector<double> E(x.size()), k(x.size());
  const bool schrodinger = c.model == "schrodinger";
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (axis == "E") {
      E[i] = x[i];
      k[i] = schrodinger ? std::sqrt(2.0 * m * x[i]) : std::sqrt(x[i] * x[i] - m * m);
    } else {
      k[i] = x[i];
      E[i] = schrodinger ? x[i] * x[i] / (2.0 * m) : std::sqrt(x[i] * x[i] + m * m);
    }
  }

  std::vector<PhaseShiftSample> s;
  std::vector<bool> ok(x.size(), true);
  if (schrodinger) {
    const SchrodingerWell w{c.depth, P.a, m};
    s = schrodinger_phase_curve(w, schrodinger_l(c.channel), k);
  } else if (use_analytic(c)) {
    const auto sys = DiracSquareSystem::make(P.pot.sign, c.depth, P.a, m, parse_channel(c.channel));
    s = dirac_phase_curve(sys, E);
  } else {
    const auto pts = resonance_curve_vs_momentum(P.pot, parse_channel(c.channel), m, k, P.integ, c.threads);
    std::optional<double> prev;
    for (std::size_t i = 0; i < pts.size(); ++i) {
      if (!pts[i].ok) {
        log << "point " << axis << " = " << fmt(x[i]) << ": " << pts[i].error << '\n';
        ok[i] = false;
        s.push_back(make_sample(E[i], k[i], std::nan("")));
        continue;
      }
      s.push_back(make_sample(E[i], k[i], pts[i].delta));
    }
    // windowed phases; unwrap only for the time delay
    std::vector<PhaseShiftSample> good;
    for (std::size_t i = 0; i < s.size(); ++i) {
      if (!ok[i])
        continue;
      const double d = prev ? nearest_branch(s[i].delta, *prev) : s[i].delta;
      prev = d;
      good.push_back(make_sample(E[i], k[i], d));
    }
    std::vector<double> tau(x.size(), std::nan(""));
    if (good.size() >= 2) {
      const auto t = time_delay(good);
      for (std::size_t i = 0, j = 0; i < s.size(); ++i)
        if (ok[i])
          tau[i] = t[j++];
    }
    write_phase_rows(out, axis, x, s, tau, ok, P.u);
    return;
  }
  write_phase_rows(out, axis, x, s, time_delay(s), ok, P.u);
}

void critical(const RunConfig& c, std::ostream& out)
{
  const Problem P = problem(c);
  struct Column {
    std::string name;
    CriticalCondition cond;
  };
  std::vector<Column> cols;
  const Channel s = Channel::from_chi(-1), p = Channel::from_chi(1);
  if (c.layout == "signs") {
    for (const auto& ch : {s, p})
      for (const auto sg : {PotentialSign::barrier, PotentialSign::well})
        cols.push_back({ch.label() + (sg == PotentialSign::barrier ? "(+)" : "(-)"), {ch, c.energy_sign, sg}});
  } else {
    for (const auto& ch : {s, p})
      for (const int es : {1, -1})
        cols.push_back({ch.label() + (es > 0 ? " E=+m" : " E=-m"), {ch, es, P.pot.sign}});
  }

  std::vector<std::vector<CriticalCoupling>> values;
  for (const auto& col : cols) {
    if (P.pot.shape == ShapeKind::square) {
      values.push_back(find_square_criticals(col.cond, P.m, P.a, c.count));
    } else {
      ShootingOptions opts;
      if (c.to > 0.0)
        opts.v_max = c.to;
      if (c.step > 0.0)
        opts.h = P.u.length_in(c.step) / P.a;
      values.push_back(find_general_criticals(P.pot, col.cond, P.m, c.count, opts));
    }
  }
  out << 'n';
  for (const auto& col : cols)
    out << ',' << col.name;
  out << '\n';
  for (int n = 0; n < c.count; ++n) {
    out << n + 1;
    for (const auto& v : values)
      out << ',' << fmt(v[static_cast<std::size_t>(n)].value);
    out << '\n';
  }
}

// Interior maxima of C refined by a parabola through the neighbours.
void c_maxima(const std::vector<double>& x, const std::vector<CurvePoint>& pts, std::ostream& peaks)
{
  for (std::size_t i = 1; i + 1 < pts.size(); ++i) {
    if (!pts[i - 1].ok || !pts[i].ok || !pts[i + 1].ok)
      continue;
    const double y0 = pts[i - 1].C, y1 = pts[i].C, y2 = pts[i + 1].C;
    if (!(y1 > y0 && y1 >= y2))
      continue;
    const double h = x[i + 1] - x[i];
    const double den = y0 - 2.0 * y1 + y2;
    const double shift = den != 0.0 ? 0.5 * h * (y0 - y2) / den : 0.0;
    peaks << "C_max," << fmt(x[i] + shift) << ',' << fmt(y1) << ",nan,nan,nan\n";
  }
}

void resonance_scan(const RunConfig& c, std::ostream& out, std::ostream& peaks, std::ostream& log)
{
  const Problem P = problem(c);
  const std::string axis = axis_of(c);
  const Channel ch = parse_channel(c.channel);
  const auto x = grid(c);
  std::vector<CurvePoint> pts;
  if (axis == "v")
    pts = resonance_curve_vs_coupling(P.pot, ch, P.m, scattering_momentum(c), x, P.integ, c.threads);
  else
    pts = resonance_curve_vs_momentum(P.pot, ch, P.m, x, P.integ, c.threads);

  out << axis << ",C,delta\n";
  for (std::size_t i = 0; i < pts.size(); ++i) {
    if (!pts[i].ok) {
      log << "point " << axis << " = " << fmt(x[i]) << ": " << pts[i].error << '\n';
      out << fmt(x[i]) << ",nan,nan\n";
      continue;
    }
    out << fmt(x[i]) << ',' << fmt(pts[i].C) << ',' << fmt(pts[i].delta) << '\n';
  }

  peaks << "kind,position,C,E_R,Gamma,Gamma_slope\n";
  c_maxima(x, pts, peaks);
  if (axis != "p")
    return;
  std::vector<PhaseShiftSample> s;
  for (std::size_t i = 0; i < pts.size(); ++i) {
    if (!pts[i].ok)
      continue;
    const double E = std::sqrt(x[i] * x[i] + P.m * P.m);
    const double d = s.empty() ? pts[i].delta : nearest_branch(pts[i].delta, s.back().delta);
    s.push_back(make_sample(E, x[i], d));
  }
  if (s.size() < 10)
    return;
  for (auto pk : detect_resonances(s)) {
    std::string width = "nan";
    if (pk.kind == PeakKind::resonance) {
      try {
        width = fmt(breit_wigner_width(s, pk));
      } catch (const WidthNotBracketed&) {
      }
    }
    const double p_R = std::sqrt(std::max(0.0, pk.E_R * pk.E_R - P.m * P.m));
    peaks << to_string(pk.kind) << ',' << fmt(p_R) << ",nan," << fmt(pk.E_R) << ',' << width << ','
          << fmt(pk.Gamma_slope) << '\n';
  }
}

void wavefunction(const RunConfig& c, std::ostream& out)
{
  const Problem P = problem(c);
  const Channel ch = parse_channel(c.channel);
  const double p = scattering_momentum(c);
  const double E = std::sqrt(p * p + P.m * P.m);
  out << "r,f,g\n";
  if (use_analytic(c)) {
    const auto sys = DiracSquareSystem::make(P.pot.sign, c.depth, P.a, P.m, ch);
    const double lo = P.u.length_in(c.from);
    const double hi = c.to > 0.0 ? P.u.length_in(c.to) : 20.0 * P.a;
    std::vector<double> r(static_cast<std::size_t>(c.points));
    for (int i = 0; i < c.points; ++i)
      r[static_cast<std::size_t>(i)] = lo + (hi - lo) * i / (c.points - 1);
    const auto sol = matched_solution(sys, E, r);
    for (std::size_t i = 0; i < sol.size(); ++i)
      out << fmt(P.u.length_out(sol.r[i])) << ',' << fmt(sol.f[i]) << ',' << fmt(sol.g[i]) << '\n';
    return;
  }
  IntegrationConfig cfg = P.integ;
  const auto fit = scatter(P.pot, ch, P.m, p, cfg);
  cfg.C = fit.C;
  const auto sol = integrate_radial(P.pot, ch, P.m, E, cfg);
  out << "# C = " << fmt(fit.C) << "\n# r_nu = " << fmt(P.u.length_out(fit.node_radius))
      << "\n# delta = " << fmt(fit.delta) << '\n';
  for (std::size_t i = 0; i < sol.size(); i += static_cast<std::size_t>(c.every))
    out << fmt(P.u.length_out(sol.r[i])) << ',' << fmt(sol.f[i]) << ',' << fmt(sol.g[i]) << '\n';
}

} // namespace

void RunConfig::validate() const
{
  if (model != "dirac" && model != "schrodinger")
    bad("model", "expected dirac or schrodinger, got '" + model + "'");
  if (solver != "auto" && solver != "analytic" && solver != "numerical")
    bad("solver", "expected auto, analytic or numerical, got '" + solver + "'");
  ShapeKind sk;
  try {
    sk = parse_shape(shape);
  } catch (const std::exception& e) {
    bad("shape", e.what());
  }
  if (sk == ShapeKind::tabulated && table.empty())
    bad("table", "a file is required for shape tabulated");
  try {
    parse_sign(sign);
  } catch (const std::exception& e) {
    bad("sign", e.what());
  }
  if (!(depth >= 0.0) || !std::isfinite(depth))
    bad("depth", "must be finite and >= 0 (use --sign for the direction)");
  if (!(range > 0.0) || !std::isfinite(range))
    bad("range", "must be > 0");
  if (!(mass > 0.0) || !std::isfinite(mass))
    bad("mass", "must be > 0");
  if (units != "natural" && units != "mev_fm")
    bad("units", "expected natural or mev_fm, got '" + units + "'");
  if (!(hbarc > 0.0))
    bad("hbarc", "must be > 0");
  if (model == "schrodinger") {
    if (command != Command::phase_shift)
      bad("model", "schrodinger supports only phase-shift");
    if (sk != ShapeKind::square || sign != "well")
      bad("shape", "schrodinger phase shifts are available for the square well only");
    schrodinger_l(channel);
  } else {
    try {
      parse_channel(channel);
    } catch (const std::exception& e) {
      bad("channel", e.what());
    }
  }
  if (solver == "analytic" && sk != ShapeKind::square)
    bad("solver", "analytic solutions exist for the square shape only");
  if (nu < 1)
    bad("nu", "must be >= 1");
  if (step < 0.0)
    bad("step", "must be > 0");
  if (r0 < 0.0)
    bad("r0", "must be > 0");
  if (every < 1)
    bad("every", "must be >= 1");

  const std::string axis = axis_of(*this);
  switch (command) {
  case Command::phase_shift:
    if (axis != "E" && axis != "k")
      bad("scan", "phase-shift scans E or k, got '" + axis + "'");
    break;
  case Command::resonance_scan:
    if (axis != "v" && axis != "p")
      bad("scan", "resonance-scan scans v or p, got '" + axis + "'");
    if (solver == "analytic")
      bad("solver", "resonance-scan always integrates numerically");
    break;
  case Command::critical:
    if (count < 1)
      bad("count", "must be >= 1");
    if (layout != "signs" && layout != "energies")
      bad("layout", "expected signs or energies, got '" + layout + "'");
    if (energy_sign != 1 && energy_sign != -1)
      bad("energy-sign", "must be +1 or -1");
    if (!scan.empty())
      bad("scan", "critical takes no scan axis");
    return;
  case Command::wavefunction:
    break;
  }

  if (command == Command::wavefunction || (command == Command::resonance_scan && axis == "v")) {
    if (momentum > 0.0 && energy > 0.0)
      bad("momentum", "give either --momentum or --energy");
    if (!(momentum > 0.0) && !(energy > mass))
      bad("momentum", "a momentum > 0 or an energy > mass is required");
  }
  if (points < 2)
    bad("points", "must be >= 2");
  if (command == Command::wavefunction)
    return;
  if (!(to > from))
    bad("to", "empty scan range: need to > from (got from = " + fmt(from) + ", to = " + fmt(to) + ")");
  if (axis == "E" && model == "dirac" && !(from > mass))
    bad("from", "energies must exceed the mass");
  if (!(from > 0.0) && axis != "v")
    bad("from", "the scan must start above zero");
  if (axis == "v" && from < 0.0)
    bad("from", "couplings must be >= 0");
}

std::string RunConfig::echo() const
{
  std::ostringstream o;
  o << "# diracscat " << to_string(command) << '\n'
    << "# model = " << model << "\n# solver = " << solver << "\n# shape = " << shape << "\n# table = " << table
    << "\n# sign = " << sign << "\n# depth = " << fmt(depth) << "\n# range = " << fmt(range)
    << "\n# mass = " << fmt(mass) << "\n# channel = " << channel << "\n# units = " << units
    << "\n# hbarc = " << fmt(hbarc) << "\n# scan = " << axis_of(*this) << "\n# from = " << fmt(from)
    << "\n# to = " << fmt(to) << "\n# points = " << points << "\n# momentum = " << fmt(momentum)
    << "\n# energy = " << fmt(energy) << "\n# nu = " << nu << "\n# step = " << fmt(step) << "\n# r0 = " << fmt(r0)
    << "\n# count = " << count << "\n# layout = " << layout << "\n# energy-sign = " << energy_sign
    << "\n# every = " << every << '\n';
  return o.str();
}

void run(const RunConfig& cfg, std::ostream& out, std::ostream& peaks, std::ostream& log)
{
  cfg.validate();
  out << cfg.echo();
  switch (cfg.command) {
  case Command::phase_shift: phase_shift(cfg, out, log); break;
  case Command::critical: critical(cfg, out); break;
  case Command::resonance_scan:
    peaks << cfg.echo();
    resonance_scan(cfg, out, peaks, log);
    break;
  case Command::wavefunction: wavefunction(cfg, out); break;
  }
}

} // namespace dscat::cli

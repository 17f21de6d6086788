// diracscat: phase shifts, critical couplings, resonance scans and wave
// functions for Dirac and Schroedinger particles in short-range potentials.

#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "cli_commands.hpp"
#include "dirac_scatter/errors.hpp"

namespace {

using dscat::cli::Command;
using dscat::cli::RunConfig;

void add_common(CLI::App* sub, RunConfig& c)
{
  sub->add_option("--model", c.model, "dirac or schrodinger")->capture_default_str();
  sub->add_option("--solver", c.solver, "auto, analytic (square only) or numerical")->capture_default_str();
  sub->add_option("--shape", c.shape, "square, gaussian, exponential, woods_saxon, tabulated")
      ->capture_default_str();
  sub->add_option("--table", c.table, "two-column file x w(x) for --shape tabulated");
  sub->add_option("--sign", c.sign, "well or barrier")->capture_default_str();
  sub->add_option("--depth", c.depth, "coupling v >= 0")->capture_default_str();
  sub->add_option("--range", c.range, "range a")->capture_default_str();
  sub->add_option("--mass", c.mass, "particle mass m")->capture_default_str();
  sub->add_option("--channel", c.channel, "chi or label (s1/2, p1/2, ...); l for schrodinger")
      ->capture_default_str();
  sub->add_option("--units", c.units, "natural or mev_fm")->capture_default_str();
  sub->add_option("--hbarc", c.hbarc, "hbar c in MeV fm for --units mev_fm")->capture_default_str();
  sub->add_option("--nu", c.nu, "node of g used for the numerical phase")->capture_default_str();
  sub->add_option("--step", c.step, "integration step (default 1e-3 range)");
  sub->add_option("--r0", c.r0, "start radius (default 1e-6 range)");
  sub->add_option("--threads", c.threads, "worker threads, 0 = all cores")->capture_default_str();
  sub->add_option("--out", c.out, "output file (default stdout)");
}

void add_scan(CLI::App* sub, RunConfig& c, const char* axes)
{
  sub->add_option("--scan", c.scan, axes);
  sub->add_option("--from", c.from, "scan start");
  sub->add_option("--to", c.to, "scan end");
  sub->add_option("--points", c.points, "scan points")->capture_default_str();
}

void add_point(CLI::App* sub, RunConfig& c)
{
  sub->add_option("--momentum", c.momentum, "incident momentum p");
  sub->add_option("--energy", c.energy, "total energy E > m");
}

} // namespace

int main(int argc, char** argv)
{
  CLI::App app{"Dirac and Schroedinger phase shifts, critical couplings and resonances"};
  app.require_subcommand(1);
  RunConfig cfg;

  auto* ps = app.add_subcommand("phase-shift", "phase-shift curve vs E or k");
  add_common(ps, cfg);
  add_scan(ps, cfg, "E (default) or k");
  ps->callback([&] { cfg.command = Command::phase_shift; });

  auto* cr = app.add_subcommand("critical", "table of critical and supercritical couplings");
  add_common(cr, cfg);
  cr->add_option("--count", cfg.count, "roots per column")->capture_default_str();
  cr->add_option("--layout", cfg.layout, "signs: s(+) s(-) p(+) p(-); energies: E=+m and E=-m for --sign")
      ->capture_default_str();
  cr->add_option("--energy-sign", cfg.energy_sign, "+1 critical, -1 supercritical (layout signs)")
      ->capture_default_str();
  cr->add_option("--to", cfg.to, "largest coupling searched by shooting");
  cr->add_option("--scan", cfg.scan, "not used");
  cr->callback([&] { cfg.command = Command::critical; });

  auto* rs = app.add_subcommand("resonance-scan", "C and delta vs coupling v or momentum p");
  add_common(rs, cfg);
  add_scan(rs, cfg, "v (default) or p");
  add_point(rs, cfg);
  rs->callback([&] { cfg.command = Command::resonance_scan; });

  auto* wf = app.add_subcommand("wavefunction", "radial functions f and g at one energy");
  add_common(wf, cfg);
  add_point(wf, cfg);
  wf->add_option("--from", cfg.from, "first radius (analytic solver)");
  wf->add_option("--to", cfg.to, "last radius (analytic solver, default 20 range)");
  wf->add_option("--points", cfg.points, "radii (analytic solver)")->capture_default_str();
  wf->add_option("--every", cfg.every, "keep every n-th grid point (numerical solver)")->capture_default_str();
  wf->callback([&] { cfg.command = Command::wavefunction; });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    cfg.validate();
    std::ofstream file, side;
    std::ostringstream trailer;
    std::ostream* out = &std::cout;
    std::ostream* peaks = &trailer;
    if (!cfg.out.empty()) {
      file.open(cfg.out);
      if (!file)
        throw dscat::cli::ConfigError("--out: cannot open '" + cfg.out + "'");
      out = &file;
      if (cfg.command == Command::resonance_scan) {
        side.open(cfg.out + ".peaks.csv");
        if (!side)
          throw dscat::cli::ConfigError("--out: cannot open '" + cfg.out + ".peaks.csv'");
        peaks = &side;
      }
    }
    dscat::cli::run(cfg, *out, *peaks, std::cerr);
    std::cout << trailer.str();
  } catch (const dscat::cli::ConfigError& e) {
    std::cerr << "config error: " << e.what() << '\n';
    return 2;
  } catch (const dscat::NumericalError& e) {
    std::cerr << "numerical error: " << e.what() << '\n';
    return 3;
  } catch (const std::invalid_argument& e) {
    std::cerr << "config error: " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "numerical error: " << e.what() << '\n';
    return 3;
  }
  return 0;
}

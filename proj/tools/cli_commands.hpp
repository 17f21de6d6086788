#pragma once

#include <ostream>
#include <stdexcept>
#include <string>

#include "dirac_scatter/units.hpp"

namespace dscat::cli {

/// Bad or inconsistent user input; maps to exit code 2.
class ConfigError : public std::invalid_argument {
public:
  using std::invalid_argument::invalid_argument;
};

enum class Command { phase_shift, critical, resonance_scan, wavefunction };

const char* to_string(Command c);

/// One invocation, in user units. Lengths are in fm and energies in MeV when
/// units == mev_fm.
struct RunConfig {
  Command command = Command::phase_shift;
  std::string model = "dirac";     // dirac | schrodinger
  std::string solver = "auto";     // auto | analytic | numerical
  std::string shape = "square";
  std::string table;               // path for shape = tabulated
  std::string sign = "well";
  double depth = 0.0;
  double range = 1.0;
  double mass = 1.0;
  std::string channel = "-1";
  std::string units = "natural";
  double hbarc = units::hbarc_mev_fm;
  std::string scan;                // axis; empty selects the command default
  double from = 0.0;
  double to = 0.0;
  int points = 100;
  double momentum = 0.0;
  double energy = 0.0;
  int nu = 20;
  double step = 0.0;               // 0: 1e-3 range
  double r0 = 0.0;                 // 0: 1e-6 range
  int count = 3;
  std::string layout = "signs";    // signs | energies
  int energy_sign = 1;
  int every = 1;
  unsigned threads = 0;
  std::string out;

  /// Throws ConfigError naming the offending field.
  void validate() const;
  /// '#'-prefixed lines listing every field.
  std::string echo() const;
};

/// Write the command's CSV to `out`; the resonance scan also writes its peak
/// summary to `peaks`. Per-point problems go to `log`.
void run(const RunConfig& cfg, std::ostream& out, std::ostream& peaks, std::ostream& log);

/// Fixed 12-significant-digit formatting used in all outputs.
std::string fmt(double x);

} // namespace dscat::cli

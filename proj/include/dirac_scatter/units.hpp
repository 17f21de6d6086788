#pragma once

namespace dscat::units {

/// hbar c in MeV fm.
inline constexpr double hbarc_mev_fm = 197.3269631;

enum class System { natural, mev_fm };

/// Conversion applied at the input/output boundary only. In mev_fm mode
/// energies and masses are in MeV and lengths in fm; the cores see lengths
/// in MeV^-1.
struct UnitSystem {
  System system = System::natural;
  double hbarc = hbarc_mev_fm;

  double length_in(double x) const { return system == System::mev_fm ? x / hbarc : x; }
  double length_out(double x) const { return system == System::mev_fm ? x * hbarc : x; }
};

} // namespace dscat::units

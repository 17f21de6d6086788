#pragma once

#include <string>
#include <string_view>

namespace dscat {

/// Dirac angular-momentum channel labelled by chi = +-(j + 1/2).
/// Only constructible through from_chi, so the index fields are always consistent.
class Channel {
public:
  /// Throws std::invalid_argument for chi == 0.
  static Channel from_chi(int chi);

  int chi() const { return chi_; }
  int twice_j() const { return 2 * abs_chi() - 1; }
  double j() const { return abs_chi() - 0.5; }
  /// Orbital index of the large component f.
  int l_chi() const { return chi_ > 0 ? chi_ : -chi_ - 1; }
  /// Orbital index of the small component g.
  int l_minus_chi() const { return chi_ < 0 ? -chi_ : chi_ - 1; }
  int tau() const { return chi_ > 0 ? 1 : -1; }
  int abs_chi() const { return chi_ > 0 ? chi_ : -chi_; }
  /// Spectroscopic label such as "s1/2", "p1/2", "p3/2".
  std::string label() const;

  bool operator==(const Channel&) const = default;

private:
  explicit Channel(int chi) : chi_(chi) {}
  int chi_;
};

inline Channel channel_from_chi(int chi) { return Channel::from_chi(chi); }

/// chi -> -chi. The caller applies E -> -E and V -> -V.
Channel crossing_transform(const Channel& c);

/// Accepts labels like "s1/2", "p3/2", "2p1/2" (leading principal number
/// ignored) or a signed integer chi. Throws std::invalid_argument.
Channel parse_channel(std::string_view text);

/// Letter for orbital index l: s, p, d, f, g, h, i, k, ...
char orbital_letter(int l);

struct SchrodingerChannel {
  int l = 0;
  /// Throws std::invalid_argument for l < 0.
  static SchrodingerChannel from_l(int l);
};

} // namespace dscat

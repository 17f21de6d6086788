#pragma once

#include <string>
#include <string_view>

namespace dscat {

/// Attractive well (potential -v w) or repulsive barrier (+v w).
enum class PotentialSign { well, barrier };

inline double sign_factor(PotentialSign s) { return s == PotentialSign::barrier ? 1.0 : -1.0; }

inline PotentialSign flip(PotentialSign s)
{
  return s == PotentialSign::barrier ? PotentialSign::well : PotentialSign::barrier;
}

inline const char* to_string(PotentialSign s) { return s == PotentialSign::barrier ? "barrier" : "well"; }

/// Accepts "well", "barrier", "-" and "+". Throws std::invalid_argument.
PotentialSign parse_sign(std::string_view text);

} // namespace dscat

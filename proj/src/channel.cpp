#include "dirac_scatter/channel.hpp"

#include <cctype>
#include <charconv>
#include <stdexcept>
#include <string>

namespace dscat {

namespace {

constexpr std::string_view letters = "spdfghiklmnoqrtuvwxyz";

int letter_to_l(char c)
{
  const auto pos = letters.find(static_cast<char>(std::tolower(static_cast<unsigned char>(c))));
  if (pos == std::string_view::npos)
    return -1;
  return static_cast<int>(pos);
}

bool parse_int(std::string_view s, int& out)
{
  if (!s.empty() && s.front() == '+')
    s.remove_prefix(1);
  if (s.empty())
    return false;
  const auto* end = s.data() + s.size();
  const auto res = std::from_chars(s.data(), end, out);
  return res.ec == std::errc() && res.ptr == end;
}

} // namespace

Channel Channel::from_chi(int chi)
{
  if (chi == 0)
    throw std::invalid_argument("channel: chi must be nonzero");
  return Channel(chi);
}

char orbital_letter(int l)
{
  if (l < 0 || l >= static_cast<int>(letters.size()))
    throw std::invalid_argument("channel: no letter for l = " + std::to_string(l));
  return letters[static_cast<std::size_t>(l)];
}

std::string Channel::label() const
{
  return std::string(1, orbital_letter(l_chi())) + std::to_string(twice_j()) + "/2";
}

Channel crossing_transform(const Channel& c) { return Channel::from_chi(-c.chi()); }

Channel parse_channel(std::string_view text)
{
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.front())))
    text.remove_prefix(1);
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.back())))
    text.remove_suffix(1);
  const std::string original(text);

  int chi = 0;
  if (parse_int(text, chi))
    return Channel::from_chi(chi);

  std::size_t i = 0;
  while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i])))
    ++i;
  text.remove_prefix(i);
  if (text.size() < 4 || text.substr(text.size() - 2) != "/2")
    throw std::invalid_argument("channel: cannot parse '" + original + "'");

  const int l = letter_to_l(text.front());
  int twice_j = 0;
  if (l < 0 || !parse_int(text.substr(1, text.size() - 3), twice_j))
    throw std::invalid_argument("channel: cannot parse '" + original + "'");

  if (twice_j == 2 * l + 1)
    return Channel::from_chi(-(l + 1));
  if (l > 0 && twice_j == 2 * l - 1)
    return Channel::from_chi(l);
  throw std::invalid_argument("channel: j = " + std::to_string(twice_j) + "/2 incompatible with l = " +
                              std::to_string(l) + " in '" + original + "'");
}

SchrodingerChannel SchrodingerChannel::from_l(int l)
{
  if (l < 0)
    throw std::invalid_argument("schrodinger channel: l must be >= 0");
  return SchrodingerChannel{l};
}

} // namespace dscat

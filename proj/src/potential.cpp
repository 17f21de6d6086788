#include "dirac_scatter/potential.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace dscat {

namespace {

std::string lower(std::string_view s)
{
  std::string out(s);
  for (auto& c : out)
    c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
  return out;
}

// -ln(1e-12)
constexpr double tail = 27.631021115928547;

} // namespace

PotentialSign parse_sign(std::string_view text)
{
  const auto s = lower(text);
  if (s == "well" || s == "-")
    return PotentialSign::well;
  if (s == "barrier" || s == "+")
    return PotentialSign::barrier;
  throw std::invalid_argument("sign: expected 'well' or 'barrier', got '" + std::string(text) + "'");
}

ShapeKind parse_shape(std::string_view text)
{
  const auto s = lower(text);
  if (s == "square")
    return ShapeKind::square;
  if (s == "gaussian")
    return ShapeKind::gaussian;
  if (s == "exponential")
    return ShapeKind::exponential;
  if (s == "woods_saxon" || s == "woods-saxon")
    return ShapeKind::woods_saxon;
  if (s == "tabulated")
    return ShapeKind::tabulated;
  throw std::invalid_argument("shape: unknown shape '" + std::string(text) + "'");
}

const char* to_string(ShapeKind s)
{
  switch (s) {
  case ShapeKind::square: return "square";
  case ShapeKind::gaussian: return "gaussian";
  case ShapeKind::exponential: return "exponential";
  case ShapeKind::woods_saxon: return "woods_saxon";
  case ShapeKind::tabulated: return "tabulated";
  }
  return "?";
}

TabulatedShape TabulatedShape::from_points(std::vector<double> x, std::vector<double> w)
{
  if (x.size() != w.size() || x.size() < 2)
    throw std::invalid_argument("tabulated shape: need at least two (x, w) rows");
  if (x.front() != 0.0 || w.front() != 1.0)
    throw std::invalid_argument("tabulated shape: first row must be x = 0, w = 1");
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (!std::isfinite(x[i]) || !std::isfinite(w[i]))
      throw std::invalid_argument("tabulated shape: non-finite value in row " + std::to_string(i + 1));
    if (i > 0 && !(x[i] > x[i - 1]))
      throw std::invalid_argument("tabulated shape: x must be strictly ascending (row " +
                                  std::to_string(i + 1) + ")");
    if (w[i] < 0.0 || w[i] > 1.0)
      throw std::invalid_argument("tabulated shape: w must lie in [0, 1] (row " + std::to_string(i + 1) + ")");
  }
  return TabulatedShape(std::move(x), std::move(w));
}

TabulatedShape TabulatedShape::from_file(const std::string& path)
{
  std::ifstream in(path);
  if (!in)
    throw std::invalid_argument("tabulated shape: cannot open '" + path + "'");
  std::vector<double> x, w;
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (const auto hash = line.find('#'); hash != std::string::npos)
      line.erase(hash);
    std::istringstream ss(line);
    double xi = 0.0, wi = 0.0;
    if (!(ss >> xi)) {
      if (line.find_first_not_of(" \t\r,") == std::string::npos)
        continue;
      throw std::invalid_argument("tabulated shape: bad row " + std::to_string(lineno) + " in '" + path + "'");
    }
    if (ss.peek() == ',')
      ss.get();
    if (!(ss >> wi))
      throw std::invalid_argument("tabulated shape: missing w in row " + std::to_string(lineno) + " of '" +
                                  path + "'");
    x.push_back(xi);
    w.push_back(wi);
  }
  return from_points(std::move(x), std::move(w));
}

double TabulatedShape::operator()(double x) const
{
  if (x <= 0.0)
    return w_.front();
  if (x > x_.back())
    return 0.0;
  const auto it = std::upper_bound(x_.begin(), x_.end(), x);
  const auto i = static_cast<std::size_t>(it - x_.begin());
  if (i >= x_.size())
    return w_.back();
  const double t = (x - x_[i - 1]) / (x_[i] - x_[i - 1]);
  return w_[i - 1] + t * (w_[i] - w_[i - 1]);
}

PotentialSpec PotentialSpec::make(ShapeKind shape, PotentialSign sign, double v, double a)
{
  if (shape == ShapeKind::tabulated)
    throw std::invalid_argument("potential: a tabulated shape needs a table");
  PotentialSpec p;
  p.shape = shape;
  p.sign = sign;
  p.v = v;
  p.a = a;
  p.validate();
  return p;
}

PotentialSpec PotentialSpec::tabulated(std::shared_ptr<const TabulatedShape> t, PotentialSign sign, double v,
                                       double a)
{
  PotentialSpec p;
  p.shape = ShapeKind::tabulated;
  p.sign = sign;
  p.v = v;
  p.a = a;
  p.table = std::move(t);
  p.validate();
  return p;
}

void PotentialSpec::validate() const
{
  if (!(v >= 0.0) || !std::isfinite(v))
    throw std::invalid_argument("potential: coupling v must be >= 0");
  if (!(a > 0.0) || !std::isfinite(a))
    throw std::invalid_argument("potential: range a must be > 0");
  if (shape == ShapeKind::tabulated && !table)
    throw std::invalid_argument("potential: tabulated shape without table");
}

double PotentialSpec::w(double x) const
{
  switch (shape) {
  case ShapeKind::square: return x <= 1.0 ? 1.0 : 0.0;
  case ShapeKind::gaussian: return std::exp(-x * x);
  case ShapeKind::exponential: return std::exp(-x);
  case ShapeKind::woods_saxon: return 1.0 / (1.0 + std::exp(x - 1.0));
  case ShapeKind::tabulated: return (*table)(x);
  }
  return 0.0;
}

double PotentialSpec::effective_range() const
{
  switch (shape) {
  case ShapeKind::square: return a;
  case ShapeKind::gaussian: return std::sqrt(tail) * a;
  case ShapeKind::exponential: return tail * a;
  case ShapeKind::woods_saxon: return (1.0 + tail) * a;
  case ShapeKind::tabulated: return table->x_max() * a;
  }
  return a;
}

PotentialSpec PotentialSpec::with(PotentialSign s, double coupling) const
{
  PotentialSpec p = *this;
  p.sign = s;
  p.v = coupling;
  p.validate();
  return p;
}

} // namespace dscat

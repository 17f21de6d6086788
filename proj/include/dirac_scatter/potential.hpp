#pragma once

#include <memory>
#include <string>
#include <string_view>
#include <vector>

#include "dirac_scatter/potential_sign.hpp"

namespace dscat {

enum class ShapeKind { square, gaussian, exponential, woods_saxon, tabulated };

/// Accepts "square", "gaussian", "exponential", "woods_saxon" (or "woods-saxon"),
/// "tabulated". Throws std::invalid_argument.
ShapeKind parse_shape(std::string_view text);
const char* to_string(ShapeKind s);

/// Shape function w(x) given as samples, linearly interpolated; zero past the
/// last sample.
class TabulatedShape {
public:
  /// Needs >= 2 strictly ascending x, x[0] = 0, w[0] = 1 and w in [0, 1].
  static TabulatedShape from_points(std::vector<double> x, std::vector<double> w);
  /// Two whitespace-separated columns; '#' starts a comment.
  static TabulatedShape from_file(const std::string& path);

  double operator()(double x) const;
  double x_max() const { return x_.back(); }
  double w_last() const { return w_.back(); }
  const std::vector<double>& x() const { return x_; }
  const std::vector<double>& w() const { return w_; }

private:
  TabulatedShape(std::vector<double> x, std::vector<double> w) : x_(std::move(x)), w_(std::move(w)) {}
  std::vector<double> x_, w_;
};

/// V(r) = +v w(r/a) for a barrier, -v w(r/a) for a well.
struct PotentialSpec {
  ShapeKind shape = ShapeKind::square;
  PotentialSign sign = PotentialSign::well;
  double v = 0.0;
  double a = 1.0;
  std::shared_ptr<const TabulatedShape> table;

  static PotentialSpec make(ShapeKind shape, PotentialSign sign, double v, double a);
  static PotentialSpec tabulated(std::shared_ptr<const TabulatedShape> t, PotentialSign sign, double v, double a);

  /// Throws std::invalid_argument for v < 0, a <= 0 or a missing table.
  void validate() const;
  double w(double x) const;
  double value(double r) const { return sign_factor(sign) * v * w(r / a); }
  /// Radius beyond which |w| < 1e-12 (the table end for tabulated shapes).
  double effective_range() const;
  PotentialSpec with(PotentialSign s, double coupling) const;
};

} // namespace dscat

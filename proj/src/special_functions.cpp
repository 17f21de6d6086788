#include "dirac_scatter/special_functions.hpp"

#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>
#include <string>
#include <vector>

namespace dscat::special {

namespace {

void require_order(int n, const char* who)
{
  if (n < 0)
    throw std::domain_error(std::string(who) + ": order must be >= 0, got " +
                            std::to_string(n));
}

void require_positive(double x, const char* who)
{
  if (!(x > 0.0))
    throw std::domain_error(std::string(who) + ": argument must be > 0, got " +
                            std::to_string(x));
}

// sum_k (sign * x^2/2)^k / (k! (2n+3)(2n+5)...(2n+2k+1)), times 1/(2n+1)!!.
// sign = -1 gives j_n(x)/x^n, sign = +1 gives i_n(x)/x^n.
double scaled_series(int n, double x, double sign)
{
  const double half_x2 = 0.5 * x * x;
  double term = 1.0 / double_factorial_real(2 * n + 1);
  double sum = term;
  for (int k = 1; k < 500; ++k) {
    term *= sign * half_x2 / (k * (2.0 * n + 2.0 * k + 1.0));
    sum += term;
    if (std::abs(term) < 1e-17 * std::abs(sum))
      break;
  }
  return sum;
}

// Miller's downward recurrence, normalised against the closed forms of
// orders 0 and 1. Used for 1 <= x <= n where upward recurrence loses digits.
double sph_j_downward(int n, double x)
{
  const int start = n + 20 + static_cast<int>(x);
  double above = 0.0;
  double current = 1e-30;
  double at_n = 0.0;
  double j1_trial = 0.0;
  for (int l = start; l >= 1; --l) {
    const double below = (2.0 * l + 1.0) / x * current - above;
    above = current;
    current = below;
    if (l - 1 == n)
      at_n = current;
    if (l - 1 == 1)
      j1_trial = current;
    if (std::abs(current) > 1e250) {
      current *= 1e-250;
      above *= 1e-250;
      at_n *= 1e-250;
      j1_trial *= 1e-250;
    }
  }
  if (n == start)
    at_n = 1e-30;
  const double j0 = std::sin(x) / x;
  const double j1 = std::sin(x) / (x * x) - std::cos(x) / x;
  // normalise against whichever closed form is better conditioned
  if (std::abs(j0) >= std::abs(j1))
    return at_n * (j0 / current);
  return at_n * (j1 / j1_trial);
}

} // namespace

std::int64_t double_factorial(int n)
{
  if (n < -1)
    throw std::domain_error("double_factorial: n must be >= -1, got " + std::to_string(n));
  std::int64_t result = 1;
  for (int k = n; k > 1; k -= 2) {
    if (result > std::numeric_limits<std::int64_t>::max() / k)
      throw std::domain_error("double_factorial: overflow for n = " + std::to_string(n));
    result *= k;
  }
  return result;
}

double double_factorial_real(int n)
{
  if (n < -1)
    throw std::domain_error("double_factorial: n must be >= -1, got " + std::to_string(n));
  double result = 1.0;
  for (int k = n; k > 1; k -= 2)
    result *= k;
  return result;
}

double sph_j(int n, double x)
{
  require_order(n, "sph_j");
  if (x < 0.0)
    return (n % 2 == 0 ? 1.0 : -1.0) * sph_j(n, -x);
  if (x < 1.0)
    return std::pow(x, n) * scaled_series(n, x, -1.0);

  const double j0 = std::sin(x) / x;
  if (n == 0)
    return j0;
  const double j1 = std::sin(x) / (x * x) - std::cos(x) / x;
  if (n == 1)
    return j1;
  if (x <= n)
    return sph_j_downward(n, x);

  double prev = j0;
  double cur = j1;
  for (int l = 1; l < n; ++l) {
    const double next = (2.0 * l + 1.0) / x * cur - prev;
    prev = cur;
    cur = next;
  }
  return cur;
}

double sph_j_scaled(int n, double x)
{
  require_order(n, "sph_j_scaled");
  const double ax = std::abs(x);
  if (ax < 1.0)
    return scaled_series(n, ax, -1.0);
  return sph_j(n, ax) / std::pow(ax, n);
}

double sph_n(int n, double x)
{
  require_order(n, "sph_n");
  require_positive(x, "sph_n");
  const double n0 = -std::cos(x) / x;
  if (n == 0)
    return n0;
  const double n1 = -std::cos(x) / (x * x) - std::sin(x) / x;
  double prev = n0;
  double cur = n1;
  for (int l = 1; l < n; ++l) {
    const double next = (2.0 * l + 1.0) / x * cur - prev;
    prev = cur;
    cur = next;
  }
  return cur;
}

double sph_j_prime(int n, double x)
{
  require_order(n, "sph_j_prime");
  if (n == 0)
    return -sph_j(1, x);
  if (x == 0.0)
    return n == 1 ? 1.0 / 3.0 : 0.0;
  return sph_j(n - 1, x) - (n + 1.0) / x * sph_j(n, x);
}

double sph_n_prime(int n, double x)
{
  require_order(n, "sph_n_prime");
  require_positive(x, "sph_n_prime");
  if (n == 0)
    return -sph_n(1, x);
  return sph_n(n - 1, x) - (n + 1.0) / x * sph_n(n, x);
}

double sph_i(int n, double x)
{
  require_order(n, "sph_i");
  if (x < 0.0)
    return (n % 2 == 0 ? 1.0 : -1.0) * sph_i(n, -x);
  if (x <= 20.0)
    return std::pow(x, n) * scaled_series(n, x, 1.0);
  // all orders of interest are small compared with x here
  const double i0 = std::sinh(x) / x;
  if (n == 0)
    return i0;
  const double i1 = (x * std::cosh(x) - std::sinh(x)) / (x * x);
  double prev = i0;
  double cur = i1;
  for (int l = 1; l < n; ++l) {
    const double next = prev - (2.0 * l + 1.0) / x * cur;
    prev = cur;
    cur = next;
  }
  return cur;
}

double sph_i_scaled(int n, double x)
{
  require_order(n, "sph_i_scaled");
  const double ax = std::abs(x);
  if (ax <= 20.0)
    return scaled_series(n, ax, 1.0);
  return sph_i(n, ax) / std::pow(ax, n);
}

double mod_sph_k(int n, double x)
{
  require_order(n, "mod_sph_k");
  require_positive(x, "mod_sph_k");
  const double k0 = std::exp(-x);
  if (n == 0)
    return k0;
  const double k1 = k0 * (1.0 + 1.0 / x);
  double prev = k0;
  double cur = k1;
  for (int l = 1; l < n; ++l) {
    const double next = prev + (2.0 * l + 1.0) / x * cur;
    prev = cur;
    cur = next;
  }
  return cur;
}

double mod_sph_i(int n, double x)
{
  require_order(n, "mod_sph_i");
  require_positive(x, "mod_sph_i");
  return 2.0 * x / std::numbers::pi * sph_i(n, x);
}

double riccati_phase_offset(int l, double x)
{
  require_order(l, "riccati_phase_offset");
  require_positive(x, "riccati_phase_offset");
  const double s = x * sph_j(l, x);
  const double c = -x * sph_n(l, x);
  const double asymptotic = x - 0.5 * l * std::numbers::pi;
  return std::remainder(std::atan2(s, c) - asymptotic, 2.0 * std::numbers::pi);
}

} // namespace dscat::special

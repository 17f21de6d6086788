#include <doctest.h>

#include <cmath>
#include <numbers>
#include <stdexcept>

#include "dirac_scatter/special_functions.hpp"

using namespace dscat::special;
using std::numbers::pi;

namespace {

// closed forms for low orders
double cj0(double x) { return std::sin(x) / x; }
double cj1(double x) { return std::sin(x) / (x * x) - std::cos(x) / x; }
double cj2(double x) { return (3.0 / (x * x) - 1.0) * std::sin(x) / x - 3.0 * std::cos(x) / (x * x); }
double cj3(double x)
{
  return (15.0 / (x * x * x) - 6.0 / x) * std::sin(x) / x - (15.0 / (x * x) - 1.0) * std::cos(x) / x;
}
double cn0(double x) { return -std::cos(x) / x; }
double cn1(double x) { return -std::cos(x) / (x * x) - std::sin(x) / x; }
double cn2(double x) { return (-3.0 / (x * x) + 1.0) * std::cos(x) / x - 3.0 * std::sin(x) / (x * x); }

double rel(double got, double want) { return std::abs(got - want) / std::max(1e-300, std::abs(want)); }

} // namespace

TEST_CASE("double factorial")
{
  CHECK(double_factorial(-1) == 1);
  CHECK(double_factorial(0) == 1);
  CHECK(double_factorial(1) == 1);
  CHECK(double_factorial(5) == 15);
  CHECK(double_factorial(8) == 384);
  CHECK(double_factorial_real(11) == doctest::Approx(10395.0));
  CHECK_THROWS_AS(double_factorial(-2), std::domain_error);
  CHECK_THROWS_AS(double_factorial(200), std::domain_error);
}

TEST_CASE("low orders match closed forms")
{
  for (double x : {0.01, 0.3, 1.0, 2.5, 7.0, 19.3, 48.0}) {
    CAPTURE(x);
    CHECK(sph_j(0, x) == doctest::Approx(cj0(x)).epsilon(1e-13));
    CHECK(std::abs(sph_j(1, x) - cj1(x)) < 1e-13 * std::max(1.0, 1.0 / x));
    if (x > 0.2) {
      CHECK(rel(sph_j(2, x), cj2(x)) < 1e-9);
      CHECK(rel(sph_j(3, x), cj3(x)) < 1e-8);
    }
    CHECK(rel(sph_n(0, x), cn0(x)) < 1e-13);
    CHECK(rel(sph_n(1, x), cn1(x)) < 1e-12);
    CHECK(rel(sph_n(2, x), cn2(x)) < 1e-12);
  }
}

TEST_CASE("values at special points")
{
  CHECK(sph_j(0, 0.0) == 1.0);
  for (int n = 1; n < 6; ++n)
    CHECK(sph_j(n, 0.0) == 0.0);
  CHECK(sph_j(1, pi) == doctest::Approx(1.0 / pi).epsilon(1e-14));
  CHECK(std::abs(sph_n(0, pi / 2)) < 1e-16);
  CHECK(sph_n(1, 1.0) == doctest::Approx(-(std::cos(1.0) + std::sin(1.0))).epsilon(1e-14));
  CHECK(sph_n(1, 1.0) == doctest::Approx(-1.3818).epsilon(1e-4));
  CHECK_THROWS_AS(sph_n(0, 0.0), std::domain_error);
  CHECK_THROWS_AS(sph_n(1, -1.0), std::domain_error);
}

TEST_CASE("Wronskian j n' - j' n = 1/x^2")
{
  for (int n = 0; n <= 6; ++n)
    for (double x = 0.1; x <= 50.0; x *= 1.17) {
      const double w = sph_j(n, x) * sph_n_prime(n, x) - sph_j_prime(n, x) * sph_n(n, x);
      CAPTURE(n);
      CAPTURE(x);
      CHECK(rel(w, 1.0 / (x * x)) < 1e-10);
    }
}

TEST_CASE("three-term recurrence for both families")
{
  for (int n = 1; n <= 6; ++n)
    for (double x = 0.1; x <= 50.0; x *= 1.23) {
      CAPTURE(n);
      CAPTURE(x);
      const double jr = (2 * n + 1) / x * sph_j(n, x);
      const double js = sph_j(n - 1, x) + sph_j(n + 1, x);
      CHECK(std::abs(js - jr) < 1e-10 * std::max({std::abs(jr), std::abs(sph_j(n - 1, x)), 1e-300}));
      const double nr = (2 * n + 1) / x * sph_n(n, x);
      const double ns = sph_n(n - 1, x) + sph_n(n + 1, x);
      CHECK(std::abs(ns - nr) < 1e-10 * std::max({std::abs(nr), std::abs(sph_n(n - 1, x))}));
    }
}

TEST_CASE("small-argument limits")
{
  for (int n = 0; n <= 6; ++n)
    for (double x : {1e-3, 3e-3, 9e-3}) {
      CAPTURE(n);
      CAPTURE(x);
      const double df = double_factorial_real(2 * n + 1);
      CHECK(std::abs(sph_j(n, x) / std::pow(x, n) * df - 1.0) < x * x);
      CHECK(std::abs(sph_j_scaled(n, x) * df - 1.0) < x * x);
      const double lim = -double_factorial_real(2 * n - 1);
      CHECK(std::abs(std::pow(x, n + 1) * sph_n(n, x) / lim - 1.0) < x * x);
    }
  for (int n = 0; n <= 6; ++n)
    CHECK(sph_j_scaled(n, 0.0) * double_factorial_real(2 * n + 1) == doctest::Approx(1.0));
}

TEST_CASE("large-argument asymptotics")
{
  const double x = 100.0;
  for (int n = 0; n <= 3; ++n) {
    CHECK(std::abs(x * sph_j(n, x) - std::sin(x - n * pi / 2)) < n * (n + 1) / x + 1e-12);
    CHECK(std::abs(x * sph_n(n, x) + std::cos(x - n * pi / 2)) < n * (n + 1) / x + 1e-12);
  }
}

TEST_CASE("modified functions")
{
  for (double x : {0.05, 0.5, 1.0, 3.0, 12.0}) {
    CAPTURE(x);
    CHECK(mod_sph_k(0, x) == doctest::Approx(std::exp(-x)).epsilon(1e-14));
    CHECK(mod_sph_k(1, x) == doctest::Approx(std::exp(-x) * (1.0 + 1.0 / x)).epsilon(1e-13));
    CHECK(mod_sph_i(0, x) == doctest::Approx(2.0 / pi * std::sinh(x)).epsilon(1e-13));
    CHECK(sph_i(0, x) == doctest::Approx(std::sinh(x) / x).epsilon(1e-13));
    CHECK(sph_i(1, x) == doctest::Approx(std::cosh(x) / x - std::sinh(x) / (x * x)).epsilon(1e-9));
  }
  CHECK(mod_sph_k(1, 1.0) == doctest::Approx(0.73576).epsilon(1e-5));
  // x^{n} K-form -> (2n-1)!! as x -> 0
  for (int n = 0; n <= 4; ++n) {
    const double x = 1e-4;
    CHECK(std::pow(x, n) * mod_sph_k(n, x) == doctest::Approx(double_factorial_real(2 * n - 1)).epsilon(1e-3));
  }
  // growth and decay
  CHECK(mod_sph_k(2, 30.0) / mod_sph_k(2, 29.0) == doctest::Approx(std::exp(-1.0)).epsilon(1e-2));
  CHECK(mod_sph_i(2, 30.0) / mod_sph_i(2, 29.0) == doctest::Approx(std::exp(1.0)).epsilon(1e-2));
  CHECK_THROWS_AS(mod_sph_k(0, 0.0), std::domain_error);
  CHECK_THROWS_AS(mod_sph_i(0, -1.0), std::domain_error);
}

TEST_CASE("Riccati phase offset")
{
  for (int l = 0; l <= 4; ++l)
    for (double x : {0.3, 2.0, 9.0, 60.0}) {
      CAPTURE(l);
      CAPTURE(x);
      const double ph = x - l * pi / 2 + riccati_phase_offset(l, x);
      const double M = std::hypot(x * sph_j(l, x), x * sph_n(l, x));
      CHECK(std::abs(x * sph_j(l, x) - M * std::sin(ph)) < 1e-12 * M);
      CHECK(std::abs(-x * sph_n(l, x) - M * std::cos(ph)) < 1e-12 * M);
    }
  CHECK(std::abs(riccati_phase_offset(0, 3.0)) < 1e-15);
  CHECK(riccati_phase_offset(2, 500.0) == doctest::Approx(3.0 / 500.0).epsilon(1e-2));
}

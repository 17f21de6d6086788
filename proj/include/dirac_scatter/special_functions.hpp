#pragma once

#include <cstdint>

/// Spherical Bessel functions of real argument and the limit identities used
/// by the scattering and zero-momentum solvers. All routines are pure.
namespace dscat::special {

/// n!! for n >= -1, with (-1)!! = 0!! = 1. Throws std::domain_error for n < -1
/// or when the result does not fit in 64 bits.
std::int64_t double_factorial(int n);

/// Floating-point n!!, same domain as double_factorial but without overflow.
double double_factorial_real(int n);

/// Regular spherical Bessel function j_n(x). Total for n >= 0; j_n(0) = delta_n0.
double sph_j(int n, double x);

/// j_n(x) / x^n, finite at the origin where it equals 1/(2n+1)!!.
double sph_j_scaled(int n, double x);

/// Irregular spherical Bessel function n_n(x), x > 0.
double sph_n(int n, double x);

/// First derivatives with respect to x.
double sph_j_prime(int n, double x);
double sph_n_prime(int n, double x);

/// Modified spherical Bessel function of the first kind,
/// i_n(x) = sqrt(pi/2x) I_{n+1/2}(x), so that j_n(ix) = i^n i_n(x).
double sph_i(int n, double x);

/// i_n(x) / x^n, finite at the origin where it equals 1/(2n+1)!!.
double sph_i_scaled(int n, double x);

/// sqrt(2x/pi) K_{n+1/2}(x), x > 0. Order 0 is exp(-x); at small x the value
/// behaves as (2n-1)!! x^{-n}.
double mod_sph_k(int n, double x);

/// sqrt(2x/pi) I_{n+1/2}(x), x > 0. Order 0 is (2/pi) sinh(x).
double mod_sph_i(int n, double x);

/// Phase offset phi of the free outgoing Riccati-Bessel pair:
///   x j_l(x) = M sin(x - l pi/2 + phi),  -x n_l(x) = M cos(x - l pi/2 + phi),
/// with phi -> 0 as x -> infinity (phi ~ l(l+1)/2x). Requires x > 0.
double riccati_phase_offset(int l, double x);

} // namespace dscat::special

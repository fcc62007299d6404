// Copyright 2026 the gfmix authors
// SPDX-License-Identifier: Apache-2.0

#ifndef GFMIX_SPECIAL_HPP
#define GFMIX_SPECIAL_HPP

#include <complex>

namespace gfmix::special {

inline constexpr double sqrt_pi = 1.7724538509055160273;
inline constexpr double two_over_sqrt_pi = 1.1283791670955125739;
inline constexpr double inv_sqrt_2pi = 0.3989422804014326779;

/// erf'(u) = (2/sqrt(pi)) exp(-u^2).
inline double erf_prime(double u) { return two_over_sqrt_pi * std::exp(-u * u); }

/// Regularized lower incomplete gamma P(a,x), a > 0, x >= 0.
double gamma_p(double a, double x);

/// Regularized upper incomplete gamma Q(a,x) = 1 - P(a,x).
double gamma_q(double a, double x);

/// Unnormalized upper incomplete gamma Gamma(a,x) for real a (negative
/// values included) and x > 0.
double upper_gamma(double a, double x);

/// Gamma(z) for complex z with Re z > 0 (or z away from the poles).
std::complex<double> complex_gamma(std::complex<double> z);

/// Standard normal CDF.
double normal_cdf(double z);

} // namespace gfmix::special

#endif

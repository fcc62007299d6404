// Copyright 2026 the gfmix authors
// SPDX-License-Identifier: Apache-2.0

#ifndef GFMIX_DEFUN_HPP
#define GFMIX_DEFUN_HPP

#include "gfmix/quadrature.hpp"

#include <complex>
#include <cstdint>
#include <random>
#include <string>
#include <vector>

namespace gfmix::defun {

/// Differentiated Error Function(a, b): the symmetric distribution on the
/// reals whose MGF is (exp(b t^2) - exp(a t^2)) / ((b - a) t^2). Mean 0,
/// variance a + b; equivalently a Normal(0, 2V) scale mixture with
/// V ~ Uniform(a, b).
struct DifferentiatedErrorFunction {
    double a;
    double b;
    std::vector<std::string> free_params{"a", "b"};

    /// Requires 0 <= a < b; a == b is rejected (that limit is Normal(0, 2a)).
    static DifferentiatedErrorFunction make(double a, double b);

    std::string describe() const;
};

double pdf(const DifferentiatedErrorFunction& d, double y);
/// ln pdf; finite in the far tails where pdf underflows.
double log_pdf(const DifferentiatedErrorFunction& d, double y);
/// Quadrature CDF anchored at CDF(0) = 1/2.
double cdf(const DifferentiatedErrorFunction& d, double y, const QuadratureConfig& cfg = {});
/// Real-valued, positive, <= 1.
double cf_real(const DifferentiatedErrorFunction& d, double omega);
std::complex<double> cf(const DifferentiatedErrorFunction& d, double omega);
/// Throws std::range_error once b t^2 overflows the exponential range.
double mgf(const DifferentiatedErrorFunction& d, double t);

struct Moments {
    double mean;
    double variance;
};
Moments moments(const DifferentiatedErrorFunction& d);

std::vector<double> sample(const DifferentiatedErrorFunction& d, std::size_t n,
                           std::uint64_t seed);
double sample_one(const DifferentiatedErrorFunction& d, std::mt19937_64& gen);

/// Evaluates r(y) = pdf(y) * y^2 * exp(y^2 / 4b) on [y_lo, y_hi]; bounded
/// ratios evidence the y^-2 exp(-y^2/4b) tail order.
struct TailEnvelopeReport {
    double y_lo = 0.0;
    double y_hi = 0.0;
    std::size_t samples = 0;
    double min_ratio = 0.0;
    double max_ratio = 0.0;
    bool passed = false;
    bool inconclusive = false;
};

/// Pre: 5 sqrt(b) <= y_lo < y_hi <= 10 sqrt(b), samples >= 2.
TailEnvelopeReport tail_envelope_check(const DifferentiatedErrorFunction& d, double y_lo,
                                       double y_hi, std::size_t samples);

} // namespace gfmix::defun

#endif

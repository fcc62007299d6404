// Copyright 2026 the gfmix authors
// SPDX-License-Identifier: Apache-2.0

#include "gfmix/defun.hpp"

#include "gfmix/errors.hpp"
#include "gfmix/special.hpp"
#include "rng.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>
#include <stdexcept>

namespace gfmix::defun {

namespace {

using special::sqrt_pi;
using special::two_over_sqrt_pi;

// Asymptotic bracket A(u) with sqrt(c) erf'(u) - y erfc(u)
//   = (2 sqrt(c)/sqrt(pi)) exp(-u^2) A(u),  u = y/(2 sqrt(c)),
// A(u) = sum_{n>=1} (-1)^{n+1} (2n-1)!! / (2u^2)^n. Truncated at the
// smallest term; for u >= 6 that term is below 2e-15 of the leading one.
double tail_bracket(double u) {
    const double z = 1.0 / (2.0 * u * u);
    double term = z;
    double sum = z;
    for (int n = 2; n < 64; ++n) {
        const double next = -term * (2.0 * n - 1.0) * z;
        if (std::abs(next) >= std::abs(term)) break;
        sum += next;
        term = next;
        if (std::abs(next) < 1e-18 * std::abs(sum)) break;
    }
    return sum;
}

// T_c(y) = sqrt(c) erf'(u) - y erfc(u) for y > 0; T_0 = 0. The pdf is
// (T_b - T_a) / (2 (b - a)).
double tail_term(double c, double y) {
    if (c == 0.0) return 0.0;
    const double sc = std::sqrt(c);
    const double u = y / (2.0 * sc);
    if (u < 6.0) return sc * special::erf_prime(u) - y * std::erfc(u);
    return two_over_sqrt_pi * sc * std::exp(-u * u) * tail_bracket(u);
}

double log_tail_term(double c, double y) {
    const double sc = std::sqrt(c);
    const double u = y / (2.0 * sc);
    if (u < 6.0) {
        const double t = tail_term(c, y);
        return t > 0.0 ? std::log(t) : -std::numeric_limits<double>::infinity();
    }
    return std::log(two_over_sqrt_pi * sc * tail_bracket(u)) - u * u;
}

} // namespace

DifferentiatedErrorFunction DifferentiatedErrorFunction::make(double a, double b) {
    if (!(a >= 0.0) || !std::isfinite(a) || !std::isfinite(b))
        throw std::domain_error("defun: require 0 <= a < b");
    if (a == b)
        throw std::domain_error(
            "defun: a == b is degenerate (that limit is Normal(0, 2a); use the kernel catalog)");
    if (!(a < b)) throw std::domain_error("defun: require a < b");
    return DifferentiatedErrorFunction{a, b};
}

std::string DifferentiatedErrorFunction::describe() const {
    std::ostringstream os;
    os << "defun:a=" << a << ",b=" << b;
    if (free_params != std::vector<std::string>{"a", "b"}) {
        os << ",free=";
        for (std::size_t i = 0; i < free_params.size(); ++i)
            os << (i ? "," : "") << free_params[i];
    }
    return os.str();
}

double pdf(const DifferentiatedErrorFunction& d, double y) {
    const double ya = std::abs(y);
    if (ya == 0.0) return 1.0 / (sqrt_pi * (std::sqrt(d.a) + std::sqrt(d.b)));
    const double f = (tail_term(d.b, ya) - tail_term(d.a, ya)) / (2.0 * (d.b - d.a));
    return std::max(f, 0.0);
}

double log_pdf(const DifferentiatedErrorFunction& d, double y) {
    const double f = pdf(d, y);
    if (f > 0.0) return std::log(f);
    // Far tail: the b component dominates, the a component is negligible.
    const double ya = std::abs(y);
    return log_tail_term(d.b, ya) - std::log(2.0 * (d.b - d.a));
}

double cdf(const DifferentiatedErrorFunction& d, double y, const QuadratureConfig& cfg) {
    cfg.validate();
    if (y == 0.0) return 0.5;
    const double ya = std::abs(y);
    const double hi = std::min(ya, 14.0 * std::sqrt(d.b));
    const double mass =
        integrate([&](double t) { return pdf(d, t); }, 0.0, hi, cfg.abs_tol, cfg.rel_tol,
                  cfg.max_subdivisions)
            .value;
    const double c = std::clamp(0.5 + mass, 0.5, 1.0);
    return y > 0.0 ? c : 1.0 - c;
}

double cf_real(const DifferentiatedErrorFunction& d, double omega) {
    const double w2 = omega * omega;
    const double span = (d.b - d.a) * w2;
    if (span == 0.0) return 1.0;
    if (span <= 1.0) return std::exp(-d.b * w2) * std::expm1(span) / span;
    return (std::exp(-d.a * w2) - std::exp(-d.b * w2)) / span;
}

std::complex<double> cf(const DifferentiatedErrorFunction& d, double omega) {
    return {cf_real(d, omega), 0.0};
}

double mgf(const DifferentiatedErrorFunction& d, double t) {
    const double t2 = t * t;
    if (d.b * t2 > 700.0)
        throw std::range_error("defun mgf: b t^2 = " + std::to_string(d.b * t2) +
                               " exceeds the exponential range");
    const double span = (d.b - d.a) * t2;
    if (span == 0.0) return 1.0;
    if (span <= 1.0) return std::exp(d.a * t2) * std::expm1(span) / span;
    return (std::exp(d.b * t2) - std::exp(d.a * t2)) / span;
}

Moments moments(const DifferentiatedErrorFunction& d) { return {0.0, d.a + d.b}; }

double sample_one(const DifferentiatedErrorFunction& d, std::mt19937_64& g) {
    const double v = d.a + (d.b - d.a) * rng::unit_uniform(g);
    return std::sqrt(2.0 * v) * rng::unit_normal(g);
}

std::vector<double> sample(const DifferentiatedErrorFunction& d, std::size_t n,
                           std::uint64_t seed) {
    if (n < 1) throw std::invalid_argument("defun sample: n must be >= 1");
    std::mt19937_64 g(seed);
    std::vector<double> out;
    out.reserve(n);
    for (std::size_t i = 0; i < n; ++i) out.push_back(sample_one(d, g));
    return out;
}

TailEnvelopeReport tail_envelope_check(const DifferentiatedErrorFunction& d, double y_lo,
                                       double y_hi, std::size_t samples) {
    if (!(y_lo < y_hi)) throw std::invalid_argument("tail_envelope_check: require y_lo < y_hi");
    const double sb = std::sqrt(d.b);
    if (y_lo < 5.0 * sb - 1e-9 || y_hi > 10.0 * sb + 1e-9)
        throw std::invalid_argument(
            "tail_envelope_check: window must lie within [5 sqrt(b), 10 sqrt(b)]");
    if (samples < 2) throw std::invalid_argument("tail_envelope_check: need at least 2 samples");

    TailEnvelopeReport rep;
    rep.y_lo = y_lo;
    rep.y_hi = y_hi;
    rep.samples = samples;
    double lo = std::numeric_limits<double>::infinity();
    double hi = 0.0;
    bool any = false;
    for (std::size_t i = 0; i < samples; ++i) {
        const double y = y_lo + (y_hi - y_lo) * static_cast<double>(i) /
                                    static_cast<double>(samples - 1);
        const double log_r = log_pdf(d, y) + 2.0 * std::log(y) + y * y / (4.0 * d.b);
        if (!std::isfinite(log_r)) continue;
        const double r = std::exp(log_r);
        lo = std::min(lo, r);
        hi = std::max(hi, r);
        any = true;
    }
    if (!any || lo <= 0.0) {
        rep.inconclusive = true;
        return rep;
    }
    rep.min_ratio = lo;
    rep.max_ratio = hi;
    rep.passed = std::isfinite(hi) && hi / lo <= 4.0;
    return rep;
}

} // namespace gfmix::defun

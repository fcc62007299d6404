// Copyright 2026 the gfmix authors
// SPDX-License-Identifier: Apache-2.0

// Kernel samplers: inversion where the quantile has a closed form, standard
// transformations elsewhere. Only determinism under the seed is contractual.

#include "gfmix/kernels.hpp"

#include "rng.hpp"

#include <cmath>
#include <stdexcept>

namespace gfmix::kernels {

namespace {

using rng::unit_normal;
using rng::unit_uniform;

double sample_gamma(std::mt19937_64& g, double r, double theta) {
    // Marsaglia-Tsang squeeze; boosted to r+1 with a power correction for r < 1.
    if (r < 1.0) {
        const double u = unit_uniform(g);
        return sample_gamma(g, r + 1.0, theta) * std::pow(u, 1.0 / r);
    }
    const double d = r - 1.0 / 3.0;
    const double c = 1.0 / std::sqrt(9.0 * d);
    for (;;) {
        double x, v;
        do {
            x = unit_normal(g);
            v = 1.0 + c * x;
        } while (v <= 0.0);
        v = v * v * v;
        const double u = unit_uniform(g);
        if (u < 1.0 - 0.0331 * x * x * x * x) return d * v * theta;
        if (std::log(u) < 0.5 * x * x + d * (1.0 - v + std::log(v))) return d * v * theta;
    }
}

double sample_poisson(std::mt19937_64& g, double lambda) {
    // Sequential inversion; large means are split using additivity.
    double total = 0.0;
    while (lambda > 30.0) {
        double chunk = 0.0;
        double t = std::exp(-30.0);
        double cum = t;
        const double u = unit_uniform(g);
        while (cum < u) {
            chunk += 1.0;
            t *= 30.0 / chunk;
            cum += t;
            if (chunk > 500.0) break;
        }
        total += chunk;
        lambda -= 30.0;
    }
    double t = std::exp(-lambda);
    double cum = t;
    double n = 0.0;
    const double u = unit_uniform(g);
    while (cum < u) {
        n += 1.0;
        t *= lambda / n;
        cum += t;
        if (n > 1000.0 + 20.0 * lambda) break;
    }
    return total + n;
}

double sample_geometric(std::mt19937_64& g, double p) {
    // P(G = k) = (1-p) p^k, k >= 0.
    const double u = unit_uniform(g);
    return std::floor(std::log(u) / std::log(p));
}

double sample_logarithmic(std::mt19937_64& g, double q) {
    const double L = -std::log1p(-q);
    const double u = unit_uniform(g);
    double n = 1.0;
    double term = q / L;
    double cum = term;
    while (cum < u && n < 100000.0) {
        term *= q * n / (n + 1.0);
        n += 1.0;
        cum += term;
    }
    return n;
}

} // namespace

double sample_one(const KernelDistribution& d, std::mt19937_64& g) {
    switch (d.family) {
    case Family::Poisson: return sample_poisson(g, d.param("lambda"));
    case Family::NegativeBinomial: {
        // Gamma-Poisson representation.
        const double r = d.param("r"), p = d.param("p");
        const double mean = sample_gamma(g, r, p / (1.0 - p));
        return sample_poisson(g, mean);
    }
    case Family::Gamma: return sample_gamma(g, d.param("r"), d.param("theta"));
    case Family::Exponential: return -d.param("theta") * std::log1p(-unit_uniform(g));
    case Family::Weibull:
        return d.param("theta") *
               std::pow(-std::log1p(-unit_uniform(g)), 1.0 / d.param("tau"));
    case Family::Pareto1:
        return d.param("theta") * std::pow(1.0 - unit_uniform(g), -1.0 / d.param("alpha"));
    case Family::Normal:
        return d.param("m") + std::sqrt(d.param("sigma2")) * unit_normal(g);
    case Family::NormalMeanVariance:
        return d.param("m") + std::sqrt(d.param("kappa") * d.param("m")) * unit_normal(g);
    case Family::Laplace: {
        const double u = unit_uniform(g);
        const double m = d.param("m"), s = d.param("sigma");
        return u < 0.5 ? m + s * std::log(2.0 * u) : m - s * std::log(2.0 * (1.0 - u));
    }
    case Family::Gumbel:
        return d.param("m") - d.param("sigma") * std::log(-std::log(unit_uniform(g)));
    case Family::Logarithmic: return sample_logarithmic(g, d.param("q"));
    case Family::DiscreteLaplace: {
        // Difference of two iid geometrics.
        const double p = d.param("p");
        const double g1 = sample_geometric(g, p);
        const double g2 = sample_geometric(g, p);
        return g1 - g2;
    }
    case Family::Uniform: {
        const double a = d.param("a"), b = d.param("b");
        return a + (b - a) * unit_uniform(g);
    }
    }
    throw std::logic_error("unreachable");
}

std::vector<double> sample(const KernelDistribution& d, std::size_t n, std::uint64_t seed) {
    if (n < 1) throw std::invalid_argument("sample: n must be >= 1");
    std::mt19937_64 g(seed);
    std::vector<double> out;
    out.reserve(n);
    for (std::size_t i = 0; i < n; ++i) out.push_back(sample_one(d, g));
    return out;
}

} // namespace gfmix::kernels

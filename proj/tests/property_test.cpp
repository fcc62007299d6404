// Copyright 2026 the gfmix authors
// SPDX-License-Identifier: Apache-2.0

// Randomized property checks with a fixed seed: domain-respecting parameter
// generators drive the catalog invariants at points the grid tests miss.

#include "gfmix/accessibility.hpp"
#include "gfmix/defun.hpp"
#include "gfmix/dist_spec.hpp"
#include "gfmix/kernels.hpp"

#include "app.hpp"

#include <doctest.h>

#include <cmath>
#include <random>

using namespace gfmix;
using kernels::Family;
using kernels::KernelDistribution;

namespace {

struct Gen {
    std::mt19937_64 rng{20260808};

    double uniform(double lo, double hi) {
        return lo + (hi - lo) * std::uniform_real_distribution<double>(0.0, 1.0)(rng);
    }
    double log_uniform(double lo, double hi) {
        return std::exp(uniform(std::log(lo), std::log(hi)));
    }

    KernelDistribution any_kernel() {
        switch (std::uniform_int_distribution<int>(0, 12)(rng)) {
        case 0: return KernelDistribution::make(Family::Poisson, {{"lambda", log_uniform(0.1, 8)}});
        case 1:
            return KernelDistribution::make(
                Family::NegativeBinomial, {{"r", log_uniform(0.3, 6)}, {"p", uniform(0.05, 0.95)}});
        case 2:
            return KernelDistribution::make(
                Family::Gamma, {{"r", log_uniform(0.3, 6)}, {"theta", log_uniform(0.2, 4)}});
        case 3:
            return KernelDistribution::make(Family::Exponential, {{"theta", log_uniform(0.2, 4)}});
        case 4:
            return KernelDistribution::make(
                Family::Weibull, {{"theta", log_uniform(0.3, 3)}, {"tau", log_uniform(0.6, 3)}});
        case 5:
            return KernelDistribution::make(
                Family::Pareto1, {{"alpha", log_uniform(0.5, 4)}, {"theta", log_uniform(0.3, 3)}});
        case 6:
            return KernelDistribution::make(
                Family::Normal, {{"m", uniform(-3, 3)}, {"sigma2", log_uniform(0.2, 4)}});
        case 7:
            return KernelDistribution::make(
                Family::NormalMeanVariance,
                {{"m", log_uniform(0.3, 4)}, {"kappa", log_uniform(0.3, 3)}});
        case 8:
            return KernelDistribution::make(
                Family::Laplace, {{"m", uniform(-3, 3)}, {"sigma", log_uniform(0.2, 3)}});
        case 9:
            return KernelDistribution::make(
                Family::Gumbel, {{"m", uniform(-3, 3)}, {"sigma", log_uniform(0.2, 3)}});
        case 10:
            return KernelDistribution::make(Family::Logarithmic, {{"q", uniform(0.05, 0.9)}});
        case 11:
            return KernelDistribution::make(Family::DiscreteLaplace, {{"p", uniform(0.05, 0.9)}});
        default: {
            const double a = uniform(0.0, 2.0);
            return KernelDistribution::make(Family::Uniform,
                                            {{"a", a}, {"b", a + log_uniform(0.2, 3)}});
        }
        }
    }
};

} // namespace

TEST_CASE("cf: modulus bound, unit value at zero, conjugate symmetry") {
    Gen gen;
    for (int i = 0; i < 300; ++i) {
        const auto d = gen.any_kernel();
        // Numeric cf families get a looser modulus slack.
        const bool numeric =
            d.family == Family::Weibull || d.family == Family::Pareto1;
        const double slack = numeric ? 1e-7 : 1e-12;
        CHECK(std::abs(kernels::cf(d, 0.0) - std::complex<double>(1.0, 0.0)) < 1e-12);
        const double w = gen.uniform(0.01, 6.0);
        const auto v = kernels::cf(d, w);
        CHECK(std::abs(v) <= 1.0 + slack);
        CHECK(std::abs(kernels::cf(d, -w) - std::conj(v)) < 10.0 * slack);
        CHECK(std::isfinite(v.real()));
        CHECK(std::isfinite(v.imag()));
    }
}

TEST_CASE("mgf: exactly one at zero, positive inside a sampled strip point") {
    Gen gen;
    for (int i = 0; i < 300; ++i) {
        const auto d = gen.any_kernel();
        CHECK(kernels::mgf(d, 0.0) == 1.0);
        const auto strip = kernels::mgf_strip(d);
        const double lo = std::max(strip.lo, -3.0);
        const double hi = std::min(strip.hi, 3.0);
        const double s = gen.uniform(lo + 0.05 * (hi - lo), hi - 0.05 * (hi - lo));
        const double m = kernels::mgf(d, s);
        CHECK(m > 0.0);
        CHECK(std::isfinite(m));
    }
}

TEST_CASE("cdf: bounded, nondecreasing on random pairs") {
    Gen gen;
    for (int i = 0; i < 300; ++i) {
        const auto d = gen.any_kernel();
        double x1 = gen.uniform(-8.0, 12.0);
        double x2 = gen.uniform(-8.0, 12.0);
        if (x1 > x2) std::swap(x1, x2);
        const double c1 = kernels::cdf(d, x1);
        const double c2 = kernels::cdf(d, x2);
        CHECK(c1 >= 0.0);
        CHECK(c2 <= 1.0);
        CHECK(c1 <= c2 + 1e-12);
    }
}

TEST_CASE("laplace transform: in (0,1], nonincreasing, equals mgf(-s)") {
    Gen gen;
    for (int i = 0; i < 200; ++i) {
        KernelDistribution d = gen.any_kernel();
        while (!(d.family == Family::Gamma || d.family == Family::Exponential ||
                 d.family == Family::Weibull || d.family == Family::Pareto1))
            d = gen.any_kernel();
        double s1 = gen.log_uniform(0.05, 4.0);
        double s2 = gen.log_uniform(0.05, 4.0);
        if (s1 > s2) std::swap(s1, s2);
        const double l1 = kernels::laplace_transform(d, s1);
        const double l2 = kernels::laplace_transform(d, s2);
        CHECK(l1 > 0.0);
        CHECK(l1 <= 1.0);
        CHECK(l2 <= l1 * (1.0 + 1e-12));
        CHECK(l1 == doctest::Approx(kernels::mgf(d, -s1)).epsilon(1e-9));
    }
}

TEST_CASE("mapping identity at random strip-interior points") {
    Gen gen;
    const auto names = accessibility::builtin_mapping_names();
    for (int i = 0; i < 400; ++i) {
        const auto& name = names[static_cast<std::size_t>(
            std::uniform_int_distribution<int>(0, 4)(gen.rng))];
        const auto m = accessibility::make_builtin(name);
        std::vector<double> alpha;
        if (m.arity() == 1) {
            alpha = {gen.log_uniform(0.25, 4.0)};
        } else {
            const double a = gen.uniform(0.1, 2.0);
            alpha = {a, a + gen.log_uniform(0.2, 3.0)};
        }
        const double s = gen.uniform(0.0, 0.9 * m.epsilon1(alpha));
        const double mx = m.source.mgf_at(alpha, s);
        const double my = m.target.mgf_at(m.eta(alpha), m.xi(s));
        CHECK(std::abs(my - mx) <= 1e-10 * std::max(1.0, std::abs(mx)));
        // Inverse compositions at the same random point.
        const auto back = m.eta_inv(m.eta(alpha));
        for (std::size_t k = 0; k < alpha.size(); ++k)
            CHECK(std::abs(back[k] - alpha[k]) <= 1e-11 * std::max(1.0, std::abs(alpha[k])));
        CHECK(std::abs(m.xi_inv(m.xi(s)) - s) <= 1e-11 * std::max(1.0, s));
    }
}

TEST_CASE("defun: symmetry, transform evenness, peak value at random (a,b)") {
    Gen gen;
    for (int i = 0; i < 300; ++i) {
        const double a = gen.uniform(0.0, 3.0);
        const double b = a + gen.log_uniform(0.1, 4.0);
        const auto d = defun::DifferentiatedErrorFunction::make(a, b);
        const double y = gen.uniform(0.0, 8.0 * std::sqrt(b));
        CHECK(defun::pdf(d, y) == defun::pdf(d, -y));
        CHECK(defun::pdf(d, y) >= 0.0);
        const double w = gen.uniform(0.0, 6.0);
        CHECK(defun::cf_real(d, w) == defun::cf_real(d, -w));
        CHECK(defun::cf_real(d, w) > 0.0);
        CHECK(defun::cf_real(d, w) <= 1.0);
        const double t = gen.uniform(0.0, 1.0);
        CHECK(defun::mgf(d, t) == defun::mgf(d, -t));
        CHECK(defun::mgf(d, t) >= 1.0);
        const double peak = 1.0 / (std::sqrt(M_PI) * (std::sqrt(a) + std::sqrt(b)));
        CHECK(defun::pdf(d, 0.0) == doctest::Approx(peak).epsilon(1e-13));
        CHECK(defun::moments(d).variance == a + b);
    }
}

TEST_CASE("csv formatting round-trips random magnitudes at 12 digits") {
    Gen gen;
    for (int i = 0; i < 500; ++i) {
        const double sign = gen.uniform(0.0, 1.0) < 0.5 ? -1.0 : 1.0;
        const double v = sign * gen.log_uniform(1e-12, 1e12);
        const std::string text = cli::format12(v);
        const double reparsed = std::stod(text);
        CHECK(cli::format12(reparsed) == text);
        CHECK(std::abs(reparsed - v) <= 5e-12 * std::abs(v));
    }
}

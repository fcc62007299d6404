// Copyright 2026 the gfmix authors
// SPDX-License-Identifier: Apache-2.0

#include "gfmix/transforms.hpp"

#include "gfmix/errors.hpp"

#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>
#include <string>

namespace gfmix::transforms {

namespace {

using cplx = std::complex<double>;
using kernels::Family;
using kernels::KernelDistribution;

constexpr double kInf = std::numeric_limits<double>::infinity();

void check_strip(const KernelDistribution& d, double s) {
    const kernels::Interval strip = kernels::mgf_strip(d);
    if (s > strip.lo && s < strip.hi) return;
    if (s == 0.0) return;
    throw DivergenceError("numeric_mgf(" + std::string(kernels::family_name(d.family)) +
                          "): s = " + std::to_string(s) + " outside convergence strip (" +
                          std::to_string(strip.lo) + ", " + std::to_string(strip.hi) + ")");
}

double discrete_series(const KernelDistribution& d, double s) {
    auto run = [&](double first, double step) {
        double sum = 0.0;
        double n = first;
        for (long i = 0; i < 10'000'000; ++i, n += step) {
            const double term = std::exp(s * n) * kernels::pdf(d, n);
            sum += term;
            if (term > 1e100)
                throw DivergenceError("numeric_mgf: series terms grow without bound at n = " +
                                      std::to_string(n));
            if (term < 1e-17 * (sum + 1e-300) && std::abs(n - first) > 2.0 + std::abs(first))
                return sum;
        }
        throw ConvergenceError("numeric_mgf: series did not converge");
    };
    const kernels::Interval sup = kernels::support(d);
    if (d.family == Family::DiscreteLaplace) return run(0.0, 1.0) + run(-1.0, -1.0);
    return run(sup.lo, 1.0);
}

double start_scale(const KernelDistribution& d) {
    switch (d.family) {
    case Family::Gamma: return d.param("theta") * (d.param("r") + 3.0);
    case Family::Exponential: return 3.0 * d.param("theta");
    case Family::Weibull:
        return 3.0 * d.param("theta") * std::pow(3.0, 1.0 / d.param("tau"));
    case Family::Pareto1: return 4.0 * d.param("theta");
    case Family::Normal: return std::abs(d.param("m")) + 6.0 * std::sqrt(d.param("sigma2"));
    case Family::NormalMeanVariance:
        return d.param("m") + 6.0 * std::sqrt(d.param("kappa") * d.param("m"));
    case Family::Laplace: return std::abs(d.param("m")) + 8.0 * d.param("sigma");
    case Family::Gumbel: return std::abs(d.param("m")) + 20.0 * d.param("sigma");
    default: return 8.0;
    }
}

double continuous_quadrature(const KernelDistribution& d, double s, const QuadratureConfig& cfg) {
    auto g = [&](double x) { return std::exp(s * x) * kernels::pdf(d, x); };
    const kernels::Interval sup = kernels::support(d);

    double lo = sup.lo;
    double hi = sup.hi;
    if (hi == kInf) {
        double peak = 1e-300;
        const double scale = start_scale(d);
        for (double f : {0.1, 0.5, 1.0, 2.0}) {
            const double x = (std::isfinite(lo) ? lo : 0.0) + f * scale;
            peak = std::max(peak, std::abs(g(x)));
        }
        hi = grow_until_negligible(g, (std::isfinite(lo) ? lo : 0.0) + scale, 1e-20 * peak);
    }
    if (lo == -kInf) {
        auto gm = [&](double t) { return g(-t); };
        double peak = std::abs(g(0.0)) + 1e-300;
        lo = -grow_until_negligible(gm, start_scale(d), 1e-20 * peak);
    }
    return integrate(g, lo, hi, cfg.abs_tol, cfg.rel_tol, cfg.max_subdivisions).value;
}

} // namespace

CharacteristicFunction::CharacteristicFunction(std::function<std::complex<double>(double)> ev,
                                               CfSymmetry symmetry)
    : evaluator_(std::move(ev)), symmetry_(symmetry) {
    if (!evaluator_) throw std::invalid_argument("CharacteristicFunction: empty evaluator");
    if (std::abs(evaluator_(0.0) - cplx(1.0, 0.0)) > 1e-12)
        throw std::invalid_argument("CharacteristicFunction: evaluator(0) must be 1");
}

double gil_pelaez_pdf(const CharacteristicFunction& cf, double y, const QuadratureConfig& cfg,
                      GilPelaezInfo* info) {
    cfg.validate();
    std::function<cplx(double)> psi;
    if (cf.symmetry() == CfSymmetry::RealSymmetric)
        psi = [&cf](double w) { return cplx(cf(w).real(), 0.0); };
    else
        psi = [&cf](double w) { return cf(w); };

    const FourierResult r = fourier_integral(psi, y, cfg);
    const double raw = r.value.real() / std::numbers::pi;
    const double clamped = std::max(raw, 0.0);
    if (info) {
        info->raw = raw;
        info->clamped = raw < 0.0;
        info->omega_max = r.omega_max;
        info->error_estimate = r.error / std::numbers::pi;
        info->subdivisions = r.subdivisions;
    }
    return clamped;
}

double numeric_mgf(const KernelDistribution& d, double s, const QuadratureConfig& cfg) {
    cfg.validate();
    check_strip(d, s);
    if (d.discrete()) return discrete_series(d, s);
    return continuous_quadrature(d, s, cfg);
}

} // namespace gfmix::transforms

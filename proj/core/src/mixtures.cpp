// Copyright 2026 the gfmix authors
// SPDX-License-Identifier: Apache-2.0

#include "gfmix/mixtures.hpp"

#include "gfmix/errors.hpp"
#include "gfmix/expr.hpp"
#include "gfmix/special.hpp"
#include "rng.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace gfmix::mixtures {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

double require_value(const ParsedSpec& spec, const std::string& key) {
    for (const auto& [k, v] : spec.entries)
        if (k == key) return std::stod(v);
    throw std::invalid_argument("mixing spec: missing '" + key + "' in '" + spec.head + "'");
}

bool maybe_value(const ParsedSpec& spec, const std::string& key, double* out) {
    for (const auto& [k, v] : spec.entries)
        if (k == key) {
            *out = std::stod(v);
            return true;
        }
    return false;
}

} // namespace

MixingDensity::MixingDensity(std::function<double(double)> density, double lo, double hi,
                             std::string description, const QuadratureConfig& cfg)
    : density_(std::move(density)), lo_(lo), hi_(hi), description_(std::move(description)) {
    if (!density_) throw std::invalid_argument("MixingDensity: empty density");
    if (!(lo_ < hi_) || !std::isfinite(lo_) || !std::isfinite(hi_))
        throw std::invalid_argument("MixingDensity: domain must be a finite interval");
    // 1e-9 sits above the noise floor of finite-difference pushforward
    // densities while still validating the 1e-8 normalization contract.
    const double mass =
        integrate(density_, lo_, hi_, 1e-9, 1e-9, cfg.max_subdivisions).value;
    if (std::abs(mass - 1.0) > 1e-8)
        throw std::invalid_argument("MixingDensity '" + description_ +
                                    "': density integrates to " + std::to_string(mass) +
                                    ", not 1");
}

MixingDensity MixingDensity::parse(std::string_view text, const QuadratureConfig& cfg) {
    const ParsedSpec spec = split_spec(text);

    if (spec.head == "gamma") {
        const double r = require_value(spec, "r");
        const double theta = require_value(spec, "theta");
        auto d = kernels::KernelDistribution::make(kernels::Family::Gamma,
                                                   {{"r", r}, {"theta", theta}});
        // Truncate where the upper tail mass drops below 1e-15.
        double hi = theta * (r + 10.0 * std::sqrt(r) + 10.0);
        while (special::gamma_q(r, hi / theta) > 1e-15) hi *= 2.0;
        return MixingDensity([d](double x) { return kernels::pdf(d, x); }, 0.0, hi,
                             std::string(text), cfg);
    }

    if (spec.head == "normal" || spec.head == "truncnormal") {
        const double m = require_value(spec, "m");
        const double sigma = require_value(spec, "sigma");
        if (!(sigma > 0.0)) throw std::invalid_argument("mixing spec: sigma must be > 0");
        double lo = m - 8.5 * sigma;
        double hi = m + 8.5 * sigma;
        maybe_value(spec, "lo", &lo);
        maybe_value(spec, "hi", &hi);
        const double zl = (lo - m) / sigma;
        const double zh = (hi - m) / sigma;
        const double mass = special::normal_cdf(zh) - special::normal_cdf(zl);
        if (!(mass > 0.0))
            throw std::invalid_argument("mixing spec: empty truncation window");
        auto density = [m, sigma, mass](double x) {
            const double z = (x - m) / sigma;
            return special::inv_sqrt_2pi / sigma * std::exp(-0.5 * z * z) / mass;
        };
        return MixingDensity(density, lo, hi, std::string(text), cfg);
    }

    if (spec.head == "expr") {
        std::string body;
        for (const auto& [k, v] : spec.entries)
            if (k == "f") body = v;
        if (body.empty())
            throw std::invalid_argument("mixing spec: expr requires f=<expression in alpha>");
        double lo = 0.0, hi = 0.0;
        if (!maybe_value(spec, "lo", &lo) || !maybe_value(spec, "hi", &hi))
            throw std::invalid_argument("mixing spec: expr requires lo= and hi=");
        const expr::Expression e = expr::Expression::parse(body);
        for (const auto& v : e.variables())
            if (v != "alpha")
                throw std::invalid_argument("mixing spec: expression may only use 'alpha', got '" +
                                            v + "'");
        return MixingDensity([e](double x) { return e.eval1("alpha", x); }, lo, hi,
                             std::string(text), cfg);
    }

    throw std::invalid_argument("mixing spec: unknown preset '" + spec.head + "'");
}

MixtureModel MixtureModel::make(AnyDistribution kernel, MixingDensity mixing) {
    const auto& free = free_params(kernel);
    if (free.size() != 1)
        throw std::invalid_argument("MixtureModel: kernel must have exactly one free parameter "
                                    "(got " +
                                    std::to_string(free.size()) + ")");
    const kernels::Interval dom = free_param_domain(kernel, free[0]);
    if (mixing.lo() < dom.lo - 1e-12 || mixing.hi() > dom.hi)
        throw std::invalid_argument("MixtureModel: mixing domain [" + std::to_string(mixing.lo()) +
                                    ", " + std::to_string(mixing.hi()) +
                                    "] exceeds the domain of free parameter '" + free[0] + "'");
    std::string name = free[0];
    return MixtureModel{std::move(kernel), std::move(name), std::move(mixing)};
}

double mixture_cdf(const MixtureModel& mm, double x, const QuadratureConfig& cfg) {
    cfg.validate();
    auto f = [&](double alpha) {
        const double v[] = {alpha};
        return cdf(with_free_values(mm.kernel, v), x) * mm.mixing(alpha);
    };
    const double val =
        integrate(f, mm.mixing.lo(), mm.mixing.hi(), cfg.abs_tol, cfg.rel_tol,
                  cfg.max_subdivisions)
            .value;
    return std::clamp(val, 0.0, 1.0);
}

double mixture_mgf(const MixtureModel& mm, double s, const QuadratureConfig& cfg) {
    cfg.validate();
    auto f = [&](double alpha) {
        const double v[] = {alpha};
        try {
            return mgf(with_free_values(mm.kernel, v), s) * mm.mixing(alpha);
        } catch (const DivergenceError& e) {
            throw std::domain_error("mixture_mgf: convergence strip violated at node " +
                                    mm.free_name + " = " + std::to_string(alpha) + ": " +
                                    e.what());
        }
    };
    return integrate(f, mm.mixing.lo(), mm.mixing.hi(), cfg.abs_tol, cfg.rel_tol,
                     cfg.max_subdivisions)
        .value;
}

std::vector<double> sample_mixture(const MixtureModel& mm, std::size_t n, std::uint64_t seed) {
    if (n < 1) throw std::invalid_argument("sample_mixture: n must be >= 1");

    // Tabulated cumulative of the mixing density for inverse-CDF draws.
    constexpr int kPanels = 2048;
    const double lo = mm.mixing.lo(), hi = mm.mixing.hi();
    const double h = (hi - lo) / kPanels;
    std::vector<double> cum(kPanels + 1, 0.0);
    for (int i = 0; i < kPanels; ++i) {
        const double mass =
            gk15_panel([&](double x) { return mm.mixing(x); }, lo + i * h, lo + (i + 1) * h)
                .value;
        cum[i + 1] = cum[i] + std::max(mass, 0.0);
    }
    const double total = cum.back();
    if (!(total > 0.0)) throw std::invalid_argument("sample_mixture: mixing mass vanished");
    for (double& c : cum) c /= total;

    auto invert = [&](double u) {
        const auto it = std::upper_bound(cum.begin(), cum.end(), u);
        const int i = std::clamp(static_cast<int>(it - cum.begin()) - 1, 0, kPanels - 1);
        const double span = cum[i + 1] - cum[i];
        const double frac = span > 0.0 ? (u - cum[i]) / span : 0.5;
        return lo + (i + frac) * h;
    };

    std::mt19937_64 g(seed);
    std::vector<double> out;
    out.reserve(n);
    for (std::size_t i = 0; i < n; ++i) {
        const double alpha = invert(rng::unit_uniform(g));
        const double v[] = {alpha};
        out.push_back(sample_one(with_free_values(mm.kernel, v), g));
    }
    return out;
}

} // namespace gfmix::mixtures

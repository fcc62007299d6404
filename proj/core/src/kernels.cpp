// Copyright 2026 the gfmix authors
// SPDX-License-Identifier: Apache-2.0

#include "gfmix/kernels.hpp"

#include "gfmix/errors.hpp"
#include "gfmix/quadrature.hpp"
#include "gfmix/special.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>
#include <stdexcept>

namespace gfmix::kernels {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

using cplx = std::complex<double>;

struct FamilyInfo {
    std::string_view name;
    std::vector<std::string> params;
};

const FamilyInfo& info(Family f) {
    static const std::map<Family, FamilyInfo> table = {
        {Family::Poisson, {"poisson", {"lambda"}}},
        {Family::NegativeBinomial, {"negbin", {"r", "p"}}},
        {Family::Gamma, {"gamma", {"r", "theta"}}},
        {Family::Exponential, {"exponential", {"theta"}}},
        {Family::Weibull, {"weibull", {"theta", "tau"}}},
        {Family::Pareto1, {"pareto1", {"alpha", "theta"}}},
        {Family::Normal, {"normal", {"m", "sigma2"}}},
        {Family::NormalMeanVariance, {"normalmv", {"m", "kappa"}}},
        {Family::Laplace, {"laplace", {"m", "sigma"}}},
        {Family::Gumbel, {"gumbel", {"m", "sigma"}}},
        {Family::Logarithmic, {"logarithmic", {"q"}}},
        {Family::DiscreteLaplace, {"discretelaplace", {"p"}}},
        {Family::Uniform, {"uniform", {"a", "b"}}},
    };
    return table.at(f);
}

[[noreturn]] void bad_param(Family f, const std::string& what) {
    throw std::domain_error(std::string(family_name(f)) + ": " + what);
}

void check_positive(Family f, const KernelDistribution& d, const char* name) {
    if (!(d.param(name) > 0.0)) bad_param(f, std::string(name) + " must be > 0");
}

void check_unit(Family f, const KernelDistribution& d, const char* name) {
    const double v = d.param(name);
    if (!(v > 0.0 && v < 1.0)) bad_param(f, std::string(name) + " must be in (0,1)");
}

void validate(const KernelDistribution& d) {
    for (const auto& [k, v] : d.params)
        if (!std::isfinite(v)) bad_param(d.family, k + " must be finite");
    switch (d.family) {
    case Family::Poisson: check_positive(d.family, d, "lambda"); break;
    case Family::NegativeBinomial:
        check_positive(d.family, d, "r");
        check_unit(d.family, d, "p");
        break;
    case Family::Gamma:
        check_positive(d.family, d, "r");
        check_positive(d.family, d, "theta");
        break;
    case Family::Exponential: check_positive(d.family, d, "theta"); break;
    case Family::Weibull:
        check_positive(d.family, d, "theta");
        check_positive(d.family, d, "tau");
        break;
    case Family::Pareto1:
        check_positive(d.family, d, "alpha");
        check_positive(d.family, d, "theta");
        break;
    case Family::Normal: check_positive(d.family, d, "sigma2"); break;
    case Family::NormalMeanVariance:
        check_positive(d.family, d, "m");
        check_positive(d.family, d, "kappa");
        break;
    case Family::Laplace: check_positive(d.family, d, "sigma"); break;
    case Family::Gumbel: check_positive(d.family, d, "sigma"); break;
    case Family::Logarithmic: check_unit(d.family, d, "q"); break;
    case Family::DiscreteLaplace: check_unit(d.family, d, "p"); break;
    case Family::Uniform: {
        const double a = d.param("a"), b = d.param("b");
        if (!(a >= 0.0)) bad_param(d.family, "a must be >= 0");
        if (!(b > a)) bad_param(d.family, "require a < b");
        break;
    }
    }
}

// (exp(z) - 1) / z, stable near 0.
cplx expm1_over(cplx z) {
    if (std::abs(z) < 1e-150) return {1.0, 0.0};
    if (z.imag() == 0.0) return {std::expm1(z.real()) / z.real(), 0.0};
    const double re = -2.0 * std::pow(std::sin(0.5 * z.imag()), 2); // cos(y)-1 for z = iy
    return cplx(re, std::sin(z.imag())) / z;
}

double log_pmf_poisson(double lambda, double n) {
    return -lambda + n * std::log(lambda) - std::lgamma(n + 1.0);
}

double log_pmf_negbin(double r, double p, double n) {
    return std::lgamma(r + n) - std::lgamma(r) - std::lgamma(n + 1.0) + r * std::log1p(-p) +
           n * std::log(p);
}

// Sum of the pmf over lattice points `first..last`; stops early once the
// remaining terms are provably below 1e-17.
double pmf_prefix_sum(const KernelDistribution& d, double first, double last) {
    double sum = 0.0;
    for (double n = first; n <= last; n += 1.0) {
        const double t = pdf(d, n);
        sum += t;
        if (t < 1e-18 && n > first && t < pdf(d, n - 1.0)) break;
    }
    return std::min(sum, 1.0);
}

// E[exp(-c U^{1/tau})] for U ~ Exponential(1); the Weibull transform after
// substituting u = (x/theta)^tau. Valid for c >= 0.
double weibull_neg_transform(double tau, double c) {
    auto g = [&](double u) { return std::exp(-u - c * std::pow(u, 1.0 / tau)); };
    const double hi = grow_until_negligible(g, 50.0, 1e-22);
    return integrate(g, 0.0, hi, 1e-13, 1e-13, 4000).value;
}

// Series sum_{n>=0} (s theta)^n Gamma(1+n/tau)/n!  (all terms positive);
// converges for every s > 0 when tau > 1 and for s theta < 1 when tau == 1.
double weibull_pos_mgf(double theta, double tau, double s) {
    const double x = std::log(s * theta);
    double sum = 1.0;
    for (int n = 1; n < 100000; ++n) {
        const double term = std::exp(n * x + std::lgamma(1.0 + n / tau) - std::lgamma(n + 1.0));
        sum += term;
        if (term < 1e-17 * sum && n > 4) return sum;
    }
    throw ConvergenceError("weibull mgf series did not converge");
}

double pareto_neg_transform(const KernelDistribution& d, double z) {
    // E[exp(sX)] = alpha (-theta s)^alpha Gamma(-alpha, -theta s), z = -theta s > 0.
    const double alpha = d.param("alpha");
    try {
        return alpha * std::pow(z, alpha) * special::upper_gamma(-alpha, z);
    } catch (const std::domain_error&) {
        // Rare under/overflow inside the incomplete gamma; fall back to direct
        // quadrature of the defining integral.
        const double theta = d.param("theta");
        const double s = z / theta;
        auto g = [&](double x) { return std::exp(-s * x) * pdf(d, x); };
        const double hi = grow_until_negligible(g, 8.0 * theta * (1.0 + 1.0 / s), 1e-22);
        return integrate(g, theta, hi, 1e-12, 1e-12, 4000).value;
    }
}

// Numeric CF for the two families without a closed form, through one
// integration by parts: E[e^{iwX}] = 1 + iw \int_0^inf e^{iwx} S(x) dx with
// the survival function S. S is bounded, monotone and has no density
// singularity or zero-density head, which keeps the oscillatory integrator's
// envelope model honest.
cplx numeric_cf(const KernelDistribution& d, double omega) {
    if (omega == 0.0) return {1.0, 0.0};
    QuadratureConfig cfg;
    cfg.abs_tol = 1e-10;
    cfg.rel_tol = 1e-10;
    cfg.max_subdivisions = 20000;
    auto survival = [&](double x) -> cplx {
        if (d.family == Family::Weibull)
            return {std::exp(-std::pow(x / d.param("theta"), d.param("tau"))), 0.0};
        const double theta = d.param("theta"); // Pareto 1
        if (x <= theta) return {1.0, 0.0};
        return {std::exp(d.param("alpha") * std::log(theta / x)), 0.0};
    };
    // fourier_integral computes int e^{-iyx} psi(x) dx; y = -omega gives the
    // +iwx kernel directly.
    const cplx tail = fourier_integral(survival, -omega, cfg).value;
    return 1.0 + cplx(0.0, omega) * tail;
}

[[noreturn]] void outside_strip(const KernelDistribution& d, double s, const std::string& hi_desc) {
    throw DivergenceError("mgf(" + std::string(family_name(d.family)) + "): s = " +
                          std::to_string(s) + " outside convergence strip; " + hi_desc);
}

} // namespace

std::string_view family_name(Family f) { return info(f).name; }

std::optional<Family> family_from_name(std::string_view name) {
    std::string n(name);
    std::transform(n.begin(), n.end(), n.begin(), [](unsigned char c) { return std::tolower(c); });
    static const std::map<std::string, Family, std::less<>> aliases = {
        {"poisson", Family::Poisson},
        {"negbin", Family::NegativeBinomial},
        {"negativebinomial", Family::NegativeBinomial},
        {"gamma", Family::Gamma},
        {"exponential", Family::Exponential},
        {"exp", Family::Exponential},
        {"weibull", Family::Weibull},
        {"pareto1", Family::Pareto1},
        {"normal", Family::Normal},
        {"normalmv", Family::NormalMeanVariance},
        {"normalmeanvariance", Family::NormalMeanVariance},
        {"laplace", Family::Laplace},
        {"gumbel", Family::Gumbel},
        {"logarithmic", Family::Logarithmic},
        {"discretelaplace", Family::DiscreteLaplace},
        {"dlaplace", Family::DiscreteLaplace},
        {"uniform", Family::Uniform},
    };
    auto it = aliases.find(n);
    if (it == aliases.end()) return std::nullopt;
    return it->second;
}

std::vector<std::string> family_param_names(Family f) { return info(f).params; }

KernelDistribution KernelDistribution::make(Family family, std::map<std::string, double> params,
                                            std::vector<std::string> free) {
    KernelDistribution d;
    d.family = family;
    d.params = std::move(params);
    d.free_params = std::move(free);

    const auto expected = family_param_names(family);
    for (const auto& name : expected)
        if (!d.params.count(name))
            throw std::invalid_argument(std::string(family_name(family)) +
                                        ": missing parameter '" + name + "'");
    for (const auto& [k, v] : d.params)
        if (std::find(expected.begin(), expected.end(), k) == expected.end())
            throw std::invalid_argument(std::string(family_name(family)) +
                                        ": unknown parameter '" + k + "'");
    for (const auto& name : d.free_params) {
        if (!d.params.count(name))
            throw std::invalid_argument(std::string(family_name(family)) + ": free parameter '" +
                                        name + "' is not a parameter");
        if (std::count(d.free_params.begin(), d.free_params.end(), name) != 1)
            throw std::invalid_argument(std::string(family_name(family)) +
                                        ": duplicate free parameter '" + name + "'");
    }
    for (const auto& [k, v] : d.params)
        if (std::find(d.free_params.begin(), d.free_params.end(), k) == d.free_params.end())
            d.fixed_params.push_back(k);
    validate(d);
    return d;
}

double KernelDistribution::param(std::string_view name) const {
    auto it = params.find(std::string(name));
    if (it == params.end())
        throw std::invalid_argument(std::string(family_name(family)) + ": no parameter '" +
                                    std::string(name) + "'");
    return it->second;
}

KernelDistribution KernelDistribution::with_param(std::string_view name, double value) const {
    KernelDistribution d = *this;
    auto it = d.params.find(std::string(name));
    if (it == d.params.end())
        throw std::invalid_argument(std::string(family_name(family)) + ": no parameter '" +
                                    std::string(name) + "'");
    it->second = value;
    validate(d);
    return d;
}

bool KernelDistribution::discrete() const {
    switch (family) {
    case Family::Poisson:
    case Family::NegativeBinomial:
    case Family::Logarithmic:
    case Family::DiscreteLaplace: return true;
    default: return false;
    }
}

bool KernelDistribution::nonnegative_support() const {
    switch (family) {
    case Family::Poisson:
    case Family::NegativeBinomial:
    case Family::Gamma:
    case Family::Exponential:
    case Family::Weibull:
    case Family::Pareto1:
    case Family::Logarithmic: return true;
    case Family::Uniform: return param("a") >= 0.0;
    default: return false;
    }
}

std::string KernelDistribution::describe() const {
    std::ostringstream os;
    os << family_name(family) << ":";
    bool first = true;
    for (const auto& name : family_param_names(family)) {
        os << (first ? "" : ",") << name << "=" << params.at(name);
        first = false;
    }
    if (!free_params.empty()) {
        os << ",free=";
        for (std::size_t i = 0; i < free_params.size(); ++i)
            os << (i ? "," : "") << free_params[i];
    }
    return os.str();
}

Interval param_domain(Family f, std::string_view name) {
    if (name == "p" || name == "q") return {0.0, 1.0};
    if (name == "m") {
        if (f == Family::NormalMeanVariance) return {0.0, kInf};
        return {-kInf, kInf};
    }
    if (name == "a") return {0.0, kInf};
    return {0.0, kInf}; // lambda, theta, r, alpha, tau, sigma, sigma2, kappa, b
}

Interval support(const KernelDistribution& d) {
    switch (d.family) {
    case Family::Poisson:
    case Family::NegativeBinomial: return {0.0, kInf};
    case Family::Logarithmic: return {1.0, kInf};
    case Family::DiscreteLaplace: return {-kInf, kInf};
    case Family::Gamma:
    case Family::Exponential:
    case Family::Weibull: return {0.0, kInf};
    case Family::Pareto1: return {d.param("theta"), kInf};
    case Family::Normal:
    case Family::NormalMeanVariance:
    case Family::Laplace:
    case Family::Gumbel: return {-kInf, kInf};
    case Family::Uniform: return {d.param("a"), d.param("b")};
    }
    throw std::logic_error("unreachable");
}

Interval mgf_strip(const KernelDistribution& d) {
    switch (d.family) {
    case Family::Poisson:
    case Family::Normal:
    case Family::NormalMeanVariance:
    case Family::Uniform: return {-kInf, kInf};
    case Family::NegativeBinomial: return {-kInf, -std::log(d.param("p"))};
    case Family::Gamma:
    case Family::Exponential: return {-kInf, 1.0 / d.param("theta")};
    case Family::Weibull: {
        const double tau = d.param("tau");
        if (tau > 1.0) return {-kInf, kInf};
        if (tau == 1.0) return {-kInf, 1.0 / d.param("theta")};
        return {-kInf, 0.0};
    }
    case Family::Pareto1: return {-kInf, 0.0};
    case Family::Laplace: {
        const double s = d.param("sigma");
        return {-1.0 / s, 1.0 / s};
    }
    case Family::Gumbel: return {-kInf, 1.0 / d.param("sigma")};
    case Family::Logarithmic: return {-kInf, -std::log(d.param("q"))};
    case Family::DiscreteLaplace: {
        const double lp = -std::log(d.param("p"));
        return {-lp, lp};
    }
    }
    throw std::logic_error("unreachable");
}

double pdf(const KernelDistribution& d, double x) {
    if (d.discrete()) {
        const double k = std::round(x);
        if (std::abs(x - k) > 1e-9) return 0.0;
        switch (d.family) {
        case Family::Poisson:
            if (k < 0) return 0.0;
            return std::exp(log_pmf_poisson(d.param("lambda"), k));
        case Family::NegativeBinomial:
            if (k < 0) return 0.0;
            return std::exp(log_pmf_negbin(d.param("r"), d.param("p"), k));
        case Family::Logarithmic: {
            if (k < 1) return 0.0;
            const double q = d.param("q");
            return std::exp(k * std::log(q)) / (k * -std::log1p(-q));
        }
        case Family::DiscreteLaplace: {
            const double p = d.param("p");
            return (1.0 - p) / (1.0 + p) * std::exp(std::abs(k) * std::log(p));
        }
        default: break;
        }
    }
    switch (d.family) {
    case Family::Gamma: {
        const double r = d.param("r"), theta = d.param("theta");
        if (x <= 0.0) return 0.0;
        return std::exp((r - 1.0) * std::log(x) - x / theta - std::lgamma(r) -
                        r * std::log(theta));
    }
    case Family::Exponential: {
        const double theta = d.param("theta");
        return x < 0.0 ? 0.0 : std::exp(-x / theta) / theta;
    }
    case Family::Weibull: {
        const double theta = d.param("theta"), tau = d.param("tau");
        if (x <= 0.0) return 0.0;
        const double z = x / theta;
        return tau / theta * std::pow(z, tau - 1.0) * std::exp(-std::pow(z, tau));
    }
    case Family::Pareto1: {
        // Right-continuous at the support edge.
        const double alpha = d.param("alpha"), theta = d.param("theta");
        if (x < theta) return 0.0;
        return alpha * std::exp(alpha * std::log(theta) - (alpha + 1.0) * std::log(x));
    }
    case Family::Normal:
    case Family::NormalMeanVariance: {
        const double m = d.param("m");
        const double v = d.family == Family::Normal ? d.param("sigma2")
                                                    : d.param("kappa") * d.param("m");
        const double z = (x - m) * (x - m) / (2.0 * v);
        return special::inv_sqrt_2pi / std::sqrt(v) * std::exp(-z);
    }
    case Family::Laplace: {
        const double m = d.param("m"), s = d.param("sigma");
        return 0.5 / s * std::exp(-std::abs(x - m) / s);
    }
    case Family::Gumbel: {
        const double m = d.param("m"), s = d.param("sigma");
        const double z = (x - m) / s;
        return std::exp(-z - std::exp(-z)) / s;
    }
    case Family::Uniform: {
        const double a = d.param("a"), b = d.param("b");
        return (x < a || x > b) ? 0.0 : 1.0 / (b - a);
    }
    default: break;
    }
    throw std::logic_error("pdf: unreachable");
}

double cdf(const KernelDistribution& d, double x) {
    if (std::isnan(x)) throw std::domain_error("cdf: x is NaN");
    switch (d.family) {
    case Family::Poisson:
    case Family::NegativeBinomial: {
        if (x < 0.0) return 0.0;
        return pmf_prefix_sum(d, 0.0, std::floor(x));
    }
    case Family::Logarithmic: {
        if (x < 1.0) return 0.0;
        return pmf_prefix_sum(d, 1.0, std::floor(x));
    }
    case Family::DiscreteLaplace: {
        const double p = d.param("p");
        const double k = std::floor(x);
        if (k < 0.0) return std::exp(-k * std::log(p)) / (1.0 + p);
        return 1.0 - std::exp((k + 1.0) * std::log(p)) / (1.0 + p);
    }
    case Family::Gamma: {
        const double r = d.param("r"), theta = d.param("theta");
        return x <= 0.0 ? 0.0 : special::gamma_p(r, x / theta);
    }
    case Family::Exponential:
        return x <= 0.0 ? 0.0 : -std::expm1(-x / d.param("theta"));
    case Family::Weibull: {
        if (x <= 0.0) return 0.0;
        return -std::expm1(-std::pow(x / d.param("theta"), d.param("tau")));
    }
    case Family::Pareto1: {
        const double alpha = d.param("alpha"), theta = d.param("theta");
        if (x <= theta) return 0.0;
        return -std::expm1(alpha * std::log(theta / x));
    }
    case Family::Normal:
        return special::normal_cdf((x - d.param("m")) / std::sqrt(d.param("sigma2")));
    case Family::NormalMeanVariance:
        return special::normal_cdf((x - d.param("m")) /
                                   std::sqrt(d.param("kappa") * d.param("m")));
    case Family::Laplace: {
        const double z = (x - d.param("m")) / d.param("sigma");
        return z < 0.0 ? 0.5 * std::exp(z) : 1.0 - 0.5 * std::exp(-z);
    }
    case Family::Gumbel: {
        const double z = (x - d.param("m")) / d.param("sigma");
        return std::exp(-std::exp(-z));
    }
    case Family::Uniform: {
        const double a = d.param("a"), b = d.param("b");
        return std::clamp((x - a) / (b - a), 0.0, 1.0);
    }
    }
    throw std::logic_error("unreachable");
}

double mgf(const KernelDistribution& d, double s) {
    if (s == 0.0) return 1.0;
    const Interval strip = mgf_strip(d);
    switch (d.family) {
    case Family::Poisson: return std::exp(d.param("lambda") * std::expm1(s));
    case Family::NegativeBinomial: {
        // 1 - p e^s written as (1-p) - p expm1(s) to avoid cancellation near
        // the strip edge.
        const double p = d.param("p");
        if (s >= strip.hi) outside_strip(d, s, "requires s < -ln p = " + std::to_string(strip.hi));
        return std::pow((1.0 - p) / ((1.0 - p) - p * std::expm1(s)), d.param("r"));
    }
    case Family::Gamma:
    case Family::Exponential: {
        const double theta = d.param("theta");
        if (s >= strip.hi)
            outside_strip(d, s, "requires s < 1/theta = " + std::to_string(strip.hi));
        const double r = d.family == Family::Gamma ? d.param("r") : 1.0;
        return std::pow(1.0 - theta * s, -r);
    }
    case Family::Weibull: {
        const double theta = d.param("theta"), tau = d.param("tau");
        if (tau == 1.0) {
            if (s >= strip.hi)
                outside_strip(d, s, "requires s < 1/theta = " + std::to_string(strip.hi));
            return 1.0 / (1.0 - theta * s);
        }
        if (s < 0.0) return weibull_neg_transform(tau, -s * theta);
        if (tau < 1.0)
            outside_strip(d, s, "tau < 1 gives a heavy right tail; strip is (-inf, 0]");
        return weibull_pos_mgf(theta, tau, s);
    }
    case Family::Pareto1: {
        if (s > 0.0) outside_strip(d, s, "heavy right tail; strip is (-inf, 0]");
        return pareto_neg_transform(d, -d.param("theta") * s);
    }
    case Family::Normal: {
        const double m = d.param("m"), v = d.param("sigma2");
        return std::exp(m * s + 0.5 * v * s * s);
    }
    case Family::NormalMeanVariance: {
        const double m = d.param("m"), kappa = d.param("kappa");
        return std::exp(m * (s + 0.5 * kappa * s * s));
    }
    case Family::Laplace: {
        const double m = d.param("m"), sig = d.param("sigma");
        if (std::abs(s) >= 1.0 / sig)
            outside_strip(d, s, "requires |s| < 1/sigma = " + std::to_string(1.0 / sig));
        return std::exp(m * s) / (1.0 - sig * sig * s * s);
    }
    case Family::Gumbel: {
        const double m = d.param("m"), sig = d.param("sigma");
        if (s >= strip.hi)
            outside_strip(d, s, "requires s < 1/sigma = " + std::to_string(strip.hi));
        return std::exp(std::lgamma(1.0 - sig * s) + m * s);
    }
    case Family::Logarithmic: {
        const double q = d.param("q");
        if (s >= strip.hi) outside_strip(d, s, "requires s < -ln q = " + std::to_string(strip.hi));
        return std::log((1.0 - q) - q * std::expm1(s)) / std::log1p(-q);
    }
    case Family::DiscreteLaplace: {
        const double p = d.param("p");
        if (std::abs(s) >= strip.hi)
            outside_strip(d, s, "requires |s| < -ln p = " + std::to_string(strip.hi));
        const double fwd = (1.0 - p) - p * std::expm1(s);
        const double bwd = (1.0 - p) - p * std::expm1(-s);
        return (1.0 - p) * (1.0 - p) / (fwd * bwd);
    }
    case Family::Uniform: {
        const double a = d.param("a"), b = d.param("b");
        return std::exp(a * s) * std::expm1((b - a) * s) / ((b - a) * s);
    }
    }
    throw std::logic_error("unreachable");
}

std::complex<double> cf(const KernelDistribution& d, double omega) {
    const cplx iw(0.0, omega);
    switch (d.family) {
    case Family::Poisson: return std::exp(d.param("lambda") * (std::exp(iw) - 1.0));
    case Family::NegativeBinomial: {
        const double p = d.param("p");
        return std::exp(d.param("r") * (std::log1p(-p) - std::log(1.0 - p * std::exp(iw))));
    }
    case Family::Gamma:
        return std::exp(-d.param("r") * std::log(1.0 - iw * d.param("theta")));
    case Family::Exponential: return 1.0 / (1.0 - iw * d.param("theta"));
    case Family::Weibull:
    case Family::Pareto1: return numeric_cf(d, omega);
    case Family::Normal: {
        const double m = d.param("m"), v = d.param("sigma2");
        return std::exp(cplx(-0.5 * v * omega * omega, m * omega));
    }
    case Family::NormalMeanVariance: {
        const double m = d.param("m"), kappa = d.param("kappa");
        return std::exp(cplx(-0.5 * kappa * m * omega * omega, m * omega));
    }
    case Family::Laplace: {
        const double m = d.param("m"), sig = d.param("sigma");
        return std::exp(cplx(0.0, m * omega)) / (1.0 + sig * sig * omega * omega);
    }
    case Family::Gumbel: {
        const double m = d.param("m"), sig = d.param("sigma");
        return special::complex_gamma(cplx(1.0, -sig * omega)) * std::exp(cplx(0.0, m * omega));
    }
    case Family::Logarithmic: {
        const double q = d.param("q");
        return std::log(1.0 - q * std::exp(iw)) / std::log1p(-q);
    }
    case Family::DiscreteLaplace: {
        const double p = d.param("p");
        return (1.0 - p) * (1.0 - p) / (1.0 - 2.0 * p * std::cos(omega) + p * p);
    }
    case Family::Uniform: {
        const double a = d.param("a"), b = d.param("b");
        return std::exp(iw * a) * expm1_over(iw * (b - a));
    }
    }
    throw std::logic_error("unreachable");
}

double laplace_transform(const KernelDistribution& d, double s) {
    switch (d.family) {
    case Family::Gamma:
    case Family::Exponential:
    case Family::Weibull:
    case Family::Pareto1: break;
    default:
        throw UnsupportedError("laplace_transform: " + std::string(family_name(d.family)) +
                               " is not a nonnegative-support transform family");
    }
    if (s < 0.0) throw std::domain_error("laplace_transform: s must be >= 0");
    if (s == 0.0) return 1.0;
    switch (d.family) {
    case Family::Gamma: return std::pow(1.0 + d.param("theta") * s, -d.param("r"));
    case Family::Exponential: return 1.0 / (1.0 + d.param("theta") * s);
    case Family::Weibull: {
        const double tau = d.param("tau");
        if (tau == 1.0) return 1.0 / (1.0 + d.param("theta") * s);
        return weibull_neg_transform(tau, s * d.param("theta"));
    }
    case Family::Pareto1: return pareto_neg_transform(d, d.param("theta") * s);
    default: throw std::logic_error("unreachable");
    }
}

std::string_view to_string(Membership m) {
    switch (m) {
    case Membership::AdditivelyClosed: return "additively-closed";
    case Membership::ScaleParameter: return "scale-parameter";
    case Membership::LocationParameter: return "location-parameter";
    case Membership::InfinitePowerSeries: return "infinite-power-series";
    }
    return "?";
}

std::string_view to_string(Verdict v) {
    switch (v) {
    case Verdict::Identifiable: return "identifiable";
    case Verdict::Unidentifiable: return "unidentifiable";
    case Verdict::Unresolved: return "unresolved";
    }
    return "?";
}

FamilyTag family_tags(const KernelDistribution& d) {
    FamilyTag tag;
    const auto free = [&](std::initializer_list<const char*> names) {
        if (d.free_params.size() != names.size()) return false;
        for (const char* n : names)
            if (std::find(d.free_params.begin(), d.free_params.end(), n) == d.free_params.end())
                return false;
        return true;
    };
    auto add = [&](std::initializer_list<const char*> names, Verdict v, const char* cite) {
        FreeParamVerdict fv;
        for (const char* n : names) fv.free_params.emplace_back(n);
        fv.verdict = v;
        fv.citation = cite;
        tag.identifiable_free_params.push_back(std::move(fv));
    };

    auto describe_tag = [&](Membership m, const char* text) {
        if (tag.tags.count(m)) tag.descriptors[m] = text;
    };

    switch (d.family) {
    case Family::Poisson:
        if (free({"lambda"}))
            tag.tags = {Membership::AdditivelyClosed, Membership::InfinitePowerSeries};
        add({"lambda"}, Verdict::Identifiable, "Feller (1943)");
        describe_tag(Membership::AdditivelyClosed,
                     "cf = [exp(e^{iw} - 1)]^lambda");
        describe_tag(Membership::InfinitePowerSeries, "c_x = 1/x!, C(q) = e^q");
        break;
    case Family::NegativeBinomial:
        if (free({"r"})) tag.tags = {Membership::AdditivelyClosed};
        if (free({"p"})) tag.tags = {Membership::InfinitePowerSeries};
        add({"r"}, Verdict::Identifiable, "Teicher (1961), additively closed family");
        add({"p"}, Verdict::Identifiable, "Sapatinas (1995), infinite power-series family");
        describe_tag(Membership::AdditivelyClosed, "cf = [(1-p)/(1 - p e^{iw})]^r");
        describe_tag(Membership::InfinitePowerSeries,
                     "c_x = Gamma(r+x)/(Gamma(r) x!), C(q) = (1-q)^{-r}");
        break;
    case Family::Gamma:
        if (free({"r"})) tag.tags = {Membership::AdditivelyClosed};
        if (free({"theta"})) tag.tags = {Membership::ScaleParameter};
        add({"r"}, Verdict::Identifiable, "Teicher (1961), additively closed family");
        add({"theta"}, Verdict::Identifiable, "Teicher (1961), scale-parameter family");
        describe_tag(Membership::AdditivelyClosed, "cf = [1/(1 - i theta w)]^r");
        break;
    case Family::Exponential:
        if (free({"theta"})) tag.tags = {Membership::ScaleParameter};
        add({"theta"}, Verdict::Identifiable, "Teicher (1961), scale-parameter family");
        break;
    case Family::Weibull:
        if (free({"theta"})) tag.tags = {Membership::ScaleParameter};
        add({"theta"}, Verdict::Identifiable, "Teicher (1961), scale-parameter family");
        break;
    case Family::Pareto1:
        if (free({"theta"})) tag.tags = {Membership::ScaleParameter};
        add({"theta"}, Verdict::Identifiable, "Teicher (1961), scale-parameter family");
        break;
    case Family::Normal:
        if (free({"m"})) tag.tags = {Membership::LocationParameter};
        add({"m"}, Verdict::Identifiable, "Teicher (1961), location-parameter family");
        break;
    case Family::NormalMeanVariance:
        if (free({"m"})) tag.tags = {Membership::AdditivelyClosed};
        add({"m"}, Verdict::Identifiable,
            "additively closed with free exponent m; Teicher (1961)");
        describe_tag(Membership::AdditivelyClosed,
                     "cf = [exp(i w - kappa w^2 / 2)]^m");
        break;
    case Family::Laplace:
        if (free({"m"})) tag.tags = {Membership::LocationParameter};
        add({"m"}, Verdict::Identifiable, "Teicher (1961), location-parameter family");
        add({"sigma"}, Verdict::Identifiable,
            "MGF transport from the Exponential scale family; Teicher (1961)");
        break;
    case Family::Gumbel:
        if (free({"m"})) tag.tags = {Membership::LocationParameter};
        add({"m"}, Verdict::Identifiable, "Teicher (1961), location-parameter family");
        break;
    case Family::Logarithmic:
        if (free({"q"})) tag.tags = {Membership::InfinitePowerSeries};
        add({"q"}, Verdict::Unresolved,
            "identifiable under conditions; Luexmann-Ellinghaus (1987), Sapatinas (1995), "
            "Stoyanov and Lin (2011)");
        describe_tag(Membership::InfinitePowerSeries, "c_x = 1/x, C(q) = -ln(1-q)");
        break;
    case Family::DiscreteLaplace:
        add({"p"}, Verdict::Identifiable,
            "MGF transport from Laplace(0, sigma); analogue of Inusah and Kozubowski (2006)");
        break;
    case Family::Uniform:
        add({"a", "b"}, Verdict::Unidentifiable,
            "Teicher (1961): midpoint and length both free");
        add({"midpoint"}, Verdict::Identifiable, "Teicher (1961): only the midpoint free");
        add({"length"}, Verdict::Identifiable, "Teicher (1961): only the length free");
        break;
    }
    return tag;
}

} // namespace gfmix::kernels

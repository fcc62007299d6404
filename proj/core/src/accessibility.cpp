// Copyright 2026 the gfmix authors
// SPDX-License-Identifier: Apache-2.0

#include "gfmix/accessibility.hpp"

#include "gfmix/errors.hpp"
#include "gfmix/expr.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <limits>
#include <sstream>
#include <stdexcept>

namespace gfmix::accessibility {

namespace {

using kernels::Family;
using kernels::KernelDistribution;

std::vector<double> vec1(double x) { return {x}; }

std::string point_str(std::span<const double> alpha) {
    std::ostringstream os;
    os << "(";
    for (std::size_t i = 0; i < alpha.size(); ++i) os << (i ? ", " : "") << alpha[i];
    os << ")";
    return os.str();
}

// Residual of Definition 1 (iii) at one grid point. A point outside an MGF
// strip is retried with Laplace transforms (s -> -s) when both kernels live
// on the nonnegative reals and the retried arguments stay evaluable.
double identity_residual(const AccessibilityMapping& m, std::span<const double> alpha, double s) {
    const std::vector<double> beta = m.eta(alpha);
    try {
        const double lhs = m.target.mgf_at(beta, m.xi(s));
        const double rhs = m.source.mgf_at(alpha, s);
        return std::abs(lhs - rhs);
    } catch (const DivergenceError&) {
        if (laplace_supported(m.source.prototype) && laplace_supported(m.target.prototype)) {
            const double xr = m.xi(-s);
            if (std::isfinite(xr)) {
                const double lhs = m.target.mgf_at(beta, xr);
                const double rhs = m.source.mgf_at(alpha, -s);
                return std::abs(lhs - rhs);
            }
        }
        throw std::domain_error("verify_definition1(" + m.name + "): grid point alpha = " +
                                point_str(alpha) + ", s = " + std::to_string(s) +
                                " lies outside the MGF strip and has no Laplace fallback");
    }
}

void fd_jacobian_warning(const AccessibilityMapping& m, double lo, double hi,
                         std::vector<std::string>* warnings) {
    for (int i = 1; i <= 5; ++i) {
        const double alpha = lo + (hi - lo) * i / 6.0;
        const double h = 1e-6 * std::max(1.0, std::abs(alpha));
        auto deriv = [&](double step) {
            return (m.eta(vec1(alpha + step))[0] - m.eta(vec1(alpha - step))[0]) / (2.0 * step);
        };
        const double d1 = deriv(h);
        const double d2 = deriv(0.5 * h);
        if (std::abs(d1 - d2) > 1e-4 * std::max(std::abs(d2), 1e-12)) {
            warnings->push_back("eta finite-difference Jacobian unstable near alpha = " +
                                std::to_string(alpha) + " (step-halving mismatch " +
                                std::to_string(std::abs(d1 - d2)) + ")");
            return;
        }
    }
}

AccessibilityMapping make_poisson_to_normal(double kappa) {
    if (!(kappa > 0.0)) throw std::invalid_argument("poisson-to-normal: kappa must be > 0");
    AccessibilityMapping m;
    m.name = "poisson-to-normal";
    m.source = {KernelDistribution::make(Family::Poisson, {{"lambda", 1.0}}, {"lambda"})};
    m.target = {KernelDistribution::make(Family::NormalMeanVariance,
                                         {{"m", 1.0}, {"kappa", kappa}}, {"m"})};
    m.eta = [](std::span<const double> a) { return vec1(a[0]); };
    m.eta_inv = [](std::span<const double> b) { return vec1(b[0]); };
    m.xi = [kappa](double s) {
        // Solve kappa t^2 / 2 + t + 1 = e^s for the nonnegative root.
        const double z = 2.0 * kappa * std::expm1(s);
        return z / (kappa * (std::sqrt(1.0 + z) + 1.0));
    };
    m.xi_inv = [kappa](double t) { return std::log1p(t + 0.5 * kappa * t * t); };
    m.epsilon1 = [](std::span<const double>) { return 1.0; };
    m.verdict = TransportVerdict::Identifiable;
    m.verdict_citation = "transports identifiability from the Poisson kernel (Feller 1943)";
    m.default_param_grid = {{0.25}, {0.5}, {1.0}, {2.0}, {4.0}};
    return m;
}

AccessibilityMapping make_gamma_to_negbin(double r) {
    if (!(r > 0.0)) throw std::invalid_argument("gamma-to-negbin: r must be > 0");
    AccessibilityMapping m;
    m.name = "gamma-to-negbin";
    m.source = {KernelDistribution::make(Family::Gamma, {{"r", r}, {"theta", 1.0}}, {"theta"})};
    m.target =
        {KernelDistribution::make(Family::NegativeBinomial, {{"r", r}, {"p", 0.5}}, {"p"})};
    m.eta = [](std::span<const double> a) { return vec1(a[0] / (1.0 + a[0])); };
    m.eta_inv = [](std::span<const double> b) { return vec1(b[0] / (1.0 - b[0])); };
    m.xi = [](double s) { return std::log1p(s); };
    m.xi_inv = [](double t) { return std::expm1(t); };
    m.epsilon1 = [](std::span<const double> a) { return 0.9 * std::min(1.0 / a[0], 1.0); };
    m.verdict = TransportVerdict::Identifiable;
    m.verdict_citation =
        "transports identifiability from the Gamma scale family (Teicher 1961)";
    m.default_param_grid = {{0.25}, {0.5}, {1.0}, {2.0}, {4.0}};
    return m;
}

AccessibilityMapping make_exp_to_laplace() {
    AccessibilityMapping m;
    m.name = "exp-to-laplace";
    m.source = {KernelDistribution::make(Family::Exponential, {{"theta", 1.0}}, {"theta"})};
    m.target =
        {KernelDistribution::make(Family::Laplace, {{"m", 0.0}, {"sigma", 1.0}}, {"sigma"})};
    m.eta = [](std::span<const double> a) { return vec1(std::sqrt(a[0])); };
    m.eta_inv = [](std::span<const double> b) { return vec1(b[0] * b[0]); };
    m.xi = [](double s) { return std::sqrt(s); };
    m.xi_inv = [](double t) { return t * t; };
    m.epsilon1 = [](std::span<const double> a) { return 0.9 / a[0]; };
    m.verdict = TransportVerdict::Identifiable;
    m.verdict_citation =
        "transports identifiability from the Exponential scale family (Teicher 1961)";
    m.default_param_grid = {{0.25}, {0.5}, {1.0}, {2.0}, {4.0}};
    return m;
}

AccessibilityMapping make_laplace_to_dl() {
    AccessibilityMapping m;
    m.name = "laplace-to-discrete-laplace";
    m.source =
        {KernelDistribution::make(Family::Laplace, {{"m", 0.0}, {"sigma", 1.0}}, {"sigma"})};
    m.target = {KernelDistribution::make(Family::DiscreteLaplace, {{"p", 0.5}}, {"p"})};
    m.eta = [](std::span<const double> a) {
        // 1 + (1 - sqrt(2 sigma^2 + 1)) / sigma^2, cancellation-free form.
        const double s2 = a[0] * a[0];
        return vec1(1.0 - 2.0 / (1.0 + std::sqrt(2.0 * s2 + 1.0)));
    };
    m.eta_inv = [](std::span<const double> b) {
        return vec1(std::sqrt(2.0 * b[0]) / (1.0 - b[0]));
    };
    m.xi = [](double s) {
        // acosh(1 + s^2) without cancellation near 0.
        const double z = s * s;
        return std::log1p(z + std::sqrt(z * (2.0 + z)));
    };
    m.xi_inv = [](double t) { return std::sqrt(2.0) * std::abs(std::sinh(0.5 * t)); };
    m.epsilon1 = [](std::span<const double> a) { return 0.9 / a[0]; };
    m.verdict = TransportVerdict::Identifiable;
    m.verdict_citation = "transports identifiability from Laplace(0, sigma) with free sigma; "
                         "discrete analogue of Inusah and Kozubowski (2006)";
    m.default_param_grid = {{0.25}, {0.5}, {1.0}, {2.0}, {4.0}};
    return m;
}

AccessibilityMapping make_uniform_to_defun() {
    AccessibilityMapping m;
    m.name = "uniform-to-defun";
    m.source = {KernelDistribution::make(Family::Uniform, {{"a", 1.0}, {"b", 2.0}}, {"a", "b"})};
    m.target = {defun::DifferentiatedErrorFunction::make(1.0, 2.0)};
    m.eta = [](std::span<const double> a) { return std::vector<double>(a.begin(), a.end()); };
    m.eta_inv = [](std::span<const double> b) { return std::vector<double>(b.begin(), b.end()); };
    m.xi = [](double s) { return std::sqrt(s); };
    m.xi_inv = [](double t) { return t * t; };
    m.epsilon1 = [](std::span<const double>) { return 1.0; };
    m.verdict = TransportVerdict::Unidentifiable;
    m.verdict_citation = "transports unidentifiability from Uniform(a, b) with both endpoints "
                         "free (Teicher 1961)";
    m.default_param_grid = {{0.5, 1.0}, {1.0, 4.0}, {2.0, 3.0}};
    return m;
}

} // namespace

std::vector<std::string> builtin_mapping_names() {
    return {"poisson-to-normal", "gamma-to-negbin", "exp-to-laplace",
            "laplace-to-discrete-laplace", "uniform-to-defun"};
}

AccessibilityMapping make_builtin(std::string_view name,
                                  const std::map<std::string, double>& fixed) {
    auto get = [&](const char* key, double fallback) {
        auto it = fixed.find(key);
        return it == fixed.end() ? fallback : it->second;
    };
    if (name == "poisson-to-normal") return make_poisson_to_normal(get("kappa", 1.0));
    if (name == "gamma-to-negbin") return make_gamma_to_negbin(get("r", 2.0));
    if (name == "exp-to-laplace") return make_exp_to_laplace();
    if (name == "laplace-to-discrete-laplace") return make_laplace_to_dl();
    if (name == "uniform-to-defun") return make_uniform_to_defun();
    throw std::invalid_argument("unknown mapping name '" + std::string(name) + "'");
}

std::vector<AccessibilityMapping> builtin_mappings() {
    std::vector<AccessibilityMapping> out;
    for (const auto& n : builtin_mapping_names()) out.push_back(make_builtin(n));
    return out;
}

AccessibilityMapping swapped(const AccessibilityMapping& m) {
    AccessibilityMapping s;
    s.name = m.name + "-swapped";
    s.source = m.target;
    s.target = m.source;
    s.eta = m.eta_inv;
    s.eta_inv = m.eta;
    s.xi = m.xi_inv;
    s.xi_inv = m.xi;
    auto eta_inv = m.eta_inv;
    auto eps1 = m.epsilon1;
    auto xi = m.xi;
    s.epsilon1 = [eta_inv, eps1, xi](std::span<const double> beta) {
        const std::vector<double> alpha = eta_inv(beta);
        return xi(eps1(alpha));
    };
    s.verdict = m.verdict;
    s.verdict_citation = m.verdict_citation + " (roles swapped)";
    for (const auto& alpha : m.default_param_grid) s.default_param_grid.push_back(m.eta(alpha));
    return s;
}

double epsilon1_min(const AccessibilityMapping& m,
                    const std::vector<std::vector<double>>& param_grid) {
    double eps = std::numeric_limits<double>::infinity();
    for (const auto& alpha : param_grid) eps = std::min(eps, m.epsilon1(alpha));
    if (!(eps > 0.0) || !std::isfinite(eps))
        throw std::invalid_argument("epsilon1_min: mapping yields no positive epsilon1");
    return eps;
}

std::vector<double> default_s_grid(const AccessibilityMapping& m, std::size_t n) {
    const double top = 0.9 * epsilon1_min(m, m.default_param_grid);
    std::vector<double> s;
    s.reserve(n);
    for (std::size_t i = 0; i < n; ++i)
        s.push_back(top * static_cast<double>(i) / static_cast<double>(n - 1));
    return s;
}

std::string VerificationReport::to_string() const {
    std::ostringstream os;
    os << "verification of " << subject << "\n  grid: " << grid << "\n";
    for (const auto& c : checks) {
        os << "  " << (c.passed ? "PASS" : "FAIL") << "  " << c.name
           << "  residual=" << c.residual << " tol=" << c.tolerance;
        if (!c.note.empty()) os << "  (" << c.note << ")";
        os << "\n";
    }
    for (const auto& w : warnings) os << "  warning: " << w << "\n";
    os << (passed ? "PASSED" : "FAILED") << " (max residual " << max_abs_residual << ")\n";
    return os.str();
}

VerificationReport verify_definition1(const AccessibilityMapping& m,
                                      const std::vector<std::vector<double>>& param_grid,
                                      const std::vector<double>& s_grid, double tol) {
    if (param_grid.empty() || s_grid.empty())
        throw std::invalid_argument("verify_definition1: empty grid");
    if (!(tol > 0.0)) throw std::invalid_argument("verify_definition1: tol must be > 0");

    VerificationReport rep;
    rep.subject = m.name + " [" + m.source.describe() + " -> " + m.target.describe() + "]";
    {
        std::ostringstream os;
        os << param_grid.size() << " parameter points x " << s_grid.size() << " s points";
        rep.grid = os.str();
    }

    // (iii) the MGF identity.
    double worst = 0.0;
    for (const auto& alpha : param_grid) {
        const double eps = m.epsilon1(alpha);
        for (double s : s_grid) {
            if (s >= eps)
                throw std::domain_error("verify_definition1(" + m.name + "): s = " +
                                        std::to_string(s) + " >= epsilon1 = " +
                                        std::to_string(eps) + " at alpha = " + point_str(alpha));
            worst = std::max(worst, identity_residual(m, alpha, s));
        }
    }
    rep.checks.push_back({"definition1(iii) mgf identity", worst, tol, worst <= tol, ""});
    rep.max_abs_residual = worst;

    // (ii) surrogates: xi(0) = 0 and strict monotonicity on the s grid.
    const double xi0 = std::abs(m.xi(0.0));
    rep.checks.push_back({"xi(0) = 0", xi0, 1e-12, xi0 <= 1e-12, ""});

    std::vector<double> s_sorted(s_grid);
    std::sort(s_sorted.begin(), s_sorted.end());
    double min_step = std::numeric_limits<double>::infinity();
    for (std::size_t i = 0; i + 1 < s_sorted.size(); ++i)
        min_step = std::min(min_step, m.xi(s_sorted[i + 1]) - m.xi(s_sorted[i]));
    const bool xi_mono = min_step > 0.0;
    rep.checks.push_back({"xi strictly increasing on s grid", xi_mono ? 0.0 : -min_step, 0.0,
                          xi_mono, "one-to-one verified by grid monotonicity surrogate"});

    // (i) surrogate: eta injective on the parameter grid.
    bool injective = true;
    for (std::size_t i = 0; i < param_grid.size() && injective; ++i)
        for (std::size_t j = i + 1; j < param_grid.size() && injective; ++j) {
            const auto bi = m.eta(param_grid[i]);
            const auto bj = m.eta(param_grid[j]);
            double dist = 0.0;
            for (std::size_t k = 0; k < bi.size(); ++k) dist += std::abs(bi[k] - bj[k]);
            if (dist == 0.0) injective = false;
        }
    rep.checks.push_back({"eta injective on parameter grid", injective ? 0.0 : 1.0, 0.0,
                          injective, "one-to-one verified by grid injectivity surrogate"});

    // Inverse compositions.
    double comp_eta = 0.0;
    for (const auto& alpha : param_grid) {
        const auto back = m.eta_inv(m.eta(alpha));
        for (std::size_t k = 0; k < alpha.size(); ++k)
            comp_eta = std::max(comp_eta,
                                std::abs(back[k] - alpha[k]) / std::max(1.0, std::abs(alpha[k])));
    }
    rep.checks.push_back(
        {"eta_inv(eta(alpha)) = alpha", comp_eta, 1e-12, comp_eta <= 1e-12, ""});

    double comp_xi = 0.0;
    for (double s : s_grid)
        comp_xi = std::max(comp_xi, std::abs(m.xi_inv(m.xi(s)) - s) / std::max(1.0, s));
    rep.checks.push_back({"xi_inv(xi(s)) = s", comp_xi, 1e-12, comp_xi <= 1e-12, ""});

    rep.passed = std::all_of(rep.checks.begin(), rep.checks.end(),
                             [](const CheckResult& c) { return c.passed; });
    return rep;
}

VerificationReport verify_definition1(const AccessibilityMapping& m, double tol) {
    return verify_definition1(m, m.default_param_grid, default_s_grid(m), tol);
}

VerificationReport verify_corollary1(const AnyDistribution& target,
                                     const std::function<double(double)>& eta_inv,
                                     const std::function<double(double)>& xi_inv,
                                     const std::vector<double>& param_grid,
                                     const std::vector<double>& t_grid, double tol) {
    VerificationReport rep;
    rep.subject = "corollary1 factorization of " + describe(target);
    {
        std::ostringstream os;
        os << param_grid.size() << " parameter points x " << t_grid.size() << " t points";
        rep.grid = os.str();
    }

    const auto& free = free_params(target);
    if (free.size() != 1) {
        rep.checks.push_back({"scalar free parameter", static_cast<double>(free.size()), 1.0,
                              false,
                              "log-MGF cannot factor as eta_inv(beta) * xi_inv(t) with " +
                                  std::to_string(free.size()) + " free parameters"});
        rep.passed = false;
        rep.max_abs_residual = std::numeric_limits<double>::infinity();
        return rep;
    }

    auto log_mgf = [&](double beta, double t) {
        const double v[] = {beta};
        const double M = mgf(with_free_values(target, v), t);
        if (!(M > 0.0))
            throw std::domain_error("verify_corollary1: nonpositive MGF at beta = " +
                                    std::to_string(beta) + ", t = " + std::to_string(t));
        return std::log(M);
    };

    // Direct factorization residual.
    double worst = 0.0;
    for (double beta : param_grid)
        for (double t : t_grid)
            worst = std::max(worst, std::abs(log_mgf(beta, t) - eta_inv(beta) * xi_inv(t)));
    rep.checks.push_back(
        {"log M(t;beta) = eta_inv(beta) * xi_inv(t)", worst, tol, worst <= tol, ""});
    rep.max_abs_residual = worst;

    // Ratios of log MGFs across beta pairs must be t-constant.
    double worst_ratio = 0.0;
    for (std::size_t i = 0; i + 1 < param_grid.size(); ++i) {
        const double b1 = param_grid[i], b2 = param_grid[i + 1];
        const double expected = eta_inv(b1) / eta_inv(b2);
        for (double t : t_grid) {
            const double denom = log_mgf(b2, t);
            if (std::abs(denom) < 1e-13) continue;
            worst_ratio = std::max(worst_ratio, std::abs(log_mgf(b1, t) / denom - expected));
        }
    }
    rep.checks.push_back({"log-MGF ratio t-constant across beta pairs", worst_ratio,
                          std::max(tol, 1e-10), worst_ratio <= std::max(tol, 1e-10), ""});

    rep.passed = std::all_of(rep.checks.begin(), rep.checks.end(),
                             [](const CheckResult& c) { return c.passed; });
    return rep;
}

VerificationReport verify_corollary2(const AnyDistribution& source_scale_family,
                                     const AnyDistribution& target,
                                     const AccessibilityMapping& m,
                                     const std::vector<double>& theta_grid,
                                     const std::vector<double>& s_grid, double tol) {
    const auto* src = std::get_if<KernelDistribution>(&source_scale_family);
    if (!src)
        throw std::invalid_argument("verify_corollary2: source must be a catalog kernel");
    const auto tags = kernels::family_tags(*src);
    if (!tags.tags.count(kernels::Membership::ScaleParameter))
        throw std::invalid_argument(
            "verify_corollary2: source does not carry the scale-parameter tag (free " +
            (src->free_params.empty() ? std::string("<none>") : src->free_params[0]) + ")");
    if (src->free_params.size() != 1 || free_params(target).size() != 1)
        throw std::invalid_argument("verify_corollary2: scalar free parameters required");

    VerificationReport rep;
    rep.subject = "corollary2: " + describe(source_scale_family) + " -> " + describe(target);
    {
        std::ostringstream os;
        os << theta_grid.size() << " theta points x " << s_grid.size() << " s points";
        rep.grid = os.str();
    }

    const std::string& theta_name = src->free_params[0];
    auto psi = [&](double u) { // psi(u) = M_source(u; theta = 1)
        return mgf(AnyDistribution(src->with_param(theta_name, 1.0)), u);
    };

    // (a) product form M(s; theta) = M(theta s; 1).
    double worst_a = 0.0;
    for (double theta : theta_grid)
        for (double s : s_grid) {
            const double lhs = mgf(AnyDistribution(src->with_param(theta_name, theta)), s);
            worst_a = std::max(worst_a, std::abs(lhs - psi(theta * s)));
        }
    rep.checks.push_back(
        {"scale product form M(s;theta) = M(theta s;1)", worst_a, tol, worst_a <= tol, ""});

    // (b) target MGF through psi and the mapping pair.
    double worst_b = 0.0;
    for (double theta : theta_grid)
        for (double s : s_grid) {
            const double eps = m.epsilon1(std::span<const double>(&theta, 1));
            if (s >= eps) continue;
            const double t = m.xi(s);
            const std::vector<double> beta = m.eta(std::span<const double>(&theta, 1));
            const double lhs = m.target.mgf_at(beta, t);
            const double rhs = psi(m.eta_inv(beta)[0] * m.xi_inv(t));
            worst_b = std::max(worst_b, std::abs(lhs - rhs));
        }
    rep.checks.push_back({"M_target(t;beta) = psi(eta_inv(beta) xi_inv(t))", worst_b, tol,
                          worst_b <= tol, ""});

    rep.max_abs_residual = std::max(worst_a, worst_b);
    rep.passed = std::all_of(rep.checks.begin(), rep.checks.end(),
                             [](const CheckResult& c) { return c.passed; });
    return rep;
}

mixtures::MixingDensity pushforward(const AccessibilityMapping& m,
                                    const mixtures::MixingDensity& g,
                                    const QuadratureConfig& cfg) {
    if (m.arity() != 1)
        throw std::invalid_argument("pushforward: scalar free parameter required");
    auto eta = m.eta;
    auto eta_inv = m.eta_inv;
    const double b_at_lo = eta(vec1(g.lo()))[0];
    const double b_at_hi = eta(vec1(g.hi()))[0];
    const double blo = std::min(b_at_lo, b_at_hi);
    const double bhi = std::max(b_at_lo, b_at_hi);
    auto g_fn = [g](double x) { return g(x); };
    auto density = [eta, eta_inv, g_fn](double beta) {
        const double alpha = eta_inv(vec1(beta))[0];
        const double h = 1e-6 * std::max(1.0, std::abs(alpha));
        const double jac = (eta(vec1(alpha + h))[0] - eta(vec1(alpha - h))[0]) / (2.0 * h);
        return g_fn(alpha) / std::abs(jac);
    };
    return mixtures::MixingDensity(density, blo, bhi, "pushforward of " + g.description(), cfg);
}

VerificationReport transport_mixed_mgf(const AccessibilityMapping& m,
                                       const mixtures::MixingDensity& g,
                                       const std::vector<double>& s_grid, double tol,
                                       const QuadratureConfig& cfg) {
    cfg.validate();
    if (m.arity() != 1)
        throw std::invalid_argument(
            "transport_mixed_mgf: scalar free parameter required (got arity " +
            std::to_string(m.arity()) + ")");
    if (s_grid.empty()) throw std::invalid_argument("transport_mixed_mgf: empty s grid");

    VerificationReport rep;
    rep.subject = "mixed-MGF transport through " + m.name + " with mixing " + g.description();
    {
        std::ostringstream os;
        os << s_grid.size() << " s points, mixing domain [" << g.lo() << ", " << g.hi() << "]";
        rep.grid = os.str();
    }

    fd_jacobian_warning(m, g.lo(), g.hi(), &rep.warnings);

    // Pushforward construction itself verifies change-of-variables mass.
    double push_norm = 0.0;
    const mixtures::MixingDensity gb = [&] {
        try {
            return pushforward(m, g, cfg);
        } catch (const std::invalid_argument& e) {
            throw std::invalid_argument(std::string("transport_mixed_mgf: pushforward: ") +
                                        e.what());
        }
    }();
    push_norm = std::abs(
        integrate([&](double b) { return gb(b); }, gb.lo(), gb.hi(), 1e-9, 1e-9, 4000).value -
        1.0);
    rep.checks.push_back({"pushforward density integrates to 1", push_norm, 1e-8,
                          push_norm <= 1e-8, ""});

    // The pushforward density carries finite-difference Jacobian noise of
    // about 1e-9 relative, so the integrals cannot honestly target less.
    const double atol = std::max(cfg.abs_tol, 1e-9);
    const double rtol = std::max(cfg.rel_tol, 1e-9);
    double worst = 0.0;
    for (double s : s_grid) {
        auto source_side = [&](double alpha) { return m.source.mgf_at(vec1(alpha), s) * g(alpha); };
        auto target_side = [&](double alpha) {
            return m.target.mgf_at(m.eta(vec1(alpha)), m.xi(s)) * g(alpha);
        };
        auto push_side = [&](double beta) { return m.target.mgf_at(vec1(beta), m.xi(s)) * gb(beta); };
        const double i_src =
            integrate(source_side, g.lo(), g.hi(), atol, rtol, cfg.max_subdivisions).value;
        const double i_tgt =
            integrate(target_side, g.lo(), g.hi(), atol, rtol, cfg.max_subdivisions).value;
        const double i_push =
            integrate(push_side, gb.lo(), gb.hi(), atol, rtol, cfg.max_subdivisions).value;
        worst = std::max({worst, std::abs(i_tgt - i_src), std::abs(i_push - i_src)});
    }
    rep.checks.push_back({"mixed-MGF transport identity", worst, tol, worst <= tol, ""});
    rep.max_abs_residual = worst;
    rep.passed = std::all_of(rep.checks.begin(), rep.checks.end(),
                             [](const CheckResult& c) { return c.passed; });
    return rep;
}

AccessibilityMapping mapping_from_config_text(std::string_view text) {
    std::map<std::string, std::string> kv;
    std::stringstream ss{std::string(text)};
    std::string line;
    while (std::getline(ss, line)) {
        const std::size_t hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        const std::size_t eq = line.find('=');
        if (eq == std::string::npos) continue;
        auto trim = [](std::string s) {
            const auto b = s.find_first_not_of(" \t\r");
            const auto e = s.find_last_not_of(" \t\r");
            return b == std::string::npos ? std::string() : s.substr(b, e - b + 1);
        };
        kv[trim(line.substr(0, eq))] = trim(line.substr(eq + 1));
    }
    auto need = [&](const char* key) {
        auto it = kv.find(key);
        if (it == kv.end())
            throw std::invalid_argument("mapping config: missing key '" + std::string(key) + "'");
        return it->second;
    };

    AccessibilityMapping m;
    m.name = kv.count("name") ? kv["name"] : "user-mapping";
    m.source = {parse_distribution(need("source"))};
    m.target = {parse_distribution(need("target"))};
    if (m.source.free_names().size() != 1 || m.target.free_names().size() != 1)
        throw std::invalid_argument(
            "mapping config: source and target must each have exactly one free parameter");

    const auto e_eta = expr::Expression::parse(need("eta"));
    const auto e_eta_inv = expr::Expression::parse(need("eta_inv"));
    const auto e_xi = expr::Expression::parse(need("xi"));
    const auto e_xi_inv = expr::Expression::parse(need("xi_inv"));
    const auto e_eps = expr::Expression::parse(need("epsilon1"));
    m.eta = [e_eta](std::span<const double> a) { return vec1(e_eta.eval1("alpha", a[0])); };
    m.eta_inv =
        [e_eta_inv](std::span<const double> b) { return vec1(e_eta_inv.eval1("beta", b[0])); };
    m.xi = [e_xi](double s) { return e_xi.eval1("s", s); };
    m.xi_inv = [e_xi_inv](double t) { return e_xi_inv.eval1("t", t); };
    m.epsilon1 = [e_eps](std::span<const double> a) { return e_eps.eval1("alpha", a[0]); };

    if (kv.count("param_grid")) {
        std::stringstream gs(kv["param_grid"]);
        std::string tok;
        while (std::getline(gs, tok, ','))
            if (!tok.empty()) m.default_param_grid.push_back({std::stod(tok)});
    } else {
        m.default_param_grid = {{0.5}, {1.0}, {2.0}};
    }
    if (kv.count("verdict")) {
        if (kv["verdict"] == "identifiable") m.verdict = TransportVerdict::Identifiable;
        else if (kv["verdict"] == "unidentifiable") m.verdict = TransportVerdict::Unidentifiable;
        else throw std::invalid_argument("mapping config: verdict must be identifiable or "
                                         "unidentifiable, got '" + kv["verdict"] + "'");
    }
    m.verdict_citation = kv.count("citation") ? kv["citation"] : "user supplied";
    return m;
}

AccessibilityMapping load_mapping_config(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("mapping config: cannot open " + path.string());
    std::stringstream buf;
    buf << in.rdbuf();
    return mapping_from_config_text(buf.str());
}

} // namespace gfmix::accessibility

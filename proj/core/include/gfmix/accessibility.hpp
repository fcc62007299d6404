// Copyright 2026 the gfmix authors
// SPDX-License-Identifier: Apache-2.0

#ifndef GFMIX_ACCESSIBILITY_HPP
#define GFMIX_ACCESSIBILITY_HPP

#include "gfmix/dist_spec.hpp"
#include "gfmix/mixtures.hpp"
#include "gfmix/quadrature.hpp"

#include <filesystem>
#include <functional>
#include <map>
#include <span>
#include <string>
#include <vector>

namespace gfmix::accessibility {

/// One side of a mapping: a kernel prototype whose free parameters get bound
/// per grid point.
struct MappingSide {
    AnyDistribution prototype;

    const std::vector<std::string>& free_names() const { return free_params(prototype); }
    AnyDistribution at(std::span<const double> free_values) const {
        return with_free_values(prototype, free_values);
    }
    double mgf_at(std::span<const double> free_values, double arg) const {
        return mgf(at(free_values), arg);
    }
    std::string describe() const { return gfmix::describe(prototype); }
};

enum class TransportVerdict { Identifiable, Unidentifiable };

/// A generating-function mapping pair: beta = eta(alpha) on the free
/// parameters and t = xi(s) on the transform argument, with
/// M_target(eta(alpha); xi(s)) = M_source(alpha; s) on [0, epsilon1).
struct AccessibilityMapping {
    std::string name;
    MappingSide source;
    MappingSide target;
    std::function<std::vector<double>(std::span<const double>)> eta;
    std::function<std::vector<double>(std::span<const double>)> eta_inv;
    std::function<double(double)> xi;
    std::function<double(double)> xi_inv;
    /// Largest safe s for a given source free-parameter point; keeps every
    /// grid strictly inside both MGF strips.
    std::function<double(std::span<const double>)> epsilon1;
    TransportVerdict verdict = TransportVerdict::Identifiable;
    std::string verdict_citation;
    std::vector<std::vector<double>> default_param_grid;

    std::size_t arity() const { return source.free_names().size(); }
    double epsilon2(std::span<const double> alpha) const { return xi(epsilon1(alpha)); }
};

/// The five registered mappings with canonical fixed-parameter bindings
/// (kappa = 1, r = 2).
std::vector<AccessibilityMapping> builtin_mappings();
std::vector<std::string> builtin_mapping_names();
/// Instantiates a registered mapping; `fixed` may override kappa (Poisson ->
/// Normal) or r (Gamma -> Negative Binomial). Throws std::invalid_argument
/// for unknown names.
AccessibilityMapping make_builtin(std::string_view name,
                                  const std::map<std::string, double>& fixed = {});

/// Roles exchanged: eta/xi replaced by their inverses; accessibility is
/// symmetric, so verification of the swap must pass at the same tolerance.
AccessibilityMapping swapped(const AccessibilityMapping& m);

struct CheckResult {
    std::string name;
    double residual = 0.0;
    double tolerance = 0.0;
    bool passed = false;
    std::string note;
};

struct VerificationReport {
    std::string subject;
    std::string grid;
    double max_abs_residual = 0.0;
    bool passed = false;
    std::vector<CheckResult> checks;
    std::vector<std::string> warnings;

    std::string to_string() const;
};

/// 50 evenly spaced s values on [0, 0.9 * min_alpha epsilon1(alpha)] over the
/// mapping's default parameter grid.
std::vector<double> default_s_grid(const AccessibilityMapping& m, std::size_t n = 50);
double epsilon1_min(const AccessibilityMapping& m,
                    const std::vector<std::vector<double>>& param_grid);

/// Definition check: the MGF identity plus one-to-one surrogates (grid
/// monotonicity / injectivity) and the inverse-composition identities. A grid
/// point outside a strip is retried through Laplace transforms (s -> -s) when
/// both kernels support them, otherwise it raises std::domain_error naming
/// the point.
VerificationReport verify_definition1(const AccessibilityMapping& m,
                                      const std::vector<std::vector<double>>& param_grid,
                                      const std::vector<double>& s_grid, double tol);
VerificationReport verify_definition1(const AccessibilityMapping& m, double tol);

/// Double-exponential factorization check: log M(t; beta) must factor as
/// eta_inv(beta) * xi_inv(t); also verifies the t-constancy of log-MGF ratios
/// across beta pairs. A structurally unsuitable target (not exactly one free
/// parameter) yields a failed report, not an error.
VerificationReport verify_corollary1(const AnyDistribution& target,
                                     const std::function<double(double)>& eta_inv,
                                     const std::function<double(double)>& xi_inv,
                                     const std::vector<double>& param_grid,
                                     const std::vector<double>& t_grid, double tol);

/// Scale-family route: (a) the source MGF depends on theta and s only through
/// theta*s; (b) the target MGF equals psi(eta_inv(beta) * xi_inv(t)) with
/// psi(u) = M_source(u; theta = 1). Requires the ScaleParameter tag.
VerificationReport verify_corollary2(const AnyDistribution& source_scale_family,
                                     const AnyDistribution& target,
                                     const AccessibilityMapping& m,
                                     const std::vector<double>& theta_grid,
                                     const std::vector<double>& s_grid, double tol);

/// Mixed-MGF transport: integrates both sides of the identity against a
/// mixing density (target side both directly and through the pushforward
/// density with a finite-difference Jacobian) and compares.
VerificationReport transport_mixed_mgf(const AccessibilityMapping& m,
                                       const mixtures::MixingDensity& g,
                                       const std::vector<double>& s_grid, double tol,
                                       const QuadratureConfig& cfg = {});

/// The mixing density transported through eta (scalar mappings).
mixtures::MixingDensity pushforward(const AccessibilityMapping& m,
                                    const mixtures::MixingDensity& g,
                                    const QuadratureConfig& cfg = {});

/// User-defined scalar mappings from `key = value` text: source/target kernel
/// specs plus eta/eta_inv/xi/xi_inv/epsilon1 expressions (variables alpha,
/// beta, s, t, alpha respectively).
AccessibilityMapping mapping_from_config_text(std::string_view text);
AccessibilityMapping load_mapping_config(const std::filesystem::path& path);

} // namespace gfmix::accessibility

#endif

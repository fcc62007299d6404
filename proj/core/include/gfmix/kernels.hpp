// Copyright 2026 the gfmix authors
// SPDX-License-Identifier: Apache-2.0

#ifndef GFMIX_KERNELS_HPP
#define GFMIX_KERNELS_HPP

#include <complex>
#include <cstdint>
#include <map>
#include <optional>
#include <random>
#include <set>
#include <string>
#include <string_view>
#include <vector>

namespace gfmix::kernels {

enum class Family {
    Poisson,
    NegativeBinomial,
    Gamma,
    Exponential,
    Weibull,
    Pareto1,
    Normal,
    NormalMeanVariance,
    Laplace,
    Gumbel,
    Logarithmic,
    DiscreteLaplace,
    Uniform,
};

std::string_view family_name(Family f);
std::optional<Family> family_from_name(std::string_view name);

/// Open interval; +-infinity for unbounded ends.
struct Interval {
    double lo;
    double hi;
    bool contains(double x) const { return x > lo && x < hi; }
};

/// A parameterized kernel: family plus named parameter values, with some
/// parameters designated free (available for mixing) and the rest fixed.
struct KernelDistribution {
    Family family;
    std::map<std::string, double> params;
    std::vector<std::string> free_params;
    std::vector<std::string> fixed_params;

    /// Validates the parameter set and family domains; derives fixed_params.
    /// Throws std::domain_error / std::invalid_argument on violations.
    static KernelDistribution make(Family family, std::map<std::string, double> params,
                                   std::vector<std::string> free = {});

    double param(std::string_view name) const;
    KernelDistribution with_param(std::string_view name, double value) const;

    bool discrete() const;
    bool nonnegative_support() const;
    /// The familiar `family:name=value,...` text form.
    std::string describe() const;
};

/// Expected parameter names for a family, in canonical order.
std::vector<std::string> family_param_names(Family f);

/// Domain of a single parameter, used to validate mixing densities.
Interval param_domain(Family f, std::string_view name);

/// Support of the distribution (discrete families: lattice within it).
Interval support(const KernelDistribution& d);

/// Open convergence strip (lo, hi) of the MGF around 0. Families with a
/// heavy right tail get hi = 0 (Pareto 1, Weibull with tau < 1).
Interval mgf_strip(const KernelDistribution& d);

double cdf(const KernelDistribution& d, double x);
/// Density for continuous families, probability mass for discrete ones.
double pdf(const KernelDistribution& d, double x);
/// Throws DivergenceError outside the convergence strip, naming it.
double mgf(const KernelDistribution& d, double s);
std::complex<double> cf(const KernelDistribution& d, double omega);
/// E[exp(-sX)] for kernels supported on the nonnegative reals; s >= 0.
double laplace_transform(const KernelDistribution& d, double s);
std::vector<double> sample(const KernelDistribution& d, std::size_t n, std::uint64_t seed);
/// One draw from a caller-owned engine (two-stage mixture sampling).
double sample_one(const KernelDistribution& d, std::mt19937_64& gen);

enum class Membership { AdditivelyClosed, ScaleParameter, LocationParameter, InfinitePowerSeries };
enum class Verdict { Identifiable, Unidentifiable, Unresolved };

std::string_view to_string(Membership m);
std::string_view to_string(Verdict v);

struct FreeParamVerdict {
    std::vector<std::string> free_params; // designation this verdict applies to
    Verdict verdict;
    std::string citation;
};

struct FamilyTag {
    std::set<Membership> tags; // for the distribution's own free designation
    std::vector<FreeParamVerdict> identifiable_free_params; // full catalog for the family
    // Descriptive metadata: the cf base of an additively closed member, the
    // power-series coefficients of an infinite power-series member.
    std::map<Membership, std::string> descriptors;
};

FamilyTag family_tags(const KernelDistribution& d);

} // namespace gfmix::kernels

#endif

// Copyright 2026 the gfmix authors
// SPDX-License-Identifier: Apache-2.0

#ifndef GFMIX_MIXTURES_HPP
#define GFMIX_MIXTURES_HPP

#include "gfmix/dist_spec.hpp"
#include "gfmix/quadrature.hpp"

#include <functional>
#include <string>
#include <string_view>
#include <vector>

namespace gfmix::mixtures {

/// A normalized density over a kernel's free-parameter domain. Construction
/// verifies the normalization by quadrature (within 1e-8).
class MixingDensity {
public:
    MixingDensity(std::function<double(double)> density, double lo, double hi,
                  std::string description, const QuadratureConfig& cfg = {});

    double operator()(double x) const { return density_(x); }
    double lo() const { return lo_; }
    double hi() const { return hi_; }
    const std::string& description() const { return description_; }

    /// Presets: `gamma:r=...,theta=...`, `normal:m=...,sigma=...[,lo=...,hi=...]`
    /// (truncated and renormalized), and `expr:f=<expression in alpha>,lo=...,hi=...`
    /// whose normalization is verified, not assumed.
    static MixingDensity parse(std::string_view spec, const QuadratureConfig& cfg = {});

private:
    std::function<double(double)> density_;
    double lo_;
    double hi_;
    std::string description_;
};

/// Kernel with exactly one free parameter plus a mixing density over it.
struct MixtureModel {
    AnyDistribution kernel;
    std::string free_name;
    MixingDensity mixing;

    static MixtureModel make(AnyDistribution kernel, MixingDensity mixing);
};

double mixture_cdf(const MixtureModel& mm, double x, const QuadratureConfig& cfg = {});
/// Throws std::domain_error naming the first quadrature node whose kernel
/// strip excludes s.
double mixture_mgf(const MixtureModel& mm, double s, const QuadratureConfig& cfg = {});
/// Two-stage sampler: numeric inverse-CDF draw of the free parameter, then a
/// kernel draw conditioned on it.
std::vector<double> sample_mixture(const MixtureModel& mm, std::size_t n, std::uint64_t seed);

} // namespace gfmix::mixtures

#endif

// Copyright 2026 the gfmix authors
// SPDX-License-Identifier: Apache-2.0

#ifndef GFMIX_TRANSFORMS_HPP
#define GFMIX_TRANSFORMS_HPP

#include "gfmix/kernels.hpp"
#include "gfmix/quadrature.hpp"

#include <complex>
#include <functional>

namespace gfmix::transforms {

enum class CfSymmetry { RealSymmetric, General };

/// A characteristic function handed to the inversion machinery. Construction
/// checks evaluator(0) = 1 within 1e-12.
class CharacteristicFunction {
public:
    CharacteristicFunction(std::function<std::complex<double>(double)> evaluator,
                           CfSymmetry symmetry);

    std::complex<double> operator()(double omega) const { return evaluator_(omega); }
    CfSymmetry symmetry() const { return symmetry_; }

private:
    std::function<std::complex<double>(double)> evaluator_;
    CfSymmetry symmetry_;
};

struct GilPelaezInfo {
    double raw = 0.0;          // value before the nonnegativity clamp
    bool clamped = false;      // negative overshoot clamped to 0
    double omega_max = 0.0;    // end of the explicitly integrated range
    double error_estimate = 0.0;
    int subdivisions = 0;
};

/// Density at y recovered from the CF through the one-sided inversion
/// integral f(y) = (1/2pi) int_0^inf [e^{iyw} phi(-w) + e^{-iyw} phi(w)] dw.
/// Throws ConvergenceError when the CF modulus never falls below the
/// truncation threshold within the omega budget.
double gil_pelaez_pdf(const CharacteristicFunction& cf, double y, const QuadratureConfig& cfg,
                      GilPelaezInfo* info = nullptr);

/// Independent transform oracle: E[exp(sX)] by direct quadrature of
/// exp(sx) against the density (continuous) or by series summation of
/// exp(sn) against the pmf (discrete). Throws DivergenceError outside the
/// family's convergence strip.
double numeric_mgf(const kernels::KernelDistribution& d, double s, const QuadratureConfig& cfg);

} // namespace gfmix::transforms

#endif

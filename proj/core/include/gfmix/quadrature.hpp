// Copyright 2026 the gfmix authors
// SPDX-License-Identifier: Apache-2.0

#ifndef GFMIX_QUADRATURE_HPP
#define GFMIX_QUADRATURE_HPP

#include <complex>
#include <functional>
#include <span>
#include <vector>

namespace gfmix {

struct QuadratureConfig {
    double abs_tol = 1e-10;
    double rel_tol = 1e-10;
    int max_subdivisions = 2000;
    // Stop extending the omega range once |phi(omega)| falls below this.
    double truncation_threshold = 1e-16;

    void validate() const; // throws std::invalid_argument
};

struct IntegralEstimate {
    double value = 0.0;
    double error = 0.0;
    int subdivisions = 0;
};

/// Adaptive Gauss-Kronrod (G7/K15) on a finite interval. Throws
/// ConvergenceError if the subdivision budget runs out before the error
/// estimate meets max(abs_tol, rel_tol*|I|).
IntegralEstimate integrate(const std::function<double(double)>& f, double lo, double hi,
                           double abs_tol, double rel_tol, int max_subdivisions);

inline IntegralEstimate integrate(const std::function<double(double)>& f, double lo, double hi,
                                  const QuadratureConfig& cfg) {
    return integrate(f, lo, hi, cfg.abs_tol, cfg.rel_tol, cfg.max_subdivisions);
}

/// Non-adaptive single K15 panel; error is the embedded |K15-G7| estimate.
IntegralEstimate gk15_panel(const std::function<double(double)>& f, double lo, double hi);

/// Geometrically grows `hi` from `hi0` (doubling) until |f| stays below
/// `cutoff` at the probe points, then returns the truncation point.
double grow_until_negligible(const std::function<double(double)>& magnitude, double hi0,
                             double cutoff, int max_doublings = 80);

/// Pairwise (cascade) summation; deterministic for a fixed input order.
double pairwise_sum(std::span<const double> terms);

struct FourierResult {
    std::complex<double> value{0.0, 0.0};
    double error = 0.0;
    double omega_max = 0.0; // where explicit integration stopped
    int subdivisions = 0;
    bool tail_model_used = false;
};

/// Computes F = \int_0^inf e^{-i y w} psi(w) dw for a decaying complex
/// envelope psi. Blocks [0,1], [1,2], [2,4], ... are integrated explicitly
/// (half-period panel alignment once y*len spans several oscillations) and
/// the far tail is closed out with a power-law model of |psi| combined with
/// integration by parts. Throws ConvergenceError when |psi| neither falls
/// below cfg.truncation_threshold nor admits a usable tail model within the
/// omega budget.
FourierResult fourier_integral(const std::function<std::complex<double>(double)>& psi, double y,
                               const QuadratureConfig& cfg);

} // namespace gfmix

#endif

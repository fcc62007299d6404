// Copyright 2026 the gfmix authors
// SPDX-License-Identifier: Apache-2.0

#include "gfmix/quadrature.hpp"
#include "gfmix/errors.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <queue>
#include <stdexcept>

namespace gfmix {

namespace {

// Gauss 7 / Kronrod 15 abscissae and weights on [-1, 1] (QUADPACK values).
constexpr double kXgk[8] = {
    0.991455371120812639206854697526329, 0.949107912342758524526189684047851,
    0.864864423359769072789712788640926, 0.741531185599394439863864773280788,
    0.586087235467691130294144838258730, 0.405845151377397166906606412076961,
    0.207784955007898467600689403773245, 0.000000000000000000000000000000000};

constexpr double kWgk[8] = {
    0.022935322010529224963732008058970, 0.063092092629978553290700663189204,
    0.104790010322250183839876322541518, 0.140653259715525918745189590510238,
    0.169004726639267902826583426598550, 0.190350578064785409913256402421014,
    0.204432940075298892414161999234649, 0.209482141084727828012999174891714};

constexpr double kWg[4] = {
    0.129484966168869693270611432679082, 0.279705391489276667901467771423780,
    0.381830050505118944950369775488975, 0.417959183673469387755102040816327};

template <typename T>
struct Panel {
    double lo = 0.0;
    double hi = 0.0;
    T value{};
    double error = 0.0;
};

template <typename T, typename F>
Panel<T> gk15(const F& f, double lo, double hi) {
    const double center = 0.5 * (lo + hi);
    const double half = 0.5 * (hi - lo);

    T fc = f(center);
    T kronrod = kWgk[7] * fc;
    T gauss = kWg[3] * fc;
    for (int j = 0; j < 7; ++j) {
        const T f1 = f(center - half * kXgk[j]);
        const T f2 = f(center + half * kXgk[j]);
        kronrod += kWgk[j] * (f1 + f2);
        if (j % 2 == 1) gauss += kWg[j / 2] * (f1 + f2);
    }
    Panel<T> p;
    p.lo = lo;
    p.hi = hi;
    p.value = half * kronrod;
    p.error = std::abs(half * (kronrod - gauss));
    return p;
}

template <typename T>
struct ByError {
    bool operator()(const Panel<T>& a, const Panel<T>& b) const { return a.error < b.error; }
};

// Adaptive refinement starting from a prescribed partition. `budget` counts
// bisections; the initial panels are free.
template <typename T, typename F>
Panel<T> adapt(const F& f, const std::vector<double>& edges, double abs_tol, double rel_tol,
               int budget, int* used) {
    std::priority_queue<Panel<T>, std::vector<Panel<T>>, ByError<T>> heap;
    T total{};
    double total_err = 0.0;
    for (std::size_t i = 0; i + 1 < edges.size(); ++i) {
        Panel<T> p = gk15<T>(f, edges[i], edges[i + 1]);
        if (!std::isfinite(std::abs(p.value)))
            throw ConvergenceError("quadrature: non-finite integrand on [" +
                                   std::to_string(p.lo) + ", " + std::to_string(p.hi) + "]");
        total += p.value;
        total_err += p.error;
        heap.push(p);
    }
    int spent = 0;
    while (total_err > std::max(abs_tol, rel_tol * std::abs(total))) {
        if (spent >= budget)
            throw ConvergenceError("quadrature: subdivision budget exhausted (error " +
                                   std::to_string(total_err) + ")");
        Panel<T> worst = heap.top();
        heap.pop();
        const double mid = 0.5 * (worst.lo + worst.hi);
        if (mid <= worst.lo || mid >= worst.hi)
            throw ConvergenceError("quadrature: interval too small to subdivide at " +
                                   std::to_string(mid));
        Panel<T> left = gk15<T>(f, worst.lo, mid);
        Panel<T> right = gk15<T>(f, mid, worst.hi);
        if (!std::isfinite(std::abs(left.value)) || !std::isfinite(std::abs(right.value)))
            throw ConvergenceError("quadrature: non-finite integrand near " + std::to_string(mid));
        total += left.value + right.value - worst.value;
        total_err += left.error + right.error - worst.error;
        heap.push(left);
        heap.push(right);
        ++spent;
    }
    if (used) *used += spent;
    Panel<T> out;
    out.lo = edges.front();
    out.hi = edges.back();
    out.value = total;
    out.error = total_err;
    return out;
}

} // namespace

void QuadratureConfig::validate() const {
    if (!(abs_tol > 0.0) || !(rel_tol > 0.0))
        throw std::invalid_argument("QuadratureConfig: tolerances must be positive");
    if (max_subdivisions < 1)
        throw std::invalid_argument("QuadratureConfig: max_subdivisions must be >= 1");
    if (!(truncation_threshold > 0.0))
        throw std::invalid_argument("QuadratureConfig: truncation_threshold must be positive");
}

IntegralEstimate integrate(const std::function<double(double)>& f, double lo, double hi,
                           double abs_tol, double rel_tol, int max_subdivisions) {
    if (lo == hi) return {0.0, 0.0, 0};
    if (lo > hi) {
        IntegralEstimate r = integrate(f, hi, lo, abs_tol, rel_tol, max_subdivisions);
        r.value = -r.value;
        return r;
    }
    int used = 0;
    Panel<double> p = adapt<double>(f, {lo, hi}, abs_tol, rel_tol, max_subdivisions, &used);
    return {p.value, p.error, used};
}

IntegralEstimate gk15_panel(const std::function<double(double)>& f, double lo, double hi) {
    Panel<double> p = gk15<double>(f, lo, hi);
    return {p.value, p.error, 0};
}

double grow_until_negligible(const std::function<double(double)>& magnitude, double hi0,
                             double cutoff, int max_doublings) {
    double hi = std::max(hi0, 1e-300);
    for (int i = 0; i < max_doublings; ++i) {
        if (std::abs(magnitude(hi)) < cutoff && std::abs(magnitude(0.731 * hi)) < cutoff)
            return hi;
        hi *= 2.0;
    }
    throw ConvergenceError("truncation search: magnitude never fell below cutoff " +
                           std::to_string(cutoff));
}

double pairwise_sum(std::span<const double> terms) {
    const std::size_t n = terms.size();
    if (n == 0) return 0.0;
    if (n <= 8) {
        double s = 0.0;
        for (double t : terms) s += t;
        return s;
    }
    const std::size_t half = n / 2;
    return pairwise_sum(terms.first(half)) + pairwise_sum(terms.subspan(half));
}

FourierResult fourier_integral(const std::function<std::complex<double>(double)>& psi, double y,
                               const QuadratureConfig& cfg) {
    cfg.validate();
    using cplx = std::complex<double>;
    const double yabs = std::abs(y);
    const double pi = std::numbers::pi;
    const cplx iy(0.0, y);

    auto integrand = [&](double w) -> cplx { return std::exp(cplx(0.0, -y * w)) * psi(w); };
    auto envelope = [&](double w) {
        return std::max(std::abs(psi(w)), std::abs(psi(1.2105 * w)));
    };

    FourierResult res;
    int budget = cfg.max_subdivisions;
    const double block_tol = cfg.abs_tol / 128.0;

    double lo = 0.0;
    double hi = 1.0;
    double mag_prev = envelope(0.5);
    double q_prev = 0.0;
    bool have_q_prev = false;

    const int kMaxBlocks = 60;
    for (int k = 0; k <= kMaxBlocks; ++k) {
        // Integrate [lo, hi] explicitly. Align panel edges to half-periods
        // pi/|y| once the block spans several oscillations so each panel sees
        // bounded variation of the phase factor.
        std::vector<double> edges{lo};
        if (yabs * (hi - lo) > 4.0 * pi) {
            const double step = pi / yabs;
            double b = std::ceil(lo / step + 0.5) * step;
            for (; b < hi - 0.25 * step; b += step) edges.push_back(b);
        }
        edges.push_back(hi);
        int used = 0;
        Panel<cplx> block = adapt<cplx>(integrand, edges, block_tol, cfg.rel_tol, budget, &used);
        budget -= used;
        res.subdivisions += used + static_cast<int>(edges.size()) - 1;
        res.value += block.value;
        res.error += block.error;
        res.omega_max = hi;

        const double mag = envelope(hi);
        const double accept_tol =
            0.25 * std::max(cfg.abs_tol, cfg.rel_tol * std::abs(res.value));

        if (mag < cfg.truncation_threshold) {
            res.error += mag * std::min(hi, 10.0 / std::max(yabs, 1.0 / hi));
            return res;
        }

        // Power-law model of the envelope over the last octave.
        const double q = std::log2(mag_prev / mag);
        const double dq = have_q_prev ? std::abs(q - q_prev) : std::numeric_limits<double>::infinity();
        const bool model_ok = std::isfinite(q) && q > 0.2 && dq < 0.05 * q + 1e-3;

        if (model_ok) {
            const cplx phi_end = psi(hi);
            if (yabs * hi >= 6.0) {
                // Four integration-by-parts terms, derivatives modeled from
                // the power-law exponent: psi^(j) ~ (-1)^j q(q+1)..(q+j-1)
                // psi / w^j.
                const cplx phase = std::exp(cplx(0.0, -y * hi));
                cplx tail{0.0, 0.0};
                cplx deriv = phi_end;
                cplx denom{1.0, 0.0};
                for (int j = 0; j < 4; ++j) {
                    denom *= iy;
                    tail += deriv / denom;
                    deriv *= -(q + j) / hi;
                }
                const double ya4 = (yabs * hi) * (yabs * yabs * yabs);
                const double tail_err =
                    8.0 * q * (q + 1.0) * (q + 2.0) * (q + 3.0) * mag / (hi * hi * ya4);
                if (tail_err <= accept_tol) {
                    res.value += phase * tail;
                    res.error += tail_err;
                    res.tail_model_used = true;
                    return res;
                }
            } else if (yabs * hi < 0.05 && q > 1.05) {
                // Oscillation negligible across the modeled tail mass.
                const cplx r0 = phi_end * hi / (q - 1.0);
                const double tail_err =
                    std::abs(r0) * (3.0 * dq + (yabs * hi) * (yabs * hi)) + 1e-3 * cfg.abs_tol;
                if (tail_err <= accept_tol) {
                    res.value += r0;
                    res.error += tail_err;
                    res.tail_model_used = true;
                    return res;
                }
            }
        }

        q_prev = q;
        have_q_prev = true;
        mag_prev = mag;
        lo = hi;
        hi *= 2.0;
    }
    throw ConvergenceError(
        "fourier_integral: |phi| never fell below the truncation threshold and no usable "
        "tail model emerged before the omega budget (omega_max " +
        std::to_string(res.omega_max) + ")");
}

} // namespace gfmix

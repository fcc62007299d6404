// Copyright 2026 the gfmix authors
// SPDX-License-Identifier: Apache-2.0

// Acceptance suite: one pass/fail line per criterion, nonzero exit when any
// fails. Tolerances are fixed here, not configurable.

#include "gfmix/accessibility.hpp"
#include "gfmix/defun.hpp"
#include "gfmix/dist_spec.hpp"
#include "gfmix/mixtures.hpp"
#include "gfmix/quadrature.hpp"
#include "gfmix/transforms.hpp"

#include "app.hpp"

#include <cmath>
#include <cstdio>
#include <functional>
#include <sstream>
#include <string>
#include <vector>

namespace {

using namespace gfmix;
namespace acc = gfmix::accessibility;
using kernels::Family;
using kernels::KernelDistribution;

int g_failures = 0;

void report(int criterion, const std::string& what, bool passed, double measured, double tol) {
    std::printf("%s  criterion %2d: %s (measured %.3e, tol %.1e)\n", passed ? "PASS" : "FAIL",
                criterion, what.c_str(), measured, tol);
    if (!passed) ++g_failures;
}

std::vector<double> s_grid_for(const acc::AccessibilityMapping& m,
                               const std::vector<std::vector<double>>& params, std::size_t n) {
    const double top = 0.9 * acc::epsilon1_min(m, params);
    std::vector<double> s;
    for (std::size_t i = 0; i < n; ++i)
        s.push_back(top * static_cast<double>(i) / static_cast<double>(n - 1));
    return s;
}

// Criterion 1: Definition 1 (iii) identities for the five registered
// mappings over the full parameter grids, residual <= 1e-10.
void criterion_1() {
    const double tol = 1e-10;
    double worst = 0.0;
    bool ok = true;
    auto run = [&](const acc::AccessibilityMapping& m,
                   const std::vector<std::vector<double>>& grid) {
        const auto rep = acc::verify_definition1(m, grid, s_grid_for(m, grid, 50), tol);
        worst = std::max(worst, rep.max_abs_residual);
        ok = ok && rep.passed;
    };
    const std::vector<std::vector<double>> scalar_grid = {{0.25}, {0.5}, {1.0}, {2.0}, {4.0}};
    for (double kappa : {0.5, 1.0, 2.0})
        run(acc::make_builtin("poisson-to-normal", {{"kappa", kappa}}), scalar_grid);
    for (double r : {1.0, 2.0, 5.0})
        run(acc::make_builtin("gamma-to-negbin", {{"r", r}}), scalar_grid);
    run(acc::make_builtin("exp-to-laplace"), scalar_grid);
    run(acc::make_builtin("laplace-to-discrete-laplace"), scalar_grid);
    run(acc::make_builtin("uniform-to-defun"), {{0.5, 1.0}, {1.0, 4.0}, {2.0, 3.0}});
    report(1, "mapping identities for all five registered pairs", ok && worst <= tol, worst,
           tol);
}

// Criterion 2: closed-form pdf vs Gil-Pelaez inversion of the cf on 200-point
// grids over [-10 sqrt(b), 10 sqrt(b)].
void criterion_2() {
    const double tol = 1e-6;
    QuadratureConfig cfg;
    cfg.abs_tol = 1e-8;
    cfg.rel_tol = 1e-8;
    double worst = 0.0;
    for (auto [a, b] : std::vector<std::pair<double, double>>{{0.0, 1.0}, {0.5, 1.0}, {1.0, 4.0}}) {
        const auto d = defun::DifferentiatedErrorFunction::make(a, b);
        const auto cf = cf_object(AnyDistribution(d));
        const double lim = 10.0 * std::sqrt(b);
        for (int i = 0; i < 200; ++i) {
            const double y = -lim + 2.0 * lim * i / 199.0;
            const double inverted = transforms::gil_pelaez_pdf(cf, y, cfg);
            worst = std::max(worst, std::abs(inverted - defun::pdf(d, y)));
        }
    }
    report(2, "closed-form pdf equals cf inversion for three (a,b) sets", worst <= tol, worst,
           tol);
}

// Criterion 3: quadrature moments of the pdf: mean 0 (1e-8), variance a+b
// (1e-6), unit mass (1e-8).
void criterion_3() {
    double worst_mean = 0.0, worst_var = 0.0, worst_mass = 0.0;
    for (auto [a, b] : std::vector<std::pair<double, double>>{{0.0, 1.0}, {0.5, 1.0}, {1.0, 4.0}}) {
        const auto d = defun::DifferentiatedErrorFunction::make(a, b);
        const double lim = 14.0 * std::sqrt(b);
        auto integ = [&](auto&& f) {
            return integrate(f, -lim, lim, 1e-11, 1e-11, 20000).value;
        };
        worst_mass = std::max(worst_mass,
                              std::abs(integ([&](double y) { return defun::pdf(d, y); }) - 1.0));
        worst_mean =
            std::max(worst_mean, std::abs(integ([&](double y) { return y * defun::pdf(d, y); })));
        worst_var = std::max(
            worst_var,
            std::abs(integ([&](double y) { return y * y * defun::pdf(d, y); }) - (a + b)));
    }
    report(3, "defun quadrature mean is zero", worst_mean <= 1e-8, worst_mean, 1e-8);
    report(3, "defun quadrature variance equals a+b", worst_var <= 1e-6, worst_var, 1e-6);
    report(3, "defun quadrature mass is one", worst_mass <= 1e-8, worst_mass, 1e-8);
}

// Criterion 4: the sampler's scale-mixture cf identity (<= 1e-12 on [0,10])
// and the n = 1e6 sample variance inside a 4-sigma band around a+b.
void criterion_4() {
    double worst_cf = 0.0;
    bool var_ok = true;
    double worst_var_sigmas = 0.0;
    for (auto [a, b] : std::vector<std::pair<double, double>>{{0.0, 1.0}, {0.5, 1.0}, {1.0, 4.0}}) {
        const auto d = defun::DifferentiatedErrorFunction::make(a, b);
        for (double w = 0.0; w <= 10.0; w += 0.25) {
            const double avg =
                integrate([&](double v) { return std::exp(-v * w * w); }, a, b, 1e-15, 1e-15,
                          4000)
                    .value /
                (b - a);
            worst_cf = std::max(worst_cf, std::abs(avg - defun::cf_real(d, w)));
        }
        const auto xs = defun::sample(d, 1000000, 3);
        double mean = 0.0;
        for (double x : xs) mean += x;
        mean /= static_cast<double>(xs.size());
        double var = 0.0;
        for (double x : xs) var += (x - mean) * (x - mean);
        var /= static_cast<double>(xs.size() - 1);
        const double mu4 = 4.0 * (a * a + a * b + b * b);
        const double band = 4.0 * std::sqrt((mu4 - (a + b) * (a + b)) / 1e6);
        worst_var_sigmas = std::max(worst_var_sigmas, std::abs(var - (a + b)) / (band / 4.0));
        var_ok = var_ok && std::abs(var - (a + b)) <= band;
    }
    report(4, "sampler scale-mixture cf identity", worst_cf <= 1e-12, worst_cf, 1e-12);
    report(4, "sample variance within 4 sigma of a+b at n=1e6", var_ok, worst_var_sigmas, 4.0);
}

// Criterion 5: Gamma-mixed Poisson pmf equals NegBin(r, theta/(1+theta)) pmf
// to 1e-10 for x <= 50 over the r, theta grid.
void criterion_5() {
    const double tol = 1e-10;
    double worst = 0.0;
    QuadratureConfig cfg;
    cfg.abs_tol = 1e-12;
    cfg.rel_tol = 1e-12;
    cfg.max_subdivisions = 20000;
    for (double r : {1.0, 2.0, 5.0})
        for (double theta : {0.5, 1.0, 2.0}) {
            auto kernel =
                KernelDistribution::make(Family::Poisson, {{"lambda", 1.0}}, {"lambda"});
            std::ostringstream spec;
            spec << "gamma:r=" << r << ",theta=" << theta;
            const auto mm = mixtures::MixtureModel::make(
                kernel, mixtures::MixingDensity::parse(spec.str()));
            const auto nb = KernelDistribution::make(Family::NegativeBinomial,
                                                     {{"r", r}, {"p", theta / (1.0 + theta)}});
            double prev = 0.0;
            for (double x = 0.0; x <= 50.0; x += 1.0) {
                const double c = mixtures::mixture_cdf(mm, x, cfg);
                worst = std::max(worst, std::abs((c - prev) - kernels::pdf(nb, x)));
                prev = c;
            }
        }
    report(5, "gamma-mixed poisson equals negative binomial pmf to x=50", worst <= tol, worst,
           tol);
}

// Criterion 6: mixed-MGF transport through exp-to-laplace with Gamma(2,1)
// mixing on 20 s points.
void criterion_6() {
    const double tol = 1e-8;
    const auto m = acc::make_builtin("exp-to-laplace");
    const auto g = mixtures::MixingDensity::parse("gamma:r=2,theta=1");
    const double eps = m.epsilon1(std::vector<double>{g.hi()});
    std::vector<double> s_grid;
    for (int i = 0; i < 20; ++i) s_grid.push_back(0.9 * eps * i / 19.0);
    const auto rep = acc::transport_mixed_mgf(m, g, s_grid, tol);
    report(6, "mixed-MGF transport, exp-to-laplace with Gamma(2,1) mixing", rep.passed,
           rep.max_abs_residual, tol);
}

// Criterion 7: scale / location / additive-closure identities at 1e-12 and
// strict negative binomial overdispersion.
void criterion_7() {
    const double tol = 1e-12;
    double worst = 0.0;

    for (double theta : {0.5, 1.0, 2.0, 4.0}) {
        const auto g = KernelDistribution::make(Family::Gamma, {{"r", 2.5}, {"theta", theta}});
        const auto g1 = KernelDistribution::make(Family::Gamma, {{"r", 2.5}, {"theta", 1.0}});
        const auto w =
            KernelDistribution::make(Family::Weibull, {{"theta", theta}, {"tau", 1.7}});
        const auto w1 = KernelDistribution::make(Family::Weibull, {{"theta", 1.0}, {"tau", 1.7}});
        const auto p =
            KernelDistribution::make(Family::Pareto1, {{"alpha", 2.0}, {"theta", theta}});
        const auto p1 =
            KernelDistribution::make(Family::Pareto1, {{"alpha", 2.0}, {"theta", 1.0}});
        for (double x : {0.3, 1.0, 2.7, 8.0}) {
            worst = std::max(worst, std::abs(kernels::cdf(g, x) - kernels::cdf(g1, x / theta)));
            worst = std::max(worst, std::abs(kernels::cdf(w, x) - kernels::cdf(w1, x / theta)));
            worst = std::max(worst, std::abs(kernels::cdf(p, x) - kernels::cdf(p1, x / theta)));
        }
    }
    for (double m : {-2.0, 0.5, 3.0}) {
        const auto n = KernelDistribution::make(Family::Normal, {{"m", m}, {"sigma2", 1.3}});
        const auto n0 = KernelDistribution::make(Family::Normal, {{"m", 0.0}, {"sigma2", 1.3}});
        const auto l = KernelDistribution::make(Family::Laplace, {{"m", m}, {"sigma", 0.8}});
        const auto l0 = KernelDistribution::make(Family::Laplace, {{"m", 0.0}, {"sigma", 0.8}});
        const auto gb = KernelDistribution::make(Family::Gumbel, {{"m", m}, {"sigma", 1.1}});
        const auto gb0 = KernelDistribution::make(Family::Gumbel, {{"m", 0.0}, {"sigma", 1.1}});
        for (double x : {-1.0, 0.2, 2.5}) {
            worst = std::max(worst, std::abs(kernels::cdf(n, x) - kernels::cdf(n0, x - m)));
            worst = std::max(worst, std::abs(kernels::cdf(l, x) - kernels::cdf(l0, x - m)));
            worst = std::max(worst, std::abs(kernels::cdf(gb, x) - kernels::cdf(gb0, x - m)));
        }
    }
    for (double r : {0.5, 1.0, 2.0}) {
        const auto pois = KernelDistribution::make(Family::Poisson, {{"lambda", r}});
        const auto pois2 = KernelDistribution::make(Family::Poisson, {{"lambda", 2.0 * r}});
        const auto nb =
            KernelDistribution::make(Family::NegativeBinomial, {{"r", r}, {"p", 0.4}});
        const auto nb2 =
            KernelDistribution::make(Family::NegativeBinomial, {{"r", 2.0 * r}, {"p", 0.4}});
        const auto gam = KernelDistribution::make(Family::Gamma, {{"r", r}, {"theta", 0.7}});
        const auto gam2 =
            KernelDistribution::make(Family::Gamma, {{"r", 2.0 * r}, {"theta", 0.7}});
        for (double w : {0.2, 1.0, 2.3}) {
            worst = std::max(
                worst, std::abs(kernels::cf(pois2, w) - kernels::cf(pois, w) * kernels::cf(pois, w)));
            worst = std::max(
                worst, std::abs(kernels::cf(nb2, w) - kernels::cf(nb, w) * kernels::cf(nb, w)));
            worst = std::max(
                worst, std::abs(kernels::cf(gam2, w) - kernels::cf(gam, w) * kernels::cf(gam, w)));
        }
    }
    report(7, "scale, location and additive-closure identities", worst <= tol, worst, tol);

    bool over = true;
    double min_gap = 1e300;
    for (double r : {0.5, 1.0, 2.0, 5.0})
        for (double p : {0.1, 0.25, 0.5, 0.75, 0.9}) {
            const auto nb = KernelDistribution::make(Family::NegativeBinomial,
                                                     {{"r", r}, {"p", p}});
            const double h = 1e-4;
            const double m1 = (kernels::mgf(nb, h) - kernels::mgf(nb, -h)) / (2.0 * h);
            const double m2 = (kernels::mgf(nb, h) - 2.0 + kernels::mgf(nb, -h)) / (h * h);
            const double var = m2 - m1 * m1;
            over = over && var > m1;
            min_gap = std::min(min_gap, var - m1);
        }
    report(7, "negative binomial overdispersion strict on the grid", over, min_gap, 0.0);
}

// Criterion 8: tail envelope ratio bound for (0.5, 1) and (1, 4).
void criterion_8() {
    double worst = 0.0;
    bool ok = true;
    for (auto [a, b] : std::vector<std::pair<double, double>>{{0.5, 1.0}, {1.0, 4.0}}) {
        const auto d = defun::DifferentiatedErrorFunction::make(a, b);
        const auto rep =
            defun::tail_envelope_check(d, 5.0 * std::sqrt(b), 10.0 * std::sqrt(b), 64);
        ok = ok && rep.passed && !rep.inconclusive;
        worst = std::max(worst, rep.max_ratio / rep.min_ratio);
    }
    report(8, "tail envelope ratio bounded on [5 sqrt(b), 10 sqrt(b)]", ok, worst, 4.0);
}

// Criterion 9: the figure1 CSV emitted by the CLI is symmetric and unimodal,
// the peak matches the closed form within 1e-9, and the grid variance grows
// with b for fixed a.
void criterion_9() {
    auto emit = [&](double a, double b, const std::string& grid) {
        std::ostringstream out, err;
        std::ostringstream astr, bstr;
        astr << a;
        bstr << b;
        const int code = cli::run({"figure1", "--a", astr.str(), "--b", bstr.str(), "--grid",
                                   grid},
                                  out, err);
        if (code != 0) throw std::runtime_error("figure1 failed: " + err.str());
        std::vector<std::pair<double, double>> rows;
        std::string line;
        std::istringstream is(out.str());
        std::getline(is, line); // header
        while (std::getline(is, line)) {
            const auto comma = line.find(',');
            rows.emplace_back(std::stod(line.substr(0, comma)),
                              std::stod(line.substr(comma + 1)));
        }
        return rows;
    };

    const auto rows = emit(1.0, 4.0, "-10:10:0.1");
    bool ok = rows.size() == 201;
    double worst_sym = 0.0;
    for (std::size_t i = 0; i < 100; ++i) {
        worst_sym = std::max(worst_sym, std::abs(rows[i].second - rows[200 - i].second) /
                                            (1.0 + std::abs(rows[i].second)));
    }
    ok = ok && worst_sym <= 1e-9;
    const double peak_err = std::abs(rows[100].second - 0.18806319451591876);
    ok = ok && peak_err <= 1e-9;
    for (std::size_t i = 101; i + 1 < rows.size() && ok; ++i)
        ok = rows[i + 1].second <= rows[i].second + 1e-15;

    auto grid_variance = [&](double a, double b) {
        const double lim = 10.0 * std::sqrt(b);
        std::ostringstream grid;
        grid << -lim << ":" << lim << ":" << lim / 100.0;
        const auto r = emit(a, b, grid.str());
        double v = 0.0;
        for (std::size_t i = 0; i + 1 < r.size(); ++i) {
            const double h = r[i + 1].first - r[i].first;
            v += 0.5 * h *
                 (r[i].first * r[i].first * r[i].second +
                  r[i + 1].first * r[i + 1].first * r[i + 1].second);
        }
        return v;
    };
    const double v2 = grid_variance(1.0, 2.0);
    const double v4 = grid_variance(1.0, 4.0);
    const double v8 = grid_variance(1.0, 8.0);
    ok = ok && v2 < v4 && v4 < v8;
    report(9, "figure1 csv symmetric, unimodal, correct peak, variance grows with b", ok,
           std::max(worst_sym, peak_err), 1e-9);
}

// Criterion 10: Gil-Pelaez round trip for Normal and Laplace across +-6 sd.
void criterion_10() {
    const double tol = 1e-6;
    QuadratureConfig cfg;
    cfg.abs_tol = 1e-8;
    cfg.rel_tol = 1e-8;
    double worst = 0.0;
    auto sweep = [&](const KernelDistribution& d, double mean, double sd) {
        const auto cf = cf_object(AnyDistribution(d));
        for (int i = 0; i < 100; ++i) {
            const double y = mean - 6.0 * sd + 12.0 * sd * i / 99.0;
            worst = std::max(worst,
                             std::abs(transforms::gil_pelaez_pdf(cf, y, cfg) - kernels::pdf(d, y)));
        }
    };
    sweep(KernelDistribution::make(Family::Normal, {{"m", 0.0}, {"sigma2", 1.0}}), 0.0, 1.0);
    sweep(KernelDistribution::make(Family::Normal, {{"m", 1.0}, {"sigma2", 4.0}}), 1.0, 2.0);
    sweep(KernelDistribution::make(Family::Laplace, {{"m", 0.0}, {"sigma", 1.0}}), 0.0,
          std::sqrt(2.0));
    sweep(KernelDistribution::make(Family::Laplace, {{"m", 0.0}, {"sigma", 2.0}}), 0.0,
          2.0 * std::sqrt(2.0));
    report(10, "gil-pelaez round trip for normal and laplace densities", worst <= tol, worst,
           tol);
}

} // namespace

int main() {
    criterion_1();
    criterion_2();
    criterion_3();
    criterion_4();
    criterion_5();
    criterion_6();
    criterion_7();
    criterion_8();
    criterion_9();
    criterion_10();
    if (g_failures == 0) {
        std::printf("all acceptance criteria passed\n");
        return 0;
    }
    std::printf("%d acceptance check(s) failed\n", g_failures);
    return 1;
}

// Copyright 2026 the gfmix authors
// SPDX-License-Identifier: Apache-2.0

#include "gfmix/accessibility.hpp"
#include "gfmix/defun.hpp"
#include "gfmix/dist_spec.hpp"
#include "gfmix/mixtures.hpp"
#include "gfmix/transforms.hpp"

#include <benchmark/benchmark.h>

namespace {

using namespace gfmix;
using kernels::Family;
using kernels::KernelDistribution;

void BM_KernelMgf(benchmark::State& state) {
    const auto d = KernelDistribution::make(Family::Gamma, {{"r", 2.0}, {"theta", 0.5}});
    double s = 0.0;
    for (auto _ : state) {
        s += 1e-9;
        benchmark::DoNotOptimize(kernels::mgf(d, 0.3 + s));
    }
}
BENCHMARK(BM_KernelMgf);

void BM_DefunPdf(benchmark::State& state) {
    const auto d = defun::DifferentiatedErrorFunction::make(1.0, 4.0);
    const double y = static_cast<double>(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(defun::pdf(d, y));
}
BENCHMARK(BM_DefunPdf)->Arg(0)->Arg(3)->Arg(15);

void BM_GilPelaez(benchmark::State& state) {
    const auto d = defun::DifferentiatedErrorFunction::make(
        state.range(0) == 0 ? 0.0 : 1.0, 4.0);
    const auto cf = cf_object(AnyDistribution(d));
    QuadratureConfig cfg;
    cfg.abs_tol = 1e-8;
    cfg.rel_tol = 1e-8;
    for (auto _ : state)
        benchmark::DoNotOptimize(transforms::gil_pelaez_pdf(cf, 2.5, cfg));
}
BENCHMARK(BM_GilPelaez)->Arg(0)->Arg(1); // 0: power-law tail, 1: gaussian tail

void BM_MixtureMgf(benchmark::State& state) {
    const auto kernel =
        KernelDistribution::make(Family::Poisson, {{"lambda", 1.0}}, {"lambda"});
    const auto mm = mixtures::MixtureModel::make(
        kernel, mixtures::MixingDensity::parse("gamma:r=2,theta=1"));
    for (auto _ : state) benchmark::DoNotOptimize(mixtures::mixture_mgf(mm, 0.2));
}
BENCHMARK(BM_MixtureMgf);

void BM_VerifyDefinition1(benchmark::State& state) {
    const auto m = accessibility::make_builtin("laplace-to-discrete-laplace");
    for (auto _ : state)
        benchmark::DoNotOptimize(accessibility::verify_definition1(m, 1e-10));
}
BENCHMARK(BM_VerifyDefinition1);

void BM_DefunSample(benchmark::State& state) {
    const auto d = defun::DifferentiatedErrorFunction::make(1.0, 4.0);
    for (auto _ : state) benchmark::DoNotOptimize(defun::sample(d, 1024, 7));
    state.SetItemsProcessed(state.iterations() * 1024);
}
BENCHMARK(BM_DefunSample);

} // namespace

BENCHMARK_MAIN();

// Copyright (c) 2026 qfrac contributors. Apache-2.0 license; see LICENSE.

#include <benchmark/benchmark.h>

#include "qfrac/builders.hpp"
#include "qfrac/cfrac.hpp"
#include "qfrac/qpoch.hpp"
#include "qfrac/sampling.hpp"
#include "qfrac/series.hpp"
#include "qfrac/verify.hpp"

namespace {

using namespace qfrac;

ParamPoint bench_point() {
    return ParamPoint{Rational(1, 2), Rational(1, 3), Rational(1, 5), 0};
}

void BM_pochhammer(benchmark::State& state) {
    const Rational a(3, 7), q(1, 2);
    const int n = static_cast<int>(state.range(0));
    for (auto _ : state) {
        benchmark::DoNotOptimize(pochhammer(a, q, n));
    }
}
BENCHMARK(BM_pochhammer)->Arg(16)->Arg(64);

void BM_build_g(benchmark::State& state) {
    const ParamPoint pt = bench_point();
    const int order = static_cast<int>(state.range(0));
    for (auto _ : state) {
        benchmark::DoNotOptimize(build_g(pt, order));
    }
}
BENCHMARK(BM_build_g)->Arg(16)->Arg(64);

void BM_series_recip(benchmark::State& state) {
    const Series g = build_g(bench_point(), static_cast<int>(state.range(0)));
    for (auto _ : state) {
        benchmark::DoNotOptimize(recip(g));
    }
}
BENCHMARK(BM_series_recip)->Arg(16)->Arg(64);

void BM_extract_coeffs(benchmark::State& state) {
    const int m = static_cast<int>(state.range(0));
    const auto [s0, s1] = build_s0_s1(bench_point(), m);
    for (auto _ : state) {
        benchmark::DoNotOptimize(extract_coeffs(s0, s1, m, bench_point()));
    }
}
BENCHMARK(BM_extract_coeffs)->Arg(10)->Arg(20);

void BM_closed_coeffs(benchmark::State& state) {
    const int m = static_cast<int>(state.range(0));
    for (auto _ : state) {
        benchmark::DoNotOptimize(closed_coeffs(bench_point(), m));
    }
}
BENCHMARK(BM_closed_coeffs)->Arg(10)->Arg(20);

void BM_convergent_series(benchmark::State& state) {
    const int m = static_cast<int>(state.range(0));
    const CfCoeffs cf = closed_coeffs(bench_point(), m);
    for (auto _ : state) {
        benchmark::DoNotOptimize(convergent(cf, m, m + 1));
    }
}
BENCHMARK(BM_convergent_series)->Arg(10)->Arg(20);

void BM_check_theorem(benchmark::State& state) {
    const int m = static_cast<int>(state.range(0));
    const ParamPoint pt = sample_point(7, m + 5);
    for (auto _ : state) {
        benchmark::DoNotOptimize(check_theorem(pt, m, m + 4));
    }
}
BENCHMARK(BM_check_theorem)->Arg(10)->Arg(20);

void BM_sample_point(benchmark::State& state) {
    std::uint64_t seed = 0;
    for (auto _ : state) {
        benchmark::DoNotOptimize(sample_point(seed++, 24));
    }
}
BENCHMARK(BM_sample_point);

} // namespace

BENCHMARK_MAIN();

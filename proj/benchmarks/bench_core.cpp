// Copyright (c) 2026 the oscint authors.
// SPDX-License-Identifier: Apache-2.0

#include <benchmark/benchmark.h>

#include "oscint/harness.hpp"
#include "oscint/oscquad.hpp"
#include "oscint/roots.hpp"
#include "oscint/sublevel.hpp"

using namespace oscint;

namespace {

Poly random_dense(int d, uint64_t seed) {
    Rng rng(seed);
    std::vector<double> c(static_cast<size_t>(d) + 1);
    for (double& v : c) v = rng.uniform(-10.0, 10.0);
    if (std::abs(c.back()) < 0.1) c.back() = 1.0;
    return Poly(std::move(c));
}

void BM_isolate_roots(benchmark::State& state) {
    const Poly p = random_dense(static_cast<int>(state.range(0)), 42);
    for (auto _ : state) {
        auto roots = isolate_roots(p, -20.0, 20.0);
        benchmark::DoNotOptimize(roots);
    }
}
BENCHMARK(BM_isolate_roots)->Arg(8)->Arg(16)->Arg(32);

void BM_sublevel_set(benchmark::State& state) {
    const Poly p = random_dense(static_cast<int>(state.range(0)), 7);
    for (auto _ : state) {
        auto e = sublevel_set(p, 1.0, Domain::ray());
        benchmark::DoNotOptimize(e);
    }
}
BENCHMARK(BM_sublevel_set)->Arg(8)->Arg(32);

void BM_pv1d(benchmark::State& state) {
    std::vector<double> c(static_cast<size_t>(state.range(0)) + 1, 0.0);
    c[1] = 1.0;
    c.back() = 1.0;
    const Poly p(std::move(c));
    for (auto _ : state) {
        auto e = pv_1d(p);
        benchmark::DoNotOptimize(e);
    }
}
BENCHMARK(BM_pv1d)->Arg(3)->Arg(9)->Arg(33);

void BM_In_n2(benchmark::State& state) {
    Rng rng(11);
    const MultiPoly p = random_poly(static_cast<int>(state.range(0)), 2, rng);
    const KernelSpec omega = KernelSpec::from_id("cos:1", 2);
    InOptions opt;
    opt.initial_order = 64;
    opt.fixed_order = true;
    for (auto _ : state) {
        auto e = In(p, omega, opt);
        benchmark::DoNotOptimize(e);
    }
}
BENCHMARK(BM_In_n2)->Arg(4)->Arg(8);

}  // namespace

BENCHMARK_MAIN();

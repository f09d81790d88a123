#include <benchmark/benchmark.h>

#include <cmath>

#include "expfunc/rng.hpp"
#include "expfunc/sim.hpp"

using namespace expfunc;

static void BM_RngNormal(benchmark::State& state) {
    Xoshiro256 rng(123);
    for (auto _ : state) benchmark::DoNotOptimize(rng.next_normal());
}
BENCHMARK(BM_RngNormal);

static void BM_PathDufresne(benchmark::State& state) {
    // one path of the Brownian configuration per iteration
    auto xi = LevyTriplet::brownian_with_drift(1.0, std::sqrt(2.0));
    auto eta = LevyTriplet::deterministic_drift(1.0);
    SimConfig cfg;
    cfg.n_paths = 1;
    cfg.step_dt = 1e-3;
    cfg.horizon_T = 30.0;
    uint64_t seed = 0;
    for (auto _ : state) {
        cfg.seed = ++seed;
        auto s = simulate_functional(xi, eta, cfg);
        benchmark::DoNotOptimize(s.values[0]);
    }
    state.SetItemsProcessed(state.iterations() * 30000);
}
BENCHMARK(BM_PathDufresne);

static void BM_PathStableJumps(benchmark::State& state) {
    auto xi = LevyTriplet::brownian_with_drift(1.0, 1.0);
    auto eta = LevyTriplet::stable_subordinator(0.4, 1.0);
    SimConfig cfg;
    cfg.n_paths = 1;
    cfg.step_dt = 1e-3;
    cfg.horizon_T = 30.0;
    uint64_t seed = 0;
    for (auto _ : state) {
        cfg.seed = ++seed;
        auto s = simulate_functional(xi, eta, cfg);
        benchmark::DoNotOptimize(s.values[0]);
    }
    state.SetItemsProcessed(state.iterations() * 30000);
}
BENCHMARK(BM_PathStableJumps);

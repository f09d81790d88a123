#include <benchmark/benchmark.h>

#include <cmath>

#include "expfunc/bernstein.hpp"
#include "expfunc/laplace_exponent.hpp"
#include "expfunc/quadrature.hpp"
#include "expfunc/range.hpp"
#include "expfunc/stable.hpp"

using namespace expfunc;

static void BM_QuadratureExpTail(benchmark::State& state) {
    for (auto _ : state) {
        auto r = integrate_to_infinity([](double x) { return std::exp(-1.3 * x); }, 0.0);
        benchmark::DoNotOptimize(r.value);
    }
}
BENCHMARK(BM_QuadratureExpTail);

static void BM_StableExponentQuadraturePath(benchmark::State& state) {
    DensityWithTail d;
    d.density = [](double r) { return std::pow(r, -1.4); };
    d.tail_mass = [](double r) { return std::pow(r, -0.4) / 0.4; };
    d.mass_x2_near1 = 1.0 / 1.6;
    d.abs_mass_near1 = 1.0 / 0.6;
    d.tail_abs_mean = std::numeric_limits<double>::infinity();
    d.total_mass = std::numeric_limits<double>::infinity();
    auto spec = LevyTriplet::from_fv_parts(0.0, 0.0, LevyMeasure::density(d));
    for (auto _ : state) {
        benchmark::DoNotOptimize(eval_laplace_exponent(spec, 1.7));
    }
}
BENCHMARK(BM_StableExponentQuadraturePath);

static void BM_IsBernsteinAccept(benchmark::State& state) {
    for (auto _ : state) {
        auto v = is_bernstein([](double u) { return std::pow(u, 0.4); });
        benchmark::DoNotOptimize(v.decision);
    }
}
BENCHMARK(BM_IsBernsteinAccept);

static void BM_CandidateDriverExponent(benchmark::State& state) {
    auto mu = make_stable_law(0.4, 1.0);
    auto xi = LevyTriplet::brownian_with_drift(1.0, 1.0);
    double u = 0.1;
    for (auto _ : state) {
        benchmark::DoNotOptimize(candidate_driver_exponent(mu, xi, u));
        u = u < 100.0 ? u * 1.1 : 0.1;
    }
}
BENCHMARK(BM_CandidateDriverExponent);

static void BM_StableRangeCheck(benchmark::State& state) {
    const BmDriftParams bm{1.0, 1.0};
    for (auto _ : state) {
        auto v = stable_range_check(StableConvolutionSpec::single(0.4, 1.0), bm);
        benchmark::DoNotOptimize(v.decision);
    }
}
BENCHMARK(BM_StableRangeCheck);

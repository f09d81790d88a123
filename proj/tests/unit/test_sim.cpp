#include <doctest.h>

#include <cmath>

#include "expfunc/errors.hpp"
#include "expfunc/sim.hpp"
#include "oracles.hpp"

using namespace expfunc;

TEST_SUITE_BEGIN("sim");

namespace {

SimConfig quick_cfg(int64_t paths, double dt, double T, uint64_t seed) {
    SimConfig cfg;
    cfg.n_paths = paths;
    cfg.step_dt = dt;
    cfg.horizon_T = T;
    cfg.seed = seed;
    return cfg;
}

}  // namespace

TEST_CASE("deterministic pair integrates to one") {
    auto xi = LevyTriplet::deterministic_drift(1.0);
    auto eta = LevyTriplet::deterministic_drift(1.0);
    auto s = simulate_functional(xi, eta, quick_cfg(16, 1e-3, 30.0, 5));
    for (double v : s.values) CHECK(v == doctest::Approx(1.0).epsilon(5e-3));
}

TEST_CASE("reproducibility: identical config gives bit-identical samples") {
    auto xi = LevyTriplet::brownian_with_drift(1.0, 1.0);
    auto eta = LevyTriplet::compound_poisson({{0.5, 1.0}}, 0.3);
    auto a = simulate_functional(xi, eta, quick_cfg(64, 1e-2, 10.0, 99));
    auto b = simulate_functional(xi, eta, quick_cfg(64, 1e-2, 10.0, 99));
    REQUIRE(a.values.size() == b.values.size());
    for (size_t i = 0; i < a.values.size(); ++i) CHECK(a.values[i] == b.values[i]);
}

TEST_CASE("thread count does not change the samples") {
    auto xi = LevyTriplet::brownian_with_drift(1.0, 1.0);
    auto eta = LevyTriplet::stable_subordinator(0.5, 0.5);
    auto cfg1 = quick_cfg(40, 1e-2, 8.0, 1234);
    auto cfg4 = cfg1;
    cfg4.threads = 4;
    auto a = simulate_functional(xi, eta, cfg1);
    auto b = simulate_functional(xi, eta, cfg4);
    for (size_t i = 0; i < a.values.size(); ++i) CHECK(a.values[i] == b.values[i]);
}

TEST_CASE("subordinator eta gives non-negative samples") {
    auto xi = LevyTriplet::brownian_with_drift(1.0, 1.0);
    auto eta = LevyTriplet::stable_subordinator(0.4, 1.0);
    auto s = simulate_functional(xi, eta, quick_cfg(200, 1e-2, 15.0, 7));
    for (double v : s.values) CHECK(v >= 0.0);
}

TEST_CASE("empirical Laplace transform basics") {
    SampleSet s;
    s.values = {1.0, 1.0, 1.0};
    auto est = empirical_laplace(s, 1.0);
    CHECK(est.estimate == doctest::Approx(std::exp(-1.0)));
    CHECK(est.std_error == doctest::Approx(0.0));

    s.values = {0.0, std::log(2.0)};
    est = empirical_laplace(s, 1.0);
    CHECK(est.estimate == doctest::Approx(0.75));
    // two points 1 and 1/2: sd = 0.25 sqrt(2), SE = sd/sqrt(2) = 0.25
    CHECK(est.std_error == doctest::Approx(0.25));
}

TEST_CASE("Dufresne config within Monte Carlo error at moderate n") {
    auto xi = LevyTriplet::brownian_with_drift(1.0, std::sqrt(2.0));
    auto eta = LevyTriplet::deterministic_drift(1.0);
    auto s = simulate_functional(xi, eta, quick_cfg(4000, 5e-3, 30.0, 2024));
    auto est = empirical_laplace(s, 1.0);
    CHECK(std::abs(est.estimate - oracles::kDufresneL1) <= 4.0 * est.std_error);
}

TEST_CASE("bias control: halving dt moves the estimate less than 3 SE") {
    auto xi = LevyTriplet::brownian_with_drift(1.0, std::sqrt(2.0));
    auto eta = LevyTriplet::deterministic_drift(1.0);
    auto coarse = simulate_functional(xi, eta, quick_cfg(3000, 2e-2, 30.0, 31));
    auto fine = simulate_functional(xi, eta, quick_cfg(3000, 1e-2, 30.0, 32));
    auto ec = empirical_laplace(coarse, 1.0);
    auto ef = empirical_laplace(fine, 1.0);
    const double band = 3.0 * std::hypot(ec.std_error, ef.std_error);
    CHECK(std::abs(ec.estimate - ef.estimate) <= band);
}

TEST_CASE("truncation bound dominates the shift from doubling the horizon") {
    auto xi = LevyTriplet::brownian_with_drift(1.0, 1.0);
    auto eta = LevyTriplet::deterministic_drift(1.0);
    auto base = simulate_functional(xi, eta, quick_cfg(1500, 1e-2, 12.0, 77));
    auto longer = simulate_functional(xi, eta, quick_cfg(1500, 1e-2, 24.0, 77));
    const double shift =
        std::abs(empirical_laplace(base, 1.0).estimate - empirical_laplace(longer, 1.0).estimate);
    CHECK(base.truncation_bound >= shift);
}

TEST_CASE("support consistency of simulated configurations") {
    // point support {0.5}: xi = 2t, eta = t
    auto s = simulate_functional(LevyTriplet::deterministic_drift(2.0),
                                 LevyTriplet::deterministic_drift(1.0),
                                 quick_cfg(50, 1e-3, 20.0, 3));
    SupportResult point{SupportKind::point, 0.5, 0.5};
    auto rep = support_consistency(s, point);
    CHECK(rep.passed);
    CHECK(rep.sample_max - rep.sample_min <= 1e-6);

    // [a/b, inf) with a=1, b=2
    auto xi = LevyTriplet::compound_poisson({{-1.0, 1.0}}, 2.0);
    auto eta = LevyTriplet::compound_poisson({{0.5, 1.0}}, 1.0);
    s = simulate_functional(xi, eta, quick_cfg(400, 2e-3, 20.0, 4));
    SupportResult half{SupportKind::right_half_line, 0.5,
                       std::numeric_limits<double>::infinity()};
    rep = support_consistency(s, half);
    CHECK(rep.passed);
    CHECK(rep.sample_min >= 0.5 - 1e-2);

    // full line: eta Brownian
    s = simulate_functional(LevyTriplet::brownian_with_drift(1.0, 1.0),
                            LevyTriplet::brownian_with_drift(0.0, 1.0),
                            quick_cfg(400, 2e-3, 20.0, 5));
    double mn = 1e300, mx = -1e300;
    for (double v : s.values) {
        mn = std::min(mn, v);
        mx = std::max(mx, v);
    }
    CHECK(mn < 0.0);
    CHECK(mx > 0.0);
}

TEST_CASE("point-support spread shrinks with the step size") {
    auto xi = LevyTriplet::deterministic_drift(2.0);
    auto eta = LevyTriplet::deterministic_drift(1.0);
    auto spread = [&](double dt) {
        auto s = simulate_functional(xi, eta, quick_cfg(20, dt, 20.0, 11));
        double mx = -1e300, mn = 1e300, dev = 0.0;
        for (double v : s.values) {
            mx = std::max(mx, v);
            mn = std::min(mn, v);
            dev = std::max(dev, std::abs(v - 0.5));
        }
        CHECK(mx - mn <= 1e-12);  // deterministic paths coincide
        return dev;
    };
    const double coarse = spread(4e-3);
    const double fine = spread(1e-3);
    CHECK(fine < coarse);
    CHECK(fine <= 0.3 * coarse);  // first-order decay in dt
}

TEST_CASE("fixed-point identity") {
    // degenerate pair: the transformed samples differ from the direct ones
    // by discretization only
    auto rep = verify_fixed_point(LevyTriplet::deterministic_drift(1.0),
                                  LevyTriplet::deterministic_drift(1.0),
                                  quick_cfg(32, 1e-3, 25.0, 6), 1.0);
    CHECK(rep.sup_value_distance <= 5e-3);

    // Dufresne config passes the KS test at moderate n
    auto xi = LevyTriplet::brownian_with_drift(1.0, std::sqrt(2.0));
    auto eta = LevyTriplet::deterministic_drift(1.0);
    rep = verify_fixed_point(xi, eta, quick_cfg(3000, 1e-2, 30.0, 8), 1.0);
    CHECK(rep.passed);

    // negative control: scaled samples fail the same KS machinery
    auto s = simulate_functional(xi, eta, quick_cfg(3000, 1e-2, 30.0, 9));
    std::vector<double> scaled;
    for (double v : s.values) scaled.push_back(2.0 * v);
    auto [d, p] = ks_two_sample(s.values, scaled);
    CHECK(p < 1e-3);
}

TEST_CASE("unsupported configurations are refused") {
    SimConfig cfg = quick_cfg(10, 1e-2, 5.0, 1);
    // infinite-activity eta without a cutoff
    cfg.small_jump_cutoff = 0.0;
    CHECK_THROWS_AS(simulate_functional(LevyTriplet::deterministic_drift(1.0),
                                        LevyTriplet::stable_subordinator(0.5, 1.0), cfg),
                    DomainError);
    // xi not drifting to +infinity
    CHECK_THROWS_AS(simulate_functional(LevyTriplet::deterministic_drift(-1.0),
                                        LevyTriplet::deterministic_drift(1.0),
                                        quick_cfg(10, 1e-2, 5.0, 1)),
                    DomainError);
    // bad config
    SimConfig bad = quick_cfg(0, 1e-2, 5.0, 1);
    CHECK_THROWS_AS(simulate_functional(LevyTriplet::deterministic_drift(1.0),
                                        LevyTriplet::deterministic_drift(1.0), bad),
                    DomainError);
}

TEST_SUITE_END();

#include <doctest.h>

#include <cmath>
#include <random>

#include "expfunc/errors.hpp"
#include "expfunc/support.hpp"

using namespace expfunc;

namespace {
const double kInf = std::numeric_limits<double>::infinity();
}

TEST_SUITE_BEGIN("support");

TEST_CASE("shape predicates") {
    auto s = shape_of(LevyTriplet::deterministic_drift(2.0));
    CHECK(s.is_deterministic_drift);
    CHECK(s.is_subordinator);
    CHECK(*s.fv_drift == 2.0);

    s = shape_of(LevyTriplet::brownian_with_drift(1.0, 1.0));
    CHECK(s.infinite_variation);
    CHECK(!s.is_subordinator);
    CHECK(!s.is_deterministic_drift);

    s = shape_of(LevyTriplet::compound_poisson({{1.0, 1.0}}, 1.0));
    CHECK(s.is_subordinator);
    CHECK(*s.fv_drift == 1.0);
    CHECK(s.nu_pos_mass);
    CHECK(!s.nu_neg_mass);

    // uncertified tabulated density refuses classification
    TabulatedDensity tab;
    tab.grid = {0.1, 1.0, 10.0};
    tab.values = {1.0, 0.5, 0.1};
    tab.small_x_certified = false;
    auto t = LevyTriplet::from_gamma(0.0, 0.0, LevyMeasure::tabulated(tab));
    CHECK_THROWS_AS(shape_of(t), InconclusiveShape);
}

TEST_CASE("time-integral support: the four-case table") {
    // deterministic drift b > 0
    auto r = support_of_time_integral(LevyTriplet::deterministic_drift(2.0));
    CHECK(r.kind == SupportKind::point);
    CHECK(r.lower == doctest::Approx(0.5));

    // non-deterministic subordinator with drift b = 1
    r = support_of_time_integral(LevyTriplet::compound_poisson({{1.0, 1.0}}, 1.0));
    CHECK(r.kind == SupportKind::closed_bounded_interval);
    CHECK(r.lower == doctest::Approx(0.0));
    CHECK(r.upper == doctest::Approx(1.0));

    // finite variation, drift b > 0, only negative jumps
    r = support_of_time_integral(LevyTriplet::compound_poisson({{-1.0, 1.0}}, 2.0));
    CHECK(r.kind == SupportKind::right_half_line);
    CHECK(r.lower == doctest::Approx(0.5));

    // Brownian with drift: otherwise row
    r = support_of_time_integral(LevyTriplet::brownian_with_drift(1.0, 1.0));
    CHECK(r.kind == SupportKind::right_half_line);
    CHECK(r.lower == doctest::Approx(0.0));
}

TEST_CASE("drift-to-infinity verification") {
    CHECK_THROWS_AS(support_of_time_integral(LevyTriplet::deterministic_drift(-1.0)),
                    DomainError);
    // E[xi_1] = 2 - 3 < 0, detectable even under assertion
    auto neg_mean = LevyTriplet::compound_poisson({{-3.0, 1.0}}, 2.0);
    CHECK_THROWS_AS(support_of_time_integral(neg_mean, DriftToInfinity::asserted), DomainError);
}

TEST_CASE("functional support: case table rows") {
    const auto bm = LevyTriplet::brownian_with_drift(1.0, 1.0);

    // eta of infinite variation => full line
    auto r = support_of_functional(bm, LevyTriplet::brownian_with_drift(0.0, 1.0));
    CHECK(r.kind == SupportKind::full_line);

    // eta subordinator drift 1 with positive jumps; xi finite variation,
    // drift 2, spectrally negative => [1/2, inf)
    r = support_of_functional(LevyTriplet::compound_poisson({{-1.0, 1.0}}, 2.0),
                              LevyTriplet::compound_poisson({{0.5, 1.0}}, 1.0));
    CHECK(r.kind == SupportKind::right_half_line);
    CHECK(r.lower == doctest::Approx(0.5));

    // eta spectrally negative finite variation, drift a = -1; xi = BM + drift
    // => (-inf, 0]
    r = support_of_functional(bm, LevyTriplet::compound_poisson({{-1.0, 1.0}}, -1.0));
    CHECK(r.kind == SupportKind::left_half_line);
    CHECK(r.upper == doctest::Approx(0.0));

    // two-sided eta jumps => full line
    r = support_of_functional(bm, LevyTriplet::compound_poisson({{1.0, 1.0}, {-1.0, 1.0}}));
    CHECK(r.kind == SupportKind::full_line);
}

TEST_CASE("deterministic eta delegates to the scaled time-integral table") {
    const auto xi = LevyTriplet::compound_poisson({{1.0, 1.0}}, 1.0);  // [0, 1] base
    auto base = support_of_time_integral(xi);

    auto r = support_of_functional(xi, LevyTriplet::deterministic_drift(3.0));
    CHECK(r.kind == SupportKind::closed_bounded_interval);
    CHECK(r.lower == doctest::Approx(3.0 * base.lower));
    CHECK(r.upper == doctest::Approx(3.0 * base.upper));

    r = support_of_functional(xi, LevyTriplet::deterministic_drift(-2.0));
    CHECK(r.kind == SupportKind::closed_bounded_interval);
    CHECK(r.lower == doctest::Approx(-2.0));
    CHECK(r.upper == doctest::Approx(0.0));

    r = support_of_functional(xi, LevyTriplet::deterministic_drift(0.0));
    CHECK(r.kind == SupportKind::point);
    CHECK(r.lower == 0.0);

    // flipped half-line: xi spectrally negative FV, eta_t = -t
    auto xi2 = LevyTriplet::compound_poisson({{-1.0, 1.0}}, 2.0);  // [1/2, inf) base
    r = support_of_functional(xi2, LevyTriplet::deterministic_drift(-1.0));
    CHECK(r.kind == SupportKind::left_half_line);
    CHECK(r.upper == doctest::Approx(-0.5));
}

TEST_CASE("positivity is equivalent to eta being a subordinator") {
    CHECK(is_nonnegative_functional(LevyTriplet::deterministic_drift(1.0)));
    CHECK(!is_nonnegative_functional(LevyTriplet::brownian_with_drift(0.0, 1.0)));
    CHECK(!is_nonnegative_functional(LevyTriplet::compound_poisson({{-1.0, 1.0}})));
    CHECK(is_nonnegative_functional(LevyTriplet::stable_subordinator(0.4, 1.0)));
}

TEST_CASE("exhaustiveness: every randomized shape combination classifies") {
    std::mt19937_64 gen(7);
    std::uniform_real_distribution<double> unif(0.2, 2.0);
    auto random_triplet = [&](bool need_drift_up) -> LevyTriplet {
        switch (gen() % 6) {
            case 0: return LevyTriplet::deterministic_drift(unif(gen));
            case 1: return LevyTriplet::brownian_with_drift(unif(gen), unif(gen));
            case 2: return LevyTriplet::compound_poisson({{unif(gen), unif(gen)}}, unif(gen));
            case 3:
                return LevyTriplet::compound_poisson({{-unif(gen), 0.2}},
                                                     need_drift_up ? 2.5 : -unif(gen));
            case 4:
                return LevyTriplet::compound_poisson(
                    {{unif(gen), unif(gen)}, {-unif(gen), unif(gen)}}, unif(gen));
            default: return LevyTriplet::stable_subordinator(0.3 + 0.4 * unif(gen) / 2.0, 1.0);
        }
    };
    int classified = 0;
    for (int i = 0; i < 300; ++i) {
        LevyTriplet xi = random_triplet(true);
        LevyTriplet eta = random_triplet(false);
        auto mean = xi.mean();
        if (!mean || !(*mean > 0.0)) continue;  // xi must drift to +infinity
        SupportResult r = support_of_functional(xi, eta);
        r.check_invariants();
        ++classified;
    }
    CHECK(classified > 100);
}

TEST_CASE("scaling coherence for deterministic eta") {
    for (double a : {0.5, 1.0, 2.5}) {
        auto xi = LevyTriplet::compound_poisson({{1.0, 0.7}}, 1.3);
        auto base = support_of_time_integral(xi);
        auto scaled = support_of_functional(xi, LevyTriplet::deterministic_drift(a));
        CHECK(scaled.lower == doctest::Approx(a * base.lower));
        CHECK(scaled.upper == doctest::Approx(a * base.upper));
    }
}

TEST_SUITE_END();

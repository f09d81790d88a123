#include <doctest.h>

#include <cmath>
#include <random>

#include "expfunc/bernstein.hpp"
#include "expfunc/errors.hpp"

using namespace expfunc;

TEST_SUITE_BEGIN("bernstein");

TEST_CASE("-psi of randomized library subordinators is accepted") {
    std::mt19937_64 gen(2718);
    std::uniform_real_distribution<double> unif(0.1, 1.0);
    for (int trial = 0; trial < 24; ++trial) {
        LevyTriplet t;
        switch (gen() % 4) {
            case 0: t = LevyTriplet::deterministic_drift(3.0 * unif(gen)); break;
            case 1:
                t = LevyTriplet::compound_poisson(
                    {{2.0 * unif(gen), unif(gen)}, {5.0 * unif(gen), unif(gen)}}, unif(gen));
                break;
            case 2:
                t = LevyTriplet::stable_subordinator(0.9 * unif(gen) + 0.05, 2.0 * unif(gen),
                                                     unif(gen));
                break;
            default:
                t = LevyTriplet::from_fv_parts(
                    unif(gen), 0.0,
                    LevyMeasure::stable(0.5 * unif(gen) + 0.1, unif(gen)) +
                        LevyMeasure::atoms({{unif(gen), unif(gen)}}));
                break;
        }
        auto psi = LaplaceExponent::from_subordinator(t);
        auto v = is_bernstein([&psi](double u) { return -psi.value(u); });
        CHECK(v.decision == Decision::accept);
    }

    // one quadrature-backed family
    auto expd = LevyTriplet::from_fv_parts(0.2, 0.0, LevyMeasure::exponential_density(1.5, 2.0));
    auto psi = LaplaceExponent::from_subordinator(expd);
    CHECK(is_bernstein([&psi](double u) { return -psi.value(u); }).decision == Decision::accept);
}

TEST_CASE("canonical examples") {
    CHECK(is_bernstein([](double u) { return std::sqrt(u); }).decision == Decision::accept);

    auto v = is_bernstein([](double u) { return u * u; });
    CHECK(v.decision == Decision::reject);
    REQUIRE(v.violation);
    CHECK(v.violation->order == 2);

    CHECK(is_bernstein([](double u) { return 1.0 - std::exp(-u); }).decision ==
          Decision::accept);
}

TEST_CASE("default grid spans four decades with 200 points") {
    auto g = default_bernstein_grid();
    CHECK(g.size() == 200);
    CHECK(g.front() == doctest::Approx(1e-3));
    CHECK(g.back() == doctest::Approx(1e3));
}

TEST_CASE("rejections carry a certified witness") {
    auto v = is_bernstein([](double u) { return -u; });
    REQUIRE(v.decision == Decision::reject);
    REQUIRE(v.violation);
    CHECK(v.violation->order == 0);
    CHECK(v.violation->value < -v.violation->error_bound);

    v = is_bernstein([](double u) { return std::exp(-u); });
    REQUIRE(v.decision == Decision::reject);
    CHECK(v.violation->order == 1);
}

TEST_CASE("non-finite evaluation raises") {
    CHECK_THROWS_AS(is_bernstein([](double u) { return std::sqrt(u - 1.0); }), NumericError);
}

TEST_CASE("drift limit extraction") {
    auto lin = LaplaceExponent::drift(3.0);
    auto dl = subordinator_drift_limit(lin);
    CHECK(dl.converged);
    CHECK(dl.value == doctest::Approx(3.0));

    auto sqrt_exp = LaplaceExponent::from_function([](double u) { return -std::sqrt(u); });
    dl = subordinator_drift_limit(sqrt_exp);
    CHECK(dl.converged);
    CHECK(dl.value == doctest::Approx(0.0).epsilon(1e-4));

    auto mix =
        LaplaceExponent::from_function([](double u) { return -u - std::pow(u, 0.4); });
    dl = subordinator_drift_limit(mix);
    CHECK(dl.converged);
    CHECK(dl.value == doctest::Approx(1.0).epsilon(1e-6));
}

TEST_SUITE_END();

#include <doctest.h>

#include <cmath>
#include <random>

#include "expfunc/bernstein.hpp"
#include "expfunc/errors.hpp"
#include "expfunc/laplace_exponent.hpp"
#include "expfunc/stable.hpp"
#include "oracles.hpp"

using namespace expfunc;

TEST_SUITE_BEGIN("stable");

TEST_CASE("stable exponent closed form and homogeneity") {
    auto psi = stable_exponent(0.5, 1.0);
    CHECK(psi.value(1.0) == doctest::Approx(-oracles::kTwoSqrtPi).epsilon(1e-14));
    CHECK(psi.value(4.0) == doctest::Approx(-2.0 * oracles::kTwoSqrtPi).epsilon(1e-14));
    CHECK(psi.deriv1(1.0) == doctest::Approx(-oracles::kGamma05).epsilon(1e-14));

    // quadrature oracle, independently of the closed form: substitute x = s^2
    // to tame the endpoint, and add the analytic tail -2/sqrt(X)
    const double X = 400.0;
    const double quad = oracles::simpson(
                            [](double s) { return 2.0 * std::expm1(-s * s) / (s * s); }, 1e-8,
                            std::sqrt(X), 40000) -
                        2.0 / std::sqrt(X);
    CHECK(psi.value(1.0) == doctest::Approx(quad).epsilon(1e-4));

    std::mt19937_64 gen(3);
    std::uniform_real_distribution<double> unif(0.1, 5.0);
    for (int i = 0; i < 30; ++i) {
        const double alpha = 0.05 + 0.9 * unif(gen) / 5.0;
        auto p = stable_exponent(alpha, unif(gen));
        const double lam = unif(gen), u = unif(gen);
        CHECK(p.value(lam * u) ==
              doctest::Approx(std::pow(lam, alpha) * p.value(u)).epsilon(1e-13));
    }

    CHECK_THROWS_AS(stable_exponent(1.2, 1.0), DomainError);
}

TEST_CASE("range decision table") {
    const BmDriftParams bm11{1.0, 1.0};
    auto v = stable_range_check(StableConvolutionSpec::single(0.6, 1.0), bm11);
    CHECK(v.decision == Decision::reject);

    v = stable_range_check(StableConvolutionSpec::single(0.4, 1.0), BmDriftParams{0.05, 1.0});
    CHECK(v.decision == Decision::reject);

    v = stable_range_check(StableConvolutionSpec::single(0.4, 1.0), bm11);
    CHECK(v.decision == Decision::accept);

    StableConvolutionSpec two;
    two.components = {{0.2, 1.0, 0.0}, {0.5, 1.0, 0.0}};
    v = stable_range_check(two, bm11);
    CHECK(v.decision == Decision::accept);

    // positive drift is always rejected
    v = stable_range_check(StableConvolutionSpec::single(0.3, 1.0, 0.5), bm11);
    CHECK(v.decision == Decision::reject);
}

TEST_CASE("pre-image closed form") {
    auto eta = stable_preimage(0.4, 1.0, BmDriftParams{1.0, 1.0});
    CHECK(*eta.fv_drift == doctest::Approx(0.0));
    REQUIRE(eta.nu.components().size() == 2);
    const auto* t1 = std::get_if<StableDensity>(&eta.nu.components()[0]);
    const auto* t2 = std::get_if<StableDensity>(&eta.nu.components()[1]);
    REQUIRE(t1);
    REQUIRE(t2);
    CHECK(t1->alpha == doctest::Approx(0.4));
    CHECK(t1->c == doctest::Approx(0.32).epsilon(1e-14));  // c a (a_drift - s2 a / 2)
    CHECK(t2->alpha == doctest::Approx(0.8));
    CHECK(t2->c == doctest::Approx(oracles::kStable04SecondCoeff).epsilon(1e-13));

    // alpha = 1/2 at the boundary a = sigma^2/4: deterministic drift pi/2
    auto flat = stable_preimage(0.5, 1.0, BmDriftParams{0.25, 1.0});
    CHECK(flat.nu.is_zero());
    CHECK(*flat.fv_drift == doctest::Approx(M_PI / 2.0).epsilon(1e-14));

    CHECK_THROWS_AS(stable_preimage(0.6, 1.0, BmDriftParams{1.0, 1.0}), DomainError);
}

TEST_CASE("u^{1/2} coefficient cancels exactly at the boundary") {
    for (double sigma : {0.7, 1.0, 2.0}) {
        for (double c : {0.5, 1.0, 3.0}) {
            const BmDriftParams bm{sigma * sigma / 4.0, sigma};
            auto form =
                PreimagePolynomialForm::from_convolution(StableConvolutionSpec::single(0.5, c), bm);
            // Only the u^{2 alpha} = u^1 term survives.
            REQUIRE(form.terms.size() == 1);
            CHECK(form.terms[0].exponent == doctest::Approx(1.0));
            const double scale = 0.5 * sigma * sigma * c * c * oracles::kGamma05 * oracles::kGamma05;
            CHECK(form.terms[0].coefficient ==
                  doctest::Approx(scale).epsilon(1e-14));
        }
    }
}

TEST_CASE("pre-image exponent reconstructs the assembled power form") {
    const BmDriftParams bm{1.0, 1.0};
    StableConvolutionSpec two;
    two.components = {{0.2, 0.7, 0.0}, {0.5, 1.3, 0.0}};
    auto form = PreimagePolynomialForm::from_convolution(two, bm);
    auto v = stable_range_check(two, bm);
    REQUIRE(v.decision == Decision::accept);
    for (double u : {0.1, 0.5, 1.0, 3.0, 10.0}) {
        CHECK(v.psi_eta->value(u) == doctest::Approx(-form.eval(u)).epsilon(1e-13));
    }
}

TEST_CASE("accepted witnesses pass the Bernstein test") {
    const BmDriftParams bm{1.0, 1.0};
    for (double alpha : {0.1, 0.3, 0.5}) {
        auto v = stable_range_check(StableConvolutionSpec::single(alpha, 1.0), bm);
        REQUIRE(v.decision == Decision::accept);
        auto psi = *v.psi_eta;
        CHECK(is_bernstein([&psi](double u) { return -psi.value(u); }).decision ==
              Decision::accept);
    }
}

TEST_CASE("residual zone uses the exact power-form characterization") {
    // alpha_1 <= 2a/sigma^2 < alpha_n <= 1/2 with comfortable positivity
    StableConvolutionSpec two;
    two.components = {{0.2, 1.0, 0.0}, {0.5, 1.0, 0.0}};
    auto v = stable_range_check(two, BmDriftParams{0.15, 1.0});
    CHECK(v.decision == Decision::accept);
    REQUIRE(v.psi_eta);
    auto psi = *v.psi_eta;
    CHECK(is_bernstein([&psi](double u) { return -psi.value(u); }).decision == Decision::accept);

    // shrink the low component until the negative A_2 term wins
    StableConvolutionSpec bad;
    bad.components = {{0.2, 0.01, 0.0}, {0.5, 1.0, 0.0}};
    v = stable_range_check(bad, BmDriftParams{0.15, 1.0});
    CHECK(v.decision == Decision::reject);
}

TEST_CASE("mixture exponents") {
    StableMixingMeasure m;
    m.atoms = {{0.5, 0.5 / oracles::kGamma05}};
    auto psi = stable_mixture_exponent(m);
    CHECK(psi.value(1.0) == doctest::Approx(-1.0).epsilon(1e-14));
    CHECK(psi.value(4.0) == doctest::Approx(-2.0).epsilon(1e-14));

    StableMixingMeasure two;
    two.atoms = {{0.3, 1.0}, {0.5, 2.0}};
    auto p2 = stable_mixture_exponent(two);
    StableMixingMeasure first{{{0.3, 1.0}}}, second{{{0.5, 2.0}}};
    CHECK(p2.value(2.0) ==
          doctest::Approx(stable_mixture_exponent(first).value(2.0) +
                          stable_mixture_exponent(second).value(2.0)));

    CHECK(stable_mixture_exponent(StableMixingMeasure{}).value(1.0) == 0.0);
    StableMixingMeasure bad{{{1.2, 1.0}}};
    CHECK_THROWS_AS(stable_mixture_exponent(bad), DomainError);
}

TEST_CASE("half-stable boundary detection") {
    CHECK(is_half_stable_boundary(0.25, 1.0));
    CHECK(!is_half_stable_boundary(1.0, 1.0));
    CHECK(is_half_stable_boundary(0.5, std::sqrt(2.0)));
}

TEST_SUITE_END();

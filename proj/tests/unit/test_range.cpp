#include <doctest.h>

#include <cmath>

#include "expfunc/bm.hpp"
#include "expfunc/errors.hpp"
#include "expfunc/positive_law.hpp"
#include "expfunc/quadrature.hpp"
#include "expfunc/range.hpp"
#include "expfunc/sim.hpp"
#include "expfunc/stable.hpp"
#include "oracles.hpp"

using namespace expfunc;

TEST_SUITE_BEGIN("range");

TEST_CASE("candidate exponent: point mass under deterministic xi") {
    // mu = delta_c, xi_t = b t: g(u) = -b c u (pre-image is drift b c).
    auto mu = make_dirac_law(2.0);
    auto xi = LevyTriplet::deterministic_drift(3.0);
    for (double u : {0.1, 1.0, 10.0})
        CHECK(candidate_driver_exponent(mu, xi, u) == doctest::Approx(-6.0 * u).epsilon(1e-12));
}

TEST_CASE("candidate exponent: jump-free path equals the direct second-order formula") {
    auto mu = make_stable_law(0.3, 0.8);
    for (auto [a, s] : {std::pair{1.0, 1.0}, {0.4, 0.7}, {2.0, 1.3}}) {
        auto xi = LevyTriplet::brownian_with_drift(a, s);
        for (double u : {0.3, 1.0, 4.0}) {
            const double p1 = mu.psi_V.deriv1(u), p2 = mu.psi_V.deriv2(u);
            const double direct =
                (a - 0.5 * s * s) * u * p1 - 0.5 * s * s * u * u * (p2 + p1 * p1);
            CHECK(candidate_driver_exponent(mu, xi, u) ==
                  doctest::Approx(direct).epsilon(1e-10));
        }
    }
}

TEST_CASE("candidate exponent matches the assembled power form for a stable law") {
    auto mu = make_stable_law(0.4, 1.0);
    auto xi = LevyTriplet::brownian_with_drift(1.0, 1.0);
    auto form = PreimagePolynomialForm::from_convolution(
        StableConvolutionSpec::single(0.4, 1.0), BmDriftParams{1.0, 1.0});
    for (double u : log_spaced(0.1, 10.0, 12)) {
        const double g = candidate_driver_exponent(mu, xi, u);
        CHECK(g == doctest::Approx(-form.eval(u)).epsilon(1e-8));
    }
}

TEST_CASE("candidate exponent with xi jumps: atom consistency") {
    // xi = drift b plus a single atom: compare against a directly coded
    // evaluation of the defining expression.
    auto mu = make_stable_law(0.4, 1.0);
    auto xi = LevyTriplet::compound_poisson({{0.7, 1.2}}, 2.0);
    for (double u : {0.5, 1.0, 2.0}) {
        const double p0 = mu.psi_V.value(u), p1 = mu.psi_V.deriv1(u);
        const double y = 0.7, m = 1.2;
        const double jump_term =
            m * (std::exp(mu.psi_V.value(u * std::exp(-y)) - p0) - 1.0 + u * p1 * y);
        const double expected = xi.gamma * u * p1 - jump_term;
        CHECK(candidate_driver_exponent(mu, xi, u) == doctest::Approx(expected).epsilon(1e-10));
    }
}

TEST_CASE("prescreen certificates") {
    auto bm = LevyTriplet::brownian_with_drift(1.0, 1.0);

    auto drifted = make_stable_law(0.4, 1.0, 0.3);
    auto cert = prescreen(drifted, bm);
    REQUIRE(cert);
    CHECK(cert->find("drift") != std::string::npos);

    auto cp = make_compound_poisson_law({{1.0, 1.0}}, 0.0);
    cert = prescreen(cp, bm);
    REQUIRE(cert);
    CHECK(cert->find("finite") != std::string::npos);

    CHECK(!prescreen(make_stable_law(0.4, 1.0), bm));

    // the drift/k-monotonicity screens require spectrally negative
    // infinite-variation xi: a drifted law under deterministic xi passes.
    CHECK(!prescreen(make_dirac_law(2.0), LevyTriplet::deterministic_drift(1.0)));
}

TEST_CASE("membership decisions for stable laws under Brownian xi") {
    auto bm = LevyTriplet::brownian_with_drift(1.0, 1.0);

    auto v = check_in_range(make_stable_law(0.6, 1.0), bm);
    CHECK(v.decision == Decision::reject);

    v = check_in_range(make_stable_law(0.4, 1.0), bm);
    REQUIRE(v.decision == Decision::accept);
    REQUIRE(v.psi_eta);
    // witness agrees with the closed-form pre-image exponent
    auto closed = stable_range_check(StableConvolutionSpec::single(0.4, 1.0),
                                     BmDriftParams{1.0, 1.0});
    for (double u : log_spaced(0.1, 10.0, 10)) {
        const double w = v.psi_eta->value(u);
        const double ref = closed.psi_eta->value(u);
        CHECK(w == doctest::Approx(ref).epsilon(1e-6));
    }
    CHECK(v.eta_drift);
    CHECK(std::abs(*v.eta_drift) <= 1e-6);
}

TEST_CASE("membership: point mass under deterministic drift") {
    auto v = check_in_range(make_dirac_law(2.0), LevyTriplet::deterministic_drift(3.0));
    REQUIRE(v.decision == Decision::accept);
    REQUIRE(v.eta_drift);
    CHECK(*v.eta_drift == doctest::Approx(6.0).epsilon(1e-9));
    CHECK(v.eta_drift_converged);
}

TEST_CASE("growth condition over the dyadic sequence") {
    const BmDriftParams bm{1.0, 1.0};
    auto rep = growth_necessary_check(make_stable_law(0.7, 1.0), bm);
    CHECK(rep.decision == Decision::reject);

    rep = growth_necessary_check(make_stable_law(0.5, 1.0), bm);
    CHECK(rep.decision == Decision::accept);
    CHECK(rep.limsup_estimate == doctest::Approx(2.0).epsilon(1e-6));
    CHECK(rep.b_eta_positive);

    rep = growth_necessary_check(make_stable_law(0.3, 1.0), bm);
    CHECK(rep.decision == Decision::accept);
    CHECK(rep.limsup_estimate == doctest::Approx(0.0));
    CHECK(!rep.b_eta_positive);
}

TEST_CASE("growth drift dichotomy matches the closed-form pre-image drift") {
    const BmDriftParams bm{1.0, 1.0};
    for (double alpha : {0.15, 0.3, 0.4, 0.5}) {
        auto rep = growth_necessary_check(make_stable_law(alpha, 1.0), bm);
        REQUIRE(rep.decision == Decision::accept);
        auto eta = stable_preimage(alpha, 1.0, bm);
        CHECK(rep.b_eta_positive == (*eta.fv_drift > 0.0));
    }
}

TEST_CASE("finite-activity criterion: exponential background rejected at t = 2.5") {
    auto mu = make_finite_k_law(exp_background(1.0));
    auto v = finite_k_check(mu, BmDriftParams{1.0, 1.0});
    REQUIRE(v.decision == Decision::reject);
    REQUIRE(v.first_violation_t);
    CHECK(*v.first_violation_t == doctest::Approx(2.5).epsilon(4e-4));
}

TEST_CASE("finite-activity criterion: compact support and negative jumps rejected") {
    auto bump = make_finite_k_law(bump_background(2.0, 0.5));
    auto v = finite_k_check(bump, BmDriftParams{5.0, 1.0});
    CHECK(v.decision == Decision::reject);

    auto step = make_finite_k_law(step_background(1.0, 1.0));
    v = finite_k_check(step, BmDriftParams{5.0, 1.0});
    CHECK(v.decision == Decision::reject);
    CHECK(v.certificate.find("negative jump") != std::string::npos);

    // non-zero background drift rejected outright
    auto drifted = make_finite_k_law(exp_background(1.0), 0.4);
    v = finite_k_check(drifted, BmDriftParams{1.0, 1.0});
    CHECK(v.decision == Decision::reject);
    CHECK(v.certificate.find("b_X") != std::string::npos);
}

TEST_CASE("finite-activity criterion: slow polynomial tail accepted for large a") {
    auto mu = make_finite_k_law(inverse_poly_background(3.0));
    auto accept = finite_k_check(mu, BmDriftParams{5.0, 1.0});
    REQUIRE(accept.decision == Decision::accept);
    REQUIRE(accept.eta_triplet);
    REQUIRE(accept.psi_eta);
    CHECK(*accept.eta_drift == 0.0);
    // The witness measure is a non-negative tabulated density with drift 0,
    // hence a genuine subordinator exponent; the first orders of the
    // Bernstein property are verified through the analytic derivative routes
    // (finite differences through two quadrature layers sit in noise).
    for (double u : log_spaced(1e-2, 1e2, 25)) {
        const double scale = 1.0 + std::abs(accept.psi_eta->value(u));
        CHECK(accept.psi_eta->value(u) <= 1e-10 * scale);
        CHECK(accept.psi_eta->deriv1(u) <= 1e-10 * scale);
        CHECK(accept.psi_eta->deriv2(u) >= -1e-10 * scale);
    }

    auto reject = finite_k_check(mu, BmDriftParams{0.2, 1.0});
    CHECK(reject.decision == Decision::reject);
}

TEST_CASE("accepted finite-activity witness reproduces the law in simulation") {
    const BmDriftParams bm{5.0, 1.0};
    auto mu = make_finite_k_law(inverse_poly_background(3.0));
    auto verdict = finite_k_check(mu, bm);
    REQUIRE(verdict.decision == Decision::accept);
    REQUIRE(verdict.eta_triplet);

    SimConfig cfg;
    cfg.n_paths = 15000;
    cfg.step_dt = 1e-3;
    cfg.horizon_T = 10.0;
    cfg.seed = 424242;
    auto xi = LevyTriplet::brownian_with_drift(bm.a, bm.sigma);
    auto samples = simulate_functional(xi, *verdict.eta_triplet, cfg);
    for (double u : {0.5, 1.0, 2.0}) {
        auto est = empirical_laplace(samples, u);
        const double analytic = std::exp(mu.psi_V.value(u));
        CHECK(std::abs(est.estimate - analytic) <= 3.0 * est.std_error);
    }
}

TEST_CASE("background exponent identity for finite-activity laws") {
    // psi_X(u) = u psi_V'(u) must equal -int (1 - e^{-ut}) g(t) dt.
    auto mu = make_finite_k_law(exp_background(1.0));
    for (double u : {0.3, 1.0, 3.0}) {
        const double lhs = bdlp_exponent_from_law(mu.psi_V, u);
        CHECK(lhs == doctest::Approx(-u / (1.0 + u)).epsilon(1e-8));
    }
    // and psi_V is the Gamma(1) exponent -log(1+u)
    for (double u : {0.3, 1.0, 3.0})
        CHECK(mu.psi_V.value(u) == doctest::Approx(-std::log1p(u)).epsilon(1e-9));
}

TEST_CASE("k-function of stable laws feeds the prescreen grid") {
    auto mu = make_stable_law(0.4, 2.0);
    REQUIRE(mu.k);
    CHECK((*mu.k)(1.0) == doctest::Approx(2.0));
    CHECK((*mu.k)(16.0) == doctest::Approx(2.0 * std::pow(16.0, -0.4)).epsilon(1e-12));
}

TEST_SUITE_END();

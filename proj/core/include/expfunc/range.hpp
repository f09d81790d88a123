#pragma once

#include <optional>
#include <string>
#include <vector>

#include "expfunc/bernstein.hpp"
#include "expfunc/bm_params.hpp"
#include "expfunc/levy_triplet.hpp"
#include "expfunc/positive_law.hpp"
#include "expfunc/support.hpp"

namespace expfunc {

/// Outcome of a range-membership test. On accept the candidate driver
/// exponent is attached (and, where the family admits one, a concrete
/// subordinator triplet for eta); on reject the certificate names the
/// violated condition.
struct RangeVerdict {
    Decision decision = Decision::inconclusive;
    std::optional<LevyTriplet> eta_triplet;
    std::optional<LaplaceExponent> psi_eta;
    std::optional<double> eta_drift;
    bool eta_drift_converged = false;
    std::string certificate;
    std::optional<double> first_violation_t;  // set by the finite-activity criterion
};

/// Candidate Laplace exponent of the driving subordinator for law mu under
/// xi: the value whose Bernstein property decides membership. The jump
/// integral is evaluated by adaptive quadrature split at |y| = 1 with a
/// Taylor-regularized integrand near 0.
double candidate_driver_exponent(const PositiveLawSpec& mu, const LevyTriplet& xi, double u);

/// Necessary-condition pre-screens: non-zero drift or a non-monotone
/// k-function under spectrally negative infinite-variation xi, and finite
/// non-zero Levy measure under any xi. Returns the violated condition, or
/// nullopt when all pass.
std::optional<std::string> prescreen(const PositiveLawSpec& mu, const LevyTriplet& xi);

struct RangeCheckOptions {
    std::vector<double> grid;  // empty = default Bernstein grid
    DriftToInfinity drift = DriftToInfinity::verify;
    int max_order = 6;
};

/// Full membership test: prescreen, vanishing of the candidate exponent at
/// 0+, Bernstein test of its negative, and on accept a numeric witness with
/// drift extracted by extrapolation.
RangeVerdict check_in_range(const PositiveLawSpec& mu, const LevyTriplet& xi,
                            const RangeCheckOptions& opts = {});

struct GrowthReport {
    Decision decision = Decision::inconclusive;
    double limsup_estimate = 0.0;
    bool b_eta_positive = false;
    std::string note;
};

/// Necessary small-x growth condition for the k-function under Brownian xi:
/// limsup_{x->0} x^{-1/2} int_0^x k(s) ds must be finite, estimated over the
/// dyadic sequence x_j = 2^{-j}, j = 5..40. A certified divergence (a
/// monotone run of >= 10 dyadic steps growing by a total factor >= 1.2)
/// rejects; otherwise reports the limsup estimate and the drift dichotomy
/// (the pre-image drift is positive iff the limsup is positive).
GrowthReport growth_necessary_check(const PositiveLawSpec& mu, const BmDriftParams& bm);

/// Membership test for selfdecomposable laws with finite-activity background
/// measure (k(0+) < inf): checks the vanishing-tail conditions on t g(t) and
/// pointwise non-negativity of
///   G'(t) = (a + sigma^2 m + sigma^2/2) g(t) + (sigma^2/2) t g'(t)
///           - (sigma^2/2) (g*g)(t),   m = nu_X(R+),
/// with the convolution done by adaptive quadrature split at t/2. On accept
/// the witness eta has drift 0 and the tabulated measure dG. `grid_points`
/// controls the scan resolution (refinement-stability checks).
RangeVerdict finite_k_check(const PositiveLawSpec& mu, const BmDriftParams& bm,
                            int grid_points = 320);

}  // namespace expfunc

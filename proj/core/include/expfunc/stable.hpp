#pragma once

#include <vector>

#include "expfunc/bm_params.hpp"
#include "expfunc/range.hpp"

namespace expfunc {

/// Finite convolution of independent positive stable laws: component i is
/// alpha_i-stable with Levy density c_i x^{-1-alpha_i} and drift b_i.
struct StableConvolutionSpec {
    struct Component {
        double alpha;  // in (0,1)
        double c;      // > 0
        double drift = 0.0;
    };
    std::vector<Component> components;  // alphas strictly increasing

    void validate() const;
    static StableConvolutionSpec single(double alpha, double c, double drift = 0.0);
};

/// f(u) = sum_i D_i u^{gamma_i} with strictly increasing exponents and
/// non-zero coefficients after merging close exponents. The negative of the
/// candidate driver exponent for a stable convolution.
struct PreimagePolynomialForm {
    struct Term {
        double exponent;     // in (0, 2)
        double coefficient;  // != 0
    };
    std::vector<Term> terms;

    double eval(double u) const;
    /// Assemble from a convolution under xi = sigma B + a t:
    /// per component the u^alpha coefficient c Gamma(1-alpha)(a - sigma^2 alpha/2),
    /// the cross terms sigma^2 c_i c_j Gamma(1-alpha_i) Gamma(1-alpha_j) at
    /// u^{alpha_i+alpha_j}, and the square term (sigma^2/2) c^2 Gamma(1-alpha)^2
    /// at u^{2 alpha}; equal exponents merged, zero coefficients dropped.
    static PreimagePolynomialForm from_convolution(const StableConvolutionSpec& spec,
                                                   const BmDriftParams& bm);
};

/// psi(u) = -(c Gamma(1-alpha)/alpha) u^alpha with analytic derivatives,
/// alpha in (0,1), c > 0.
LaplaceExponent stable_exponent(double alpha, double c);

/// Exact decision for a stable convolution under Brownian xi. Rejects on any
/// positive component drift, on alpha_n > 1/2 or alpha_1 > 2a/sigma^2;
/// accepts outright when alpha_n <= min(2a/sigma^2, 1/2); in the residual
/// zone applies the exact Bernstein characterization of the merged power
/// form (top coefficient sign plus positivity of the induced Levy density,
/// checked by endpoint dominance and a log-grid scan; marginal sign patterns
/// give `inconclusive`).
RangeVerdict stable_range_check(const StableConvolutionSpec& spec, const BmDriftParams& bm);

/// Closed-form pre-image of a single positive alpha-stable law (drift 0) that
/// stable_range_check accepts. For alpha < 1/2 the driver has drift 0 and
/// Levy density
///   c alpha (a - sigma^2 alpha/2) x^{-alpha-1}
///   + sigma^2 c^2 alpha Gamma(1-alpha)^2 / Gamma(1-2 alpha) x^{-2 alpha-1};
/// for alpha = 1/2 it gains drift sigma^2 c^2 pi / 2 (pure drift exactly at
/// the boundary 2a/sigma^2 = 1/2).
LevyTriplet stable_preimage(double alpha, double c, const BmDriftParams& bm);

/// Discrete mixing measure over stable indices: atoms (alpha_j, mass_j).
struct StableMixingMeasure {
    std::vector<std::pair<double, double>> atoms;
};

/// psi(u) = -sum_j mass_j Gamma(1-alpha_j)/alpha_j u^{alpha_j}; the Laplace
/// exponent of the closure-class element induced by the mixing measure.
LaplaceExponent stable_mixture_exponent(const StableMixingMeasure& m);

/// True exactly on the boundary 2a/sigma^2 = 1/2 (a = sigma^2/4), where the
/// time integral of e^{-(sigma B + a t)} is 1/2-stable.
bool is_half_stable_boundary(double a, double sigma);

}  // namespace expfunc

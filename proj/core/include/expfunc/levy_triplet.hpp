#pragma once

#include <optional>

#include "expfunc/levy_measure.hpp"

namespace expfunc {

/// Characteristic triplet (gamma, sigma^2, nu) of a one-dimensional Levy
/// process, location parameter in the |x| <= 1 compensation convention.
/// `fv_drift` is the natural drift of the finite-variation decomposition,
/// present exactly when int_{|x|<=1} |x| nu(dx) < inf is certified.
struct LevyTriplet {
    double gamma = 0.0;
    double sigma2 = 0.0;
    LevyMeasure nu;
    std::optional<double> fv_drift;

    /// xi_t = b t.
    static LevyTriplet deterministic_drift(double b);
    /// sigma B_t + a t, sigma > 0.
    static LevyTriplet brownian_with_drift(double a, double sigma);
    /// Compound Poisson given by atoms, plus a deterministic drift.
    static LevyTriplet compound_poisson(std::vector<std::pair<double, double>> atoms,
                                        double drift = 0.0);
    /// Subordinator with Levy density c x^(-1-alpha), alpha in (0,1), plus
    /// non-negative drift.
    static LevyTriplet stable_subordinator(double alpha, double c, double drift = 0.0);

    /// Build from finite-variation parts: the linear drift b, a Gaussian
    /// variance and a (finite-variation) jump measure; gamma is derived.
    static LevyTriplet from_fv_parts(double drift_b, double sigma2, LevyMeasure nu);

    /// Build from the raw triplet; fv_drift is derived when nu permits.
    static LevyTriplet from_gamma(double gamma, double sigma2, LevyMeasure nu);

    /// E[X_1] = gamma + int_{|x|>1} x nu(dx) in [-inf, inf]; nullopt when the
    /// positive and negative tails are both infinite.
    std::optional<double> mean() const;

    /// sigma2 >= 0, measure valid, fv_drift consistency. Throws DomainError.
    void validate() const;
};

}  // namespace expfunc

#pragma once

#include <cmath>

#include "expfunc/errors.hpp"

namespace expfunc {

/// Parameters of xi_t = sigma B_t + a t with a, sigma > 0. theta = 2a/sigma^2
/// is the exponent of singularity of the associated Laplace-transform ODE and
/// the invariant that orders the ranges.
struct BmDriftParams {
    double a = 1.0;
    double sigma = 1.0;

    double theta() const { return 2.0 * a / (sigma * sigma); }

    bool theta_near_integer(double tol = 1e-6) const {
        const double t = theta();
        return std::abs(t - std::round(t)) < tol;
    }

    void validate() const {
        if (!(a > 0.0) || !(sigma > 0.0))
            throw DomainError("BmDriftParams: a and sigma must be positive");
    }
};

}  // namespace expfunc

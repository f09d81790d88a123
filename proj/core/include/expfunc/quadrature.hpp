#pragma once

#include <functional>
#include <limits>
#include <string>
#include <vector>

namespace expfunc {

struct QuadratureResult {
    double value = 0.0;
    double error = 0.0;  // accumulated error estimate
    bool converged = false;
    // Subinterval with the largest remaining error estimate when not converged.
    double worst_lo = 0.0;
    double worst_hi = 0.0;

    std::string diagnostic() const;
};

struct QuadratureOptions {
    double abs_tol = 1e-12;
    double rel_tol = 1e-10;
    int max_intervals = 4000;
};

/// Adaptive Gauss-Kronrod (G7,K15) on a finite interval [a, b].
QuadratureResult integrate(const std::function<double(double)>& f, double a, double b,
                           const QuadratureOptions& opt = {});

/// Integral over [a, +inf) via the substitution x = a + t/(1-t), t in [0,1).
/// The integrand must decay fast enough for the transformed integrand to be
/// bounded at t -> 1.
QuadratureResult integrate_to_infinity(const std::function<double(double)>& f, double a,
                                       const QuadratureOptions& opt = {});

/// Integral of f over (0, b] where f may have an integrable power singularity
/// at 0. Uses the substitution x = e^y so the transformed integrand decays
/// exponentially as y -> -inf; the lower truncation point is chosen from
/// `sing_bound`, a certified bound |f(x)| <= C * x^(-p) with p < 1 near 0.
QuadratureResult integrate_from_zero(const std::function<double(double)>& f, double b,
                                     double sing_C, double sing_p,
                                     const QuadratureOptions& opt = {});

/// Nodes helper: n logarithmically spaced points on [lo, hi].
std::vector<double> log_spaced(double lo, double hi, int n);

/// Nodes helper: n linearly spaced points on [lo, hi].
std::vector<double> lin_spaced(double lo, double hi, int n);

}  // namespace expfunc

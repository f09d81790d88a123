#pragma once

#include <functional>
#include <limits>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "expfunc/laplace_exponent.hpp"

namespace expfunc {

/// Finite-activity description of the background driving subordinator X of a
/// selfdecomposable law (mu = law of int_0^inf e^{-t} dX_t): a density g of
/// nu_X with total mass nu_X(R+) < inf. `dg` is the derivative where g is
/// differentiable; `jumps` lists declared discontinuities (t, g(t+) - g(t-)).
struct FiniteActivityDensity {
    std::function<double(double)> g;
    std::function<double(double)> dg;
    double mass = 0.0;
    double support_upper = std::numeric_limits<double>::infinity();
    std::vector<std::pair<double, double>> jumps;
};

/// A positive infinitely divisible law, carried through its Laplace exponent
/// psi_V plus whatever structural data the parametric family provides: the
/// k-function of a selfdecomposable law (Levy density x^{-1} k(x)), and/or
/// the finite-activity background density g. drift_bV is the drift of the
/// law, which equals the drift of the background subordinator.
struct PositiveLawSpec {
    LaplaceExponent psi_V;
    double drift_bV = 0.0;
    std::optional<std::function<double(double)>> k;
    std::optional<FiniteActivityDensity> nu_X;
    bool levy_measure_finite = false;  // nu_V(R+) < inf
    bool nontrivial = true;            // false for point masses
    std::string name;
};

/// Positive alpha-stable law with Levy density c x^{-1-alpha}, alpha in (0,1),
/// plus an optional drift. psi_V(u) = -b u - (c Gamma(1-alpha)/alpha) u^alpha.
PositiveLawSpec make_stable_law(double alpha, double c, double drift = 0.0);

/// Point mass at c >= 0 (psi_V = -c u).
PositiveLawSpec make_dirac_law(double c);

/// Selfdecomposable law specified by a finite-activity background density.
PositiveLawSpec make_finite_k_law(FiniteActivityDensity nu_x, double drift = 0.0);

/// Compound-Poisson law (finite jump measure given by atoms) with drift; used
/// to exercise the "finite Levy measure" rejection path.
PositiveLawSpec make_compound_poisson_law(std::vector<std::pair<double, double>> atoms,
                                          double drift = 0.0);

// Parametric background densities for make_finite_k_law.
FiniteActivityDensity exp_background(double rate);                 // g(t) = e^{-rate t}
FiniteActivityDensity inverse_poly_background(double p);           // g(t) = (1+t)^{-p}, p > 2
FiniteActivityDensity bump_background(double center, double halfwidth);  // C^1, compact support
FiniteActivityDensity step_background(double height, double upper);      // discontinuous at upper

}  // namespace expfunc

#pragma once

#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "expfunc/bm_params.hpp"
#include "expfunc/range.hpp"

namespace expfunc {

/// Residual of the second-order ODE satisfied by the Laplace transform of V
/// under xi = sigma B + a t:
///   (sigma^2/2) u^2 L''(u) + (sigma^2/2 - a) u L'(u) + psi_eta(u) L(u).
/// Zero (within tolerance) certifies the pair (L, psi_eta).
double laplace_ode_residual(const LaplaceExponent& laplace_transform,
                            const LaplaceExponent& psi_eta, const BmDriftParams& bm, double u);

/// Riccati map from the background-subordinator exponent to the driver
/// exponent: a psi_X(u) - (sigma^2/2) u psi_X'(u) - (sigma^2/2) psi_X(u)^2.
double driver_exponent_from_bdlp(const LaplaceExponent& psi_bdlp, const BmDriftParams& bm,
                                 double u);

/// psi_X(u) = u psi_V'(u), the background (BDLP) exponent of a
/// selfdecomposable law. Checks the concavity inequality psi_X >= psi_V.
double bdlp_exponent_from_law(const LaplaceExponent& psi_v, double u);

/// k(x) = nu_X((x, inf)), the k-function as the tail of the background
/// measure. Non-increasing in x.
double k_function_tail(const LevyMeasure& nu_bdlp, double x);

/// Frobenius power-series solution of the Laplace-transform ODE around the
/// regular singular point 0, for non-integer theta = 2a/sigma^2:
///   L(u) = C1 u^theta sum c_n u^n + C2 sum d_n u^n,  c_0 = d_0 = 1, C2 = 1,
///   c_n = -(n(n+theta))^{-1} sum_{k<n} c_k f_{n-k},
///   d_n = -(n(n-theta))^{-1} sum_{k<n} d_k f_{n-k},
/// where psi_eta(u) = sum_{n>=1} f_n u^n in the theta-normalized units
/// (sigma^2/2 = 1, i.e. f_n are the coefficients of (2/sigma^2) psi_eta).
struct FrobeniusSeries {
    double theta = 0.0;
    std::vector<double> f;  // f[0] == 0
    std::vector<double> c;  // c[0] == 1
    std::vector<double> d;  // d[0] == 1
    double C1 = 0.0;
    double C2 = 1.0;
    int truncation_N = 0;
    double radius_estimate = 0.0;

    struct Eval {
        double value;
        double truncation_bound;  // |c_N u^N| + |d_N u^N|
    };
    Eval evaluate(double u) const;
    double derivative(double u) const;
    double second_derivative(double u) const;
};

struct C1Supplied {
    double value;
};
struct C1FitOracle {
    std::vector<std::pair<double, double>> samples;  // (u, L(u)) reference values
};
struct C1Boundary {};  // minimize complete-monotonicity violations on the grid
using C1Policy = std::variant<C1Supplied, C1FitOracle, C1Boundary>;

struct FrobeniusResult {
    FrobeniusSeries series;
    std::vector<double> u;
    std::vector<FrobeniusSeries::Eval> evals;
};

/// Builds the series for coefficients f_1.. of the driver exponent, fixes
/// C2 = 1 and determines C1 by the given policy. Throws on near-integer
/// theta (resonant case unsupported) and when the truncation bound exceeds
/// 1e-8 at a requested grid point (advice: larger N or smaller u).
FrobeniusResult frobenius_solve(const std::vector<double>& psi_eta_coeffs,
                                const BmDriftParams& bm, int N, const std::vector<double>& u_grid,
                                const C1Policy& policy = C1Boundary{});

struct NestingEntry {
    BmDriftParams params;
    double theta = 0.0;
    Decision decision = Decision::inconclusive;
    std::string certificate;
};

struct NestingReport {
    std::vector<NestingEntry> entries;  // ordered by theta
    std::vector<std::string> violations;
    bool monotone_ok = true;
};

/// Metamorphic harness: runs check_in_range over (a, sigma) pairs ordered by
/// theta = 2a/sigma^2 and reports violations of monotone acceptance
/// (accept at a smaller theta followed by reject at a larger one);
/// inconclusive entries are excluded from the monotonicity assertion.
NestingReport nesting_report(const PositiveLawSpec& mu, std::vector<BmDriftParams> pairs,
                             const RangeCheckOptions& opts = {});

}  // namespace expfunc

#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "expfunc/laplace_exponent.hpp"

namespace expfunc {

enum class Decision { accept, reject, inconclusive };

std::string to_string(Decision d);

struct BernsteinViolation {
    double u = 0.0;
    int order = 0;        // 0 = sign of f itself, n >= 1 = n-th derivative
    double value = 0.0;   // measured (-1)^(n-1) f^(n)(u), or f(u) for order 0
    double error_bound = 0.0;
};

struct BernsteinVerdict {
    Decision decision = Decision::inconclusive;
    int max_order_checked = 0;
    std::optional<BernsteinViolation> violation;  // always present on reject
    std::optional<BernsteinViolation> marginal;   // first in-noise violation, if any
    double grid_lo = 0.0, grid_hi = 0.0;
    int grid_points = 0;

    std::string describe() const;
};

/// Default test grid: 200 logarithmically spaced points on [1e-3, 1e3].
std::vector<double> default_bernstein_grid();

/// Numerical Bernstein test for f on (0, inf): checks f >= 0 and the sign
/// alternation (-1)^(n-1) f^(n)(u) >= 0 for n = 1..max_order at every grid
/// point. Derivatives use order-n central differences with steps
/// h_n(u) = u * eps^(1/(n+2)); each point carries a certified error bound
/// (roundoff bound plus a two-step truncation estimate). Rejects only on a
/// violation exceeding its bound by a fixed margin; violations inside the
/// margin yield `inconclusive`.
BernsteinVerdict is_bernstein(const std::function<double(double)>& f,
                              const std::vector<double>& grid = default_bernstein_grid(),
                              int max_order = 6);

struct DriftLimit {
    double value = 0.0;
    bool converged = false;
    double residual = 0.0;
};

/// -lim_{u->inf} psi(u)/u for a subordinator exponent, via the dyadic
/// sequence u = 2^k, k = 10..30, with Aitken extrapolation. Reports a
/// convergence flag instead of silently returning a doubtful value.
DriftLimit subordinator_drift_limit(const LaplaceExponent& psi);

}  // namespace expfunc

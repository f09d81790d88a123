#include "expfunc/bernstein.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>

#include "expfunc/errors.hpp"
#include "expfunc/quadrature.hpp"

namespace expfunc {

namespace {

constexpr double kEps = std::numeric_limits<double>::epsilon();

// Central difference stencils of order-2 accuracy for derivatives 1..6.
struct Stencil {
    int half_width;
    double coeff[7];  // offsets -half_width .. +half_width
};

// coeff[i + half_width] multiplies f(u + i h).
constexpr Stencil kStencils[6] = {
    {1, {-0.5, 0, 0.5, 0, 0, 0, 0}},
    {1, {1, -2, 1, 0, 0, 0, 0}},
    {2, {-0.5, 1, 0, -1, 0.5, 0, 0}},
    {2, {1, -4, 6, -4, 1, 0, 0}},
    {3, {-0.5, 2, -2.5, 0, 2.5, -2, 0.5}},
    {3, {1, -6, 15, -20, 15, -6, 1}},
};

struct FdEstimate {
    double value;
    double error_bound;
};

FdEstimate fd_derivative(const std::function<double(double)>& f, double u, int order, double h) {
    const Stencil& st = kStencils[order - 1];
    auto apply = [&](double step) {
        double sum = 0.0, abs_coeff = 0.0, max_abs_f = 0.0;
        for (int i = -st.half_width; i <= st.half_width; ++i) {
            const double c = st.coeff[i + st.half_width];
            if (c == 0.0) continue;
            const double fx = f(u + i * step);
            if (!std::isfinite(fx)) throw NumericError("is_bernstein: non-finite evaluation");
            sum += c * fx;
            abs_coeff += std::abs(c);
            max_abs_f = std::max(max_abs_f, std::abs(fx));
        }
        const double hn = std::pow(step, order);
        // Evaluation noise is absolute at the scale of the intermediates
        // (consider sqrt(1+u) - 1 near 0), hence the unit floor on |f|.
        const double roundoff = abs_coeff * kEps * (1.0 + max_abs_f) / hn;
        return std::pair<double, double>{sum / hn, roundoff};
    };
    auto [d1, r1] = apply(h);
    auto [d2, r2] = apply(2.0 * h);
    FdEstimate e;
    e.value = d1;
    // Evaluation error is a few ulps of the function values, not one; the
    // factor keeps genuinely clean points out of the marginal zone.
    e.error_bound = 4.0 * (r1 + r2) + std::abs(d1 - d2);
    return e;
}

}  // namespace

std::string to_string(Decision d) {
    switch (d) {
        case Decision::accept: return "accept";
        case Decision::reject: return "reject";
        case Decision::inconclusive: return "inconclusive";
    }
    return "?";
}

std::string BernsteinVerdict::describe() const {
    std::ostringstream os;
    os << to_string(decision) << " (orders up to " << max_order_checked << ", grid ["
       << grid_lo << ", " << grid_hi << "] x" << grid_points << ")";
    if (violation) {
        os << " witness: order " << violation->order << " at u=" << violation->u
           << " value=" << violation->value << " bound=" << violation->error_bound;
    }
    if (marginal) {
        os << " marginal: order " << marginal->order << " at u=" << marginal->u
           << " value=" << marginal->value << " bound=" << marginal->error_bound;
    }
    return os.str();
}

std::vector<double> default_bernstein_grid() { return log_spaced(1e-3, 1e3, 200); }

BernsteinVerdict is_bernstein(const std::function<double(double)>& f,
                              const std::vector<double>& grid, int max_order) {
    if (grid.size() < 2) throw DomainError("is_bernstein: grid too small");
    if (max_order < 2 || max_order > 6)
        throw DomainError("is_bernstein: max_order must lie in [2, 6]");
    for (size_t i = 0; i + 1 < grid.size(); ++i)
        if (!(grid[i] < grid[i + 1])) throw DomainError("is_bernstein: grid must increase strictly");

    BernsteinVerdict verdict;
    verdict.max_order_checked = max_order;
    verdict.grid_lo = grid.front();
    verdict.grid_hi = grid.back();
    verdict.grid_points = static_cast<int>(grid.size());

    // A violation is certified once it exceeds its error bound by this margin.
    constexpr double kCertifyMargin = 8.0;
    bool marginal_seen = false;

    for (double u : grid) {
        const double fu = f(u);
        if (!std::isfinite(fu)) throw NumericError("is_bernstein: non-finite evaluation");
        const double scale0 = 1e-10 * (1.0 + std::abs(fu));
        if (fu < -scale0) {
            if (fu < -kCertifyMargin * scale0) {
                verdict.decision = Decision::reject;
                verdict.violation = BernsteinViolation{u, 0, fu, scale0};
                return verdict;
            }
            if (!marginal_seen) verdict.marginal = BernsteinViolation{u, 0, fu, scale0};
            marginal_seen = true;
        }

        for (int n = 1; n <= max_order; ++n) {
            const double h = u * std::pow(kEps, 1.0 / (n + 2));
            FdEstimate est = fd_derivative(f, u, n, h);
            const double signed_value = ((n % 2 == 1) ? 1.0 : -1.0) * est.value;
            const double bound = est.error_bound + 1e-13 * (1.0 + std::abs(fu));
            if (signed_value >= -bound) continue;
            if (signed_value < -kCertifyMargin * bound) {
                verdict.decision = Decision::reject;
                verdict.violation = BernsteinViolation{u, n, signed_value, bound};
                return verdict;
            }
            if (!marginal_seen) verdict.marginal = BernsteinViolation{u, n, signed_value, bound};
            marginal_seen = true;
        }
    }

    verdict.decision = marginal_seen ? Decision::inconclusive : Decision::accept;
    return verdict;
}

DriftLimit subordinator_drift_limit(const LaplaceExponent& psi) {
    std::vector<double> seq;
    for (int k = 10; k <= 30; ++k) {
        const double u = std::ldexp(1.0, k);
        seq.push_back(-psi.value(u) / u);
    }
    DriftLimit out;
    out.value = seq.back();
    out.residual = std::abs(seq[seq.size() - 1] - seq[seq.size() - 2]);

    const double tol = 1e-9 * (1.0 + std::abs(seq.back()));
    if (out.residual <= tol) {
        out.converged = true;
    } else {
        // Iterated Aitken delta-squared: -psi(u)/u - b is typically a sum of
        // a few geometric modes in k, each sweep removes the dominant one.
        std::vector<double> s = seq;
        for (int sweep = 0; sweep < 5 && s.size() >= 3 && !out.converged; ++sweep) {
            std::vector<double> t(s.size() - 2);
            for (size_t i = 0; i + 2 < s.size(); ++i) {
                const double d1 = s[i + 1] - s[i];
                const double d2 = s[i + 2] - s[i + 1];
                const double den = d2 - d1;
                t[i] = std::abs(den) > 1e-14 * (std::abs(d1) + std::abs(d2))
                           ? s[i + 2] - d2 * d2 / den
                           : s[i + 2];
            }
            s = std::move(t);
            out.value = s.back();
            if (s.size() >= 2) {
                out.residual = std::abs(s[s.size() - 1] - s[s.size() - 2]);
                out.converged = out.residual <= 1e-7 * (1.0 + std::abs(out.value));
            }
        }
    }
    if (out.value < 0.0 && out.value > -1e-7) out.value = 0.0;
    return out;
}

}  // namespace expfunc

#include "expfunc/bm.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "expfunc/errors.hpp"

namespace expfunc {

double laplace_ode_residual(const LaplaceExponent& laplace_transform,
                            const LaplaceExponent& psi_eta, const BmDriftParams& bm, double u) {
    bm.validate();
    if (!(u > 0.0)) throw DomainError("laplace_ode_residual: u must be > 0");
    const double half_s2 = 0.5 * bm.sigma * bm.sigma;
    return half_s2 * u * u * laplace_transform.deriv2(u) +
           (half_s2 - bm.a) * u * laplace_transform.deriv1(u) +
           psi_eta.value(u) * laplace_transform.value(u);
}

double driver_exponent_from_bdlp(const LaplaceExponent& psi_bdlp, const BmDriftParams& bm,
                                 double u) {
    bm.validate();
    if (!(u > 0.0)) throw DomainError("driver_exponent_from_bdlp: u must be > 0");
    const double x = psi_bdlp.value(u);
    const double half_s2 = 0.5 * bm.sigma * bm.sigma;
    return bm.a * x - half_s2 * u * psi_bdlp.deriv1(u) - half_s2 * x * x;
}

double bdlp_exponent_from_law(const LaplaceExponent& psi_v, double u) {
    if (!(u > 0.0)) throw DomainError("bdlp_exponent_from_law: u must be > 0");
    const double v = psi_v.value(u);
    const double x = u * psi_v.deriv1(u);
    if (x < v - 1e-8 * (1.0 + std::abs(v)))
        throw NumericError("bdlp exponent violates u psi' >= psi (concavity) at u=" +
                           std::to_string(u));
    return x;
}

double k_function_tail(const LevyMeasure& nu_bdlp, double x) {
    if (!(x > 0.0)) throw DomainError("k_function_tail: x must be > 0");
    if (nu_bdlp.has_negative_part())
        throw DomainError("k_function_tail: background measure must be a subordinator measure");
    return nu_bdlp.mass_beyond(x);
}

FrobeniusSeries::Eval FrobeniusSeries::evaluate(double u) const {
    const size_t N = d.size() - 1;
    // Horner evaluation of both entire parts.
    double D = d[N], C = c[N];
    for (size_t n = N; n-- > 0;) {
        D = D * u + d[n];
        C = C * u + c[n];
    }
    const double uN = std::pow(u, static_cast<double>(N));
    Eval e;
    e.truncation_bound = std::abs(c[N] * uN) + std::abs(d[N] * uN);
    e.value = C2 * D + C1 * std::pow(u, theta) * C;
    return e;
}

double FrobeniusSeries::derivative(double u) const {
    const size_t N = d.size() - 1;
    double Dp = 0.0, Cp = 0.0, D = d[N], C = c[N];
    for (size_t n = N; n-- > 0;) {
        Dp = Dp * u + d[n + 1] * static_cast<double>(n + 1);
        Cp = Cp * u + c[n + 1] * static_cast<double>(n + 1);
        D = D * u + d[n];
        C = C * u + c[n];
    }
    return C2 * Dp + C1 * (theta * std::pow(u, theta - 1.0) * C + std::pow(u, theta) * Cp);
}

double FrobeniusSeries::second_derivative(double u) const {
    const size_t N = d.size() - 1;
    double Dpp = 0.0, Cpp = 0.0, Dp = 0.0, Cp = 0.0, D = d[N], C = c[N];
    for (size_t n = N; n-- > 0;) {
        if (n + 2 <= N) {
            Dpp = Dpp * u + d[n + 2] * static_cast<double>((n + 2) * (n + 1));
            Cpp = Cpp * u + c[n + 2] * static_cast<double>((n + 2) * (n + 1));
        }
        Dp = Dp * u + d[n + 1] * static_cast<double>(n + 1);
        Cp = Cp * u + c[n + 1] * static_cast<double>(n + 1);
        D = D * u + d[n];
        C = C * u + c[n];
    }
    const double ut = std::pow(u, theta);
    return C2 * Dpp + C1 * (theta * (theta - 1.0) * std::pow(u, theta - 2.0) * C +
                            2.0 * theta * std::pow(u, theta - 1.0) * Cp + ut * Cpp);
}

FrobeniusResult frobenius_solve(const std::vector<double>& psi_eta_coeffs,
                                const BmDriftParams& bm, int N, const std::vector<double>& u_grid,
                                const C1Policy& policy) {
    bm.validate();
    if (bm.theta_near_integer())
        throw DomainError("frobenius_solve: theta = 2a/sigma^2 within 1e-6 of an integer "
                          "(resonant case unsupported)");
    if (N < 4) throw DomainError("frobenius_solve: need N >= 4");

    FrobeniusSeries s;
    s.theta = bm.theta();
    s.truncation_N = N;
    s.f.assign(static_cast<size_t>(N) + 1, 0.0);
    for (size_t i = 0; i < psi_eta_coeffs.size() && i + 1 <= static_cast<size_t>(N); ++i)
        s.f[i + 1] = psi_eta_coeffs[i];

    s.c.assign(static_cast<size_t>(N) + 1, 0.0);
    s.d.assign(static_cast<size_t>(N) + 1, 0.0);
    s.c[0] = s.d[0] = 1.0;
    for (int n = 1; n <= N; ++n) {
        double sc = 0.0, sd = 0.0;
        for (int k = 0; k < n; ++k) {
            sc += s.c[static_cast<size_t>(k)] * s.f[static_cast<size_t>(n - k)];
            sd += s.d[static_cast<size_t>(k)] * s.f[static_cast<size_t>(n - k)];
        }
        s.c[static_cast<size_t>(n)] = -sc / (n * (n + s.theta));
        s.d[static_cast<size_t>(n)] = -sd / (n * (n - s.theta));
    }

    // Radius from the growth of the trailing coefficients, capped for entire
    // series whose coefficients decay factorially.
    double inv_radius = 0.0;
    for (int n = N / 2; n <= N; ++n) {
        const double m =
            std::max(std::abs(s.c[static_cast<size_t>(n)]), std::abs(s.d[static_cast<size_t>(n)]));
        if (m > 0.0) inv_radius = std::max(inv_radius, std::pow(m, 1.0 / n));
    }
    s.radius_estimate = inv_radius > 1e-9 ? 1.0 / inv_radius : 1e9;

    for (double u : u_grid) {
        if (!(u > 0.0)) throw DomainError("frobenius_solve: grid points must be > 0");
        const double bound = s.evaluate(u).truncation_bound;
        if (bound > 1e-8)
            throw NumericError("frobenius_solve: truncation bound " + std::to_string(bound) +
                               " at u=" + std::to_string(u) +
                               " exceeds 1e-8; increase N or shrink the grid");
    }

    if (std::holds_alternative<C1Supplied>(policy)) {
        s.C1 = std::get<C1Supplied>(policy).value;
    } else if (std::holds_alternative<C1FitOracle>(policy)) {
        const auto& samples = std::get<C1FitOracle>(policy).samples;
        if (samples.empty()) throw DomainError("frobenius_solve: oracle fit needs samples");
        double num = 0.0, den = 0.0;
        for (const auto& [u, L] : samples) {
            FrobeniusSeries probe = s;
            probe.C1 = 0.0;
            const double D = probe.evaluate(u).value;  // C2 part alone
            probe.C1 = 1.0;
            probe.C2 = 0.0;
            const double W = probe.evaluate(u).value;  // u^theta C part alone
            num += W * (L - D);
            den += W * W;
        }
        if (den <= 0.0) throw NumericError("frobenius_solve: degenerate oracle fit");
        s.C1 = num / den;
    } else {
        // Boundary policy: choose C1 minimizing complete-monotonicity
        // violations of L (L >= 0, L' <= 0, L'' >= 0) over the whole
        // certified radius, not just the requested grid; the decay constraint
        // only bites where the entire parts have grown. Ties broken towards
        // the smallest |C1|.
        double u_extend = std::max(1.0, u_grid.back());
        while (u_extend < 1e6 && s.evaluate(2.0 * u_extend).truncation_bound <= 1e-8)
            u_extend *= 2.0;
        std::vector<double> pen_grid;
        {
            const double lo = u_grid.front(), hi = u_extend;
            const int n = 64;
            for (int i = 0; i < n; ++i)
                pen_grid.push_back(lo * std::pow(hi / lo, static_cast<double>(i) / (n - 1)));
        }
        auto penalty = [&s, &pen_grid](double C1) {
            FrobeniusSeries probe = s;
            probe.C1 = C1;
            double p = 1e-12 * C1 * C1;
            for (double u : pen_grid) {
                const double L = probe.evaluate(u).value;
                const double L1 = probe.derivative(u);
                const double L2 = probe.second_derivative(u);
                if (!std::isfinite(L) || !std::isfinite(L1) || !std::isfinite(L2))
                    return std::numeric_limits<double>::infinity();
                p += std::pow(std::max(0.0, -L), 2) + std::pow(std::max(0.0, L1), 2) +
                     std::pow(std::max(0.0, -L2), 2);
            }
            return p;
        };
        double best_c = 0.0, best_p = penalty(0.0);
        for (double cand = -50.0; cand <= 50.0; cand += 0.25) {
            const double p = penalty(cand);
            if (p < best_p) {
                best_p = p;
                best_c = cand;
            }
        }
        double lo = best_c - 0.25, hi = best_c + 0.25;
        for (int it = 0; it < 80; ++it) {
            const double m1 = lo + (hi - lo) / 3.0, m2 = hi - (hi - lo) / 3.0;
            if (penalty(m1) <= penalty(m2))
                hi = m2;
            else
                lo = m1;
        }
        s.C1 = 0.5 * (lo + hi);
    }

    FrobeniusResult out;
    out.series = s;
    out.u = u_grid;
    out.evals.reserve(u_grid.size());
    for (double u : u_grid) out.evals.push_back(out.series.evaluate(u));
    return out;
}

NestingReport nesting_report(const PositiveLawSpec& mu, std::vector<BmDriftParams> pairs,
                             const RangeCheckOptions& opts) {
    std::sort(pairs.begin(), pairs.end(),
              [](const BmDriftParams& x, const BmDriftParams& y) { return x.theta() < y.theta(); });
    NestingReport rep;
    for (const auto& p : pairs) {
        LevyTriplet xi = LevyTriplet::brownian_with_drift(p.a, p.sigma);
        RangeVerdict v = check_in_range(mu, xi, opts);
        rep.entries.push_back({p, p.theta(), v.decision, v.certificate});
    }
    bool seen_accept = false;
    double accept_theta = 0.0;
    for (const auto& e : rep.entries) {
        if (e.decision == Decision::accept) {
            seen_accept = true;
            accept_theta = e.theta;
        } else if (e.decision == Decision::reject && seen_accept) {
            rep.monotone_ok = false;
            rep.violations.push_back("accept at theta=" + std::to_string(accept_theta) +
                                     " but reject at larger theta=" + std::to_string(e.theta));
        }
    }
    return rep;
}

}  // namespace expfunc

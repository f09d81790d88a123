#include "expfunc/range.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <memory>
#include <sstream>

#include "expfunc/errors.hpp"
#include "expfunc/quadrature.hpp"

namespace expfunc {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

std::string fmt(double x) {
    std::ostringstream os;
    os << x;
    return os.str();
}

QuadratureOptions jump_quad_opts() {
    QuadratureOptions o;
    o.abs_tol = 1e-12;
    o.rel_tol = 1e-10;
    return o;
}

// Jump-integral integrand of the membership criterion:
//   F(y) = e^{psi_V(u e^{-y}) - psi_V(u)} - 1 + u psi_V'(u) y 1_{|y|<=1},
// with the quadratic Taylor form below |y| = 1e-5 where the direct expression
// cancels.  F(0) = F'(0) = 0 and F''(0) = u^2 p1^2 + u p1 + u^2 p2.
struct JumpIntegrand {
    const LaplaceExponent* psi;
    double u, p0, p1, taylor2;

    JumpIntegrand(const LaplaceExponent& psi_v, double u_) : psi(&psi_v), u(u_) {
        p0 = psi->value(u);
        p1 = psi->deriv1(u);
        const double p2 = psi->deriv2(u);
        taylor2 = u * u * p1 * p1 + u * p1 + u * u * p2;
    }

    double operator()(double y) const {
        if (std::abs(y) < 1e-5) return 0.5 * taylor2 * y * y;
        double arg = u * std::exp(-y);
        if (!(arg < 1e300)) arg = 1e300;  // psi_V is decreasing; the factor is 0 anyway
        const double delta = psi->value(arg) - p0;
        if (delta > 700.0)
            throw NumericError("jump integrand overflow at y=" + std::to_string(y));
        double f = (delta < -700.0) ? -1.0 : std::expm1(delta);
        if (std::abs(y) <= 1.0) f += u * p1 * y;
        return f;
    }
};

// Integral of F against one density-type component on one side. The tail is
// integrated in log coordinates up to a truncation point certified by the
// component tail mass (F is bounded on each side).
double jump_integral_density(const JumpIntegrand& F, const std::function<double(double)>& rho,
                             const std::function<double(double)>& tail_mass, double sign,
                             double taylor_closed_scale, double taylor_exponent) {
    const QuadratureOptions opt = jump_quad_opts();
    // (0, 1e-5]: quadratic Taylor region, closed form when the density is a
    // pure power (taylor_closed_scale = c, taylor_exponent = alpha), else
    // negligible for bounded densities.
    double near = 0.0;
    if (taylor_closed_scale > 0.0) {
        const double d = 1e-5;
        near = 0.5 * F.taylor2 * taylor_closed_scale * std::pow(d, 2.0 - taylor_exponent) /
               (2.0 - taylor_exponent);
    }
    auto log_integrand = [&](double t) {
        const double r = std::exp(t);
        return F(sign * r) * rho(r) * r;
    };
    // [1e-5, 1]: log substitution r = e^t.
    QuadratureResult m = integrate(log_integrand, std::log(1e-5), 0.0, opt);
    // (1, inf): continue in log coordinates; |F| is bounded by
    // max(1, e^{-psi_V(u)} - 1) on the positive side and by 1 + u|p1| on the
    // negative side, so the remainder is controlled by the tail mass.
    const double f_bound =
        1.0 + std::abs(F.u * F.p1) + std::max(0.0, std::expm1(std::min(-F.p0, 690.0)));
    double t_hi = 1.0;
    const double scale = 1e-14 * (1.0 + std::abs(m.value) + std::abs(near));
    while (t_hi < 700.0 && tail_mass(std::exp(t_hi)) * f_bound > scale) t_hi *= 1.5;
    QuadratureResult t = integrate(log_integrand, 0.0, t_hi, opt);
    if (!m.converged && !t.converged)
        throw NumericError("candidate exponent jump integral failed: " + m.diagnostic());
    const double v = near + m.value + t.value;
    if (!std::isfinite(v))
        throw NumericError("candidate exponent jump integral diverged (side " + fmt(sign) + ")");
    return v;
}

}  // namespace

double candidate_driver_exponent(const PositiveLawSpec& mu, const LevyTriplet& xi, double u) {
    if (!(u > 0.0)) throw DomainError("candidate_driver_exponent: u must be > 0");
    const double p1 = mu.psi_V.deriv1(u);
    const double p2 = mu.psi_V.deriv2(u);
    const double half_s2 = 0.5 * xi.sigma2;

    double g = (xi.gamma - half_s2) * u * p1 - half_s2 * u * u * (p2 + p1 * p1);
    if (xi.nu.is_zero()) return g;

    JumpIntegrand F(mu.psi_V, u);
    for (const auto& comp : xi.nu.components()) {
        std::visit(
            [&](const auto& c) {
                using T = std::decay_t<decltype(c)>;
                if constexpr (std::is_same_v<T, Atoms>) {
                    for (const auto& [y, m] : c.points) g -= m * F(y);
                } else if constexpr (std::is_same_v<T, StableDensity>) {
                    const double sign = c.side == JumpSide::positive ? 1.0 : -1.0;
                    auto rho = [&c](double r) { return c.c * std::pow(r, -1.0 - c.alpha); };
                    auto tail = [&c](double r) { return c.c * std::pow(r, -c.alpha) / c.alpha; };
                    g -= jump_integral_density(F, rho, tail, sign, c.c, c.alpha);
                } else if constexpr (std::is_same_v<T, DensityWithTail>) {
                    const double sign = c.side == JumpSide::positive ? 1.0 : -1.0;
                    g -= jump_integral_density(F, c.density, c.tail_mass, sign, 0.0, 0.0);
                } else if constexpr (std::is_same_v<T, TabulatedDensity>) {
                    const double sign = c.side == JumpSide::positive ? 1.0 : -1.0;
                    auto f = [&](double r) { return F(sign * r) * pchip_eval(c.grid, c.values, r); };
                    QuadratureResult r = integrate(f, c.grid.front(), c.grid.back(), jump_quad_opts());
                    g -= r.value;
                }
            },
            comp);
    }
    if (!std::isfinite(g))
        throw NumericError("candidate_driver_exponent: non-finite value at u=" + fmt(u));
    return g;
}

std::optional<std::string> prescreen(const PositiveLawSpec& mu, const LevyTriplet& xi) {
    const ProcessShape sx = shape_of(xi);

    if (sx.infinite_variation && !sx.nu_pos_mass) {
        // xi spectrally negative of infinite variation: members are
        // selfdecomposable with drift 0.
        if (mu.drift_bV != 0.0)
            return "law drift b_V=" + fmt(mu.drift_bV) +
                   " != 0 under spectrally negative infinite-variation xi";
        if (mu.k) {
            double prev = kInf;
            for (double x : log_spaced(1e-6, 1e6, 120)) {
                const double kx = (*mu.k)(x);
                if (kx > prev * (1.0 + 1e-9) + 1e-300)
                    return "k-function increases at x=" + fmt(x) + " (not selfdecomposable)";
                prev = kx;
            }
        }
    }
    if (mu.levy_measure_finite && mu.nontrivial)
        return "law has finite non-zero Levy measure (compound-Poisson type); "
               "exponential functionals have infinite Levy measure unless constant";
    return std::nullopt;
}

RangeVerdict check_in_range(const PositiveLawSpec& mu, const LevyTriplet& xi,
                            const RangeCheckOptions& opts) {
    RangeVerdict out;
    if (auto cert = prescreen(mu, xi)) {
        out.decision = Decision::reject;
        out.certificate = *cert;
        return out;
    }

    // The witness exponent outlives this call; the closure owns its inputs.
    auto mu_held = std::make_shared<const PositiveLawSpec>(mu);
    auto xi_held = std::make_shared<const LevyTriplet>(xi);
    auto g = [mu_held, xi_held](double u) {
        return candidate_driver_exponent(*mu_held, *xi_held, u);
    };

    // A subordinator exponent is non-positive everywhere; catch sign
    // violations below the Bernstein grid before the derivative tests.
    {
        const std::vector<double> pre = log_spaced(1e-8, 2e-3, 12);
        double mag = 0.0;
        std::vector<double> vals;
        for (double u : pre) {
            vals.push_back(g(u));
            mag = std::max(mag, std::abs(vals.back()));
        }
        for (size_t i = 0; i < pre.size(); ++i) {
            if (vals[i] > 1e-8 * mag + 1e-290) {
                out.decision = Decision::reject;
                out.certificate = "candidate exponent positive at u=" + fmt(pre[i]) +
                                  " (g=" + fmt(vals[i]) + "); not a subordinator exponent";
                return out;
            }
        }
    }

    // psi_eta(0+) = 0 is required of a subordinator exponent; a positive
    // killing-rate style limit disqualifies the candidate.
    const double g6 = g(1e-6), g7 = g(1e-7), g8 = g(1e-8);
    const double a6 = std::abs(g6), a7 = std::abs(g7), a8 = std::abs(g8);
    bool vanishes = a8 <= 1e-12;
    if (!vanishes && a8 <= a7 * 1.05 && a7 <= a6 * 1.05 && a6 > 0.0) {
        const double p = std::log(a6 / std::max(a8, 1e-300)) / std::log(100.0);
        vanishes = p >= 0.004;
    }
    if (!vanishes) {
        out.decision = Decision::reject;
        out.certificate = "candidate exponent does not vanish at 0+ (g(1e-6)=" + fmt(g6) +
                          ", g(1e-8)=" + fmt(g8) + ")";
        return out;
    }

    const std::vector<double> grid = opts.grid.empty() ? default_bernstein_grid() : opts.grid;
    BernsteinVerdict bv = is_bernstein([&g](double u) { return -g(u); }, grid, opts.max_order);
    if (bv.decision == Decision::reject) {
        out.decision = Decision::reject;
        out.certificate = "-g fails the Bernstein test: " + bv.describe();
        return out;
    }
    if (bv.decision == Decision::inconclusive) {
        out.decision = Decision::inconclusive;
        out.certificate = "Bernstein test inconclusive: " + bv.describe();
        return out;
    }

    out.decision = Decision::accept;
    out.psi_eta = LaplaceExponent::from_function(g);
    try {
        DriftLimit dl = subordinator_drift_limit(*out.psi_eta);
        out.eta_drift = dl.value;
        out.eta_drift_converged = dl.converged;
    } catch (const NumericError&) {
        out.eta_drift_converged = false;
    }
    return out;
}

GrowthReport growth_necessary_check(const PositiveLawSpec& mu, const BmDriftParams& bm) {
    bm.validate();
    if (!mu.k) throw DomainError("growth_necessary_check: law carries no k-function");
    GrowthReport rep;

    // s_j = x_j^{-1/2} int_0^{x_j} k, x_j = 2^{-j}. The integral is computed
    // in log coordinates down to x_j e^{-60}.
    std::vector<double> s;
    try {
        for (int j = 5; j <= 40; ++j) {
            const double x = std::ldexp(1.0, -j);
            auto integrand = [&](double t) {
                const double r = std::exp(t);
                return (*mu.k)(r) * r;
            };
            QuadratureResult q = integrate(integrand, std::log(x) - 60.0, std::log(x));
            s.push_back(q.value / std::sqrt(x));
        }
    } catch (const NumericError& e) {
        rep.decision = Decision::inconclusive;
        rep.note = std::string("quadrature failure near 0: ") + e.what();
        return rep;
    }

    // Certified divergence: a monotone increasing run of >= 10 dyadic steps
    // growing by a total factor >= 1.2.
    int run_start = 0;
    for (size_t i = 1; i <= s.size(); ++i) {
        const bool up = i < s.size() && s[i] >= s[i - 1] * (1.0 - 1e-12);
        if (!up) {
            const int run_len = static_cast<int>(i) - run_start - 1;
            if (run_len >= 10 && s[i - 1] >= 1.2 * s[static_cast<size_t>(run_start)]) {
                rep.decision = Decision::reject;
                rep.limsup_estimate = kInf;
                rep.note = "limsup x^{-1/2} int_0^x k diverges (monotone dyadic growth x" +
                           fmt(s[i - 1] / s[static_cast<size_t>(run_start)]) + " over " +
                           fmt(run_len) + " steps)";
                return rep;
            }
            run_start = static_cast<int>(i);
        }
    }

    const size_t n = s.size();
    const double last = s[n - 1], mid = s[n - 11];
    // A steady decay of >= 1% per dyadic step over the last ten steps marks a
    // vanishing limit; anything flatter counts as a positive limsup.
    if (last <= 0.93 * mid) {
        rep.limsup_estimate = 0.0;
    } else {
        rep.limsup_estimate = last;
    }
    // Still growing at the end but below the certificate factor: the limit
    // status is undecided.
    bool tail_growing = true;
    for (size_t i = n - 10; i < n; ++i)
        if (s[i] < s[i - 1] * (1.0 - 1e-12)) tail_growing = false;
    if (tail_growing && last >= 1.05 * s[n - 11]) {
        rep.decision = Decision::inconclusive;
        rep.limsup_estimate = last;
        rep.note = "dyadic sequence still increasing below the divergence certificate";
        return rep;
    }
    rep.decision = Decision::accept;
    rep.b_eta_positive = rep.limsup_estimate > 1e-6 * (1.0 + s.front());
    rep.note = rep.b_eta_positive ? "limsup > 0: pre-image drift b_eta > 0"
                                  : "limsup = 0: pre-image drift b_eta = 0";
    return rep;
}

RangeVerdict finite_k_check(const PositiveLawSpec& mu, const BmDriftParams& bm,
                            int grid_points) {
    bm.validate();
    if (!mu.nu_X) throw DomainError("finite_k_check: law carries no finite-activity background");
    const FiniteActivityDensity& bg = *mu.nu_X;
    RangeVerdict out;

    if (mu.drift_bV != 0.0) {
        out.decision = Decision::reject;
        out.certificate = "background drift b_X=" + fmt(mu.drift_bV) + " != 0";
        return out;
    }
    for (const auto& [t, jump] : bg.jumps) {
        if (jump < 0.0) {
            out.decision = Decision::reject;
            out.certificate = "background density g has a negative jump at t=" + fmt(t);
            return out;
        }
    }

    // Vanishing-tail conditions on t g(t) at both ends.
    {
        const double tg_small = 1e-8 * bg.g(1e-8);
        if (!(std::abs(tg_small) <= 1e-4 * (1.0 + bg.mass))) {
            out.decision = Decision::reject;
            out.certificate = "t g(t) does not vanish as t -> 0";
            return out;
        }
        if (!std::isfinite(bg.support_upper)) {
            double prev = kInf;
            for (double t : {1e3, 1e5, 1e7}) {
                const double tg = t * bg.g(t);
                if (tg > prev * 1.01 + 1e-12) {
                    out.decision = Decision::reject;
                    out.certificate = "t g(t) does not vanish as t -> inf";
                    return out;
                }
                prev = tg;
            }
        }
    }

    const double s2 = bm.sigma * bm.sigma;
    const double coef = bm.a + s2 * bg.mass + 0.5 * s2;
    auto conv = [&bg](double t) {
        auto f = [&bg, t](double s) { return bg.g(s) * bg.g(t - s); };
        return 2.0 * integrate(f, 0.0, 0.5 * t).value;
    };
    // G'(t) and the magnitude scale used by the acceptance tolerance.
    auto g_prime = [&](double t, double* scale = nullptr) {
        const double t1 = coef * bg.g(t);
        const double t2 = 0.5 * s2 * t * bg.dg(t);
        const double t3 = -0.5 * s2 * conv(t);
        if (scale) *scale = std::abs(t1) + std::abs(t2) + std::abs(t3);
        return t1 + t2 + t3;
    };

    const double grid_hi = std::isfinite(bg.support_upper) ? 2.5 * bg.support_upper : 1e4;
    std::vector<double> grid = log_spaced(1e-4, grid_hi, grid_points);

    double prev_t = 0.0;
    for (double t : grid) {
        double scale = 0.0;
        const double gp = g_prime(t, &scale);
        const double tol = 1e-10 * (1.0 + scale);
        if (gp < -tol) {
            // Locate the first sign change to the left of the violating node.
            double lo = prev_t > 0.0 ? prev_t : t * 0.5, hi = t;
            for (int it = 0; it < 60 && (hi - lo) > 1e-6 * hi; ++it) {
                const double mid = 0.5 * (lo + hi);
                (g_prime(mid) < 0.0 ? hi : lo) = mid;
            }
            out.decision = Decision::reject;
            out.first_violation_t = 0.5 * (lo + hi);
            out.certificate = "G' < 0 first at t=" + fmt(*out.first_violation_t);
            return out;
        }
        prev_t = t;
    }

    // Tail certificate on unbounded supports: G'/g must settle at a positive
    // level (it tends to a + sigma^2/2 (1 + beta) ... for regularly varying g;
    // here we only require a stable positive trend).
    if (!std::isfinite(bg.support_upper)) {
        double ratio_prev = 0.0;
        bool positive_trend = true;
        for (int i = 0; i < 4; ++i) {
            const double t = grid_hi * std::pow(2.0, i);
            const double gt = bg.g(t);
            if (gt <= 0.0) break;
            const double ratio = g_prime(t) / gt;
            if (ratio < -1e-10) {
                out.decision = Decision::reject;
                out.first_violation_t = t;
                out.certificate = "G' < 0 in the tail at t=" + fmt(t);
                return out;
            }
            if (i > 0 && ratio < ratio_prev - 0.5 * std::abs(ratio_prev) - 1e-10)
                positive_trend = false;
            ratio_prev = ratio;
        }
        if (!positive_trend) {
            out.decision = Decision::inconclusive;
            out.certificate = "tail behaviour of G' not certified";
            return out;
        }
    }

    out.decision = Decision::accept;
    // Witness: eta with drift 0 and finite measure dG, tabulated as a density.
    if (bg.mass > 0.0) {
        std::vector<double> vals;
        vals.reserve(grid.size());
        for (double t : grid) vals.push_back(std::max(g_prime(t), 0.0));
        TabulatedDensity tab;
        tab.grid = grid;
        tab.values = vals;
        out.eta_triplet = LevyTriplet::from_fv_parts(0.0, 0.0, LevyMeasure::tabulated(tab));
        out.psi_eta = LaplaceExponent::from_subordinator(*out.eta_triplet);
    } else {
        out.eta_triplet = LevyTriplet::deterministic_drift(0.0);
        out.psi_eta = LaplaceExponent();
    }
    out.eta_drift = 0.0;
    out.eta_drift_converged = true;
    return out;
}

}  // namespace expfunc

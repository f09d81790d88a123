#include "expfunc/positive_law.hpp"

#include <cmath>
#include <memory>

#include "expfunc/errors.hpp"
#include "expfunc/quadrature.hpp"

namespace expfunc {

namespace {

constexpr double kEulerGamma = 0.57721566490153286061;

// Ein(z) = int_0^z (1 - e^{-s})/s ds = gamma + log z + E1(z), z > 0.
double ein(double z) {
    if (z <= 0.0) return 0.0;
    if (z < 1.0) {
        double term = z, sum = z;
        for (int k = 2; k <= 30; ++k) {
            term *= -z / k;
            const double add = term / k;
            sum += add;
            if (std::abs(add) < 1e-18 * std::abs(sum)) break;
        }
        return sum;
    }
    const double e1 = -std::expint(-z);
    return kEulerGamma + std::log(z) + e1;
}

QuadratureOptions law_quad_opts() {
    QuadratureOptions o;
    o.abs_tol = 1e-13;
    o.rel_tol = 1e-11;
    return o;
}

// int_0^upper f(t) g(t) dt for a finite-activity background density.
double g_integral(const std::shared_ptr<const FiniteActivityDensity>& bg,
                  const std::function<double(double)>& f) {
    const double hi = bg->support_upper;
    auto integrand = [&](double t) { return f(t) * bg->g(t); };
    if (std::isfinite(hi)) return integrate(integrand, 0.0, hi, law_quad_opts()).value;
    QuadratureResult head = integrate(integrand, 0.0, 1.0, law_quad_opts());
    QuadratureResult tail = integrate_to_infinity(integrand, 1.0, law_quad_opts());
    return head.value + tail.value;
}

}  // namespace

PositiveLawSpec make_stable_law(double alpha, double c, double drift) {
    if (!(alpha > 0.0 && alpha < 1.0)) throw DomainError("stable law: alpha must lie in (0,1)");
    if (!(c > 0.0)) throw DomainError("stable law: c must be > 0");
    if (!(drift >= 0.0)) throw DomainError("stable law: drift must be >= 0");

    const double gamma1 = std::tgamma(1.0 - alpha);
    const double gamma2 = std::tgamma(2.0 - alpha);
    PositiveLawSpec law;
    law.psi_V = LaplaceExponent::with_derivatives(
        [drift, c, alpha, gamma1](double u) {
            return -drift * u - c * gamma1 / alpha * std::pow(u, alpha);
        },
        [drift, c, alpha, gamma1](double u) { return -drift - c * gamma1 * std::pow(u, alpha - 1.0); },
        [c, alpha, gamma2](double u) { return c * gamma2 * std::pow(u, alpha - 2.0); },
        ExponentFamily::stable);
    law.drift_bV = drift;
    law.k = [c, alpha](double x) { return c * std::pow(x, -alpha); };
    law.levy_measure_finite = false;
    law.name = "stable(alpha=" + std::to_string(alpha) + ",c=" + std::to_string(c) + ")";
    return law;
}

PositiveLawSpec make_dirac_law(double c) {
    if (!(c >= 0.0)) throw DomainError("dirac law: c must be >= 0");
    PositiveLawSpec law;
    law.psi_V = LaplaceExponent::drift(c);
    law.drift_bV = c;
    law.k = [](double) { return 0.0; };
    FiniteActivityDensity empty;
    empty.g = [](double) { return 0.0; };
    empty.dg = [](double) { return 0.0; };
    empty.mass = 0.0;
    law.nu_X = empty;
    law.levy_measure_finite = true;
    law.nontrivial = false;
    law.name = "dirac(" + std::to_string(c) + ")";
    return law;
}

PositiveLawSpec make_finite_k_law(FiniteActivityDensity nu_x, double drift) {
    if (!nu_x.g || !nu_x.dg)
        throw DomainError("finite_k law: background density needs g and its derivative");
    if (!(nu_x.mass >= 0.0) || !std::isfinite(nu_x.mass))
        throw DomainError("finite_k law: background mass must be finite");
    auto bg = std::make_shared<const FiniteActivityDensity>(std::move(nu_x));

    PositiveLawSpec law;
    law.drift_bV = drift;
    // psi_V(u) = -b u - int g(t) Ein(u t) dt (Fubini over the Levy density
    // x^{-1} k(x) with k the tail of g); derivatives through the background
    // exponent psi_X(u) = int (e^{-ut}-1) g(t) dt.
    law.psi_V = LaplaceExponent::with_derivatives(
        [bg, drift](double u) {
            return -drift * u - g_integral(bg, [u](double t) { return ein(u * t); });
        },
        [bg, drift](double u) {
            const double psi_x =
                g_integral(bg, [u](double t) { return std::expm1(-u * t); });
            return -drift + psi_x / u;
        },
        [bg](double u) {
            const double psi_x = g_integral(bg, [u](double t) { return std::expm1(-u * t); });
            const double dpsi_x =
                -g_integral(bg, [u](double t) { return t * std::exp(-u * t); });
            return dpsi_x / u - psi_x / (u * u);
        },
        ExponentFamily::numeric);
    law.k = [bg](double x) {
        if (x >= bg->support_upper) return 0.0;
        auto integrand = [&](double t) { return bg->g(t); };
        if (std::isfinite(bg->support_upper))
            return integrate(integrand, x, bg->support_upper, law_quad_opts()).value;
        return integrate_to_infinity(integrand, x, law_quad_opts()).value;
    };
    law.nu_X = *bg;
    law.levy_measure_finite = false;  // nu_V density x^{-1} k(x) has infinite mass near 0
    law.name = "finite_k";
    return law;
}

PositiveLawSpec make_compound_poisson_law(std::vector<std::pair<double, double>> atoms,
                                          double drift) {
    for (const auto& [x, m] : atoms) {
        if (!(x > 0.0)) throw DomainError("compound-poisson law: atoms must be positive");
        if (!(m > 0.0)) throw DomainError("compound-poisson law: masses must be positive");
    }
    if (!(drift >= 0.0)) throw DomainError("compound-poisson law: drift must be >= 0");
    PositiveLawSpec law;
    const bool nontrivial = !atoms.empty();
    auto held = std::make_shared<const std::vector<std::pair<double, double>>>(std::move(atoms));
    law.psi_V = LaplaceExponent::with_derivatives(
        [held, drift](double u) {
            double s = -drift * u;
            for (const auto& [x, m] : *held) s += m * std::expm1(-u * x);
            return s;
        },
        [held, drift](double u) {
            double s = -drift;
            for (const auto& [x, m] : *held) s += -m * x * std::exp(-u * x);
            return s;
        },
        [held](double u) {
            double s = 0.0;
            for (const auto& [x, m] : *held) s += m * x * x * std::exp(-u * x);
            return s;
        },
        ExponentFamily::compound_poisson);
    law.drift_bV = drift;
    law.levy_measure_finite = true;
    law.nontrivial = nontrivial;
    law.name = "compound_poisson_law";
    return law;
}

FiniteActivityDensity exp_background(double rate) {
    if (!(rate > 0.0)) throw DomainError("exp background: rate must be > 0");
    FiniteActivityDensity d;
    d.g = [rate](double t) { return std::exp(-rate * t); };
    d.dg = [rate](double t) { return -rate * std::exp(-rate * t); };
    d.mass = 1.0 / rate;
    return d;
}

FiniteActivityDensity inverse_poly_background(double p) {
    if (!(p > 2.0)) throw DomainError("inverse_poly background: need p > 2 for a finite mean");
    FiniteActivityDensity d;
    d.g = [p](double t) { return std::pow(1.0 + t, -p); };
    d.dg = [p](double t) { return -p * std::pow(1.0 + t, -p - 1.0); };
    d.mass = 1.0 / (p - 1.0);
    return d;
}

FiniteActivityDensity bump_background(double center, double halfwidth) {
    if (!(halfwidth > 0.0) || !(center > halfwidth))
        throw DomainError("bump background: need center > halfwidth > 0");
    FiniteActivityDensity d;
    d.g = [center, halfwidth](double t) {
        const double s = (t - center) / halfwidth;
        if (std::abs(s) >= 1.0) return 0.0;
        const double q = 1.0 - s * s;
        return q * q;
    };
    d.dg = [center, halfwidth](double t) {
        const double s = (t - center) / halfwidth;
        if (std::abs(s) >= 1.0) return 0.0;
        return -4.0 * s * (1.0 - s * s) / halfwidth;
    };
    d.mass = halfwidth * 16.0 / 15.0;
    d.support_upper = center + halfwidth;
    return d;
}

FiniteActivityDensity step_background(double height, double upper) {
    if (!(height > 0.0) || !(upper > 0.0)) throw DomainError("step background: bad parameters");
    FiniteActivityDensity d;
    d.g = [height, upper](double t) { return t < upper ? height : 0.0; };
    d.dg = [](double) { return 0.0; };
    d.mass = height * upper;
    d.support_upper = upper;
    d.jumps = {{upper, -height}};
    return d;
}

}  // namespace expfunc

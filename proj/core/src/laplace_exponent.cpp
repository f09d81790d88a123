#include "expfunc/laplace_exponent.hpp"

#include <cmath>
#include <limits>
#include <memory>

#include "expfunc/errors.hpp"
#include "expfunc/quadrature.hpp"

namespace expfunc {

namespace {

constexpr double kEps = std::numeric_limits<double>::epsilon();

// Weight w in {0,1,2} selects int x^w e^{-ux} rho(x) dx with the (e^{-ux}-1)
// integrand at w = 0. Both halves of the split at x = 1 are integrated in
// log coordinates; the upper truncation point comes from the certified tail
// mass, so heavy tails do not degrade the panel subdivision.
double density_integral(const std::function<double(double)>& rho,
                        const std::function<double(double)>& tail_mass, double u, int w) {
    QuadratureOptions opt;
    opt.abs_tol = 1e-13;
    opt.rel_tol = 1e-11;
    auto log_integrand = [&rho, u, w](double y) {
        const double x = std::exp(y);
        const double base = (w == 0) ? std::expm1(-u * x) : std::pow(x, w) * std::exp(-u * x);
        return base * rho(x) * x;  // log-substitution Jacobian
    };
    // The transformed integrand decays like e^{(1+w-p) y} as y -> -inf for a
    // density with singularity x^{-1-p}, p < 1. Truncation at y = -340 keeps
    // the dropped mass below tolerance while x^{-1-p} stays representable.
    QuadratureResult near = integrate(log_integrand, -340.0, 0.0, opt);

    // Truncate where both the remaining measure mass and the exponential
    // factor are negligible; |base| <= max(1, x^w e^{-ux}) <= 1 once
    // u x >= w ln x, which holds for all tail points chosen here.
    double y_hi = 1.0;
    const double scale = 1e-15 * (1.0 + std::abs(near.value));
    while (y_hi < 700.0 && tail_mass(std::exp(y_hi)) * (1.0 + std::pow(std::exp(y_hi), w) *
                                                                  std::exp(-u * std::exp(y_hi))) >
                               scale)
        y_hi *= 1.5;
    QuadratureResult tail = integrate(log_integrand, 0.0, y_hi, opt);
    if (!near.converged && !tail.converged)
        throw NumericError("laplace exponent quadrature failed: " + near.diagnostic());
    return near.value + tail.value;
}

double tabulated_integral(const TabulatedDensity& t, double u, int w) {
    auto f = [&t, u, w](double x) {
        const double base = (w == 0) ? std::expm1(-u * x) : std::pow(x, w) * std::exp(-u * x);
        return base * pchip_eval(t.grid, t.values, x);
    };
    QuadratureOptions opt;
    opt.abs_tol = 1e-13;
    opt.rel_tol = 1e-11;
    QuadratureResult r = integrate(f, t.grid.front(), t.grid.back(), opt);
    if (!r.converged) throw NumericError("tabulated exponent quadrature failed: " + r.diagnostic());
    return r.value;
}

// d^w/du^w of int (e^{-ux}-1) nu(dx) for one measure component.
double component_term(const MeasureComponent& comp, double u, int w) {
    return std::visit(
        [u, w](const auto& c) -> double {
            using T = std::decay_t<decltype(c)>;
            if constexpr (std::is_same_v<T, Atoms>) {
                double s = 0.0;
                for (const auto& [x, m] : c.points) {
                    if (w == 0)
                        s += m * std::expm1(-u * x);
                    else if (w == 1)
                        s += -m * x * std::exp(-u * x);
                    else
                        s += m * x * x * std::exp(-u * x);
                }
                return s;
            } else if constexpr (std::is_same_v<T, StableDensity>) {
                const double a = c.alpha;
                if (w == 0) return -c.c * std::tgamma(1.0 - a) / a * std::pow(u, a);
                if (w == 1) return -c.c * std::tgamma(1.0 - a) * std::pow(u, a - 1.0);
                return c.c * std::tgamma(2.0 - a) * std::pow(u, a - 2.0);
            } else if constexpr (std::is_same_v<T, DensityWithTail>) {
                const double v = density_integral(c.density, c.tail_mass, u, w);
                return (w == 1) ? -v : v;
            } else {
                const double v = tabulated_integral(c, u, w);
                return (w == 1) ? -v : v;
            }
        },
        comp);
}

}  // namespace

std::string to_string(ExponentFamily f) {
    switch (f) {
        case ExponentFamily::drift: return "drift";
        case ExponentFamily::stable: return "stable";
        case ExponentFamily::compound_poisson: return "compound_poisson";
        case ExponentFamily::composite_sum: return "composite_sum";
        case ExponentFamily::numeric: return "numeric";
    }
    return "?";
}

LaplaceExponent::LaplaceExponent()
    : f_([](double) { return 0.0; }),
      d1_([](double) { return 0.0; }),
      d2_([](double) { return 0.0; }),
      family_(ExponentFamily::drift) {}

LaplaceExponent LaplaceExponent::from_function(Fn f, ExponentFamily family) {
    LaplaceExponent e;
    e.f_ = std::move(f);
    e.d1_ = nullptr;
    e.d2_ = nullptr;
    e.family_ = family;
    return e;
}

LaplaceExponent LaplaceExponent::with_derivatives(Fn f, Fn d1, Fn d2, ExponentFamily family) {
    LaplaceExponent e;
    e.f_ = std::move(f);
    e.d1_ = std::move(d1);
    e.d2_ = std::move(d2);
    e.family_ = family;
    return e;
}

LaplaceExponent LaplaceExponent::drift(double b) {
    return with_derivatives([b](double u) { return -b * u; }, [b](double) { return -b; },
                            [](double) { return 0.0; }, ExponentFamily::drift);
}

void require_subordinator(const LevyTriplet& spec) {
    if (spec.sigma2 != 0.0) throw DomainError("not a subordinator: Gaussian part present");
    if (spec.nu.has_negative_part()) throw DomainError("not a subordinator: negative jumps");
    if (!spec.fv_drift)
        throw DomainError("not a subordinator: jump part not certified finite variation");
    if (!(*spec.fv_drift >= 0.0)) throw DomainError("not a subordinator: negative drift");
}

double eval_laplace_exponent(const LevyTriplet& spec, double u) {
    if (!(u > 0.0)) throw DomainError("eval_laplace_exponent: u must be > 0");
    require_subordinator(spec);
    double psi = -(*spec.fv_drift) * u;
    for (const auto& comp : spec.nu.components()) psi += component_term(comp, u, 0);
    if (psi > 1e-10 * (1.0 + std::abs(psi)))
        throw NumericError("subordinator exponent evaluated positive: psi(" + std::to_string(u) +
                           ")=" + std::to_string(psi));
    return std::min(psi, 0.0);
}

LaplaceExponent LaplaceExponent::from_subordinator(const LevyTriplet& spec) {
    require_subordinator(spec);
    auto held = std::make_shared<const LevyTriplet>(spec);

    ExponentFamily family = ExponentFamily::composite_sum;
    const auto& comps = held->nu.components();
    if (comps.empty())
        family = ExponentFamily::drift;
    else if (comps.size() == 1 && std::holds_alternative<Atoms>(comps[0]))
        family = ExponentFamily::compound_poisson;
    else if (comps.size() == 1 && std::holds_alternative<StableDensity>(comps[0]) &&
             *held->fv_drift == 0.0)
        family = ExponentFamily::stable;

    auto f = [held](double u) { return eval_laplace_exponent(*held, u); };
    auto d1 = [held](double u) {
        double s = -(*held->fv_drift);
        for (const auto& comp : held->nu.components()) s += component_term(comp, u, 1);
        return s;
    };
    auto d2 = [held](double u) {
        double s = 0.0;
        for (const auto& comp : held->nu.components()) s += component_term(comp, u, 2);
        return s;
    };
    return with_derivatives(std::move(f), std::move(d1), std::move(d2), family);
}

double LaplaceExponent::value(double u) const { return f_(u); }

double LaplaceExponent::deriv1(double u) const {
    if (d1_) return d1_(u);
    const double h = u * std::pow(kEps, 1.0 / 3.0);
    return (f_(u + h) - f_(u - h)) / (2.0 * h);
}

double LaplaceExponent::deriv2(double u) const {
    if (d2_) return d2_(u);
    const double h = u * std::pow(kEps, 0.25);
    return (f_(u + h) - 2.0 * f_(u) + f_(u - h)) / (h * h);
}

}  // namespace expfunc

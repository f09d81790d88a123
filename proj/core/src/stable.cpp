#include "expfunc/stable.hpp"

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

LaplaceExponent power_sum_exponent(std::vector<PreimagePolynomialForm::Term> terms) {
    auto held = std::make_shared<const std::vector<PreimagePolynomialForm::Term>>(std::move(terms));
    return LaplaceExponent::with_derivatives(
        [held](double u) {
            double s = 0.0;
            for (const auto& t : *held) s -= t.coefficient * std::pow(u, t.exponent);
            return s;
        },
        [held](double u) {
            double s = 0.0;
            for (const auto& t : *held)
                s -= t.coefficient * t.exponent * std::pow(u, t.exponent - 1.0);
            return s;
        },
        [held](double u) {
            double s = 0.0;
            for (const auto& t : *held)
                s -= t.coefficient * t.exponent * (t.exponent - 1.0) * std::pow(u, t.exponent - 2.0);
            return s;
        },
        ExponentFamily::composite_sum);
}

// Levy density of -psi for a merged power form: S(x) = sum e_i x^{-1-gamma_i}
// over exponents < 1, with e_i = D_i gamma_i / Gamma(1 - gamma_i). Returns the
// drift (coefficient at exponent 1) separately.
struct DensityTerms {
    std::vector<double> gamma;
    std::vector<double> e;
    double drift = 0.0;
};

DensityTerms density_terms(const PreimagePolynomialForm& form) {
    DensityTerms out;
    for (const auto& t : form.terms) {
        if (std::abs(t.exponent - 1.0) <= 1e-12) {
            out.drift += t.coefficient;
        } else if (t.exponent < 1.0) {
            out.gamma.push_back(t.exponent);
            out.e.push_back(t.coefficient * t.exponent / std::tgamma(1.0 - t.exponent));
        } else {
            throw DomainError("power form has an exponent above 1; not a subordinator exponent");
        }
    }
    return out;
}

LevyTriplet triplet_from_form(const PreimagePolynomialForm& form) {
    DensityTerms dt = density_terms(form);
    LevyMeasure nu;
    bool all_nonneg = true;
    for (double e : dt.e)
        if (e < 0.0) all_nonneg = false;

    if (all_nonneg) {
        for (size_t i = 0; i < dt.e.size(); ++i)
            if (dt.e[i] > 0.0) nu.add(StableDensity{dt.gamma[i], dt.e[i], JumpSide::positive});
    } else {
        // Mixed-sign terms with a non-negative sum: one density component.
        auto gs = std::make_shared<const DensityTerms>(dt);
        DensityWithTail d;
        d.density = [gs](double r) {
            double s = 0.0;
            for (size_t i = 0; i < gs->e.size(); ++i)
                s += gs->e[i] * std::pow(r, -1.0 - gs->gamma[i]);
            return std::max(s, 0.0);
        };
        d.tail_mass = [gs](double r) {
            double s = 0.0;
            for (size_t i = 0; i < gs->e.size(); ++i)
                s += gs->e[i] / gs->gamma[i] * std::pow(r, -gs->gamma[i]);
            return std::max(s, 0.0);
        };
        double x2 = 0.0, x1 = 0.0;
        for (size_t i = 0; i < gs->e.size(); ++i) {
            x2 += gs->e[i] / (2.0 - gs->gamma[i]);
            x1 += gs->e[i] / (1.0 - gs->gamma[i]);
        }
        d.mass_x2_near1 = x2;
        d.abs_mass_near1 = x1;
        d.tail_abs_mean = kInf;
        d.total_mass = kInf;
        nu.add(std::move(d));
    }
    return LevyTriplet::from_fv_parts(dt.drift, 0.0, std::move(nu));
}

std::string fmt(double x) {
    std::ostringstream os;
    os << x;
    return os.str();
}

}  // namespace

void StableConvolutionSpec::validate() const {
    if (components.empty()) throw DomainError("stable convolution: no components");
    double prev = 0.0;
    for (const auto& comp : components) {
        if (!(comp.alpha > 0.0 && comp.alpha < 1.0))
            throw DomainError("stable convolution: alpha must lie in (0,1)");
        if (!(comp.alpha > prev))
            throw DomainError("stable convolution: alphas must increase strictly");
        if (!(comp.c > 0.0)) throw DomainError("stable convolution: c must be > 0");
        if (!(comp.drift >= 0.0)) throw DomainError("stable convolution: drift must be >= 0");
        prev = comp.alpha;
    }
}

StableConvolutionSpec StableConvolutionSpec::single(double alpha, double c, double drift) {
    StableConvolutionSpec s;
    s.components.push_back({alpha, c, drift});
    s.validate();
    return s;
}

double PreimagePolynomialForm::eval(double u) const {
    double s = 0.0;
    for (const auto& t : terms) s += t.coefficient * std::pow(u, t.exponent);
    return s;
}

PreimagePolynomialForm PreimagePolynomialForm::from_convolution(const StableConvolutionSpec& spec,
                                                                const BmDriftParams& bm) {
    spec.validate();
    bm.validate();
    const double s2 = bm.sigma * bm.sigma;
    std::vector<Term> raw;
    const auto& comps = spec.components;
    for (size_t i = 0; i < comps.size(); ++i) {
        const double ai = comps[i].alpha, ci = comps[i].c;
        const double g1 = std::tgamma(1.0 - ai);
        // u^alpha coefficient, written so the boundary case cancels in floating
        // point: (a - s2/2) c G(1-a) + (s2/2) c G(2-a).
        const double A = (bm.a - 0.5 * s2) * ci * g1 + 0.5 * s2 * ci * std::tgamma(2.0 - ai);
        raw.push_back({ai, A});
        for (size_t j = 0; j < i; ++j) {
            const double B = s2 * ci * comps[j].c * g1 * std::tgamma(1.0 - comps[j].alpha);
            raw.push_back({ai + comps[j].alpha, B});
        }
        raw.push_back({2.0 * ai, 0.5 * s2 * ci * ci * g1 * g1});
    }
    std::sort(raw.begin(), raw.end(),
              [](const Term& x, const Term& y) { return x.exponent < y.exponent; });

    PreimagePolynomialForm form;
    double scale = 0.0;
    for (const auto& t : raw) scale = std::max(scale, std::abs(t.coefficient));
    for (const auto& t : raw) {
        if (!form.terms.empty() && std::abs(form.terms.back().exponent - t.exponent) <= 1e-12) {
            form.terms.back().coefficient += t.coefficient;
        } else {
            form.terms.push_back(t);
        }
    }
    std::erase_if(form.terms,
                  [scale](const Term& t) { return std::abs(t.coefficient) <= 1e-14 * scale; });
    return form;
}

LaplaceExponent stable_exponent(double alpha, double c) {
    if (!(alpha > 0.0 && alpha < 1.0)) throw DomainError("stable_exponent: alpha must lie in (0,1)");
    if (!(c > 0.0)) throw DomainError("stable_exponent: c must be > 0");
    return power_sum_exponent({{alpha, c * std::tgamma(1.0 - alpha) / alpha}});
}

RangeVerdict stable_range_check(const StableConvolutionSpec& spec, const BmDriftParams& bm) {
    spec.validate();
    bm.validate();
    RangeVerdict out;

    for (const auto& comp : spec.components) {
        if (comp.drift > 0.0) {
            out.decision = Decision::reject;
            out.certificate = "stable component drift " + fmt(comp.drift) +
                              " > 0; every pre-image law has drift 0";
            return out;
        }
    }
    const double alpha1 = spec.components.front().alpha;
    const double alpha_n = spec.components.back().alpha;
    const double threshold = bm.theta();  // 2a/sigma^2

    if (alpha_n > 0.5) {
        out.decision = Decision::reject;
        out.certificate = "alpha_n=" + fmt(alpha_n) + " > 1/2";
        return out;
    }
    if (alpha1 > threshold) {
        out.decision = Decision::reject;
        out.certificate = "alpha_1=" + fmt(alpha1) + " > 2a/sigma^2=" + fmt(threshold);
        return out;
    }

    PreimagePolynomialForm form = PreimagePolynomialForm::from_convolution(spec, bm);

    if (alpha_n <= std::min(threshold, 0.5)) {
        out.decision = Decision::accept;
        out.psi_eta = power_sum_exponent(form.terms);
        out.eta_triplet = triplet_from_form(form);
        out.eta_drift = out.eta_triplet->fv_drift;
        out.eta_drift_converged = true;
        return out;
    }

    // Residual zone: alpha_1 <= 2a/sigma^2 < alpha_n <= 1/2. Exact Bernstein
    // characterization of the merged power form.
    if (form.terms.empty()) {
        out.decision = Decision::accept;
        out.psi_eta = LaplaceExponent();
        out.eta_triplet = LevyTriplet::deterministic_drift(0.0);
        out.eta_drift = 0.0;
        return out;
    }
    if (form.terms.back().coefficient < 0.0) {
        out.decision = Decision::reject;
        out.certificate = "leading power coefficient D_m < 0 at exponent " +
                          fmt(form.terms.back().exponent);
        return out;
    }

    DensityTerms dt = density_terms(form);
    if (!dt.e.empty()) {
        // Endpoint dominance: the largest exponent rules x -> 0, the smallest
        // rules x -> infinity.
        double scale = 0.0;
        for (double e : dt.e) scale = std::max(scale, std::abs(e));
        const double tol = 1e-12 * scale;
        if (dt.e.back() < -tol) {
            out.decision = Decision::reject;
            out.certificate = "pre-image Levy density negative as x -> 0 (coefficient " +
                              fmt(dt.e.back()) + " at exponent " + fmt(dt.gamma.back()) + ")";
            return out;
        }
        if (dt.e.front() < -tol) {
            out.decision = Decision::reject;
            out.certificate = "pre-image Levy density negative as x -> inf (coefficient " +
                              fmt(dt.e.front()) + " at exponent " + fmt(dt.gamma.front()) + ")";
            return out;
        }
        // Grid verification of S(x) = sum e_i x^{-1-gamma_i} >= 0.
        bool marginal = false;
        for (double x : log_spaced(1e-6, 1e6, 400)) {
            double s = 0.0, mag = 0.0;
            for (size_t i = 0; i < dt.e.size(); ++i) {
                const double term = dt.e[i] * std::pow(x, -1.0 - dt.gamma[i]);
                s += term;
                mag += std::abs(term);
            }
            if (s < -1e-9 * mag) {
                out.decision = Decision::reject;
                out.certificate = "pre-image Levy density negative at x=" + fmt(x);
                return out;
            }
            if (s < 1e-12 * mag) marginal = true;
        }
        if (marginal) {
            out.decision = Decision::inconclusive;
            out.certificate = "pre-image Levy density positivity is marginal on the test grid";
            return out;
        }
    }

    out.decision = Decision::accept;
    out.psi_eta = power_sum_exponent(form.terms);
    out.eta_triplet = triplet_from_form(form);
    out.eta_drift = out.eta_triplet->fv_drift;
    out.eta_drift_converged = true;
    return out;
}

LevyTriplet stable_preimage(double alpha, double c, const BmDriftParams& bm) {
    RangeVerdict verdict = stable_range_check(StableConvolutionSpec::single(alpha, c), bm);
    if (verdict.decision != Decision::accept)
        throw DomainError("stable_preimage: spec not accepted (" + verdict.certificate + ")");
    return *verdict.eta_triplet;
}

LaplaceExponent stable_mixture_exponent(const StableMixingMeasure& m) {
    std::vector<PreimagePolynomialForm::Term> terms;
    for (const auto& [alpha, mass] : m.atoms) {
        if (!(alpha > 0.0 && alpha < 1.0))
            throw DomainError("stable mixing measure: atom index must lie in (0,1)");
        if (!(mass > 0.0)) throw DomainError("stable mixing measure: atom mass must be > 0");
        terms.push_back({alpha, mass * std::tgamma(1.0 - alpha) / alpha});
    }
    return power_sum_exponent(std::move(terms));
}

bool is_half_stable_boundary(double a, double sigma) {
    if (!(a > 0.0 && sigma > 0.0)) throw DomainError("is_half_stable_boundary: need a, sigma > 0");
    const double theta = 2.0 * a / (sigma * sigma);
    return std::abs(theta - 0.5) <= 1e-12 * std::max(1.0, theta);
}

}  // namespace expfunc

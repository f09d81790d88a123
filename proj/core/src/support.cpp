#include "expfunc/support.hpp"

#include <cmath>
#include <limits>
#include <sstream>

#include "expfunc/errors.hpp"

namespace expfunc {

namespace {
constexpr double kInf = std::numeric_limits<double>::infinity();

SupportResult make_point(double x) { return {SupportKind::point, x, x}; }
SupportResult make_bounded(double lo, double hi) {
    return {SupportKind::closed_bounded_interval, lo, hi};
}
SupportResult make_right(double lo) { return {SupportKind::right_half_line, lo, kInf}; }
SupportResult make_left(double hi) { return {SupportKind::left_half_line, -kInf, hi}; }
SupportResult make_full() { return {SupportKind::full_line, -kInf, kInf}; }

void require_drift_to_infinity(const LevyTriplet& xi, DriftToInfinity drift) {
    auto mean = xi.mean();
    if (mean) {
        if (*mean == kInf) return;
        if (std::isfinite(*mean) && *mean > 0.0) return;
        throw DomainError("xi does not drift to +infinity: E[xi_1] <= 0");
    }
    if (drift == DriftToInfinity::verify)
        throw DomainError(
            "cannot verify that xi drifts to +infinity (mean undefined); pass asserted");
}

}  // namespace

bool SupportResult::contains(double x, double tol) const {
    return x >= lower - tol && x <= upper + tol;
}

std::string SupportResult::describe() const {
    std::ostringstream os;
    switch (kind) {
        case SupportKind::point: os << "{" << lower << "}"; break;
        case SupportKind::closed_bounded_interval: os << "[" << lower << ", " << upper << "]"; break;
        case SupportKind::right_half_line: os << "[" << lower << ", inf)"; break;
        case SupportKind::left_half_line: os << "(-inf, " << upper << "]"; break;
        case SupportKind::full_line: os << "R"; break;
    }
    return os.str();
}

void SupportResult::check_invariants() const {
    switch (kind) {
        case SupportKind::point:
            if (!(std::isfinite(lower) && lower == upper))
                throw DomainError("support: point must have equal finite endpoints");
            break;
        case SupportKind::closed_bounded_interval:
            if (!(std::isfinite(lower) && std::isfinite(upper) && lower < upper))
                throw DomainError("support: bounded interval must have lower < upper");
            break;
        case SupportKind::right_half_line:
            if (!(std::isfinite(lower) && upper == kInf))
                throw DomainError("support: right half-line endpoints malformed");
            break;
        case SupportKind::left_half_line:
            if (!(lower == -kInf && std::isfinite(upper)))
                throw DomainError("support: left half-line endpoints malformed");
            break;
        case SupportKind::full_line:
            if (!(lower == -kInf && upper == kInf))
                throw DomainError("support: full line endpoints malformed");
            break;
    }
}

ProcessShape shape_of(const LevyTriplet& t) {
    t.validate();
    ProcessShape s;
    s.nu_pos_mass = t.nu.has_positive_part();
    s.nu_neg_mass = t.nu.has_negative_part();

    auto abs_near0 = t.nu.abs_mass_near0();
    if (!abs_near0)
        throw InconclusiveShape(
            "shape_of: tabulated density lacks a certified small-jump variation status");
    s.finite_variation = (t.sigma2 == 0.0) && std::isfinite(*abs_near0);
    s.infinite_variation = !s.finite_variation;
    if (s.finite_variation) s.fv_drift = t.fv_drift;

    s.is_deterministic_drift = (t.sigma2 == 0.0) && t.nu.is_zero();
    s.is_subordinator = s.finite_variation && !s.nu_neg_mass && s.fv_drift && *s.fv_drift >= 0.0;
    return s;
}

SupportResult support_of_time_integral(const LevyTriplet& xi, DriftToInfinity drift) {
    require_drift_to_infinity(xi, drift);
    const ProcessShape s = shape_of(xi);

    if (s.is_deterministic_drift) {
        // drift-to-infinity check already enforced b > 0
        return make_point(1.0 / *s.fv_drift);
    }
    if (s.is_subordinator && *s.fv_drift > 0.0) return make_bounded(0.0, 1.0 / *s.fv_drift);
    if (s.finite_variation && s.fv_drift && *s.fv_drift > 0.0 && !s.nu_pos_mass)
        return make_right(1.0 / *s.fv_drift);
    return make_right(0.0);
}

SupportResult support_of_functional(const LevyTriplet& xi, const LevyTriplet& eta,
                                    DriftToInfinity drift) {
    const ProcessShape se = shape_of(eta);

    // Deterministic eta_t = a t: the time-integral support scaled by a.
    if (se.is_deterministic_drift) {
        const double a = *se.fv_drift;
        if (a == 0.0) return make_point(0.0);
        SupportResult base = support_of_time_integral(xi, drift);
        if (a > 0.0) {
            SupportResult r = base;
            r.lower = a * base.lower;
            r.upper = a * base.upper;
            return r;
        }
        // a < 0 flips the interval.
        switch (base.kind) {
            case SupportKind::point: return make_point(a * base.lower);
            case SupportKind::closed_bounded_interval:
                return make_bounded(a * base.upper, a * base.lower);
            case SupportKind::right_half_line: return make_left(a * base.lower);
            case SupportKind::left_half_line: return make_right(a * base.upper);
            case SupportKind::full_line: return make_full();
        }
    }

    require_drift_to_infinity(xi, drift);
    const ProcessShape sx = shape_of(xi);

    // eta of infinite variation, or jumps on both sides.
    if (se.infinite_variation || (se.nu_pos_mass && se.nu_neg_mass)) return make_full();

    const double a = *se.fv_drift;

    if (se.nu_pos_mass) {  // spectrally positive, finite variation
        const bool xi_fv_spec_neg =
            sx.finite_variation && sx.fv_drift && *sx.fv_drift > 0.0 && !sx.nu_pos_mass;
        if (a >= 0.0) return xi_fv_spec_neg ? make_right(a / *sx.fv_drift) : make_right(0.0);
        const bool xi_sub = sx.is_subordinator && *sx.fv_drift > 0.0;
        return xi_sub ? make_right(a / *sx.fv_drift) : make_full();
    }

    // spectrally negative eta, finite variation
    if (a > 0.0) {
        const bool xi_sub = sx.is_subordinator && sx.fv_drift && *sx.fv_drift > 0.0;
        return xi_sub ? make_left(a / *sx.fv_drift) : make_full();
    }
    const bool xi_fv_spec_neg =
        sx.finite_variation && sx.fv_drift && *sx.fv_drift > 0.0 && !sx.nu_pos_mass;
    return xi_fv_spec_neg ? make_left(a / *sx.fv_drift) : make_left(0.0);
}

bool is_nonnegative_functional(const LevyTriplet& eta) { return shape_of(eta).is_subordinator; }

}  // namespace expfunc

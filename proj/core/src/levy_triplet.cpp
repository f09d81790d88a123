#include "expfunc/levy_triplet.hpp"

#include <cmath>
#include <limits>

#include "expfunc/errors.hpp"

namespace expfunc {

namespace {
constexpr double kInf = std::numeric_limits<double>::infinity();
}

LevyTriplet LevyTriplet::deterministic_drift(double b) {
    LevyTriplet t;
    t.gamma = b;
    t.fv_drift = b;
    return t;
}

LevyTriplet LevyTriplet::brownian_with_drift(double a, double sigma) {
    if (!(sigma > 0.0)) throw DomainError("brownian_with_drift: sigma must be > 0");
    LevyTriplet t;
    t.gamma = a;
    t.sigma2 = sigma * sigma;
    t.fv_drift = std::nullopt;  // Gaussian part => infinite variation
    return t;
}

LevyTriplet LevyTriplet::compound_poisson(std::vector<std::pair<double, double>> atoms,
                                          double drift) {
    return from_fv_parts(drift, 0.0, LevyMeasure::atoms(std::move(atoms)));
}

LevyTriplet LevyTriplet::stable_subordinator(double alpha, double c, double drift) {
    if (!(alpha > 0.0 && alpha < 1.0))
        throw DomainError("stable_subordinator: alpha must lie in (0,1)");
    if (!(drift >= 0.0)) throw DomainError("stable_subordinator: drift must be >= 0");
    return from_fv_parts(drift, 0.0, LevyMeasure::stable(alpha, c, JumpSide::positive));
}

LevyTriplet LevyTriplet::from_fv_parts(double drift_b, double sigma2, LevyMeasure nu) {
    if (!(sigma2 >= 0.0)) throw DomainError("levy triplet: sigma2 must be >= 0");
    nu.validate();
    auto signed_near0 = nu.signed_mass_near0();
    if (!signed_near0 || !std::isfinite(*signed_near0))
        throw DomainError("from_fv_parts: jump part is not of finite variation near 0");
    LevyTriplet t;
    t.gamma = drift_b + *signed_near0;
    t.sigma2 = sigma2;
    t.nu = std::move(nu);
    t.fv_drift = (sigma2 == 0.0) ? std::optional<double>(drift_b) : std::nullopt;
    return t;
}

LevyTriplet LevyTriplet::from_gamma(double gamma, double sigma2, LevyMeasure nu) {
    if (!(sigma2 >= 0.0)) throw DomainError("levy triplet: sigma2 must be >= 0");
    nu.validate();
    LevyTriplet t;
    t.gamma = gamma;
    t.sigma2 = sigma2;
    auto signed_near0 = nu.signed_mass_near0();
    if (sigma2 == 0.0 && signed_near0 && std::isfinite(*signed_near0))
        t.fv_drift = gamma - *signed_near0;
    t.nu = std::move(nu);
    return t;
}

std::optional<double> LevyTriplet::mean() const {
    auto tail = nu.tail_mean();
    if (!tail) return std::nullopt;
    if (*tail == kInf || *tail == -kInf) return *tail;
    return gamma + *tail;
}

void LevyTriplet::validate() const {
    if (!(sigma2 >= 0.0)) throw DomainError("levy triplet: sigma2 must be >= 0");
    nu.validate();
    if (fv_drift) {
        auto abs_near0 = nu.abs_mass_near0();
        if (sigma2 != 0.0 || !abs_near0 || !std::isfinite(*abs_near0))
            throw DomainError("levy triplet: fv_drift present but process is not finite variation");
    }
}

}  // namespace expfunc

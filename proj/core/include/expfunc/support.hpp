#pragma once

#include <optional>
#include <string>

#include "expfunc/errors.hpp"
#include "expfunc/levy_triplet.hpp"

namespace expfunc {

enum class SupportKind { point, closed_bounded_interval, right_half_line, left_half_line, full_line };

/// Closed support interval of the law of the exponential functional. Finite
/// endpoints are closed; half-lines carry exactly one infinite endpoint.
struct SupportResult {
    SupportKind kind = SupportKind::full_line;
    double lower = 0.0;  // -inf on left half-lines / full line
    double upper = 0.0;  // +inf on right half-lines / full line

    bool contains(double x, double tol = 0.0) const;
    std::string describe() const;
    void check_invariants() const;  // throws DomainError on malformed intervals
};

/// Predicates the support classification branches on, all computed
/// analytically from the parametric measure (never by sampling).
struct ProcessShape {
    bool is_deterministic_drift = false;
    bool is_subordinator = false;
    bool finite_variation = false;
    std::optional<double> fv_drift;
    bool nu_pos_mass = false;
    bool nu_neg_mass = false;
    bool infinite_variation = false;
};

/// Throws InconclusiveShape (a DomainError subtype) when the measure cannot
/// certify its variation near 0 (uncertified tabulated density).
ProcessShape shape_of(const LevyTriplet& t);

class InconclusiveShape : public DomainError {
public:
    explicit InconclusiveShape(const std::string& what) : DomainError(what) {}
};

/// Whether the caller vouches for xi drifting to +infinity. Under `verify`,
/// a computable mean decides (finite mean <= 0 is a domain error, positive or
/// +inf passes); an undecidable mean is refused. A detectable violation is an
/// error even under `asserted`.
enum class DriftToInfinity { verify, asserted };

/// Support of L( integral_0^inf e^{-xi_s} ds ): the four-case table
/// { {1/b}, [0,1/b], [1/b,inf), [0,inf) }.
SupportResult support_of_time_integral(const LevyTriplet& xi,
                                       DriftToInfinity drift = DriftToInfinity::verify);

/// Support of L( integral_0^inf e^{-xi_{s-}} d eta_s ) for independent xi,
/// eta; almost-sure convergence of the integral is the caller's
/// responsibility. Deterministic eta delegates to the time-integral table
/// scaled by its drift.
SupportResult support_of_functional(const LevyTriplet& xi, const LevyTriplet& eta,
                                    DriftToInfinity drift = DriftToInfinity::verify);

/// V >= 0 a.s. if and only if eta is a subordinator.
bool is_nonnegative_functional(const LevyTriplet& eta);

}  // namespace expfunc

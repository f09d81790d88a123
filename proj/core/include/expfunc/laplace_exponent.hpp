#pragma once

#include <functional>
#include <string>

#include "expfunc/levy_triplet.hpp"

namespace expfunc {

enum class ExponentFamily { drift, stable, compound_poisson, composite_sum, numeric };

std::string to_string(ExponentFamily f);

/// An evaluatable Laplace exponent psi(u), u > 0 (sign convention
/// E[e^{-uX_1}] = e^{psi(u)}, so psi <= 0 for subordinators). Derivatives are
/// analytic where the family permits; otherwise central finite differences
/// with step h_n(u) = u * eps^(1/(n+2)).
class LaplaceExponent {
public:
    using Fn = std::function<double(double)>;

    LaplaceExponent();  // psi == 0

    static LaplaceExponent from_function(Fn f, ExponentFamily family = ExponentFamily::numeric);
    static LaplaceExponent with_derivatives(Fn f, Fn d1, Fn d2,
                                            ExponentFamily family = ExponentFamily::numeric);
    /// psi(u) = -b u.
    static LaplaceExponent drift(double b);
    /// Exponent of a subordinator triplet; closed form for drift / atoms /
    /// stable components, adaptive quadrature otherwise. Derivatives come from
    /// the differentiated integral representation, not finite differences.
    static LaplaceExponent from_subordinator(const LevyTriplet& spec);

    double value(double u) const;
    double deriv1(double u) const;
    double deriv2(double u) const;

    ExponentFamily family() const { return family_; }
    bool analytic_derivatives() const { return static_cast<bool>(d1_); }

private:
    Fn f_, d1_, d2_;
    ExponentFamily family_;
};

/// psi(u) = -b u + int (e^{-ux} - 1) nu(dx) for a subordinator triplet
/// (positive jump measure, zero Gaussian part, drift b >= 0) and u > 0.
/// Throws DomainError on non-subordinator input, NumericError when the
/// quadrature fails to converge.
double eval_laplace_exponent(const LevyTriplet& spec, double u);

/// Checks the subordinator shape used by eval_laplace_exponent; throws
/// DomainError with a description when violated.
void require_subordinator(const LevyTriplet& spec);

}  // namespace expfunc

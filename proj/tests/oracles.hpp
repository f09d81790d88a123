#pragma once

// Test-side oracles, independent of the library's numerical paths:
// modified Bessel K via Boost.Math, a plain composite-Simpson integrator,
// and reference constants computed with 30-digit arithmetic.

#include <boost/math/special_functions/bessel.hpp>
#include <cmath>
#include <functional>

namespace oracles {

inline double bessel_k(double nu, double x) { return boost::math::cyl_bessel_k(nu, x); }

/// Laplace transform of 1/Gamma_theta (Gamma variable with shape theta):
/// E[e^{-u / Gamma_theta}] = 2 u^{theta/2} K_theta(2 sqrt(u)) / Gamma(theta).
inline double inverse_gamma_laplace(double theta, double u) {
    return 2.0 * std::pow(u, 0.5 * theta) * bessel_k(theta, 2.0 * std::sqrt(u)) /
           std::tgamma(theta);
}

/// Composite Simpson on [a, b]; deliberately simple and separate from the
/// library quadrature.
inline double simpson(const std::function<double(double)>& f, double a, double b, int n = 2000) {
    if (n % 2 != 0) ++n;
    const double h = (b - a) / n;
    double s = f(a) + f(b);
    for (int i = 1; i < n; ++i) s += f(a + i * h) * (i % 2 == 1 ? 4.0 : 2.0);
    return s * h / 3.0;
}

// Reference values (30-digit computation, frozen).
constexpr double kGamma01 = 9.51350769866873183629;
constexpr double kGamma025 = 3.62560990822190831193;
constexpr double kGamma05 = 1.77245385090551602730;   // sqrt(pi)
constexpr double kGamma15 = 0.886226925452758013649;  // sqrt(pi)/2
constexpr double kGamma175 = 0.919062526848883233847;
constexpr double kGamma06 = 1.48919224881281710239;
constexpr double kTwoSqrtPi = 3.54490770181103205460;
constexpr double kDufresneL05 = 0.444342523632236041339;  // 2 sqrt(u) K1(2 sqrt(u)), u=0.5
constexpr double kDufresneL1 = 0.279731763633044854569;
constexpr double kDufresneL2 = 0.139667474015293142858;
constexpr double kStable04SecondCoeff = 0.193227536640197745701;  // 0.4 G(0.6)^2 / G(0.2)

}  // namespace oracles

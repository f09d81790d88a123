#pragma once

#include <functional>
#include <optional>
#include <utility>
#include <variant>
#include <vector>

namespace expfunc {

enum class JumpSide { positive, negative };

/// Finite collection of atoms (position != 0, mass > 0).
struct Atoms {
    std::vector<std::pair<double, double>> points;
};

/// Density c * |x|^(-1-alpha) on one side of the origin, alpha in (0, 2).
struct StableDensity {
    double alpha;
    double c;
    JumpSide side = JumpSide::positive;
};

/// General one-sided density with certified analytic companions. `density`
/// and `tail_mass` take the distance from the origin; the side determines
/// the sign of the support.
struct DensityWithTail {
    std::function<double(double)> density;    // rho(r), r > 0
    std::function<double(double)> tail_mass;  // nu({|x| > r}), r > 0
    double mass_x2_near1 = 0.0;               // int_{0<r<=1} r^2 rho(r) dr
    double abs_mass_near1 = 0.0;              // int_{0<r<=1} r rho(r) dr, may be +inf
    double tail_abs_mean = 0.0;               // int_{r>1} r rho(r) dr, may be +inf
    double total_mass = 0.0;                  // may be +inf
    JumpSide side = JumpSide::positive;
};

/// Density given by values on a strictly increasing (log-spaced) grid,
/// interpolated by a monotonicity-preserving piecewise cubic. The measure is
/// supported exactly on [grid.front(), grid.back()]; evaluation outside the
/// grid is an error (no extrapolation). `small_x_certified` records whether
/// the table is the complete measure near 0 (false when it truncates an
/// infinite-activity density, in which case variation queries refuse).
struct TabulatedDensity {
    std::vector<double> grid;
    std::vector<double> values;
    JumpSide side = JumpSide::positive;
    bool small_x_certified = true;
};

using MeasureComponent = std::variant<Atoms, StableDensity, DensityWithTail, TabulatedDensity>;

/// A Levy measure as a finite sum of parametric components; the empty sum is
/// the zero measure. Every component reports its tail mass, its mass near 0
/// and whether its total mass is finite, analytically per family.
class LevyMeasure {
public:
    LevyMeasure() = default;

    static LevyMeasure zero() { return LevyMeasure(); }
    static LevyMeasure atoms(std::vector<std::pair<double, double>> points);
    static LevyMeasure stable(double alpha, double c, JumpSide side = JumpSide::positive);
    static LevyMeasure density(DensityWithTail d);
    static LevyMeasure tabulated(TabulatedDensity t);

    /// Exponential density scale * rate * e^(-rate * r) on the positive side
    /// (total mass = scale).
    static LevyMeasure exponential_density(double scale, double rate);

    LevyMeasure& add(MeasureComponent c);
    LevyMeasure operator+(const LevyMeasure& other) const;

    bool is_zero() const { return components_.empty(); }
    const std::vector<MeasureComponent>& components() const { return components_; }

    // --- analytic queries ---------------------------------------------------
    double mass_beyond(double r) const;           // nu(R \ [-r, r]), r > 0
    double mass_x2_near0() const;                 // int_{|x|<=1} x^2 nu(dx)
    double total_mass() const;                    // may be +inf
    bool has_positive_part() const;               // nu((0, inf)) > 0
    bool has_negative_part() const;               // nu((-inf, 0)) > 0
    std::optional<double> abs_mass_near0() const; // int_{|x|<=1} |x| nu(dx); +inf allowed,
                                                  // nullopt when uncertified (tabulated)
    std::optional<double> signed_mass_near0() const;  // int_{|x|<=1} x nu(dx), finite-variation only
    /// int_{|x|>1} x nu(dx) in [-inf, +inf]; nullopt when both tails are infinite.
    std::optional<double> tail_mean() const;

    /// Density value at x != 0 (0 where no density component lives); atoms
    /// are excluded. Used by path generators and reporting.
    double density_at(double x) const;

    /// Validity: atom positions != 0, masses > 0, alpha in (0,2), c > 0,
    /// int min(1, x^2) nu(dx) < inf per family. Throws DomainError otherwise.
    void validate() const;

private:
    std::vector<MeasureComponent> components_;
};

/// Monotone piecewise-cubic interpolation (Fritsch-Carlson) through
/// (grid, values); used by TabulatedDensity. Throws DomainError outside
/// [grid.front(), grid.back()].
double pchip_eval(const std::vector<double>& grid, const std::vector<double>& values, double x);

}  // namespace expfunc

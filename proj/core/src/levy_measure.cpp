#include "expfunc/levy_measure.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "expfunc/errors.hpp"
#include "expfunc/quadrature.hpp"

namespace expfunc {

namespace {
constexpr double kInf = std::numeric_limits<double>::infinity();

double side_sign(JumpSide s) { return s == JumpSide::positive ? 1.0 : -1.0; }

// Slopes for Fritsch-Carlson monotone cubic interpolation.
std::vector<double> pchip_slopes(const std::vector<double>& x, const std::vector<double>& y) {
    const size_t n = x.size();
    std::vector<double> d(n, 0.0);
    if (n == 1) return d;
    std::vector<double> delta(n - 1);
    for (size_t i = 0; i + 1 < n; ++i) delta[i] = (y[i + 1] - y[i]) / (x[i + 1] - x[i]);
    d[0] = delta[0];
    d[n - 1] = delta[n - 2];
    for (size_t i = 1; i + 1 < n; ++i) {
        if (delta[i - 1] * delta[i] <= 0.0) {
            d[i] = 0.0;
        } else {
            const double w1 = 2.0 * (x[i + 1] - x[i]) + (x[i] - x[i - 1]);
            const double w2 = (x[i + 1] - x[i]) + 2.0 * (x[i] - x[i - 1]);
            d[i] = (w1 + w2) / (w1 / delta[i - 1] + w2 / delta[i]);
        }
    }
    return d;
}

double tab_integral(const TabulatedDensity& t, const std::function<double(double)>& w, double lo,
                    double hi) {
    lo = std::max(lo, t.grid.front());
    hi = std::min(hi, t.grid.back());
    if (lo >= hi) return 0.0;
    auto f = [&](double r) { return w(r) * pchip_eval(t.grid, t.values, r); };
    return integrate(f, lo, hi).value;
}

}  // namespace

double pchip_eval(const std::vector<double>& grid, const std::vector<double>& values, double x) {
    if (grid.size() != values.size() || grid.size() < 2)
        throw DomainError("tabulated density: need >= 2 grid points");
    if (x < grid.front() || x > grid.back())
        throw DomainError("tabulated density: evaluation outside the grid (no extrapolation)");
    const std::vector<double> slopes = pchip_slopes(grid, values);
    auto it = std::upper_bound(grid.begin(), grid.end(), x);
    size_t i = (it == grid.begin()) ? 0 : static_cast<size_t>(it - grid.begin()) - 1;
    if (i + 1 >= grid.size()) i = grid.size() - 2;
    const double h = grid[i + 1] - grid[i];
    const double s = (x - grid[i]) / h;
    const double h00 = (1 + 2 * s) * (1 - s) * (1 - s);
    const double h10 = s * (1 - s) * (1 - s);
    const double h01 = s * s * (3 - 2 * s);
    const double h11 = s * s * (s - 1);
    return h00 * values[i] + h10 * h * slopes[i] + h01 * values[i + 1] + h11 * h * slopes[i + 1];
}

LevyMeasure LevyMeasure::atoms(std::vector<std::pair<double, double>> points) {
    LevyMeasure m;
    if (!points.empty()) m.add(Atoms{std::move(points)});
    m.validate();
    return m;
}

LevyMeasure LevyMeasure::stable(double alpha, double c, JumpSide side) {
    LevyMeasure m;
    m.add(StableDensity{alpha, c, side});
    m.validate();
    return m;
}

LevyMeasure LevyMeasure::density(DensityWithTail d) {
    LevyMeasure m;
    m.add(std::move(d));
    m.validate();
    return m;
}

LevyMeasure LevyMeasure::tabulated(TabulatedDensity t) {
    LevyMeasure m;
    m.add(std::move(t));
    m.validate();
    return m;
}

LevyMeasure LevyMeasure::exponential_density(double scale, double rate) {
    if (scale <= 0.0 || rate <= 0.0)
        throw DomainError("exponential_density: scale and rate must be positive");
    DensityWithTail d;
    d.density = [scale, rate](double r) { return scale * rate * std::exp(-rate * r); };
    d.tail_mass = [scale, rate](double r) { return scale * std::exp(-rate * r); };
    // int_0^1 r^2 s k e^{-kr} dr and int_0^1 r s k e^{-kr} dr, closed forms.
    const double e = std::exp(-rate);
    d.mass_x2_near1 = scale * (2.0 / (rate * rate) - e * (1.0 + 2.0 / rate + 2.0 / (rate * rate)));
    d.abs_mass_near1 = scale * (1.0 / rate - e * (1.0 + 1.0 / rate));
    d.tail_abs_mean = scale * e * (1.0 + 1.0 / rate);
    d.total_mass = scale;
    d.side = JumpSide::positive;
    return density(std::move(d));
}

LevyMeasure& LevyMeasure::add(MeasureComponent c) {
    components_.push_back(std::move(c));
    return *this;
}

LevyMeasure LevyMeasure::operator+(const LevyMeasure& other) const {
    LevyMeasure m = *this;
    for (const auto& c : other.components_) m.components_.push_back(c);
    return m;
}

void LevyMeasure::validate() const {
    for (const auto& comp : components_) {
        std::visit(
            [](const auto& c) {
                using T = std::decay_t<decltype(c)>;
                if constexpr (std::is_same_v<T, Atoms>) {
                    for (const auto& [x, mass] : c.points) {
                        if (x == 0.0) throw DomainError("levy measure: atom at 0");
                        if (!(mass > 0.0)) throw DomainError("levy measure: atom mass must be > 0");
                    }
                } else if constexpr (std::is_same_v<T, StableDensity>) {
                    if (!(c.alpha > 0.0 && c.alpha < 2.0))
                        throw DomainError("levy measure: stable alpha must lie in (0,2)");
                    if (!(c.c > 0.0)) throw DomainError("levy measure: stable c must be > 0");
                } else if constexpr (std::is_same_v<T, DensityWithTail>) {
                    if (!c.density || !c.tail_mass)
                        throw DomainError("levy measure: density component needs density and tail_mass");
                    if (!(c.mass_x2_near1 >= 0.0) || !std::isfinite(c.mass_x2_near1))
                        throw DomainError("levy measure: int x^2 near 0 must be finite");
                } else if constexpr (std::is_same_v<T, TabulatedDensity>) {
                    if (c.grid.size() < 2 || c.grid.size() != c.values.size())
                        throw DomainError("levy measure: tabulated grid/value size mismatch");
                    if (c.grid.front() <= 0.0)
                        throw DomainError("levy measure: tabulated grid must start above 0");
                    for (size_t i = 0; i + 1 < c.grid.size(); ++i)
                        if (!(c.grid[i] < c.grid[i + 1]))
                            throw DomainError("levy measure: tabulated grid must increase strictly");
                    for (double v : c.values)
                        if (!(v >= 0.0)) throw DomainError("levy measure: tabulated density must be >= 0");
                }
            },
            comp);
    }
}

double LevyMeasure::mass_beyond(double r) const {
    if (!(r > 0.0)) throw DomainError("mass_beyond: r must be > 0");
    double total = 0.0;
    for (const auto& comp : components_) {
        std::visit(
            [&](const auto& c) {
                using T = std::decay_t<decltype(c)>;
                if constexpr (std::is_same_v<T, Atoms>) {
                    for (const auto& [x, mass] : c.points)
                        if (std::abs(x) > r) total += mass;
                } else if constexpr (std::is_same_v<T, StableDensity>) {
                    total += c.c * std::pow(r, -c.alpha) / c.alpha;
                } else if constexpr (std::is_same_v<T, DensityWithTail>) {
                    total += c.tail_mass(r);
                } else if constexpr (std::is_same_v<T, TabulatedDensity>) {
                    total += tab_integral(c, [](double) { return 1.0; }, r, kInf);
                }
            },
            comp);
    }
    return total;
}

double LevyMeasure::mass_x2_near0() const {
    double total = 0.0;
    for (const auto& comp : components_) {
        std::visit(
            [&](const auto& c) {
                using T = std::decay_t<decltype(c)>;
                if constexpr (std::is_same_v<T, Atoms>) {
                    for (const auto& [x, mass] : c.points)
                        if (std::abs(x) <= 1.0) total += x * x * mass;
                } else if constexpr (std::is_same_v<T, StableDensity>) {
                    total += c.c / (2.0 - c.alpha);
                } else if constexpr (std::is_same_v<T, DensityWithTail>) {
                    total += c.mass_x2_near1;
                } else if constexpr (std::is_same_v<T, TabulatedDensity>) {
                    total += tab_integral(c, [](double r) { return r * r; }, 0.0, 1.0);
                }
            },
            comp);
    }
    return total;
}

double LevyMeasure::total_mass() const {
    double total = 0.0;
    for (const auto& comp : components_) {
        std::visit(
            [&](const auto& c) {
                using T = std::decay_t<decltype(c)>;
                if constexpr (std::is_same_v<T, Atoms>) {
                    for (const auto& [x, mass] : c.points) {
                        (void)x;
                        total += mass;
                    }
                } else if constexpr (std::is_same_v<T, StableDensity>) {
                    total = kInf;
                } else if constexpr (std::is_same_v<T, DensityWithTail>) {
                    total += c.total_mass;
                } else if constexpr (std::is_same_v<T, TabulatedDensity>) {
                    total += tab_integral(c, [](double) { return 1.0; }, 0.0, kInf);
                }
            },
            comp);
        if (total == kInf) return kInf;
    }
    return total;
}

bool LevyMeasure::has_positive_part() const {
    for (const auto& comp : components_) {
        bool hit = std::visit(
            [](const auto& c) {
                using T = std::decay_t<decltype(c)>;
                if constexpr (std::is_same_v<T, Atoms>) {
                    for (const auto& [x, mass] : c.points) {
                        (void)mass;
                        if (x > 0.0) return true;
                    }
                    return false;
                } else {
                    return c.side == JumpSide::positive;
                }
            },
            comp);
        if (hit) return true;
    }
    return false;
}

bool LevyMeasure::has_negative_part() const {
    for (const auto& comp : components_) {
        bool hit = std::visit(
            [](const auto& c) {
                using T = std::decay_t<decltype(c)>;
                if constexpr (std::is_same_v<T, Atoms>) {
                    for (const auto& [x, mass] : c.points) {
                        (void)mass;
                        if (x < 0.0) return true;
                    }
                    return false;
                } else {
                    return c.side == JumpSide::negative;
                }
            },
            comp);
        if (hit) return true;
    }
    return false;
}

std::optional<double> LevyMeasure::abs_mass_near0() const {
    double total = 0.0;
    for (const auto& comp : components_) {
        std::optional<double> part = std::visit(
            [](const auto& c) -> std::optional<double> {
                using T = std::decay_t<decltype(c)>;
                if constexpr (std::is_same_v<T, Atoms>) {
                    double s = 0.0;
                    for (const auto& [x, mass] : c.points)
                        if (std::abs(x) <= 1.0) s += std::abs(x) * mass;
                    return s;
                } else if constexpr (std::is_same_v<T, StableDensity>) {
                    return c.alpha < 1.0 ? c.c / (1.0 - c.alpha) : kInf;
                } else if constexpr (std::is_same_v<T, DensityWithTail>) {
                    return c.abs_mass_near1;
                } else if constexpr (std::is_same_v<T, TabulatedDensity>) {
                    if (!c.small_x_certified) return std::nullopt;
                    return tab_integral(c, [](double r) { return r; }, 0.0, 1.0);
                }
            },
            comp);
        if (!part) return std::nullopt;
        total += *part;
        if (total == kInf) return kInf;
    }
    return total;
}

std::optional<double> LevyMeasure::signed_mass_near0() const {
    auto abs_mass = abs_mass_near0();
    if (!abs_mass) return std::nullopt;
    if (*abs_mass == kInf) return kInf;  // caller must treat as undefined sign
    double total = 0.0;
    for (const auto& comp : components_) {
        std::visit(
            [&](const auto& c) {
                using T = std::decay_t<decltype(c)>;
                if constexpr (std::is_same_v<T, Atoms>) {
                    for (const auto& [x, mass] : c.points)
                        if (std::abs(x) <= 1.0) total += x * mass;
                } else if constexpr (std::is_same_v<T, StableDensity>) {
                    total += side_sign(c.side) * c.c / (1.0 - c.alpha);
                } else if constexpr (std::is_same_v<T, DensityWithTail>) {
                    total += side_sign(c.side) * c.abs_mass_near1;
                } else if constexpr (std::is_same_v<T, TabulatedDensity>) {
                    total += side_sign(c.side) * tab_integral(c, [](double r) { return r; }, 0.0, 1.0);
                }
            },
            comp);
    }
    return total;
}

std::optional<double> LevyMeasure::tail_mean() const {
    double pos = 0.0, neg = 0.0;
    for (const auto& comp : components_) {
        std::visit(
            [&](const auto& c) {
                using T = std::decay_t<decltype(c)>;
                if constexpr (std::is_same_v<T, Atoms>) {
                    for (const auto& [x, mass] : c.points) {
                        if (x > 1.0) pos += x * mass;
                        if (x < -1.0) neg += -x * mass;
                    }
                } else if constexpr (std::is_same_v<T, StableDensity>) {
                    const double m = c.alpha > 1.0 ? c.c / (c.alpha - 1.0) : kInf;
                    (c.side == JumpSide::positive ? pos : neg) += m;
                } else if constexpr (std::is_same_v<T, DensityWithTail>) {
                    (c.side == JumpSide::positive ? pos : neg) += c.tail_abs_mean;
                } else if constexpr (std::is_same_v<T, TabulatedDensity>) {
                    const double m = tab_integral(c, [](double r) { return r; }, 1.0, kInf);
                    (c.side == JumpSide::positive ? pos : neg) += m;
                }
            },
            comp);
    }
    if (pos == kInf && neg == kInf) return std::nullopt;
    return pos - neg;
}

double LevyMeasure::density_at(double x) const {
    if (x == 0.0) throw DomainError("density_at: x must be != 0");
    const double r = std::abs(x);
    const JumpSide side = x > 0.0 ? JumpSide::positive : JumpSide::negative;
    double total = 0.0;
    for (const auto& comp : components_) {
        std::visit(
            [&](const auto& c) {
                using T = std::decay_t<decltype(c)>;
                if constexpr (std::is_same_v<T, Atoms>) {
                    // atoms carry no density
                } else if constexpr (std::is_same_v<T, StableDensity>) {
                    if (c.side == side) total += c.c * std::pow(r, -1.0 - c.alpha);
                } else if constexpr (std::is_same_v<T, DensityWithTail>) {
                    if (c.side == side) total += c.density(r);
                } else if constexpr (std::is_same_v<T, TabulatedDensity>) {
                    if (c.side == side && r >= c.grid.front() && r <= c.grid.back())
                        total += pchip_eval(c.grid, c.values, r);
                }
            },
            comp);
    }
    return total;
}

}  // namespace expfunc

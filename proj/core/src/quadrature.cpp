#include "expfunc/quadrature.hpp"

#include <algorithm>
#include <cmath>
#include <queue>
#include <sstream>

#include "expfunc/errors.hpp"

namespace expfunc {

std::string QuadratureResult::diagnostic() const {
    std::ostringstream os;
    os << "value=" << value << " err=" << error << (converged ? " (converged)" : " (NOT converged)")
       << " worst=[" << worst_lo << "," << worst_hi << "]";
    return os.str();
}

namespace {

// Gauss 7 / Kronrod 15 nodes and weights on [-1, 1].
// abscissa, Gauss weight (0 where the node is Kronrod-only), Kronrod weight.
constexpr double kNW[8][3] = {
    {0.000000000000000, 0.417959183673469, 0.209482141084728},
    {0.405845151377397, 0.381830050505119, 0.190350578064785},
    {0.741531185599394, 0.279705391489277, 0.140653259715525},
    {0.949107912342759, 0.129484966168870, 0.063092092629979},
    {0.207784955007898, 0.0, 0.204432940075298},
    {0.586087235467691, 0.0, 0.169004726639267},
    {0.864864423359769, 0.0, 0.104790010322250},
    {0.991455371120813, 0.0, 0.022935322010529},
};

struct Panel {
    double lo, hi, value, err;
    bool operator<(const Panel& o) const { return err < o.err; }
};

Panel eval_panel(const std::function<double(double)>& f, double lo, double hi) {
    const double mid = 0.5 * (lo + hi);
    const double half = 0.5 * (hi - lo);

    double y0 = f(mid);
    double g7 = kNW[0][1] * y0;
    double k15 = kNW[0][2] * y0;
    for (int i = 1; i < 8; ++i) {
        const double dx = half * kNW[i][0];
        const double yi = f(mid + dx) + f(mid - dx);
        g7 += kNW[i][1] * yi;
        k15 += kNW[i][2] * yi;
    }
    g7 *= half;
    k15 *= half;

    double err = std::abs(k15 - g7);
    // Standard QUADPACK-style sharpening of the raw G-K difference.
    err = 200.0 * err * std::sqrt(std::max(err, 0.0));
    if (!std::isfinite(err)) err = std::abs(k15 - g7);
    return {lo, hi, k15, err};
}

}  // namespace

QuadratureResult integrate(const std::function<double(double)>& f, double a, double b,
                           const QuadratureOptions& opt) {
    QuadratureResult res;
    if (a == b) {
        res.converged = true;
        return res;
    }
    double sign = 1.0;
    if (a > b) {
        std::swap(a, b);
        sign = -1.0;
    }

    std::priority_queue<Panel> heap;
    Panel root = eval_panel(f, a, b);
    if (!std::isfinite(root.value)) {
        throw NumericError("quadrature: non-finite integrand on [" + std::to_string(a) + "," +
                           std::to_string(b) + "]");
    }
    heap.push(root);
    double total = root.value;
    double total_err = root.err;
    int n = 1;

    while (total_err > std::max(opt.abs_tol, opt.rel_tol * std::abs(total)) &&
           n < opt.max_intervals) {
        Panel worst = heap.top();
        heap.pop();
        const double mid = 0.5 * (worst.lo + worst.hi);
        if (mid <= worst.lo || mid >= worst.hi) {
            // Interval no longer splittable in double precision.
            heap.push(worst);
            break;
        }
        Panel left = eval_panel(f, worst.lo, mid);
        Panel right = eval_panel(f, mid, worst.hi);
        if (!std::isfinite(left.value) || !std::isfinite(right.value)) {
            throw NumericError("quadrature: non-finite integrand near x=" + std::to_string(mid));
        }
        total += left.value + right.value - worst.value;
        total_err += left.err + right.err - worst.err;
        heap.push(left);
        heap.push(right);
        ++n;
    }

    res.value = sign * total;
    res.error = total_err;
    res.converged = total_err <= std::max(opt.abs_tol, opt.rel_tol * std::abs(total));
    if (!heap.empty()) {
        res.worst_lo = heap.top().lo;
        res.worst_hi = heap.top().hi;
    }
    return res;
}

QuadratureResult integrate_to_infinity(const std::function<double(double)>& f, double a,
                                       const QuadratureOptions& opt) {
    // x = a + t/(1-t), dx = dt/(1-t)^2.
    auto g = [&f, a](double t) {
        const double om = 1.0 - t;
        const double x = a + t / om;
        const double w = 1.0 / (om * om);
        double v = f(x) * w;
        return std::isfinite(v) ? v : 0.0;
    };
    return integrate(g, 0.0, 1.0, opt);
}

QuadratureResult integrate_from_zero(const std::function<double(double)>& f, double b,
                                     double sing_C, double sing_p, const QuadratureOptions& opt) {
    if (sing_p >= 1.0) throw DomainError("integrate_from_zero: singularity order must be < 1");
    // x = e^y: integral over (0,b] becomes int_{-inf}^{ln b} f(e^y) e^y dy with
    // transformed integrand bounded by C e^{(1-p) y}. Truncate where the tail
    // bound drops below abs_tol.
    const double q = 1.0 - sing_p;
    double y_lo = -700.0;
    if (sing_C > 0.0) {
        const double target = std::max(opt.abs_tol * 0.1, 1e-300);
        y_lo = std::log(target * q / sing_C) / q;
        y_lo = std::max(y_lo, -700.0);
    }
    const double y_hi = std::log(b);
    if (y_lo >= y_hi) return integrate(f, 0.0, b, opt);
    auto g = [&f](double y) {
        const double x = std::exp(y);
        return f(x) * x;
    };
    QuadratureResult r = integrate(g, y_lo, y_hi, opt);
    r.error += (sing_C > 0.0) ? sing_C * std::exp(q * y_lo) / q : 0.0;
    return r;
}

std::vector<double> log_spaced(double lo, double hi, int n) {
    std::vector<double> g(static_cast<size_t>(n));
    const double llo = std::log(lo), lhi = std::log(hi);
    for (int i = 0; i < n; ++i)
        g[static_cast<size_t>(i)] = std::exp(llo + (lhi - llo) * i / (n - 1));
    return g;
}

std::vector<double> lin_spaced(double lo, double hi, int n) {
    std::vector<double> g(static_cast<size_t>(n));
    if (n == 1) {
        g[0] = lo;
        return g;
    }
    for (int i = 0; i < n; ++i) g[static_cast<size_t>(i)] = lo + (hi - lo) * i / (n - 1);
    return g;
}

}  // namespace expfunc

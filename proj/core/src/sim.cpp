#include "expfunc/sim.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <thread>

#include "expfunc/errors.hpp"
#include "expfunc/quadrature.hpp"
#include "expfunc/rng.hpp"

namespace expfunc {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

// Path-generator form of one process: linear drift + Gaussian part +
// compound-Poisson components (exact jump times) + stable-subordinator
// components (exact jumps above the cutoff, mean drift below it) +
// finite-activity tabulated densities (inverse-CDF sizes).
struct CompiledCp {
    double rate = 0.0;
    std::vector<double> cum_prob;  // cumulative selection probabilities
    std::vector<double> size;      // signed jump sizes
};

struct CompiledTabulated {
    double rate = 0.0;
    double sign = 1.0;
    std::vector<double> grid;  // jump magnitudes
    std::vector<double> cdf;   // cumulative probability at each grid point
};

struct CompiledStable {
    double rate = 0.0;   // arrivals of jumps above eps
    double eps = 0.0;
    double alpha = 0.0;
    double sign = 1.0;
};

struct CompiledProcess {
    double drift = 0.0;  // includes small-jump compensation of stable parts
    double sigma = 0.0;
    std::vector<CompiledCp> cp;
    std::vector<CompiledStable> stable;
    std::vector<CompiledTabulated> tabulated;
    double unit_scale = 0.0;  // documented surrogate for E|d eta| per unit time

    int jump_components() const {
        return static_cast<int>(cp.size() + stable.size() + tabulated.size());
    }
};

CompiledProcess compile_process(const LevyTriplet& t, double eps, const char* role) {
    CompiledProcess out;
    out.sigma = std::sqrt(t.sigma2);
    if (t.fv_drift) {
        out.drift = *t.fv_drift;
    } else {
        auto near0 = t.nu.signed_mass_near0();
        if (near0 && std::isfinite(*near0))
            out.drift = t.gamma - *near0;
        else
            throw DomainError(std::string(role) +
                              ": infinite-variation jump part unsupported by the path generator");
    }
    out.unit_scale = std::abs(out.drift);

    for (const auto& comp : t.nu.components()) {
        std::visit(
            [&](const auto& c) {
                using T = std::decay_t<decltype(c)>;
                if constexpr (std::is_same_v<T, Atoms>) {
                    CompiledCp cp;
                    double total = 0.0;
                    for (const auto& [x, m] : c.points) total += m;
                    cp.rate = total;
                    double acc = 0.0;
                    for (const auto& [x, m] : c.points) {
                        acc += m / total;
                        cp.cum_prob.push_back(acc);
                        cp.size.push_back(x);
                        out.unit_scale += m * std::abs(x);
                    }
                    cp.cum_prob.back() = 1.0;
                    out.cp.push_back(std::move(cp));
                } else if constexpr (std::is_same_v<T, StableDensity>) {
                    if (!(c.alpha < 1.0))
                        throw DomainError(std::string(role) +
                                          ": stable component with alpha >= 1 unsupported");
                    if (!(eps > 0.0))
                        throw DomainError(std::string(role) +
                                          ": small_jump_cutoff required for infinite-activity "
                                          "stable components");
                    CompiledStable sc;
                    sc.alpha = c.alpha;
                    sc.eps = eps;
                    sc.rate = c.c * std::pow(eps, -c.alpha) / c.alpha;
                    sc.sign = c.side == JumpSide::positive ? 1.0 : -1.0;
                    // Mean of the removed small jumps becomes drift.
                    out.drift += sc.sign * c.c * std::pow(eps, 1.0 - c.alpha) / (1.0 - c.alpha);
                    // Surrogate mass rate: mean of jumps in (eps, 1] plus the
                    // count rate of jumps above 1 (their mean is infinite).
                    out.unit_scale += c.c * (1.0 - std::pow(eps, 1.0 - c.alpha)) / (1.0 - c.alpha) +
                                      c.c / c.alpha;
                    out.stable.push_back(sc);
                } else if constexpr (std::is_same_v<T, TabulatedDensity>) {
                    // finite-activity measure: exact jump times, sizes by
                    // inverse CDF through the interpolated density
                    CompiledTabulated tc;
                    tc.sign = c.side == JumpSide::positive ? 1.0 : -1.0;
                    tc.grid = c.grid;
                    tc.cdf.assign(c.grid.size(), 0.0);
                    double acc = 0.0;
                    for (size_t i = 0; i + 1 < c.grid.size(); ++i) {
                        auto rho = [&c](double r) { return pchip_eval(c.grid, c.values, r); };
                        acc += integrate(rho, c.grid[i], c.grid[i + 1]).value;
                        tc.cdf[i + 1] = acc;
                    }
                    if (!(acc > 0.0))
                        throw DomainError(std::string(role) + ": tabulated measure has no mass");
                    tc.rate = acc;
                    double mean_abs = 0.0;
                    for (size_t i = 0; i + 1 < c.grid.size(); ++i) {
                        auto rho = [&c](double r) {
                            return r * pchip_eval(c.grid, c.values, r);
                        };
                        mean_abs += integrate(rho, c.grid[i], c.grid[i + 1]).value;
                    }
                    out.unit_scale += mean_abs;
                    for (double& p : tc.cdf) p /= acc;
                    tc.cdf.back() = 1.0;
                    out.tabulated.push_back(std::move(tc));
                } else {
                    throw DomainError(std::string(role) +
                                      ": measure variant unsupported by the path generator");
                }
            },
            comp);
    }
    out.unit_scale += out.sigma;
    return out;
}

// Jump-arrival bookkeeping for up to kMaxComps components across xi and eta.
constexpr int kMaxComps = 8;

struct PathOutput {
    double integral = 0.0;
    double xi_end = 0.0;
};

// Simulates int_0^T e^{-w_sign * xi_{s-}} d eta_s with left-point weights on
// the step grid and exact jump times for both processes' jump components.
// Draw order per path is fixed: per step eta-Gaussian, then events in time
// order, then xi-Gaussian.
PathOutput run_path(const CompiledProcess& X, const CompiledProcess& E, double T, double dt,
                    double w_sign, Xoshiro256& rng) {
    const int64_t n_steps = static_cast<int64_t>(std::llround(T / dt));
    const int n_xi = X.jump_components();
    const int n_total = n_xi + E.jump_components();
    if (n_total > kMaxComps) throw DomainError("path generator: too many jump components");

    // kind encoding: j >= 0 -> cp[j]; kTabBase + j -> tabulated[j];
    // ~j (negative) -> stable[j].
    constexpr int kTabBase = 1 << 16;
    double next_time[kMaxComps];
    double rates[kMaxComps];
    int kind[kMaxComps];
    const CompiledProcess* owner[kMaxComps];
    {
        int idx = 0;
        for (const CompiledProcess* proc : {&X, &E}) {
            for (size_t j = 0; j < proc->cp.size(); ++j, ++idx) {
                rates[idx] = proc->cp[j].rate;
                kind[idx] = static_cast<int>(j);
                owner[idx] = proc;
            }
            for (size_t j = 0; j < proc->stable.size(); ++j, ++idx) {
                rates[idx] = proc->stable[j].rate;
                kind[idx] = ~static_cast<int>(j);
                owner[idx] = proc;
            }
            for (size_t j = 0; j < proc->tabulated.size(); ++j, ++idx) {
                rates[idx] = proc->tabulated[j].rate;
                kind[idx] = kTabBase + static_cast<int>(j);
                owner[idx] = proc;
            }
        }
        for (int i = 0; i < n_total; ++i) next_time[i] = rng.next_exponential() / rates[i];
    }

    auto draw_size = [&rng](const CompiledProcess* proc, int k) {
        if (k >= kTabBase) {
            const CompiledTabulated& tc = proc->tabulated[static_cast<size_t>(k - kTabBase)];
            const double v = rng.next_uniform();
            size_t j = 1;
            while (j + 1 < tc.cdf.size() && v > tc.cdf[j]) ++j;
            const double p0 = tc.cdf[j - 1], p1 = tc.cdf[j];
            const double w = p1 > p0 ? (v - p0) / (p1 - p0) : 0.5;
            return tc.sign * (tc.grid[j - 1] + w * (tc.grid[j] - tc.grid[j - 1]));
        }
        if (k >= 0) {
            const CompiledCp& cp = proc->cp[static_cast<size_t>(k)];
            const double v = rng.next_uniform();
            size_t j = 0;
            while (j + 1 < cp.cum_prob.size() && v > cp.cum_prob[j]) ++j;
            return cp.size[j];
        }
        const CompiledStable& sc = proc->stable[static_cast<size_t>(~k)];
        return sc.sign * rng.next_pareto(sc.eps, sc.alpha);
    };

    const double sqdt = std::sqrt(dt);
    const double x_drift_dt = X.drift * dt;
    const double e_drift_dt = E.drift * dt;
    const bool x_gauss = X.sigma > 0.0;
    const bool e_gauss = E.sigma > 0.0;

    double xi = 0.0, V = 0.0;
    for (int64_t k = 0; k < n_steps; ++k) {
        const double w = std::exp(-w_sign * xi);
        double deta = e_drift_dt;
        if (e_gauss) deta += E.sigma * sqdt * rng.next_normal();
        V += w * deta;

        if (n_total > 0) {
            const double t_hi = static_cast<double>(k + 1) * dt;
            double xi_jumps = 0.0;
            for (;;) {
                int best = -1;
                double best_t = t_hi;
                for (int i = 0; i < n_total; ++i) {
                    if (next_time[i] <= best_t) {
                        best_t = next_time[i];
                        best = i;
                    }
                }
                if (best < 0) break;
                const double size = draw_size(owner[best], kind[best]);
                if (owner[best] == &X)
                    xi_jumps += size;
                else
                    V += std::exp(-w_sign * (xi + xi_jumps)) * size;
                next_time[best] += rng.next_exponential() / rates[best];
            }
            xi += xi_jumps;
        }

        xi += x_drift_dt;
        if (x_gauss) xi += X.sigma * sqdt * rng.next_normal();
    }
    return {V, xi};
}

void run_block(const CompiledProcess& X, const CompiledProcess& E, const SimConfig& cfg,
               double w_sign, uint64_t stream, int64_t lo, int64_t hi, double* values,
               double* xi_end, double* min_xi) {
    double local_min = kInf;
    for (int64_t i = lo; i < hi; ++i) {
        Xoshiro256 rng(stream_seed(cfg.seed, stream, static_cast<uint64_t>(i)));
        PathOutput po = run_path(X, E, cfg.horizon_T, cfg.step_dt, w_sign, rng);
        values[i] = po.integral;
        if (xi_end) xi_end[i] = po.xi_end;
        local_min = std::min(local_min, po.xi_end);
    }
    *min_xi = local_min;
}

struct BlockRun {
    std::vector<double> values;
    std::vector<double> xi_end;
    double min_xi = kInf;
};

BlockRun run_all_paths(const CompiledProcess& X, const CompiledProcess& E, const SimConfig& cfg,
                       double w_sign, uint64_t stream, double T_override = -1.0,
                       bool keep_xi = false) {
    SimConfig local = cfg;
    if (T_override > 0.0) local.horizon_T = T_override;
    BlockRun out;
    out.values.resize(static_cast<size_t>(cfg.n_paths));
    if (keep_xi) out.xi_end.resize(static_cast<size_t>(cfg.n_paths));

    int threads = cfg.threads;
    if (threads <= 0) threads = static_cast<int>(std::thread::hardware_concurrency());
    threads = std::max(1, std::min<int>(threads, static_cast<int>(cfg.n_paths)));

    if (threads == 1) {
        run_block(X, E, local, w_sign, stream, 0, cfg.n_paths, out.values.data(),
                  keep_xi ? out.xi_end.data() : nullptr, &out.min_xi);
        return out;
    }
    std::vector<std::thread> pool;
    std::vector<double> mins(static_cast<size_t>(threads), kInf);
    const int64_t chunk = (cfg.n_paths + threads - 1) / threads;
    for (int t = 0; t < threads; ++t) {
        const int64_t lo = t * chunk;
        const int64_t hi = std::min<int64_t>(cfg.n_paths, lo + chunk);
        if (lo >= hi) break;
        pool.emplace_back(run_block, std::cref(X), std::cref(E), std::cref(local), w_sign, stream,
                          lo, hi, out.values.data(), keep_xi ? out.xi_end.data() : nullptr,
                          &mins[static_cast<size_t>(t)]);
    }
    for (auto& th : pool) th.join();
    out.min_xi = *std::min_element(mins.begin(), mins.end());
    return out;
}

}  // namespace

void SimConfig::validate() const {
    if (!(horizon_T > 0.0)) throw DomainError("sim config: horizon_T must be > 0");
    if (!(step_dt > 0.0) || step_dt > horizon_T)
        throw DomainError("sim config: step_dt must lie in (0, horizon_T]");
    if (n_paths < 1) throw DomainError("sim config: n_paths must be >= 1");
}

SampleSet simulate_functional(const LevyTriplet& xi, const LevyTriplet& eta, const SimConfig& cfg,
                              DriftToInfinity drift) {
    cfg.validate();
    {
        auto mean = xi.mean();
        if (mean && std::isfinite(*mean) && *mean <= 0.0)
            throw DomainError("simulate_functional: xi does not drift to +infinity");
        if (!mean && drift == DriftToInfinity::verify)
            throw DomainError("simulate_functional: cannot verify drift to +infinity");
    }
    const CompiledProcess X = compile_process(xi, cfg.small_jump_cutoff, "xi");
    const CompiledProcess E = compile_process(eta, cfg.small_jump_cutoff, "eta");

    BlockRun run = run_all_paths(X, E, cfg, +1.0, /*stream=*/0);

    SampleSet out;
    out.values = std::move(run.values);
    out.seed = cfg.seed;
    out.stream_ids = {0};
    // Truncation certificate: the unintegrated tail is bounded by
    // e^{-min xi_T} times the per-unit-time eta scale divided by the decay
    // rate of E[e^{-xi}] (floored when the rate is non-positive).
    const double decay = X.drift - 0.5 * X.sigma * X.sigma;
    out.truncation_bound =
        std::exp(-run.min_xi) * E.unit_scale / std::max(decay, 1e-2);
    return out;
}

LaplaceEstimate empirical_laplace(const SampleSet& samples, double u) {
    if (samples.values.empty()) throw DomainError("empirical_laplace: empty sample set");
    if (!(u > 0.0)) throw DomainError("empirical_laplace: u must be > 0");
    double sum = 0.0;
    for (double v : samples.values) sum += std::exp(-u * v);
    const double n = static_cast<double>(samples.values.size());
    const double mean = sum / n;
    double ss = 0.0;
    for (double v : samples.values) {
        const double d = std::exp(-u * v) - mean;
        ss += d * d;
    }
    LaplaceEstimate est;
    est.estimate = mean;
    est.std_error = samples.values.size() > 1 ? std::sqrt(ss / (n * (n - 1.0))) : 0.0;
    return est;
}

std::pair<double, double> ks_two_sample(std::vector<double> a, std::vector<double> b) {
    if (a.empty() || b.empty()) throw DomainError("ks_two_sample: empty sample");
    std::sort(a.begin(), a.end());
    std::sort(b.begin(), b.end());
    const double na = static_cast<double>(a.size()), nb = static_cast<double>(b.size());
    size_t i = 0, j = 0;
    double d = 0.0;
    while (i < a.size() && j < b.size()) {
        const double x = std::min(a[i], b[j]);
        while (i < a.size() && a[i] <= x) ++i;
        while (j < b.size() && b[j] <= x) ++j;
        d = std::max(d, std::abs(static_cast<double>(i) / na - static_cast<double>(j) / nb));
    }
    const double ne = na * nb / (na + nb);
    const double lambda = (std::sqrt(ne) + 0.12 + 0.11 / std::sqrt(ne)) * d;
    double p = 0.0;
    for (int k = 1; k <= 100; ++k) {
        const double term = 2.0 * ((k % 2 == 1) ? 1.0 : -1.0) * std::exp(-2.0 * k * k * lambda * lambda);
        p += term;
        if (std::abs(term) < 1e-12) break;
    }
    p = std::clamp(p, 0.0, 1.0);
    return {d, p};
}

FixedPointReport verify_fixed_point(const LevyTriplet& xi, const LevyTriplet& eta,
                                    const SimConfig& cfg, double t_check, DriftToInfinity drift) {
    if (!(t_check > 0.0)) throw DomainError("verify_fixed_point: t_check must be > 0");
    SampleSet direct = simulate_functional(xi, eta, cfg, drift);

    const CompiledProcess X = compile_process(xi, cfg.small_jump_cutoff, "xi");
    const CompiledProcess E = compile_process(eta, cfg.small_jump_cutoff, "eta");

    // Independent V' (stream 1) and the GOU segment over [0, t_check]
    // (stream 2), combined as e^{-xi_t} (V' + int_0^t e^{+xi_{s-}} d eta_s).
    BlockRun vprime = run_all_paths(X, E, cfg, +1.0, /*stream=*/1);
    BlockRun inner = run_all_paths(X, E, cfg, -1.0, /*stream=*/2, t_check, /*keep_xi=*/true);

    std::vector<double> transformed(static_cast<size_t>(cfg.n_paths));
    for (size_t i = 0; i < transformed.size(); ++i)
        transformed[i] = std::exp(-inner.xi_end[i]) * (vprime.values[i] + inner.values[i]);

    FixedPointReport rep;
    rep.n = cfg.n_paths;
    auto [d, p] = ks_two_sample(direct.values, transformed);
    rep.ks_statistic = d;
    rep.p_value = p;
    rep.passed = p >= rep.significance;

    std::vector<double> sa = direct.values, sb = transformed;
    std::sort(sa.begin(), sa.end());
    std::sort(sb.begin(), sb.end());
    double sup = 0.0;
    for (size_t i = 0; i < sa.size(); ++i) sup = std::max(sup, std::abs(sa[i] - sb[i]));
    rep.sup_value_distance = sup;
    return rep;
}

SupportConsistencyReport support_consistency(const SampleSet& samples,
                                             const SupportResult& claimed, double tol) {
    if (samples.values.empty()) throw DomainError("support_consistency: empty sample set");
    SupportConsistencyReport rep;
    rep.tol = tol;
    rep.sample_min = kInf;
    rep.sample_max = -kInf;
    int64_t outside = 0;
    for (double v : samples.values) {
        rep.sample_min = std::min(rep.sample_min, v);
        rep.sample_max = std::max(rep.sample_max, v);
        if (!claimed.contains(v, tol)) ++outside;
    }
    rep.fraction_outside = static_cast<double>(outside) / static_cast<double>(samples.values.size());
    rep.passed = rep.fraction_outside <= 0.01;
    return rep;
}

}  // namespace expfunc

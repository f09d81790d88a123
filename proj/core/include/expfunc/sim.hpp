#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "expfunc/levy_triplet.hpp"
#include "expfunc/support.hpp"

namespace expfunc {

/// Discretization of the exponential functional: left-point Riemann sums on a
/// uniform grid of step `step_dt` over [0, horizon_T], with compound-Poisson
/// and large stable jumps placed at their exact times and small stable jumps
/// (below `small_jump_cutoff`) replaced by their mean drift.
struct SimConfig {
    double horizon_T = 30.0;
    double step_dt = 1e-3;
    int64_t n_paths = 10000;
    uint64_t seed = 1;
    double small_jump_cutoff = 1e-4;
    int threads = 1;

    void validate() const;
};

/// Simulated samples, reproducible: the same config yields bit-identical
/// values independently of the thread count (per-path generator streams, see
/// rng.hpp for the splitting rule).
struct SampleSet {
    std::vector<double> values;  // in path order
    double truncation_bound = 0.0;
    uint64_t seed = 0;
    std::vector<uint64_t> stream_ids;
};

/// Monte Carlo samples of V = int_0^inf e^{-xi_{s-}} d eta_s. Supported path
/// generators: Brownian-with-drift, compound Poisson (atoms), stable
/// subordinator components and finite-activity tabulated densities (inverse
/// CDF sizes). Throws DomainError for other measure variants or a missing
/// cutoff with infinite-activity components.
SampleSet simulate_functional(const LevyTriplet& xi, const LevyTriplet& eta, const SimConfig& cfg,
                              DriftToInfinity drift = DriftToInfinity::verify);

struct LaplaceEstimate {
    double estimate = 0.0;
    double std_error = 0.0;
};

/// Mean and standard error of e^{-u V} over a sample set.
LaplaceEstimate empirical_laplace(const SampleSet& samples, double u);

/// Stationarity check of the fixed-point identity: compares direct samples
/// of V against e^{-xi_t} (V' + int_0^t e^{+xi_{s-}} d eta_s) with an
/// independent V', by a two-sample Kolmogorov-Smirnov test.
struct FixedPointReport {
    double ks_statistic = 0.0;
    double p_value = 0.0;
    bool passed = false;         // p_value >= significance
    double significance = 1e-3;
    double sup_value_distance = 0.0;  // max |sorted_a[i] - sorted_b[i]|
    int64_t n = 0;
};

FixedPointReport verify_fixed_point(const LevyTriplet& xi, const LevyTriplet& eta,
                                    const SimConfig& cfg, double t_check,
                                    DriftToInfinity drift = DriftToInfinity::verify);

/// Fraction of samples falling outside a claimed support beyond tolerance
/// `tol` at finite endpoints, plus the sample extremes.
struct SupportConsistencyReport {
    double fraction_outside = 0.0;
    double sample_min = 0.0;
    double sample_max = 0.0;
    double tol = 1e-2;
    bool passed = false;  // >= 99% of samples inside
};

SupportConsistencyReport support_consistency(const SampleSet& samples,
                                             const SupportResult& claimed, double tol = 1e-2);

/// Two-sample Kolmogorov-Smirnov statistic and asymptotic p-value.
std::pair<double, double> ks_two_sample(std::vector<double> a, std::vector<double> b);

}  // namespace expfunc

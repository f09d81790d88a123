// Command-line front end: support classification, range membership checks,
// stable pre-images, ODE series solving, Monte Carlo simulation and
// simulation-vs-analytic verification, all driven by process/law spec files.
//
// Exit codes: 0 success/accept, 1 reject, 2 inconclusive, 64 usage error,
// 65 spec-file error, 70 numeric failure.

#include <cmath>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "expfunc/bernstein.hpp"
#include "expfunc/bm.hpp"
#include "expfunc/errors.hpp"
#include "expfunc/quadrature.hpp"
#include "expfunc/range.hpp"
#include "expfunc/sim.hpp"
#include "expfunc/spec_io.hpp"
#include "expfunc/stable.hpp"
#include "expfunc/support.hpp"

namespace {

using nlohmann::json;

constexpr const char* kVersion = "0.1.0";

constexpr int kExitAccept = 0;
constexpr int kExitReject = 1;
constexpr int kExitInconclusive = 2;
constexpr int kExitUsage = 64;
constexpr int kExitSpec = 65;
constexpr int kExitNumeric = 70;

int decision_exit(expfunc::Decision d) {
    switch (d) {
        case expfunc::Decision::accept: return kExitAccept;
        case expfunc::Decision::reject: return kExitReject;
        case expfunc::Decision::inconclusive: return kExitInconclusive;
    }
    return kExitNumeric;
}

std::string echo_line(const std::string& label, const std::string& type, uint64_t hash) {
    std::ostringstream os;
    os << label << "=" << type << "(#" << std::hex << hash << std::dec << ")";
    return os.str();
}

json spec_provenance(const expfunc::ProcessSpecDoc& doc) {
    return {{"type", doc.type},
            {"hash", expfunc::fnv1a_hash(doc.canonical_text)},
            {"spec", doc.canonical_text}};
}

json law_provenance(const expfunc::LawSpecDoc& doc) {
    return {{"type", doc.type},
            {"hash", expfunc::fnv1a_hash(doc.canonical_text)},
            {"spec", doc.canonical_text}};
}

void emit(const json& doc, bool structured) {
    if (structured) {
        std::cout << doc.dump(2) << "\n";
    } else if (doc.contains("human")) {
        std::cout << doc["human"].get<std::string>() << "\n";
    }
}

std::vector<double> parse_grid_spec(const std::string& s) {
    // lo:hi:count, linear spacing, endpoints included.
    double lo = 0, hi = 0;
    int count = 0;
    char c1 = 0, c2 = 0;
    std::istringstream in(s);
    if (!(in >> lo >> c1 >> hi >> c2 >> count) || c1 != ':' || c2 != ':' || count < 2 ||
        !(lo > 0.0) || !(hi > lo))
        throw expfunc::SpecError("grid must be `lo:hi:count` with 0 < lo < hi, count >= 2");
    return expfunc::lin_spaced(lo, hi, count);
}

std::vector<double> parse_u_list(const std::string& s) {
    std::vector<double> out;
    std::stringstream in(s);
    std::string tok;
    while (std::getline(in, tok, ',')) {
        if (tok.empty()) continue;
        out.push_back(std::stod(tok));
        if (!(out.back() > 0.0)) throw expfunc::SpecError("u values must be positive");
    }
    if (out.empty()) throw expfunc::SpecError("empty u list");
    return out;
}

// ---------------------------------------------------------------- support --
int cmd_support(const std::string& xi_path, const std::string& eta_path, bool assert_drift,
                bool structured) {
    auto xi = expfunc::load_process_spec(xi_path);
    auto eta = expfunc::load_process_spec(eta_path);
    const auto drift = assert_drift ? expfunc::DriftToInfinity::asserted
                                    : expfunc::DriftToInfinity::verify;
    expfunc::SupportResult res;
    try {
        res = expfunc::support_of_functional(xi.triplet, eta.triplet, drift);
    } catch (const expfunc::InconclusiveShape& e) {
        json doc{{"command", "support"},
                 {"version", kVersion},
                 {"inputs", {{"xi", spec_provenance(xi)}, {"eta", spec_provenance(eta)}}},
                 {"result", {{"classified", false}, {"reason", e.what()}}},
                 {"human", std::string("inconclusive: ") + e.what()}};
        emit(doc, structured);
        return kExitInconclusive;
    }
    res.check_invariants();

    json result{{"classified", true}, {"interval", res.describe()}};
    switch (res.kind) {
        case expfunc::SupportKind::point: result["kind"] = "point"; break;
        case expfunc::SupportKind::closed_bounded_interval:
            result["kind"] = "closed_bounded_interval";
            break;
        case expfunc::SupportKind::right_half_line: result["kind"] = "right_half_line"; break;
        case expfunc::SupportKind::left_half_line: result["kind"] = "left_half_line"; break;
        case expfunc::SupportKind::full_line: result["kind"] = "full_line"; break;
    }
    if (std::isfinite(res.lower)) result["lower"] = res.lower;
    if (std::isfinite(res.upper)) result["upper"] = res.upper;

    json doc{{"command", "support"},
             {"version", kVersion},
             {"inputs", {{"xi", spec_provenance(xi)}, {"eta", spec_provenance(eta)}}},
             {"result", result},
             {"human", "# " + echo_line("xi", xi.type, expfunc::fnv1a_hash(xi.canonical_text)) +
                           " " + echo_line("eta", eta.type, expfunc::fnv1a_hash(eta.canonical_text)) +
                           "\nsupp L(V) = " + res.describe()}};
    emit(doc, structured);
    return kExitAccept;
}

// ------------------------------------------------------------ range-check --
void write_witness_csv(const std::string& path, const expfunc::RangeVerdict& verdict) {
    std::ofstream out(path);
    if (!out) throw expfunc::SpecError("cannot open witness output file: " + path);
    bool tail_form = false;
    if (verdict.eta_triplet && !verdict.eta_triplet->nu.is_zero()) {
        tail_form = true;
        out << "t,nu_eta_tail\n";
        for (double t : expfunc::log_spaced(1e-4, 1e4, 200)) {
            double tail = 0.0;
            try {
                tail = verdict.eta_triplet->nu.mass_beyond(t);
            } catch (...) {
                continue;
            }
            out << expfunc::format_double(t) << "," << expfunc::format_double(tail) << "\n";
        }
    }
    if (!tail_form && verdict.psi_eta) {
        out << "u,psi_eta\n";
        for (double u : expfunc::log_spaced(1e-3, 1e3, 200))
            out << expfunc::format_double(u) << ","
                << expfunc::format_double(verdict.psi_eta->value(u)) << "\n";
    }
}

int cmd_range_check(const std::string& mu_path, const std::string& xi_path,
                    const std::string& method, const std::string& witness_csv, bool assert_drift,
                    bool structured) {
    auto mu = expfunc::load_law_spec(mu_path);
    auto xi = expfunc::load_process_spec(xi_path);

    json result;
    expfunc::Decision decision = expfunc::Decision::inconclusive;

    if (method == "growth") {
        const auto& t = xi.triplet;
        if (!(t.sigma2 > 0.0) || !t.nu.is_zero())
            throw expfunc::SpecError("--method growth requires a bm_drift xi spec");
        expfunc::BmDriftParams bm{t.gamma, std::sqrt(t.sigma2)};
        auto rep = expfunc::growth_necessary_check(mu.law, bm);
        decision = rep.decision;
        result = {{"method", "growth"},
                  {"decision", expfunc::to_string(rep.decision)},
                  {"limsup_estimate", rep.limsup_estimate},
                  {"b_eta_positive", rep.b_eta_positive},
                  {"note", rep.note}};
    } else {
        expfunc::RangeVerdict verdict;
        if (method == "finite-k") {
            const auto& t = xi.triplet;
            if (!(t.sigma2 > 0.0) || !t.nu.is_zero())
                throw expfunc::SpecError("--method finite-k requires a bm_drift xi spec");
            expfunc::BmDriftParams bm{t.gamma, std::sqrt(t.sigma2)};
            verdict = expfunc::finite_k_check(mu.law, bm);
        } else if (method == "general") {
            expfunc::RangeCheckOptions opts;
            opts.drift = assert_drift ? expfunc::DriftToInfinity::asserted
                                      : expfunc::DriftToInfinity::verify;
            verdict = expfunc::check_in_range(mu.law, xi.triplet, opts);
        } else {
            throw expfunc::SpecError("unknown --method (use general|finite-k|growth)");
        }
        decision = verdict.decision;
        result = {{"method", method}, {"decision", expfunc::to_string(verdict.decision)}};
        if (!verdict.certificate.empty()) result["certificate"] = verdict.certificate;
        if (verdict.eta_drift) {
            result["eta_drift"] = *verdict.eta_drift;
            result["eta_drift_converged"] = verdict.eta_drift_converged;
        }
        if (verdict.first_violation_t) result["first_violation_t"] = *verdict.first_violation_t;
        if (verdict.eta_triplet) {
            try {
                result["eta_spec"] = expfunc::serialize_process_spec(*verdict.eta_triplet);
            } catch (const expfunc::DomainError&) {
                result["eta_spec_note"] = "witness measure tabulated; see witness CSV";
            }
        }
        if (!witness_csv.empty() && decision == expfunc::Decision::accept)
            write_witness_csv(witness_csv, verdict);
    }

    std::string human = "# " + echo_line("mu", mu.type, expfunc::fnv1a_hash(mu.canonical_text)) +
                        " " + echo_line("xi", xi.type, expfunc::fnv1a_hash(xi.canonical_text)) +
                        "\nrange-check [" + method + "]: " + result["decision"].get<std::string>();
    if (result.contains("certificate"))
        human += "\n  certificate: " + result["certificate"].get<std::string>();
    if (result.contains("note")) human += "\n  " + result["note"].get<std::string>();

    json doc{{"command", "range-check"},
             {"version", kVersion},
             {"inputs", {{"mu", law_provenance(mu)}, {"xi", spec_provenance(xi)}}},
             {"result", result},
             {"human", human}};
    emit(doc, structured);
    return decision_exit(decision);
}

// -------------------------------------------------------- preimage-stable --
int cmd_preimage_stable(double alpha, double c, double a, double sigma, bool structured) {
    expfunc::BmDriftParams bm{a, sigma};
    auto verdict =
        expfunc::stable_range_check(expfunc::StableConvolutionSpec::single(alpha, c), bm);

    json result{{"decision", expfunc::to_string(verdict.decision)}};
    std::string human;
    if (verdict.decision == expfunc::Decision::accept) {
        const std::string eta_spec = expfunc::serialize_process_spec(*verdict.eta_triplet);
        result["eta_spec"] = eta_spec;
        result["eta_drift"] = verdict.eta_triplet->fv_drift.value_or(0.0);
        json dens = json::array();
        for (const auto& comp : verdict.eta_triplet->nu.components()) {
            if (const auto* st = std::get_if<expfunc::StableDensity>(&comp))
                dens.push_back({{"exponent", st->alpha}, {"coefficient", st->c}});
        }
        result["eta_density_terms"] = dens;
        human = "accept\n" + eta_spec;
    } else {
        result["certificate"] = verdict.certificate;
        human = expfunc::to_string(verdict.decision) + ": " + verdict.certificate;
    }

    json doc{{"command", "preimage-stable"},
             {"version", kVersion},
             {"inputs",
              {{"alpha", alpha}, {"c", c}, {"a", a}, {"sigma", sigma}}},
             {"result", result},
             {"human", human}};
    emit(doc, structured);
    return decision_exit(verdict.decision);
}

// -------------------------------------------------------------- solve-ode --
int cmd_solve_ode(double theta, const std::string& feta_path, int N, const std::string& grid_spec,
                  double c1, bool c1_given, const std::string& out_path, bool structured) {
    if (!(theta > 0.0)) throw expfunc::SpecError("--theta must be > 0");
    std::ifstream in(feta_path);
    if (!in) throw expfunc::SpecError("cannot open coefficient file: " + feta_path);
    std::vector<double> coeffs;
    double v;
    while (in >> v) coeffs.push_back(v);
    if (coeffs.empty()) throw expfunc::SpecError("coefficient file is empty");

    // The series depends on (a, sigma) only through theta; this pairing
    // represents the requested theta exactly.
    expfunc::BmDriftParams bm{2.0 * theta, 2.0};
    std::vector<double> grid = parse_grid_spec(grid_spec);

    expfunc::C1Policy policy = expfunc::C1Boundary{};
    if (c1_given) policy = expfunc::C1Supplied{c1};
    auto res = expfunc::frobenius_solve(coeffs, bm, N, grid, policy);

    std::ostringstream csv;
    csv << "# C1 = " << expfunc::format_double(res.series.C1)
        << ", C2 = " << expfunc::format_double(res.series.C2)
        << ", theta = " << expfunc::format_double(theta) << ", N = " << N << "\n";
    csv << "u,LV,error_bound\n";
    for (size_t i = 0; i < res.u.size(); ++i)
        csv << expfunc::format_double(res.u[i]) << ","
            << expfunc::format_double(res.evals[i].value) << ","
            << expfunc::format_double(res.evals[i].truncation_bound) << "\n";

    if (!out_path.empty()) {
        std::ofstream out(out_path);
        if (!out) throw expfunc::SpecError("cannot open output file: " + out_path);
        out << csv.str();
    }

    json doc{{"command", "solve-ode"},
             {"version", kVersion},
             {"inputs",
              {{"theta", theta},
               {"N", N},
               {"grid", grid_spec},
               {"f_hash", expfunc::fnv1a_hash(std::string(feta_path))}}},
             {"result",
              {{"C1", res.series.C1},
               {"C2", res.series.C2},
               {"radius_estimate", res.series.radius_estimate}}},
             {"human", csv.str()}};
    emit(doc, structured);
    return kExitAccept;
}

// Default horizon: T = max(30, 20/E[xi_1]) when the mean is finite, 30
// otherwise (a faster-drifting xi needs less horizon for the same tail).
double default_horizon(const expfunc::LevyTriplet& xi) {
    auto mean = xi.mean();
    if (mean && std::isfinite(*mean) && *mean > 0.0) return std::max(30.0, 20.0 / *mean);
    return 30.0;
}

// --------------------------------------------------------------- simulate --
int cmd_simulate(const std::string& xi_path, const std::string& eta_path,
                 expfunc::SimConfig cfg, const std::string& out_path, bool assert_drift,
                 bool structured) {
    auto xi = expfunc::load_process_spec(xi_path);
    auto eta = expfunc::load_process_spec(eta_path);
    if (cfg.horizon_T <= 0.0) cfg.horizon_T = default_horizon(xi.triplet);
    const auto drift = assert_drift ? expfunc::DriftToInfinity::asserted
                                    : expfunc::DriftToInfinity::verify;
    auto samples = expfunc::simulate_functional(xi.triplet, eta.triplet, cfg, drift);

    std::ofstream out(out_path);
    if (!out) throw expfunc::SpecError("cannot open output file: " + out_path);
    out << "# seed = " << cfg.seed << ", paths = " << cfg.n_paths
        << ", dt = " << expfunc::format_double(cfg.step_dt)
        << ", T = " << expfunc::format_double(cfg.horizon_T)
        << ", eps = " << expfunc::format_double(cfg.small_jump_cutoff)
        << ", truncation_bound = " << expfunc::format_double(samples.truncation_bound) << "\n";
    out << "V\n";
    for (double s : samples.values) out << expfunc::format_double(s) << "\n";

    json doc{{"command", "simulate"},
             {"version", kVersion},
             {"inputs",
              {{"xi", spec_provenance(xi)},
               {"eta", spec_provenance(eta)},
               {"seed", cfg.seed},
               {"paths", cfg.n_paths},
               {"dt", cfg.step_dt},
               {"T", cfg.horizon_T},
               {"eps", cfg.small_jump_cutoff}}},
             {"result",
              {{"samples_written", samples.values.size()},
               {"truncation_bound", samples.truncation_bound},
               {"out", out_path}}},
             {"human", "wrote " + std::to_string(samples.values.size()) + " samples to " +
                           out_path}};
    emit(doc, structured);
    return kExitAccept;
}

// ----------------------------------------------------------------- verify --
int cmd_verify(const std::string& xi_path, const std::string& eta_path, const std::string& mu_path,
               const std::string& u_list, expfunc::SimConfig cfg, bool assert_drift,
               bool structured) {
    auto xi = expfunc::load_process_spec(xi_path);
    auto eta = expfunc::load_process_spec(eta_path);
    auto mu = expfunc::load_law_spec(mu_path);
    if (cfg.horizon_T <= 0.0) cfg.horizon_T = default_horizon(xi.triplet);
    const auto drift = assert_drift ? expfunc::DriftToInfinity::asserted
                                    : expfunc::DriftToInfinity::verify;
    auto samples = expfunc::simulate_functional(xi.triplet, eta.triplet, cfg, drift);

    json rows = json::array();
    std::ostringstream human;
    human << "u\tempirical\tanalytic\tSE\tdev/SE\tverdict\n";
    bool all_ok = true;
    for (double u : parse_u_list(u_list)) {
        auto est = expfunc::empirical_laplace(samples, u);
        const double analytic = std::exp(mu.law.psi_V.value(u));
        const double dev = est.std_error > 0.0
                               ? std::abs(est.estimate - analytic) / est.std_error
                               : (est.estimate == analytic ? 0.0 : 1e300);
        const bool ok = dev <= 3.0;
        all_ok = all_ok && ok;
        rows.push_back({{"u", u},
                        {"empirical", est.estimate},
                        {"analytic", analytic},
                        {"std_error", est.std_error},
                        {"deviations", dev},
                        {"within_3se", ok}});
        human << expfunc::format_double(u) << "\t" << expfunc::format_double(est.estimate) << "\t"
              << expfunc::format_double(analytic) << "\t"
              << expfunc::format_double(est.std_error) << "\t" << expfunc::format_double(dev)
              << "\t" << (ok ? "ok" : "DEVIATES") << "\n";
    }

    json doc{{"command", "verify"},
             {"version", kVersion},
             {"inputs",
              {{"xi", spec_provenance(xi)},
               {"eta", spec_provenance(eta)},
               {"mu", law_provenance(mu)},
               {"seed", cfg.seed},
               {"paths", cfg.n_paths},
               {"dt", cfg.step_dt},
               {"T", cfg.horizon_T}}},
             {"result", {{"rows", rows}, {"all_within_3se", all_ok}}},
             {"human", human.str()}};
    emit(doc, structured);
    return all_ok ? kExitAccept : kExitReject;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"distributional analysis of exponential functionals of Levy processes"};
    app.require_subcommand(1);
    app.set_version_flag("--version", kVersion);

    bool structured = false;
    app.add_flag("--format-structured,--json", structured,
                 "emit a single structured (JSON) document instead of human output");
    app.fallthrough();

    // support
    auto* sup = app.add_subcommand("support", "classify the support of L(V)");
    sup->fallthrough();
    std::string sup_xi, sup_eta;
    bool sup_assert = false;
    sup->add_option("--xi", sup_xi, "xi process spec file")->required();
    sup->add_option("--eta", sup_eta, "eta process spec file")->required();
    sup->add_flag("--assert-drift", sup_assert, "caller vouches that xi drifts to +infinity");

    // range-check
    auto* rc = app.add_subcommand("range-check", "decide membership of a positive law in the range");
    rc->fallthrough();
    std::string rc_mu, rc_xi, rc_method = "general", rc_witness;
    bool rc_assert = false;
    rc->add_option("--mu", rc_mu, "law spec file")->required();
    rc->add_option("--xi", rc_xi, "xi process spec file")->required();
    rc->add_option("--method", rc_method, "general|finite-k|growth (default general)");
    rc->add_option("--witness-csv", rc_witness, "write the witness tabulation CSV here");
    rc->add_flag("--assert-drift", rc_assert, "caller vouches that xi drifts to +infinity");

    // preimage-stable
    auto* ps = app.add_subcommand("preimage-stable", "closed-form pre-image of a stable law");
    ps->fallthrough();
    double ps_alpha = 0, ps_c = 0, ps_a = 0, ps_sigma = 0;
    ps->add_option("--alpha", ps_alpha)->required();
    ps->add_option("--c", ps_c)->required();
    ps->add_option("--a", ps_a)->required();
    ps->add_option("--sigma", ps_sigma)->required();

    // solve-ode
    auto* so = app.add_subcommand("solve-ode", "Frobenius series solution of the Laplace ODE");
    so->fallthrough();
    double so_theta = 0, so_c1 = 0;
    int so_N = 200;
    std::string so_feta, so_grid = "0.01:1:50", so_out;
    so->add_option("--theta", so_theta, "2a/sigma^2, non-integer")->required();
    so->add_option("--feta", so_feta, "file with driver exponent coefficients f_1 f_2 ...")
        ->required();
    so->add_option("--N", so_N, "series truncation order (default 200)");
    so->add_option("--grid", so_grid, "u grid lo:hi:count (default 0.01:1:50)");
    auto* so_c1_opt = so->add_option("--C1", so_c1, "supply C1 instead of fitting it");
    so->add_option("--out", so_out, "write the CSV here");

    // simulate
    auto* sim = app.add_subcommand("simulate", "Monte Carlo samples of the exponential functional");
    sim->fallthrough();
    std::string sim_xi, sim_eta, sim_out;
    expfunc::SimConfig sim_cfg;
    bool sim_assert = false;
    sim->add_option("--xi", sim_xi)->required();
    sim->add_option("--eta", sim_eta)->required();
    sim->add_option("--paths", sim_cfg.n_paths)->required();
    sim->add_option("--dt", sim_cfg.step_dt)->required();
    sim_cfg.horizon_T = 0.0;
    sim->add_option("--T", sim_cfg.horizon_T, "horizon (default max(30, 20/E[xi_1]))");
    sim->add_option("--seed", sim_cfg.seed)->required();
    sim->add_option("--out", sim_out, "output CSV")->required();
    sim->add_option("--eps", sim_cfg.small_jump_cutoff, "small-jump cutoff (default 1e-4)");
    sim->add_option("--threads", sim_cfg.threads, "worker threads (default 1; 0 = hardware)");
    sim->add_flag("--assert-drift", sim_assert, "caller vouches that xi drifts to +infinity");

    // verify
    auto* ver = app.add_subcommand("verify", "compare empirical and analytic Laplace transforms");
    ver->fallthrough();
    std::string ver_xi, ver_eta, ver_mu, ver_u = "0.5,1,2";
    expfunc::SimConfig ver_cfg;
    bool ver_assert = false;
    ver->add_option("--xi", ver_xi)->required();
    ver->add_option("--eta", ver_eta)->required();
    ver->add_option("--mu", ver_mu)->required();
    ver->add_option("--u", ver_u, "comma-separated evaluation points (default 0.5,1,2)");
    ver->add_option("--paths", ver_cfg.n_paths)->required();
    ver->add_option("--dt", ver_cfg.step_dt)->required();
    ver_cfg.horizon_T = 0.0;
    ver->add_option("--T", ver_cfg.horizon_T, "horizon (default max(30, 20/E[xi_1]))");
    ver->add_option("--seed", ver_cfg.seed)->required();
    ver->add_option("--eps", ver_cfg.small_jump_cutoff, "small-jump cutoff (default 1e-4)");
    ver->add_option("--threads", ver_cfg.threads, "worker threads (default 1; 0 = hardware)");
    ver->add_flag("--assert-drift", ver_assert, "caller vouches that xi drifts to +infinity");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForVersion& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return kExitUsage;
    }

    try {
        if (sup->parsed()) return cmd_support(sup_xi, sup_eta, sup_assert, structured);
        if (rc->parsed())
            return cmd_range_check(rc_mu, rc_xi, rc_method, rc_witness, rc_assert, structured);
        if (ps->parsed()) return cmd_preimage_stable(ps_alpha, ps_c, ps_a, ps_sigma, structured);
        if (so->parsed())
            return cmd_solve_ode(so_theta, so_feta, so_N, so_grid, so_c1,
                                 so_c1_opt->count() > 0, so_out, structured);
        if (sim->parsed()) return cmd_simulate(sim_xi, sim_eta, sim_cfg, sim_out, sim_assert,
                                               structured);
        if (ver->parsed())
            return cmd_verify(ver_xi, ver_eta, ver_mu, ver_u, ver_cfg, ver_assert, structured);
    } catch (const expfunc::SpecError& e) {
        std::cerr << "spec error: " << e.what() << "\n";
        return kExitSpec;
    } catch (const expfunc::InconclusiveShape& e) {
        std::cerr << "inconclusive: " << e.what() << "\n";
        return kExitInconclusive;
    } catch (const expfunc::DomainError& e) {
        std::cerr << "spec error: " << e.what() << "\n";
        return kExitSpec;
    } catch (const expfunc::NumericError& e) {
        std::cerr << "numeric failure: " << e.what() << "\n";
        return kExitNumeric;
    }
    return kExitUsage;
}

#include "expfunc/spec_io.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <map>
#include <sstream>
#include <vector>

#include "expfunc/errors.hpp"

namespace expfunc {

namespace {

std::string trim(const std::string& s) {
    const auto b = s.find_first_not_of(" \t\r\n");
    if (b == std::string::npos) return "";
    const auto e = s.find_last_not_of(" \t\r\n");
    return s.substr(b, e - b + 1);
}

struct Field {
    std::string key;
    std::string value;
};

std::vector<Field> tokenize(const std::string& text) {
    std::vector<Field> fields;
    std::istringstream in(text);
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        const auto hash = line.find('#');
        if (hash != std::string::npos) line = line.substr(0, hash);
        line = trim(line);
        if (line.empty()) continue;
        const auto eq = line.find('=');
        if (eq == std::string::npos)
            throw SpecError("spec line " + std::to_string(lineno) + ": expected `key = value`");
        Field f{trim(line.substr(0, eq)), trim(line.substr(eq + 1))};
        if (f.key.empty() || f.value.empty())
            throw SpecError("spec line " + std::to_string(lineno) + ": empty key or value");
        fields.push_back(std::move(f));
    }
    return fields;
}

double parse_number(const std::string& s, const std::string& key) {
    try {
        size_t pos = 0;
        const double v = std::stod(s, &pos);
        if (pos != s.size()) throw SpecError("");
        if (!std::isfinite(v)) throw SpecError("");
        return v;
    } catch (...) {
        throw SpecError("field `" + key + "`: malformed number `" + s + "`");
    }
}

std::vector<std::string> split_ws(const std::string& s) {
    std::vector<std::string> parts;
    std::istringstream in(s);
    std::string w;
    while (in >> w) parts.push_back(w);
    return parts;
}

// Scalar-field accessor enforcing uniqueness and consuming recognized keys.
class FieldSet {
public:
    explicit FieldSet(std::vector<Field> fields) : fields_(std::move(fields)) {}

    std::optional<std::string> take_scalar(const std::string& key) {
        std::optional<std::string> out;
        for (auto& f : fields_) {
            if (f.key != key) continue;
            if (out) throw SpecError("field `" + key + "` given more than once");
            out = f.value;
            f.key.clear();
        }
        return out;
    }

    std::optional<double> take_number(const std::string& key) {
        auto s = take_scalar(key);
        if (!s) return std::nullopt;
        return parse_number(*s, key);
    }

    double require_number(const std::string& key) {
        auto v = take_number(key);
        if (!v) throw SpecError("missing required field `" + key + "`");
        return *v;
    }

    std::vector<std::string> take_repeated(const std::string& key) {
        std::vector<std::string> out;
        for (auto& f : fields_) {
            if (f.key != key) continue;
            out.push_back(f.value);
            f.key.clear();
        }
        return out;
    }

    void reject_unknown() const {
        for (const auto& f : fields_)
            if (!f.key.empty()) throw SpecError("unknown field `" + f.key + "`");
    }

private:
    std::vector<Field> fields_;
};

std::vector<std::pair<double, double>> parse_atoms(const std::vector<std::string>& raw) {
    std::vector<std::pair<double, double>> atoms;
    for (const auto& s : raw) {
        auto parts = split_ws(s);
        if (parts.size() != 2) throw SpecError("field `atom`: expected `<position> <mass>`");
        atoms.emplace_back(parse_number(parts[0], "atom.position"),
                           parse_number(parts[1], "atom.mass"));
    }
    return atoms;
}

std::string read_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw SpecError("cannot open spec file: " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

}  // namespace

std::string format_double(double x) {
    char buf[40];
    const auto res = std::to_chars(buf, buf + sizeof(buf), x, std::chars_format::general, 17);
    return std::string(buf, res.ptr);
}

uint64_t fnv1a_hash(const std::string& bytes) {
    uint64_t h = 1469598103934665603ULL;
    for (unsigned char c : bytes) {
        h ^= c;
        h *= 1099511628211ULL;
    }
    return h;
}

ProcessSpecDoc parse_process_spec(const std::string& text) {
    FieldSet fs(tokenize(text));
    auto type = fs.take_scalar("type");
    if (!type) throw SpecError("process spec: missing `type`");

    ProcessSpecDoc doc;
    doc.type = *type;

    if (*type == "drift") {
        const double b = fs.require_number("b");
        fs.reject_unknown();
        doc.triplet = LevyTriplet::deterministic_drift(b);
    } else if (*type == "bm_drift") {
        const double a = fs.require_number("a");
        const double sigma = fs.require_number("sigma");
        fs.reject_unknown();
        doc.triplet = LevyTriplet::brownian_with_drift(a, sigma);
    } else if (*type == "compound_poisson") {
        const double drift = fs.take_number("drift").value_or(0.0);
        auto atoms = parse_atoms(fs.take_repeated("atom"));
        fs.reject_unknown();
        if (atoms.empty()) throw SpecError("compound_poisson: needs at least one `atom`");
        doc.triplet = LevyTriplet::compound_poisson(std::move(atoms), drift);
    } else if (*type == "stable_subordinator") {
        const double alpha = fs.require_number("alpha");
        const double c = fs.require_number("c");
        const double drift = fs.take_number("drift").value_or(0.0);
        fs.reject_unknown();
        doc.triplet = LevyTriplet::stable_subordinator(alpha, c, drift);
    } else if (*type == "composite") {
        const double drift = fs.take_number("drift").value_or(0.0);
        const double sigma = fs.take_number("sigma").value_or(0.0);
        auto atoms = parse_atoms(fs.take_repeated("atom"));
        auto stables = fs.take_repeated("stable");
        fs.reject_unknown();
        if (!(sigma >= 0.0)) throw SpecError("composite: sigma must be >= 0");
        LevyMeasure nu;
        if (!atoms.empty()) nu.add(Atoms{std::move(atoms)});
        for (const auto& s : stables) {
            auto parts = split_ws(s);
            if (parts.size() != 3)
                throw SpecError("field `stable`: expected `<alpha> <c> <positive|negative>`");
            const double alpha = parse_number(parts[0], "stable.alpha");
            const double c = parse_number(parts[1], "stable.c");
            JumpSide side;
            if (parts[2] == "positive" || parts[2] == "pos")
                side = JumpSide::positive;
            else if (parts[2] == "negative" || parts[2] == "neg")
                side = JumpSide::negative;
            else
                throw SpecError("field `stable`: side must be positive or negative");
            if (!(alpha > 0.0 && alpha < 1.0))
                throw SpecError("field `stable`: alpha must lie in (0,1) in spec files");
            nu.add(StableDensity{alpha, c, side});
        }
        doc.triplet = LevyTriplet::from_fv_parts(drift, sigma * sigma, std::move(nu));
    } else {
        throw SpecError("process spec: unknown type `" + *type + "`");
    }
    doc.triplet.validate();
    doc.canonical_text = serialize_process_spec(doc.triplet);
    return doc;
}

ProcessSpecDoc load_process_spec(const std::string& path) {
    return parse_process_spec(read_file(path));
}

std::string serialize_process_spec(const LevyTriplet& t) {
    const auto& comps = t.nu.components();
    std::ostringstream out;

    const double sigma = std::sqrt(t.sigma2);
    double drift = 0.0;
    if (t.fv_drift) {
        drift = *t.fv_drift;
    } else {
        auto near0 = t.nu.signed_mass_near0();
        if (!near0 || !std::isfinite(*near0))
            throw DomainError("serialize_process_spec: infinite-variation jump part unsupported");
        drift = t.gamma - *near0;
    }

    if (comps.empty() && sigma == 0.0) {
        out << "type = drift\n" << "b = " << format_double(drift) << "\n";
        return out.str();
    }
    if (comps.empty() && sigma > 0.0) {
        out << "type = bm_drift\n"
            << "a = " << format_double(drift) << "\n"
            << "sigma = " << format_double(sigma) << "\n";
        return out.str();
    }

    out << "type = composite\n";
    out << "drift = " << format_double(drift) << "\n";
    if (sigma > 0.0) out << "sigma = " << format_double(sigma) << "\n";
    for (const auto& comp : comps) {
        if (const auto* atoms = std::get_if<Atoms>(&comp)) {
            for (const auto& [x, m] : atoms->points)
                out << "atom = " << format_double(x) << " " << format_double(m) << "\n";
        } else if (const auto* st = std::get_if<StableDensity>(&comp)) {
            out << "stable = " << format_double(st->alpha) << " " << format_double(st->c) << " "
                << (st->side == JumpSide::positive ? "positive" : "negative") << "\n";
        } else {
            throw DomainError("serialize_process_spec: measure variant not representable");
        }
    }
    return out.str();
}

LawSpecDoc parse_law_spec(const std::string& text) {
    FieldSet fs(tokenize(text));
    auto type = fs.take_scalar("type");
    if (!type) throw SpecError("law spec: missing `type`");

    LawSpecDoc doc;
    doc.type = *type;
    std::ostringstream canon;

    if (*type == "stable_law") {
        const double alpha = fs.require_number("alpha");
        const double c = fs.require_number("c");
        const double drift = fs.take_number("drift").value_or(0.0);
        fs.reject_unknown();
        doc.law = make_stable_law(alpha, c, drift);
        canon << "type = stable_law\nalpha = " << format_double(alpha)
              << "\nc = " << format_double(c) << "\ndrift = " << format_double(drift) << "\n";
    } else if (*type == "dirac") {
        const double c = fs.require_number("c");
        fs.reject_unknown();
        doc.law = make_dirac_law(c);
        canon << "type = dirac\nc = " << format_double(c) << "\n";
    } else if (*type == "finite_k") {
        auto gspec = fs.take_scalar("g");
        const double drift = fs.take_number("drift").value_or(0.0);
        fs.reject_unknown();
        if (!gspec) throw SpecError("finite_k: missing `g`");
        auto parts = split_ws(*gspec);
        if (parts.empty()) throw SpecError("finite_k: empty `g`");
        FiniteActivityDensity bg;
        if (parts[0] == "exp" && parts.size() == 2) {
            bg = exp_background(parse_number(parts[1], "g.rate"));
        } else if (parts[0] == "inv_poly" && parts.size() == 2) {
            bg = inverse_poly_background(parse_number(parts[1], "g.p"));
        } else if (parts[0] == "bump" && parts.size() == 3) {
            bg = bump_background(parse_number(parts[1], "g.center"),
                                 parse_number(parts[2], "g.halfwidth"));
        } else if (parts[0] == "step" && parts.size() == 3) {
            bg = step_background(parse_number(parts[1], "g.height"),
                                 parse_number(parts[2], "g.upper"));
        } else {
            throw SpecError("finite_k: `g` must be `exp r`, `inv_poly p`, `bump c w` or `step h u`");
        }
        doc.law = make_finite_k_law(std::move(bg), drift);
        canon << "type = finite_k\ng = " << *gspec << "\ndrift = " << format_double(drift) << "\n";
    } else if (*type == "compound_poisson_law") {
        const double drift = fs.take_number("drift").value_or(0.0);
        auto atoms = parse_atoms(fs.take_repeated("atom"));
        fs.reject_unknown();
        doc.law = make_compound_poisson_law(atoms, drift);
        canon << "type = compound_poisson_law\ndrift = " << format_double(drift) << "\n";
        for (const auto& [x, m] : atoms)
            canon << "atom = " << format_double(x) << " " << format_double(m) << "\n";
    } else {
        throw SpecError("law spec: unknown type `" + *type + "`");
    }
    doc.canonical_text = canon.str();
    return doc;
}

LawSpecDoc load_law_spec(const std::string& path) { return parse_law_spec(read_file(path)); }

}  // namespace expfunc

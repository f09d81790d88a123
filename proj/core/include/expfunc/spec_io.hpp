#pragma once

#include <cstdint>
#include <string>

#include "expfunc/levy_triplet.hpp"
#include "expfunc/positive_law.hpp"

namespace expfunc {

/// Process-spec documents: structured text, one document per process.
/// Lines are `key = value` pairs, `#` starts a comment. Parsing is strict:
/// unknown or duplicated scalar fields are errors. Types:
///   type = drift                 b
///   type = bm_drift              a, sigma
///   type = compound_poisson      drift?, atom = <pos> <mass> (repeatable)
///   type = stable_subordinator   alpha, c, drift?
///   type = composite             drift?, sigma?, atom*, stable = <alpha> <c> <pos|neg>
/// Jump components in files are finite-variation (stable alpha in (0,1)).
struct ProcessSpecDoc {
    std::string type;
    LevyTriplet triplet;
    std::string canonical_text;  // normalized serialization of the parsed spec
};

ProcessSpecDoc parse_process_spec(const std::string& text);
ProcessSpecDoc load_process_spec(const std::string& path);

/// Serializes a triplet made of drift/Gaussian/atom/stable parts back into
/// the process-spec format (17 significant digits, byte-stable). Throws
/// DomainError for measure variants the format cannot carry.
std::string serialize_process_spec(const LevyTriplet& t);

/// Law-spec documents for positive laws:
///   type = stable_law            alpha, c, drift?
///   type = dirac                 c
///   type = finite_k              g = exp <rate> | inv_poly <p> | bump <center> <halfwidth>
///                                    | step <height> <upper>;  drift?
///   type = compound_poisson_law  drift?, atom = <pos> <mass> (repeatable)
struct LawSpecDoc {
    std::string type;
    PositiveLawSpec law;
    std::string canonical_text;
};

LawSpecDoc parse_law_spec(const std::string& text);
LawSpecDoc load_law_spec(const std::string& path);

/// FNV-1a 64-bit content hash used for run provenance.
uint64_t fnv1a_hash(const std::string& bytes);

/// Full-precision (17 significant digits) decimal formatting.
std::string format_double(double x);

}  // namespace expfunc

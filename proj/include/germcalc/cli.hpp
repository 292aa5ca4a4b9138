#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "germcalc/crgeom.hpp"
#include "germcalc/curve.hpp"
#include "germcalc/germmap.hpp"

namespace germcalc {

/// One `check` line from a session file: the directive token plus its raw
/// arguments (object names or unsigned integers, validated on dispatch).
struct CheckDirective {
    std::string kind;
    std::vector<std::string> args;
};

/// A parsed session file: variable declarations plus named maps, manifolds,
/// varieties and the check directives, all in declaration order. Maps and
/// varieties are defined over the plain context of the declared variables;
/// manifolds over its conjugate-paired extension.
struct Session {
    std::vector<std::pair<std::string, std::vector<std::string>>> var_groups;
    std::vector<std::pair<std::string, MapGerm>> maps;
    std::vector<std::pair<std::string, RealSubmanifold>> manifolds;
    std::vector<std::pair<std::string, IdealHandle>> varieties;
    std::vector<CheckDirective> checks;

    /// All declared variable ids in order.
    std::vector<std::string> var_ids() const;
    /// Plain context over var_ids(); throws when no variables were declared.
    VarContext plain_ctx() const;
    /// Conjugate-paired context over var_ids().
    VarContext paired_ctx() const;

    const MapGerm* find_map(const std::string& name) const;
    const RealSubmanifold* find_manifold(const std::string& name) const;
    const IdealHandle* find_variety(const std::string& name) const;
};

/// Parse a session file. Statements are line-based; brackets and braces may
/// span lines; `#` starts a comment. Errors carry line/column positions.
Session parse_session(const std::string& text);

/// Canonical text form: declarations in order, polynomials rendered with
/// terms in descending degree order, rationals in lowest terms and the
/// imaginary unit as `i`. Reparsing yields an equivalent session.
std::string render_session(const Session& s);

/// Structural equality: same declarations, same polynomials, same checks.
bool session_equal(const Session& a, const Session& b);

/// Canonical single-polynomial rendering used throughout reports. Partner
/// slots of a paired context render as conj(name).
std::string render_poly(const Poly& p);

/// Numeric overrides passed on the command line; unset fields fall back to
/// the directive's own arguments or to the documented defaults.
struct RunOptions {
    std::optional<unsigned> D;       // series/curve truncation
    std::optional<unsigned> K;       // bracket/derivation order bound
    std::optional<uint64_t> seed;    // exploration seed
    bool timings = false;            // include measured times in JSON
};

/// Structured result of one or more check directives. `verdicts` and
/// `witnesses` are keyed by the directive echo; every verdict field is
/// explicit (inconclusive outcomes are spelled out, never omitted).
struct ReportDocument {
    std::string command;
    nlohmann::ordered_json verdicts = nlohmann::ordered_json::object();
    nlohmann::ordered_json witnesses = nlohmann::ordered_json::object();
    nlohmann::ordered_json timings = nlohmann::ordered_json::object();

    /// {schema: 1, command, verdicts, witnesses, timings}; timings are
    /// emitted only when requested so that default output is deterministic.
    nlohmann::ordered_json to_json(bool include_timings) const;
    /// Indented dump of to_json plus trailing newline.
    std::string to_json_text(bool include_timings) const;
    /// Human-readable rendering of the same content.
    std::string to_text() const;
};

/// Execute one directive against the session's objects.
ReportDocument run_check(const Session& s, const CheckDirective& d, const RunOptions& opt = {});

/// Execute every check directive in declaration order and merge the reports.
ReportDocument run_session(const Session& s, const RunOptions& opt = {},
                           const std::string& command_echo = "run");

/// One randomly generated probe of the open question: does preimage equality
/// alone force a smooth image when the Jacobian condition fails?
struct ExploreInstance {
    MapGerm f;
    IdealHandle X;
    size_t dim_X = 0;
    GermVerdict preimage{GermRelation::Incomparable, std::nullopt, ""};
    bool jaccond = false;
    std::optional<SmoothCertificate> image_smooth;   // dim_X >= 2 route
    std::optional<CurveImageReport> curve_decision;  // dim_X == 1 route
    std::string note;      // route taken, or why a step was skipped
    bool candidate = false;  // preimage Equal with jaccond false
};

struct ExploreReport {
    uint64_t seed = 0;
    unsigned requested = 0;
    unsigned degree_bound = 0;
    std::vector<ExploreInstance> instances;
    size_t candidates = 0;
    /// Instances where the Jacobian condition held together with preimage
    /// equality but the image failed to certify smooth or transversal; any
    /// entry here is a hard failure of the core.
    std::vector<std::string> invariant_violations;
};

/// Generate n seeded random finite map germs on C^3 with smooth X through 0,
/// compute the preimage/Jacobian/image-smoothness verdicts, and flag
/// candidates for human inspection. Never claims a counterexample.
/// One-dimensional X instances are decided through the curve criterion.
ExploreReport explore_question(uint64_t seed, unsigned n, unsigned degree_bound);

/// JSON rendering of an exploration run (deterministic for a fixed seed).
nlohmann::ordered_json explore_to_json(const ExploreReport& r);

}  // namespace germcalc

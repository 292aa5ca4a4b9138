#include <chrono>
#include <sstream>

#include "germcalc/cli.hpp"

namespace germcalc {

namespace {

using njson = nlohmann::ordered_json;

std::string echo_of(const CheckDirective& d) {
    std::string s = d.kind;
    for (const auto& a : d.args) s += " " + a;
    return s;
}

njson order_json(const OrderVerdict& v) {
    njson o = njson::object();
    o["determined"] = v.determined;
    if (v.determined)
        o["order"] = v.order;
    else
        o["bound"] = v.bound;
    return o;
}

njson smooth_json(const SmoothCertificate& c) {
    njson o = njson::object();
    o["status"] = (c.status == SmoothStatus::Smooth) ? "Smooth" : "Inconclusive";
    o["jacobian_rank"] = c.jac_rank;
    if (c.status == SmoothStatus::Smooth) o["codim"] = c.codim;
    if (!c.note.empty()) o["note"] = c.note;
    return o;
}

njson profile_json(const CRProfile& p) {
    njson o = njson::object();
    o["cr_dim_at_0"] = p.cr_dim_at_0;
    o["generic_cr_dim"] = p.generic_cr_dim;
    o["cr_at_0"] = p.is_cr_at_0;
    return o;
}

njson opt_bool(const std::optional<bool>& v, const std::string& why_absent) {
    if (v.has_value()) return njson(*v);
    return njson("skipped: " + why_absent);
}

njson gens_json(const IdealHandle& I) {
    njson a = njson::array();
    for (const Poly& g : I.generators()) a.push_back(render_poly(g));
    return a;
}

void put_witness(njson& wits, const GermVerdict& v) {
    if (v.witness.has_value()) {
        wits["witness"] = render_poly(*v.witness);
        if (!v.witness_side.empty()) wits["side"] = v.witness_side;
    }
}

unsigned numeric_arg(const CheckDirective& d, size_t idx, std::optional<unsigned> override_v,
                     unsigned dflt) {
    if (override_v.has_value()) return *override_v;
    if (idx < d.args.size()) return static_cast<unsigned>(std::stoul(d.args[idx]));
    return dflt;
}

// Directives parsed from a session file always resolve, but run_check also
// accepts hand-built directives, so lookups must fail loudly here too.
const std::string& arg(const CheckDirective& d, size_t idx) {
    if (idx >= d.args.size())
        throw error("'" + d.kind + "' is missing argument " + std::to_string(idx + 1));
    return d.args[idx];
}

const MapGerm& need_map(const Session& s, const std::string& n) {
    const MapGerm* m = s.find_map(n);
    if (!m) throw error("unknown map '" + n + "'");
    return *m;
}

const RealSubmanifold& need_manifold(const Session& s, const std::string& n) {
    const RealSubmanifold* m = s.find_manifold(n);
    if (!m) throw error("unknown manifold '" + n + "'");
    return *m;
}

const IdealHandle& need_variety(const Session& s, const std::string& n) {
    const IdealHandle* v = s.find_variety(n);
    if (!v) throw error("unknown variety '" + n + "'");
    return *v;
}

njson report_json(const ManifoldMapReport& R, njson& wits) {
    njson o = njson::object();
    o["bound_K"] = R.K;
    o["finite"] = R.h_finite;
    if (R.mult.has_value())
        o["multiplicity"] = *R.mult;
    else
        o["multiplicity"] = "undefined: germ is not finite";
    o["jacobian_rank_at_0"] = R.jac_rank_at_0;
    o["image_codim"] = R.codim;
    o["rank_bound_ok"] = R.rank_bound_ok;
    o["source_generic"] = R.m_generic;
    o["source_finite_type"] = order_json(R.m_finite_type);
    if (R.m_in_proper_subvariety.has_value())
        o["source_in_proper_subvariety"] = *R.m_in_proper_subvariety;
    else
        o["source_in_proper_subvariety"] = "unknown: bounded search exhausted";
    if (R.subvariety_witness.has_value())
        wits["subvariety_witness"] = render_poly(*R.subvariety_witness);
    if (R.preimage.has_value()) {
        o["preimage"] = relation_name(R.preimage->status);
        put_witness(wits, *R.preimage);
    } else {
        o["preimage"] = "skipped: map is not finite";
    }
    o["image_smooth"] = smooth_json(R.image_smooth);
    if (R.image_ideal_2n.has_value()) o["image_ideal"] = gens_json(*R.image_ideal_2n);
    o["image_extracted"] = R.image_manifold.has_value();
    o["image_generic"] = opt_bool(R.image_generic, "no extracted image manifold");
    if (R.image_cr.has_value())
        o["image_cr"] = profile_json(*R.image_cr);
    else
        o["image_cr"] = "skipped: no extracted image manifold";
    o["image_finite_type"] = order_json(R.image_finite_type);
    o["real_transversal"] = opt_bool(R.real_transversal, "no extracted image manifold");
    o["holomorphic_tangent_transversal"] = opt_bool(R.cr_transversal, "image is not CR at 0");
    o["notes"] = R.notes;
    o["inconsistencies"] = R.inconsistencies;
    return o;
}

}  // namespace

njson ReportDocument::to_json(bool include_timings) const {
    njson o = njson::object();
    o["schema"] = 1;
    o["command"] = command;
    o["verdicts"] = verdicts;
    o["witnesses"] = witnesses;
    o["timings"] = include_timings ? timings : njson::object();
    return o;
}

std::string ReportDocument::to_json_text(bool include_timings) const {
    return to_json(include_timings).dump(2) + "\n";
}

std::string ReportDocument::to_text() const {
    std::ostringstream os;
    os << "command: " << command << "\n";
    for (const auto& [key, body] : verdicts.items()) {
        os << "== " << key << "\n";
        for (const auto& [k, v] : body.items())
            os << "  " << k << ": " << (v.is_string() ? v.get<std::string>() : v.dump()) << "\n";
        if (witnesses.contains(key)) {
            for (const auto& [k, v] : witnesses[key].items())
                os << "  " << k << ": " << (v.is_string() ? v.get<std::string>() : v.dump())
                   << "\n";
        }
        if (timings.contains(key)) os << "  time_ms: " << timings[key].dump() << "\n";
    }
    return os.str();
}

ReportDocument run_check(const Session& s, const CheckDirective& d, const RunOptions& opt) {
    ReportDocument doc;
    std::string key = echo_of(d);
    doc.command = "check " + key;
    njson out = njson::object();
    njson wits = njson::object();

    auto t0 = std::chrono::steady_clock::now();
    try {
        if (d.kind == "multiplicity") {
            const MapGerm& f = need_map(s, arg(d, 0));
            bool fin = is_finite(f);
            out["finite"] = fin;
            if (fin)
                out["multiplicity"] = multiplicity(f);
            else
                out["multiplicity"] = "undefined: germ is not finite";
        } else if (d.kind == "image") {
            const MapGerm& f = need_map(s, arg(d, 0));
            const IdealHandle& X = need_variety(s, arg(d, 1));
            IdealHandle img = image_ideal(f, X);
            out["image_generators"] = gens_json(img);
            out["image_smooth"] = smooth_json(is_smooth_germ(img));
        } else if (d.kind == "preimage-eq") {
            const MapGerm& f = need_map(s, arg(d, 0));
            const IdealHandle& X = need_variety(s, arg(d, 1));
            GermVerdict v = preimage_closure_equals(f, X);
            out["relation"] = relation_name(v.status);
            put_witness(wits, v);
        } else if (d.kind == "normal-form") {
            const MapGerm& f = need_map(s, arg(d, 0));
            const IdealHandle& X = need_variety(s, arg(d, 1));
            NormalFormResult r = normal_form_along_X(f, X);
            out["ok"] = r.ok;
            if (!r.ok) {
                out["failed_stage"] = stage_name(r.failed_stage);
                out["failure_note"] = r.failure_note;
                if (r.preimage_verdict.has_value())
                    out["preimage"] = relation_name(r.preimage_verdict->status);
            } else {
                njson gl = njson::array();
                for (const Poly& g : r.g) gl.push_back(render_poly(g));
                out["g"] = gl;
                out["multiplicity"] = r.multiplicity_value;
                out["image_smooth"] = smooth_json(r.image_smooth);
                out["structural_transversality"] = r.structural_transversality;
                if (r.final_map.has_value()) {
                    njson fm = njson::array();
                    for (const Poly& c : r.final_map->components) fm.push_back(render_poly(c));
                    out["final_map"] = fm;
                }
                if (r.image.has_value()) out["image_generators"] = gens_json(*r.image);
            }
        } else if (d.kind == "curve") {
            const MapGerm& f = need_map(s, arg(d, 0));
            const IdealHandle& X = need_variety(s, arg(d, 1));
            unsigned D = opt.D.value_or(16);
            CurveImageReport r = curve_image_decision(f, X, D);
            out["decision"] = curve_decision_name(r.decision);
            out["m"] = r.m;
            out["q"] = r.q;
        } else if (d.kind == "cr-profile") {
            const RealSubmanifold& M = need_manifold(s, arg(d, 0));
            out["generic"] = is_generic(M);
            CRProfile p = cr_profile(M);
            out["cr_dim_at_0"] = p.cr_dim_at_0;
            out["generic_cr_dim"] = p.generic_cr_dim;
            out["cr_at_0"] = p.is_cr_at_0;
        } else if (d.kind == "finite-type") {
            const RealSubmanifold& M = need_manifold(s, arg(d, 0));
            unsigned K = numeric_arg(d, 1, opt.K, 6);
            out = order_json(finite_type_check(M, K));
            out["bound_K"] = K;
        } else if (d.kind == "fnd") {
            const RealSubmanifold& M = need_manifold(s, arg(d, 0));
            unsigned K = numeric_arg(d, 1, opt.K, 6);
            out = order_json(finitely_nondegenerate_check(M, K));
            out["bound_K"] = K;
        } else if (d.kind == "transversal") {
            const MapGerm& f = need_map(s, arg(d, 0));
            const RealSubmanifold& M = need_manifold(s, arg(d, 1));
            MapGerm HH = complexify_map(f);
            ComplexifiedManifold CM = complexify_manifold(M);
            IdealHandle img = image_ideal(HH, CM.ideal);
            try {
                out["complexified_graph"] = transversal_at(HH, img);
            } catch (const error& e) {
                out["complexified_graph"] = std::string("inconclusive: ") + e.what();
            }
            std::string note;
            std::optional<RealSubmanifold> Mx = extract_real_defining(img, &note);
            if (Mx.has_value()) {
                out["real_tangent"] = real_transversal_check(f, *Mx);
                if (cr_profile(*Mx).is_cr_at_0)
                    out["holomorphic_tangent"] = cr_transversal_check(f, *Mx);
                else
                    out["holomorphic_tangent"] = "skipped: image is not CR at 0";
            } else {
                out["real_tangent"] = "skipped: " + note;
                out["holomorphic_tangent"] = "skipped: " + note;
            }
        } else if (d.kind == "condition-ii") {
            const MapGerm& f = need_map(s, arg(d, 0));
            const RealSubmanifold& M = need_manifold(s, arg(d, 1));
            GermVerdict v = complexified_preimage_equal(M, f);
            out["relation"] = relation_name(v.status);
            put_witness(wits, v);
        } else if (d.kind == "thm11") {
            const MapGerm& f = need_map(s, arg(d, 0));
            const RealSubmanifold& M = need_manifold(s, arg(d, 1));
            unsigned K = opt.K.value_or(6);
            ManifoldMapReport R = manifold_map_report(M, f, K);
            out = report_json(R, wits);
        } else if (d.kind == "explore-question") {
            uint64_t seed = opt.seed.value_or(std::stoull(arg(d, 0)));
            unsigned n = static_cast<unsigned>(std::stoul(arg(d, 1)));
            unsigned D = opt.D.value_or(2);
            ExploreReport R = explore_question(seed, n, D);
            out = explore_to_json(R);
        } else {
            throw error("unknown directive '" + d.kind + "'");
        }
    } catch (const error& e) {
        out = njson::object();
        out["error"] = e.what();
    }
    auto t1 = std::chrono::steady_clock::now();

    doc.verdicts[key] = out;
    if (!wits.empty()) doc.witnesses[key] = wits;
    doc.timings[key] =
        std::chrono::duration<double, std::milli>(t1 - t0).count();
    return doc;
}

ReportDocument run_session(const Session& s, const RunOptions& opt,
                           const std::string& command_echo) {
    ReportDocument doc;
    doc.command = command_echo;
    for (const CheckDirective& d : s.checks) {
        ReportDocument one = run_check(s, d, opt);
        for (auto& [k, v] : one.verdicts.items()) {
            std::string key = k;
            unsigned suffix = 2;
            while (doc.verdicts.contains(key)) key = k + " #" + std::to_string(suffix++);
            doc.verdicts[key] = v;
            if (one.witnesses.contains(k)) doc.witnesses[key] = one.witnesses[k];
            if (one.timings.contains(k)) doc.timings[key] = one.timings[k];
        }
    }
    return doc;
}

}  // namespace germcalc

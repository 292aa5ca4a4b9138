#include <random>

#include "germcalc/cli.hpp"

namespace germcalc {

namespace {

using njson = nlohmann::ordered_json;

// Deterministic small integers from the engine (distributions are not
// portable across standard libraries; modulo reduction is).
long pick(std::mt19937_64& rng, long lo, long hi) {
    return lo + static_cast<long>(rng() % static_cast<uint64_t>(hi - lo + 1));
}

Poly random_monomial(std::mt19937_64& rng, const VarContext& c, unsigned degree_bound) {
    unsigned total = static_cast<unsigned>(pick(rng, 1, degree_bound));
    Monomial m(c.size());
    for (unsigned k = 0; k < total; ++k) m.at(static_cast<size_t>(pick(rng, 0, 2))) += 1;
    long coeff = 0;
    while (coeff == 0) coeff = pick(rng, -2, 2);
    return Poly::term(c, m, Scalar(coeff));
}

/// A finite germ built from coordinate powers plus a few random terms; falls
/// back to the pure powers when the perturbed candidate is not finite.
MapGerm random_finite_map(std::mt19937_64& rng, const VarContext& src, const VarContext& tgt,
                          unsigned degree_bound) {
    for (int attempt = 0; attempt < 8; ++attempt) {
        std::vector<Poly> comps;
        for (size_t j = 0; j < 3; ++j) {
            unsigned e = static_cast<unsigned>(pick(rng, 1, 2));
            Poly c = Poly::variable(src, j).pow(e);
            if (pick(rng, 0, 1) == 1) c += random_monomial(rng, src, degree_bound);
            comps.push_back(c);
        }
        bool vanish = true;
        for (const Poly& c : comps) vanish = vanish && c.vanishes_at_zero();
        if (!vanish) continue;
        MapGerm f(src, tgt, comps);
        if (is_finite(f)) return f;
    }
    std::vector<Poly> comps;
    for (size_t j = 0; j < 3; ++j) comps.push_back(Poly::variable(src, j).pow(j == 0 ? 2 : 1));
    return MapGerm(src, tgt, comps);
}

njson curve_json(const CurveImageReport& r) {
    njson o = njson::object();
    o["decision"] = curve_decision_name(r.decision);
    o["m"] = r.m;
    o["q"] = r.q;
    return o;
}

}  // namespace

ExploreReport explore_question(uint64_t seed, unsigned n, unsigned degree_bound) {
    if (n == 0) throw error("explore_question: need at least one instance");
    if (degree_bound == 0) degree_bound = 2;
    ExploreReport rep;
    rep.seed = seed;
    rep.requested = n;
    rep.degree_bound = degree_bound;

    std::mt19937_64 rng(seed);
    VarContext src = VarContext::plain({"x", "y", "z"});
    VarContext tgt = VarContext::plain({"x_t", "y_t", "z_t"});
    Poly x = Poly::variable(src, 0), y = Poly::variable(src, 1), z = Poly::variable(src, 2);

    for (unsigned idx = 0; idx < n; ++idx) {
        MapGerm f = random_finite_map(rng, src, tgt, degree_bound);

        // Mostly hyperplanes (dim 2); occasionally a line (dim 1), which is
        // decided through the curve criterion instead.
        bool line = pick(rng, 0, 3) == 0;
        std::vector<Poly> xg;
        if (line) {
            xg = {y + x.scaled(Scalar(pick(rng, -2, 2))), z + x.scaled(Scalar(pick(rng, -2, 2)))};
        } else {
            xg = {x + y.scaled(Scalar(pick(rng, -2, 2))) + z.scaled(Scalar(pick(rng, -2, 2)))};
        }
        IdealHandle X(src, xg);

        ExploreInstance inst{f, X};
        inst.dim_X = line ? 1 : 2;
        inst.preimage = preimage_closure_equals(f, X);
        inst.jaccond = jaccond_check(f, X);

        if (line) {
            inst.note = "dim 1: routed through the curve-image decision";
            try {
                inst.curve_decision = curve_image_decision(f, X, 16);
            } catch (const error& e) {
                inst.note += std::string("; unavailable: ") + e.what();
            }
        } else {
            IdealHandle img = image_ideal(f, X);
            SmoothCertificate cert = is_smooth_germ(img);
            inst.image_smooth = cert;
            inst.candidate =
                inst.preimage.status == GermRelation::Equal && !inst.jaccond;
            if (inst.candidate) rep.candidates++;
            if (inst.jaccond && inst.preimage.status == GermRelation::Equal) {
                // With the Jacobian condition, preimage equality must force a
                // smooth image met transversally; anything else is a core bug.
                bool trans = false;
                std::string tnote;
                if (cert.status == SmoothStatus::Smooth) {
                    try {
                        trans = transversal_at(f, img);
                    } catch (const error& e) {
                        tnote = e.what();
                    }
                }
                if (cert.status != SmoothStatus::Smooth || !trans) {
                    rep.invariant_violations.push_back(
                        "instance " + std::to_string(idx) +
                        ": jacobian condition with preimage equality, but image smooth=" +
                        std::string(cert.status == SmoothStatus::Smooth ? "yes" : "no") +
                        " transversal=" + (trans ? "yes" : "no") +
                        (tnote.empty() ? "" : " (" + tnote + ")"));
                }
            }
        }
        rep.instances.push_back(std::move(inst));
    }
    return rep;
}

nlohmann::ordered_json explore_to_json(const ExploreReport& r) {
    njson o = njson::object();
    o["seed"] = r.seed;
    o["n"] = r.requested;
    o["degree_bound"] = r.degree_bound;
    njson arr = njson::array();
    for (const ExploreInstance& inst : r.instances) {
        njson e = njson::object();
        njson comps = njson::array();
        for (const Poly& c : inst.f.components) comps.push_back(render_poly(c));
        e["map"] = comps;
        njson gens = njson::array();
        for (const Poly& g : inst.X.generators()) gens.push_back(render_poly(g));
        e["X"] = gens;
        e["dim_X"] = inst.dim_X;
        e["preimage"] = relation_name(inst.preimage.status);
        e["jaccond"] = inst.jaccond;
        if (inst.image_smooth.has_value()) {
            njson sm = njson::object();
            sm["status"] = inst.image_smooth->status == SmoothStatus::Smooth ? "Smooth"
                                                                             : "Inconclusive";
            sm["jacobian_rank"] = inst.image_smooth->jac_rank;
            if (inst.image_smooth->status == SmoothStatus::Smooth)
                sm["codim"] = inst.image_smooth->codim;
            e["image_smooth"] = sm;
        }
        if (inst.curve_decision.has_value()) e["curve"] = curve_json(*inst.curve_decision);
        e["candidate_for_inspection"] = inst.candidate;
        if (!inst.note.empty()) e["note"] = inst.note;
        arr.push_back(e);
    }
    o["instances"] = arr;
    o["candidates"] = r.candidates;
    o["invariant_violations"] = r.invariant_violations;
    o["conclusion"] = r.invariant_violations.empty()
                          ? "no decidable implication violated; candidates (if any) need "
                            "human inspection and are not counterexample claims"
                          : "HARD FAILURE: decidable implication violated";
    return o;
}

}  // namespace germcalc

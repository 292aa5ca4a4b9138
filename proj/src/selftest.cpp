#include <algorithm>
#include <filesystem>
#include <fstream>
#include <random>
#include <sstream>

#include "germcalc/cli.hpp"
#include "germcalc/selftest.hpp"

namespace germcalc {

namespace {

namespace fs = std::filesystem;

std::string read_file(const fs::path& p) {
    std::ifstream in(p);
    if (!in) throw error("cannot read " + p.string());
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

Session load(const std::string& dir, const std::string& name) {
    return parse_session(read_file(fs::path(dir) / name));
}

/// Collects the first failed assertion of a criterion body.
struct Checker {
    bool ok = true;
    std::string detail;
    void require(bool cond, const std::string& what) {
        if (ok && !cond) {
            ok = false;
            detail = what;
        }
    }
};

template <typename F>
CriterionResult run_criterion(const std::string& name, F&& body) {
    CriterionResult r{name, false, ""};
    try {
        Checker c;
        body(c);
        r.pass = c.ok;
        r.detail = c.ok ? "ok" : c.detail;
    } catch (const std::exception& e) {
        r.pass = false;
        r.detail = std::string("exception: ") + e.what();
    }
    return r;
}

Poly var(const VarContext& c, size_t i) { return Poly::variable(c, i); }

bool local_member(const Poly& p, const IdealHandle& I) {
    return membership_with_cofactors(p, I, MonomialOrder::local()).has_value();
}

// Restrict a map to {y-block = 0} and measure the local quotient dimension of
// the ideal its components generate in the remaining variables.
std::optional<size_t> restricted_fiber_dim(const MapGerm& f, const std::vector<size_t>& y_slots) {
    std::vector<bool> is_y(f.source.size(), false);
    for (size_t s : y_slots) is_y[s] = true;
    std::vector<std::string> xnames;
    for (size_t v = 0; v < f.source.size(); ++v)
        if (!is_y[v]) xnames.push_back(f.source.name(v));
    VarContext xctx = VarContext::plain(xnames);
    std::vector<Poly> images;
    size_t at = 0;
    for (size_t v = 0; v < f.source.size(); ++v)
        images.push_back(is_y[v] ? Poly(xctx) : Poly::variable(xctx, at++));
    std::vector<Poly> gens;
    for (const Poly& comp : f.components) {
        Poly g = comp.compose(images);
        if (!g.is_zero()) gens.push_back(g);
    }
    return local_quotient_dim(IdealHandle(xctx, gens));
}

// -------------------------------------------------------------------------
// The criteria, in the order they are reported.

CriterionResult c_folded_line(const std::string& dir) {
    return run_criterion("folded-line image and preimage", [&](Checker& c) {
        Session s = load(dir, "fold_line.germ");
        const MapGerm& f = *s.find_map("f");
        const IdealHandle& X = *s.find_variety("X");
        IdealHandle img = image_ideal(f, X);
        IdealHandle axis(img.ctx(), {var(img.ctx(), 1)});
        c.require(germ_set_equal(img, axis).status == GermRelation::Equal,
                  "image must be the second-coordinate axis");
        GermVerdict v = preimage_closure_equals(f, X);
        c.require(v.status == GermRelation::StrictlyLarger,
                  "preimage of the image must be strictly larger");
        c.require(v.witness.has_value(), "strictness must carry a witness");
        IdealHandle zline(f.source, {var(f.source, 0)});
        IdealHandle P = pullback(f, img);
        const std::vector<Poly>& pg = P.generators();
        for (const Poly& g : pg)
            c.require(local_member(g, zline), "preimage must contain the z = 0 line");
        if (v.witness.has_value())
            c.require(!local_member(*v.witness, zline),
                      "witness must separate X from the extra line");
    });
}

CriterionResult c_squared_line(const std::string& dir) {
    return run_criterion("squared-line pipeline", [&](Checker& c) {
        Session s = load(dir, "squared_line.germ");
        const MapGerm& H = *s.find_map("H");
        const RealSubmanifold& M = *s.find_manifold("M");
        ManifoldMapReport R = manifold_map_report(M, H, 4);
        c.require(R.preimage.has_value() && R.preimage->status == GermRelation::Equal,
                  "complexified preimage must equal the complexified manifold");
        c.require(R.image_smooth.status == SmoothStatus::Smooth && R.image_smooth.codim == 2,
                  "complexified image must certify smooth of codimension 2");
        MapGerm HH = complexify_map(H);
        ComplexifiedManifold CM = complexify_manifold(M);
        c.require(!jaccond_check(HH, CM.ideal), "jacobian condition must fail");
        c.require(R.image_ideal_2n.has_value() && !transversal_at(HH, *R.image_ideal_2n),
                  "complexified map must fail transversality to its image");
        c.require(R.m_in_proper_subvariety.has_value() && *R.m_in_proper_subvariety,
                  "manifold must be flagged as inside a proper complex subvariety");
        c.require(R.subvariety_witness.has_value(), "subvariety flag must carry a witness");
        c.require(R.inconsistencies.empty(), "report must be internally consistent");
    });
}

CriterionResult c_two_order_model(const std::string& dir) {
    return run_criterion("two-order model pipeline", [&](Checker& c) {
        Session s = load(dir, "two_order_model.germ");
        const MapGerm& H = *s.find_map("H");
        const RealSubmanifold& M = *s.find_manifold("M");
        c.require(is_generic(M), "source manifold must be generic");
        OrderVerdict ft = finite_type_check(M, 4);
        c.require(ft.determined && ft.order <= 4, "finite type must be certified by order 4");
        ManifoldMapReport R = manifold_map_report(M, H, 4);
        c.require(R.preimage.has_value() && R.preimage->status == GermRelation::StrictlyLarger,
                  "complexified preimage must be strictly larger");
        c.require(R.image_cr.has_value() && !R.image_cr->is_cr_at_0,
                  "image manifold must fail to be CR at 0");
        MapGerm HH = complexify_map(H);
        ComplexifiedManifold CM = complexify_manifold(M);
        c.require(R.image_ideal_2n.has_value(), "image ideal must be computed");
        if (R.image_ideal_2n.has_value()) {
            const std::vector<Poly>& gens = R.image_ideal_2n->generators();
            for (const Poly& g : gens)
                c.require(local_member(g.compose(HH.components), CM.ideal),
                          "image relations must pull back into the manifold ideal");
        }
        c.require(R.inconsistencies.empty(), "report must be internally consistent");
    });
}

CriterionResult c_plane_fold(const std::string& dir) {
    return run_criterion("plane-fold pipeline", [&](Checker& c) {
        Session s = load(dir, "plane_fold.germ");
        const MapGerm& H = *s.find_map("H");
        const RealSubmanifold& M = *s.find_manifold("M");
        c.require(multiplicity(H) == 2, "multiplicity must be 2");
        GermVerdict v = complexified_preimage_equal(M, H);
        c.require(v.status == GermRelation::StrictlyLarger,
                  "complexified preimage must be strictly larger");
        ManifoldMapReport R = manifold_map_report(M, H, 3);
        c.require(R.image_cr.has_value() && !R.image_cr->is_cr_at_0,
                  "image manifold must fail to be CR at 0");
        c.require(R.image_generic.has_value() && !*R.image_generic,
                  "image manifold must fail to be generic");
        c.require(R.inconsistencies.empty(), "report must be internally consistent");
    });
}

CriterionResult c_flat_positive(const std::string& dir) {
    return run_criterion("flat positive pipeline", [&](Checker& c) {
        Session s = load(dir, "flat_fold.germ");
        const MapGerm& H = *s.find_map("H");
        const RealSubmanifold& M = *s.find_manifold("M");
        const IdealHandle& X = *s.find_variety("X");
        ManifoldMapReport R = manifold_map_report(M, H, 4);
        c.require(R.preimage.has_value() && R.preimage->status == GermRelation::Equal,
                  "complexified preimage must be equal");
        c.require(R.image_smooth.status == SmoothStatus::Smooth, "image must certify smooth");
        c.require(R.image_generic.has_value() && *R.image_generic, "image must be generic");
        c.require(R.real_transversal.has_value() && *R.real_transversal,
                  "real tangent transversality must hold");
        c.require(R.cr_transversal.has_value() && *R.cr_transversal,
                  "holomorphic tangent transversality must hold");
        c.require(R.mult.has_value() && *R.mult == 2, "multiplicity must be 2");
        c.require(R.jac_rank_at_0 == 1 && R.codim == 1 && R.rank_bound_ok,
                  "jacobian rank 1 must meet the codimension bound");
        c.require(R.inconsistencies.empty(), "report must be internally consistent");
        NormalFormResult nf = normal_form_along_X(H, X);
        c.require(nf.ok, "normal form along the line must succeed");
    });
}

CriterionResult c_multiplicity_battery(const std::string& dir) {
    return run_criterion("multiplicity battery", [&](Checker& c) {
        VarContext s2 = VarContext::plain({"z", "w"});
        VarContext t2 = VarContext::plain({"z_t", "w_t"});
        Poly z = var(s2, 0), w = var(s2, 1);
        c.require(multiplicity(MapGerm(s2, t2, {z * z, w * w * w})) == 6,
                  "(z^2, w^3) must have multiplicity 6");
        c.require(multiplicity(MapGerm(s2, t2, {z * z + w * w, z * w})) == 4,
                  "the fold must have multiplicity 4");
        VarContext s1 = VarContext::plain({"z"});
        VarContext t1 = VarContext::plain({"z_t"});
        Poly z1 = var(s1, 0);
        c.require(multiplicity(MapGerm(s1, t1, {z1 - z1 * z1})) == 1,
                  "a unit-times-coordinate must have multiplicity 1");

        // On maps where the block pipeline applies, the fiber dimension of
        // the restriction to the y = 0 slice equals the multiplicity.
        struct Case {
            std::string file, map, variety;
        };
        for (const Case& k : {Case{"flat_fold.germ", "H", "X"}, Case{"shear.germ", "f", "X"}}) {
            Session s = load(dir, k.file);
            const MapGerm& f = *s.find_map(k.map);
            const IdealHandle& X = *s.find_variety(k.variety);
            NormalFormResult nf = normal_form_along_X(f, X);
            c.require(nf.ok, k.file + ": pipeline hypotheses must hold");
            if (!nf.ok) continue;
            std::optional<size_t> dim = restricted_fiber_dim(f, nf.y_source);
            c.require(dim.has_value() && *dim == multiplicity(f),
                      k.file + ": restricted fiber dimension must equal the multiplicity");
        }
    });
}

CriterionResult c_shear_normal_form(const std::string& dir) {
    return run_criterion("shear normal form", [&](Checker& c) {
        Session s = load(dir, "shear.germ");
        const MapGerm& f = *s.find_map("f");
        const IdealHandle& X = *s.find_variety("X");
        NormalFormResult r = normal_form_along_X(f, X);
        c.require(r.ok, "pipeline must succeed");
        Poly xt = var(f.target, 0), yt = var(f.target, 1);
        c.require(r.g.size() == 1 && r.g[0] == xt * xt, "g must be the square of the xi slot");
        c.require(r.multiplicity_value == 1, "multiplicity must be 1");
        c.require(r.image.has_value() &&
                      germ_set_equal(*r.image, IdealHandle(f.target, {yt - xt * xt})).status ==
                          GermRelation::Equal,
                  "image must be the parabola in the target");
        c.require(r.image_smooth.status == SmoothStatus::Smooth, "image must certify smooth");
        c.require(r.structural_transversality, "structural transversality must hold");
        // Reconstruction: composing g with the xi-restriction recovers the
        // eta-restriction coefficient for coefficient.
        auto sp = BlockSplit::detect(f, {1});
        c.require(sp.has_value(), "block detection must succeed");
        if (sp.has_value()) {
            SplitMap sm = split_target(f, *sp);
            std::vector<Poly> gg = compute_g(sm);
            c.require(gg.size() == 1 && gg[0] == xt * xt, "compute_g must return the square");
            std::vector<Poly> images = {sm.R0[0], Poly(sm.R0[0].ctx())};
            c.require(gg[0].compose(images) == sm.S0[0],
                      "g composed with R0 must reproduce S0 exactly");
        }
    });
}

CriterionResult c_curve_decisions(const std::string& dir) {
    return run_criterion("curve image decisions", [&](Checker& c) {
        struct Want {
            std::string file;
            CurveDecision decision;
            unsigned m, q;
        };
        const std::vector<Want> wants = {
            {"even_curve.germ", CurveDecision::SmoothImage, 2, 2},
            {"cusp_curve.germ", CurveDecision::PreimageStrictlyLarger, 2, 1},
            {"cube_curve.germ", CurveDecision::SmoothImage, 3, 3},
        };
        for (const Want& w : wants) {
            Session s = load(dir, w.file);
            const MapGerm& f = *s.find_map("f");
            const IdealHandle& X = *s.find_variety("X");
            CurveImageReport r = curve_image_decision(f, X, 16);
            c.require(r.decision == w.decision, w.file + ": decision mismatch");
            c.require(r.m == w.m && r.q == w.q, w.file + ": (m, q) mismatch");
        }
        // Elimination cross-check on the strict case: the preimage of the
        // image of the cusp restriction picks up the branch w = -2 z^3.
        Session s = load(dir, "cusp_curve.germ");
        const MapGerm& f = *s.find_map("f");
        const IdealHandle& X = *s.find_variety("X");
        IdealHandle P = pullback(f, image_ideal(f, X));
        Poly z = var(f.source, 0), w = var(f.source, 1);
        IdealHandle branches(f.source, {w * (w + z * z * z * Poly::constant(f.source, Scalar(2)))});
        c.require(germ_set_equal(P, branches).status == GermRelation::Equal,
                  "preimage must split into the line and the branch w = -2 z^3");
    });
}

CriterionResult c_separating_function(const std::string&) {
    return run_criterion("separating function along curves", [&](Checker& c) {
        VarContext s = VarContext::plain({"z", "w"});
        VarContext t = VarContext::plain({"xi", "eta"});
        Poly z = var(s, 0), w = var(s, 1);
        IdealHandle X(s, {w});

        WeierstrassData wd = weierstrass_along_curve(MapGerm(s, t, {z * z, w}), X);
        Poly tt = var(wd.R.ctx(), 0), x = var(wd.R.ctx(), 1);
        c.require(wd.R == x * x - tt * tt, "fiber polynomial must be x^2 - t^2");
        SeparatingFunction sep = find_separating_function(MapGerm(s, t, {z * z, w}), X);
        c.require(sep.j == 2 && sep.c == Scalar(-1), "separating pair must be (2, -1)");

        MapGerm fold(s, t, {z * z + w * w, z * w});
        WeierstrassData wf = weierstrass_along_curve(fold, X);
        Poly tf = var(wf.R.ctx(), 0), xf = var(wf.R.ctx(), 1);
        c.require(wf.R == xf.pow(4) - tf * tf * xf * xf,
                  "fold fiber polynomial must be x^4 - t^2 x^2");
        c.require(wf.R.compose({tf, Poly(wf.R.ctx())}).is_zero(),
                  "x = 0 must be a persistent root, witnessing the hypothesis failure");
        bool threw = false;
        try {
            (void)find_separating_function(fold, X);
        } catch (const error&) {
            threw = true;
        }
        c.require(threw, "separating function must be refused without preimage equality");
    });
}

CriterionResult c_roots_of_unity(const std::string&) {
    return run_criterion("roots-of-unity coefficient bound", [&](Checker& c) {
        std::mt19937_64 rng(7);
        for (int trial = 0; trial < 200 && c.ok; ++trial) {
            unsigned q = 1 + static_cast<unsigned>(rng() % 6);
            unsigned p = q + static_cast<unsigned>(rng() % (6 - q + 1));
            std::vector<unsigned> exps;
            for (unsigned k = 0; k < p; ++k) exps.push_back(static_cast<unsigned>(rng() % q));
            unsigned j = roots_of_unity_coeff(exps, q);
            c.require(j >= 1 && j <= q,
                      "trial " + std::to_string(trial) + ": index must satisfy 1 <= j <= q");
            // Recompute the q-th power sum of the root multiset the long way:
            // every root is a q-th root of unity, so the sum must be exactly p.
            CycScalar dq(q, Scalar(0));
            for (unsigned e : exps) {
                CycScalar r = CycScalar::root_power(q, e);
                CycScalar pw(q, Scalar(1));
                for (unsigned k = 0; k < q; ++k) pw = pw * r;
                dq = dq + pw;
            }
            c.require(dq == CycScalar(q, Scalar(static_cast<long>(p))),
                      "trial " + std::to_string(trial) + ": q-th power sum must equal p");
        }
    });
}

CriterionResult c_newton_identities(const std::string&) {
    return run_criterion("newton identities and symmetric round trip", [&](Checker& c) {
        VarContext ctx = VarContext::plain({"w1", "w2", "w3"});
        Poly a1 = sym_express(power_sum(ctx, 1));
        Poly a2 = sym_express(power_sum(ctx, 2));
        Poly a3 = sym_express(power_sum(ctx, 3));
        const VarContext& cc = a1.ctx();
        Poly c1 = var(cc, 0), c2 = var(cc, 1), c3 = var(cc, 2);
        c.require(a1 == -c1, "p1 must equal -c1");
        c.require(a2 == c1 * c1 - c2.scaled(Scalar(2)), "p2 must equal c1^2 - 2 c2");
        c.require(a3 == -(c1 * c1 * c1) + (c1 * c2).scaled(Scalar(3)) - c3.scaled(Scalar(3)),
                  "p3 must equal -c1^3 + 3 c1 c2 - 3 c3");

        std::mt19937_64 rng(99);
        for (int trial = 0; trial < 50 && c.ok; ++trial) {
            size_t p = 2 + static_cast<size_t>(rng() % 4);  // 2..5 variables
            std::vector<std::string> names;
            for (size_t k = 0; k < p; ++k) names.push_back("w" + std::to_string(k + 1));
            VarContext wc = VarContext::plain(names);
            std::vector<Poly> cvals;
            for (unsigned i = 1; i <= p; ++i) {
                Poly e = elementary_symmetric(wc, i);
                cvals.push_back(i % 2 == 1 ? e.scaled(Scalar(-1)) : e);
            }
            Poly d = Poly::constant(wc, Scalar(0));
            for (int term = 0; term < 3; ++term) {
                long coeff = static_cast<long>(rng() % 9) - 4;
                Poly t = Poly::constant(wc, Scalar(coeff));
                unsigned degree_left = 5;
                for (unsigned i = 1; i <= p && degree_left >= i; ++i) {
                    unsigned reps = static_cast<unsigned>(rng() % 3);
                    for (unsigned rcount = 0; rcount < reps && degree_left >= i; ++rcount) {
                        t = t * elementary_symmetric(wc, i);
                        degree_left -= i;
                    }
                }
                d += t;
            }
            if (d.is_zero()) continue;
            c.require(is_symmetric(d), "trial " + std::to_string(trial) + ": d must be symmetric");
            Poly a = sym_express(d);
            c.require(a.compose(cvals) == d,
                      "trial " + std::to_string(trial) + ": round trip must be exact");
        }
    });
}

CriterionResult c_basis_engine(const std::string&) {
    return run_criterion("standard-basis engine random oracle", [&](Checker& c) {
        std::mt19937_64 rng(11);
        VarContext ctx = VarContext::plain({"x", "y", "z"});
        MonomialOrder ord = MonomialOrder::degrevlex();
        for (int trial = 0; trial < 100 && c.ok; ++trial) {
            size_t ngen = 1 + rng() % 3;
            std::vector<Poly> gens;
            for (size_t g = 0; g < ngen; ++g) {
                Poly p(ctx);
                size_t nterms = 1 + rng() % 4;
                for (size_t t = 0; t < nterms; ++t) {
                    Monomial m(3);
                    unsigned td = static_cast<unsigned>(rng() % 5);
                    for (unsigned k = 0; k < td; ++k) m.at(rng() % 3) += 1;
                    long coeff = static_cast<long>(rng() % 5) - 2;
                    if (coeff == 0) coeff = 1;
                    p += Poly::term(ctx, m, Scalar(coeff));
                }
                if (p.is_zero()) p = var(ctx, 0);
                gens.push_back(p);
            }
            IdealHandle I(ctx, gens);
            const std::vector<Poly>& gb = I.standard_basis(ord);
            c.require(is_standard_basis(gb, ord),
                      "trial " + std::to_string(trial) + ": S-polynomials must reduce to zero");

            // Membership is invariant under generator shuffling.
            Poly probe = gens[0] * var(ctx, 0) + (ngen > 1 ? gens[1] : Poly(ctx));
            std::vector<Poly> shuffled(gens.rbegin(), gens.rend());
            IdealHandle J(ctx, shuffled);
            bool in_i = membership_with_cofactors(probe, I, ord).has_value();
            bool in_j = membership_with_cofactors(probe, J, ord).has_value();
            c.require(in_i && in_i == in_j,
                      "trial " + std::to_string(trial) + ": membership must survive shuffling");
            Poly outside = var(ctx, 0) + Poly::constant(ctx, Scalar(1));
            bool out_i = membership_with_cofactors(outside, I, ord).has_value();
            bool out_j = membership_with_cofactors(outside, J, ord).has_value();
            c.require(out_i == out_j,
                      "trial " + std::to_string(trial) + ": non-membership must survive shuffling");

            // Elimination output avoids the dropped variable and lifts back.
            IdealHandle E = eliminate(I, {0});
            c.require(E.ctx().size() == 2 && E.ctx().name(0) == "y" && E.ctx().name(1) == "z",
                      "trial " + std::to_string(trial) + ": eliminated context must keep y, z");
            const std::vector<Poly>& egens = E.generators();
            std::vector<Poly> images = {var(ctx, 1), var(ctx, 2)};
            for (const Poly& g : egens) {
                Poly lift = g.compose(images);
                c.require(membership_with_cofactors(lift, I, ord).has_value(),
                          "trial " + std::to_string(trial) +
                              ": eliminated generators must lie in the ideal");
            }
        }
    });
}

CriterionResult c_watchdog(const std::string& dir) {
    return run_criterion("theorem consistency watchdog", [&](Checker& c) {
        std::vector<fs::path> files;
        for (const auto& e : fs::directory_iterator(dir))
            if (e.path().extension() == ".germ") files.push_back(e.path());
        std::sort(files.begin(), files.end());
        for (const fs::path& p : files) {
            Session s = parse_session(read_file(p));
            for (const auto& [mname, M] : s.manifolds)
                for (const auto& [hname, H] : s.maps) {
                    ManifoldMapReport R = manifold_map_report(M, H, 4);
                    c.require(R.inconsistencies.empty(),
                              p.filename().string() + ": report " + hname + "/" + mname +
                                  " flagged: " +
                                  (R.inconsistencies.empty() ? "" : R.inconsistencies.front()));
                }
            for (const auto& [vname, X] : s.varieties)
                for (const auto& [fname, f] : s.maps) {
                    if (!is_finite(f)) continue;
                    bool jc = jaccond_check(f, X);
                    GermVerdict v = preimage_closure_equals(f, X);
                    if (jc && v.status == GermRelation::Equal) {
                        IdealHandle img = image_ideal(f, X);
                        SmoothCertificate cert = is_smooth_germ(img);
                        c.require(cert.status == SmoothStatus::Smooth,
                                  p.filename().string() + ": " + fname + "/" + vname +
                                      " must have a smooth image under the jacobian condition");
                        if (cert.status == SmoothStatus::Smooth)
                            c.require(transversal_at(f, img),
                                      p.filename().string() + ": " + fname + "/" + vname +
                                          " must be transverse to its image");
                    }
                }
        }
        ExploreReport er = explore_question(5, 8, 2);
        c.require(er.invariant_violations.empty(),
                  er.invariant_violations.empty() ? "" : er.invariant_violations.front());
    });
}

}  // namespace

std::vector<CriterionResult> corpus_selftest(const std::string& corpus_dir) {
    if (corpus_dir.empty()) throw error("configuration error: empty corpus path");
    fs::path dir(corpus_dir);
    if (!fs::exists(dir) || !fs::is_directory(dir))
        throw error("configuration error: corpus directory not found: " + corpus_dir);
    bool any = false;
    for (const auto& e : fs::directory_iterator(dir))
        if (e.path().extension() == ".germ") any = true;
    if (!any)
        throw error("configuration error: no session files in corpus directory: " + corpus_dir);

    std::vector<CriterionResult> out;
    out.push_back(c_folded_line(corpus_dir));
    out.push_back(c_squared_line(corpus_dir));
    out.push_back(c_two_order_model(corpus_dir));
    out.push_back(c_plane_fold(corpus_dir));
    out.push_back(c_flat_positive(corpus_dir));
    out.push_back(c_multiplicity_battery(corpus_dir));
    out.push_back(c_shear_normal_form(corpus_dir));
    out.push_back(c_curve_decisions(corpus_dir));
    out.push_back(c_separating_function(corpus_dir));
    out.push_back(c_roots_of_unity(corpus_dir));
    out.push_back(c_newton_identities(corpus_dir));
    out.push_back(c_basis_engine(corpus_dir));
    out.push_back(c_watchdog(corpus_dir));
    return out;
}

}  // namespace germcalc

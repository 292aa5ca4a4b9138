#include "germcalc/germmap.hpp"

#include <algorithm>
#include <functional>
#include <map>

namespace germcalc {

namespace {

std::vector<size_t> complement(const std::vector<size_t>& chosen, size_t n) {
    std::vector<bool> in(n, false);
    for (size_t i : chosen) in.at(i) = true;
    std::vector<size_t> out;
    for (size_t i = 0; i < n; ++i)
        if (!in[i]) out.push_back(i);
    return out;
}

std::vector<size_t> sorted_unique(std::vector<size_t> v, size_t n, const char* what) {
    std::sort(v.begin(), v.end());
    if (std::adjacent_find(v.begin(), v.end()) != v.end())
        throw error(std::string(what) + ": repeated index");
    if (!v.empty() && v.back() >= n) throw error(std::string(what) + ": index out of range");
    return v;
}

// Substitute 0 for the listed variables.
Poly kill_vars(const Poly& p, const std::vector<size_t>& vars) {
    std::vector<bool> dead(p.ctx().size(), false);
    for (size_t v : vars) dead[v] = true;
    Poly r(p.ctx());
    for (const auto& [m, c] : p.terms()) {
        bool gone = false;
        for (size_t v = 0; v < dead.size(); ++v)
            if (dead[v] && m[v] > 0) {
                gone = true;
                break;
            }
        if (!gone) r.add_term(m, c);
    }
    return r;
}

// p, which vanishes when all y vars do, written as sum_l cof[l] * y_l; the
// division is by the variable monomials, so it is exact and deterministic.
std::vector<Poly> divide_by_vars(const Poly& p, const std::vector<size_t>& yvars) {
    std::vector<Poly> divisors;
    for (size_t v : yvars) divisors.push_back(Poly::variable(p.ctx(), v));
    DivisionResult d = divide(p, divisors, MonomialOrder::degrevlex());
    if (!d.remainder.is_zero())
        throw error("polynomial does not lie in the ideal of the y-variables");
    return d.cofactors;
}

}  // namespace

MapGerm::MapGerm(VarContext src, VarContext tgt, std::vector<Poly> comps)
    : source(std::move(src)), target(std::move(tgt)), components(std::move(comps)) {
    if (source.size() != target.size())
        throw error("map germ: source and target arity must agree");
    if (components.size() != target.size())
        throw error("map germ: one component per target variable required");
    for (const Poly& c : components) {
        if (!(c.ctx() == source)) throw error("map germ: component over a different context");
        if (!c.vanishes_at_zero()) throw error("map germ: components must vanish at 0");
    }
}

MapGerm MapGerm::identity(const VarContext& src, const VarContext& tgt) {
    std::vector<Poly> comps;
    for (size_t i = 0; i < src.size(); ++i) comps.push_back(Poly::variable(src, i));
    return MapGerm(src, tgt, std::move(comps));
}

IdealHandle MapGerm::component_ideal() const { return IdealHandle(source, components); }

Poly MapGerm::jacobian_det() const {
    size_t k = source.size();
    PolyMatrix j(k, std::vector<Poly>(k, Poly(source)));
    for (size_t i = 0; i < k; ++i)
        for (size_t v = 0; v < k; ++v) j[i][v] = components[i].derivative(v);
    return poly_det(j);
}

ScalarMatrix MapGerm::jacobian_at_zero() const {
    size_t k = source.size();
    ScalarMatrix j(k, std::vector<Scalar>(k, Scalar(0)));
    for (size_t i = 0; i < k; ++i)
        for (size_t v = 0; v < k; ++v) j[i][v] = components[i].derivative(v).constant_term();
    return j;
}

bool is_finite(const MapGerm& f) {
    return local_quotient_dim(f.component_ideal()).has_value();
}

size_t multiplicity(const MapGerm& f) {
    auto d = local_quotient_dim(f.component_ideal());
    if (!d) throw error("infinite multiplicity: the fiber over 0 is positive-dimensional");
    return *d;
}

bool jaccond_check(const MapGerm& f, const IdealHandle& X) {
    if (!(X.ctx() == f.source)) throw error("jaccond_check: X must live over the source");
    return !vanishes_on_germ(f.jacobian_det(), X);
}

IdealHandle image_ideal(const MapGerm& f, const IdealHandle& X) {
    if (!(X.ctx() == f.source)) throw error("image_ideal: X must live over the source");
    if (!is_finite(f)) throw error("image_ideal: the map germ is not finite");
    size_t k = f.source.size();
    // Joint context: (mangled) source names first so they can be eliminated,
    // then the target names verbatim (they survive into the result).
    std::vector<std::string> names;
    std::vector<std::string> tgt_names;
    for (size_t i = 0; i < k; ++i) tgt_names.push_back(f.target.name(i));
    for (size_t i = 0; i < k; ++i) {
        std::string n = f.source.name(i);
        while (std::find(tgt_names.begin(), tgt_names.end(), n) != tgt_names.end() ||
               std::find(names.begin(), names.end(), n) != names.end())
            n += "~";
        names.push_back(n);
    }
    for (auto& n : tgt_names) names.push_back(n);
    VarContext joint = VarContext::plain(names);
    std::vector<size_t> src_map(k);
    for (size_t i = 0; i < k; ++i) src_map[i] = i;
    std::vector<Poly> gens;
    for (size_t j = 0; j < k; ++j)
        gens.push_back(Poly::variable(joint, k + j) - reindex(f.components[j], joint, src_map));
    for (const Poly& g : X.generators()) gens.push_back(reindex(g, joint, src_map));
    std::vector<size_t> drop(k);
    for (size_t i = 0; i < k; ++i) drop[i] = i;
    IdealHandle elim = eliminate(IdealHandle(joint, gens), drop);
    std::vector<size_t> id_map(k);
    for (size_t i = 0; i < k; ++i) id_map[i] = i;
    std::vector<Poly> out;
    for (const Poly& g : elim.generators()) out.push_back(reindex(g, f.target, id_map));
    return IdealHandle(f.target, out);
}

IdealHandle pullback(const MapGerm& f, const IdealHandle& ideal_in_target) {
    if (ideal_in_target.ctx().size() != f.target.size())
        throw error("pullback: arity mismatch with the target");
    std::vector<Poly> out;
    for (const Poly& g : ideal_in_target.generators()) out.push_back(g.compose(f.components));
    return IdealHandle(f.source, out);
}

GermVerdict preimage_closure_equals(const MapGerm& f, const IdealHandle& X) {
    IdealHandle img = image_ideal(f, X);
    IdealHandle pre = pullback(f, img);
    return germ_set_equal(pre, X);
}

std::optional<BlockSplit> BlockSplit::detect(const MapGerm& f, std::vector<size_t> y_src) {
    size_t k = f.source.size();
    y_src = sorted_unique(std::move(y_src), k, "split");
    size_t q = y_src.size();
    ScalarMatrix dy(k, std::vector<Scalar>(q));
    for (size_t j = 0; j < k; ++j)
        for (size_t l = 0; l < q; ++l)
            dy[j][l] = f.components[j].derivative(y_src[l]).constant_term();
    std::vector<size_t> eta;
    ScalarMatrix chosen;
    for (size_t j = 0; j < k && eta.size() < q; ++j) {
        chosen.push_back(dy[j]);
        if (rank(chosen) == chosen.size())
            eta.push_back(j);
        else
            chosen.pop_back();
    }
    if (eta.size() < q) return std::nullopt;
    BlockSplit sp;
    sp.y_src = y_src;
    sp.x_src = complement(y_src, k);
    sp.eta_tgt = eta;
    sp.xi_tgt = complement(eta, k);
    return sp;
}

SplitMap split_target(const MapGerm& f, const BlockSplit& sp) {
    size_t k = f.source.size();
    size_t q = sp.y_src.size(), p = sp.x_src.size();
    if (p + q != k || sp.xi_tgt.size() != p || sp.eta_tgt.size() != q)
        throw error("split_target: malformed split");
    ScalarMatrix dy(k, std::vector<Scalar>(q));
    for (size_t j = 0; j < k; ++j)
        for (size_t l = 0; l < q; ++l)
            dy[j][l] = f.components[j].derivative(sp.y_src[l]).constant_term();
    ScalarMatrix e(q, std::vector<Scalar>(q));
    for (size_t l = 0; l < q; ++l) e[l] = dy[sp.eta_tgt[l]];
    auto einv = invert(e);
    if (!einv) throw error("split_target: dS/dy(0) is singular for the chosen eta-block");

    // Linear recombination T of the components: S rows normalize dS/dy(0) to
    // the identity, R rows subtract their y-differential through S.
    ScalarMatrix t(k, std::vector<Scalar>(k, Scalar(0)));
    for (size_t l = 0; l < q; ++l)
        for (size_t m = 0; m < q; ++m) t[sp.eta_tgt[l]][sp.eta_tgt[m]] = (*einv)[l][m];
    for (size_t a = 0; a < p; ++a) {
        size_t row = sp.xi_tgt[a];
        t[row][row] = Scalar(1);
        for (size_t m = 0; m < q; ++m) {
            Scalar c(0);
            for (size_t l = 0; l < q; ++l) c += dy[row][l] * (*einv)[l][m];
            t[row][sp.eta_tgt[m]] = -c;
        }
    }
    SplitMap sm;
    sm.split = sp;
    sm.source = f.source;
    sm.target = f.target;
    sm.target_change = t;
    std::vector<Poly> normalized(k, Poly(f.source));
    for (size_t i = 0; i < k; ++i)
        for (size_t j = 0; j < k; ++j)
            if (!t[i][j].is_zero()) normalized[i] += f.components[j].scaled(t[i][j]);
    for (size_t a = 0; a < p; ++a) sm.R.push_back(normalized[sp.xi_tgt[a]]);
    for (size_t l = 0; l < q; ++l) sm.S.push_back(normalized[sp.eta_tgt[l]]);
    for (size_t a = 0; a < p; ++a) sm.R0.push_back(kill_vars(sm.R[a], sp.y_src));
    for (size_t l = 0; l < q; ++l) sm.S0.push_back(kill_vars(sm.S[l], sp.y_src));
    for (size_t a = 0; a < p; ++a) {
        sm.R1.push_back(divide_by_vars(sm.R[a] - sm.R0[a], sp.y_src));
        for (const Poly& c : sm.R1.back())
            if (!c.vanishes_at_zero()) throw error("split_target: dR/dy(0) not normalized");
    }
    for (size_t l = 0; l < q; ++l) {
        Poly rest = sm.S[l] - Poly::variable(f.source, sp.y_src[l]) - sm.S0[l];
        sm.S1.push_back(divide_by_vars(rest, sp.y_src));
        for (const Poly& c : sm.S1.back())
            if (!c.vanishes_at_zero()) throw error("split_target: dS/dy(0) not the identity");
    }
    return sm;
}

std::optional<MembershipMatrices> coordinate_membership(const MapGerm& f, const BlockSplit& sp) {
    SplitMap sm;
    try {
        sm = split_target(f, sp);
    } catch (const error&) {
        return std::nullopt;
    }
    size_t p = sm.R.size(), q = sm.S.size();
    std::vector<Poly> gens = sm.R;
    gens.insert(gens.end(), sm.S.begin(), sm.S.end());
    IdealHandle ideal(f.source, gens);
    MembershipMatrices mm;
    mm.target_change = sm.target_change;
    mm.normalized_components.assign(f.source.size(), Poly(f.source));
    for (size_t a = 0; a < p; ++a) mm.normalized_components[sp.xi_tgt[a]] = sm.R[a];
    for (size_t l = 0; l < q; ++l) mm.normalized_components[sp.eta_tgt[l]] = sm.S[l];
    for (size_t l = 0; l < q; ++l) {
        Poly yl = Poly::variable(f.source, sp.y_src[l]);
        NormalFormCert nf = normal_form(yl, ideal, MonomialOrder::degrevlex());
        if (!nf.remainder.is_zero()) nf = normal_form(yl, ideal, MonomialOrder::local());
        if (!nf.remainder.is_zero()) return std::nullopt;
        Scalar u0 = nf.unit.constant_term();
        if (u0.is_zero()) return std::nullopt;
        Scalar scale = u0.inverse();
        std::vector<Poly> arow, brow;
        for (size_t a = 0; a < p; ++a) arow.push_back(nf.cofactors[a].scaled(scale));
        for (size_t m = 0; m < q; ++m) brow.push_back(nf.cofactors[p + m].scaled(scale));
        mm.A.push_back(std::move(arow));
        mm.B.push_back(std::move(brow));
        mm.units.push_back(nf.unit.scaled(scale));
    }
    for (size_t l = 0; l < q; ++l)
        for (size_t m = 0; m < q; ++m) {
            Scalar want(l == m ? 1 : 0);
            if (mm.B[l][m].constant_term() != want) return std::nullopt;
        }
    return mm;
}

std::vector<Poly> compute_g(const SplitMap& sm) {
    size_t p = sm.split.x_src.size(), q = sm.split.y_src.size();
    std::vector<std::string> xnames, xinames;
    for (size_t v : sm.split.x_src) xnames.push_back(sm.source.name(v));
    for (size_t v : sm.split.xi_tgt) xinames.push_back(sm.target.name(v));
    VarContext xctx = VarContext::plain(xnames);
    VarContext xictx = VarContext::plain(xinames);
    std::vector<size_t> to_x(sm.source.size(), (size_t)-1);
    for (size_t a = 0; a < p; ++a) to_x[sm.split.x_src[a]] = a;
    std::vector<Poly> r0x, s0x;
    for (const Poly& r : sm.R0) r0x.push_back(reindex(r, xctx, to_x));
    for (const Poly& s : sm.S0) s0x.push_back(reindex(s, xctx, to_x));

    std::vector<size_t> xi_embed(p);
    for (size_t a = 0; a < p; ++a) xi_embed[a] = sm.split.xi_tgt[a];
    auto embed = [&](const Poly& g) { return reindex(g, sm.target, xi_embed); };

    std::vector<Poly> out(q, Poly(sm.target));
    bool all_zero = true;
    for (const Poly& s : s0x) all_zero &= s.is_zero();
    if (all_zero) return out;

    auto m_local = local_quotient_dim(IdealHandle(xctx, r0x));
    if (!m_local) throw error("compute_g: R0 is not a finite map germ");

    auto verified = [&](const Poly& g, size_t l) {
        return g.compose(r0x) == s0x[l] && g.vanishes_at_zero();
    };

    // Trace of multiplication by S0 on the fiber module of R0, averaged.
    FiberAlgebra fa(xctx, r0x, xictx);
    if (fa.ok() && fa.rank() == *m_local) {
        bool good = true;
        std::vector<Poly> cand;
        for (size_t l = 0; l < q && good; ++l) {
            auto tr = fa.trace_of(s0x[l]);
            if (!tr) {
                good = false;
                break;
            }
            Poly g = tr->scaled(Scalar::fraction(1, (long)fa.rank()));
            if (!verified(g, l)) good = false;
            cand.push_back(g);
        }
        if (good) {
            for (size_t l = 0; l < q; ++l) out[l] = embed(cand[l]);
            return out;
        }
    }

    // Coefficient solve: g_l = sum over monomials xi^alpha, |alpha| <= d.
    for (size_t l = 0; l < q; ++l) {
        if (s0x[l].is_zero()) continue;
        unsigned dmax = (unsigned)std::max(1, s0x[l].total_degree());
        std::optional<Poly> found;
        for (unsigned d = 1; d <= dmax && !found; ++d) {
            std::vector<Monomial> alphas;
            std::vector<uint32_t> e(p, 0);
            // All exponent vectors with |alpha| <= d, nonzero, in lex order.
            std::function<void(size_t, unsigned)> gen = [&](size_t pos, unsigned left) {
                if (pos == p) {
                    Monomial m(p);
                    bool nz = false;
                    for (size_t i = 0; i < p; ++i) {
                        m.at(i) = e[i];
                        nz |= e[i] > 0;
                    }
                    if (nz) alphas.push_back(m);
                    return;
                }
                for (uint32_t v = 0; v <= left; ++v) {
                    e[pos] = v;
                    gen(pos + 1, left - v);
                }
                e[pos] = 0;
            };
            gen(0, d);
            std::vector<Poly> basis;
            for (const Monomial& a : alphas) {
                Poly prod = Poly::constant(xctx, Scalar(1));
                for (size_t i = 0; i < p; ++i)
                    if (a[i] > 0) prod = prod * r0x[i].pow(a[i]);
                basis.push_back(prod);
            }
            std::map<Monomial, size_t, MonoLexLess> rows;
            auto row_of = [&](const Monomial& m) {
                auto it = rows.find(m);
                if (it == rows.end()) it = rows.emplace(m, rows.size()).first;
                return it->second;
            };
            for (const Poly& b : basis)
                for (const auto& [m, c] : b.terms()) row_of(m);
            for (const auto& [m, c] : s0x[l].terms()) row_of(m);
            ScalarMatrix sys(rows.size(), std::vector<Scalar>(alphas.size(), Scalar(0)));
            std::vector<Scalar> rhs(rows.size(), Scalar(0));
            for (size_t j = 0; j < basis.size(); ++j)
                for (const auto& [m, c] : basis[j].terms()) sys[row_of(m)][j] = c;
            for (const auto& [m, c] : s0x[l].terms()) rhs[row_of(m)] = c;
            auto sol = solve(sys, rhs);
            if (!sol) continue;
            Poly g(xictx);
            for (size_t j = 0; j < alphas.size(); ++j)
                if (!(*sol)[j].is_zero()) g.add_term(alphas[j], (*sol)[j]);
            if (verified(g, l)) found = g;
        }
        if (!found) throw error("compute_g: S0 component does not factor through R0");
        out[l] = embed(*found);
    }
    return out;
}

std::optional<Straightening> straighten_linear(const IdealHandle& X, size_t expected_codim) {
    const VarContext& ctx = X.ctx();
    size_t n = ctx.size();
    ScalarMatrix lin;
    for (const Poly& g : X.generators()) lin.push_back(g.linear_part());
    if (lin.empty()) lin.push_back(std::vector<Scalar>(n, Scalar(0)));
    std::vector<size_t> pivots = rref(lin);
    if (pivots.size() != expected_codim) return std::nullopt;

    Straightening st;
    st.y_src = pivots;
    st.C.assign(n, std::vector<Scalar>(n, Scalar(0)));
    std::vector<bool> is_pivot(n, false);
    for (size_t c : pivots) is_pivot[c] = true;
    for (size_t j = 0, r = 0; j < n; ++j) {
        if (is_pivot[j]) {
            st.C[j] = lin[r];
            ++r;
        } else {
            st.C[j][j] = Scalar(1);
        }
    }
    auto cinv = invert(st.C);
    if (!cinv) return std::nullopt;
    st.Cinv = *cinv;
    // x_i = sum_j Cinv[i][j] u_j, substituted into the generators.
    std::vector<Poly> values;
    for (size_t i = 0; i < n; ++i) {
        Poly v(ctx);
        for (size_t j = 0; j < n; ++j)
            if (!st.Cinv[i][j].is_zero())
                v += Poly::variable(ctx, j).scaled(st.Cinv[i][j]);
        values.push_back(v);
    }
    for (const Poly& g : X.generators()) st.new_gens.push_back(g.compose(values));
    GermVerdict v = germ_set_equal(IdealHandle(ctx, st.new_gens),
                                   coordinate_subspace_ideal(ctx, st.y_src));
    if (v.status != GermRelation::Equal) return std::nullopt;
    return st;
}

const char* stage_name(PipelineStage s) {
    switch (s) {
        case PipelineStage::SmoothX: return "smoothness of X";
        case PipelineStage::Straighten: return "straightening of X";
        case PipelineStage::Jacobian: return "Jacobian condition";
        case PipelineStage::Preimage: return "preimage equality";
        case PipelineStage::Membership: return "coordinate membership";
        case PipelineStage::GFormula: return "fiber-average construction";
        case PipelineStage::Final: return "final shape verification";
    }
    return "?";
}

NormalFormResult normal_form_along_X(const MapGerm& f, const IdealHandle& X) {
    NormalFormResult nf;
    auto fail = [&](PipelineStage s, std::string note) {
        nf.ok = false;
        nf.failed_stage = s;
        nf.failure_note = std::move(note);
        return nf;
    };

    SmoothCertificate sc = is_smooth_germ(X);
    if (sc.status != SmoothStatus::Smooth)
        return fail(PipelineStage::SmoothX,
                    sc.note.empty() ? "X is not certified smooth at 0" : sc.note);
    size_t q = sc.codim;

    auto st = straighten_linear(X, q);
    if (!st)
        return fail(PipelineStage::Straighten,
                    "no certified linear straightening of X onto a coordinate subspace");
    size_t k = f.source.size();
    std::vector<Poly> u_values(k, Poly(f.source));
    for (size_t i = 0; i < k; ++i)
        for (size_t j = 0; j < k; ++j)
            if (!st->Cinv[i][j].is_zero())
                u_values[i] += Poly::variable(f.source, j).scaled(st->Cinv[i][j]);
    std::vector<Poly> comps;
    for (const Poly& c : f.components) comps.push_back(c.compose(u_values));
    MapGerm fs(f.source, f.target, comps);
    IdealHandle xcoord = coordinate_subspace_ideal(f.source, st->y_src);

    if (!is_finite(fs)) return fail(PipelineStage::Preimage, "the map germ is not finite");

    if (!jaccond_check(fs, xcoord))
        return fail(PipelineStage::Jacobian,
                    "the Jacobian determinant vanishes identically on X");

    IdealHandle img = image_ideal(fs, xcoord);
    GermVerdict v = germ_set_equal(pullback(fs, img), xcoord);
    nf.preimage_verdict = v;
    if (v.status != GermRelation::Equal) {
        std::string note = std::string("preimage of the image is ") + relation_name(v.status);
        if (v.witness) note += "; witness " + v.witness->str();
        return fail(PipelineStage::Preimage, note);
    }

    auto sp = BlockSplit::detect(fs, st->y_src);
    if (!sp)
        return fail(PipelineStage::Membership,
                    "d f/d y(0) has rank below the codimension of X");
    auto mm = coordinate_membership(fs, *sp);
    if (!mm)
        return fail(PipelineStage::Membership,
                    "some y-coordinate is not in the ideal of the map components");

    SplitMap sm = split_target(fs, *sp);
    std::vector<Poly> g;
    try {
        g = compute_g(sm);
    } catch (const error& e) {
        return fail(PipelineStage::GFormula, e.what());
    }

    nf.y_source = st->y_src;
    nf.eta_target = sp->eta_tgt;
    nf.source_change = st->C;
    nf.g = g;

    // New target coordinates expressed in the old ones: first the linear
    // recombination T, then eta' = eta - g(xi).
    std::vector<Poly> lin(k, Poly(f.target));
    for (size_t i = 0; i < k; ++i)
        for (size_t j = 0; j < k; ++j)
            if (!sm.target_change[i][j].is_zero())
                lin[i] += Poly::variable(f.target, j).scaled(sm.target_change[i][j]);
    std::vector<Poly> xi_forms;
    for (size_t a = 0; a < sp->xi_tgt.size(); ++a) xi_forms.push_back(lin[sp->xi_tgt[a]]);
    nf.target_change.assign(k, Poly(f.target));
    for (size_t a = 0; a < sp->xi_tgt.size(); ++a) nf.target_change[sp->xi_tgt[a]] = lin[sp->xi_tgt[a]];
    for (size_t l = 0; l < q; ++l) {
        // g[l] lives over the target using the xi slots; rewrite it in the old
        // coordinates by substituting the xi linear forms.
        std::vector<Poly> values(k, Poly(f.target));
        for (size_t a = 0; a < sp->xi_tgt.size(); ++a) values[sp->xi_tgt[a]] = xi_forms[a];
        nf.target_change[sp->eta_tgt[l]] = lin[sp->eta_tgt[l]] - g[l].compose(values);
    }

    std::vector<Poly> final_comps;
    for (size_t i = 0; i < k; ++i) final_comps.push_back(nf.target_change[i].compose(fs.components));
    nf.final_map = MapGerm(f.source, f.target, final_comps);

    bool structural = true;
    for (size_t l = 0; l < q && structural; ++l) {
        Poly rest = final_comps[sp->eta_tgt[l]] - Poly::variable(f.source, st->y_src[l]);
        try {
            for (const Poly& c : divide_by_vars(rest, st->y_src))
                if (!c.vanishes_at_zero()) structural = false;
        } catch (const error&) {
            structural = false;
        }
    }
    if (!structural)
        return fail(PipelineStage::Final, "normalized eta'-block is not y + O(2) y");
    nf.structural_transversality = true;

    std::vector<Poly> image_gens;
    for (size_t l = 0; l < q; ++l) image_gens.push_back(nf.target_change[sp->eta_tgt[l]]);
    nf.image = IdealHandle(f.target, image_gens);
    nf.image_smooth = is_smooth_germ(*nf.image);
    if (nf.image_smooth.status != SmoothStatus::Smooth || nf.image_smooth.codim != q)
        return fail(PipelineStage::Final, "image germ failed its smoothness certificate");
    GermVerdict img_check = germ_set_equal(*nf.image, img);
    if (img_check.status != GermRelation::Equal)
        return fail(PipelineStage::Final,
                    "eta' subspace disagrees with the eliminated image ideal");

    nf.multiplicity_value = multiplicity(f);
    nf.ok = true;
    return nf;
}

bool transversal_at(const MapGerm& f, const IdealHandle& W) {
    if (!(W.ctx() == f.target)) throw error("transversal_at: W must live over the target");
    SmoothCertificate sc = is_smooth_germ(W);
    if (sc.status != SmoothStatus::Smooth)
        throw error("transversal_at: W is not certified smooth at 0");
    size_t k = f.target.size();
    ScalarMatrix lin;
    for (const Poly& g : W.generators()) lin.push_back(g.linear_part());
    if (lin.empty()) lin.push_back(std::vector<Scalar>(k, Scalar(0)));
    std::vector<std::vector<Scalar>> tangent = kernel_basis(lin);
    ScalarMatrix span = tangent;
    ScalarMatrix df = f.jacobian_at_zero();
    for (size_t col = 0; col < f.source.size(); ++col) {
        std::vector<Scalar> v(k);
        for (size_t row = 0; row < k; ++row) v[row] = df[row][col];
        span.push_back(std::move(v));
    }
    return rank(span) == k;
}

}  // namespace germcalc

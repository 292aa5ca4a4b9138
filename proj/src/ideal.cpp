#include "germcalc/ideal.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <set>

#include "germcalc/linalg.hpp"

namespace germcalc {

// ---------------------------------------------------------------------------
// IdealHandle

struct IdealHandle::Impl {
    VarContext ctx;
    std::vector<Poly> gens;
    std::mutex mu;
    std::map<std::string, std::vector<Poly>> basis_cache;
    std::map<std::string, TrackedBasis> tracked_cache;
};

IdealHandle::IdealHandle(VarContext ctx, std::vector<Poly> gens)
    : impl_(std::make_shared<Impl>()) {
    impl_->ctx = std::move(ctx);
    for (auto& g : gens) {
        if (g.is_zero()) continue;
        if (g.ctx() != impl_->ctx) throw error("IdealHandle: generator context mismatch");
        impl_->gens.push_back(std::move(g));
    }
}

const VarContext& IdealHandle::ctx() const { return impl_->ctx; }
const std::vector<Poly>& IdealHandle::generators() const { return impl_->gens; }

const std::vector<Poly>& IdealHandle::standard_basis(const MonomialOrder& ord) const {
    std::lock_guard<std::mutex> lock(impl_->mu);
    auto it = impl_->basis_cache.find(ord.key());
    if (it == impl_->basis_cache.end())
        it = impl_->basis_cache.emplace(ord.key(), standard_basis_of(impl_->gens, ord)).first;
    return it->second;
}

const TrackedBasis& IdealHandle::tracked_basis(const MonomialOrder& ord) const {
    std::lock_guard<std::mutex> lock(impl_->mu);
    auto it = impl_->tracked_cache.find(ord.key());
    if (it == impl_->tracked_cache.end())
        it = impl_->tracked_cache.emplace(ord.key(), tracked_standard_basis_of(impl_->gens, ord))
                 .first;
    return it->second;
}

// ---------------------------------------------------------------------------
// Buchberger / Mora engine

namespace {

struct PairKey {
    unsigned lcm_deg;
    size_t i, j;
    bool operator<(const PairKey& o) const {
        if (lcm_deg != o.lcm_deg) return lcm_deg < o.lcm_deg;
        if (i != o.i) return i < o.i;
        return j < o.j;
    }
};

// Shared Buchberger loop; `track` selects provenance bookkeeping.
TrackedBasis engine(const std::vector<Poly>& gens_in, const MonomialOrder& ord, bool track) {
    TrackedBasis out;
    std::vector<Poly> gens;
    for (const auto& g : gens_in)
        if (!g.is_zero()) gens.push_back(g);
    if (gens.empty()) return out;
    const VarContext& ctx = gens[0].ctx();
    size_t ngen = gens.size();

    std::vector<Poly>& G = out.elems;
    std::vector<std::vector<Poly>>& rep = out.rep;
    std::vector<Monomial> lms;

    auto push_elem = [&](Poly p, std::vector<Poly> r) {
        Scalar lc = p.leading_term(ord).second;
        if (!lc.is_one()) {
            Scalar inv = lc.inverse();
            p = p.scaled(inv);
            if (track)
                for (auto& x : r) x = x.scaled(inv);
        }
        lms.push_back(p.leading_monomial(ord));
        G.push_back(std::move(p));
        if (track) rep.push_back(std::move(r));
    };

    for (size_t j = 0; j < ngen; ++j) {
        std::vector<Poly> r;
        if (track) {
            r.assign(ngen, Poly(ctx));
            r[j] = Poly::constant(ctx, Scalar(1));
        }
        push_elem(gens[j], std::move(r));
    }

    std::set<PairKey> queue;
    std::set<std::pair<size_t, size_t>> done;
    auto add_pairs_for = [&](size_t n) {
        for (size_t i = 0; i < n; ++i)
            queue.insert({Monomial::lcm(lms[i], lms[n]).total_degree(), i, n});
    };
    for (size_t n = 1; n < G.size(); ++n) add_pairs_for(n);

    while (!queue.empty()) {
        PairKey pk = *queue.begin();
        queue.erase(queue.begin());
        size_t i = pk.i, j = pk.j;
        done.insert({i, j});
        Monomial lcm = Monomial::lcm(lms[i], lms[j]);
        // Product criterion.
        if (lcm == lms[i] * lms[j]) continue;
        // Chain criterion: some k with LM_k | lcm and both (i,k), (j,k) done.
        bool skip = false;
        for (size_t k = 0; k < G.size() && !skip; ++k) {
            if (k == i || k == j || !lms[k].divides(lcm)) continue;
            auto key1 = std::minmax(i, k), key2 = std::minmax(j, k);
            if (done.count({key1.first, key1.second}) && done.count({key2.first, key2.second}))
                skip = true;
        }
        if (skip) continue;

        Monomial mi = lcm.quotient_by(lms[i]);
        Monomial mj = lcm.quotient_by(lms[j]);
        Poly s = G[i].times_term(mi, Scalar(1)) - G[j].times_term(mj, Scalar(1));
        if (s.is_zero()) continue;
        if (track) {
            DivisionResult d = divide(s, G, ord);
            if (d.remainder.is_zero()) continue;
            // remainder = unit*s - sum cof_t * G_t, all polynomial.
            std::vector<Poly> r(ngen, Poly(ctx));
            for (size_t t = 0; t < ngen; ++t) {
                r[t] = d.unit * (rep[i][t].times_term(mi, Scalar(1)) -
                                 rep[j][t].times_term(mj, Scalar(1)));
            }
            for (size_t t = 0; t < G.size(); ++t) {
                if (d.cofactors[t].is_zero()) continue;
                for (size_t u = 0; u < ngen; ++u) r[u] -= d.cofactors[t] * rep[t][u];
            }
            push_elem(d.remainder, std::move(r));
        } else {
            Poly r = reduce_only(s, G, ord);
            if (r.is_zero()) continue;
            push_elem(std::move(r), {});
        }
        add_pairs_for(G.size() - 1);
    }

    // Minimalize: drop elements whose leading monomial is divisible by
    // another kept element's.
    std::vector<bool> keep(G.size(), true);
    for (size_t a = 0; a < G.size(); ++a) {
        if (!keep[a]) continue;
        for (size_t b = 0; b < G.size(); ++b) {
            if (a == b || !keep[b]) continue;
            if (lms[b].divides(lms[a]) && (lms[b] != lms[a] || b < a)) {
                keep[a] = false;
                break;
            }
        }
    }
    TrackedBasis mini;
    for (size_t a = 0; a < G.size(); ++a) {
        if (!keep[a]) continue;
        mini.elems.push_back(std::move(G[a]));
        if (track) mini.rep.push_back(std::move(rep[a]));
    }

    // Global orders: tail reduction to the unique reduced basis.
    if (ord.is_global() && mini.elems.size() > 1) {
        bool changed = true;
        int guard = 0;
        while (changed) {
            if (++guard > 100) throw error("standard_basis: tail reduction did not stabilize");
            changed = false;
            for (size_t a = 0; a < mini.elems.size(); ++a) {
                std::vector<Poly> others;
                std::vector<size_t> oidx;
                for (size_t b = 0; b < mini.elems.size(); ++b)
                    if (b != a) {
                        others.push_back(mini.elems[b]);
                        oidx.push_back(b);
                    }
                if (track) {
                    DivisionResult d = divide(mini.elems[a], others, ord);
                    if (d.remainder == mini.elems[a]) continue;
                    std::vector<Poly> r = mini.rep[a];
                    for (size_t t = 0; t < others.size(); ++t) {
                        if (d.cofactors[t].is_zero()) continue;
                        for (size_t u = 0; u < r.size(); ++u)
                            r[u] -= d.cofactors[t] * mini.rep[oidx[t]][u];
                    }
                    mini.elems[a] = d.remainder;
                    mini.rep[a] = std::move(r);
                    changed = true;
                } else {
                    Poly r = reduce_only(mini.elems[a], others, ord);
                    if (r == mini.elems[a]) continue;
                    mini.elems[a] = std::move(r);
                    changed = true;
                }
            }
        }
    }

    // Deterministic final sort: by leading monomial, largest first.
    std::vector<size_t> perm(mini.elems.size());
    for (size_t a = 0; a < perm.size(); ++a) perm[a] = a;
    std::sort(perm.begin(), perm.end(), [&](size_t a, size_t b) {
        int c = ord.compare(mini.elems[a].leading_monomial(ord),
                            mini.elems[b].leading_monomial(ord));
        if (c != 0) return c > 0;
        return compare_polys(mini.elems[a], mini.elems[b]) > 0;
    });
    TrackedBasis res;
    for (size_t a : perm) {
        res.elems.push_back(std::move(mini.elems[a]));
        if (track) res.rep.push_back(std::move(mini.rep[a]));
    }
    return res;
}

}  // namespace

std::vector<Poly> standard_basis_of(const std::vector<Poly>& gens, const MonomialOrder& ord) {
    return engine(gens, ord, false).elems;
}

TrackedBasis tracked_standard_basis_of(const std::vector<Poly>& gens, const MonomialOrder& ord) {
    return engine(gens, ord, true);
}

bool is_standard_basis(const std::vector<Poly>& basis, const MonomialOrder& ord) {
    for (size_t i = 0; i < basis.size(); ++i)
        for (size_t j = i + 1; j < basis.size(); ++j) {
            Monomial li = basis[i].leading_monomial(ord);
            Monomial lj = basis[j].leading_monomial(ord);
            Monomial lcm = Monomial::lcm(li, lj);
            Poly s = basis[i]
                         .times_term(lcm.quotient_by(li),
                                     basis[i].leading_term(ord).second.inverse())
                     - basis[j].times_term(lcm.quotient_by(lj),
                                           basis[j].leading_term(ord).second.inverse());
            if (!reduce_only(s, basis, ord).is_zero()) return false;
        }
    return true;
}

// ---------------------------------------------------------------------------
// Elimination

IdealHandle eliminate(const IdealHandle& ideal, const std::vector<size_t>& drop_in) {
    const VarContext& ctx = ideal.ctx();
    std::vector<size_t> drop = drop_in;
    std::sort(drop.begin(), drop.end());
    drop.erase(std::unique(drop.begin(), drop.end()), drop.end());
    for (size_t v : drop)
        if (v >= ctx.size()) throw error("eliminate: variable index out of range");
    if (drop.empty()) return ideal;
    if (drop.size() == ctx.size()) throw error("eliminate: cannot drop all variables");

    // A dropped variable that occurs linearly with a constant coefficient can
    // be solved for and substituted away before any basis computation: if
    // g = c*x + r with c a nonzero constant and r free of x, mapping x to
    // -r/c is the quotient by g on the remaining generators, so the
    // elimination ideal is unchanged and the basis computation that follows
    // sees fewer effective variables.
    std::vector<Poly> work = ideal.generators();
    {
        std::vector<size_t> active = drop;
        bool changed = true;
        while (changed) {
            changed = false;
            for (size_t gi = 0; gi < work.size() && !changed; ++gi) {
                for (size_t ai = 0; ai < active.size() && !changed; ++ai) {
                    size_t x = active[ai];
                    unsigned degx = 0;
                    for (const auto& [m, co] : work[gi].terms()) {
                        unsigned e = static_cast<unsigned>(m[x]);
                        if (e > degx) degx = e;
                    }
                    if (degx != 1) continue;
                    Poly dg = work[gi].derivative(x);
                    if (!dg.is_constant()) continue;
                    Scalar c = dg.constant_term();
                    if (c.is_zero()) continue;
                    std::vector<Poly> images;
                    images.reserve(ctx.size());
                    for (size_t v = 0; v < ctx.size(); ++v)
                        images.push_back(Poly::variable(ctx, v));
                    images[x] = Poly::variable(ctx, x) - work[gi].scaled(c.inverse());
                    std::vector<Poly> next;
                    for (size_t gj = 0; gj < work.size(); ++gj) {
                        if (gj == gi) continue;
                        Poly h = work[gj].compose(images);
                        if (!h.is_zero()) next.push_back(std::move(h));
                    }
                    work = std::move(next);
                    active.erase(active.begin() + ai);
                    changed = true;
                }
            }
        }
    }
    bool any_dropped_left = false;
    for (const auto& g : work) {
        for (const auto& [m, co] : g.terms()) {
            for (size_t v : drop)
                if (m[v] != 0) {
                    any_dropped_left = true;
                    break;
                }
            if (any_dropped_left) break;
        }
        if (any_dropped_left) break;
    }
    std::vector<Poly> gb;
    if (any_dropped_left) {
        MonomialOrder ord = MonomialOrder::block(drop);
        IdealHandle sub(ctx, work);
        gb = sub.standard_basis(ord);
    } else {
        gb = std::move(work);
    }

    std::vector<bool> dropped(ctx.size(), false);
    for (size_t v : drop) dropped[v] = true;
    std::vector<size_t> kept;
    for (size_t v = 0; v < ctx.size(); ++v)
        if (!dropped[v]) kept.push_back(v);

    // Result context; preserve pairing when the kept half-lists line up.
    std::vector<std::string> names;
    for (size_t v : kept) names.push_back(ctx.name(v));
    bool paired_ok = false;
    if (ctx.is_paired() && kept.size() % 2 == 0) {
        size_t half = kept.size() / 2;
        paired_ok = true;
        for (size_t a = 0; a < half && paired_ok; ++a)
            if (ctx.partner(kept[a]) != kept[a + half]) paired_ok = false;
    }
    VarContext new_ctx = paired_ok ? VarContext::paired_explicit(names)
                                   : VarContext::plain(names);

    std::vector<size_t> var_map(ctx.size(), SIZE_MAX);
    for (size_t a = 0; a < kept.size(); ++a) var_map[kept[a]] = a;

    std::vector<Poly> out_gens;
    for (const auto& g : gb) {
        bool uses_dropped = false;
        for (const auto& [m, c] : g.terms()) {
            for (size_t v : drop)
                if (m[v] != 0) {
                    uses_dropped = true;
                    break;
                }
            if (uses_dropped) break;
        }
        if (uses_dropped) continue;
        out_gens.push_back(reindex(g, new_ctx, var_map));
    }
    return IdealHandle(new_ctx, std::move(out_gens));
}

// ---------------------------------------------------------------------------
// Memberships

NormalFormCert normal_form(const Poly& p, const IdealHandle& ideal, const MonomialOrder& ord) {
    if (p.ctx() != ideal.ctx()) throw error("normal_form: context mismatch");
    const VarContext& ctx = ideal.ctx();
    size_t ngen = ideal.generators().size();
    if (ngen == 0)
        return {p, {}, Poly::constant(ctx, Scalar(1))};
    const TrackedBasis& tb = ideal.tracked_basis(ord);
    DivisionResult d = divide(p, tb.elems, ord);
    NormalFormCert cert{d.remainder, std::vector<Poly>(ngen, Poly(ctx)), d.unit};
    for (size_t t = 0; t < tb.elems.size(); ++t) {
        if (d.cofactors[t].is_zero()) continue;
        for (size_t j = 0; j < ngen; ++j) cert.cofactors[j] += d.cofactors[t] * tb.rep[t][j];
    }
    return cert;
}

std::optional<MembershipCert> membership_with_cofactors(const Poly& p, const IdealHandle& ideal,
                                                        const MonomialOrder& ord) {
    NormalFormCert nf = normal_form(p, ideal, ord);
    if (!nf.remainder.is_zero()) return std::nullopt;
    return MembershipCert{std::move(nf.cofactors), std::move(nf.unit)};
}

bool radical_membership(const Poly& p, const IdealHandle& ideal) {
    if (p.ctx() != ideal.ctx()) throw error("radical_membership: context mismatch");
    if (p.is_zero()) return true;
    if (ideal.is_zero_ideal()) return false;
    const VarContext& ctx = ideal.ctx();
    std::string sname = "_s";
    while (ctx.index_of(sname)) sname += "_";
    std::vector<std::string> names = ctx.names();
    names.push_back(sname);
    VarContext ext = VarContext::plain(names);
    std::vector<size_t> var_map(ctx.size());
    for (size_t v = 0; v < ctx.size(); ++v) var_map[v] = v;

    std::vector<Poly> gens;
    for (const auto& g : ideal.generators()) gens.push_back(reindex(g, ext, var_map));
    Poly sp = reindex(p, ext, var_map) * Poly::variable(ext, ctx.size());
    gens.push_back(Poly::constant(ext, Scalar(1)) - sp);

    std::vector<Poly> gb = standard_basis_of(gens, MonomialOrder::degrevlex());
    for (const auto& g : gb)
        if (g.is_constant() && !g.is_zero()) return true;
    return false;
}

bool local_power_membership(const Poly& p, const IdealHandle& ideal, unsigned max_power) {
    if (p.ctx() != ideal.ctx()) throw error("local_power_membership: context mismatch");
    if (p.is_zero()) return true;
    if (ideal.is_zero_ideal()) return false;
    MonomialOrder ord = MonomialOrder::local();
    const std::vector<Poly>& sb = ideal.standard_basis(ord);
    if (sb.empty()) return false;
    Poly pk = p;
    for (unsigned k = 1; k <= max_power; ++k) {
        if (reduce_only(pk, sb, ord).is_zero()) return true;
        if (k < max_power) pk = pk * p;
    }
    return false;
}

bool vanishes_on_germ(const Poly& p, const IdealHandle& ideal) {
    if (p.is_zero()) return true;
    if (ideal.is_zero_ideal()) return false;
    // Cheap local check first (cached basis), then the global radical test,
    // then bounded local powers. Each branch is sound for the germ at 0.
    {
        MonomialOrder ord = MonomialOrder::local();
        const std::vector<Poly>& sb = ideal.standard_basis(ord);
        if (!sb.empty() && reduce_only(p, sb, ord).is_zero()) return true;
    }
    if (radical_membership(p, ideal)) return true;
    return local_power_membership(p, ideal, 6);
}

// ---------------------------------------------------------------------------
// Staircases and dimensions

namespace {

// Minimal leading monomials of the local standard basis.
std::vector<Monomial> local_leading_monomials(const IdealHandle& ideal) {
    MonomialOrder ord = MonomialOrder::local();
    std::vector<Monomial> lms;
    for (const auto& g : ideal.standard_basis(ord)) lms.push_back(g.leading_monomial(ord));
    return lms;
}

}  // namespace

std::optional<size_t> local_quotient_dim(const IdealHandle& ideal) {
    if (ideal.is_zero_ideal()) return std::nullopt;
    std::vector<Monomial> lms = local_leading_monomials(ideal);
    size_t n = ideal.ctx().size();
    // Need a pure power of every variable among the leading monomials.
    std::vector<uint32_t> bound(n, 0);
    for (const auto& m : lms) {
        size_t support = SIZE_MAX;
        bool pure = true;
        for (size_t v = 0; v < n; ++v) {
            if (m[v] == 0) continue;
            if (support != SIZE_MAX) {
                pure = false;
                break;
            }
            support = v;
        }
        if (m.is_one()) return 0;  // unit ideal: empty germ
        if (pure && support != SIZE_MAX)
            if (bound[support] == 0 || m[support] < bound[support]) bound[support] = m[support];
    }
    for (size_t v = 0; v < n; ++v)
        if (bound[v] == 0) return std::nullopt;

    // Count monomials under the bounds not divisible by any leading monomial.
    size_t count = 0;
    std::vector<uint32_t> cur(n, 0);
    unsigned long total = 1;
    for (size_t v = 0; v < n; ++v) {
        total *= bound[v];
        if (total > 2000000ul) throw error("local_quotient_dim: staircase too large");
    }
    for (unsigned long it = 0; it < total; ++it) {
        unsigned long x = it;
        for (size_t v = 0; v < n; ++v) {
            cur[v] = (uint32_t)(x % bound[v]);
            x /= bound[v];
        }
        Monomial m(std::vector<uint32_t>(cur.begin(), cur.end()));
        bool divisible = false;
        for (const auto& lm : lms)
            if (lm.divides(m)) {
                divisible = true;
                break;
            }
        if (!divisible) ++count;
    }
    return count;
}

std::vector<Monomial> local_staircase(const IdealHandle& ideal) {
    auto dim = local_quotient_dim(ideal);
    if (!dim) throw error("local_staircase: quotient is infinite-dimensional");
    std::vector<Monomial> lms = local_leading_monomials(ideal);
    size_t n = ideal.ctx().size();
    std::vector<uint32_t> bound(n, 0);
    for (const auto& m : lms) {
        size_t support = SIZE_MAX;
        bool pure = true;
        for (size_t v = 0; v < n; ++v) {
            if (m[v] == 0) continue;
            if (support != SIZE_MAX) {
                pure = false;
                break;
            }
            support = v;
        }
        if (pure && support != SIZE_MAX)
            if (bound[support] == 0 || m[support] < bound[support]) bound[support] = m[support];
    }
    std::vector<Monomial> out;
    std::vector<uint32_t> cur(n, 0);
    unsigned long total = 1;
    for (size_t v = 0; v < n; ++v) total *= std::max<uint32_t>(bound[v], 1);
    for (unsigned long it = 0; it < total; ++it) {
        unsigned long x = it;
        for (size_t v = 0; v < n; ++v) {
            uint32_t b = std::max<uint32_t>(bound[v], 1);
            cur[v] = (uint32_t)(x % b);
            x /= b;
        }
        Monomial m(std::vector<uint32_t>(cur.begin(), cur.end()));
        bool divisible = false;
        for (const auto& lm : lms)
            if (lm.divides(m)) {
                divisible = true;
                break;
            }
        if (!divisible) out.push_back(m);
    }
    std::sort(out.begin(), out.end(), [](const Monomial& a, const Monomial& b) {
        if (a.total_degree() != b.total_degree()) return a.total_degree() < b.total_degree();
        return MonoLexLess{}(a, b);
    });
    return out;
}

size_t monomial_ideal_dimension(const std::vector<Monomial>& gens, size_t nvars) {
    if (nvars > 31) throw error("monomial_ideal_dimension: too many variables");
    for (const auto& m : gens)
        if (m.is_one()) return 0;  // unit ideal; dimension of empty variety by convention
    size_t best = 0;
    for (uint32_t mask = 0; mask < (1u << nvars); ++mask) {
        size_t size = (size_t)__builtin_popcount(mask);
        if (size <= best) continue;
        bool ok = true;
        for (const auto& m : gens) {
            bool contained = true;
            for (size_t v = 0; v < nvars; ++v)
                if (m[v] != 0 && !(mask & (1u << v))) {
                    contained = false;
                    break;
                }
            if (contained) {  // generator lives on this subspace: subspace not in V
                ok = false;
                break;
            }
        }
        if (ok) best = size;
    }
    return best;
}

// ---------------------------------------------------------------------------
// Smoothness certificate

SmoothCertificate is_smooth_germ(const IdealHandle& ideal) {
    SmoothCertificate cert;
    const VarContext& ctx = ideal.ctx();
    size_t n = ctx.size();
    if (ideal.is_zero_ideal()) {
        cert.status = SmoothStatus::Smooth;
        cert.codim = 0;
        cert.note = "zero ideal: whole space";
        return cert;
    }
    for (const auto& g : ideal.generators())
        if (!g.vanishes_at_zero())
            throw error("is_smooth_germ: generator does not vanish at 0");

    ScalarMatrix jac;
    for (const auto& g : ideal.generators()) jac.push_back(g.linear_part());
    cert.jac_rank = rank(jac);

    std::vector<Monomial> lms = local_leading_monomials(ideal);
    cert.leading_dim = monomial_ideal_dimension(lms, n);

    if (cert.jac_rank > 0 && *cert.leading_dim == n - cert.jac_rank) {
        cert.status = SmoothStatus::Smooth;
        cert.codim = cert.jac_rank;
    } else {
        cert.status = SmoothStatus::Inconclusive;
        cert.note = "jacobian rank " + std::to_string(cert.jac_rank) + ", local dimension " +
                    std::to_string(*cert.leading_dim);
    }
    return cert;
}

// ---------------------------------------------------------------------------
// Germ comparison

const char* relation_name(GermRelation r) {
    switch (r) {
        case GermRelation::Equal: return "Equal";
        case GermRelation::StrictlyLarger: return "StrictlyLarger";
        case GermRelation::StrictlySmaller: return "StrictlySmaller";
        case GermRelation::Incomparable: return "Incomparable";
    }
    return "?";
}

GermVerdict germ_set_equal(const IdealHandle& I, const IdealHandle& J) {
    if (I.ctx() != J.ctx()) throw error("germ_set_equal: context mismatch");
    // V(I) subseteq V(J) iff every generator of J vanishes on the germ V(I).
    std::optional<Poly> i_fail, j_fail;
    for (const auto& g : J.generators())
        if (!vanishes_on_germ(g, I)) {
            j_fail = g;
            break;
        }
    for (const auto& g : I.generators())
        if (!vanishes_on_germ(g, J)) {
            i_fail = g;
            break;
        }
    bool i_sub_j = !j_fail.has_value();  // V(I) ⊆ V(J)
    bool j_sub_i = !i_fail.has_value();  // V(J) ⊆ V(I)
    if (i_sub_j && j_sub_i) return {GermRelation::Equal, std::nullopt, ""};
    if (i_sub_j) return {GermRelation::StrictlySmaller, i_fail, "first"};
    if (j_sub_i) return {GermRelation::StrictlyLarger, j_fail, "second"};
    return {GermRelation::Incomparable, j_fail, "second"};
}

IdealHandle coordinate_subspace_ideal(const VarContext& ctx, const std::vector<size_t>& vars) {
    std::vector<Poly> gens;
    for (size_t v : vars) gens.push_back(Poly::variable(ctx, v));
    return IdealHandle(ctx, std::move(gens));
}

}  // namespace germcalc

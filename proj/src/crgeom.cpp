#include "germcalc/crgeom.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <utility>

namespace germcalc {

namespace {

// Real row of the differential at 0 of a bar-symmetric polynomial, columns
// (x_1..x_N, y_1..y_N) for Z = x + iy. For such a polynomial the entries
// land in Q; the caller has already verified the symmetry.
std::vector<mpq_class> real_diff_row(const Poly& p) {
    const VarContext& ctx = p.ctx();
    size_t N = ctx.base_size();
    std::vector<Scalar> lin = p.linear_part();
    std::vector<mpq_class> row(2 * N, 0);
    for (size_t i = 0; i < N; ++i) {
        Scalar a = lin[i];
        Scalar b = lin[ctx.partner(i)];
        Scalar dx = a + b;                       // d/dx_i = d/dZ_i + d/dZbar_i
        Scalar dy = (a - b) * Scalar::i();       // d/dy_i = i (d/dZ_i - d/dZbar_i)
        row[i] = dx.re();
        row[N + i] = dy.re();
    }
    return row;
}

RatMatrix rat_product(const RatMatrix& a, const RatMatrix& b) {
    size_t rows = a.size(), inner = b.size(), cols = b.empty() ? 0 : b[0].size();
    RatMatrix out(rows, std::vector<mpq_class>(cols, 0));
    for (size_t r = 0; r < rows; ++r)
        for (size_t k = 0; k < inner; ++k) {
            if (a[r][k] == 0) continue;
            for (size_t c = 0; c < cols; ++c) out[r][c] += a[r][k] * b[k][c];
        }
    return out;
}

// A polynomial vector field on the paired space: one coefficient per slot.
using VectorField = std::vector<Poly>;

VectorField bracket(const VectorField& v, const VectorField& w) {
    size_t n = v.size();
    VectorField out(n);
    const VarContext& ctx = v[0].ctx();
    for (size_t beta = 0; beta < n; ++beta) {
        Poly acc(ctx);
        for (size_t alpha = 0; alpha < n; ++alpha) {
            if (!v[alpha].is_zero()) acc += v[alpha] * w[beta].derivative(alpha);
            if (!w[alpha].is_zero()) acc -= w[alpha] * v[beta].derivative(alpha);
        }
        out[beta] = acc;
    }
    return out;
}

Poly apply_field(const VectorField& v, const Poly& f) {
    Poly acc(f.ctx());
    for (size_t alpha = 0; alpha < v.size(); ++alpha)
        if (!v[alpha].is_zero()) acc += v[alpha] * f.derivative(alpha);
    return acc;
}

std::vector<Scalar> eval_at_zero(const VectorField& v) {
    std::vector<Scalar> out;
    out.reserve(v.size());
    for (const Poly& p : v) out.push_back(p.constant_term());
    return out;
}

bool field_is_zero(const VectorField& v) {
    return std::all_of(v.begin(), v.end(), [](const Poly& p) { return p.is_zero(); });
}

// The (0,1) basis fields extended to full 2N-slot vector fields, followed by
// their conjugates (the tangent (1,0) fields).
std::vector<VectorField> tangent_field_generators(const RealSubmanifold& M) {
    std::vector<CRVectorField> basis = cr_field_basis(M);
    std::vector<VectorField> gens;
    for (const CRVectorField& L : basis) {
        VectorField v(2 * M.N, Poly(M.ctx));
        for (size_t i = 0; i < M.N; ++i) v[M.ctx.partner(i)] = L.coeffs[i];
        gens.push_back(v);
    }
    size_t n = gens.size();
    for (size_t t = 0; t < n; ++t) {
        VectorField w(2 * M.N, Poly(M.ctx));
        for (size_t i = 0; i < M.N; ++i) w[i] = gens[t][M.ctx.partner(i)].bar_involution();
        gens.push_back(w);
    }
    return gens;
}

}  // namespace

RealSubmanifold::RealSubmanifold(VarContext c, std::vector<Poly> defining)
    : ctx(std::move(c)), rho(std::move(defining)) {
    if (!ctx.is_paired()) throw error("RealSubmanifold: context must be paired");
    N = ctx.base_size();
    d = rho.size();
    if (d == 0) throw error("RealSubmanifold: needs at least one defining function");
    for (const Poly& r : rho) {
        if (r.ctx() != ctx) throw error("RealSubmanifold: defining function over a different context");
        if (!r.vanishes_at_zero())
            throw error("RealSubmanifold: defining function does not vanish at 0: " + r.str());
        if (r.bar_involution() != r)
            throw error("RealSubmanifold: defining function is not real-valued: " + r.str());
    }
    RatMatrix D = real_differentials_at0();
    if (rank(D) != d)
        throw error("RealSubmanifold: real differentials are dependent at 0 (not a codimension-" +
                    std::to_string(d) + " submanifold)");
}

ScalarMatrix RealSubmanifold::holo_gradient_at0() const {
    ScalarMatrix m(d, std::vector<Scalar>(N));
    for (size_t j = 0; j < d; ++j) {
        std::vector<Scalar> lin = rho[j].linear_part();
        for (size_t i = 0; i < N; ++i) m[j][i] = lin[i];
    }
    return m;
}

ScalarMatrix RealSubmanifold::antiholo_gradient_at0() const {
    ScalarMatrix m(d, std::vector<Scalar>(N));
    for (size_t j = 0; j < d; ++j) {
        std::vector<Scalar> lin = rho[j].linear_part();
        for (size_t i = 0; i < N; ++i) m[j][i] = lin[ctx.partner(i)];
    }
    return m;
}

RatMatrix RealSubmanifold::real_differentials_at0() const {
    RatMatrix m;
    m.reserve(d);
    for (const Poly& r : rho) m.push_back(real_diff_row(r));
    return m;
}

ComplexifiedManifold complexify_manifold(const RealSubmanifold& M) {
    IdealHandle ideal(M.ctx, M.rho);
    for (const Poly& g : ideal.generators()) {
        Poly barred = g.bar_involution();
        if (!membership_with_cofactors(barred, ideal, MonomialOrder::local()))
            throw error("complexify_manifold: ideal not stable under the bar involution");
    }
    return ComplexifiedManifold{ideal};
}

MapGerm complexify_map(const MapGerm& H, const VarContext& src2, const VarContext& tgt2) {
    size_t N = H.source.size();
    if (!src2.is_paired() || !tgt2.is_paired())
        throw error("complexify_map: doubled contexts must be paired");
    if (src2.base_size() != N || tgt2.base_size() != H.target.size())
        throw error("complexify_map: doubled context arity mismatch");
    for (size_t i = 0; i < N; ++i)
        if (src2.name(i) != H.source.name(i))
            throw error("complexify_map: source variable names do not match the doubled context");
    std::vector<size_t> holo_map(N), conj_map(N);
    for (size_t i = 0; i < N; ++i) {
        holo_map[i] = i;
        conj_map[i] = src2.partner(i);
    }
    std::vector<Poly> comps;
    comps.reserve(2 * H.components.size());
    for (const Poly& h : H.components) comps.push_back(reindex(h, src2, holo_map));
    for (const Poly& h : H.components) comps.push_back(reindex(h.conj_coeffs(), src2, conj_map));
    return MapGerm(src2, tgt2, std::move(comps));
}

MapGerm complexify_map(const MapGerm& H) {
    return complexify_map(H, VarContext::paired(H.source.names()),
                          VarContext::paired(H.target.names()));
}

bool is_generic(const RealSubmanifold& M) {
    return rank(M.holo_gradient_at0()) == M.d;
}

CRProfile cr_profile(const RealSubmanifold& M) {
    CRProfile out;
    out.cr_dim_at_0 = M.N - rank(M.antiholo_gradient_at0());

    // Generic rank along the germ: the largest minor of d rho / d Zbar whose
    // determinant does not vanish on the complexified variety.
    IdealHandle ideal = complexify_manifold(M).ideal;
    PolyMatrix J(M.d, std::vector<Poly>(M.N));
    for (size_t j = 0; j < M.d; ++j)
        for (size_t i = 0; i < M.N; ++i) J[j][i] = M.rho[j].derivative(M.ctx.partner(i));

    size_t generic_rank = 0;
    size_t cap = std::min(M.d, M.N);
    for (size_t s = cap; s >= 1 && generic_rank == 0; --s) {
        // Enumerate s-subsets of rows and columns lexicographically.
        std::vector<size_t> rows(s), cols(s);
        std::function<bool(size_t, size_t)> pick_cols = [&](size_t level, size_t start) {
            if (level == s) {
                PolyMatrix sub(s, std::vector<Poly>(s));
                for (size_t a = 0; a < s; ++a)
                    for (size_t b = 0; b < s; ++b) sub[a][b] = J[rows[a]][cols[b]];
                Poly det = poly_det(sub);
                return !det.is_zero() && !radical_membership(det, ideal);
            }
            for (size_t c = start; c < M.N; ++c) {
                cols[level] = c;
                if (pick_cols(level + 1, c + 1)) return true;
            }
            return false;
        };
        std::function<bool(size_t, size_t)> pick_rows = [&](size_t level, size_t start) {
            if (level == s) return pick_cols(0, 0);
            for (size_t r = start; r < M.d; ++r) {
                rows[level] = r;
                if (pick_rows(level + 1, r + 1)) return true;
            }
            return false;
        };
        if (pick_rows(0, 0)) generic_rank = s;
    }
    out.generic_cr_dim = M.N - generic_rank;
    out.is_cr_at_0 = (out.cr_dim_at_0 == out.generic_cr_dim);
    return out;
}

std::vector<CRVectorField> cr_field_basis(const RealSubmanifold& M) {
    size_t N = M.N, d = M.d;
    PolyMatrix A(d, std::vector<Poly>(N));
    for (size_t j = 0; j < d; ++j)
        for (size_t i = 0; i < N; ++i) A[j][i] = M.rho[j].derivative(M.ctx.partner(i));

    // Pivot columns: a greedy set where the matrix at 0 is invertible.
    ScalarMatrix A0 = M.antiholo_gradient_at0();
    std::vector<size_t> pivots;
    ScalarMatrix acc;
    for (size_t i = 0; i < N && pivots.size() < d; ++i) {
        ScalarMatrix trial = acc;
        std::vector<Scalar> col(d);
        for (size_t j = 0; j < d; ++j) col[j] = A0[j][i];
        trial.push_back(col);
        if (rank(trial) > acc.size()) {
            acc = trial;
            pivots.push_back(i);
        }
    }
    if (pivots.size() != d)
        throw error("cr_field_basis: antiholomorphic differentials drop rank at 0; "
                    "a pointwise field basis needs a generic manifold");

    PolyMatrix B(d, std::vector<Poly>(d));
    for (size_t j = 0; j < d; ++j)
        for (size_t s = 0; s < d; ++s) B[j][s] = A[j][pivots[s]];
    Poly detB = poly_det(B);
    PolyMatrix adjB = poly_adjugate(B);

    std::vector<bool> is_pivot(N, false);
    for (size_t s : pivots) is_pivot[s] = true;

    std::vector<CRVectorField> out;
    for (size_t t = 0; t < N; ++t) {
        if (is_pivot[t]) continue;
        // Coefficients: detB on the free slot, -(adjB * column_t) on pivots.
        // An exact kernel vector of A: A * a = detB * col_t - B adjB col_t = 0.
        CRVectorField L;
        L.coeffs.assign(N, Poly(M.ctx));
        L.coeffs[t] = detB;
        for (size_t s = 0; s < d; ++s) {
            Poly w(M.ctx);
            for (size_t j = 0; j < d; ++j) w += adjB[s][j] * A[j][t];
            L.coeffs[pivots[s]] = -w;
        }
        for (size_t j = 0; j < d; ++j) {
            Poly check(M.ctx);
            for (size_t i = 0; i < N; ++i) check += A[j][i] * L.coeffs[i];
            if (!check.is_zero())
                throw error("cr_field_basis: internal error, field fails tangency");
        }
        out.push_back(std::move(L));
    }
    return out;
}

OrderVerdict finite_type_check(const RealSubmanifold& M, unsigned K) {
    if (!is_generic(M)) throw error("finite_type_check: requires a generic manifold");
    size_t target = 2 * M.N - M.d;
    std::vector<VectorField> gens = tangent_field_generators(M);

    ScalarMatrix rows;
    auto current_rank = [&]() { return rank(rows); };
    for (const VectorField& g : gens) rows.push_back(eval_at_zero(g));
    if (current_rank() == target) return {true, 1, K};

    std::vector<VectorField> layer = gens;
    for (unsigned len = 2; len <= K; ++len) {
        std::vector<VectorField> next;
        for (const VectorField& g : gens)
            for (const VectorField& v : layer) {
                VectorField b = bracket(g, v);
                if (field_is_zero(b)) continue;
                rows.push_back(eval_at_zero(b));
                next.push_back(std::move(b));
            }
        if (current_rank() == target) return {true, len, K};
        if (next.empty()) break;
        layer = std::move(next);
    }
    return {false, 0, K};
}

OrderVerdict finitely_nondegenerate_check(const RealSubmanifold& M, unsigned K) {
    if (!is_generic(M)) throw error("finitely_nondegenerate_check: requires a generic manifold");
    std::vector<CRVectorField> basis = cr_field_basis(M);
    size_t n = basis.size();

    std::vector<VectorField> fields;
    for (const CRVectorField& L : basis) {
        VectorField v(2 * M.N, Poly(M.ctx));
        for (size_t i = 0; i < M.N; ++i) v[M.ctx.partner(i)] = L.coeffs[i];
        fields.push_back(v);
    }

    // Gradient rows of the defining functions (holomorphic slots).
    using Row = std::vector<Poly>;
    std::vector<Row> base_rows;
    for (size_t j = 0; j < M.d; ++j) {
        Row r(M.N);
        for (size_t i = 0; i < M.N; ++i) r[i] = M.rho[j].derivative(i);
        base_rows.push_back(std::move(r));
    }

    // Ordered words: word(alpha) applies the outermost available field to the
    // word of alpha minus one use of it, memoized per base row.
    std::map<std::pair<size_t, std::vector<unsigned>>, Row> memo;
    std::function<const Row&(size_t, std::vector<unsigned>)> word =
        [&](size_t j, std::vector<unsigned> alpha) -> const Row& {
        auto key = std::make_pair(j, alpha);
        auto it = memo.find(key);
        if (it != memo.end()) return it->second;
        Row value;
        size_t first = n;
        for (size_t s = 0; s < n; ++s)
            if (alpha[s] > 0) {
                first = s;
                break;
            }
        if (first == n) {
            value = base_rows[j];
        } else {
            std::vector<unsigned> sub = alpha;
            sub[first] -= 1;
            const Row& inner = word(j, sub);
            value.resize(M.N);
            for (size_t i = 0; i < M.N; ++i) value[i] = apply_field(fields[first], inner[i]);
        }
        return memo.emplace(std::move(key), std::move(value)).first->second;
    };

    ScalarMatrix rows;
    std::vector<std::vector<unsigned>> level = {std::vector<unsigned>(n, 0)};
    for (unsigned k = 0; k <= K; ++k) {
        for (size_t j = 0; j < M.d; ++j)
            for (const auto& alpha : level) {
                const Row& r = word(j, alpha);
                std::vector<Scalar> ev(M.N);
                for (size_t i = 0; i < M.N; ++i) ev[i] = r[i].constant_term();
                rows.push_back(std::move(ev));
            }
        if (rank(rows) == M.N) return {true, k, K};
        if (n == 0) break;
        // Next level: all multi-indices of weight k+1.
        std::vector<std::vector<unsigned>> next;
        for (const auto& alpha : level)
            for (size_t s = 0; s < n; ++s) {
                std::vector<unsigned> up = alpha;
                up[s] += 1;
                // Keep each multi-index once: only bump slots at or before the
                // first nonzero entry.
                bool canonical = true;
                for (size_t t = 0; t < s; ++t)
                    if (alpha[t] > 0) canonical = false;
                if (canonical) next.push_back(std::move(up));
            }
        level = std::move(next);
    }
    return {false, 0, K};
}

bool cr_transversal_check(const MapGerm& H, const RealSubmanifold& Mtilde) {
    if (H.target.size() != Mtilde.N)
        throw error("cr_transversal_check: manifold does not live in the map's target");
    CRProfile prof = cr_profile(Mtilde);
    if (!prof.is_cr_at_0)
        throw error("cr_transversal_check: manifold is not CR at 0, "
                    "its holomorphic tangent space there is not well defined");
    // Holomorphic tangent space of Mtilde at 0: kernel of d rho / d Z(0).
    std::vector<std::vector<Scalar>> span = kernel_basis(Mtilde.holo_gradient_at0());
    // Image of dH(0): columns of the Jacobian.
    ScalarMatrix J = H.jacobian_at_zero();
    size_t N = Mtilde.N;
    for (size_t c = 0; c < H.source.size(); ++c) {
        std::vector<Scalar> col(N);
        for (size_t r = 0; r < N; ++r) col[r] = J[r][c];
        span.push_back(std::move(col));
    }
    return rank(span) == N;
}

bool real_transversal_check(const MapGerm& H, const RealSubmanifold& Mtilde) {
    if (H.target.size() != Mtilde.N || H.source.size() != Mtilde.N)
        throw error("real_transversal_check: expects a self-map of the manifold's ambient space");
    RatMatrix D = Mtilde.real_differentials_at0();
    RatMatrix Jr = realify(H.jacobian_at_zero());
    return rank(rat_product(D, Jr)) == Mtilde.d;
}

GermVerdict complexified_preimage_equal(const RealSubmanifold& M, const MapGerm& H) {
    if (H.source.size() != M.N)
        throw error("complexified_preimage_equal: map source does not match the manifold's ambient space");
    if (!is_finite(H)) throw error("complexified_preimage_equal: requires a finite map");
    MapGerm HH = complexify_map(H, M.ctx, VarContext::paired(H.target.names()));
    if (!is_finite(HH))
        throw error("complexified_preimage_equal: internal error, doubled map of a finite map "
                    "must be finite");
    IdealHandle X = complexify_manifold(M).ideal;
    return preimage_closure_equals(HH, X);
}

std::optional<RealSubmanifold> extract_real_defining(const IdealHandle& ideal,
                                                     std::string* note) {
    auto fail = [&](const std::string& why) -> std::optional<RealSubmanifold> {
        if (note) *note = why;
        return std::nullopt;
    };
    const VarContext& ctx = ideal.ctx();
    if (!ctx.is_paired()) return fail("context is not paired");
    SmoothCertificate cert = is_smooth_germ(ideal);
    if (cert.status != SmoothStatus::Smooth)
        return fail("ideal is not certified smooth: " + cert.note);
    size_t d = cert.codim;
    size_t N = ctx.base_size();

    std::vector<Poly> candidates;
    for (const Poly& g : ideal.generators()) {
        Poly barred = g.bar_involution();
        if (!membership_with_cofactors(barred, ideal, MonomialOrder::local()))
            return fail("ideal is not stable under the bar involution: " + g.str());
        Poly s1 = g + barred;
        Poly s2 = (g - barred).scaled(Scalar::i());
        for (const Poly& s : {s1, s2})
            if (!s.is_zero() && s.vanishes_at_zero()) candidates.push_back(s);
    }

    RatMatrix rows;
    std::vector<Poly> chosen;
    for (const Poly& s : candidates) {
        if (chosen.size() == d) break;
        RatMatrix trial = rows;
        trial.push_back(real_diff_row(s));
        if (rank(trial) > chosen.size()) {
            rows = std::move(trial);
            chosen.push_back(s);
        }
    }
    if (chosen.size() < d)
        return fail("only " + std::to_string(chosen.size()) + " of " + std::to_string(d) +
                    " independent real differentials among symmetrized generators");
    (void)N;
    try {
        return RealSubmanifold(ctx, std::move(chosen));
    } catch (const error& e) {
        return fail(std::string("extracted functions rejected: ") + e.what());
    }
}

std::optional<Poly> holomorphic_poly_on_manifold(const RealSubmanifold& M, unsigned maxdeg) {
    IdealHandle ideal = complexify_manifold(M).ideal;
    MonomialOrder ord = MonomialOrder::degrevlex();

    // Monomials in the holomorphic slots only, degree 1..maxdeg.
    std::vector<Monomial> mons;
    Monomial current(M.ctx.size());
    std::function<void(size_t, unsigned)> enumerate = [&](size_t i, unsigned remaining) {
        if (i == M.N) {
            if (current.total_degree() >= 1) mons.push_back(current);
            return;
        }
        for (unsigned e = 0; e <= remaining; ++e) {
            current.at(i) = e;
            enumerate(i + 1, remaining - e);
        }
        current.at(i) = 0;
    };
    enumerate(0, maxdeg);
    std::sort(mons.begin(), mons.end(),
              [&](const Monomial& a, const Monomial& b) { return ord.less(a, b); });

    // Global normal form is linear in the input; a kernel vector of the
    // combined remainder coefficients gives a member of the ideal.
    std::vector<Poly> remainders;
    remainders.reserve(mons.size());
    for (const Monomial& m : mons)
        remainders.push_back(normal_form(Poly::term(M.ctx, m, Scalar(1)), ideal, ord).remainder);

    std::map<Monomial, size_t, MonoLexLess> support;
    for (const Poly& r : remainders)
        for (const auto& [m, c] : r.terms())
            if (!support.count(m)) {
                size_t next = support.size();
                support.emplace(m, next);
            }

    ScalarMatrix a(support.size(), std::vector<Scalar>(mons.size(), Scalar(0)));
    for (size_t c = 0; c < remainders.size(); ++c)
        for (const auto& [m, coeff] : remainders[c].terms()) a[support.at(m)][c] = coeff;

    std::vector<std::vector<Scalar>> ker = kernel_basis(a);
    if (ker.empty()) return std::nullopt;
    Poly p(M.ctx);
    for (size_t c = 0; c < mons.size(); ++c)
        if (!ker[0][c].is_zero()) p.add_term(mons[c], ker[0][c]);
    return p;
}

ManifoldMapReport manifold_map_report(const RealSubmanifold& M, const MapGerm& H, unsigned K) {
    if (H.source.size() != M.N || H.target.size() != M.N)
        throw error("manifold_map_report: expects a self-map of the manifold's ambient space");
    ManifoldMapReport R;
    R.K = K;
    R.codim = M.d;
    R.m_finite_type.bound = K;
    R.image_finite_type.bound = K;

    R.h_finite = is_finite(H);
    if (R.h_finite) R.mult = multiplicity(H);
    R.jac_rank_at_0 = rank(H.jacobian_at_zero());
    R.rank_bound_ok = (R.jac_rank_at_0 >= M.d);

    R.m_generic = is_generic(M);
    CRProfile m_cr = cr_profile(M);
    if (R.m_generic) {
        R.m_finite_type = finite_type_check(M, K);
        R.m_in_proper_subvariety = false;
        R.notes.push_back("source manifold is generic, hence not contained in a proper "
                          "complex subvariety");
    } else {
        R.notes.push_back("finite type search skipped: the source manifold is not generic");
        R.subvariety_witness = holomorphic_poly_on_manifold(M, K);
        if (R.subvariety_witness) {
            R.m_in_proper_subvariety = true;
            R.notes.push_back("source manifold lies in the proper complex subvariety cut out by " +
                              R.subvariety_witness->str() +
                              "; the smoothness/transversality equivalence does not apply");
        } else {
            R.notes.push_back("no holomorphic polynomial through degree " + std::to_string(K) +
                              " vanishes on the source manifold; containment undecided at this bound");
        }
    }

    if (!R.h_finite) {
        R.notes.push_back("map is not finite; image and preimage analysis skipped");
        return R;
    }

    R.preimage = complexified_preimage_equal(M, H);

    MapGerm HH = complexify_map(H, M.ctx, VarContext::paired(H.target.names()));
    IdealHandle X = complexify_manifold(M).ideal;
    IdealHandle img = image_ideal(HH, X);
    R.image_ideal_2n = img;
    R.image_smooth = is_smooth_germ(img);

    std::string extract_note;
    R.image_manifold = extract_real_defining(img, &extract_note);
    if (!R.image_manifold) {
        R.notes.push_back("real defining functions not extracted: " + extract_note);
    } else {
        const RealSubmanifold& Mt = *R.image_manifold;
        R.image_generic = is_generic(Mt);
        R.image_cr = cr_profile(Mt);
        if (*R.image_generic)
            R.image_finite_type = finite_type_check(Mt, K);
        else
            R.notes.push_back("image finite type search skipped: extracted image is not generic");
        R.real_transversal = real_transversal_check(H, Mt);
        if (R.image_cr->is_cr_at_0)
            R.cr_transversal = cr_transversal_check(H, Mt);
        else
            R.notes.push_back("holomorphic-tangent transversality skipped: image is not CR at 0");
    }

    // Cross-validation of implications decidable from definite sub-verdicts.
    auto flag = [&](const std::string& s) { R.inconsistencies.push_back(s); };

    if (R.m_generic && !m_cr.is_cr_at_0)
        flag("generic source manifold must be CR at 0");
    if (R.image_generic && *R.image_generic && R.image_cr && !R.image_cr->is_cr_at_0)
        flag("generic image manifold must be CR at 0");

    bool equal = R.preimage && R.preimage->status == GermRelation::Equal;

    bool hyp_type = R.m_generic && R.m_finite_type.determined;
    if (hyp_type && equal) {
        if (R.image_smooth.status != SmoothStatus::Smooth)
            flag("preimage equality over a generic finite-type source must force a smooth image ideal");
        if (!R.image_manifold)
            flag("preimage equality over a generic finite-type source must allow extraction of "
                 "real defining functions");
        if (R.image_generic && !*R.image_generic)
            flag("preimage equality over a generic finite-type source must force a generic image");
        if (R.cr_transversal && !*R.cr_transversal)
            flag("preimage equality over a generic finite-type source must force "
                 "holomorphic-tangent transversality");
        if (!R.rank_bound_ok)
            flag("preimage equality over a generic finite-type source must force "
                 "rank dH(0) >= codim");
    }

    bool hyp_subvar = R.m_in_proper_subvariety.has_value() && !*R.m_in_proper_subvariety;
    if (hyp_subvar && equal) {
        if (R.image_smooth.status != SmoothStatus::Smooth)
            flag("preimage equality over a source outside proper complex subvarieties must "
                 "force a smooth image ideal");
        if (R.real_transversal && !*R.real_transversal)
            flag("preimage equality over a source outside proper complex subvarieties must "
                 "force real transversality to the image");
        if (R.image_manifold && !R.real_transversal)
            flag("internal error: extracted image without a transversality verdict");
    }

    return R;
}

}  // namespace germcalc

#include "germcalc/symfun.hpp"

#include <algorithm>
#include <optional>

namespace germcalc {

namespace {

// A primitive q-th root already inside Q(i), when there is one. Using it
// directly matters for q = 4: the quotient Q(i)[w]/(w^2+1) would have zero
// divisors, so nonzero there would not mean nonzero as a complex number.
std::optional<Scalar> gaussian_root(unsigned q) {
    switch (q) {
        case 1: return Scalar(1);
        case 2: return Scalar(-1);
        case 4: return Scalar::i();
        default: return std::nullopt;
    }
}

// Coefficients of Phi_q below the leading term, so w^deg = -(those). Only
// the orders whose cyclotomic polynomial stays irreducible over Q(i).
std::vector<Scalar> phi_tail(unsigned q) {
    switch (q) {
        case 3: return {Scalar(1), Scalar(1)};             // w^2 + w + 1
        case 5: return {Scalar(1), Scalar(1), Scalar(1), Scalar(1)};
        case 6: return {Scalar(1), Scalar(-1)};            // w^2 - w + 1
        default: throw error("root order out of the supported range 1..6");
    }
}

size_t rep_size(unsigned q) {
    if (gaussian_root(q)) return 1;
    return phi_tail(q).size();
}

}  // namespace

CycScalar::CycScalar(unsigned q, Scalar constant) : q_(q) {
    c_.assign(rep_size(q), Scalar(0));
    c_[0] = std::move(constant);
}

CycScalar CycScalar::root_power(unsigned q, unsigned k) {
    CycScalar r(q, Scalar(1));
    CycScalar w(q, Scalar(0));
    if (auto g = gaussian_root(q)) {
        w.c_[0] = *g;
    } else {
        w.c_[1] = Scalar(1);
    }
    for (unsigned i = 0; i < k % q; ++i) r = r * w;
    return r;
}

bool CycScalar::is_zero() const {
    return std::all_of(c_.begin(), c_.end(), [](const Scalar& x) { return x.is_zero(); });
}

Scalar CycScalar::as_scalar() const {
    for (size_t i = 1; i < c_.size(); ++i)
        if (!c_[i].is_zero()) throw error("cyclotomic element is not rational");
    return c_[0];
}

CycScalar CycScalar::operator-() const {
    CycScalar r = *this;
    for (auto& x : r.c_) x = -x;
    return r;
}

CycScalar operator+(const CycScalar& a, const CycScalar& b) {
    if (a.q_ != b.q_) throw error("cyclotomic order mismatch");
    CycScalar r = a;
    for (size_t i = 0; i < r.c_.size(); ++i) r.c_[i] += b.c_[i];
    return r;
}

CycScalar operator-(const CycScalar& a, const CycScalar& b) { return a + (-b); }

CycScalar operator*(const CycScalar& a, const CycScalar& b) {
    if (a.q_ != b.q_) throw error("cyclotomic order mismatch");
    size_t d = a.c_.size();
    std::vector<Scalar> prod(2 * d - 1, Scalar(0));
    for (size_t i = 0; i < d; ++i) {
        if (a.c_[i].is_zero()) continue;
        for (size_t j = 0; j < d; ++j) prod[i + j] += a.c_[i] * b.c_[j];
    }
    std::vector<Scalar> tail = d > 1 ? phi_tail(a.q_) : std::vector<Scalar>{};
    for (size_t k = prod.size(); k-- > d;) {
        // w^k = w^{k-d} * w^d = w^{k-d} * (-tail)
        Scalar top = prod[k];
        if (top.is_zero()) continue;
        prod[k] = Scalar(0);
        for (size_t j = 0; j < d; ++j) prod[k - d + j] -= top * tail[j];
    }
    CycScalar r(a.q_, Scalar(0));
    for (size_t i = 0; i < d; ++i) r.c_[i] = prod[i];
    return r;
}

bool operator==(const CycScalar& a, const CycScalar& b) { return (a - b).is_zero(); }

Poly elementary_symmetric(const VarContext& ctx, unsigned i) {
    size_t p = ctx.size();
    if (i > p) return Poly(ctx);
    if (i == 0) return Poly::constant(ctx, Scalar(1));
    Poly sum(ctx);
    std::vector<size_t> idx(i);
    // iterate over all i-subsets in lexicographic order
    for (size_t k = 0; k < i; ++k) idx[k] = k;
    while (true) {
        Monomial m(p);
        for (size_t k : idx) m.at(k) = 1;
        sum.add_term(m, Scalar(1));
        size_t k = i;
        while (k-- > 0) {
            if (idx[k] + (i - k) < p) {
                ++idx[k];
                for (size_t l = k + 1; l < i; ++l) idx[l] = idx[l - 1] + 1;
                break;
            }
            if (k == 0) return sum;
        }
    }
}

Poly power_sum(const VarContext& ctx, unsigned j) {
    Poly sum(ctx);
    for (size_t v = 0; v < ctx.size(); ++v)
        sum.add_term(Monomial::var(ctx.size(), v, j), Scalar(1));
    return sum;
}

bool is_symmetric(const Poly& d) {
    size_t p = d.ctx().size();
    for (size_t i = 0; i + 1 < p; ++i) {
        std::vector<size_t> perm(p);
        for (size_t v = 0; v < p; ++v) perm[v] = v;
        std::swap(perm[i], perm[i + 1]);
        if (reindex(d, d.ctx(), perm) != d) return false;
    }
    return true;
}

Poly sym_express(const Poly& d) {
    if (!is_symmetric(d)) throw error("sym_express: polynomial is not symmetric");
    size_t p = d.ctx().size();
    std::vector<std::string> cnames;
    for (size_t i = 1; i <= p; ++i) cnames.push_back("c" + std::to_string(i));
    VarContext cctx = VarContext::plain(cnames);
    Poly out(cctx);
    Poly rest = d;
    MonomialOrder lex = MonomialOrder::lex();
    std::vector<Poly> e;
    for (unsigned i = 1; i <= p; ++i) e.push_back(elementary_symmetric(d.ctx(), i));
    int guard = 0;
    while (!rest.is_zero()) {
        if (++guard > 20000) throw error("sym_express: descent did not terminate");
        auto [lm, lc] = rest.leading_term(lex);
        // the lex-leading exponent of a symmetric polynomial is weakly decreasing
        std::vector<uint32_t> lambda(p + 1, 0);
        for (size_t v = 0; v < p; ++v) lambda[v] = lm[v];
        Poly prod_e = Poly::constant(d.ctx(), Scalar(1));
        Monomial cmono(p);
        unsigned total = lm.total_degree();
        for (size_t i = 0; i < p; ++i) {
            if (lambda[i] < lambda[i + 1]) throw error("sym_express: polynomial is not symmetric");
            uint32_t ex = lambda[i] - lambda[i + 1];
            if (ex == 0) continue;
            prod_e = prod_e * e[i].pow(ex);
            cmono.at(i) = ex;
        }
        // e_i = (-1)^i c_i, so the sign of the c-monomial is (-1)^{sum lambda}
        Scalar sign((total % 2) ? -1 : 1);
        out.add_term(cmono, lc * sign);
        rest -= prod_e.scaled(lc);
    }
    return out;
}

unsigned first_nonzero_coeff(const std::vector<Scalar>& c, unsigned q) {
    for (unsigned j = 1; j <= q && j <= c.size(); ++j)
        if (!c[j - 1].is_zero()) return j;
    throw error("all of c_1..c_q vanish");
}

unsigned roots_of_unity_coeff(const std::vector<unsigned>& exps, unsigned q) {
    if (q == 0 || q > 6) throw error("root order out of the supported range 1..6");
    size_t p = exps.size();
    if (p < q) throw error("fewer roots than the claimed order");
    // expand prod (y - w^{a_i}) in the cyclotomic ring; coefficient of
    // y^{p-j} is c_j
    std::vector<CycScalar> coeff;  // c_0..c_p, c_0 = 1
    coeff.emplace_back(q, Scalar(1));
    for (unsigned a : exps) {
        // multiply sum_i c_i y^{n-i} by (y - root): new c_i = c_i - root * c_{i-1}
        CycScalar root = CycScalar::root_power(q, a);
        std::vector<CycScalar> next;
        next.reserve(coeff.size() + 1);
        for (size_t i = 0; i <= coeff.size(); ++i) {
            CycScalar v(q, Scalar(0));
            if (i < coeff.size()) v = v + coeff[i];
            if (i > 0) v = v - coeff[i - 1] * root;
            next.push_back(v);
        }
        coeff = std::move(next);
    }
    unsigned found = 0;
    for (unsigned j = 1; j <= q; ++j)
        if (!coeff[j].is_zero()) {
            found = j;
            break;
        }
    if (found == 0) throw error("all of c_1..c_q vanish; roots cannot all be q-th roots of unity");

    // cross-check: the q-th power sum of q-th roots of unity is the root
    // count; recompute it from c_1..c_q via the symmetric rewrite
    std::vector<std::string> wnames;
    for (size_t i = 1; i <= p; ++i) wnames.push_back("w" + std::to_string(i));
    VarContext wctx = VarContext::plain(wnames);
    Poly aq = sym_express(power_sum(wctx, q));
    std::vector<CycScalar> cvals;
    for (size_t i = 1; i <= p; ++i) cvals.push_back(coeff[i]);
    CycScalar got = aq.eval_in<CycScalar>(
        cvals, [&](const Scalar& s) { return CycScalar(q, s); }, CycScalar(q, Scalar(0)));
    if (got != CycScalar(q, Scalar((long)p)))
        throw error("power-sum certificate failed for the supplied roots");
    return found;
}

}  // namespace germcalc

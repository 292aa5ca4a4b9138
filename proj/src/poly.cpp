#include "germcalc/poly.hpp"

#include <algorithm>

namespace germcalc {

Poly Poly::constant(const VarContext& ctx, const Scalar& c) {
    Poly p(ctx);
    if (!c.is_zero()) p.terms_.emplace(Monomial(ctx.size()), c);
    return p;
}

Poly Poly::variable(const VarContext& ctx, size_t index) {
    if (index >= ctx.size()) throw error("Poly::variable: index out of range");
    Poly p(ctx);
    p.terms_.emplace(Monomial::var(ctx.size(), index), Scalar(1));
    return p;
}

Poly Poly::term(const VarContext& ctx, const Monomial& m, const Scalar& c) {
    if (m.arity() != ctx.size()) throw error("Poly::term: arity mismatch");
    Poly p(ctx);
    if (!c.is_zero()) p.terms_.emplace(m, c);
    return p;
}

int Poly::total_degree() const {
    int d = -1;
    for (const auto& [m, c] : terms_) d = std::max(d, (int)m.total_degree());
    return d;
}

Scalar Poly::coeff(const Monomial& m) const {
    auto it = terms_.find(m);
    return it == terms_.end() ? Scalar(0) : it->second;
}

Scalar Poly::constant_term() const { return coeff(Monomial(ctx_.size())); }

bool Poly::is_constant() const {
    return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.is_one());
}

void Poly::add_term(const Monomial& m, const Scalar& c) {
    if (m.arity() != ctx_.size()) throw error("Poly::add_term: arity mismatch");
    if (c.is_zero()) return;
    auto [it, inserted] = terms_.emplace(m, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

Poly Poly::operator-() const {
    Poly r(ctx_);
    for (const auto& [m, c] : terms_) r.terms_.emplace(m, -c);
    return r;
}

Poly& Poly::operator+=(const Poly& o) {
    if (ctx_ != o.ctx_) throw error("Poly::+=: context mismatch");
    for (const auto& [m, c] : o.terms_) add_term(m, c);
    return *this;
}

Poly& Poly::operator-=(const Poly& o) {
    if (ctx_ != o.ctx_) throw error("Poly::-=: context mismatch");
    for (const auto& [m, c] : o.terms_) add_term(m, -c);
    return *this;
}

Poly operator*(const Poly& a, const Poly& b) {
    if (a.ctx_ != b.ctx_) throw error("Poly::*: context mismatch");
    Poly r(a.ctx_);
    for (const auto& [ma, ca] : a.terms_)
        for (const auto& [mb, cb] : b.terms_) r.add_term(ma * mb, ca * cb);
    return r;
}

Poly Poly::scaled(const Scalar& c) const {
    Poly r(ctx_);
    if (c.is_zero()) return r;
    for (const auto& [m, cc] : terms_) r.terms_.emplace(m, cc * c);
    return r;
}

Poly Poly::times_term(const Monomial& m, const Scalar& c) const {
    Poly r(ctx_);
    if (c.is_zero()) return r;
    for (const auto& [mm, cc] : terms_) r.terms_.emplace(mm * m, cc * c);
    return r;
}

Poly Poly::pow(unsigned e) const {
    Poly r = Poly::constant(ctx_, Scalar(1));
    Poly base = *this;
    while (e) {
        if (e & 1) r = r * base;
        e >>= 1;
        if (e) base = base * base;
    }
    return r;
}

Poly Poly::derivative(size_t var) const {
    if (var >= ctx_.size()) throw error("Poly::derivative: index out of range");
    Poly r(ctx_);
    for (const auto& [m, c] : terms_) {
        if (m[var] == 0) continue;
        Monomial d(m);
        uint32_t e = d.at(var)--;
        r.add_term(d, c * Scalar((long)e));
    }
    return r;
}

Poly Poly::conj_coeffs() const {
    Poly r(ctx_);
    for (const auto& [m, c] : terms_) r.terms_.emplace(m, c.conj());
    return r;
}

Poly Poly::swap_pairs() const {
    if (!ctx_.is_paired()) throw error("Poly::swap_pairs: context not paired");
    Poly r(ctx_);
    size_t n = ctx_.size();
    for (const auto& [m, c] : terms_) {
        Monomial sm(n);
        for (size_t i = 0; i < n; ++i) sm.at(ctx_.partner(i)) = m[i];
        r.add_term(sm, c);
    }
    return r;
}

Poly Poly::bar_involution() const { return swap_pairs().conj_coeffs(); }

Scalar Poly::eval(const std::vector<Scalar>& values) const {
    return eval_in<Scalar>(
        values, [](const Scalar& c) { return c; }, Scalar(0));
}

Poly Poly::compose(const std::vector<Poly>& images) const {
    if (images.size() != ctx_.size()) throw error("Poly::compose: arity mismatch");
    const VarContext& tctx = images.empty() ? ctx_ : images[0].ctx();
    for (const auto& im : images)
        if (im.ctx() != tctx) throw error("Poly::compose: image context mismatch");
    // Per-variable power cache.
    std::vector<std::vector<Poly>> powers(images.size());
    for (size_t i = 0; i < images.size(); ++i)
        powers[i].push_back(Poly::constant(tctx, Scalar(1)));
    auto power = [&](size_t i, uint32_t e) -> const Poly& {
        while (powers[i].size() <= e) powers[i].push_back(powers[i].back() * images[i]);
        return powers[i][e];
    };
    Poly acc(tctx);
    for (const auto& [m, c] : terms_) {
        Poly t = Poly::constant(tctx, c);
        for (size_t i = 0; i < images.size(); ++i)
            if (m[i]) t = t * power(i, m[i]);
        acc += t;
    }
    return acc;
}

std::pair<Monomial, Scalar> Poly::leading_term(const MonomialOrder& ord) const {
    if (terms_.empty()) throw error("Poly::leading_term of zero");
    auto best = terms_.begin();
    for (auto it = std::next(terms_.begin()); it != terms_.end(); ++it)
        if (ord.compare(it->first, best->first) > 0) best = it;
    return {best->first, best->second};
}

const Monomial& Poly::leading_monomial(const MonomialOrder& ord) const {
    if (terms_.empty()) throw error("Poly::leading_monomial of zero");
    auto best = terms_.begin();
    for (auto it = std::next(terms_.begin()); it != terms_.end(); ++it)
        if (ord.compare(it->first, best->first) > 0) best = it;
    return best->first;
}

Poly Poly::monic(const MonomialOrder& ord) const {
    if (is_zero()) return *this;
    return scaled(leading_term(ord).second.inverse());
}

std::vector<Scalar> Poly::linear_part() const {
    std::vector<Scalar> lin(ctx_.size(), Scalar(0));
    for (const auto& [m, c] : terms_) {
        if (m.total_degree() != 1) continue;
        for (size_t i = 0; i < ctx_.size(); ++i)
            if (m[i] == 1) lin[i] = c;
    }
    return lin;
}

namespace {

std::string rational_str(const mpq_class& q) { return q.get_str(); }

// Coefficient rendering; `lead` suppresses an explicit '+' for first terms.
// Returns the sign-stripped body and reports the sign separately for real or
// pure-imaginary coefficients; mixed coefficients are parenthesized verbatim.
struct CoeffText {
    bool negative = false;
    std::string body;  // without sign; "" means coefficient 1 (bare monomial)
};

CoeffText coeff_text(const Scalar& c, bool with_monomial) {
    CoeffText out;
    if (c.im() == 0) {
        mpq_class a = c.re();
        out.negative = a < 0;
        mpq_class ab = abs(a);
        if (ab == 1 && with_monomial)
            out.body = "";
        else
            out.body = rational_str(ab);
        return out;
    }
    if (c.re() == 0) {
        mpq_class b = c.im();
        out.negative = b < 0;
        mpq_class ab = abs(b);
        out.body = (ab == 1) ? "i" : rational_str(ab) + "*i";
        return out;
    }
    // Mixed: always parenthesize, sign stays inside.
    std::string s = "(" + rational_str(c.re());
    mpq_class b = c.im();
    s += (b > 0) ? "+" : "-";
    mpq_class ab = abs(b);
    if (ab != 1) s += rational_str(ab) + "*";
    s += "i)";
    out.body = s;
    return out;
}

}  // namespace

std::string Poly::str() const {
    if (terms_.empty()) return "0";
    // Sort term pointers degrevlex-descending for display.
    MonomialOrder ord = MonomialOrder::degrevlex();
    std::vector<const std::pair<const Monomial, Scalar>*> ts;
    ts.reserve(terms_.size());
    for (const auto& t : terms_) ts.push_back(&t);
    std::sort(ts.begin(), ts.end(), [&](auto* a, auto* b) {
        int c = ord.compare(a->first, b->first);
        if (c != 0) return c > 0;
        return MonoLexLess{}(b->first, a->first);
    });
    std::string out;
    bool first = true;
    for (auto* t : ts) {
        const Monomial& m = t->first;
        std::string mono;
        for (size_t i = 0; i < ctx_.size(); ++i) {
            if (m[i] == 0) continue;
            if (!mono.empty()) mono += "*";
            if (ctx_.is_conjugate_slot(i))
                mono += "conj(" + ctx_.name(ctx_.partner(i)) + ")";
            else
                mono += ctx_.name(i);
            if (m[i] > 1) mono += "^" + std::to_string(m[i]);
        }
        CoeffText ct = coeff_text(t->second, !mono.empty());
        if (first) {
            if (ct.negative) out += "-";
            first = false;
        } else {
            out += ct.negative ? " - " : " + ";
        }
        if (ct.body.empty())
            out += mono.empty() ? "1" : mono;
        else {
            out += ct.body;
            if (!mono.empty()) out += "*" + mono;
        }
    }
    return out;
}

Poly reindex(const Poly& p, const VarContext& target, const std::vector<size_t>& var_map) {
    if (var_map.size() != p.ctx().size()) throw error("reindex: map arity mismatch");
    Poly r(target);
    for (const auto& [m, c] : p.terms()) {
        Monomial t(target.size());
        for (size_t i = 0; i < var_map.size(); ++i) {
            if (m[i] == 0) continue;
            if (var_map[i] >= target.size())
                throw error("reindex: variable '" + p.ctx().name(i) + "' not in target");
            t.at(var_map[i]) += m[i];
        }
        r.add_term(t, c);
    }
    return r;
}

int compare_polys(const Poly& a, const Poly& b) {
    auto ia = a.terms().begin(), ib = b.terms().begin();
    for (; ia != a.terms().end() && ib != b.terms().end(); ++ia, ++ib) {
        if (ia->first != ib->first) return MonoLexLess{}(ia->first, ib->first) ? -1 : 1;
        if (ia->second != ib->second) return Scalar::compare(ia->second, ib->second);
    }
    if (ia != a.terms().end()) return 1;
    if (ib != b.terms().end()) return -1;
    return 0;
}

}  // namespace germcalc

#include "germcalc/series.hpp"

namespace germcalc {

TruncatedSeries TruncatedSeries::constant(const std::string& var, unsigned trunc,
                                          const Scalar& a) {
    TruncatedSeries s(var, trunc);
    s.c_[0] = a;
    return s;
}

TruncatedSeries TruncatedSeries::identity(const std::string& var, unsigned trunc) {
    TruncatedSeries s(var, trunc);
    if (trunc < 1) throw error("TruncatedSeries::identity: trunc must be >= 1");
    s.c_[1] = Scalar(1);
    return s;
}

TruncatedSeries TruncatedSeries::from_poly(const Poly& p, size_t index, const std::string& var,
                                           unsigned trunc) {
    TruncatedSeries s(var, trunc);
    for (const auto& [m, c] : p.terms()) {
        for (size_t i = 0; i < m.arity(); ++i)
            if (i != index && m[i] != 0)
                throw error("TruncatedSeries::from_poly: polynomial not univariate in '" +
                            p.ctx().name(index) + "'");
        if (m[index] <= trunc) s.c_[m[index]] += c;
        // terms beyond the window are truncated away
    }
    return s;
}

bool TruncatedSeries::is_zero() const {
    for (const auto& x : c_)
        if (!x.is_zero()) return false;
    return true;
}

std::optional<unsigned> TruncatedSeries::order() const {
    for (unsigned k = 0; k < c_.size(); ++k)
        if (!c_[k].is_zero()) return k;
    return std::nullopt;
}

void TruncatedSeries::check_compat(const TruncatedSeries& o) const {
    if (c_.size() != o.c_.size())
        throw error("TruncatedSeries: truncation order mismatch");
}

TruncatedSeries TruncatedSeries::operator-() const {
    TruncatedSeries r(*this);
    for (auto& x : r.c_) x = -x;
    return r;
}

TruncatedSeries& TruncatedSeries::operator+=(const TruncatedSeries& o) {
    check_compat(o);
    for (size_t k = 0; k < c_.size(); ++k) c_[k] += o.c_[k];
    return *this;
}

TruncatedSeries& TruncatedSeries::operator-=(const TruncatedSeries& o) {
    check_compat(o);
    for (size_t k = 0; k < c_.size(); ++k) c_[k] -= o.c_[k];
    return *this;
}

TruncatedSeries operator*(const TruncatedSeries& a, const TruncatedSeries& b) {
    a.check_compat(b);
    TruncatedSeries r(a.var_, a.trunc());
    for (size_t i = 0; i < a.c_.size(); ++i) {
        if (a.c_[i].is_zero()) continue;
        for (size_t j = 0; i + j < b.c_.size(); ++j) {
            if (b.c_[j].is_zero()) continue;
            r.c_[i + j] += a.c_[i] * b.c_[j];
        }
    }
    return r;
}

TruncatedSeries TruncatedSeries::scaled(const Scalar& s) const {
    TruncatedSeries r(*this);
    for (auto& x : r.c_) x *= s;
    return r;
}

TruncatedSeries TruncatedSeries::pow(unsigned e) const {
    TruncatedSeries r = constant(var_, trunc(), Scalar(1));
    TruncatedSeries base = *this;
    while (e) {
        if (e & 1) r = r * base;
        e >>= 1;
        if (e) base = base * base;
    }
    return r;
}

TruncatedSeries TruncatedSeries::inverse() const {
    if (c_[0].is_zero()) throw error("TruncatedSeries::inverse: zero constant term");
    TruncatedSeries r(var_, trunc());
    Scalar inv0 = c_[0].inverse();
    r.c_[0] = inv0;
    for (size_t k = 1; k < c_.size(); ++k) {
        Scalar acc(0);
        for (size_t j = 1; j <= k; ++j) acc += c_[j] * r.c_[k - j];
        r.c_[k] = -acc * inv0;
    }
    return r;
}

TruncatedSeries TruncatedSeries::nth_root(unsigned m) const {
    if (m == 0) throw error("TruncatedSeries::nth_root: m must be positive");
    if (!c_[0].is_one()) throw error("TruncatedSeries::nth_root: constant term must be 1");
    // r^m = s. Differentiating: m r' s = r s', giving for k >= 1
    //   m k r_k s_0 = sum_{j=1..k} (j s_j r_{k-j} m ... ) rearranged below.
    // Use m * sum_{a+b=k, a>=1} a r_a s_b = sum_{a+b=k, b>=1} b s_b r_a.
    TruncatedSeries r(var_, trunc());
    r.c_[0] = Scalar(1);
    for (unsigned k = 1; k < c_.size(); ++k) {
        // m*k*r_k*s_0 + m*sum_{a=1..k-1} a r_a s_{k-a} = sum_{b=1..k} b s_b r_{k-b}
        Scalar rhs(0);
        for (unsigned b = 1; b <= k; ++b) rhs += c_[b] * Scalar((long)b) * r.c_[k - b];
        Scalar lhs(0);
        for (unsigned a = 1; a < k; ++a) lhs += r.c_[a] * Scalar((long)a) * c_[k - a];
        r.c_[k] = (rhs - Scalar((long)m) * lhs) / (Scalar((long)m) * Scalar((long)k));
    }
    return r;
}

TruncatedSeries TruncatedSeries::compose(const TruncatedSeries& inner) const {
    check_compat(inner);
    if (!inner.c_[0].is_zero())
        throw error("TruncatedSeries::compose: inner series must vanish at 0");
    // Horner from the top coefficient down.
    TruncatedSeries acc = constant(var_, trunc(), c_.back());
    for (size_t k = c_.size() - 1; k-- > 0;) {
        acc = acc * inner;
        acc.c_[0] += c_[k];
    }
    return acc;
}

TruncatedSeries TruncatedSeries::shift_down(unsigned k) const {
    auto o = order();
    if (!is_zero() && (!o || *o < k))
        throw error("TruncatedSeries::shift_down: order too small");
    TruncatedSeries r(var_, trunc());
    for (size_t j = k; j < c_.size(); ++j) r.c_[j - k] = c_[j];
    return r;
}

std::string TruncatedSeries::str() const {
    std::string out;
    for (unsigned k = 0; k < c_.size(); ++k) {
        if (c_[k].is_zero()) continue;
        if (!out.empty()) out += " + ";
        out += c_[k].str();
        if (k >= 1) out += "*" + var_ + (k > 1 ? "^" + std::to_string(k) : "");
    }
    if (out.empty()) out = "0";
    out += " + O(" + var_ + "^" + std::to_string(trunc() + 1) + ")";
    return out;
}

}  // namespace germcalc

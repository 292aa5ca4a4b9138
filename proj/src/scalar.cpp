#include "germcalc/scalar.hpp"

#include <utility>
#include <vector>

namespace germcalc {

Scalar Scalar::fraction(long num, long den) {
    if (den == 0) throw error("Scalar::fraction: zero denominator");
    mpq_class q(num, den);
    q.canonicalize();
    return Scalar(q);
}

Scalar Scalar::inverse() const {
    if (is_zero()) throw error("Scalar::inverse of zero");
    mpq_class n = norm();
    return Scalar(re_ / n, -im_ / n);
}

Scalar& Scalar::operator+=(const Scalar& o) {
    re_ += o.re_;
    im_ += o.im_;
    return *this;
}

Scalar& Scalar::operator-=(const Scalar& o) {
    re_ -= o.re_;
    im_ -= o.im_;
    return *this;
}

Scalar& Scalar::operator*=(const Scalar& o) {
    // (a+bi)(c+di) = (ac-bd) + (ad+bc)i
    mpq_class a = re_ * o.re_ - im_ * o.im_;
    mpq_class b = re_ * o.im_ + im_ * o.re_;
    re_ = std::move(a);
    im_ = std::move(b);
    return *this;
}

Scalar& Scalar::operator/=(const Scalar& o) { return *this *= o.inverse(); }

int Scalar::compare(const Scalar& a, const Scalar& b) {
    int c = cmp(a.re_, b.re_);
    if (c != 0) return c;
    return cmp(a.im_, b.im_);
}

std::optional<mpq_class> exact_sqrt(const mpq_class& q) {
    if (q < 0) return std::nullopt;
    if (q == 0) return mpq_class(0);
    mpz_class num = q.get_num(), den = q.get_den();
    mpz_class rn, rd;
    if (mpz_perfect_square_p(num.get_mpz_t()) == 0) return std::nullopt;
    if (mpz_perfect_square_p(den.get_mpz_t()) == 0) return std::nullopt;
    mpz_sqrt(rn.get_mpz_t(), num.get_mpz_t());
    mpz_sqrt(rd.get_mpz_t(), den.get_mpz_t());
    mpq_class r(rn, rd);
    r.canonicalize();
    return r;
}

namespace {

// Exact m-th root of a rational for odd or even m (even m requires q >= 0).
std::optional<mpq_class> exact_root_rational(const mpq_class& q, unsigned m) {
    if (m == 0) return std::nullopt;
    if (q == 0) return mpq_class(0);
    bool neg = q < 0;
    if (neg && m % 2 == 0) return std::nullopt;
    mpq_class a = neg ? mpq_class(-q) : q;
    mpz_class num = a.get_num(), den = a.get_den();
    mpz_class rn, rd;
    if (mpz_root(rn.get_mpz_t(), num.get_mpz_t(), m) == 0) return std::nullopt;
    if (mpz_root(rd.get_mpz_t(), den.get_mpz_t(), m) == 0) return std::nullopt;
    mpq_class r(rn, rd);
    r.canonicalize();
    if (neg) r = -r;
    return r;
}

// Square root in Q(i): solve (x+yi)^2 = a+bi exactly, using that |a+bi| must
// be a rational square for a representable root.
std::optional<Scalar> gaussian_sqrt(const Scalar& s) {
    if (s.is_zero()) return Scalar(0);
    auto r = exact_sqrt(s.norm());
    if (!r) return std::nullopt;
    // x^2 = (a + r)/2, y = b/(2x) when x != 0; else pure imaginary root.
    mpq_class x2 = (s.re() + *r) / 2;
    if (auto x = exact_sqrt(x2)) {
        if (*x != 0) {
            mpq_class y = s.im() / (2 * *x);
            Scalar cand(*x, y);
            if (cand * cand == s) return cand;
        }
    }
    mpq_class y2 = (*r - s.re()) / 2;
    if (auto y = exact_sqrt(y2)) {
        Scalar cand(mpq_class(0), *y);
        if (cand * cand == s) return cand;
    }
    return std::nullopt;
}

}  // namespace

namespace {

// Gaussian-integer m-th root of wr + wi*i. Any root lies on the circle
// |Y|^2 = n with n^m = wr^2 + wi^2, so when that norm root is an exact
// integer the candidates are the finitely many lattice points on the circle,
// scanned in a fixed order for determinism. The cap on n only forgoes roots
// of astronomically large inputs.
std::optional<Scalar> gaussian_integer_root(const mpz_class& wr, const mpz_class& wi,
                                            unsigned m) {
    mpz_class N = wr * wr + wi * wi;
    mpz_class n;
    if (mpz_root(n.get_mpz_t(), N.get_mpz_t(), m) == 0) return std::nullopt;
    if (n > mpz_class("1000000000000")) return std::nullopt;  // search cap
    for (mpz_class p = 0; p * p <= n; ++p) {
        mpz_class q2 = n - p * p;
        if (mpz_perfect_square_p(q2.get_mpz_t()) == 0) continue;
        mpz_class q;
        mpz_sqrt(q.get_mpz_t(), q2.get_mpz_t());
        std::vector<std::pair<mpz_class, mpz_class>> cands;
        cands.emplace_back(p, q);
        if (q != 0) cands.emplace_back(p, -q);
        if (p != 0) cands.emplace_back(-p, q);
        if (p != 0 && q != 0) cands.emplace_back(-p, -q);
        for (const auto& [cp, cq] : cands) {
            Scalar y{mpq_class(cp), mpq_class(cq)};
            Scalar acc(1);
            for (unsigned e = 0; e < m; ++e) acc *= y;
            if (acc.re() == wr && acc.im() == wi) return y;
        }
    }
    return std::nullopt;
}

}  // namespace

std::optional<Scalar> Scalar::nth_root(unsigned m) const {
    if (m == 0) throw error("Scalar::nth_root: m must be positive");
    if (m == 1) return *this;
    if (is_zero()) return Scalar(0);
    if (is_real()) {
        if (auto r = exact_root_rational(re_, m)) return Scalar(*r);
    }
    if (m == 2) return gaussian_sqrt(*this);  // closed form, no enumeration
    // Let D clear the denominators: for any root x, (D x)^m lands in the
    // Gaussian integers, and Z[i] is integrally closed, so D x must itself be
    // a Gaussian integer. Search for a Gaussian-integer root Y of
    // D^{m-1} (A + B i) and return Y / D.
    mpz_class D;
    mpz_lcm(D.get_mpz_t(), re_.get_den().get_mpz_t(), im_.get_den().get_mpz_t());
    mpq_class ra = re_ * D, rb = im_ * D;  // both integral now
    mpz_class scale;
    mpz_pow_ui(scale.get_mpz_t(), D.get_mpz_t(), m - 1);
    auto y = gaussian_integer_root(ra.get_num() * scale, rb.get_num() * scale, m);
    if (!y) return std::nullopt;
    return Scalar(y->re() / D, y->im() / D);
}

std::string Scalar::str() const {
    if (is_zero()) return "0";
    std::string out;
    if (re_ != 0) out += re_.get_str();
    if (im_ != 0) {
        if (!out.empty()) out += (im_ > 0) ? "+" : "-";
        else if (im_ < 0) out += "-";
        mpq_class a = abs(im_);
        if (a != 1) out += a.get_str() + "*";
        out += "i";
    }
    return out;
}

}  // namespace germcalc

#pragma once

#include <gmpxx.h>

#include <optional>
#include <stdexcept>
#include <string>

namespace germcalc {

/// Library-wide error type for contract violations (bad arity, mismatched
/// contexts, unmet preconditions that the caller could have checked).
class error : public std::runtime_error {
public:
    explicit error(const std::string& what) : std::runtime_error(what) {}
};

/// Gaussian rational a + b*i with arbitrary-precision rational components.
/// This is the coefficient field for everything in the library; there is no
/// floating point anywhere downstream of it.
class Scalar {
public:
    Scalar() : re_(0), im_(0) {}
    Scalar(long n) : re_(n), im_(0) {}                       // NOLINT: implicit on purpose
    Scalar(const mpq_class& re) : re_(re), im_(0) {}         // NOLINT
    Scalar(mpq_class re, mpq_class im) : re_(std::move(re)), im_(std::move(im)) {}

    static Scalar i() { return Scalar(mpq_class(0), mpq_class(1)); }
    static Scalar fraction(long num, long den);

    const mpq_class& re() const { return re_; }
    const mpq_class& im() const { return im_; }

    bool is_zero() const { return re_ == 0 && im_ == 0; }
    bool is_one() const { return re_ == 1 && im_ == 0; }
    bool is_real() const { return im_ == 0; }

    Scalar conj() const { return Scalar(re_, -im_); }
    /// a^2 + b^2 as a rational.
    mpq_class norm() const { return re_ * re_ + im_ * im_; }

    Scalar inverse() const;

    Scalar operator-() const { return Scalar(-re_, -im_); }
    Scalar& operator+=(const Scalar& o);
    Scalar& operator-=(const Scalar& o);
    Scalar& operator*=(const Scalar& o);
    Scalar& operator/=(const Scalar& o);

    friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
    friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
    friend Scalar operator*(Scalar a, const Scalar& b) { return a *= b; }
    friend Scalar operator/(Scalar a, const Scalar& b) { return a /= b; }

    friend bool operator==(const Scalar& a, const Scalar& b) {
        return a.re_ == b.re_ && a.im_ == b.im_;
    }
    friend bool operator!=(const Scalar& a, const Scalar& b) { return !(a == b); }

    /// Total order used only for deterministic container keys and sorting.
    static int compare(const Scalar& a, const Scalar& b);

    /// Exact m-th root when one is representable in Q(i) and this
    /// implementation can find it (all rational cases; square roots of any
    /// Gaussian rational whose norm is a rational square; towers of those).
    std::optional<Scalar> nth_root(unsigned m) const;

    std::string str() const;

private:
    mpq_class re_, im_;
};

/// Exact rational square root, if the argument is a square. Negative input or
/// a non-square returns nullopt.
std::optional<mpq_class> exact_sqrt(const mpq_class& q);

}  // namespace germcalc

#pragma once

#include <optional>
#include <vector>

#include "germcalc/poly.hpp"

namespace germcalc {

/// Univariate power series truncated at degree D (inclusive): coefficients
/// c[0..D] of t^0..t^D. Arithmetic is exact on the retained window.
class TruncatedSeries {
public:
    TruncatedSeries(std::string var, unsigned trunc)
        : var_(std::move(var)), c_(trunc + 1, Scalar(0)) {}

    static TruncatedSeries constant(const std::string& var, unsigned trunc, const Scalar& a);
    /// t itself.
    static TruncatedSeries identity(const std::string& var, unsigned trunc);
    /// Coefficients of a univariate polynomial in ctx variable `index`.
    static TruncatedSeries from_poly(const Poly& p, size_t index, const std::string& var,
                                     unsigned trunc);

    const std::string& var() const { return var_; }
    unsigned trunc() const { return (unsigned)c_.size() - 1; }
    const Scalar& coeff(unsigned k) const { return c_.at(k); }
    void set_coeff(unsigned k, const Scalar& v) { c_.at(k) = v; }

    bool is_zero() const;
    /// Smallest k with nonzero coefficient; nullopt if zero through D.
    std::optional<unsigned> order() const;

    TruncatedSeries operator-() const;
    TruncatedSeries& operator+=(const TruncatedSeries& o);
    TruncatedSeries& operator-=(const TruncatedSeries& o);
    friend TruncatedSeries operator+(TruncatedSeries a, const TruncatedSeries& b) { return a += b; }
    friend TruncatedSeries operator-(TruncatedSeries a, const TruncatedSeries& b) { return a -= b; }
    friend TruncatedSeries operator*(const TruncatedSeries& a, const TruncatedSeries& b);
    TruncatedSeries scaled(const Scalar& s) const;
    TruncatedSeries pow(unsigned e) const;

    friend bool operator==(const TruncatedSeries& a, const TruncatedSeries& b) {
        return a.c_ == b.c_;
    }
    friend bool operator!=(const TruncatedSeries& a, const TruncatedSeries& b) { return !(a == b); }

    /// Multiplicative inverse; requires nonzero constant term.
    TruncatedSeries inverse() const;
    /// m-th root with constant term 1; requires c[0] == 1.
    TruncatedSeries nth_root(unsigned m) const;
    /// Substitute `inner` (which must vanish at 0) for the variable.
    TruncatedSeries compose(const TruncatedSeries& inner) const;
    /// Divide by t^k; requires order >= k.
    TruncatedSeries shift_down(unsigned k) const;

    std::string str() const;

private:
    void check_compat(const TruncatedSeries& o) const;

    std::string var_;
    std::vector<Scalar> c_;
};

}  // namespace germcalc

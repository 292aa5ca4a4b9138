#pragma once

#include <cstdint>
#include <vector>

#include "germcalc/scalar.hpp"

namespace germcalc {

/// Exponent vector. Arity is fixed by the owning polynomial's context.
class Monomial {
public:
    explicit Monomial(size_t arity) : e_(arity, 0) {}
    explicit Monomial(std::vector<uint32_t> exps) : e_(std::move(exps)) {}

    static Monomial var(size_t arity, size_t index, uint32_t power = 1) {
        Monomial m(arity);
        m.e_.at(index) = power;
        return m;
    }

    size_t arity() const { return e_.size(); }
    uint32_t operator[](size_t i) const { return e_[i]; }
    uint32_t& at(size_t i) { return e_.at(i); }
    const std::vector<uint32_t>& exps() const { return e_; }

    unsigned total_degree() const {
        unsigned d = 0;
        for (uint32_t x : e_) d += x;
        return d;
    }

    bool is_one() const {
        for (uint32_t x : e_)
            if (x) return false;
        return true;
    }

    bool divides(const Monomial& o) const {
        for (size_t i = 0; i < e_.size(); ++i)
            if (e_[i] > o.e_[i]) return false;
        return true;
    }

    Monomial operator*(const Monomial& o) const {
        Monomial r(*this);
        for (size_t i = 0; i < e_.size(); ++i) r.e_[i] += o.e_[i];
        return r;
    }

    /// Quotient; caller guarantees divisibility.
    Monomial quotient_by(const Monomial& o) const {
        Monomial r(*this);
        for (size_t i = 0; i < e_.size(); ++i) r.e_[i] -= o.e_[i];
        return r;
    }

    static Monomial lcm(const Monomial& a, const Monomial& b) {
        Monomial r(a);
        for (size_t i = 0; i < r.e_.size(); ++i)
            if (b.e_[i] > r.e_[i]) r.e_[i] = b.e_[i];
        return r;
    }

    friend bool operator==(const Monomial& a, const Monomial& b) { return a.e_ == b.e_; }
    friend bool operator!=(const Monomial& a, const Monomial& b) { return !(a == b); }

private:
    std::vector<uint32_t> e_;
};

/// Storage comparator for term maps: plain lexicographic on exponent vectors.
/// This fixes a deterministic iteration order independent of any monomial
/// order chosen for division.
struct MonoLexLess {
    bool operator()(const Monomial& a, const Monomial& b) const {
        return a.exps() < b.exps();
    }
};

}  // namespace germcalc

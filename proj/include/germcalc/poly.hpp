#pragma once

#include <functional>
#include <map>
#include <string>
#include <vector>

#include "germcalc/context.hpp"
#include "germcalc/monomial.hpp"
#include "germcalc/order.hpp"

namespace germcalc {

/// Multivariate polynomial over Q(i) with named variables. Terms are kept in
/// a map with a fixed storage order, so iteration (and hence every derived
/// computation) is deterministic regardless of the monomial order in play.
class Poly {
public:
    using TermMap = std::map<Monomial, Scalar, MonoLexLess>;

    Poly() = default;
    explicit Poly(VarContext ctx) : ctx_(std::move(ctx)) {}

    static Poly constant(const VarContext& ctx, const Scalar& c);
    static Poly variable(const VarContext& ctx, size_t index);
    static Poly term(const VarContext& ctx, const Monomial& m, const Scalar& c);

    const VarContext& ctx() const { return ctx_; }
    const TermMap& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    size_t term_count() const { return terms_.size(); }

    /// -1 for the zero polynomial.
    int total_degree() const;
    Scalar coeff(const Monomial& m) const;
    Scalar constant_term() const;
    bool vanishes_at_zero() const { return constant_term().is_zero(); }
    bool is_constant() const;

    void add_term(const Monomial& m, const Scalar& c);

    Poly operator-() const;
    Poly& operator+=(const Poly& o);
    Poly& operator-=(const Poly& o);
    friend Poly operator+(Poly a, const Poly& b) { return a += b; }
    friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
    friend Poly operator*(const Poly& a, const Poly& b);
    Poly& operator*=(const Poly& o) { return *this = *this * o; }
    Poly scaled(const Scalar& c) const;
    Poly times_term(const Monomial& m, const Scalar& c) const;
    Poly pow(unsigned e) const;

    friend bool operator==(const Poly& a, const Poly& b) {
        return a.ctx_ == b.ctx_ && a.terms_ == b.terms_;
    }
    friend bool operator!=(const Poly& a, const Poly& b) { return !(a == b); }

    Poly derivative(size_t var) const;

    /// Coefficient-wise complex conjugation.
    Poly conj_coeffs() const;
    /// Paired contexts: swap each variable with its partner and conjugate
    /// coefficients. Fixed points of this involution are the real-valued
    /// functions on the underlying real space.
    Poly bar_involution() const;
    /// Swap variables with partners without conjugating coefficients.
    Poly swap_pairs() const;

    Scalar eval(const std::vector<Scalar>& values) const;
    /// Substitute each variable by a polynomial (all images over one context).
    Poly compose(const std::vector<Poly>& images) const;

    /// Evaluate in an arbitrary commutative ring R: `lift` embeds scalars,
    /// `zero` is the additive identity of R. R needs + and *.
    template <class R, class Lift>
    R eval_in(const std::vector<R>& values, Lift lift, R zero) const {
        if (values.size() != ctx_.size()) throw error("Poly::eval_in: arity mismatch");
        R acc = zero;
        for (const auto& [m, c] : terms_) {
            R t = lift(c);
            for (size_t i = 0; i < ctx_.size(); ++i)
                for (uint32_t k = 0; k < m[i]; ++k) t = t * values[i];
            acc = acc + t;
        }
        return acc;
    }

    std::pair<Monomial, Scalar> leading_term(const MonomialOrder& ord) const;
    const Monomial& leading_monomial(const MonomialOrder& ord) const;
    /// Leading coefficient scaled to 1.
    Poly monic(const MonomialOrder& ord) const;

    /// Degree-1 part as a coefficient vector (entry per variable).
    std::vector<Scalar> linear_part() const;

    /// Canonical rendering: terms sorted degrevlex-descending, exact
    /// coefficients, explicit '*'; conjugate slots of paired contexts render
    /// as conj(name). The output reparses to the same polynomial.
    std::string str() const;

private:
    VarContext ctx_;
    TermMap terms_;
};

/// Map a polynomial into another context. var_map[i] gives the target index
/// of source variable i.
Poly reindex(const Poly& p, const VarContext& target, const std::vector<size_t>& var_map);

/// Deterministic polynomial comparison (storage order on term lists).
int compare_polys(const Poly& a, const Poly& b);

}  // namespace germcalc

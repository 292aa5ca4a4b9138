#pragma once

#include <vector>

#include "germcalc/poly.hpp"

namespace germcalc {

/// Element of Q(i)[w] / Phi_q(w) for q in {1,2,3,4,5,6}: exact arithmetic
/// with a primitive q-th root of unity adjoined. For q in {1,2,4} the root
/// already lies in Q(i) and the representation is one coefficient long.
class CycScalar {
public:
    CycScalar(unsigned q, Scalar constant);
    /// The class of w^k (a q-th root of unity).
    static CycScalar root_power(unsigned q, unsigned k);

    unsigned order() const { return q_; }
    bool is_zero() const;
    /// The rational part when the element is a plain scalar; throws otherwise.
    Scalar as_scalar() const;

    CycScalar operator-() const;
    friend CycScalar operator+(const CycScalar& a, const CycScalar& b);
    friend CycScalar operator-(const CycScalar& a, const CycScalar& b);
    friend CycScalar operator*(const CycScalar& a, const CycScalar& b);
    friend bool operator==(const CycScalar& a, const CycScalar& b);
    friend bool operator!=(const CycScalar& a, const CycScalar& b) { return !(a == b); }

private:
    unsigned q_;
    std::vector<Scalar> c_;  // coefficients 1, w, w^2, ... below deg Phi_q
};

/// i-th elementary symmetric polynomial of the context's variables.
Poly elementary_symmetric(const VarContext& ctx, unsigned i);

/// j-th power sum of the context's variables.
Poly power_sum(const VarContext& ctx, unsigned j);

/// d is invariant under every permutation of its variables.
bool is_symmetric(const Poly& d);

/// Rewrite a symmetric polynomial d(w_1..w_p) as a(c_1..c_p), where c_i is
/// the coefficient of y^{p-i} in prod (y - w_j), i.e. c_i = (-1)^i e_i. The
/// identity d = a(c_1(w),...,c_p(w)) holds exactly; homogeneous d of degree
/// q only uses c_1..c_q. Throws when d is not symmetric.
Poly sym_express(const Poly& d);

/// Least 1 <= j <= q such that c_j != 0 for the monic polynomial with the
/// given signed coefficients [c_1..c_p]; throws when all of c_1..c_q vanish.
unsigned first_nonzero_coeff(const std::vector<Scalar>& c, unsigned q);

/// The same search for Q(y) = prod_i (y - w^{exps[i]}) with w a primitive
/// q-th root of unity, expanded exactly (in Q(i) for q in {1,2,4}, in the
/// cyclotomic extension otherwise, q <= 6). The returned index always
/// satisfies j <= q; as a cross-check, the q-th power sum of the roots is
/// recomputed from c_1..c_q through sym_express and must equal the number of
/// roots exactly.
unsigned roots_of_unity_coeff(const std::vector<unsigned>& exps, unsigned q);

}  // namespace germcalc

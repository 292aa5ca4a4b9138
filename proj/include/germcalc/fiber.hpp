#pragma once

#include <optional>
#include <string>
#include <vector>

#include "germcalc/ideal.hpp"
#include "germcalc/linalg.hpp"

namespace germcalc {

/// The coordinate ring of the graph of a polynomial map, viewed as a module
/// over the target ring: C[x, T] / <components_j(x) - T_j>. When the module is
/// free with a finite monomial basis in x (detected from a block basis with
/// the source variables dominant), multiplication operators by source
/// polynomials become matrices with entries polynomial in the target
/// variables. Construction never throws for representable inputs; `ok()`
/// reports whether the free-basis detection succeeded.
class FiberAlgebra {
public:
    FiberAlgebra(const VarContext& source, std::vector<Poly> components,
                 const VarContext& target);

    bool ok() const { return failure_.empty(); }
    const std::string& failure() const { return failure_; }

    size_t rank() const { return basis_.size(); }
    /// Monomials in the source variables forming the module basis, ascending
    /// by degree. Exponent vectors have source arity.
    const std::vector<Monomial>& basis() const { return basis_; }

    /// Matrix (rank x rank) of multiplication by h (a polynomial over the
    /// source context) with entries over the target context; nullopt when a
    /// reduction escapes the detected basis.
    std::optional<PolyMatrix> mult_matrix(const Poly& h) const;

    /// Characteristic polynomial coefficients [c1..cr] of multiplication by h:
    /// det(xI - M) = x^r + c1 x^{r-1} + ... + cr, entries over the target.
    std::optional<std::vector<Poly>> char_poly_of(const Poly& h) const;

    /// Trace of multiplication by h over the target ring.
    std::optional<Poly> trace_of(const Poly& h) const;

private:
    VarContext source_, target_, joint_;
    std::vector<size_t> src_to_joint_, tgt_to_joint_;
    MonomialOrder ord_;
    std::vector<Poly> gb_;
    std::vector<Monomial> basis_;  // source-arity exponents
    std::string failure_;
};

}  // namespace germcalc

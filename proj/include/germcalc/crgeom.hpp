#pragma once

#include <optional>
#include <string>
#include <vector>

#include "germcalc/germmap.hpp"

namespace germcalc {

/// A real-analytic submanifold germ at 0 in C^N cut out by polynomial
/// defining functions. The functions live in a paired context whose second
/// half plays the conjugated variables, so "real-valued" is checkable
/// algebraically: each rho_j must be fixed by the bar involution.
struct RealSubmanifold {
    /// Validates: paired context, every rho vanishing at 0, bar-involution
    /// symmetry of every rho, and R-linear independence of the real
    /// differentials at 0. Throws on any violation.
    RealSubmanifold(VarContext ctx, std::vector<Poly> rho);

    VarContext ctx;         // paired: (Z_1..Z_N | conjugate slots)
    std::vector<Poly> rho;  // d real-valued defining functions
    size_t N = 0;           // ambient complex dimension
    size_t d = 0;           // real codimension

    /// d x N matrix d rho / d Z at 0 (holomorphic slots).
    ScalarMatrix holo_gradient_at0() const;
    /// d x N matrix d rho / d Zbar at 0 (conjugate slots).
    ScalarMatrix antiholo_gradient_at0() const;
    /// d x 2N rational matrix of the real differentials at 0, columns ordered
    /// (x_1..x_N, y_1..y_N) for Z = x + i y. Rows are real because each rho
    /// is real-valued.
    RatMatrix real_differentials_at0() const;
};

/// The complex variety in (Z, zeta) obtained by treating the conjugate slots
/// of the defining functions as independent variables.
struct ComplexifiedManifold {
    IdealHandle ideal;
};

/// Promote M's defining functions to an ideal over the same paired context.
/// Verifies, generator by generator, that the bar-involution image lies back
/// in the ideal (the variety is stable under swapping the two halves with
/// conjugated coefficients).
ComplexifiedManifold complexify_manifold(const RealSubmanifold& M);

/// Doubled map on (Z, zeta): first half H(Z), second half H with conjugated
/// coefficients applied to the zeta slots. Source and target are the paired
/// extensions of H's contexts.
MapGerm complexify_map(const MapGerm& H);
/// Same, but over caller-chosen paired contexts (bases must match H's
/// variable lists positionally).
MapGerm complexify_map(const MapGerm& H, const VarContext& src2, const VarContext& tgt2);

/// The holomorphic differentials of the defining functions are independent
/// at 0: rank of d rho / d Z(0) equals the codimension.
bool is_generic(const RealSubmanifold& M);

/// CR dimension data: the antiholomorphic tangent space dimension at 0
/// versus its generic value along the germ. The two agree exactly when the
/// CR dimension is locally constant at 0.
struct CRProfile {
    size_t cr_dim_at_0 = 0;
    size_t generic_cr_dim = 0;
    bool is_cr_at_0 = false;
};
CRProfile cr_profile(const RealSubmanifold& M);

/// A tangent (0,1) vector field with polynomial coefficients: the N
/// components along the conjugate directions. Fields produced by
/// cr_field_basis annihilate every defining function identically (an exact
/// polynomial identity, not merely modulo the ideal).
struct CRVectorField {
    std::vector<Poly> coeffs;  // length N, component i along conj slot of Z_i
};

/// N - d fields spanning the (0,1) tangent bundle near 0. Requires the
/// antiholomorphic gradient at 0 to have full rank d (guaranteed for
/// manifolds passing is_generic); throws otherwise.
std::vector<CRVectorField> cr_field_basis(const RealSubmanifold& M);

/// Outcome of a bounded-order search: either the property was established
/// at the recorded order (order <= bound), or the search was exhausted.
/// An exhausted search never claims the property fails.
struct OrderVerdict {
    bool determined = false;
    unsigned order = 0;   // meaningful when determined
    unsigned bound = 0;   // the cap the search ran to
};

/// Iterated Lie brackets of the tangent (1,0) and (0,1) fields, evaluated at
/// 0, span the full complexified tangent space of M (dimension 2N - d) at
/// some bracket length k <= K. Requires a generic manifold.
OrderVerdict finite_type_check(const RealSubmanifold& M, unsigned K);

/// Words of (0,1) fields applied to the holomorphic gradient rows of the
/// defining functions span C^N at some derivative order k <= K. Requires a
/// generic manifold.
OrderVerdict finitely_nondegenerate_check(const RealSubmanifold& M, unsigned K);

/// The holomorphic tangent space of Mtilde at 0 plus the image of dH(0)
/// fills C^N. Requires Mtilde to be CR at 0 (throws otherwise).
bool cr_transversal_check(const MapGerm& H, const RealSubmanifold& Mtilde);

/// Transversality of H to Mtilde at 0 as a real map of R^{2N}: the real
/// tangent space of Mtilde plus the image of the realified dH(0) fills
/// R^{2N}. Equivalently, the real differentials of the defining functions
/// composed with dH(0) have full rank d.
bool real_transversal_check(const MapGerm& H, const RealSubmanifold& Mtilde);

/// Compare the preimage of the image of the complexified manifold under the
/// complexified map against the manifold itself, as germs at 0. Requires H
/// finite (the doubled map is then finite as well; both are asserted).
GermVerdict complexified_preimage_equal(const RealSubmanifold& M, const MapGerm& H);

/// Rebuild a real submanifold from a complex ideal over a paired context:
/// certify the ideal smooth of codimension d, symmetrize each generator into
/// real-valued candidates g + bar(g) and i*(g - bar(g)), and select d of
/// them with independent real differentials at 0. Returns nullopt (with a
/// reason in *note) when the ideal is not certified smooth, a generator's
/// bar image escapes the ideal, or too few independent candidates exist.
/// The result's underlying real points contain the real trace of V(ideal);
/// equality is a separate theorem-level conclusion, not asserted here.
std::optional<RealSubmanifold> extract_real_defining(const IdealHandle& ideal,
                                                     std::string* note = nullptr);

/// A holomorphic polynomial (in the Z slots only, degree between 1 and
/// maxdeg) vanishing on the manifold, if one exists at this degree; found by
/// linear algebra against a reduced basis of the complexified ideal. A hit
/// certifies that M lies in a proper complex subvariety.
std::optional<Poly> holomorphic_poly_on_manifold(const RealSubmanifold& M, unsigned maxdeg);

/// Aggregated report on a manifold/map pair: finiteness and multiplicity,
/// genericity and bounded-order type of the source manifold, containment in
/// a proper complex subvariety, preimage equality of the complexifications,
/// smoothness of the complexified image with extraction of real defining
/// functions, genericity/type of the extracted image, both transversality
/// checks, and the rank bound rank dH(0) >= codim. Every implication among
/// these verdicts that is decidable from definite sub-verdicts is
/// cross-checked; violations land in `inconsistencies` (always empty unless
/// the library itself is wrong).
struct ManifoldMapReport {
    unsigned K = 0;  // bound used for the bounded-order checks

    bool h_finite = false;
    std::optional<size_t> mult;
    size_t jac_rank_at_0 = 0;
    size_t codim = 0;

    bool m_generic = false;
    OrderVerdict m_finite_type;
    std::optional<bool> m_in_proper_subvariety;  // nullopt: search exhausted, unknown
    std::optional<Poly> subvariety_witness;

    std::optional<GermVerdict> preimage;  // nullopt when H is not finite

    SmoothCertificate image_smooth;               // of the complexified image ideal
    std::optional<IdealHandle> image_ideal_2n;    // over the paired target
    std::optional<RealSubmanifold> image_manifold;  // extracted candidate
    std::optional<bool> image_generic;
    std::optional<CRProfile> image_cr;
    OrderVerdict image_finite_type;

    std::optional<bool> real_transversal;
    std::optional<bool> cr_transversal;
    bool rank_bound_ok = false;  // jac_rank_at_0 >= codim

    std::vector<std::string> notes;
    std::vector<std::string> inconsistencies;
};
ManifoldMapReport manifold_map_report(const RealSubmanifold& M, const MapGerm& H,
                                      unsigned K = 6);

}  // namespace germcalc

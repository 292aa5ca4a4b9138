#pragma once

#include <memory>
#include <optional>
#include <vector>

#include "germcalc/division.hpp"

namespace germcalc {

/// Standard basis together with provenance: elems[i] == sum_j rep[i][j] * gen_j
/// exactly, where gen_j are the generators the basis was computed from. The
/// representation stays polynomial even through Mora reductions (each new
/// element is an exact polynomial combination of earlier ones).
struct TrackedBasis {
    std::vector<Poly> elems;
    std::vector<std::vector<Poly>> rep;
};

/// Handle to a finitely generated ideal of the (local or global) polynomial
/// ring over a context. Standard bases are computed lazily per monomial order
/// and cached; copies of a handle share the cache. Cache writes are guarded,
/// so read-only sharing across threads is safe.
class IdealHandle {
public:
    IdealHandle(VarContext ctx, std::vector<Poly> gens);

    const VarContext& ctx() const;
    const std::vector<Poly>& generators() const;
    bool is_zero_ideal() const { return generators().empty(); }

    const std::vector<Poly>& standard_basis(const MonomialOrder& ord) const;
    const TrackedBasis& tracked_basis(const MonomialOrder& ord) const;

private:
    struct Impl;
    std::shared_ptr<Impl> impl_;
};

/// Buchberger / Buchberger-with-Mora engine (the latter for local orders).
/// Output is deterministic: normal pair strategy (degree-ordered queue,
/// index tie-break), minimal basis, monic, sorted; global orders additionally
/// tail-reduce to the unique reduced basis.
std::vector<Poly> standard_basis_of(const std::vector<Poly>& gens, const MonomialOrder& ord);
TrackedBasis tracked_standard_basis_of(const std::vector<Poly>& gens, const MonomialOrder& ord);

/// Test helper: every S-polynomial of `basis` reduces to zero.
bool is_standard_basis(const std::vector<Poly>& basis, const MonomialOrder& ord);

/// Ideal of I in the subring without the dropped variables, via a block order
/// with the dropped variables greatest. Requires a global computation; the
/// result context keeps pairing when the dropped set respects it.
IdealHandle eliminate(const IdealHandle& ideal, const std::vector<size_t>& drop);

/// Reduction of p modulo the standard basis of I for `ord`, with cofactors
/// mapped back to the original generators through basis provenance:
///   unit * p = sum_j cofactors[j] * gen_j + remainder,  unit(0) != 0
/// (unit == 1 for global orders).
struct NormalFormCert {
    Poly remainder;
    std::vector<Poly> cofactors;
    Poly unit;
};
NormalFormCert normal_form(const Poly& p, const IdealHandle& ideal, const MonomialOrder& ord);

struct MembershipCert {
    std::vector<Poly> cofactors;
    Poly unit;
};
/// nullopt when p is not in the ideal (w.r.t. `ord`'s ring: local orders
/// decide membership in the localization).
std::optional<MembershipCert> membership_with_cofactors(
    const Poly& p, const IdealHandle& ideal,
    const MonomialOrder& ord = MonomialOrder::degrevlex());

/// p in radical(I), decided globally by adjoining 1 - s*p.
bool radical_membership(const Poly& p, const IdealHandle& ideal);

/// Some power p^k, k <= max_power, lies in the localized ideal (Mora normal
/// form vanishes). Sound but bounded.
bool local_power_membership(const Poly& p, const IdealHandle& ideal, unsigned max_power = 6);

/// p vanishes on the germ of V(I) at 0. Sound combination of the global
/// radical test and bounded local power membership; complete on ideals whose
/// components all pass through the origin.
bool vanishes_on_germ(const Poly& p, const IdealHandle& ideal);

/// dim_C C{x}/I by staircase counting over a local standard basis; nullopt
/// when infinite (some variable has no pure-power leading term).
std::optional<size_t> local_quotient_dim(const IdealHandle& ideal);

/// Monomial basis of the local quotient (finite case only; throws otherwise).
std::vector<Monomial> local_staircase(const IdealHandle& ideal);

/// Krull dimension of k[x]/M for the monomial ideal generated by `gens`:
/// the largest coordinate subspace meeting V(M).
size_t monomial_ideal_dimension(const std::vector<Monomial>& gens, size_t nvars);

enum class SmoothStatus { Smooth, Inconclusive };

/// One-sided smoothness certificate for the germ of V(I) at 0: rank r of the
/// Jacobian at 0 matching codimension (local Krull dimension n - r) certifies
/// a smooth germ of codimension r. Never reports Smooth incorrectly; failure
/// to certify is Inconclusive with the collected data.
struct SmoothCertificate {
    SmoothStatus status = SmoothStatus::Inconclusive;
    size_t codim = 0;   // meaningful when Smooth
    size_t jac_rank = 0;
    std::optional<size_t> leading_dim;  // dim of the local leading ideal's variety
    std::string note;
};
SmoothCertificate is_smooth_germ(const IdealHandle& ideal);

enum class GermRelation { Equal, StrictlyLarger, StrictlySmaller, Incomparable };
const char* relation_name(GermRelation r);

/// Comparison of the germs V(I) vs V(J) at 0. The status describes V(I)
/// relative to V(J) (StrictlyLarger: V(I) contains V(J) strictly). A
/// non-Equal verdict carries the generator that failed the corresponding
/// vanishing test as a witness.
struct GermVerdict {
    GermRelation status;
    std::optional<Poly> witness;
    std::string witness_side;  // "first" / "second": which ideal's generator failed
};
GermVerdict germ_set_equal(const IdealHandle& I, const IdealHandle& J);

/// <x_i : i in vars> as an ideal handle.
IdealHandle coordinate_subspace_ideal(const VarContext& ctx, const std::vector<size_t>& vars);

}  // namespace germcalc

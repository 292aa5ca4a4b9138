#pragma once

#include <optional>
#include <string>
#include <vector>

#include "germcalc/fiber.hpp"
#include "germcalc/ideal.hpp"
#include "germcalc/linalg.hpp"

namespace germcalc {

/// A polynomial map germ (C^k, 0) -> (C^k, 0): equal source and target arity,
/// every component vanishing at the origin.
struct MapGerm {
    MapGerm(VarContext src, VarContext tgt, std::vector<Poly> comps);

    static MapGerm identity(const VarContext& src, const VarContext& tgt);

    VarContext source, target;
    std::vector<Poly> components;  // over source, indexed like target vars

    /// Ideal generated by the components (the fiber over 0).
    IdealHandle component_ideal() const;
    /// Determinant of the Jacobian matrix d components / d source.
    Poly jacobian_det() const;
    /// Jacobian at the origin as a scalar matrix (rows: components).
    ScalarMatrix jacobian_at_zero() const;
};

/// The fiber over 0 has finite length (equivalently, the germ is finite).
bool is_finite(const MapGerm& f);

/// Local length of the fiber algebra over 0; throws when infinite.
size_t multiplicity(const MapGerm& f);

/// The Jacobian determinant does not vanish identically on the germ of V(X).
bool jaccond_check(const MapGerm& f, const IdealHandle& X);

/// Ideal of the image germ f(V(X)) at 0 in the target variables, by
/// eliminating the source from the graph ideal. X lives over f.source; the
/// result lives over f.target. Requires a finite map.
IdealHandle image_ideal(const MapGerm& f, const IdealHandle& X);

/// Substitute the map components into generators of an ideal over the target.
IdealHandle pullback(const MapGerm& f, const IdealHandle& ideal_in_target);

/// Compare the germ f^{-1}(f(V(X))) against V(X): Equal when taking the
/// image and pulling back loses nothing; StrictlyLarger carries a witness
/// generator of X that fails on the preimage.
GermVerdict preimage_closure_equals(const MapGerm& f, const IdealHandle& X);

/// A choice of coordinates adapted to a subvariety of the source: y-block
/// (the variables cutting it out) and the complementary x-block, together
/// with the matching partition of the target into an eta-block (components
/// whose differential at 0 covers the y-directions) and a xi-block.
struct BlockSplit {
    std::vector<size_t> x_src, y_src;    // partition of source indices (ascending)
    std::vector<size_t> xi_tgt, eta_tgt; // partition of target indices (ascending)

    /// Choose the eta-block greedily from d components / d y (0): the first
    /// q rows of rank q. nullopt when that rank is below q.
    static std::optional<BlockSplit> detect(const MapGerm& f, std::vector<size_t> y_src);
};

/// Certificate that each y_l lies in the ideal of the map components, written
/// against the normalized components (an invertible linear recombination T of
/// the originals making dS/dy(0) = I and dR/dy(0) = 0):
///   units[l] * y_l = sum_k A[l][k] * R_k + sum_m B[l][m] * S_m
/// with units[l](0) = 1 and B(0) = I exactly.
struct MembershipMatrices {
    PolyMatrix A;  // q x p
    PolyMatrix B;  // q x q
    std::vector<Poly> units;
    ScalarMatrix target_change;             // T, size k x k: normalized = T * original
    std::vector<Poly> normalized_components;  // T applied to f's components
};
std::optional<MembershipMatrices> coordinate_membership(const MapGerm& f, const BlockSplit& sp);

/// The normalized map written in blocks: R (xi-components) and S
/// (eta-components) over the source, with
///   R = R0(x) + R1(x,y) * y,  R1(0) = 0,  dR/dy(0) = 0
///   S = y + S0(x) + S1(x,y) * y,  S1(0) = 0,  dS/dy(0) = I.
struct SplitMap {
    BlockSplit split;
    VarContext source, target;
    ScalarMatrix target_change;  // T as in MembershipMatrices
    std::vector<Poly> R, S;      // over source
    std::vector<Poly> R0, S0;    // restrictions y = 0 (x-variables only)
    PolyMatrix R1, S1;           // p x q and q x q, entries over source
};
/// Throws when d components / d y (0) restricted to the eta rows is singular.
SplitMap split_target(const MapGerm& f, const BlockSplit& sp);

/// The q polynomials g over the xi target variables with S0 = g(R0) exactly,
/// computed from the trace of multiplication on the fiber module of R0 and
/// falling back to solving for coefficients degree by degree; the identity
/// S0 = g(R0) is verified exactly before returning. Throws when S0 does not
/// factor through R0.
std::vector<Poly> compute_g(const SplitMap& sm);

/// A certified linear straightening of V(X) to a coordinate subspace: new
/// coordinates u = C * x (same names) in which the ideal equals <u_j : j in
/// y_src> as a germ. Only changes that are linear on the nose are attempted.
struct Straightening {
    ScalarMatrix C, Cinv;       // u = C x, x = Cinv u
    std::vector<size_t> y_src;  // coordinate slots cutting out the image of V(X)
    std::vector<Poly> new_gens; // X generators rewritten in u
};
std::optional<Straightening> straighten_linear(const IdealHandle& X, size_t expected_codim);

enum class PipelineStage {
    SmoothX,
    Straighten,
    Jacobian,
    Preimage,
    Membership,
    GFormula,
    Final,
};
const char* stage_name(PipelineStage s);

/// Result of the full normal-form pipeline along a smooth germ V(X): either a
/// structured report of which hypothesis failed, or the coordinate changes
/// putting f into the shape (R0(x) + R1 y, y + O(2) y), with the image germ
/// read off as the eta'-coordinate subspace.
struct NormalFormResult {
    bool ok = false;
    PipelineStage failed_stage = PipelineStage::Final;
    std::string failure_note;
    std::optional<GermVerdict> preimage_verdict;

    std::vector<size_t> y_source, eta_target;
    ScalarMatrix source_change;            // u = C x (identity when X was straight)
    std::vector<Poly> target_change;       // k polynomials over the target: new_i(old)
    std::vector<Poly> g;                   // over the target context, xi variables only
    std::optional<MapGerm> final_map;      // new source coords -> new target coords
    std::optional<IdealHandle> image;      // over f.target: generated by the eta' forms
    SmoothCertificate image_smooth;
    bool structural_transversality = false;
    size_t multiplicity_value = 0;
};
NormalFormResult normal_form_along_X(const MapGerm& f, const IdealHandle& X);

/// Tangent space of the smooth germ V(W) at 0 plus the image of df(0) spans
/// the target space. Throws when V(W) is not certified smooth.
bool transversal_at(const MapGerm& f, const IdealHandle& W);

}  // namespace germcalc

#pragma once

#include <optional>
#include <vector>

#include "germcalc/germmap.hpp"
#include "germcalc/series.hpp"
#include "germcalc/symfun.hpp"

namespace germcalc {

/// A parameterized curve germ obtained by restricting a map to a smooth
/// one-dimensional germ and normalizing the leading component to t^m.
struct CurveGerm {
    std::vector<TruncatedSeries> components;  // shared parameter, truncated at trunc
    unsigned trunc = 0;                       // D
    unsigned order = 0;                       // m: components[0] == t^m exactly
    /// components[r] corresponds to target coordinate component_order[r]
    /// (the minimal-order component is moved to the front).
    std::vector<size_t> component_order;
    /// The substitution t -> psi(t) applied to the raw restriction.
    TruncatedSeries reparam = TruncatedSeries("t", 0);
    /// Multiplicity of the originating map when finite (used for the
    /// truncation-stability bound of the exponent gcd).
    std::optional<size_t> mult_hint;
    /// Source index of the curve parameter after straightening.
    size_t param_index = 0;
};

/// Restrict f to the smooth one-dimensional germ V(X) (straightened
/// linearly), reparameterize so the minimal-order component becomes t^m
/// exactly, and reorder it to the front. Throws when the restriction
/// vanishes identically, the truncation cannot hold the restriction, or the
/// leading coefficient has no exact m-th root in Q(i).
CurveGerm restrict_and_normalize(const MapGerm& f, const IdealHandle& X, unsigned D);

struct SupportGcd {
    unsigned q;              // gcd of m with every exponent carrying a nonzero coefficient
    unsigned stabilized_at;  // highest exponent that last changed the running gcd
};
/// Throws when the curve is not normalized, or when q > 1 and the truncation
/// is too small to rule out a later drop of the gcd.
SupportGcd support_gcd_detail(const CurveGerm& curve);
unsigned support_gcd_q(const CurveGerm& curve);

enum class CurveDecision { SmoothImage, PreimageStrictlyLarger };
const char* curve_decision_name(CurveDecision d);

struct CurveImageReport {
    CurveDecision decision;
    unsigned m = 0, q = 0;
    CurveGerm curve;
};
/// q = m certifies a smooth image; q < m certifies that the preimage of the
/// image strictly contains V(X) (cross-checked against the elimination
/// verdict, which must agree).
CurveImageReport curve_image_decision(const MapGerm& f, const IdealHandle& X, unsigned D);

/// Characteristic polynomials of multiplication by each source coordinate on
/// the fiber module, and the coefficient maps assembled from them.
struct SymmetricFiberData {
    size_t p = 0;                               // multiplicity
    std::vector<std::vector<Poly>> char_polys;  // per source coord: [c1..cp] over target
    std::vector<std::vector<Poly>> F;           // F[j-1][i] = c_j of char_polys[i]
};
/// Throws when the map is not finite, the fiber module is not free with a
/// monomial basis, or the module rank disagrees with the local multiplicity.
SymmetricFiberData symmetric_fiber_maps(const MapGerm& f);

/// R(t, x): the characteristic polynomial of the curve-parameter coordinate,
/// composed with the normalized restriction of f to V(X).
struct WeierstrassData {
    Poly R;                                // over a fresh (t, x) context
    std::vector<std::optional<Scalar>> c;  // c_j when coefficient j equals c_j t^j on the window
    bool homogeneous = false;
};
WeierstrassData weierstrass_along_curve(const MapGerm& f, const IdealHandle& X);

struct SeparatingFunction {
    unsigned j = 0;
    Scalar c = Scalar(0);
    std::vector<Poly> F;  // the map F^j, components over the target
};
/// Least j <= q with F^j along the curve equal to (c t^j, 0, ..., 0), c != 0.
/// Requires the preimage-equality verdict; throws when no such j exists.
SeparatingFunction find_separating_function(const MapGerm& f, const IdealHandle& X);

}  // namespace germcalc

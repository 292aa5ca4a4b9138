#include "germcalc/curve.hpp"

#include <algorithm>
#include <numeric>

namespace germcalc {

namespace {

std::vector<size_t> complement_of(const std::vector<size_t>& chosen, size_t n) {
    std::vector<bool> in(n, false);
    for (size_t i : chosen) in.at(i) = true;
    std::vector<size_t> out;
    for (size_t i = 0; i < n; ++i)
        if (!in[i]) out.push_back(i);
    return out;
}

Poly zero_out(const Poly& p, const std::vector<size_t>& vars) {
    std::vector<bool> dead(p.ctx().size(), false);
    for (size_t v : vars) dead[v] = true;
    Poly r(p.ctx());
    for (const auto& [m, c] : p.terms()) {
        bool gone = false;
        for (size_t v = 0; v < dead.size(); ++v)
            if (dead[v] && m[v] > 0) {
                gone = true;
                break;
            }
        if (!gone) r.add_term(m, c);
    }
    return r;
}

unsigned degree_in(const Poly& p, size_t v) {
    unsigned d = 0;
    for (const auto& [m, c] : p.terms()) d = std::max(d, (unsigned)m[v]);
    return d;
}

/// Solve u = s(t*u)^{-1/m} by fixed-point iteration. s must have constant
/// term c = r^m with r supplied; the iteration fixes one more coefficient per
/// round, so it stabilizes within trunc+2 rounds.
TruncatedSeries reparam_unit(const TruncatedSeries& s, unsigned m, const Scalar& r) {
    unsigned D = s.trunc();
    const Scalar c = s.coeff(0);
    TruncatedSeries t_id = TruncatedSeries::identity(s.var(), D);
    TruncatedSeries u = TruncatedSeries::constant(s.var(), D, r.inverse());
    for (unsigned round = 0; round <= D + 2; ++round) {
        TruncatedSeries inner = t_id * u;                 // vanishes at 0
        TruncatedSeries w = s.compose(inner).scaled(c.inverse());  // constant term 1
        TruncatedSeries next = w.nth_root(m).inverse().scaled(r.inverse());
        if (next == u) return u;
        u = next;
    }
    throw error("curve normalization: reparameterization did not stabilize");
}

unsigned default_trunc(const MapGerm& f, size_t p) {
    unsigned dmax = 1;
    for (const Poly& c : f.components) dmax = std::max(dmax, (unsigned)std::max(1, c.total_degree()));
    return std::max<unsigned>(24, dmax * (unsigned)(p + 2));
}

/// Target-slot series values of the curve (undoing the component reordering).
std::vector<TruncatedSeries> target_values(const CurveGerm& curve, size_t k) {
    std::vector<TruncatedSeries> vals(k, TruncatedSeries("t", curve.trunc));
    for (size_t r = 0; r < curve.components.size(); ++r)
        vals.at(curve.component_order.at(r)) = curve.components[r];
    return vals;
}

TruncatedSeries compose_with_curve(const Poly& p, const std::vector<TruncatedSeries>& vals,
                                   unsigned D) {
    return p.eval_in<TruncatedSeries>(
        vals, [&](const Scalar& a) { return TruncatedSeries::constant("t", D, a); },
        TruncatedSeries("t", D));
}

/// True when every retained coefficient except the one of t^j vanishes.
bool single_exponent(const TruncatedSeries& s, unsigned j) {
    for (unsigned l = 0; l <= s.trunc(); ++l)
        if (l != j && !s.coeff(l).is_zero()) return false;
    return true;
}

}  // namespace

CurveGerm restrict_and_normalize(const MapGerm& f, const IdealHandle& X, unsigned D) {
    if (!(X.ctx() == f.source))
        throw error("restrict_and_normalize: X must live over the source");
    if (D == 0) throw error("restrict_and_normalize: truncation must be positive");
    size_t k = f.source.size();
    if (k == 0) throw error("restrict_and_normalize: empty source");

    SmoothCertificate sc = is_smooth_germ(X);
    if (sc.status != SmoothStatus::Smooth || sc.codim != k - 1)
        throw error("restrict_and_normalize: needs a certified smooth curve germ "
                    "(codimension arity-1); " + sc.note);
    auto st = straighten_linear(X, k - 1);
    if (!st)
        throw error("restrict_and_normalize: no certified linear straightening onto a "
                    "coordinate line");
    std::vector<size_t> params = complement_of(st->y_src, k);
    size_t param = params.at(0);

    // Rewrite f in the straightened coordinates, then set the cut-out block to 0.
    std::vector<Poly> u_values(k, Poly(f.source));
    for (size_t i = 0; i < k; ++i)
        for (size_t j = 0; j < k; ++j)
            if (!st->Cinv[i][j].is_zero())
                u_values[i] += Poly::variable(f.source, j).scaled(st->Cinv[i][j]);
    std::vector<Poly> restricted;
    unsigned maxdeg = 0;
    bool any = false;
    for (const Poly& c : f.components) {
        Poly r = zero_out(c.compose(u_values), st->y_src);
        if (!r.is_zero()) any = true;
        maxdeg = std::max(maxdeg, degree_in(r, param));
        restricted.push_back(r);
    }
    if (!any) throw error("restrict_and_normalize: the map vanishes identically on V(X)");
    if (D < maxdeg)
        throw error("restrict_and_normalize: truncation " + std::to_string(D) +
                    " cannot hold the restriction (degree " + std::to_string(maxdeg) + ")");

    std::vector<TruncatedSeries> raw;
    for (const Poly& r : restricted)
        raw.push_back(TruncatedSeries::from_poly(r, param, "t", D));

    unsigned m = 0;
    size_t lead = k;  // component realizing the minimal vanishing order
    for (size_t j = 0; j < raw.size(); ++j)
        if (auto o = raw[j].order())
            if (lead == k || *o < m) {
                m = *o;
                lead = j;
            }

    CurveGerm curve;
    curve.trunc = D;
    curve.order = m;
    curve.param_index = param;
    curve.component_order.push_back(lead);
    for (size_t j = 0; j < raw.size(); ++j)
        if (j != lead) curve.component_order.push_back(j);

    const Scalar c = raw[lead].coeff(m);
    auto root = c.nth_root(m);
    if (!root || root->is_zero())
        throw error("restrict_and_normalize: leading coefficient " + c.str() +
                    " has no exact " + std::to_string(m) + "-th root");
    TruncatedSeries u = reparam_unit(raw[lead].shift_down(m), m, *root);
    curve.reparam = TruncatedSeries::identity("t", D) * u;
    for (size_t r : curve.component_order)
        curve.components.push_back(raw[r].compose(curve.reparam));

    TruncatedSeries tm = TruncatedSeries::identity("t", D).pow(m);
    if (!(curve.components[0] == tm))
        throw error("restrict_and_normalize: normalization failed to produce t^m");

    if (is_finite(f)) curve.mult_hint = multiplicity(f);
    return curve;
}

SupportGcd support_gcd_detail(const CurveGerm& curve) {
    if (curve.components.empty()) throw error("support_gcd: empty curve");
    unsigned D = curve.trunc;
    unsigned m = curve.order;
    TruncatedSeries tm = TruncatedSeries::identity(curve.components[0].var(), D).pow(m);
    if (!(curve.components[0] == tm))
        throw error("support_gcd: curve is not normalized (leading component != t^m)");

    SupportGcd out{m, m};
    for (const TruncatedSeries& comp : curve.components)
        for (unsigned l = 1; l <= D; ++l)
            if (!comp.coeff(l).is_zero()) {
                unsigned g = std::gcd(out.q, l);
                if (g != out.q) {
                    out.q = g;
                    out.stabilized_at = l;
                }
            }

    if (out.q > 1) {
        if (!curve.mult_hint)
            throw error("support_gcd: certifying an exponent gcd above 1 needs the "
                        "multiplicity of the originating map");
        unsigned need = m + out.q * (unsigned)(*curve.mult_hint + 1);
        if (D < need)
            throw error("support_gcd: truncation " + std::to_string(D) +
                        " too small to certify gcd " + std::to_string(out.q) +
                        " (need " + std::to_string(need) + ")");
    }
    return out;
}

unsigned support_gcd_q(const CurveGerm& curve) { return support_gcd_detail(curve).q; }

const char* curve_decision_name(CurveDecision d) {
    switch (d) {
        case CurveDecision::SmoothImage: return "SmoothImage";
        case CurveDecision::PreimageStrictlyLarger: return "PreimageStrictlyLarger";
    }
    return "?";
}

CurveImageReport curve_image_decision(const MapGerm& f, const IdealHandle& X, unsigned D) {
    CurveImageReport rep{CurveDecision::SmoothImage, 0, 0, restrict_and_normalize(f, X, D)};
    rep.m = rep.curve.order;
    rep.q = support_gcd_detail(rep.curve).q;
    if (rep.q == rep.m) {
        rep.decision = CurveDecision::SmoothImage;
        // Every retained exponent is a multiple of m, so the image is the
        // graph over the leading coordinate; the elimination certificate
        // must be able to confirm that.
        SmoothCertificate cert = is_smooth_germ(image_ideal(f, X));
        if (cert.status != SmoothStatus::Smooth)
            throw error("curve_image_decision: exponent gcd certifies a smooth image but "
                        "the elimination certificate could not confirm it: " + cert.note);
    } else {
        rep.decision = CurveDecision::PreimageStrictlyLarger;
        GermVerdict v = preimage_closure_equals(f, X);
        if (v.status != GermRelation::StrictlyLarger)
            throw error(std::string("curve_image_decision: exponent gcd predicts a strictly "
                                    "larger preimage, but the elimination verdict is ") +
                        relation_name(v.status));
    }
    return rep;
}

SymmetricFiberData symmetric_fiber_maps(const MapGerm& f) {
    SymmetricFiberData data;
    data.p = multiplicity(f);
    FiberAlgebra fa(f.source, f.components, f.target);
    if (!fa.ok()) throw error("symmetric_fiber_maps: fiber module: " + fa.failure());
    if (fa.rank() != data.p)
        throw error("symmetric_fiber_maps: fiber module rank " + std::to_string(fa.rank()) +
                    " differs from the local multiplicity " + std::to_string(data.p));
    size_t k = f.source.size();
    for (size_t i = 0; i < k; ++i) {
        auto cp = fa.char_poly_of(Poly::variable(f.source, i));
        if (!cp)
            throw error("symmetric_fiber_maps: multiplication by " + f.source.name(i) +
                        " escaped the fiber basis");
        data.char_polys.push_back(*cp);
    }
    for (size_t j = 1; j <= data.p; ++j) {
        std::vector<Poly> Fj;
        for (size_t i = 0; i < k; ++i) {
            const Poly& entry = data.char_polys[i][j - 1];
            if (!entry.vanishes_at_zero())
                throw error("symmetric_fiber_maps: coefficient map does not vanish at 0");
            Fj.push_back(entry);
        }
        data.F.push_back(std::move(Fj));
    }
    return data;
}

WeierstrassData weierstrass_along_curve(const MapGerm& f, const IdealHandle& X) {
    SymmetricFiberData data = symmetric_fiber_maps(f);
    unsigned D = default_trunc(f, data.p);
    CurveGerm curve = restrict_and_normalize(f, X, D);
    size_t k = f.source.size();
    std::vector<TruncatedSeries> vals = target_values(curve, k);

    WeierstrassData out;
    out.homogeneous = true;
    const std::vector<Poly>& cp = data.char_polys.at(curve.param_index);
    VarContext rctx = VarContext::plain({"t", "x"});
    Poly R(rctx);
    R.add_term(Monomial::var(2, 1, (uint32_t)data.p), Scalar(1));
    for (unsigned j = 1; j <= data.p; ++j) {
        TruncatedSeries composed = compose_with_curve(cp[j - 1], vals, D);
        if (single_exponent(composed, j)) {
            Scalar cj = composed.coeff(j);
            out.c.push_back(cj);
            if (!cj.is_zero()) {
                Monomial mono = Monomial::var(2, 0, j);  // t^j
                if (j < data.p)
                    mono = mono * Monomial::var(2, 1, (uint32_t)data.p - j);  // x^{p-j}
                R.add_term(mono, cj);
            }
        } else {
            out.c.push_back(std::nullopt);
            out.homogeneous = false;
        }
    }
    if (!out.homogeneous) {
        GermVerdict v = preimage_closure_equals(f, X);
        if (v.status == GermRelation::Equal)
            throw error("weierstrass_along_curve: preimage equality requires each "
                        "coefficient along the curve to be a pure power of t");
    }
    out.R = R;
    return out;
}

SeparatingFunction find_separating_function(const MapGerm& f, const IdealHandle& X) {
    GermVerdict v = preimage_closure_equals(f, X);
    if (v.status != GermRelation::Equal)
        throw error(std::string("find_separating_function: requires preimage equality; "
                                "verdict: ") + relation_name(v.status));
    SymmetricFiberData data = symmetric_fiber_maps(f);
    unsigned D = default_trunc(f, data.p);
    CurveGerm curve = restrict_and_normalize(f, X, D);
    unsigned q = support_gcd_detail(curve).q;
    size_t k = f.source.size();
    std::vector<TruncatedSeries> vals = target_values(curve, k);

    for (unsigned j = 1; j <= q; ++j) {
        bool others_vanish = true;
        for (size_t i = 0; i < k && others_vanish; ++i) {
            if (i == curve.param_index) continue;
            if (!compose_with_curve(data.F[j - 1][i], vals, D).is_zero())
                others_vanish = false;
        }
        if (!others_vanish) continue;
        TruncatedSeries lead = compose_with_curve(data.F[j - 1][curve.param_index], vals, D);
        if (single_exponent(lead, j) && !lead.coeff(j).is_zero())
            return SeparatingFunction{j, lead.coeff(j), data.F[j - 1]};
    }
    throw error("find_separating_function: no coefficient map separates the curve up to "
                "the exponent gcd");
}

}  // namespace germcalc

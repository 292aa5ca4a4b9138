#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "germcalc/crgeom.hpp"

using namespace germcalc;

namespace {

Poly var(const VarContext& c, size_t i) { return Poly::variable(c, i); }
Poly cst(const VarContext& c, long n) { return Poly::constant(c, Scalar(n)); }

// Exact (h - bar h)/(2i) and (h + bar h)/2 over a paired context.
Poly im_of(const Poly& h) {
    return (h - h.bar_involution()).scaled(Scalar(mpq_class(0), mpq_class(-1, 2)));
}
Poly re_of(const Poly& h) {
    return (h + h.bar_involution()).scaled(Scalar(mpq_class(1, 2)));
}

// Im w = |z|^2 in C^2 (the model strictly pseudoconvex hypersurface).
RealSubmanifold paraboloid() {
    VarContext c = VarContext::paired({"z", "w"});
    Poly z = var(c, 0), w = var(c, 1), zb = var(c, 2);
    return RealSubmanifold(c, {im_of(w) - z * zb});
}

// Im w = 0 in C^2 (flat hypersurface, a tube over a line).
RealSubmanifold flat_hypersurface() {
    VarContext c = VarContext::paired({"z", "w"});
    return RealSubmanifold(c, {im_of(var(c, 1))});
}

// Im w = |z|^4 in C^2 (flat to higher order at 0).
RealSubmanifold quartic_hypersurface() {
    VarContext c = VarContext::paired({"z", "w"});
    Poly z = var(c, 0), w = var(c, 1), zb = var(c, 2);
    return RealSubmanifold(c, {im_of(w) - z * z * zb * zb});
}

// Im w1 = Im w2 = 0 in C^2 (a totally real plane).
RealSubmanifold totally_real_plane() {
    VarContext c = VarContext::paired({"w1", "w2"});
    return RealSubmanifold(c, {im_of(var(c, 0)), im_of(var(c, 1))});
}

// z2 = 0 in C^2 (a complex line viewed as a real codimension-2 submanifold).
RealSubmanifold complex_line() {
    VarContext c = VarContext::paired({"z1", "z2"});
    Poly z2 = var(c, 1);
    return RealSubmanifold(c, {re_of(z2), im_of(z2)});
}

// Im w1 = |z|^2/2, Im w2 = |z|^4/2 in C^3: generic, finite type, with two
// distinct Hormander numbers.
RealSubmanifold two_order_model() {
    VarContext c = VarContext::paired({"z", "w1", "w2"});
    Poly z = var(c, 0), w1 = var(c, 1), w2 = var(c, 2), zb = var(c, 3);
    Scalar half(mpq_class(1, 2));
    Poly rho1 = im_of(w1) - (z * zb).scaled(half);
    Poly rho2 = im_of(w2) - (z * zb * z * zb).scaled(half);
    return RealSubmanifold(c, {rho1, rho2});
}

// The map (z, w1, w2) -> (z, w1 + i w2, (w1 - i w2)^2) used with the
// two-order model: finite of multiplicity 2, image of positive codimension.
MapGerm two_order_map(const VarContext& s, const VarContext& t) {
    Poly z = var(s, 0), u1 = var(s, 1), u2 = var(s, 2);
    Poly a = u1 + u2.scaled(Scalar::i());
    Poly b = u1 - u2.scaled(Scalar::i());
    return MapGerm(s, t, {z, a, b * b});
}

}  // namespace

TEST_CASE("real submanifold construction validates its input") {
    VarContext c = VarContext::paired({"z", "w"});
    Poly z = var(c, 0), w = var(c, 1), zb = var(c, 2);

    SUBCASE("plain context rejected") {
        VarContext p = VarContext::plain({"x", "y"});
        CHECK_THROWS_AS(RealSubmanifold(p, {var(p, 0)}), error);
    }
    SUBCASE("defining function must vanish at the origin") {
        CHECK_THROWS_AS(RealSubmanifold(c, {im_of(w) + cst(c, 1)}), error);
    }
    SUBCASE("defining function must be real-valued") {
        // bar(z) = zb != z, so z alone is not fixed by the involution
        CHECK_THROWS_AS(RealSubmanifold(c, {z}), error);
    }
    SUBCASE("differentials at 0 must be independent") {
        CHECK_THROWS_AS(RealSubmanifold(c, {im_of(w), im_of(w).scaled(Scalar(2))}), error);
        CHECK_THROWS_AS(RealSubmanifold(c, {z * zb}), error);  // zero differential
    }
    SUBCASE("valid hypersurface") {
        RealSubmanifold M = paraboloid();
        CHECK(M.N == 2);
        CHECK(M.d == 1);
    }
}

TEST_CASE("real differentials at the origin") {
    // For Im w - |z|^2 the only surviving differential is dy_w.
    RealSubmanifold M = paraboloid();
    RatMatrix D = M.real_differentials_at0();
    REQUIRE(D.size() == 1);
    REQUIRE(D[0].size() == 4);  // columns x_z, x_w, y_z, y_w
    CHECK(D[0][0] == 0);
    CHECK(D[0][1] == 0);
    CHECK(D[0][2] == 0);
    CHECK(D[0][3] == 1);

    // For Re z2, Im z2 the rows are dx_{z2} and dy_{z2}.
    RealSubmanifold L = complex_line();
    RatMatrix DL = L.real_differentials_at0();
    REQUIRE(DL.size() == 2);
    CHECK(DL[0][1] == 1);  // x_{z2}
    CHECK(DL[0][3] == 0);
    CHECK(DL[1][1] == 0);
    CHECK(DL[1][3] == 1);  // y_{z2}
}

TEST_CASE("complexified manifold ideals match their normalized forms") {
    SUBCASE("paraboloid") {
        RealSubmanifold M = paraboloid();
        ComplexifiedManifold C = complexify_manifold(M);
        const VarContext& c = M.ctx;
        Poly z = var(c, 0), w = var(c, 1), zb = var(c, 2), wb = var(c, 3);
        IdealHandle expected(c, {w - wb - (z * zb).scaled(Scalar(mpq_class(0), mpq_class(2)))});
        GermVerdict v = germ_set_equal(C.ideal, expected);
        CHECK(v.status == GermRelation::Equal);
    }
    SUBCASE("totally real plane") {
        RealSubmanifold M = totally_real_plane();
        ComplexifiedManifold C = complexify_manifold(M);
        const VarContext& c = M.ctx;
        IdealHandle expected(c, {var(c, 0) - var(c, 2), var(c, 1) - var(c, 3)});
        CHECK(germ_set_equal(C.ideal, expected).status == GermRelation::Equal);
    }
    SUBCASE("complex line") {
        RealSubmanifold M = complex_line();
        ComplexifiedManifold C = complexify_manifold(M);
        const VarContext& c = M.ctx;
        IdealHandle expected(c, {var(c, 1), var(c, 3)});
        CHECK(germ_set_equal(C.ideal, expected).status == GermRelation::Equal);
    }
}

TEST_CASE("complexified map doubles the components") {
    SUBCASE("square on the second coordinate") {
        VarContext s = VarContext::plain({"z1", "z2"});
        VarContext t = VarContext::plain({"zt1", "zt2"});
        MapGerm H(s, t, {var(s, 0), var(s, 1) * var(s, 1)});
        MapGerm HH = complexify_map(H);
        REQUIRE(HH.components.size() == 4);
        const VarContext& c2 = HH.source;
        REQUIRE(c2.size() == 4);
        CHECK(c2.is_paired());
        CHECK(HH.components[0] == var(c2, 0));
        CHECK(HH.components[1] == var(c2, 1) * var(c2, 1));
        CHECK(HH.components[2] == var(c2, 2));
        CHECK(HH.components[3] == var(c2, 3) * var(c2, 3));
    }
    SUBCASE("conjugate half takes conjugated coefficients") {
        VarContext s = VarContext::plain({"z"});
        VarContext t = VarContext::plain({"zt"});
        MapGerm H(s, t, {var(s, 0).scaled(Scalar::i())});
        MapGerm HH = complexify_map(H);
        const VarContext& c2 = HH.source;
        CHECK(HH.components[0] == var(c2, 0).scaled(Scalar::i()));
        CHECK(HH.components[1] == var(c2, 1).scaled(Scalar::i().conj()));
    }
    SUBCASE("second half is the involution of the first") {
        VarContext s = VarContext::plain({"z", "w1", "w2"});
        VarContext t = VarContext::plain({"zt1", "zt2", "wt"});
        MapGerm H = two_order_map(s, t);
        MapGerm HH = complexify_map(H);
        REQUIRE(HH.components.size() == 6);
        for (size_t r = 0; r < 3; ++r)
            CHECK(HH.components[3 + r] == HH.components[r].bar_involution());
        // spelled out for the nonlinear component
        const VarContext& c2 = HH.source;
        Poly u1 = var(c2, 4), u2 = var(c2, 5);
        CHECK(HH.components[4] == u1 - u2.scaled(Scalar::i()));
        Poly bplus = u1 + u2.scaled(Scalar::i());
        CHECK(HH.components[5] == bplus * bplus);
    }
}

TEST_CASE("genericity at the origin") {
    CHECK(is_generic(paraboloid()));
    CHECK(is_generic(flat_hypersurface()));
    CHECK(is_generic(quartic_hypersurface()));
    CHECK(is_generic(totally_real_plane()));
    CHECK(is_generic(two_order_model()));
    CHECK(!is_generic(complex_line()));
}

TEST_CASE("CR profile") {
    SUBCASE("hypersurfaces are CR of CR dimension N-1") {
        CRProfile p = cr_profile(paraboloid());
        CHECK(p.cr_dim_at_0 == 1);
        CHECK(p.generic_cr_dim == 1);
        CHECK(p.is_cr_at_0);
        CRProfile f = cr_profile(flat_hypersurface());
        CHECK(f.cr_dim_at_0 == 1);
        CHECK(f.is_cr_at_0);
    }
    SUBCASE("totally real plane has CR dimension 0") {
        CRProfile p = cr_profile(totally_real_plane());
        CHECK(p.cr_dim_at_0 == 0);
        CHECK(p.generic_cr_dim == 0);
        CHECK(p.is_cr_at_0);
    }
    SUBCASE("complex line is CR of CR dimension 1") {
        CRProfile p = cr_profile(complex_line());
        CHECK(p.cr_dim_at_0 == 1);
        CHECK(p.generic_cr_dim == 1);
        CHECK(p.is_cr_at_0);
    }
}

TEST_CASE("CR vector field basis") {
    SUBCASE("paraboloid field") {
        RealSubmanifold M = paraboloid();
        std::vector<CRVectorField> B = cr_field_basis(M);
        REQUIRE(B.size() == 1);
        REQUIRE(B[0].coeffs.size() == 2);
        // L = (i/2) d/dzb + z d/dwb
        Poly z = var(M.ctx, 0);
        CHECK(B[0].coeffs[0] == Poly::constant(M.ctx, Scalar(mpq_class(0), mpq_class(1, 2))));
        CHECK(B[0].coeffs[1] == z);
    }
    SUBCASE("totally real manifolds have no CR fields") {
        CHECK(cr_field_basis(totally_real_plane()).empty());
    }
    SUBCASE("degenerate antiholomorphic gradient rejected") {
        CHECK_THROWS_AS((void)cr_field_basis(complex_line()), error);
    }
}

TEST_CASE("finite commutator type") {
    SUBCASE("paraboloid has type 2") {
        RealSubmanifold M = paraboloid();
        OrderVerdict v1 = finite_type_check(M, 1);
        CHECK(!v1.determined);
        CHECK(v1.bound == 1);
        OrderVerdict v2 = finite_type_check(M, 2);
        CHECK(v2.determined);
        CHECK(v2.order == 2);
    }
    SUBCASE("flat hypersurface never closes up") {
        OrderVerdict v = finite_type_check(flat_hypersurface(), 5);
        CHECK(!v.determined);
    }
    SUBCASE("totally real plane has no CR directions to bracket") {
        OrderVerdict v = finite_type_check(totally_real_plane(), 3);
        CHECK(!v.determined);
    }
    SUBCASE("two-order model has type exactly 4") {
        RealSubmanifold M = two_order_model();
        OrderVerdict v3 = finite_type_check(M, 3);
        CHECK(!v3.determined);
        OrderVerdict v4 = finite_type_check(M, 4);
        CHECK(v4.determined);
        CHECK(v4.order == 4);
    }
    SUBCASE("requires a generic submanifold") {
        CHECK_THROWS_AS((void)finite_type_check(complex_line(), 2), error);
    }
}

TEST_CASE("finite nondegeneracy order") {
    SUBCASE("paraboloid is 1-nondegenerate") {
        RealSubmanifold M = paraboloid();
        OrderVerdict v0 = finitely_nondegenerate_check(M, 0);
        CHECK(!v0.determined);
        OrderVerdict v1 = finitely_nondegenerate_check(M, 1);
        CHECK(v1.determined);
        CHECK(v1.order == 1);
    }
    SUBCASE("totally real plane is 0-nondegenerate") {
        OrderVerdict v = finitely_nondegenerate_check(totally_real_plane(), 2);
        CHECK(v.determined);
        CHECK(v.order == 0);
    }
    SUBCASE("flat hypersurface is degenerate to every order") {
        OrderVerdict v = finitely_nondegenerate_check(flat_hypersurface(), 4);
        CHECK(!v.determined);
    }
    SUBCASE("quartic hypersurface is degenerate at 0 to every order") {
        OrderVerdict v = finitely_nondegenerate_check(quartic_hypersurface(), 3);
        CHECK(!v.determined);
    }
    SUBCASE("requires a CR field basis") {
        CHECK_THROWS_AS((void)finitely_nondegenerate_check(complex_line(), 1), error);
    }
}

TEST_CASE("holomorphic tangent transversality") {
    VarContext s = VarContext::plain({"z", "w"});
    VarContext t = VarContext::plain({"zt", "wt"});
    Poly z = var(s, 0), w = var(s, 1);

    SUBCASE("fold transverse to a flat hypersurface") {
        MapGerm H(s, t, {z * z, w});
        VarContext tc = VarContext::paired({"zt", "wt"});
        RealSubmanifold Mt(tc, {im_of(var(tc, 1))});
        CHECK(cr_transversal_check(H, Mt));
    }
    SUBCASE("identity transverse to the paraboloid") {
        MapGerm H = MapGerm::identity(s, t);
        RealSubmanifold Mt = paraboloid();
        CHECK(cr_transversal_check(H, Mt));
    }
    SUBCASE("square onto a complex line fails") {
        VarContext s2 = VarContext::plain({"z1", "z2"});
        VarContext t2 = VarContext::plain({"zt1", "zt2"});
        MapGerm H(s2, t2, {var(s2, 0), var(s2, 1) * var(s2, 1)});
        RealSubmanifold Mt = complex_line();
        CHECK(!cr_transversal_check(H, Mt));
    }
    SUBCASE("target must be CR at 0") {
        // w = zb^2: CR dimension jumps at the origin
        VarContext tc = VarContext::paired({"zt", "wt"});
        Poly zt = var(tc, 0), wt = var(tc, 1);
        Poly g = wt - zt.bar_involution() * zt.bar_involution();
        RealSubmanifold Mt(tc, {g + g.bar_involution(),
                                (g - g.bar_involution()).scaled(Scalar::i())});
        CHECK(!cr_profile(Mt).is_cr_at_0);
        MapGerm H = MapGerm::identity(s, t);
        CHECK_THROWS_AS((void)cr_transversal_check(H, Mt), error);
    }
}

TEST_CASE("real tangent transversality") {
    SUBCASE("fold onto a flat hypersurface is transverse") {
        VarContext s = VarContext::plain({"z", "w"});
        VarContext t = VarContext::plain({"zt", "wt"});
        MapGerm H(s, t, {var(s, 0) * var(s, 0), var(s, 1)});
        VarContext tc = VarContext::paired({"zt", "wt"});
        RealSubmanifold Mt(tc, {im_of(var(tc, 1))});
        CHECK(real_transversal_check(H, Mt));
    }
    SUBCASE("square onto a complex line is not") {
        VarContext s = VarContext::plain({"z1", "z2"});
        VarContext t = VarContext::plain({"zt1", "zt2"});
        MapGerm H(s, t, {var(s, 0), var(s, 1) * var(s, 1)});
        CHECK(!real_transversal_check(H, complex_line()));
    }
    SUBCASE("degenerate second component misses the manifold directions") {
        // image manifold w = zb^2, map (w1+iw2, (w1-iw2)^2): dH(0) kills w
        VarContext s = VarContext::plain({"w1", "w2"});
        VarContext t = VarContext::plain({"zt", "wt"});
        Poly a = var(s, 0) + var(s, 1).scaled(Scalar::i());
        Poly b = var(s, 0) - var(s, 1).scaled(Scalar::i());
        MapGerm H(s, t, {a, b * b});
        VarContext tc = VarContext::paired({"zt", "wt"});
        Poly zt = var(tc, 0), wt = var(tc, 1);
        Poly g = wt - zt.bar_involution() * zt.bar_involution();
        RealSubmanifold Mt(tc, {g + g.bar_involution(),
                                (g - g.bar_involution()).scaled(Scalar::i())});
        CHECK(!real_transversal_check(H, Mt));
    }
}

TEST_CASE("complexified preimage comparison") {
    SUBCASE("fold over a flat hypersurface loses nothing") {
        RealSubmanifold M = flat_hypersurface();
        VarContext s = VarContext::plain({"z", "w"});
        VarContext t = VarContext::plain({"zt", "wt"});
        MapGerm H(s, t, {var(s, 0) * var(s, 0), var(s, 1)});
        GermVerdict v = complexified_preimage_equal(M, H);
        CHECK(v.status == GermRelation::Equal);
    }
    SUBCASE("square along a complex line loses nothing") {
        RealSubmanifold M = complex_line();
        VarContext s = VarContext::plain({"z1", "z2"});
        VarContext t = VarContext::plain({"zt1", "zt2"});
        MapGerm H(s, t, {var(s, 0), var(s, 1) * var(s, 1)});
        GermVerdict v = complexified_preimage_equal(M, H);
        CHECK(v.status == GermRelation::Equal);
    }
    SUBCASE("two-order model maps onto a strictly smaller complexification") {
        RealSubmanifold M = two_order_model();
        VarContext s = VarContext::plain({"z", "w1", "w2"});
        VarContext t = VarContext::plain({"zt1", "zt2", "wt"});
        MapGerm H = two_order_map(s, t);
        GermVerdict v = complexified_preimage_equal(M, H);
        CHECK(v.status == GermRelation::StrictlyLarger);
        CHECK(v.witness.has_value());
    }
    SUBCASE("totally real plane under a degenerate squaring map") {
        RealSubmanifold M = totally_real_plane();
        VarContext s = VarContext::plain({"w1", "w2"});
        VarContext t = VarContext::plain({"zt", "wt"});
        Poly a = var(s, 0) + var(s, 1).scaled(Scalar::i());
        Poly b = var(s, 0) - var(s, 1).scaled(Scalar::i());
        MapGerm H(s, t, {a, b * b});
        GermVerdict v = complexified_preimage_equal(M, H);
        CHECK(v.status == GermRelation::StrictlyLarger);
    }
    SUBCASE("non-finite maps rejected") {
        RealSubmanifold M = flat_hypersurface();
        VarContext s = VarContext::plain({"z", "w"});
        VarContext t = VarContext::plain({"zt", "wt"});
        MapGerm H(s, t, {var(s, 0), var(s, 0) * var(s, 1)});
        CHECK_THROWS_AS((void)complexified_preimage_equal(M, H), error);
    }
}

TEST_CASE("real defining functions extracted from an involution-stable ideal") {
    VarContext c = VarContext::paired({"z", "w"});
    Poly z = var(c, 0), w = var(c, 1), zb = var(c, 2), wb = var(c, 3);

    SUBCASE("flat hypersurface ideal") {
        IdealHandle I(c, {w - wb});
        auto M = extract_real_defining(I);
        REQUIRE(M.has_value());
        CHECK(M->N == 2);
        CHECK(M->d == 1);
        CHECK(is_generic(*M));
        CRProfile p = cr_profile(*M);
        CHECK(p.cr_dim_at_0 == 1);
        CHECK(p.is_cr_at_0);
    }
    SUBCASE("complex line ideal") {
        VarContext c2 = VarContext::paired({"z1", "z2"});
        IdealHandle I(c2, {var(c2, 1), var(c2, 3)});
        auto M = extract_real_defining(I);
        REQUIRE(M.has_value());
        CHECK(M->d == 2);
        CHECK(!is_generic(*M));
    }
    SUBCASE("ideal not stable under the involution") {
        IdealHandle I(c, {z});
        std::string note;
        auto M = extract_real_defining(I, &note);
        CHECK(!M.has_value());
        CHECK(!note.empty());
    }
    SUBCASE("non-smooth ideal") {
        IdealHandle I(c, {z * z});
        auto M = extract_real_defining(I);
        CHECK(!M.has_value());
    }
}

TEST_CASE("holomorphic polynomials vanishing on a manifold") {
    SUBCASE("complex line carries one") {
        RealSubmanifold M = complex_line();
        auto w = holomorphic_poly_on_manifold(M, 2);
        REQUIRE(w.has_value());
        CHECK(!w->is_zero());
        // witness uses only the holomorphic slots
        for (const auto& [m, coeff] : w->terms())
            for (size_t v = M.N; v < 2 * M.N; ++v) CHECK(m[v] == 0);
        // and lies in the complexified ideal near 0
        ComplexifiedManifold C = complexify_manifold(M);
        CHECK(membership_with_cofactors(*w, C.ideal, MonomialOrder::local()).has_value());
    }
    SUBCASE("generic manifolds carry none") {
        CHECK(!holomorphic_poly_on_manifold(paraboloid(), 3).has_value());
        CHECK(!holomorphic_poly_on_manifold(totally_real_plane(), 3).has_value());
    }
}

TEST_CASE("map and manifold report: fold on a flat hypersurface") {
    RealSubmanifold M = flat_hypersurface();
    VarContext s = VarContext::plain({"z", "w"});
    VarContext t = VarContext::plain({"zt", "wt"});
    MapGerm H(s, t, {var(s, 0) * var(s, 0), var(s, 1)});
    ManifoldMapReport R = manifold_map_report(M, H, 4);

    CHECK(R.h_finite);
    REQUIRE(R.mult.has_value());
    CHECK(*R.mult == 2);
    CHECK(R.jac_rank_at_0 == 1);
    CHECK(R.codim == 1);
    CHECK(R.rank_bound_ok);
    CHECK(R.m_generic);
    CHECK(!R.m_finite_type.determined);
    REQUIRE(R.m_in_proper_subvariety.has_value());
    CHECK(!*R.m_in_proper_subvariety);
    REQUIRE(R.preimage.has_value());
    CHECK(R.preimage->status == GermRelation::Equal);
    CHECK(R.image_smooth.status == SmoothStatus::Smooth);
    CHECK(R.image_smooth.codim == 1);
    REQUIRE(R.image_ideal_2n.has_value());
    {
        const IdealHandle& img = *R.image_ideal_2n;
        const VarContext& tc = img.ctx();
        REQUIRE(tc.size() == 4);
        IdealHandle expected(tc, {var(tc, 1) - var(tc, 3)});
        CHECK(germ_set_equal(img, expected).status == GermRelation::Equal);
    }
    REQUIRE(R.image_manifold.has_value());
    REQUIRE(R.image_generic.has_value());
    CHECK(*R.image_generic);
    REQUIRE(R.image_cr.has_value());
    CHECK(R.image_cr->is_cr_at_0);
    CHECK(!R.image_finite_type.determined);
    REQUIRE(R.real_transversal.has_value());
    CHECK(*R.real_transversal);
    REQUIRE(R.cr_transversal.has_value());
    CHECK(*R.cr_transversal);
    CHECK(R.inconsistencies.empty());
}

TEST_CASE("map and manifold report: totally real plane with rank-dropping map") {
    RealSubmanifold M = totally_real_plane();
    VarContext s = VarContext::plain({"w1", "w2"});
    VarContext t = VarContext::plain({"zt", "wt"});
    Poly a = var(s, 0) + var(s, 1).scaled(Scalar::i());
    Poly b = var(s, 0) - var(s, 1).scaled(Scalar::i());
    MapGerm H(s, t, {a, b * b});
    ManifoldMapReport R = manifold_map_report(M, H, 3);

    CHECK(R.h_finite);
    CHECK(*R.mult == 2);
    CHECK(R.jac_rank_at_0 == 1);
    CHECK(R.codim == 2);
    CHECK(!R.rank_bound_ok);
    CHECK(R.m_generic);
    REQUIRE(R.m_in_proper_subvariety.has_value());
    CHECK(!*R.m_in_proper_subvariety);
    REQUIRE(R.preimage.has_value());
    CHECK(R.preimage->status == GermRelation::StrictlyLarger);
    CHECK(R.image_smooth.status == SmoothStatus::Smooth);
    CHECK(R.image_smooth.codim == 2);
    REQUIRE(R.image_ideal_2n.has_value());
    {
        // image is the anti-graph w = zb^2 together with its conjugate
        const IdealHandle& img = *R.image_ideal_2n;
        const VarContext& tc = img.ctx();
        REQUIRE(tc.size() == 4);
        Poly zt = var(tc, 0), wt = var(tc, 1), ztb = var(tc, 2), wtb = var(tc, 3);
        IdealHandle expected(tc, {wt - ztb * ztb, wtb - zt * zt});
        CHECK(germ_set_equal(img, expected).status == GermRelation::Equal);
    }
    REQUIRE(R.image_manifold.has_value());
    CHECK(!*R.image_generic);
    REQUIRE(R.image_cr.has_value());
    CHECK(R.image_cr->cr_dim_at_0 == 1);
    CHECK(R.image_cr->generic_cr_dim == 0);
    CHECK(!R.image_cr->is_cr_at_0);
    CHECK(!R.cr_transversal.has_value());  // skipped: image not CR at 0
    REQUIRE(R.real_transversal.has_value());
    CHECK(!*R.real_transversal);
    CHECK(R.inconsistencies.empty());
}

TEST_CASE("map and manifold report: two-order model with a squared slice") {
    RealSubmanifold M = two_order_model();
    VarContext s = VarContext::plain({"z", "w1", "w2"});
    VarContext t = VarContext::plain({"zt1", "zt2", "wt"});
    MapGerm H = two_order_map(s, t);
    ManifoldMapReport R = manifold_map_report(M, H, 4);

    CHECK(R.h_finite);
    CHECK(*R.mult == 2);
    CHECK(R.jac_rank_at_0 == 2);
    CHECK(R.codim == 2);
    CHECK(R.rank_bound_ok);
    CHECK(R.m_generic);
    CHECK(R.m_finite_type.determined);
    CHECK(R.m_finite_type.order == 4);
    REQUIRE(R.m_in_proper_subvariety.has_value());
    CHECK(!*R.m_in_proper_subvariety);
    REQUIRE(R.preimage.has_value());
    CHECK(R.preimage->status == GermRelation::StrictlyLarger);
    CHECK(R.image_smooth.status == SmoothStatus::Smooth);
    CHECK(R.image_smooth.codim == 2);
    REQUIRE(R.image_ideal_2n.has_value());
    {
        const IdealHandle& img = *R.image_ideal_2n;
        const VarContext& tc = img.ctx();
        REQUIRE(tc.size() == 6);
        Poly zt1 = var(tc, 0), wt = var(tc, 2);
        Poly xt1 = var(tc, 3), xt2 = var(tc, 4);
        Poly A = xt2 + (zt1 * xt1).scaled(Scalar::i()) + zt1 * zt1 * xt1 * xt1;
        Poly g1 = wt - A * A;
        Poly g2 = g1.bar_involution();
        IdealHandle expected(tc, {g1, g2});
        CHECK(germ_set_equal(img, expected).status == GermRelation::Equal);

        // the image relations pull back into the complexified source manifold
        ComplexifiedManifold CM = complexify_manifold(M);
        MapGerm HH = complexify_map(H);
        REQUIRE(HH.source == M.ctx);
        Poly pull = g1.compose(HH.components);
        CHECK(membership_with_cofactors(pull, CM.ideal, MonomialOrder::local()).has_value());
    }
    REQUIRE(R.image_manifold.has_value());
    CHECK(!*R.image_generic);
    REQUIRE(R.image_cr.has_value());
    CHECK(R.image_cr->cr_dim_at_0 == 2);
    CHECK(R.image_cr->generic_cr_dim == 1);
    CHECK(!R.image_cr->is_cr_at_0);
    CHECK(!R.cr_transversal.has_value());
    REQUIRE(R.real_transversal.has_value());
    CHECK(!*R.real_transversal);
    CHECK(R.inconsistencies.empty());
}

TEST_CASE("map and manifold report: squared line keeps its preimage") {
    RealSubmanifold M = complex_line();
    VarContext s = VarContext::plain({"z1", "z2"});
    VarContext t = VarContext::plain({"zt1", "zt2"});
    MapGerm H(s, t, {var(s, 0), var(s, 1) * var(s, 1)});
    ManifoldMapReport R = manifold_map_report(M, H, 3);

    CHECK(R.h_finite);
    CHECK(*R.mult == 2);
    CHECK(R.jac_rank_at_0 == 1);
    CHECK(R.codim == 2);
    CHECK(!R.rank_bound_ok);
    CHECK(!R.m_generic);
    CHECK(!R.m_finite_type.determined);
    REQUIRE(R.m_in_proper_subvariety.has_value());
    CHECK(*R.m_in_proper_subvariety);
    CHECK(R.subvariety_witness.has_value());
    REQUIRE(R.preimage.has_value());
    CHECK(R.preimage->status == GermRelation::Equal);
    CHECK(R.image_smooth.status == SmoothStatus::Smooth);
    CHECK(R.image_smooth.codim == 2);
    REQUIRE(R.image_manifold.has_value());
    CHECK(!*R.image_generic);
    REQUIRE(R.image_cr.has_value());
    CHECK(R.image_cr->is_cr_at_0);
    REQUIRE(R.cr_transversal.has_value());
    CHECK(!*R.cr_transversal);
    REQUIRE(R.real_transversal.has_value());
    CHECK(!*R.real_transversal);
    CHECK(R.inconsistencies.empty());
}

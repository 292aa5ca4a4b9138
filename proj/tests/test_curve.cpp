#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "germcalc/curve.hpp"

using namespace germcalc;

namespace {

Poly var(const VarContext& c, size_t i) { return Poly::variable(c, i); }

TruncatedSeries tpow(unsigned e, unsigned D) {
    return TruncatedSeries::identity("t", D).pow(e);
}

// (z^2 + w^2, z w): multiplicity 4; its restriction to {w = 0} has a smooth
// image even though the preimage of that image is strictly larger.
MapGerm fold_map(const VarContext& s, const VarContext& t) {
    Poly z = var(s, 0), w = var(s, 1);
    return MapGerm(s, t, {z * z + w * w, z * w});
}

}  // namespace

TEST_CASE("restriction of the squaring map to a coordinate line") {
    VarContext s = VarContext::plain({"z", "w"});
    VarContext t = VarContext::plain({"xi", "eta"});
    Poly z = var(s, 0), w = var(s, 1);
    MapGerm f(s, t, {z * z, w});
    IdealHandle X(s, {w});

    CurveGerm c = restrict_and_normalize(f, X, 24);
    CHECK(c.order == 2);
    CHECK(c.param_index == 0);
    CHECK(c.component_order == std::vector<size_t>{0, 1});
    CHECK(c.components[0] == tpow(2, 24));
    CHECK(c.components[1].is_zero());
    CHECK(c.reparam == TruncatedSeries::identity("t", 24));
    REQUIRE(c.mult_hint.has_value());
    CHECK(*c.mult_hint == 2);

    SupportGcd g = support_gcd_detail(c);
    CHECK(g.q == 2);
    CHECK(g.stabilized_at == 2);
}

TEST_CASE("restriction keeping a second component: orders and gcd") {
    VarContext s = VarContext::plain({"z", "w"});
    VarContext t = VarContext::plain({"xi", "eta"});
    Poly z = var(s, 0), w = var(s, 1);
    MapGerm f(s, t, {z * z, z * z * z + w});
    IdealHandle X(s, {w});

    CurveGerm c = restrict_and_normalize(f, X, 24);
    CHECK(c.order == 2);
    CHECK(c.components[0] == tpow(2, 24));
    CHECK(c.components[1] == tpow(3, 24));
    CHECK(support_gcd_q(c) == 1);  // gcd(2, 3)
}

TEST_CASE("restriction where the minimal-order component is not the first") {
    VarContext s = VarContext::plain({"z", "w"});
    VarContext t = VarContext::plain({"xi", "eta"});
    Poly z = var(s, 0), w = var(s, 1);
    MapGerm f(s, t, {z, w * w});
    IdealHandle X(s, {z});  // the curve parameter is w

    CurveGerm c = restrict_and_normalize(f, X, 24);
    CHECK(c.order == 2);
    CHECK(c.param_index == 1);
    CHECK(c.component_order == std::vector<size_t>{1, 0});
    CHECK(c.components[0] == tpow(2, 24));
    CHECK(c.components[1].is_zero());
}

TEST_CASE("reparameterization normalizes a non-monomial leading component") {
    VarContext s = VarContext::plain({"z", "w"});
    VarContext t = VarContext::plain({"xi", "eta"});
    Poly z = var(s, 0), w = var(s, 1);
    MapGerm f(s, t, {z * z + z * z * z, w});
    IdealHandle X(s, {w});

    CurveGerm c = restrict_and_normalize(f, X, 24);
    CHECK(c.components[0] == tpow(2, 24));
    // psi solves psi^2 (1 + psi) = t^2: psi = t - t^2/2 + 5 t^3/8 - ...
    CHECK(c.reparam.coeff(1) == Scalar(1));
    CHECK(c.reparam.coeff(2) == Scalar::fraction(-1, 2));
    CHECK(c.reparam.coeff(3) == Scalar::fraction(5, 8));

    // Recomposition soundness: substituting psi into the raw restriction
    // reproduces the stored components.
    Poly raw0 = z * z + z * z * z;  // restriction of component 0 to w = 0
    TruncatedSeries raw_series = TruncatedSeries::from_poly(raw0, 0, "t", 24);
    CHECK(raw_series.compose(c.reparam) == c.components[0]);
}

TEST_CASE("restriction failure modes") {
    VarContext s = VarContext::plain({"z", "w"});
    VarContext t = VarContext::plain({"xi", "eta"});
    Poly z = var(s, 0), w = var(s, 1);
    IdealHandle X(s, {w});

    // Leading coefficient 2 has no exact square root in Q(i).
    CHECK_THROWS_WITH_AS((void)restrict_and_normalize(
                             MapGerm(s, t, {(z * z).scaled(Scalar(2)), w}), X, 24),
                         doctest::Contains("2-th root"), error);
    // i = (1+i)^2 / 2 ... the coefficient 2i does have a square root, 1 + i.
    CurveGerm ok = restrict_and_normalize(
        MapGerm(s, t, {(z * z).scaled(Scalar(0, 2)), w}), X, 24);
    CHECK(ok.components[0] == tpow(2, 24));

    // The map vanishes identically on V(X).
    CHECK_THROWS_WITH_AS((void)restrict_and_normalize(MapGerm(s, t, {w, z * w}), X, 24),
                         doctest::Contains("vanishes identically"), error);

    // Truncation cannot hold the restriction.
    CHECK_THROWS_WITH_AS((void)restrict_and_normalize(MapGerm(s, t, {z * z, w}), X, 1),
                         doctest::Contains("cannot hold"), error);

    // X must be a smooth curve germ.
    CHECK_THROWS_AS((void)restrict_and_normalize(MapGerm(s, t, {z * z, w}),
                                                 IdealHandle(s, {w * w - z * z * z}), 24),
                    error);
}

TEST_CASE("exponent gcd needs enough truncation to stabilize") {
    VarContext s = VarContext::plain({"z", "w"});
    VarContext t = VarContext::plain({"xi", "eta"});
    Poly z = var(s, 0), w = var(s, 1);
    MapGerm f(s, t, {z * z, w});
    IdealHandle X(s, {w});

    // multiplicity 2, so a gcd of 2 needs D >= 2 + 2*(2+1) = 8.
    CurveGerm tight = restrict_and_normalize(f, X, 8);
    CHECK(support_gcd_q(tight) == 2);
    CurveGerm short_window = restrict_and_normalize(f, X, 7);
    CHECK_THROWS_WITH_AS((void)support_gcd_q(short_window), doctest::Contains("too small"),
                         error);

    // Without the multiplicity hint the claim cannot be certified at all.
    CurveGerm anon = restrict_and_normalize(f, X, 24);
    anon.mult_hint.reset();
    CHECK_THROWS_WITH_AS((void)support_gcd_q(anon), doctest::Contains("multiplicity"), error);

    // gcd 1 needs no stabilization window.
    CurveGerm c1 = restrict_and_normalize(MapGerm(s, t, {z * z, z * z * z + w}), X, 5);
    CHECK(support_gcd_q(c1) == 1);
}

TEST_CASE("image decision: gcd equal to the order certifies a smooth image") {
    VarContext s = VarContext::plain({"z", "w"});
    VarContext t = VarContext::plain({"xi", "eta"});
    Poly z = var(s, 0), w = var(s, 1);
    IdealHandle X(s, {w});

    CurveImageReport a = curve_image_decision(MapGerm(s, t, {z * z, w}), X, 24);
    CHECK(a.decision == CurveDecision::SmoothImage);
    CHECK(a.m == 2);
    CHECK(a.q == 2);

    CurveImageReport b =
        curve_image_decision(MapGerm(s, t, {z * z * z, z * z * z * z * z * z + w}), X, 24);
    CHECK(b.decision == CurveDecision::SmoothImage);
    CHECK(b.m == 3);
    CHECK(b.q == 3);
    CHECK(b.curve.components[1] == tpow(6, 24));

    // The fold map still has a smooth restricted image (q = m = 2) even
    // though the preimage of that image is strictly larger than V(X).
    CurveImageReport c = curve_image_decision(fold_map(s, t), X, 24);
    CHECK(c.decision == CurveDecision::SmoothImage);
    CHECK(c.m == 2);
    CHECK(c.q == 2);
    CHECK(preimage_closure_equals(fold_map(s, t), X).status == GermRelation::StrictlyLarger);
}

TEST_CASE("image decision: gcd below the order certifies a strict preimage") {
    VarContext s = VarContext::plain({"z", "w"});
    VarContext t = VarContext::plain({"xi", "eta"});
    Poly z = var(s, 0), w = var(s, 1);
    MapGerm f(s, t, {z * z, z * z * z + w});
    IdealHandle X(s, {w});

    CurveImageReport rep = curve_image_decision(f, X, 24);
    CHECK(rep.decision == CurveDecision::PreimageStrictlyLarger);
    CHECK(rep.m == 2);
    CHECK(rep.q == 1);

    // The extra branch is explicit: w = -2 z^3 also maps into the image,
    // so the pulled-back generator vanishes on it while w does not.
    GermVerdict v = preimage_closure_equals(f, X);
    CHECK(v.status == GermRelation::StrictlyLarger);
    IdealHandle branch(s, {w + (z * z * z).scaled(Scalar(2))});
    REQUIRE(v.witness.has_value());
    CHECK(!vanishes_on_germ(*v.witness, branch));  // w itself fails there
    IdealHandle pulled = pullback(f, image_ideal(f, X));
    for (const Poly& g : pulled.generators())
        CHECK(vanishes_on_germ(g, branch));  // but the pulled-back image allows it
}

TEST_CASE("coefficient maps of the squaring map") {
    VarContext s = VarContext::plain({"z", "w"});
    VarContext t = VarContext::plain({"xi", "eta"});
    Poly z = var(s, 0), w = var(s, 1);
    Poly xi = var(t, 0), eta = var(t, 1);
    MapGerm f(s, t, {z * z, w});

    SymmetricFiberData d = symmetric_fiber_maps(f);
    CHECK(d.p == 2);
    REQUIRE(d.char_polys.size() == 2);
    // multiplication by z: x^2 - xi; by w: (x - eta)^2.
    CHECK(d.char_polys[0][0].is_zero());
    CHECK(d.char_polys[0][1] == -xi);
    CHECK(d.char_polys[1][0] == eta.scaled(Scalar(-2)));
    CHECK(d.char_polys[1][1] == eta * eta);
    // F^1 = (0, -2 eta), F^2 = (-xi, eta^2).
    CHECK(d.F[0][0].is_zero());
    CHECK(d.F[0][1] == eta.scaled(Scalar(-2)));
    CHECK(d.F[1][0] == -xi);
    CHECK(d.F[1][1] == eta * eta);
}

TEST_CASE("coefficient maps of the fold map") {
    VarContext s = VarContext::plain({"z", "w"});
    VarContext t = VarContext::plain({"xi", "eta"});
    Poly xi = var(t, 0), eta = var(t, 1);

    SymmetricFiberData d = symmetric_fiber_maps(fold_map(s, t));
    CHECK(d.p == 4);
    // multiplication by z: x^4 - xi x^2 + eta^2.
    CHECK(d.char_polys[0][0].is_zero());
    CHECK(d.char_polys[0][1] == -xi);
    CHECK(d.char_polys[0][2].is_zero());
    CHECK(d.char_polys[0][3] == eta * eta);
    CHECK(d.char_polys[0][1].eval({Scalar(5), Scalar(2)}) == Scalar(-5));
    CHECK(d.char_polys[0][3].eval({Scalar(5), Scalar(2)}) == Scalar(4));
}

TEST_CASE("coefficient map guards") {
    VarContext s = VarContext::plain({"z", "w"});
    VarContext t = VarContext::plain({"xi", "eta"});
    Poly z = var(s, 0), w = var(s, 1);

    // Not finite: no multiplicity to match.
    CHECK_THROWS_AS((void)symmetric_fiber_maps(MapGerm(s, t, {z, z * w})), error);

    // Finite, but the module rank over the target exceeds the local
    // multiplicity (z - z^2 has a second sheet away from the origin).
    VarContext s1 = VarContext::plain({"x"});
    VarContext t1 = VarContext::plain({"x_t"});
    Poly x = var(s1, 0);
    CHECK_THROWS_WITH_AS((void)symmetric_fiber_maps(MapGerm(s1, t1, {x - x * x})),
                         doctest::Contains("differs"), error);

    // Same obstruction through a curve restriction of a 2-variable map.
    CHECK_THROWS_WITH_AS(
        (void)symmetric_fiber_maps(MapGerm(s, t, {z * z + z * z * z, w})),
        doctest::Contains("differs"), error);
}

TEST_CASE("fiber polynomial along the curve: squaring map") {
    VarContext s = VarContext::plain({"z", "w"});
    VarContext t = VarContext::plain({"xi", "eta"});
    Poly z = var(s, 0), w = var(s, 1);
    MapGerm f(s, t, {z * z, w});
    IdealHandle X(s, {w});

    WeierstrassData wd = weierstrass_along_curve(f, X);
    CHECK(wd.homogeneous);
    REQUIRE(wd.c.size() == 2);
    CHECK(*wd.c[0] == Scalar(0));
    CHECK(*wd.c[1] == Scalar(-1));
    // R = x^2 - t^2.
    const VarContext& rc = wd.R.ctx();
    Poly tt = var(rc, 0), x = var(rc, 1);
    CHECK(wd.R == x * x - tt * tt);
    CHECK(wd.R.eval({Scalar(3), Scalar(3)}) == Scalar(0));
    CHECK(wd.R.eval({Scalar(3), Scalar(-3)}) == Scalar(0));
    CHECK(wd.R.eval({Scalar(3), Scalar(1)}) == Scalar(-8));
}

TEST_CASE("fiber polynomial along the curve: fold map") {
    VarContext s = VarContext::plain({"z", "w"});
    VarContext t = VarContext::plain({"xi", "eta"});
    Poly w = var(s, 1);
    IdealHandle X(s, {w});

    WeierstrassData wd = weierstrass_along_curve(fold_map(s, t), X);
    CHECK(wd.homogeneous);
    const VarContext& rc = wd.R.ctx();
    Poly tt = var(rc, 0), x = var(rc, 1);
    // R = x^4 - t^2 x^2 = x^2 (x - t)(x + t): the double root at x = 0 comes
    // from the fiber points on the other axis, which is why the preimage of
    // the image is strictly larger here.
    CHECK(wd.R == x.pow(4) - tt * tt * x * x);
    std::vector<Poly> at_x0 = {var(rc, 0), Poly(rc)};
    CHECK(wd.R.compose(at_x0).is_zero());
    CHECK(wd.R.eval({Scalar(3), Scalar(3)}) == Scalar(0));
    CHECK(wd.R.eval({Scalar(3), Scalar(-3)}) == Scalar(0));
}

TEST_CASE("fiber polynomial along the curve: further shapes") {
    VarContext s = VarContext::plain({"z", "w"});
    VarContext t = VarContext::plain({"xi", "eta"});
    Poly z = var(s, 0), w = var(s, 1);
    IdealHandle X(s, {w});

    // Identity: R = x - t.
    WeierstrassData id = weierstrass_along_curve(MapGerm::identity(s, t), X);
    CHECK(id.homogeneous);
    CHECK(id.R == var(id.R.ctx(), 1) - var(id.R.ctx(), 0));

    // (z^3, z^6 + w): R = x^3 - t^3.
    WeierstrassData cub =
        weierstrass_along_curve(MapGerm(s, t, {z.pow(3), z.pow(6) + w}), X);
    CHECK(cub.homogeneous);
    CHECK(cub.R == var(cub.R.ctx(), 1).pow(3) - var(cub.R.ctx(), 0).pow(3));

    // (z, w^2) along V(z): the parameter is the second coordinate.
    WeierstrassData swp =
        weierstrass_along_curve(MapGerm(s, t, {z, w * w}), IdealHandle(s, {z}));
    CHECK(swp.homogeneous);
    CHECK(swp.R == var(swp.R.ctx(), 1).pow(2) - var(swp.R.ctx(), 0).pow(2));
}

TEST_CASE("separating coefficient maps") {
    VarContext s = VarContext::plain({"z", "w"});
    VarContext t = VarContext::plain({"xi", "eta"});
    Poly z = var(s, 0), w = var(s, 1);
    Poly xi = var(t, 0), eta = var(t, 1);
    IdealHandle X(s, {w});

    // Squaring map: F^1 restricts to zero along the curve, F^2 separates.
    SeparatingFunction sq = find_separating_function(MapGerm(s, t, {z * z, w}), X);
    CHECK(sq.j == 2);
    CHECK(sq.c == Scalar(-1));
    REQUIRE(sq.F.size() == 2);
    CHECK(sq.F[0] == -xi);
    CHECK(sq.F[1] == eta * eta);

    // Identity: the linear coefficient already separates.
    SeparatingFunction id = find_separating_function(MapGerm::identity(s, t), X);
    CHECK(id.j == 1);
    CHECK(id.c == Scalar(-1));

    // (z^3, z^6 + w): the search must go all the way to j = q = 3.
    SeparatingFunction cub =
        find_separating_function(MapGerm(s, t, {z.pow(3), z.pow(6) + w}), X);
    CHECK(cub.j == 3);
    CHECK(cub.c == Scalar(-1));

    // (z, w^2) along V(z): reordering and parameter detection together.
    SeparatingFunction swp =
        find_separating_function(MapGerm(s, t, {z, w * w}), IdealHandle(s, {z}));
    CHECK(swp.j == 2);
    CHECK(swp.c == Scalar(-1));

    // Preimage equality is a precondition: the fold map fails it.
    CHECK_THROWS_WITH_AS((void)find_separating_function(fold_map(s, t), X),
                         doctest::Contains("preimage equality"), error);
    // So does (z^2, z^3 + w).
    CHECK_THROWS_WITH_AS(
        (void)find_separating_function(MapGerm(s, t, {z * z, z.pow(3) + w}), X),
        doctest::Contains("preimage equality"), error);
}

TEST_CASE("three variables: restriction along a non-coordinate line") {
    VarContext s = VarContext::plain({"z", "u", "w"});
    VarContext t = VarContext::plain({"xi", "ups", "eta"});
    Poly z = var(s, 0), u = var(s, 1), w = var(s, 2);
    MapGerm f(s, t, {z * z, u, w});
    // Same germ as V(u, w), written with a mixed generator.
    IdealHandle X(s, {u - w, w});

    CurveImageReport rep = curve_image_decision(f, X, 24);
    CHECK(rep.decision == CurveDecision::SmoothImage);
    CHECK(rep.m == 2);
    CHECK(rep.q == 2);
    CHECK(rep.curve.param_index == 0);

    SeparatingFunction sep = find_separating_function(f, X);
    CHECK(sep.j == 2);
    CHECK(sep.c == Scalar(-1));
}

TEST_CASE("normalization soundness over random leading series") {
    VarContext s = VarContext::plain({"z", "w"});
    VarContext t = VarContext::plain({"xi", "eta"});
    Poly z = var(s, 0), w = var(s, 1);
    IdealHandle X(s, {w});
    std::mt19937_64 rng(192837);
    std::uniform_int_distribution<int> coef(-3, 3);
    std::uniform_int_distribution<unsigned> ord(1, 4);
    const unsigned D = 16;

    for (int trial = 0; trial < 40; ++trial) {
        unsigned m = ord(rng);
        int b = 0;
        while (b == 0) b = coef(rng);
        // Leading coefficient b^m always has an exact m-th root.
        Scalar lead = Scalar(1);
        for (unsigned r = 0; r < m; ++r) lead = lead * Scalar(b);
        Poly p1 = Poly::constant(s, lead) * z.pow(m);
        for (unsigned e = m + 1; e <= m + 4; ++e)
            p1 += z.pow(e).scaled(Scalar(coef(rng)));
        MapGerm f(s, t, {p1, w});

        CurveGerm c = restrict_and_normalize(f, X, D);
        CHECK(c.order == m);
        CHECK(c.components[0] == tpow(m, D));
        // The substitution is a unit times t and recomposes the raw series.
        CHECK(c.reparam.coeff(0) == Scalar(0));
        CHECK(!c.reparam.coeff(1).is_zero());
        TruncatedSeries raw = TruncatedSeries::from_poly(p1, 0, "t", D);
        CHECK(raw.compose(c.reparam) == c.components[0]);
    }
}

TEST_CASE("separating maps across random monomial shapes") {
    VarContext s = VarContext::plain({"z", "w"});
    VarContext t = VarContext::plain({"xi", "eta"});
    Poly z = var(s, 0), w = var(s, 1);
    IdealHandle X(s, {w});
    std::mt19937_64 rng(55667788);

    const std::vector<Scalar> real_pool = {Scalar(1), Scalar(-1), Scalar(2),
                                           Scalar::fraction(1, 2), Scalar(3)};
    const std::vector<Scalar> gauss_pool = {Scalar(1),     Scalar(-1),       Scalar(2),
                                            Scalar::i(),   Scalar(0, -1),    Scalar(1, 1),
                                            Scalar::fraction(3, 2)};

    for (int trial = 0; trial < 200; ++trial) {
        unsigned m = std::uniform_int_distribution<unsigned>(1, 6)(rng);
        unsigned cap = std::max(1u, 8 / m);
        unsigned sdeg = std::uniform_int_distribution<unsigned>(1, cap)(rng);
        // Gaussian-unit leading coefficients need even m for an exact root.
        const auto& pool = (m % 2 == 0) ? gauss_pool : real_pool;
        Scalar b = pool[std::uniform_int_distribution<size_t>(0, pool.size() - 1)(rng)];
        Scalar a = Scalar(1);
        for (unsigned r = 0; r < m; ++r) a = a * b;

        // f = (a z^m, z^{m s} + w): the image of {w = 0} is a graph, so the
        // preimage is exactly {w = 0} and the exponent gcd equals m.
        MapGerm f(s, t, {z.pow(m).scaled(a), z.pow(m * sdeg) + w});

        SeparatingFunction sep = find_separating_function(f, X);
        CHECK(sep.j == m);
        CHECK(sep.c == -a.inverse());

        // Every retained exponent of the normalized curve is a multiple of m.
        CurveGerm c = restrict_and_normalize(f, X, 24 + 8 * m);
        CHECK(support_gcd_q(c) == m);
        for (const TruncatedSeries& comp : c.components)
            for (unsigned l = 0; l <= c.trunc; ++l)
                if (!comp.coeff(l).is_zero()) CHECK(l % m == 0);
    }
}

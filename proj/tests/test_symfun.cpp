#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <random>

#include "germcalc/symfun.hpp"

using namespace germcalc;

namespace {

Poly var(const VarContext& c, size_t i) { return Poly::variable(c, i); }

CycScalar cyc(unsigned q, long n) { return CycScalar(q, Scalar(n)); }

// Signed coefficients [c_1..c_p] of prod_i (y - w^{exps[i]}), expanded in the
// cyclotomic extension. Mirrors the product rule from first principles so the
// library search has an independent cross-check.
std::vector<CycScalar> expand_coeffs(const std::vector<unsigned>& exps, unsigned q) {
    std::vector<CycScalar> c(exps.size() + 1, cyc(q, 0));
    c[0] = cyc(q, 1);
    size_t used = 0;
    for (unsigned a : exps) {
        CycScalar root = CycScalar::root_power(q, a);
        ++used;
        for (size_t i = used; i >= 1; --i) c[i] = c[i] - root * c[i - 1];
    }
    c.erase(c.begin());
    return c;
}

}  // namespace

TEST_CASE("elementary symmetric polynomials and power sums") {
    VarContext ctx = VarContext::plain({"w1", "w2", "w3"});
    Poly w1 = var(ctx, 0), w2 = var(ctx, 1), w3 = var(ctx, 2);
    CHECK(elementary_symmetric(ctx, 0) == Poly::constant(ctx, Scalar(1)));
    CHECK(elementary_symmetric(ctx, 1) == w1 + w2 + w3);
    CHECK(elementary_symmetric(ctx, 2) == w1 * w2 + w1 * w3 + w2 * w3);
    CHECK(elementary_symmetric(ctx, 3) == w1 * w2 * w3);
    CHECK(power_sum(ctx, 1) == w1 + w2 + w3);
    CHECK(power_sum(ctx, 2) == w1 * w1 + w2 * w2 + w3 * w3);
}

TEST_CASE("symmetry detection") {
    VarContext ctx = VarContext::plain({"w1", "w2", "w3"});
    Poly w1 = var(ctx, 0), w2 = var(ctx, 1);
    CHECK(is_symmetric(elementary_symmetric(ctx, 2)));
    CHECK(is_symmetric(power_sum(ctx, 3)));
    CHECK(is_symmetric(Poly::constant(ctx, Scalar(7))));
    CHECK(!is_symmetric(w1 * w1 * w2));
    CHECK(!is_symmetric(w1));
}

TEST_CASE("power sums in the signed coefficients") {
    VarContext ctx = VarContext::plain({"w1", "w2", "w3"});
    Poly a1 = sym_express(power_sum(ctx, 1));
    Poly a2 = sym_express(power_sum(ctx, 2));
    Poly a3 = sym_express(power_sum(ctx, 3));
    const VarContext& cc = a1.ctx();
    REQUIRE(cc.size() == 3);
    CHECK(cc.name(0) == "c1");
    Poly c1 = var(cc, 0), c2 = var(cc, 1), c3 = var(cc, 2);
    CHECK(a1 == -c1);
    CHECK(a2 == c1 * c1 - c2 * Poly::constant(cc, Scalar(2)));
    CHECK(a3 == -(c1 * c1 * c1) + c1 * c2 * Poly::constant(cc, Scalar(3)) -
                    c3 * Poly::constant(cc, Scalar(3)));
}

TEST_CASE("homogeneous input of degree q only uses the first q coefficients") {
    VarContext ctx = VarContext::plain({"w1", "w2", "w3", "w4"});
    Poly a = sym_express(elementary_symmetric(ctx, 2));
    // e_2 = (+1) * c_2, and neither c_3 nor c_4 appears.
    CHECK(a == var(a.ctx(), 1));
    Poly b = sym_express(power_sum(ctx, 2));
    for (const auto& [m, c] : b.terms()) {
        CHECK(m[2] == 0);
        CHECK(m[3] == 0);
    }
}

TEST_CASE("expressing a non-symmetric polynomial is rejected") {
    VarContext ctx = VarContext::plain({"w1", "w2"});
    CHECK_THROWS_AS((void)sym_express(var(ctx, 0)), error);
}

TEST_CASE("round trip: substitute the signed elementary values back") {
    VarContext ctx = VarContext::plain({"w1", "w2", "w3"});
    std::mt19937_64 rng(13579);
    std::uniform_int_distribution<int> coef(-4, 4);
    // c_i as polynomials in the w's: (-1)^i e_i.
    std::vector<Poly> cvals;
    for (unsigned i = 1; i <= 3; ++i) {
        Poly e = elementary_symmetric(ctx, i);
        cvals.push_back(i % 2 == 1 ? -e : e);
    }
    for (int trial = 0; trial < 40; ++trial) {
        // Random polynomial in the elementary symmetric values: symmetric by
        // construction, with controlled degree.
        Poly d = Poly::constant(ctx, Scalar(0));
        for (int t = 0; t < 4; ++t) {
            Poly term = Poly::constant(ctx, Scalar(coef(rng)));
            for (unsigned i = 1; i <= 3; ++i) {
                int e = std::uniform_int_distribution<int>(0, 2)(rng);
                for (int rep = 0; rep < e; ++rep) term = term * elementary_symmetric(ctx, i);
            }
            d += term;
        }
        REQUIRE(is_symmetric(d));
        Poly a = sym_express(d);
        CHECK(a.compose(cvals) == d);
    }
}

TEST_CASE("cyclotomic scalars") {
    // q = 4: the primitive root is i itself.
    CHECK(CycScalar::root_power(4, 1) == CycScalar(4, Scalar::i()));
    CHECK(CycScalar::root_power(4, 2) == cyc(4, -1));
    CHECK(CycScalar::root_power(4, 1).as_scalar() == Scalar::i());

    // q = 3: 1 + w + w^2 = 0 and w^3 = 1.
    CycScalar w3 = CycScalar::root_power(3, 1);
    CHECK(cyc(3, 1) + w3 + w3 * w3 == cyc(3, 0));
    CHECK(w3 * w3 * w3 == cyc(3, 1));
    CHECK(CycScalar::root_power(3, 5) == w3 * w3);
    CHECK_THROWS_AS((void)w3.as_scalar(), error);

    // q = 6: w^2 - w + 1 = 0 and w^3 = -1.
    CycScalar w6 = CycScalar::root_power(6, 1);
    CHECK(w6 * w6 - w6 + cyc(6, 1) == cyc(6, 0));
    CHECK(w6 * w6 * w6 == cyc(6, -1));

    // q = 5: the root powers sum to zero.
    CycScalar s = cyc(5, 1);
    for (unsigned k = 1; k < 5; ++k) s = s + CycScalar::root_power(5, k);
    CHECK(s.is_zero());

    // Mixed orders are rejected.
    CHECK_THROWS_AS((void)(cyc(3, 1) + cyc(4, 1)), error);
}

TEST_CASE("first nonzero coefficient search") {
    CHECK(first_nonzero_coeff({Scalar(0), Scalar(5), Scalar(1)}, 2) == 2);
    CHECK(first_nonzero_coeff({Scalar(0), Scalar(5), Scalar(1)}, 3) == 2);
    CHECK(first_nonzero_coeff({Scalar(3), Scalar(0)}, 1) == 1);
    CHECK_THROWS_AS((void)first_nonzero_coeff({Scalar(0), Scalar(0), Scalar(1)}, 2), error);
}

TEST_CASE("coefficient search over roots of unity") {
    // (y-1)^3: the linear coefficient is already nonzero.
    CHECK(roots_of_unity_coeff({0, 0, 0}, 1) == 1);
    // y^2 - 1 needs the constant coefficient.
    CHECK(roots_of_unity_coeff({0, 1}, 2) == 2);
    // (y-1)^2 (y+1): the linear coefficient survives.
    CHECK(roots_of_unity_coeff({0, 0, 1}, 2) == 1);
    // (y-w)^3 over the cube roots: the linear coefficient is -3w.
    CHECK(roots_of_unity_coeff({1, 1, 1}, 3) == 1);
    // y^q - 1 forces the search all the way to j = q.
    CHECK(roots_of_unity_coeff({0, 1, 2}, 3) == 3);
    CHECK(roots_of_unity_coeff({0, 1, 2, 3}, 4) == 4);
    CHECK(roots_of_unity_coeff({0, 1, 2, 3, 4}, 5) == 5);
    CHECK(roots_of_unity_coeff({0, 1, 2, 3, 4, 5}, 6) == 6);
    // Both roots at -1: the linear coefficient is 2.
    CHECK(roots_of_unity_coeff({1, 3}, 2) == 1);
    // Fewer roots than the order: the certificate cannot be formed.
    CHECK_THROWS_AS((void)roots_of_unity_coeff({1}, 4), error);
}

TEST_CASE("random root multisets always yield an index at most q") {
    std::mt19937_64 rng(24680);
    for (int trial = 0; trial < 200; ++trial) {
        unsigned q = std::uniform_int_distribution<unsigned>(1, 6)(rng);
        unsigned p = std::uniform_int_distribution<unsigned>(q, 6)(rng);
        std::vector<unsigned> exps;
        for (unsigned i = 0; i < p; ++i)
            exps.push_back(std::uniform_int_distribution<unsigned>(0, q - 1)(rng));

        unsigned j = roots_of_unity_coeff(exps, q);
        CHECK(j >= 1);
        CHECK(j <= q);

        // Independent check against a from-scratch expansion: coefficients
        // below j vanish, the j-th does not.
        std::vector<CycScalar> c = expand_coeffs(exps, q);
        for (unsigned l = 1; l < j; ++l) CHECK(c[l - 1].is_zero());
        CHECK(!c[j - 1].is_zero());

        // j == 1 exactly when the roots have a nonzero sum.
        CycScalar sum = cyc(q, 0);
        for (unsigned a : exps) sum = sum + CycScalar::root_power(q, a);
        CHECK((j == 1) == !sum.is_zero());

        // The answer does not depend on the listed order of the roots.
        std::vector<unsigned> shuffled = exps;
        std::shuffle(shuffled.begin(), shuffled.end(), rng);
        CHECK(roots_of_unity_coeff(shuffled, q) == j);
    }
}

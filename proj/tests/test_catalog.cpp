#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "triag/catalog.hpp"
#include "triag/rng.hpp"
#include "triag/text_io.hpp"

using namespace triag;

namespace {

Polynomial n(const Universe& u, std::uint32_t i, std::uint32_t k) {
    return Polynomial::variable(u, u.index_n(i, k));
}

void expect_all_verify(const CatalogEntry& entry) {
    for (const auto& inv : entry.invariants) {
        const Certificate cert = verify_invariant(entry.algebra, inv);
        INFO(entry.label, ": ", cert.invariant);
        CHECK(cert.pass);
    }
    CHECK(entry.invariants.size() == entry.expected_count);
}

} // namespace

TEST_CASE("nilpotent invariant basis") {
    auto b2 = theorem1_basis(2);
    REQUIRE(b2.size() == 1);
    CHECK(b2[0] == InvariantExpr(n(Universe(2, 0), 1, 2)));

    auto b3 = theorem1_basis(3);
    REQUIRE(b3.size() == 1);
    CHECK(b3[0] == InvariantExpr(n(Universe(3, 0), 1, 3)));

    auto b4 = theorem1_basis(4);
    REQUIRE(b4.size() == 2);
    const Universe u(4, 0);
    CHECK(b4[0] == InvariantExpr(n(u, 1, 4)));
    CHECK(b4[1] == InvariantExpr(n(u, 1, 3) * n(u, 2, 4) - n(u, 2, 3) * n(u, 1, 4)));
}

TEST_CASE("annihilation of the corner determinants") {
    for (std::uint32_t M = 3; M <= 7; ++M) {
        const LieAlgebra alg = build_T(M);
        const auto fields = coadjoint_fields(alg);
        for (std::uint32_t mu = 1; mu <= M / 2; ++mu) {
            const Polynomial z = corner_det(alg.universe(), mu);
            for (const auto& f : fields) CHECK(f.apply(z).is_zero());
        }
    }
}

TEST_CASE("combined corner operators") {
    // mu = 1 is the corner operator itself; without non-nilpotent elements
    // the whole combination cancels
    const LieAlgebra t5 = build_T(5);
    CHECK(zhat_operator(t5, 1) == coadjoint_fields(t5)[t5.universe().index_n(1, 5)]);
    CHECK(zhat_operator(t5, 2).is_zero());
    CHECK(zhat_operator(build_T(6), 3).is_zero());

    // the maximal M = 4 extension reproduces the two displayed operators
    const LieAlgebra l43 = build_L_full_rank(4);
    const Universe& u = l43.universe();
    const Polynomial z1 = corner_det(u, 1), z2 = corner_det(u, 2);

    const VectorField zhat1 = zhat_operator(l43, 1);
    const VectorField zhat2 = zhat_operator(l43, 2);
    VectorField exp1(u), exp2(u);
    for (std::uint32_t a = 1; a <= 3; ++a) exp1.add_component(u.index_x(a), -z1);
    exp2.add_component(u.index_x(1), -z2);
    exp2.add_component(u.index_x(2), z2 * Rat(-2));
    exp2.add_component(u.index_x(3), -z2);
    CHECK(zhat1 == exp1);
    CHECK(zhat2 == exp2);

    // matrix-entry derivatives cancel also with off-diagonal slots present,
    // and the slot feeds the x-coefficient: -(a14+a23) Z2 + lam2 Z1^2
    const CatalogEntry c3 = lemma_invariants(Family::Lemma1Case3);
    {
        const Universe& uc = c3.algebra.universe();
        const VectorField zh = zhat_operator(c3.algebra, 2);
        REQUIRE(zh.components().size() == 1);
        const Polynomial w1 = corner_det(uc, 1);
        const Polynomial w2 = corner_det(uc, 2);
        // member parameters: a14 = a23 = 1, lam2 = -1
        CHECK(zh.component(uc.index_x(1)) == w2 * Rat(-2) - w1 * w1);
    }

    // two non-nilpotent elements: one operator per x-direction
    const CatalogEntry l2c1 = lemma_invariants(Family::Lemma2Case1);
    {
        const Universe& uc = l2c1.algebra.universe();
        const Polynomial w1 = corner_det(uc, 1);
        const Polynomial w2 = corner_det(uc, 2);
        const VectorField zh1 = zhat_operator(l2c1.algebra, 1);
        // a14 = 0 and b14 = 1: the corner operator only moves x_2
        CHECK(zh1.component(uc.index_x(1)).is_zero());
        CHECK(zh1.component(uc.index_x(2)) == -w1);
        const VectorField zh2 = zhat_operator(l2c1.algebra, 2);
        // x_1: -(a14+a23) Z2 = 0; x_2: -(b14+b23) Z2 + lam2 Z1^2
        CHECK(zh2.component(uc.index_x(1)).is_zero());
        CHECK(zh2.component(uc.index_x(2)) == w1 * w1 - w2 * Rat(2));
    }
}

TEST_CASE("one-element families") {
    expect_all_verify(lemma_invariants(Family::Lemma1Case1));
    expect_all_verify(lemma_invariants(Family::Lemma1Case2));
    expect_all_verify(lemma_invariants(Family::Lemma1Case3));

    // the canonical three-invariant member lists the quadratic + x form
    const CatalogEntry c1 = lemma_invariants(Family::Lemma1Case1);
    const Universe& u = c1.algebra.universe();
    const Polynomial quad = n(u, 1, 2) * n(u, 2, 4) + n(u, 1, 3) * n(u, 3, 4);
    CHECK(c1.invariants[2] ==
          InvariantExpr(quad + n(u, 1, 4) * Polynomial::variable(u, u.index_x(1))));

    // violated conditions are named
    CHECK_THROWS_AS(lemma_invariants(Family::Lemma1Case1, {{"a23", Rat(5)}}), ConditionViolated);
    CHECK_THROWS_AS(lemma_invariants(Family::Lemma1Case2, {{"a12", Rat(1)}, {"a34", Rat(-1)}}),
                    ConditionViolated);
    CHECK_THROWS_AS(lemma_invariants(Family::Lemma1Case3, {{"a34", Rat(1)}}), ConditionViolated);
}

TEST_CASE("two-element families") {
    expect_all_verify(lemma_invariants(Family::Lemma2Case1));
    expect_all_verify(lemma_invariants(Family::Lemma2Case2a));
    expect_all_verify(lemma_invariants(Family::Lemma2Case2b));
    expect_all_verify(lemma_invariants(Family::Lemma2Case3));

    // the sigma term enters the logarithmic invariant with the right weight
    const CatalogEntry c3 = lemma_invariants(Family::Lemma2Case3, {{"sigma12", Rat(3, 2)}});
    REQUIRE(c3.invariants.size() == 2);
    REQUIRE(c3.invariants[1].log_terms().size() == 1);
    const Universe& u = c3.algebra.universe();
    const Polynomial z1 = n(u, 1, 4);
    CHECK(c3.invariants[1].log_terms()[0].coeff == RationalFn(z1 * z1 * Rat(3, 2)));
    expect_all_verify(c3);

    CHECK_THROWS_AS(lemma_invariants(Family::Lemma2Case2a,
                                     {{"a23", Rat(1)}, {"a34", Rat(0)}, {"b34", Rat(0)}}),
                    ConditionViolated);
}

TEST_CASE("quotient of corner invariants fails on the second generator") {
    const LieAlgebra l43 = build_L_full_rank(4);
    const Universe& u = l43.universe();
    const InvariantExpr candidate(RationalFn(corner_det(u, 2), corner_det(u, 1)));
    const Certificate cert = verify_invariant(l43, candidate);
    CHECK(!cert.pass);
    // the offending generator is the second non-nilpotent element
    const std::string x2 = "x_2";
    bool failed_on_x2 = false;
    for (const auto& g : cert.per_generator) {
        if (g.generator == x2) {
            failed_on_x2 = !g.zero;
            CHECK(!g.residual.empty());
        }
    }
    CHECK(failed_on_x2);

    // constants always verify
    CHECK(verify_invariant(l43, InvariantExpr(RationalFn(u, Rat(1)))).pass);
}

TEST_CASE("maximal extension bases at small sizes") {
    const CatalogEntry p4 = prop1_invariants(4);
    REQUIRE(p4.expected_count == 1);
    expect_all_verify(p4);
    // and it coincides with the dedicated M = 4 family
    CHECK(p4.invariants[0] == lemma_invariants(Family::Lemma3).invariants[0]);

    const CatalogEntry p5 = prop1_invariants(5);
    CHECK(p5.expected_count == 2);
    expect_all_verify(p5);

    const CatalogEntry p6 = prop1_invariants(6);
    CHECK(p6.expected_count == 2);
    expect_all_verify(p6);
}

TEST_CASE("the three-invariant member agrees with the general family up to a unit") {
    // poly + corner*x versus poly/corner + x: equal after multiplying by the
    // corner invariant
    const CatalogEntry lem = lemma_invariants(Family::Lemma1Case1);
    const CatalogEntry gen = prop2_invariants(4, {Rat(1), Rat(0), Rat(-1)});
    REQUIRE(gen.family == Family::Prop2Case1);
    const Universe& u = lem.algebra.universe();
    const RationalFn z1(n(u, 1, 4));
    CHECK(lem.invariants[2].rational_part() == gen.invariants.back().rational_part() * z1);
    expect_all_verify(gen);
}

TEST_CASE("one-element diagonal classification") {
    // mirror conditions give the extra invariant
    const CatalogEntry m6 = prop2_invariants(6, {Rat(1), Rat(2), Rat(0), Rat(-2), Rat(-1)});
    CHECK(m6.family == Family::Prop2Case1);
    CHECK(m6.expected_count == 4);
    expect_all_verify(m6);
    RankOptions ro;
    CHECK(invariant_count(m6.algebra, ro) == 4);
    JacobianOptions jo;
    CHECK(jacobian_rank(m6.invariants, jo) == 4);

    // generic draws give the power products, matching the M = 4 exponents
    const CatalogEntry c2 = prop2_invariants(4, {Rat(2), Rat(1), Rat(1)});
    CHECK(c2.family == Family::Prop2Case2);
    REQUIRE(c2.expected_count == 1);
    // exponent pair (a14, a14 + a23) = (4, 5)
    const Universe& u = c2.algebra.universe();
    const InvariantExpr expected = InvariantExpr::power_product(
        RationalFn(u, Rat(1)),
        {{corner_det(u, 2), Rat(4)}, {n(u, 1, 4), Rat(-5)}});
    CHECK(c2.invariants[0] == expected);
    expect_all_verify(c2);

    // undefined exponent ratios are reported (second eigenvalue sum vanishes)
    CHECK_THROWS_AS(prop2_invariants(6, {Rat(1), Rat(1), Rat(1), Rat(1), Rat(-7)}),
                    DegenerateExponent);
}

TEST_CASE("functional independence by gradient rank") {
    JacobianOptions jo;
    CHECK(jacobian_rank(theorem1_basis(6), jo) == 3);
    CHECK(jacobian_rank(prop1_invariants(7).invariants, jo) == 3);

    const Universe u(4, 0);
    const Polynomial z1 = n(u, 1, 4);
    std::vector<InvariantExpr> dependent{InvariantExpr(z1), InvariantExpr(z1 * z1)};
    CHECK(jacobian_rank(dependent, jo) == 1);
}

TEST_CASE("reduced operator families annihilate the corner determinants") {
    for (std::uint32_t M : {5u, 6u, 7u}) {
        const CofactorReport report = cofactor_annihilation_check(M);
        CHECK(report.pass);
        CHECK(!report.checks.empty());
        for (const auto& c : report.checks) CHECK(c.zero);
    }
}

TEST_CASE("degenerate exponent sum at the first level") {
    // a_{1M} = 0 with several power products collapses the basis
    CHECK_THROWS_AS(prop2_invariants(6, {Rat(1), Rat(1), Rat(1), Rat(1), Rat(-4)}),
                    DegenerateExponent);
    // at M = 4 the single product just degenerates to the corner entry
    const CatalogEntry e = prop2_invariants(4, {Rat(1), Rat(1), Rat(-2)});
    REQUIRE(e.family == Family::Prop2Case2);
    CHECK(e.invariants[0] == InvariantExpr(n(e.algebra.universe(), 1, 4)));
    expect_all_verify(e);
}

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

Polynomial random_poly(Rng& rng, const Universe& u, int max_terms = 4) {
    Polynomial p(u);
    const int terms = static_cast<int>(rng.uniform(0, max_terms));
    for (int t = 0; t < terms; ++t) {
        Monomial m;
        const int vars = static_cast<int>(rng.uniform(0, 3));
        for (int v = 0; v < vars; ++v)
            m = m * Monomial::var(static_cast<VarIdx>(rng.uniform(0, u.size() - 1)),
                                  static_cast<std::uint32_t>(rng.uniform(1, 2)));
        p.add_term(m, rng.rational(20, 6));
    }
    return p;
}

VectorField random_field(Rng& rng, const Universe& u) {
    VectorField f(u);
    const int comps = static_cast<int>(rng.uniform(1, 3));
    for (int c = 0; c < comps; ++c)
        f.add_component(static_cast<VarIdx>(rng.uniform(0, u.size() - 1)), random_poly(rng, u));
    return f;
}

} // namespace

TEST_CASE("the nilpotent operator moves a matrix entry up its row") {
    const LieAlgebra t4 = build_T(4);
    const Universe& u = t4.universe();
    const auto fields = coadjoint_fields(t4);
    // first basis element acts as n13 d/dn23 + n14 d/dn24
    CHECK(fields[0].apply(n(u, 2, 3)) == n(u, 1, 3));
    CHECK(fields[0].apply(n(u, 2, 4)) == n(u, 1, 4));
    CHECK(fields[0].component(u.index_n(2, 3)) == n(u, 1, 3));
    CHECK(fields[0].components().size() == 2);
}

TEST_CASE("derivations kill constants") {
    Rng rng(5);
    const Universe u(4, 1);
    const InvariantExpr one(RationalFn(u, Rat(1)));
    for (int i = 0; i < 20; ++i) {
        const VectorField v = random_field(rng, u);
        CHECK(v.apply(one).is_zero());
    }
}

TEST_CASE("the logarithmic member of the one-element family is annihilated") {
    const CatalogEntry entry = lemma_invariants(Family::Lemma1Case3);
    const auto fields = coadjoint_fields(entry.algebra);
    const InvariantExpr& inv = entry.invariants.front();
    // the non-nilpotent generator is the last basis element
    CHECK(fields.back().apply(inv).is_zero());
    for (const auto& f : fields) CHECK(f.apply(inv).is_zero());
}

TEST_CASE("zero testing decomposes by component") {
    const Universe u(4, 0);
    CHECK(InvariantExpr(u).is_zero());
    CHECK((InvariantExpr(n(u, 1, 2)) - InvariantExpr(n(u, 1, 2))).is_zero());
    const InvariantExpr lg = InvariantExpr::log_term(RationalFn(u, Rat(1)), n(u, 1, 4));
    CHECK(!lg.is_zero());
    CHECK((lg - lg).is_zero());
}

TEST_CASE("expression normalization") {
    const Universe u(4, 0);
    const Polynomial z2 = corner_det(u, 2);

    // small integer powers fold into the rational part
    const InvariantExpr folded =
        InvariantExpr::power_product(RationalFn(u, Rat(1)), {{z2, Rat(2)}, {n(u, 1, 4), Rat(-1)}});
    CHECK(folded.power_factors().empty());
    CHECK(folded.rational_part() == RationalFn(z2 * z2, n(u, 1, 4)));

    // large exponents stay formal and merge; foldable factors move into the
    // coefficient on their own
    const InvariantExpr formal = InvariantExpr::power_product(
        RationalFn(u, Rat(1)), {{z2, Rat(40)}, {n(u, 1, 4), Rat(-81)}, {z2, Rat(7)}});
    REQUIRE(formal.power_factors().size() == 1);
    CHECK(formal.power_factors()[0].exponent == Rat(47));
    CHECK(formal.power_coeff().den() == n(u, 1, 4).pow(81));

    // exponent zero disappears, zero base is rejected
    CHECK(InvariantExpr::power_product(RationalFn(u, Rat(3)), {{z2, Rat(0)}}).is_plain_rational());
    CHECK_THROWS_AS(
        InvariantExpr::power_product(RationalFn(u, Rat(1)), {{Polynomial(u), Rat(1)}}),
        RangeError);

    // log terms with matching arguments merge; unit arguments vanish
    InvariantExpr logs = InvariantExpr::log_term(RationalFn(u, Rat(2)), z2);
    logs = logs + InvariantExpr::log_term(RationalFn(u, Rat(-2)), z2);
    CHECK(logs.is_zero());
    CHECK(InvariantExpr::log_term(RationalFn(u, Rat(5)), Polynomial::constant(u, 1)).is_zero());

    // shared factors between log arguments are flagged
    InvariantExpr shared = InvariantExpr::log_term(RationalFn(u, Rat(1)), z2 * n(u, 1, 4));
    shared = shared + InvariantExpr::log_term(RationalFn(u, Rat(1)), n(u, 1, 4) * n(u, 1, 2));
    CHECK(shared.has_shared_log_factors());
    CHECK(!lemma_invariants(Family::Lemma1Case3).invariants[0].has_shared_log_factors());
}

TEST_CASE("product rule on random inputs") {
    Rng rng(17);
    const Universe u(5, 1);
    for (int i = 0; i < 300; ++i) {
        const Polynomial a = random_poly(rng, u), b = random_poly(rng, u);
        const VectorField v = random_field(rng, u);
        CHECK((v.apply(a * b) - (v.apply(a) * b + a * v.apply(b))).is_zero());
    }
}

TEST_CASE("derivation of formal parts follows the chain rules") {
    Rng rng(23);
    const Universe u(4, 1);
    const Polynomial z1 = n(u, 1, 4);
    const Polynomial z2 = corner_det(u, 2);
    for (int i = 0; i < 50; ++i) {
        const VectorField v = random_field(rng, u);

        // d(p^e) = e p^(e-1) dp, folded as a logarithmic derivative; the
        // exponents are large enough to keep the product formal and the
        // expectation works off the normalized factor list
        const InvariantExpr pw =
            InvariantExpr::power_product(RationalFn(u, Rat(1)), {{z2, Rat(40)}, {z1, Rat(-81)}});
        REQUIRE(!pw.power_factors().empty());
        const InvariantExpr dpw = v.apply(pw);
        RationalFn expected_coeff = v.apply(pw.power_coeff());
        for (const auto& pf : pw.power_factors())
            expected_coeff =
                expected_coeff + pw.power_coeff() * RationalFn(v.apply(pf.base), pf.base) * pf.exponent;
        if (expected_coeff.is_zero()) {
            CHECK(dpw.is_zero());
        } else {
            CHECK(dpw.power_factors() == pw.power_factors());
            CHECK(dpw.power_coeff() == expected_coeff);
        }

        // d(c ln q) = dc ln q + c dq/q
        const RationalFn c(random_poly(rng, u));
        if (c.is_zero()) continue;
        const InvariantExpr lg = InvariantExpr::log_term(c, z2);
        const InvariantExpr dlg = v.apply(lg);
        const RationalFn residue = c * RationalFn(v.apply(z2), z2);
        CHECK(dlg.rational_part() == residue);
        if (!v.apply(c.num()).is_zero()) {
            REQUIRE(dlg.log_terms().size() == 1);
            CHECK(dlg.log_terms()[0].coeff == v.apply(c));
        }
    }
}

TEST_CASE("commutators of coadjoint operators reproduce the brackets") {
    for (const LieAlgebra& alg :
         {build_T(4), build_T(5), build_L_full_rank(4),
          lemma_invariants(Family::Lemma2Case3).algebra}) {
        const auto fields = coadjoint_fields(alg);
        for (std::uint32_t i = 0; i < alg.dim(); ++i)
            for (std::uint32_t j = i + 1; j < alg.dim(); ++j) {
                VectorField expected(alg.universe());
                for (const auto& t : alg.bracket(i, j)) expected = expected + fields[t.k] * t.c;
                CHECK(VectorField::commutator(fields[i], fields[j]) == expected);
            }
    }
}

TEST_CASE("commutator identity for general fields") {
    Rng rng(29);
    const Universe u(4, 1);
    for (int i = 0; i < 100; ++i) {
        const VectorField v = random_field(rng, u), w = random_field(rng, u);
        const Polynomial p = random_poly(rng, u);
        const Polynomial direct = v.apply(w.apply(p)) - w.apply(v.apply(p));
        CHECK((direct - VectorField::commutator(v, w).apply(p)).is_zero());
    }
}

TEST_CASE("gradients match finite symbolic derivatives") {
    // oracle: apply the coordinate derivation symbolically, then evaluate
    Rng rng(31);
    const CatalogEntry entry = lemma_invariants(Family::Lemma2Case3);
    const Universe& u = entry.algebra.universe();
    const InvariantExpr& inv = entry.invariants[1]; // carries a log term
    REQUIRE(!inv.log_terms().empty());

    std::map<Polynomial, Rat, PolyLess> log_values;
    log_values.emplace(inv.log_terms()[0].arg, Rat(7, 3));

    for (int rep = 0; rep < 10; ++rep) {
        std::vector<Rat> point(u.size());
        for (auto& c : point) c = rng.rational(50, 6);
        try {
            const std::vector<Rat> grad = inv.gradient_at(point, log_values);
            for (VarIdx v = 0; v < u.size(); ++v) {
                const InvariantExpr d = VectorField::coordinate(u, v).apply(inv);
                // the symbolic derivative keeps the log symbol with a zero or
                // constant coefficient; evaluate it with the same assignment
                Rat expected = d.rational_part().eval(point);
                for (const auto& lt : d.log_terms())
                    expected += lt.coeff.eval(point) * log_values.at(lt.arg);
                CHECK(grad[v] == expected);
            }
        } catch (const DenominatorVanishes&) {
            continue;
        }
    }
}

TEST_CASE("plain evaluation rejects formal parts") {
    const Universe u(4, 0);
    const InvariantExpr lg = InvariantExpr::log_term(RationalFn(u, Rat(1)), n(u, 1, 4));
    std::vector<Rat> point(u.size(), Rat(1));
    CHECK_THROWS_AS(lg.eval(point), NonEvaluable);
    const InvariantExpr pw = InvariantExpr::power_product(
        RationalFn(u, Rat(1)), {{corner_det(u, 2), Rat(1, 2)}});
    CHECK_THROWS_AS(pw.eval(point), NonEvaluable);
    const InvariantExpr big = InvariantExpr::power_product(
        RationalFn(u, Rat(1)), {{n(u, 1, 4), Rat(100)}});
    CHECK(big.eval(point) == Rat(1));
}

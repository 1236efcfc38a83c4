#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "triag/catalog.hpp"
#include "triag/rng.hpp"

using namespace triag;

namespace {

std::vector<BracketTerm> bracket_of(const LieAlgebra& alg, std::uint32_t i1, std::uint32_t k1,
                                    std::uint32_t i2, std::uint32_t k2) {
    const Universe& u = alg.universe();
    return alg.bracket(u.index_n(i1, k1), u.index_n(i2, k2));
}

} // namespace

TEST_CASE("smallest sizes") {
    CHECK_THROWS_AS(build_T(1), InvalidSize);

    const LieAlgebra t2 = build_T(2);
    CHECK(t2.dim() == 1);
    CHECK(t2.brackets().empty());

    const LieAlgebra t3 = build_T(3);
    CHECK(t3.dim() == 3);
    REQUIRE(t3.brackets().size() == 1);
    const auto b = bracket_of(t3, 1, 2, 2, 3);
    REQUIRE(b.size() == 1);
    CHECK(b[0].k == t3.universe().index_n(1, 3));
    CHECK(b[0].c == 1);
}

TEST_CASE("bracket deltas at M = 4") {
    const LieAlgebra t4 = build_T(4);
    CHECK(t4.dim() == 6);
    const auto b1 = bracket_of(t4, 1, 2, 2, 4);
    REQUIRE(b1.size() == 1);
    CHECK(b1[0].k == t4.universe().index_n(1, 4));
    CHECK(b1[0].c == 1);
    CHECK(bracket_of(t4, 1, 2, 1, 3).empty());
    // antisymmetry through the accessor
    const auto rev = bracket_of(t4, 2, 4, 1, 2);
    REQUIRE(rev.size() == 1);
    CHECK(rev[0].c == -1);
}

TEST_CASE("central element has the zero operator") {
    for (std::uint32_t M : {3u, 4u, 6u}) {
        const LieAlgebra alg = build_T(M);
        const auto fields = coadjoint_fields(alg);
        CHECK(fields[alg.universe().index_n(1, M)].is_zero());
    }
}

TEST_CASE("solvable member operators carry the x-direction terms") {
    CharMatrixSpec spec = CharMatrixSpec::diagonal(4, {{Rat(1), Rat(2), Rat(3)}});
    const LieAlgebra alg = build_L(4, spec);
    const Universe& u = alg.universe();
    const auto fields = coadjoint_fields(alg);
    // the operator of the corner element reduces to -a14 n14 d/dx
    const VectorField& corner = fields[u.index_n(1, 4)];
    REQUIRE(corner.components().size() == 1);
    CHECK(corner.component(u.index_x(1)) ==
          Polynomial::variable(u, u.index_n(1, 4)) * Rat(-6));
}

TEST_CASE("full-rank extension diagonals") {
    // M = 3: two matrices with diagonals (1,0,1) and (0,1,1) in canonical order
    const LieAlgebra l32 = build_L_full_rank(3);
    const CharMatrixSpec& s3 = *l32.char_spec();
    CHECK(s3.diag_entry(1, 1, 2) == 1);
    CHECK(s3.diag_entry(1, 2, 3) == 0);
    CHECK(s3.diag_entry(1, 1, 3) == 1);
    CHECK(s3.diag_entry(2, 1, 2) == 0);
    CHECK(s3.diag_entry(2, 2, 3) == 1);
    CHECK(s3.diag_entry(2, 1, 3) == 1);

    // M = 4, second matrix: rows (13) and (14) carry 1, row (12) does not
    const LieAlgebra l43 = build_L_full_rank(4);
    const CharMatrixSpec& s4 = *l43.char_spec();
    CHECK(s4.diag_entry(2, 1, 3) == 1);
    CHECK(s4.diag_entry(2, 1, 4) == 1);
    CHECK(s4.diag_entry(2, 1, 2) == 0);
    // and the three diagonals are exactly the canonical ones
    const std::vector<std::vector<Rat>> expected = {
        {1, 0, 0, 1, 0, 1}, {0, 1, 0, 1, 1, 1}, {0, 0, 1, 0, 1, 1}};
    const Universe u(4, 0);
    for (std::uint32_t alpha = 1; alpha <= 3; ++alpha) {
        std::size_t idx = 0;
        for (std::uint32_t d = 1; d <= 3; ++d)
            for (std::uint32_t i = 1; i + d <= 4; ++i)
                CHECK(s4.diag_entry(alpha, i, i + d) == expected[alpha - 1][idx++]);
    }
    CHECK_THROWS_AS(build_L_full_rank(2), InvalidSize);
}

TEST_CASE("nilindependence is diagonal independence") {
    const LieAlgebra l43 = build_L_full_rank(4);
    std::vector<std::vector<std::vector<Rat>>> mats;
    for (std::uint32_t alpha = 1; alpha <= 3; ++alpha)
        mats.push_back(l43.char_spec()->full_matrix(alpha));
    CHECK(nilindependent(mats));

    // a scaled copy is dependent
    auto doubled = mats[0];
    for (auto& row : doubled)
        for (auto& v : row) v *= 2;
    CHECK(!nilindependent({mats[0], doubled}));

    // strictly upper triangular matrices are nilpotent on their own
    std::vector<std::vector<Rat>> nil1(6, std::vector<Rat>(6, Rat(0)));
    std::vector<std::vector<Rat>> nil2 = nil1;
    nil1[0][3] = 1;
    nil2[1][5] = 2;
    CHECK(!nilindependent({nil1, nil2}));

    std::vector<std::vector<Rat>> lower(6, std::vector<Rat>(6, Rat(0)));
    lower[3][0] = 1;
    CHECK_THROWS_AS(nilindependent({lower}), ShapeMismatch);
}

TEST_CASE("canonical-form constraints are enforced") {
    // sigma requires every a_{1M} to vanish
    CharMatrixSpec bad = CharMatrixSpec::diagonal(4, {{Rat(1), Rat(0), Rat(0)},
                                                      {Rat(0), Rat(1), Rat(-1)}});
    bad.sigma[0][1] = 1;
    bad.sigma[1][0] = -1;
    CHECK_THROWS_AS(build_L(4, bad), CanonicalFormViolation);

    // off-diagonal slot without its resonance
    CharMatrixSpec res = CharMatrixSpec::diagonal(4, {{Rat(1), Rat(0), Rat(0)}});
    res.lam_mid[0][0] = 1; // needs a23 = a14
    CHECK_THROWS_AS(build_L(4, res), CanonicalFormViolation);

    // nildependent pair
    CharMatrixSpec dep = CharMatrixSpec::diagonal(4, {{Rat(1), Rat(2), Rat(3)},
                                                      {Rat(2), Rat(4), Rat(6)}});
    CHECK_THROWS_AS(build_L(4, dep), NilindependenceViolation);

    // a slot needs its resonance in every matrix, not just its own
    CharMatrixSpec nc = CharMatrixSpec::diagonal(4, {{Rat(0), Rat(1), Rat(0)},
                                                     {Rat(1), Rat(1), Rat(1)}});
    // (23)->(14): a23 = a14 holds (1 = 1) but b23 = 1 differs from b14 = 3
    nc.lam_mid[0][0] = 1;
    CHECK_THROWS_AS(build_L(4, nc), CanonicalFormViolation);
}

TEST_CASE("structure matrices") {
    const PolyMatrix s2 = structure_matrix(build_T(2));
    CHECK(s2.rows() == 1);
    CHECK(s2.at(0, 0).is_zero());

    const LieAlgebra t3 = build_T(3);
    const PolyMatrix s3 = structure_matrix(t3);
    const Polynomial n13 = Polynomial::variable(t3.universe(), t3.universe().index_n(1, 3));
    CHECK(s3.at(0, 1) == n13);
    CHECK(s3.at(1, 0) == -n13);
    CHECK(s3.at(0, 2).is_zero());

    // the seven-dimensional solvable example, including the last column
    CharMatrixSpec spec = CharMatrixSpec::diagonal(4, {{Rat(2), Rat(3), Rat(5)}});
    const LieAlgebra l41 = build_L(4, spec);
    const Universe& u = l41.universe();
    const PolyMatrix s = structure_matrix(l41);
    auto nv = [&](std::uint32_t i, std::uint32_t k) { return Polynomial::variable(u, u.index_n(i, k)); };
    CHECK(s.is_antisymmetric());
    CHECK(s.at(0, 1) == nv(1, 3));
    CHECK(s.at(0, 4) == nv(1, 4));
    CHECK(s.at(1, 2) == nv(2, 4));
    CHECK(s.at(2, 3) == -nv(1, 4));
    CHECK(s.at(0, 6) == nv(1, 2) * Rat(-2));
    CHECK(s.at(1, 6) == nv(2, 3) * Rat(-3));
    CHECK(s.at(2, 6) == nv(3, 4) * Rat(-5));
    CHECK(s.at(3, 6) == nv(1, 3) * Rat(-5));  // a13 = 2 + 3
    CHECK(s.at(4, 6) == nv(2, 4) * Rat(-8));  // a24 = 3 + 5
    CHECK(s.at(5, 6) == nv(1, 4) * Rat(-10)); // a14 = 2 + 3 + 5
    CHECK(s.at(1, 5).is_zero());
    CHECK(s.at(3, 4).is_zero());
}

TEST_CASE("invariant counts across the families") {
    RankOptions ro;
    CHECK(invariant_count(build_T(4), ro) == 2);
    for (std::uint32_t M = 3; M <= 8; ++M)
        CHECK(invariant_count(build_T(M), ro) == M / 2);
    for (std::uint32_t M = 3; M <= 8; ++M)
        CHECK(invariant_count(build_L_full_rank(M), ro) == (M - 1) / 2);

    // special vs generic one-element member at M = 4
    CHECK(invariant_count(build_L(4, CharMatrixSpec::diagonal(4, {{Rat(1), Rat(0), Rat(-1)}})),
                          ro) == 3);
    CHECK(invariant_count(build_L(4, CharMatrixSpec::diagonal(4, {{Rat(1), Rat(2), Rat(3)}})),
                          ro) == 1);
    CHECK(invariant_count(build_L_full_rank(4), ro) == 1);
}

TEST_CASE("sampled rank never exceeds and matches the symbolic rank") {
    RankOptions numeric;
    numeric.confirm = RankOptions::Confirm::Off;
    RankOptions confirmed;
    confirmed.confirm = RankOptions::Confirm::On;
    for (std::uint32_t M = 3; M <= 7; ++M) {
        const LieAlgebra alg = build_T(M);
        CHECK(generic_rank(alg, numeric) == generic_rank(alg, confirmed));
    }
}

TEST_CASE("jacobi validation rejects inconsistent structure constants") {
    const Universe u(4, 0);
    BracketMap bad;
    // [a,b] = c together with [a,c] = a leaves [[c,a],b] = -c unbalanced
    const VarIdx a = u.index_n(1, 2), b = u.index_n(2, 3), c = u.index_n(1, 3);
    bad[{a, b}] = {{c, Rat(1)}};
    bad[{a, c}] = {{a, Rat(1)}};
    CHECK_THROWS_AS(LieAlgebra::from_brackets(u, bad, "bad"), JacobiViolation);
}

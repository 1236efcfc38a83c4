#pragma once

#include <optional>

#include "triag/lie_algebra.hpp"
#include "triag/text_io.hpp"

namespace triag {

// Determinant of the mu x mu upper-right corner of the variable matrix;
// homogeneous of degree mu. Defined for 1 <= mu <= floor(M/2).
Polynomial corner_det(const Universe& u, std::uint32_t mu);

// Bordered (mu+1) x (mu+1) determinant pairing the corner block with column
// rho + mu; homogeneous of degree mu + 1. Defined for
// 1 <= mu <= floor((M-1)/2) and 1 <= rho <= M - 2*mu.
Polynomial bordered_det(const Universe& u, std::uint32_t mu, std::uint32_t rho);

// The polynomial invariant basis Z_1 .. Z_[M/2] of the nilpotent algebra.
std::vector<InvariantExpr> theorem1_basis(std::uint32_t M);

// Combined corner-determinant operator: the corner determinant with one
// column of scalars replaced by a column of coadjoint operators, summed over
// the replaced column. All matrix-entry derivatives cancel, leaving a pure
// d/dx operator; a nonzero leftover raises ResidualNDerivative.
VectorField zhat_operator(const LieAlgebra& alg, std::uint32_t mu);

enum class Family {
    Theorem1,
    Lemma1Case1,
    Lemma1Case2,
    Lemma1Case3,
    Lemma2Case1,
    Lemma2Case2a,
    Lemma2Case2b,
    Lemma2Case3,
    Lemma3,
    Prop1,
    Prop2Case1,
    Prop2Case2,
};

std::string family_name(Family fam);
std::optional<Family> family_from_name(const std::string& name);

using Params = std::map<std::string, Rat>;

struct CatalogEntry {
    Family family;
    std::uint32_t M = 0;
    std::uint32_t f = 0;
    Params parameters;
    LieAlgebra algebra;
    std::vector<InvariantExpr> invariants;
    std::uint32_t expected_count = 0;
    std::string label;
};

// The M = 4 families with one non-nilpotent element or more. Missing
// parameters default to the canonical member; supplied parameters are
// checked against the family's existence conditions and ConditionViolated
// names the condition that fails.
CatalogEntry lemma_invariants(Family which, const Params& params = {});

// Invariant basis of the maximal extension L(M, M-1).
CatalogEntry prop1_invariants(std::uint32_t M);

// Invariant basis of a diagonal L(M, 1) member with the given superdiagonal
// a_{12}, a_{23}, ..., a_{(M-1)M}. Case selection follows the mirror-sum
// conditions a_{i(i+1)} + a_{(M-i)(M-i+1)} = 0; throws DegenerateExponent
// when a case-2 exponent ratio is undefined.
CatalogEntry prop2_invariants(std::uint32_t M, const std::vector<Rat>& superdiag);

struct GeneratorCheck {
    std::string generator;
    bool zero = false;
    std::string residual; // empty when zero
};

struct Certificate {
    std::string algebra;
    std::string invariant;
    std::vector<GeneratorCheck> per_generator;
    bool pass = false;
};

// Applies every coadjoint operator to the candidate and records the exact
// outcome per generator. Failure is a result, not an error.
Certificate verify_invariant(const LieAlgebra& alg, const InvariantExpr& e,
                             ExecMode exec = ExecMode::Serial);

struct JacobianOptions {
    std::uint32_t trials = 5;
    std::uint64_t seed = 0;
    std::uint32_t max_resamples = 50;
    ExecMode exec = ExecMode::Serial;
};

// Max rank of the exact gradient matrix over random rational points; equals
// the list length iff the invariants are functionally independent.
std::uint32_t jacobian_rank(const std::vector<InvariantExpr>& invariants,
                            const JacobianOptions& opts = {});

struct CofactorCheck {
    std::string op;
    std::uint32_t mu = 0;
    bool zero = false;
};

struct CofactorReport {
    std::uint32_t M = 0;
    std::vector<CofactorCheck> checks;
    bool pass = false;
};

// Mirrors the row/column-duplication argument: the reduced operator
// families acting on the remaining corner-block variables must annihilate
// every corner determinant exactly.
CofactorReport cofactor_annihilation_check(std::uint32_t M);

} // namespace triag

#pragma once

#include <algorithm>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "triag/matrix.hpp"
#include "triag/parallel.hpp"
#include "triag/vector_field.hpp"

namespace triag {

struct BracketTerm {
    std::uint32_t k;
    Rat c;
    friend bool operator==(const BracketTerm&, const BracketTerm&) = default;
};

using BracketMap = std::map<std::pair<std::uint32_t, std::uint32_t>, std::vector<BracketTerm>>;

// Canonical data of one solvable member: per non-nilpotent element an upper
// triangular characteristic matrix given by its free superdiagonal (the
// other diagonal entries follow from the sum rule) and the three admissible
// off-diagonal slots, plus the antisymmetric sigma constants pairing the
// non-nilpotent elements through the central basis element.
struct CharMatrixSpec {
    std::uint32_t M = 0;
    std::uint32_t f = 0;
    // free_diag[alpha][i-1] = a^alpha_{i,i+1} for i = 1..M-1
    std::vector<std::vector<Rat>> free_diag;
    // slot (1,2) -> (2,M); present for M >= 3
    std::vector<Rat> lam_top;
    // slot (j,j+1) -> (1,M) for j = 2..M-2; lam_mid[alpha][j-2]; present for M >= 4
    std::vector<std::vector<Rat>> lam_mid;
    // slot (M-1,M) -> (1,M-1); present for M >= 3
    std::vector<Rat> lam_bottom;
    // f x f, antisymmetric
    std::vector<std::vector<Rat>> sigma;

    static CharMatrixSpec diagonal(std::uint32_t M, std::vector<std::vector<Rat>> free_diag);

    // a^alpha_{ik} via the sum rule over the free superdiagonal.
    Rat diag_entry(std::uint32_t alpha, std::uint32_t i, std::uint32_t k) const;
    Rat sigma_entry(std::uint32_t alpha, std::uint32_t beta) const;
    bool all_diagonal() const;

    // Dense r x r characteristic matrix in the canonical variable order.
    std::vector<std::vector<Rat>> full_matrix(std::uint32_t alpha) const;

    // Shape, resonance, sigma and commutation constraints; throws
    // CanonicalFormViolation / NilindependenceViolation with the offending
    // constraint and indices spelled out.
    void validate() const;
};

class LieAlgebra {
public:
    const Universe& universe() const { return u_; }
    std::uint32_t M() const { return u_.M; }
    std::uint32_t f() const { return u_.f; }
    std::uint32_t dim() const { return u_.size(); }
    const std::string& name() const { return name_; }
    void set_name(std::string n) { name_ = std::move(n); }

    const BracketMap& brackets() const { return brackets_; }
    const std::optional<CharMatrixSpec>& char_spec() const { return char_spec_; }

    // [basis_i, basis_j] for any index order.
    std::vector<BracketTerm> bracket(std::uint32_t i, std::uint32_t j) const;

    static LieAlgebra from_brackets(Universe u, BracketMap brackets, std::string name,
                                    std::optional<CharMatrixSpec> spec = std::nullopt);

private:
    LieAlgebra(Universe u, BracketMap b, std::string name, std::optional<CharMatrixSpec> spec)
        : u_(u), brackets_(std::move(b)), name_(std::move(name)), char_spec_(std::move(spec)) {
        for (auto& [ij, terms] : brackets_)
            std::sort(terms.begin(), terms.end(),
                      [](const BracketTerm& x, const BracketTerm& y) { return x.k < y.k; });
    }

    void validate_jacobi() const;

    Universe u_;
    BracketMap brackets_;
    std::string name_;
    std::optional<CharMatrixSpec> char_spec_;

    friend LieAlgebra build_T(std::uint32_t M);
    friend LieAlgebra build_L(std::uint32_t M, CharMatrixSpec spec);
};

// Nilpotent algebra of the strictly upper triangular M x M matrices.
LieAlgebra build_T(std::uint32_t M);

// Solvable extension with f linearly nilindependent elements acting through
// the characteristic matrices of `spec`.
LieAlgebra build_L(std::uint32_t M, CharMatrixSpec spec);

// The maximal extension (f = M-1) with its explicit diagonal matrices.
LieAlgebra build_L_full_rank(std::uint32_t M);

// True iff no nontrivial linear combination of the given upper triangular
// matrices is nilpotent, i.e. the diagonals are linearly independent.
bool nilindependent(const std::vector<std::vector<std::vector<Rat>>>& mats);

// One first-order operator per basis element, built from the structure
// constants and cross-checked against the closed triangular forms.
std::vector<VectorField> coadjoint_fields(const LieAlgebra& alg);

// Antisymmetric matrix of brackets rewritten in the dual variables.
PolyMatrix structure_matrix(const LieAlgebra& alg);

struct RankOptions {
    std::uint32_t trials = 5;
    std::uint64_t seed = 0;
    ExecMode exec = ExecMode::Serial;
    enum class Confirm { Auto, On, Off } confirm = Confirm::Auto;
    // Auto confirms symbolically up to this dimension.
    std::uint32_t confirm_dim_limit = 36;
};

// Max rank of the structure matrix over `trials` exact evaluations at random
// rational points (coordinates in [-10^6, 10^6]); parity is asserted each
// trial and the result is confirmed by fraction-free symbolic elimination
// when enabled.
std::uint32_t generic_rank(const LieAlgebra& alg, const RankOptions& opts = {});

// dim - generic rank.
std::uint32_t invariant_count(const LieAlgebra& alg, const RankOptions& opts = {});

} // namespace triag

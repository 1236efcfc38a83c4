#pragma once

#include <vector>

#include "triag/polynomial.hpp"

namespace triag {

// Dense matrix of polynomials over one universe.
class PolyMatrix {
public:
    PolyMatrix(Universe u, std::size_t rows, std::size_t cols)
        : u_(u), rows_(rows), cols_(cols), data_(rows * cols, Polynomial(u)) {}

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    const Universe& universe() const { return u_; }

    Polynomial& at(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
    const Polynomial& at(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

    bool is_antisymmetric() const;

private:
    Universe u_;
    std::size_t rows_, cols_;
    std::vector<Polynomial> data_;
};

// Exact determinant: cofactor expansion for dimension <= 4, fraction-free
// Bareiss elimination above (intermediate entries stay polynomial; every
// division is exact).
Polynomial determinant(const PolyMatrix& m);

// Rank over the fraction field Q(vars) by fraction-free elimination with
// full pivoting (pivot chosen to keep entries sparse).
std::size_t symbolic_rank(const PolyMatrix& m);

// Exact rank of a rational matrix by Gaussian elimination.
std::size_t rational_rank(std::vector<std::vector<Rat>> m);

} // namespace triag

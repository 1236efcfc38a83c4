#include "triag/matrix.hpp"

#include <algorithm>

namespace triag {

bool PolyMatrix::is_antisymmetric() const {
    if (rows_ != cols_) return false;
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = i; j < cols_; ++j)
            if (!(at(i, j) + at(j, i)).is_zero()) return false;
    return true;
}

namespace {

Polynomial det_cofactor(const PolyMatrix& m, std::vector<std::size_t> rows,
                        std::vector<std::size_t> cols) {
    const std::size_t n = rows.size();
    if (n == 1) return m.at(rows[0], cols[0]);
    Polynomial acc(m.universe());
    for (std::size_t j = 0; j < n; ++j) {
        const Polynomial& e = m.at(rows[0], cols[j]);
        if (e.is_zero()) continue;
        std::vector<std::size_t> sub_rows(rows.begin() + 1, rows.end());
        std::vector<std::size_t> sub_cols;
        for (std::size_t t = 0; t < n; ++t)
            if (t != j) sub_cols.push_back(cols[t]);
        Polynomial minor = det_cofactor(m, std::move(sub_rows), std::move(sub_cols));
        if (j % 2 == 0)
            acc += e * minor;
        else
            acc -= e * minor;
    }
    return acc;
}

Polynomial det_bareiss(const PolyMatrix& m) {
    const std::size_t n = m.rows();
    const Universe u = m.universe();
    std::vector<std::vector<Polynomial>> a(n, std::vector<Polynomial>(n, Polynomial(u)));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) a[i][j] = m.at(i, j);

    Polynomial prev = Polynomial::constant(u, 1);
    int sign = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        // row pivoting only; prefer the sparsest pivot
        std::size_t best = n;
        for (std::size_t i = k; i < n; ++i) {
            if (a[i][k].is_zero()) continue;
            if (best == n || a[i][k].term_count() < a[best][k].term_count()) best = i;
        }
        if (best == n) return Polynomial(u);
        if (best != k) {
            std::swap(a[best], a[k]);
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < n; ++j) {
                Polynomial num = a[i][j] * a[k][k] - a[i][k] * a[k][j];
                if (num.is_zero()) {
                    a[i][j] = Polynomial(u);
                    continue;
                }
                auto q = num.try_divide(prev);
                if (!q) throw Error("internal: Bareiss division not exact");
                a[i][j] = std::move(*q);
            }
            a[i][k] = Polynomial(u);
        }
        prev = a[k][k];
    }
    return sign > 0 ? a[n - 1][n - 1] : -a[n - 1][n - 1];
}

// Fraction-free elimination of an antisymmetric matrix by 2x2 pivot blocks;
// intermediate entries are Pfaffian minors, so they stay at half the degree
// of the corresponding Bareiss entries. Divisions by the previous pivot are
// exact (Sylvester-style identity for Pfaffians; cross-checked against the
// general elimination in the test suite).
std::size_t pfaffian_rank(const PolyMatrix& m) {
    const std::size_t n = m.rows();
    const Universe u = m.universe();
    std::vector<std::vector<Polynomial>> a(n, std::vector<Polynomial>(n, Polynomial(u)));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) a[i][j] = m.at(i, j);

    std::vector<std::size_t> active(n);
    for (std::size_t i = 0; i < n; ++i) active[i] = i;

    Polynomial prev = Polynomial::constant(u, 1);
    std::size_t rank = 0;
    while (active.size() >= 2) {
        std::vector<std::size_t> nnz(n, 0);
        for (std::size_t x : active)
            for (std::size_t y : active)
                if (!a[x][y].is_zero()) ++nnz[x];
        std::size_t pi = n, pj = n;
        std::size_t best_fill = SIZE_MAX, best_terms = SIZE_MAX;
        for (std::size_t ii = 0; ii < active.size(); ++ii)
            for (std::size_t jj = ii + 1; jj < active.size(); ++jj) {
                const std::size_t x = active[ii], y = active[jj];
                if (a[x][y].is_zero()) continue;
                const std::size_t fill = (nnz[x] - 1) * (nnz[y] - 1);
                const std::size_t t = a[x][y].term_count();
                if (std::tuple(fill, t) < std::tuple(best_fill, best_terms)) {
                    best_fill = fill;
                    best_terms = t;
                    pi = x;
                    pj = y;
                }
            }
        if (pi == n) break;
        rank += 2;

        std::vector<std::size_t> rest;
        for (std::size_t x : active)
            if (x != pi && x != pj) rest.push_back(x);
        const Polynomial& s = a[pi][pj];
        for (std::size_t xi = 0; xi < rest.size(); ++xi) {
            for (std::size_t yi = xi + 1; yi < rest.size(); ++yi) {
                const std::size_t x = rest[xi], y = rest[yi];
                Polynomial num = s * a[x][y] + a[x][pi] * a[pj][y] - a[x][pj] * a[pi][y];
                if (num.is_zero()) {
                    a[x][y] = Polynomial(u);
                    a[y][x] = Polynomial(u);
                    continue;
                }
                auto q = num.try_divide(prev);
                if (!q) throw Error("internal: Pfaffian elimination division not exact");
                a[x][y] = std::move(*q);
                a[y][x] = -a[x][y];
            }
        }
        prev = s;
        active = std::move(rest);
    }
    return rank;
}

} // namespace

Polynomial determinant(const PolyMatrix& m) {
    if (m.rows() != m.cols()) throw ShapeMismatch("determinant of non-square matrix");
    if (m.rows() == 0) return Polynomial::constant(m.universe(), 1);
    if (m.rows() <= 4) {
        std::vector<std::size_t> idx(m.rows());
        for (std::size_t i = 0; i < idx.size(); ++i) idx[i] = i;
        return det_cofactor(m, idx, idx);
    }
    return det_bareiss(m);
}

std::size_t symbolic_rank(const PolyMatrix& m) {
    if (m.rows() == m.cols() && m.is_antisymmetric()) return pfaffian_rank(m);
    const std::size_t rows = m.rows(), cols = m.cols();
    const Universe u = m.universe();
    std::vector<std::vector<Polynomial>> a(rows, std::vector<Polynomial>(cols, Polynomial(u)));
    for (std::size_t i = 0; i < rows; ++i)
        for (std::size_t j = 0; j < cols; ++j) a[i][j] = m.at(i, j);

    Polynomial prev = Polynomial::constant(u, 1);
    const std::size_t steps = std::min(rows, cols);
    std::size_t rank = 0;
    for (std::size_t k = 0; k < steps; ++k) {
        // Markowitz pivoting: minimize expected fill, then term count, then
        // degree; keeps the elimination of these incidence-like matrices
        // from swelling.
        std::vector<std::size_t> row_nnz(rows, 0), col_nnz(cols, 0);
        for (std::size_t i = k; i < rows; ++i)
            for (std::size_t j = k; j < cols; ++j)
                if (!a[i][j].is_zero()) ++row_nnz[i], ++col_nnz[j];
        std::size_t pi = rows, pj = cols;
        std::size_t best_fill = SIZE_MAX, best_terms = SIZE_MAX;
        std::uint32_t best_deg = UINT32_MAX;
        for (std::size_t i = k; i < rows; ++i)
            for (std::size_t j = k; j < cols; ++j) {
                const Polynomial& e = a[i][j];
                if (e.is_zero()) continue;
                const std::size_t fill = (row_nnz[i] - 1) * (col_nnz[j] - 1);
                const std::size_t t = e.term_count();
                const std::uint32_t d = e.total_degree();
                if (std::tuple(fill, t, d) < std::tuple(best_fill, best_terms, best_deg)) {
                    best_fill = fill;
                    best_terms = t;
                    best_deg = d;
                    pi = i;
                    pj = j;
                }
            }
        if (pi == rows) break;
        ++rank;
        if (pi != k) std::swap(a[pi], a[k]);
        if (pj != k)
            for (std::size_t i = 0; i < rows; ++i) std::swap(a[i][pj], a[i][k]);
        if (k + 1 == steps) break;
        for (std::size_t i = k + 1; i < rows; ++i) {
            for (std::size_t j = k + 1; j < cols; ++j) {
                Polynomial num = a[i][j] * a[k][k] - a[i][k] * a[k][j];
                if (num.is_zero()) {
                    a[i][j] = Polynomial(u);
                    continue;
                }
                auto q = num.try_divide(prev);
                if (!q) throw Error("internal: Bareiss division not exact");
                a[i][j] = std::move(*q);
            }
            a[i][k] = Polynomial(u);
        }
        prev = a[k][k];
    }
    return rank;
}

std::size_t rational_rank(std::vector<std::vector<Rat>> m) {
    if (m.empty()) return 0;
    const std::size_t rows = m.size(), cols = m[0].size();
    std::size_t rank = 0;
    std::size_t row = 0;
    for (std::size_t col = 0; col < cols && row < rows; ++col) {
        std::size_t piv = rows;
        for (std::size_t i = row; i < rows; ++i)
            if (m[i][col] != 0) {
                piv = i;
                break;
            }
        if (piv == rows) continue;
        std::swap(m[piv], m[row]);
        for (std::size_t i = row + 1; i < rows; ++i) {
            if (m[i][col] == 0) continue;
            const Rat factor = m[i][col] / m[row][col];
            for (std::size_t j = col; j < cols; ++j) m[i][j] -= factor * m[row][j];
        }
        ++row;
        ++rank;
    }
    return rank;
}

} // namespace triag

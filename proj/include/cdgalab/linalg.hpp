// Exact dense linear algebra over Scalar (Q or Q(zeta_n)).
#pragma once

#include <optional>
#include <vector>

#include "cdgalab/scalar.hpp"

namespace cdgalab {

using Vec = std::vector<Scalar>;

/// Dense row-major matrix. All reductions use least-index pivoting so
/// bases and solutions are reproducible.
struct Matrix {
    std::vector<Vec> rows;
    size_t cols = 0;

    Matrix() = default;
    Matrix(size_t r, size_t c) : rows(r, Vec(c)), cols(c) {}

    size_t row_count() const { return rows.size(); }
    size_t col_count() const { return cols; }

    Scalar& at(size_t i, size_t j) { return rows[i][j]; }
    const Scalar& at(size_t i, size_t j) const { return rows[i][j]; }

    Vec apply(const Vec& x) const;  // matrix * column vector
    Matrix transposed() const;
};

/// Reduced row echelon form in place; returns pivot column per nonzero row.
std::vector<size_t> rref(Matrix& m);

size_t rank(Matrix m);

/// Kernel of x -> A x, one basis vector per free column, free variable set
/// to 1 in increasing column order.
std::vector<Vec> kernel_basis(const Matrix& a);

/// Least-index particular solution of A x = b (free variables zero), or
/// nullopt when inconsistent.
std::optional<Vec> solve(const Matrix& a, const Vec& b);

/// Row space held in reduced echelon form; supports membership reduction.
class RowSpace {
public:
    /// Adds a vector; returns true if it enlarged the space.
    bool insert(Vec v);

    /// Reduces v modulo the space in place; afterwards v has zeros at all
    /// pivot positions. Returns the coefficients used per stored row.
    Vec reduce(Vec& v) const;

    bool contains(Vec v) const;

    size_t dim() const { return rows_.size(); }
    const std::vector<Vec>& basis() const { return rows_; }
    const std::vector<size_t>& pivots() const { return pivots_; }

private:
    std::vector<Vec> rows_;      // echelon rows, pivot entries 1
    std::vector<size_t> pivots_;  // strictly increasing? no: insertion order; see cpp
};

Vec scaled(Vec v, const Scalar& s);
Vec& add_scaled(Vec& v, const Vec& w, const Scalar& s);
bool is_zero_vec(const Vec& v);

}  // namespace cdgalab

#include "cdgalab/linalg.hpp"

#include <algorithm>

namespace cdgalab {

Vec Matrix::apply(const Vec& x) const {
    if (x.size() != col_count()) throw std::invalid_argument("Matrix::apply: size mismatch");
    Vec out(row_count());
    for (size_t i = 0; i < row_count(); ++i) {
        Scalar acc;
        for (size_t j = 0; j < col_count(); ++j) {
            if (!rows[i][j].is_zero() && !x[j].is_zero()) acc += rows[i][j] * x[j];
        }
        out[i] = acc;
    }
    return out;
}

Matrix Matrix::transposed() const {
    Matrix t(col_count(), row_count());
    for (size_t i = 0; i < row_count(); ++i)
        for (size_t j = 0; j < col_count(); ++j) t.rows[j][i] = rows[i][j];
    return t;
}

std::vector<size_t> rref(Matrix& m) {
    std::vector<size_t> pivots;
    size_t r = 0;
    for (size_t c = 0; c < m.col_count() && r < m.row_count(); ++c) {
        size_t p = r;
        while (p < m.row_count() && m.rows[p][c].is_zero()) ++p;
        if (p == m.row_count()) continue;
        std::swap(m.rows[p], m.rows[r]);
        Scalar inv = m.rows[r][c].inverse();
        for (size_t j = c; j < m.col_count(); ++j) m.rows[r][j] = m.rows[r][j] * inv;
        for (size_t i = 0; i < m.row_count(); ++i) {
            if (i == r || m.rows[i][c].is_zero()) continue;
            Scalar f = m.rows[i][c];
            for (size_t j = c; j < m.col_count(); ++j)
                m.rows[i][j] = m.rows[i][j] - f * m.rows[r][j];
        }
        pivots.push_back(c);
        ++r;
    }
    return pivots;
}

size_t rank(Matrix m) { return rref(m).size(); }

std::vector<Vec> kernel_basis(const Matrix& a) {
    Matrix m = a;
    size_t n = a.col_count();
    std::vector<size_t> pivots = rref(m);
    std::vector<bool> is_pivot(n, false);
    for (size_t c : pivots) is_pivot[c] = true;
    std::vector<Vec> out;
    for (size_t f = 0; f < n; ++f) {
        if (is_pivot[f]) continue;
        Vec v(n);
        v[f] = Scalar(1);
        for (size_t i = 0; i < pivots.size(); ++i) v[pivots[i]] = -m.rows[i][f];
        out.push_back(std::move(v));
    }
    return out;
}

std::optional<Vec> solve(const Matrix& a, const Vec& b) {
    if (b.size() != a.row_count()) throw std::invalid_argument("solve: size mismatch");
    Matrix m = a;
    size_t n = a.col_count();
    for (size_t i = 0; i < m.row_count(); ++i) m.rows[i].push_back(b[i]);
    m.cols = n + 1;
    std::vector<size_t> pivots = rref(m);
    Vec x(n);
    for (size_t i = 0; i < pivots.size(); ++i) {
        if (pivots[i] == n) return std::nullopt;  // pivot in augmented column
        x[pivots[i]] = m.rows[i][n];
    }
    return x;
}

bool RowSpace::insert(Vec v) {
    reduce(v);
    size_t p = 0;
    while (p < v.size() && v[p].is_zero()) ++p;
    if (p == v.size()) return false;
    Scalar inv = v[p].inverse();
    for (auto& e : v) e = e * inv;
    // back-substitute into existing rows to stay fully reduced
    for (size_t i = 0; i < rows_.size(); ++i) {
        if (!rows_[i][p].is_zero()) add_scaled(rows_[i], v, -rows_[i][p]);
    }
    // keep rows sorted by pivot for determinism
    size_t pos = 0;
    while (pos < pivots_.size() && pivots_[pos] < p) ++pos;
    rows_.insert(rows_.begin() + static_cast<long>(pos), std::move(v));
    pivots_.insert(pivots_.begin() + static_cast<long>(pos), p);
    return true;
}

Vec RowSpace::reduce(Vec& v) const {
    Vec coeffs(rows_.size());
    for (size_t i = 0; i < rows_.size(); ++i) {
        const Scalar& c = v[pivots_[i]];
        if (c.is_zero()) continue;
        coeffs[i] = c;
        add_scaled(v, rows_[i], -c);
    }
    return coeffs;
}

bool RowSpace::contains(Vec v) const {
    reduce(v);
    return is_zero_vec(v);
}

Vec scaled(Vec v, const Scalar& s) {
    for (auto& e : v) e = e * s;
    return v;
}

Vec& add_scaled(Vec& v, const Vec& w, const Scalar& s) {
    if (v.size() != w.size()) throw std::invalid_argument("add_scaled: size mismatch");
    for (size_t i = 0; i < v.size(); ++i) {
        if (!w[i].is_zero()) v[i] += w[i] * s;
    }
    return v;
}

bool is_zero_vec(const Vec& v) {
    return std::all_of(v.begin(), v.end(), [](const Scalar& s) { return s.is_zero(); });
}

}  // namespace cdgalab

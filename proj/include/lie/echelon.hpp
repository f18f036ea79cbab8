#pragma once

#include "lie/matrix.hpp"

#include <algorithm>
#include <optional>
#include <utility>
#include <vector>

namespace lie {

/// Sparse row: (column, value) pairs with strictly increasing columns and no zeros.
using SparseRow = std::vector<std::pair<std::size_t, Scalar>>;

inline SparseRow to_sparse(const Vector& v) {
    SparseRow out;
    for (std::size_t i = 0; i < v.size(); ++i)
        if (sgn(v[i]) != 0) out.emplace_back(i, v[i]);
    return out;
}

inline Vector to_dense(const SparseRow& r, std::size_t n) {
    Vector out(n);
    for (const auto& [c, x] : r) out[c] = x;
    return out;
}

/// Incremental Gauss-Jordan elimination over sparse rows.
///
/// Rows are kept fully reduced with unit pivots, so at any point the stored
/// rows sorted by pivot column form the unique RREF of everything added.
class Echelon {
public:
    explicit Echelon(std::size_t cols) : cols_(cols), pivot_row_(cols, npos), scratch_(cols) {}

    std::size_t cols() const noexcept { return cols_; }
    std::size_t rank() const noexcept { return rows_.size(); }

    /// Adds a row; returns true if it was independent of the rows seen so far.
    bool add(const SparseRow& row) {
        std::vector<std::size_t> touched;
        touched.reserve(row.size() * 2);
        for (const auto& [c, x] : row) {
            if (c >= cols_) throw DimensionMismatch("Echelon::add: column out of range");
            scratch_[c] = x;
            touched.push_back(c);
        }
        for (const auto& [c, x] : row) {
            const std::size_t p = pivot_row_[c];
            if (p == npos) continue;
            Scalar factor = scratch_[c];
            if (sgn(factor) == 0) continue;
            for (const auto& [pc, pv] : rows_[p].second) {
                if (sgn(scratch_[pc]) == 0) touched.push_back(pc);
                scratch_[pc] -= factor * pv;
            }
        }
        std::sort(touched.begin(), touched.end());
        touched.erase(std::unique(touched.begin(), touched.end()), touched.end());
        SparseRow reduced;
        for (std::size_t c : touched) {
            if (sgn(scratch_[c]) != 0) reduced.emplace_back(c, scratch_[c]);
            scratch_[c] = 0;
        }
        if (reduced.empty()) return false;

        const std::size_t pivot = reduced.front().first;
        const Scalar lead = reduced.front().second;
        if (lead != 1)
            for (auto& [c, x] : reduced) x /= lead;

        for (auto& [pc, prow] : rows_) {
            auto it = std::lower_bound(prow.begin(), prow.end(), pivot,
                                       [](const auto& e, std::size_t c) { return e.first < c; });
            if (it == prow.end() || it->first != pivot) continue;
            const Scalar factor = it->second;
            prow = axpy_sparse(prow, -factor, reduced);
        }
        pivot_row_[pivot] = rows_.size();
        rows_.emplace_back(pivot, std::move(reduced));
        return true;
    }

    bool add(const Vector& row) { return add(to_sparse(row)); }

    /// Reduces a row against the stored basis without storing it.
    SparseRow reduce(const SparseRow& row) const {
        Vector dense = to_dense(row, cols_);
        for (const auto& [c, x] : row) {
            const std::size_t p = pivot_row_[c];
            if (p == npos || sgn(dense[c]) == 0) continue;
            const Scalar factor = dense[c];
            for (const auto& [pc, pv] : rows_[p].second) dense[pc] -= factor * pv;
        }
        return to_sparse(dense);
    }

    bool contains(const Vector& v) const { return reduce(to_sparse(v)).empty(); }

    /// Pivot columns in increasing order.
    std::vector<std::size_t> pivots() const {
        std::vector<std::size_t> out;
        out.reserve(rows_.size());
        for (const auto& r : rows_) out.push_back(r.first);
        std::sort(out.begin(), out.end());
        return out;
    }

    /// Stored rows sorted by pivot column (the RREF, zero rows dropped).
    std::vector<SparseRow> sorted_rows() const {
        std::vector<std::pair<std::size_t, const SparseRow*>> order;
        order.reserve(rows_.size());
        for (const auto& r : rows_) order.emplace_back(r.first, &r.second);
        std::sort(order.begin(), order.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
        std::vector<SparseRow> out;
        out.reserve(order.size());
        for (const auto& [p, row] : order) out.push_back(*row);
        return out;
    }

    Matrix rref_matrix() const {
        const auto rows = sorted_rows();
        Matrix m(rows.size(), cols_);
        for (std::size_t r = 0; r < rows.size(); ++r)
            for (const auto& [c, x] : rows[r]) m(r, c) = x;
        return m;
    }

    /// Basis of {v : row . v = 0 for every stored row}, one vector per free column.
    std::vector<Vector> kernel_basis() const {
        std::vector<bool> is_pivot(cols_, false);
        for (const auto& r : rows_) is_pivot[r.first] = true;
        std::vector<Vector> out;
        for (std::size_t f = 0; f < cols_; ++f) {
            if (is_pivot[f]) continue;
            Vector v(cols_);
            v[f] = 1;
            for (const auto& [p, row] : rows_) {
                auto it = std::lower_bound(row.begin(), row.end(), f,
                                           [](const auto& e, std::size_t c) { return e.first < c; });
                if (it != row.end() && it->first == f) v[p] = -it->second;
            }
            out.push_back(std::move(v));
        }
        return out;
    }

private:
    static constexpr std::size_t npos = static_cast<std::size_t>(-1);

    static SparseRow axpy_sparse(const SparseRow& y, const Scalar& a, const SparseRow& x) {
        SparseRow out;
        out.reserve(y.size() + x.size());
        std::size_t i = 0, j = 0;
        while (i < y.size() || j < x.size()) {
            if (j == x.size() || (i < y.size() && y[i].first < x[j].first)) {
                out.push_back(y[i++]);
            } else if (i == y.size() || x[j].first < y[i].first) {
                out.emplace_back(x[j].first, a * x[j].second);
                ++j;
            } else {
                Scalar s = y[i].second + a * x[j].second;
                if (sgn(s) != 0) out.emplace_back(y[i].first, std::move(s));
                ++i;
                ++j;
            }
        }
        return out;
    }

    std::size_t cols_;
    std::vector<std::pair<std::size_t, SparseRow>> rows_;
    std::vector<std::size_t> pivot_row_;
    Vector scratch_;
};

struct RrefResult {
    Matrix reduced;  ///< same shape as the input; zero rows at the bottom
    std::vector<std::size_t> pivots;
};

/// Reduced row echelon form by fractional Gauss-Jordan elimination.
inline RrefResult rref(const Matrix& m) {
    Echelon e(m.cols());
    for (std::size_t r = 0; r < m.rows(); ++r) e.add(m.row(r));
    RrefResult out{Matrix(m.rows(), m.cols()), e.pivots()};
    const auto rows = e.sorted_rows();
    for (std::size_t r = 0; r < rows.size(); ++r)
        for (const auto& [c, x] : rows[r]) out.reduced(r, c) = x;
    return out;
}

inline std::size_t rank(const Matrix& m) {
    Echelon e(m.cols());
    for (std::size_t r = 0; r < m.rows(); ++r) e.add(m.row(r));
    return e.rank();
}

/// Rank by fraction-free (Bareiss) elimination on the integer matrix obtained
/// by clearing each row's denominators. Shares nothing with Echelon.
inline std::size_t bareiss_rank(const Matrix& m) {
    const std::size_t rows = m.rows(), cols = m.cols();
    std::vector<std::vector<Integer>> a(rows, std::vector<Integer>(cols));
    for (std::size_t r = 0; r < rows; ++r) {
        Integer l = 1;
        for (std::size_t c = 0; c < cols; ++c) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), m(r, c).get_den_mpz_t());
        for (std::size_t c = 0; c < cols; ++c) a[r][c] = m(r, c).get_num() * (l / m(r, c).get_den());
    }
    Integer prev = 1;
    std::size_t rank = 0;
    for (std::size_t c = 0; c < cols && rank < rows; ++c) {
        std::size_t p = rank;
        while (p < rows && a[p][c] == 0) ++p;
        if (p == rows) continue;
        std::swap(a[p], a[rank]);
        for (std::size_t i = rank + 1; i < rows; ++i) {
            for (std::size_t j = c + 1; j < cols; ++j) {
                a[i][j] = a[i][j] * a[rank][c] - a[i][c] * a[rank][j];
                mpz_divexact(a[i][j].get_mpz_t(), a[i][j].get_mpz_t(), prev.get_mpz_t());
            }
            a[i][c] = 0;
        }
        prev = a[rank][c];
        ++rank;
    }
    return rank;
}

/// Some x with a x = b, or nullopt. Free variables are set to zero.
inline std::optional<Vector> solve(const Matrix& a, const Vector& b) {
    if (a.rows() != b.size()) throw DimensionMismatch("solve: right-hand side length differs from row count");
    const std::size_t n = a.cols();
    Echelon e(n + 1);
    for (std::size_t r = 0; r < a.rows(); ++r) {
        SparseRow row;
        for (std::size_t c = 0; c < n; ++c)
            if (sgn(a(r, c)) != 0) row.emplace_back(c, a(r, c));
        if (sgn(b[r]) != 0) row.emplace_back(n, b[r]);
        e.add(row);
    }
    Vector x(n);
    for (const auto& row : e.sorted_rows()) {
        if (row.front().first == n) return std::nullopt;
        if (row.back().first == n) x[row.front().first] = row.back().second;
    }
    return x;
}

}  // namespace lie

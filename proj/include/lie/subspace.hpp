#pragma once

#include "lie/echelon.hpp"

#include <optional>
#include <vector>

namespace lie {

/// Subspace of Q^n stored as its canonical RREF row basis (no zero rows).
/// Equality of subspaces is equality of these bases.
class Subspace {
public:
    Subspace() = default;
    explicit Subspace(std::size_t ambient_dim) : ambient_(ambient_dim), basis_(0, ambient_dim) {}

    static Subspace full(std::size_t n) { return span(identity_rows(n), n); }
    static Subspace zero(std::size_t n) { return Subspace(n); }

    static Subspace span(const std::vector<Vector>& vectors, std::size_t ambient_dim) {
        Echelon e(ambient_dim);
        for (const auto& v : vectors) {
            if (v.size() != ambient_dim) throw DimensionMismatch("Subspace::span: vector length differs from ambient dim");
            e.add(v);
        }
        return from_echelon(e);
    }

    static Subspace from_echelon(const Echelon& e) {
        Subspace s(e.cols());
        s.basis_ = e.rref_matrix();
        s.pivots_ = e.pivots();
        return s;
    }

    /// {v : m v = 0}.
    static Subspace kernel(const Matrix& m) {
        Echelon e(m.cols());
        for (std::size_t r = 0; r < m.rows(); ++r) e.add(m.row(r));
        return span(e.kernel_basis(), m.cols());
    }

    std::size_t ambient_dim() const noexcept { return ambient_; }
    std::size_t dim() const noexcept { return basis_.rows(); }
    bool is_zero() const noexcept { return dim() == 0; }
    bool is_full() const noexcept { return dim() == ambient_; }
    const Matrix& basis() const noexcept { return basis_; }
    const std::vector<std::size_t>& pivots() const noexcept { return pivots_; }
    Vector basis_vector(std::size_t i) const { return basis_.row(i); }

    std::vector<Vector> basis_vectors() const {
        std::vector<Vector> out;
        out.reserve(dim());
        for (std::size_t i = 0; i < dim(); ++i) out.push_back(basis_.row(i));
        return out;
    }

    /// Coordinates of v in the canonical basis, or nullopt if v is not in the span.
    /// For an RREF basis the coordinates are the entries of v at the pivot columns.
    std::optional<Vector> coordinates(const Vector& v) const {
        if (v.size() != ambient_) throw DimensionMismatch("Subspace::coordinates: wrong vector length");
        Vector coords(dim());
        Vector residual = v;
        for (std::size_t i = 0; i < dim(); ++i) {
            coords[i] = v[pivots_[i]];
            if (sgn(coords[i]) == 0) continue;
            for (std::size_t c = 0; c < ambient_; ++c)
                if (sgn(basis_(i, c)) != 0) residual[c] -= coords[i] * basis_(i, c);
        }
        if (!lie::is_zero(residual)) return std::nullopt;
        return coords;
    }

    bool contains(const Vector& v) const { return coordinates(v).has_value(); }

    bool contains(const Subspace& other) const {
        check_ambient(other);
        for (std::size_t i = 0; i < other.dim(); ++i)
            if (!contains(other.basis_.row(i))) return false;
        return true;
    }

    Vector from_coordinates(const Vector& coords) const {
        if (coords.size() != dim()) throw DimensionMismatch("Subspace::from_coordinates: wrong coordinate count");
        Vector v(ambient_);
        for (std::size_t i = 0; i < dim(); ++i) {
            if (sgn(coords[i]) == 0) continue;
            for (std::size_t c = 0; c < ambient_; ++c)
                if (sgn(basis_(i, c)) != 0) v[c] += coords[i] * basis_(i, c);
        }
        return v;
    }

    /// Linear functionals vanishing on this subspace, as a canonical subspace of the dual.
    Subspace annihilator() const { return kernel(basis_.rows() == 0 ? Matrix(0, ambient_) : basis_); }

    Subspace sum(const Subspace& other) const {
        check_ambient(other);
        Echelon e(ambient_);
        for (std::size_t i = 0; i < dim(); ++i) e.add(basis_.row(i));
        for (std::size_t i = 0; i < other.dim(); ++i) e.add(other.basis_.row(i));
        return from_echelon(e);
    }

    Subspace intersection(const Subspace& other) const {
        check_ambient(other);
        const Subspace a = annihilator();
        const Subspace b = other.annihilator();
        Echelon e(ambient_);
        for (std::size_t i = 0; i < a.dim(); ++i) e.add(a.basis_.row(i));
        for (std::size_t i = 0; i < b.dim(); ++i) e.add(b.basis_.row(i));
        return span(e.kernel_basis(), ambient_);
    }

    friend bool operator==(const Subspace& a, const Subspace& b) {
        return a.ambient_ == b.ambient_ && a.basis_ == b.basis_;
    }

private:
    static std::vector<Vector> identity_rows(std::size_t n) {
        std::vector<Vector> rows;
        rows.reserve(n);
        for (std::size_t i = 0; i < n; ++i) rows.push_back(unit_vector(n, i));
        return rows;
    }

    void check_ambient(const Subspace& other) const {
        if (ambient_ != other.ambient_) throw DimensionMismatch("subspaces live in different ambient spaces");
    }

    std::size_t ambient_ = 0;
    Matrix basis_;
    std::vector<std::size_t> pivots_;
};

struct SubspaceComparison {
    bool equal;
    bool contains;  ///< a contains b
    Subspace sum;
    Subspace intersection;
};

inline SubspaceComparison subspace_ops(const Subspace& a, const Subspace& b) {
    if (a.ambient_dim() != b.ambient_dim()) throw DimensionMismatch("subspace_ops: ambient dimensions differ");
    return {a == b, a.contains(b), a.sum(b), a.intersection(b)};
}

inline Subspace nullspace(const Matrix& m) { return Subspace::kernel(m); }

}  // namespace lie

#pragma once

#include "lie/subspace.hpp"

#include <array>
#include <optional>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

namespace lie {

/// Coordinates of an element relative to its algebra's basis.
using Element = Vector;

/// Raw structure constants: brackets [e_i, e_j] for i < j only.
/// The lower triangle and the diagonal are implied by antisymmetry.
class StructureTable {
public:
    StructureTable() = default;
    explicit StructureTable(std::size_t dim) : StructureTable(default_labels(dim)) {}
    explicit StructureTable(std::vector<std::string> labels)
        : labels_(std::move(labels)), full_(labels_.size() * labels_.size()) {}

    static std::vector<std::string> default_labels(std::size_t dim) {
        std::vector<std::string> out;
        for (std::size_t i = 0; i < dim; ++i) out.push_back("e" + std::to_string(i + 1));
        return out;
    }

    std::size_t dim() const noexcept { return labels_.size(); }
    const std::vector<std::string>& labels() const noexcept { return labels_; }

    /// Sets [e_i, e_j]; i > j stores the negated value on (j, i).
    void set(std::size_t i, std::size_t j, SparseRow value) {
        check_index(i);
        check_index(j);
        if (i == j) {
            if (!value.empty()) throw PreconditionError("[e_i, e_i] must vanish");
            return;
        }
        if (i > j) {
            for (auto& [k, x] : value) x = -x;
            std::swap(i, j);
        }
        for (const auto& [k, x] : value) check_index(k);
        std::erase_if(value, [](const auto& e) { return sgn(e.second) == 0; });
        SparseRow negated = value;
        for (auto& [k, x] : negated) x = -x;
        full_[j * dim() + i] = std::move(negated);
        full_[i * dim() + j] = std::move(value);
    }

    void set(std::size_t i, std::size_t j, const Element& value) {
        if (value.size() != dim()) throw DimensionMismatch("bracket value has wrong length");
        set(i, j, to_sparse(value));
    }

    /// Stored value of [e_i, e_j] for i < j.
    const SparseRow& upper(std::size_t i, std::size_t j) const { return full_[i * dim() + j]; }

    /// [e_i, e_j] for any i, j, as sparse coordinates. The lower triangle is
    /// kept in sync with the upper one by set().
    const SparseRow& basis_bracket(std::size_t i, std::size_t j) const { return full_[i * dim() + j]; }

    friend bool operator==(const StructureTable& a, const StructureTable& b) {
        return a.labels_ == b.labels_ && a.full_ == b.full_;
    }

private:
    void check_index(std::size_t i) const {
        if (i >= dim()) throw DimensionMismatch("basis index " + std::to_string(i) + " out of range");
    }

    std::vector<std::string> labels_;
    std::vector<SparseRow> full_;
};

struct ValidationReport {
    bool antisymmetric = true;
    bool jacobi = true;
    /// First basis triple (i < j < k) with a nonzero cyclic sum.
    std::optional<std::array<std::size_t, 3>> jacobi_witness;
    Element jacobi_residual;

    bool ok() const noexcept { return antisymmetric && jacobi; }
};

namespace detail {

inline void add_scaled_basis_bracket(Element& acc, const StructureTable& t, const Scalar& a, std::size_t m,
                                     std::size_t k) {
    if (sgn(a) == 0) return;
    for (const auto& [c, x] : t.basis_bracket(m, k)) acc[c] += a * x;
}

/// [[e_i, e_j], e_k]
inline Element double_bracket(const StructureTable& t, std::size_t i, std::size_t j, std::size_t k) {
    Element out(t.dim());
    for (const auto& [m, x] : t.basis_bracket(i, j)) add_scaled_basis_bracket(out, t, x, m, k);
    return out;
}

}  // namespace detail

/// Checks antisymmetry normalization and the Jacobi identity on all basis triples.
inline ValidationReport validate(const StructureTable& t) {
    ValidationReport rep;
    const std::size_t n = t.dim();
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
            for (const auto& [k, x] : t.upper(i, j))
                if (k >= n || sgn(x) == 0) rep.antisymmetric = false;
    for (std::size_t i = 0; i < n && rep.jacobi; ++i)
        for (std::size_t j = i + 1; j < n && rep.jacobi; ++j)
            for (std::size_t k = j + 1; k < n; ++k) {
                Element s = detail::double_bracket(t, i, j, k);
                Element b = detail::double_bracket(t, j, k, i);
                Element c = detail::double_bracket(t, k, i, j);
                for (std::size_t m = 0; m < n; ++m) s[m] += b[m] + c[m];
                if (!is_zero(s)) {
                    rep.jacobi = false;
                    rep.jacobi_witness = std::array<std::size_t, 3>{i, j, k};
                    rep.jacobi_residual = std::move(s);
                    break;
                }
            }
    return rep;
}

class JacobiFailure : public Error {
public:
    JacobiFailure(const std::string& what, std::array<std::size_t, 3> triple) : Error(what), triple_(triple) {}
    std::array<std::size_t, 3> triple() const noexcept { return triple_; }

private:
    std::array<std::size_t, 3> triple_;
};

/// Raised when a span is not closed under the bracket.
class NotClosed : public Error {
public:
    NotClosed(const std::string& what, std::size_t a, std::size_t b) : Error(what), pair_{a, b} {}
    std::pair<std::size_t, std::size_t> witness() const noexcept { return pair_; }

private:
    std::pair<std::size_t, std::size_t> pair_;
};

/// A finite-dimensional Lie algebra over Q given by validated structure constants.
class LieAlgebra {
public:
    /// Throws JacobiFailure unless the table satisfies the Jacobi identity.
    explicit LieAlgebra(StructureTable table) : table_(std::move(table)) {
        const auto rep = lie::validate(table_);
        if (!rep.ok()) {
            const auto& w = *rep.jacobi_witness;
            const auto& l = table_.labels();
            throw JacobiFailure("Jacobi identity fails on basis triple (" + std::to_string(w[0]) + ", " +
                                    std::to_string(w[1]) + ", " + std::to_string(w[2]) + ") = (" + l[w[0]] + ", " +
                                    l[w[1]] + ", " + l[w[2]] + ")",
                                w);
        }
    }

    std::size_t dim() const noexcept { return table_.dim(); }
    const std::vector<std::string>& labels() const noexcept { return table_.labels(); }
    const StructureTable& table() const noexcept { return table_; }

    const SparseRow& basis_bracket(std::size_t i, std::size_t j) const { return table_.basis_bracket(i, j); }

    Element basis_element(std::size_t i) const { return unit_vector(dim(), i); }

    friend bool operator==(const LieAlgebra& a, const LieAlgebra& b) { return a.table_ == b.table_; }

private:
    StructureTable table_;
};

inline ValidationReport validate(const LieAlgebra& g) { return validate(g.table()); }

inline void check_element(const LieAlgebra& g, const Element& x) {
    if (x.size() != g.dim())
        throw DimensionMismatch("element of length " + std::to_string(x.size()) + " does not belong to a " +
                                std::to_string(g.dim()) + "-dimensional algebra");
}

inline Element bracket(const LieAlgebra& g, const Element& x, const Element& y) {
    check_element(g, x);
    check_element(g, y);
    Element out(g.dim());
    for (std::size_t i = 0; i < g.dim(); ++i) {
        if (sgn(x[i]) == 0) continue;
        for (std::size_t j = 0; j < g.dim(); ++j) {
            if (i == j || sgn(y[j]) == 0) continue;
            const Scalar xy = x[i] * y[j];
            for (const auto& [k, c] : g.basis_bracket(i, j)) out[k] += xy * c;
        }
    }
    return out;
}

/// Matrix of y -> [x, y].
inline Matrix ad_matrix(const LieAlgebra& g, const Element& x) {
    check_element(g, x);
    const std::size_t n = g.dim();
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) {
        if (sgn(x[i]) == 0) continue;
        for (std::size_t col = 0; col < n; ++col)
            for (const auto& [row, c] : g.basis_bracket(i, col)) m(row, col) += x[i] * c;
    }
    return m;
}

inline Matrix ad_basis(const LieAlgebra& g, std::size_t i) { return ad_matrix(g, g.basis_element(i)); }

/// C(g) = {x : [x, e_j] = 0 for all j}.
inline Subspace center(const LieAlgebra& g) {
    const std::size_t n = g.dim();
    Echelon e(n);
    // Row (j, k): sum_i c_{ij}^k x_i = 0
    std::vector<SparseRow> rows(n * n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            for (const auto& [k, c] : g.basis_bracket(i, j)) rows[j * n + k].emplace_back(i, c);
    for (const auto& r : rows)
        if (!r.empty()) e.add(r);
    return Subspace::span(e.kernel_basis(), n);
}

/// span{[a, b] : a in A, b in B}.
inline Subspace bracket_span(const LieAlgebra& g, const Subspace& a, const Subspace& b) {
    Echelon e(g.dim());
    const auto av = a.basis_vectors();
    const auto bv = b.basis_vectors();
    for (const auto& x : av)
        for (const auto& y : bv) e.add(bracket(g, x, y));
    return Subspace::from_echelon(e);
}

struct SeriesReport {
    std::vector<Subspace> derived;        ///< g, [g,g], ... down to the stable term
    std::vector<Subspace> lower_central;  ///< g, [g,g], [g,[g,g]], ... down to the stable term
    bool is_nilpotent = false;
    bool is_solvable = false;
};

inline SeriesReport series(const LieAlgebra& g) {
    SeriesReport rep;
    const Subspace full = Subspace::full(g.dim());
    rep.derived.push_back(full);
    while (true) {
        Subspace next = bracket_span(g, rep.derived.back(), rep.derived.back());
        if (next == rep.derived.back()) break;
        rep.derived.push_back(std::move(next));
    }
    rep.lower_central.push_back(full);
    while (true) {
        Subspace next = bracket_span(g, full, rep.lower_central.back());
        if (next == rep.lower_central.back()) break;
        rep.lower_central.push_back(std::move(next));
    }
    rep.is_solvable = rep.derived.back().is_zero();
    rep.is_nilpotent = rep.lower_central.back().is_zero();
    return rep;
}

/// Restriction of g to a bracket-closed span, in the span's canonical basis.
inline LieAlgebra subalgebra_structure(const LieAlgebra& g, const Subspace& span) {
    if (span.ambient_dim() != g.dim()) throw DimensionMismatch("subalgebra_structure: span has wrong ambient dim");
    const std::size_t m = span.dim();
    const auto basis = span.basis_vectors();
    std::vector<std::string> labels;
    for (std::size_t p = 0; p < m; ++p) {
        const bool unit = to_sparse(basis[p]).size() == 1;
        labels.push_back(unit ? g.labels()[span.pivots()[p]] : "v" + std::to_string(p + 1));
    }
    StructureTable t(std::move(labels));
    for (std::size_t p = 0; p < m; ++p)
        for (std::size_t q = p + 1; q < m; ++q) {
            const auto coords = span.coordinates(bracket(g, basis[p], basis[q]));
            if (!coords)
                throw NotClosed("span is not closed under the bracket: [v" + std::to_string(p + 1) + ", v" +
                                    std::to_string(q + 1) + "] escapes",
                                p, q);
            t.set(p, q, *coords);
        }
    return LieAlgebra(std::move(t));
}

}  // namespace lie

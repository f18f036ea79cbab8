#pragma once

#include "lie/derivations.hpp"

#include <charconv>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace lie {

inline LieAlgebra abelian(std::size_t n) { return LieAlgebra(StructureTable(n)); }

/// Two-dimensional nonabelian algebra, [x, y] = y.
inline LieAlgebra nonabelian2() {
    StructureTable t({"x", "y"});
    t.set(0, 1, SparseRow{{1, Scalar(1)}});
    return LieAlgebra(std::move(t));
}

/// Heisenberg algebra of dimension 2N+1: basis x1..xN, y1..yN, c with [x_i, y_j] = delta_ij c.
inline LieAlgebra heisenberg(std::size_t N) {
    if (N == 0) throw PreconditionError("heisenberg: N must be at least 1");
    std::vector<std::string> labels;
    for (std::size_t i = 1; i <= N; ++i) labels.push_back("x" + std::to_string(i));
    for (std::size_t i = 1; i <= N; ++i) labels.push_back("y" + std::to_string(i));
    labels.emplace_back("c");
    StructureTable t(std::move(labels));
    for (std::size_t i = 0; i < N; ++i) t.set(i, N + i, SparseRow{{2 * N, Scalar(1)}});
    return LieAlgebra(std::move(t));
}

/// g^{(+)n}: n slot copies of g with [a@i, b@j] = [a, b]@(i+j), zero when i + j > n.
struct GradedPower {
    LieAlgebra algebra;
    std::size_t base_dim;
    std::size_t slots;

    /// Basis index of base vector a in slot k (1-based slot).
    std::size_t index(std::size_t a, std::size_t slot) const { return (slot - 1) * base_dim + a; }
};

inline GradedPower graded_power(const LieAlgebra& g, std::size_t n) {
    if (n == 0) throw PreconditionError("graded_power: n must be at least 1");
    const std::size_t d = g.dim();
    std::vector<std::string> labels;
    for (std::size_t k = 1; k <= n; ++k)
        for (const auto& l : g.labels()) labels.push_back(l + "@" + std::to_string(k));
    StructureTable t(std::move(labels));
    for (std::size_t i = 1; i <= n; ++i)
        for (std::size_t j = i; j <= n; ++j) {
            if (i + j > n) continue;
            for (std::size_t a = 0; a < d; ++a)
                for (std::size_t b = 0; b < d; ++b) {
                    const std::size_t u = (i - 1) * d + a, v = (j - 1) * d + b;
                    if (u >= v) continue;
                    SparseRow value;
                    for (const auto& [c, x] : g.basis_bracket(a, b)) value.emplace_back((i + j - 1) * d + c, x);
                    t.set(u, v, std::move(value));
                }
        }
    return GradedPower{LieAlgebra(std::move(t)), d, n};
}

/// Derivation acting as multiplication by k on slot k.
inline Matrix grading_derivation(const GradedPower& gp) {
    Vector diag;
    for (std::size_t k = 1; k <= gp.slots; ++k)
        for (std::size_t a = 0; a < gp.base_dim; ++a) diag.emplace_back(static_cast<unsigned long>(k));
    return Matrix::diagonal(diag);
}

struct IndexRange {
    std::size_t begin;
    std::size_t end;
    std::size_t size() const noexcept { return end - begin; }
};

/// s x_phi g with basis order (s-part, g-part).
struct GraphEmbedding {
    LieAlgebra whole;
    IndexRange s_slot;
    IndexRange g_slot;
    DerHomomorphism phi;
};

/// [(s1,g1),(s2,g2)] = ([s1,s2], s1(g2) - s2(g1) + [g1,g2]).
inline GraphEmbedding semidirect(const LieAlgebra& s, const LieAlgebra& g, const DerHomomorphism& phi) {
    if (!(phi.source() == s) || !(phi.target() == g))
        throw PreconditionError("semidirect: homomorphism does not map the given s into Der(g)");
    const std::size_t m = s.dim(), n = g.dim();
    std::vector<std::string> labels = s.labels();
    labels.insert(labels.end(), g.labels().begin(), g.labels().end());
    StructureTable t(std::move(labels));
    for (std::size_t a = 0; a < m; ++a)
        for (std::size_t b = a + 1; b < m; ++b) t.set(a, b, s.basis_bracket(a, b));
    for (std::size_t a = 0; a < m; ++a)
        for (std::size_t j = 0; j < n; ++j) {
            SparseRow value;
            for (std::size_t r = 0; r < n; ++r)
                if (sgn(phi.images()[a](r, j)) != 0) value.emplace_back(m + r, phi.images()[a](r, j));
            t.set(a, m + j, std::move(value));
        }
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j) {
            SparseRow value;
            for (const auto& [k, x] : g.basis_bracket(i, j)) value.emplace_back(m + k, x);
            t.set(m + i, m + j, std::move(value));
        }
    return GraphEmbedding{LieAlgebra(std::move(t)), {0, m}, {m, m + n}, phi};
}

/// f(g) = Der(g) x_id g, from a precomputed derivation space.
inline GraphEmbedding full_graph(const DerivationSpace& ds) {
    return semidirect(ds.as_algebra, ds.base, DerHomomorphism::identity(ds));
}

inline GraphEmbedding full_graph(const LieAlgebra& g) { return full_graph(derivations(g)); }

/// f^1(g), ..., f^n(g).
inline std::vector<GraphEmbedding> full_graph_iter(const LieAlgebra& g, std::size_t n,
                                                   std::size_t dim_cap = kDefaultDimCap) {
    if (n == 0) throw PreconditionError("full_graph_iter: n must be at least 1");
    std::vector<GraphEmbedding> chain;
    LieAlgebra current = g;
    for (std::size_t level = 1; level <= n; ++level) {
        DerivationSpace ds = derivations(current);
        if (ds.dim() + current.dim() > dim_cap)
            throw CapExceeded("full_graph_iter: level " + std::to_string(level) + " has dimension " +
                              std::to_string(ds.dim() + current.dim()) + " > cap " + std::to_string(dim_cap));
        chain.push_back(full_graph(ds));
        current = chain.back().whole;
    }
    return chain;
}

class UnknownName : public Error {
public:
    using Error::Error;
};

/// A catalog algebra; `graded` is set when the outermost constructor is a graded power.
struct CatalogEntry {
    LieAlgebra algebra;
    std::optional<GradedPower> graded;
};

namespace detail {

inline std::size_t parse_count(std::string_view text, std::string_view name) {
    std::size_t value = 0;
    const auto* end = text.data() + text.size();
    const auto [ptr, ec] = std::from_chars(text.data(), end, value);
    if (text.empty() || ec != std::errc() || ptr != end)
        throw UnknownName("catalog: bad count '" + std::string(text) + "' in '" + std::string(name) + "'");
    return value;
}

}  // namespace detail

/// Grammar:
///   abelian:<n> | nonabelian2 | heisenberg:<N>
///   graded-power:<name>:<n> | full-graph:<name>
inline CatalogEntry catalog_entry(std::string_view name, std::size_t dim_cap = kDefaultDimCap) {
    auto starts = [&](std::string_view p) { return name.substr(0, p.size()) == p; };
    auto check_cap = [&](std::size_t d) {
        if (d > dim_cap)
            throw CapExceeded("catalog: '" + std::string(name) + "' has dimension " + std::to_string(d) + " > cap " +
                              std::to_string(dim_cap));
    };
    if (name == "nonabelian2") return {nonabelian2(), std::nullopt};
    if (starts("abelian:")) {
        const std::size_t n = detail::parse_count(name.substr(8), name);
        check_cap(n);
        return {abelian(n), std::nullopt};
    }
    if (starts("heisenberg:")) {
        const std::size_t N = detail::parse_count(name.substr(11), name);
        if (N == 0) throw UnknownName("catalog: heisenberg needs N >= 1");
        check_cap(2 * N + 1);
        return {heisenberg(N), std::nullopt};
    }
    if (starts("graded-power:")) {
        const auto rest = name.substr(13);
        const auto colon = rest.rfind(':');
        if (colon == std::string_view::npos) throw UnknownName("catalog: graded-power needs ':<n>'");
        const std::size_t n = detail::parse_count(rest.substr(colon + 1), name);
        if (n == 0) throw UnknownName("catalog: graded-power needs n >= 1");
        const auto inner = catalog_entry(rest.substr(0, colon), dim_cap);
        check_cap(inner.algebra.dim() * n);
        auto gp = graded_power(inner.algebra, n);
        return {gp.algebra, gp};
    }
    if (starts("full-graph:")) {
        const auto inner = catalog_entry(name.substr(11), dim_cap);
        auto ds = derivations(inner.algebra);
        check_cap(ds.dim() + inner.algebra.dim());
        return {full_graph(ds).whole, std::nullopt};
    }
    throw UnknownName("catalog: unknown algebra name '" + std::string(name) + "'");
}

inline LieAlgebra catalog(std::string_view name, std::size_t dim_cap = kDefaultDimCap) {
    return catalog_entry(name, dim_cap).algebra;
}

inline std::vector<std::pair<std::string, std::string>> catalog_names() {
    return {
        {"abelian:<n>", "n-dimensional abelian algebra"},
        {"nonabelian2", "two-dimensional nonabelian algebra, [x, y] = y"},
        {"heisenberg:<N>", "Heisenberg algebra of dimension 2N+1, [x_i, y_j] = delta_ij c"},
        {"graded-power:<name>:<n>", "graded power of <name>, [a@i, b@j] = [a, b]@(i+j)"},
        {"full-graph:<name>", "full graph Der(g) x g of <name>"},
    };
}

}  // namespace lie

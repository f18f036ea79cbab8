#pragma once

#include "lie/algebra.hpp"
#include "lie/polynomial.hpp"

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace lie {

inline constexpr std::size_t kDefaultDimCap = 64;
inline constexpr std::size_t kDefaultTowerSteps = 4;

class NotInner : public Error {
public:
    using Error::Error;
};

class NonzeroCenter : public Error {
public:
    using Error::Error;
};

class CapExceeded : public Error {
public:
    using Error::Error;
};

/// Independent Leibniz check: D[e_i,e_j] == [De_i,e_j] + [e_i,De_j] for all i < j,
/// evaluated with bracket() directly rather than through the linear system.
inline bool is_derivation(const LieAlgebra& g, const Matrix& d) {
    const std::size_t n = g.dim();
    if (d.rows() != n || d.cols() != n) return false;
    std::vector<Element> images;
    images.reserve(n);
    for (std::size_t i = 0; i < n; ++i) images.push_back(d.column(i));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j) {
            const Element lhs = d * bracket(g, g.basis_element(i), g.basis_element(j));
            Element rhs = bracket(g, images[i], g.basis_element(j));
            const Element rhs2 = bracket(g, g.basis_element(i), images[j]);
            for (std::size_t k = 0; k < n; ++k) rhs[k] += rhs2[k];
            if (lhs != rhs) return false;
        }
    return true;
}

/// Linear system whose solutions are the derivations of g, in the row-major
/// coordinates of an n x n matrix (variable r*n + c is entry (r, c)).
inline Echelon leibniz_system(const LieAlgebra& g) {
    const std::size_t n = g.dim();
    // by_target[j * n + k] lists (m, c) with [e_m, e_j] having component c at e_k
    std::vector<std::vector<std::pair<std::size_t, Scalar>>> by_target(n * n);
    for (std::size_t m = 0; m < n; ++m)
        for (std::size_t j = 0; j < n; ++j)
            for (const auto& [k, c] : g.basis_bracket(m, j)) by_target[j * n + k].emplace_back(m, c);

    Echelon e(n * n);
    std::map<std::size_t, Scalar> acc;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
            for (std::size_t k = 0; k < n; ++k) {
                acc.clear();
                // (D [e_i, e_j])_k = sum_m c_ij^m D(k, m)
                for (const auto& [m, c] : g.basis_bracket(i, j)) acc[k * n + m] += c;
                // [D e_i, e_j]_k = sum_m D(m, i) c_mj^k
                for (const auto& [m, c] : by_target[j * n + k]) acc[m * n + i] -= c;
                // [e_i, D e_j]_k = sum_m D(m, j) c_im^k = -sum_m D(m, j) c_mi^k
                for (const auto& [m, c] : by_target[i * n + k]) acc[m * n + j] += c;
                SparseRow row;
                for (auto& [v, x] : acc)
                    if (sgn(x) != 0) row.emplace_back(v, x);
                if (!row.empty()) e.add(row);
            }
    return e;
}

/// Der(g) with its canonical basis and Lie structure.
struct DerivationSpace {
    LieAlgebra base;
    std::vector<Matrix> basis_mats;
    Subspace coefficients;  ///< span of vec(basis_mats) in Q^(n*n); basis_mats are its RREF rows
    LieAlgebra as_algebra;  ///< bracket = matrix commutator
    std::vector<Matrix> ad_mats;  ///< ad(e_i) for every basis vector of base
    Subspace inner;         ///< ad(g) in Der-coordinates

    std::size_t dim() const noexcept { return basis_mats.size(); }
    std::size_t base_dim() const noexcept { return base.dim(); }

    /// Der-coordinates of a matrix, or nullopt if it is not a derivation.
    std::optional<Vector> coordinates(const Matrix& d) const {
        if (d.rows() != base_dim() || d.cols() != base_dim()) return std::nullopt;
        return coefficients.coordinates(d.vec());
    }

    Matrix matrix(const Vector& coords) const {
        return combine(coords, basis_mats, base_dim(), base_dim());
    }

    bool is_inner(const Matrix& d) const {
        const auto c = coordinates(d);
        return c && inner.contains(*c);
    }
};

inline DerivationSpace derivations(const LieAlgebra& g) {
    const std::size_t n = g.dim();
    const Echelon system = leibniz_system(g);
    Subspace coeffs = Subspace::span(system.kernel_basis(), n * n);

    std::vector<Matrix> mats;
    std::vector<std::string> labels;
    for (std::size_t p = 0; p < coeffs.dim(); ++p) {
        mats.push_back(Matrix::from_vec(coeffs.basis_vector(p), n, n));
        const std::size_t piv = coeffs.pivots()[p];
        labels.push_back("D:" + std::to_string(piv / n) + "," + std::to_string(piv % n));
    }

    StructureTable t(std::move(labels));
    for (std::size_t p = 0; p < mats.size(); ++p)
        for (std::size_t q = p + 1; q < mats.size(); ++q) {
            const auto c = coeffs.coordinates(commutator(mats[p], mats[q]).vec());
            if (!c) throw Error("derivations: commutator left Der(g); solver inconsistency");
            t.set(p, q, *c);
        }

    std::vector<Matrix> ads;
    std::vector<Vector> inner_coords;
    for (std::size_t i = 0; i < n; ++i) {
        ads.push_back(ad_basis(g, i));
        const auto c = coeffs.coordinates(ads.back().vec());
        if (!c) throw Error("derivations: ad(e_i) is not in the solution space; solver inconsistency");
        inner_coords.push_back(*c);
    }
    Subspace inner = Subspace::span(inner_coords, mats.size());
    return DerivationSpace{g, std::move(mats), std::move(coeffs), LieAlgebra(std::move(t)), std::move(ads),
                           std::move(inner)};
}

/// The unique x with ad(x) = d, for center-free algebras.
inline Element inner_preimage(const DerivationSpace& ds, const Matrix& d) {
    const std::size_t n = ds.base_dim();
    if (ds.inner.dim() != n) throw NonzeroCenter("inner_preimage: center is nonzero, preimage not unique");
    if (d.rows() != n || d.cols() != n) throw DimensionMismatch("inner_preimage: matrix has wrong size");
    std::vector<Vector> columns;
    for (const auto& a : ds.ad_mats) columns.push_back(a.vec());
    auto x = solve(Matrix::from_columns(columns, n * n), d.vec());
    if (!x) throw NotInner("inner_preimage: derivation is not inner");
    return *x;
}

struct CompletenessCertificate {
    std::size_t center_dim = 0;
    std::size_t der_dim = 0;
    std::size_t inner_dim = 0;
    bool complete = false;
    std::optional<Element> central_witness;  ///< first canonical center basis vector
    std::optional<Matrix> outer_witness;     ///< first Der basis matrix outside ad(g)
};

inline CompletenessCertificate is_complete(const DerivationSpace& ds) {
    CompletenessCertificate cert;
    const Subspace c = center(ds.base);
    cert.center_dim = c.dim();
    cert.der_dim = ds.dim();
    cert.inner_dim = ds.inner.dim();
    cert.complete = cert.center_dim == 0 && cert.der_dim == cert.inner_dim;
    if (!c.is_zero()) cert.central_witness = c.basis_vector(0);
    for (std::size_t p = 0; p < ds.dim() && cert.der_dim != cert.inner_dim; ++p)
        if (!ds.inner.contains(unit_vector(ds.dim(), p))) {
            cert.outer_witness = ds.basis_mats[p];
            break;
        }
    return cert;
}

inline CompletenessCertificate is_complete(const LieAlgebra& g) { return is_complete(derivations(g)); }

class HomomorphismError : public Error {
public:
    HomomorphismError(const std::string& what, std::pair<std::size_t, std::size_t> witness)
        : Error(what), witness_(witness) {}
    std::pair<std::size_t, std::size_t> witness() const noexcept { return witness_; }

private:
    std::pair<std::size_t, std::size_t> witness_;
};

/// Validated Lie homomorphism phi: source -> Der(target), one image per source basis vector.
class DerHomomorphism {
public:
    DerHomomorphism(LieAlgebra source, LieAlgebra target, std::vector<Matrix> images)
        : source_(std::move(source)), target_(std::move(target)), images_(std::move(images)) {
        const std::size_t n = target_.dim();
        if (images_.size() != source_.dim())
            throw HomomorphismError("homomorphism needs one image per source basis vector", {0, 0});
        for (std::size_t a = 0; a < images_.size(); ++a) {
            if (images_[a].rows() != n || images_[a].cols() != n)
                throw HomomorphismError("image " + std::to_string(a) + " has wrong size", {a, a});
            if (!is_derivation(target_, images_[a]))
                throw HomomorphismError("image of " + source_.labels()[a] + " is not a derivation", {a, a});
        }
        for (std::size_t a = 0; a < images_.size(); ++a)
            for (std::size_t b = a + 1; b < images_.size(); ++b)
                if (apply(bracket(source_, source_.basis_element(a), source_.basis_element(b))) !=
                    commutator(images_[a], images_[b]))
                    throw HomomorphismError("phi([" + source_.labels()[a] + ", " + source_.labels()[b] +
                                                "]) differs from [phi(a), phi(b)]",
                                            {a, b});
    }

    static DerHomomorphism zero(LieAlgebra source, LieAlgebra target) {
        const std::size_t n = target.dim();
        std::vector<Matrix> images(source.dim(), Matrix(n, n));
        return DerHomomorphism(std::move(source), std::move(target), std::move(images));
    }

    /// Identity Der(g) -> Der(g).
    static DerHomomorphism identity(const DerivationSpace& ds) {
        return DerHomomorphism(ds.as_algebra, ds.base, ds.basis_mats);
    }

    const LieAlgebra& source() const noexcept { return source_; }
    const LieAlgebra& target() const noexcept { return target_; }
    const std::vector<Matrix>& images() const noexcept { return images_; }

    /// phi(x) for x in source coordinates.
    Matrix apply(const Element& x) const {
        check_element(source_, x);
        return combine(x, images_, target_.dim(), target_.dim());
    }

private:
    LieAlgebra source_;
    LieAlgebra target_;
    std::vector<Matrix> images_;
};

/// {D in Der(g) : [D, B] = 0 for all B}, in Der-coordinates.
inline Subspace centralizer_in_der(const DerivationSpace& ds, const std::vector<Matrix>& b_mats) {
    const std::size_t m = ds.dim();
    for (std::size_t i = 0; i < b_mats.size(); ++i)
        if (!is_derivation(ds.base, b_mats[i]))
            throw PreconditionError("centralizer_in_der: input matrix " + std::to_string(i) + " is not a derivation");
    Echelon e(m);
    for (const auto& b : b_mats) {
        std::vector<Matrix> comms;
        comms.reserve(m);
        for (const auto& d : ds.basis_mats) comms.push_back(commutator(d, b));
        const std::size_t entries = ds.base_dim() * ds.base_dim();
        for (std::size_t idx = 0; idx < entries; ++idx) {
            SparseRow row;
            for (std::size_t k = 0; k < m; ++k)
                if (sgn(comms[k].vec()[idx]) != 0) row.emplace_back(k, comms[k].vec()[idx]);
            if (!row.empty()) e.add(row);
        }
    }
    return Subspace::span(e.kernel_basis(), m);
}

/// F_s(g) = {D in Der(g) : [D, phi(s)] in ad(g) for all s}, in Der-coordinates.
inline Subspace f_s_subspace(const DerivationSpace& ds, const DerHomomorphism& phi) {
    if (!(phi.target() == ds.base)) throw DimensionMismatch("f_s_subspace: homomorphism targets a different algebra");
    const std::size_t m = ds.dim();
    const Subspace ann = ds.inner.annihilator();
    Echelon e(m);
    for (const auto& img : phi.images()) {
        std::vector<Vector> w;
        w.reserve(m);
        for (const auto& d : ds.basis_mats) {
            auto c = ds.coordinates(commutator(d, img));
            if (!c) throw Error("f_s_subspace: commutator of derivations left Der(g)");
            w.push_back(std::move(*c));
        }
        for (std::size_t f = 0; f < ann.dim(); ++f) {
            const Vector func = ann.basis_vector(f);
            SparseRow row;
            for (std::size_t k = 0; k < m; ++k) {
                Scalar dot = 0;
                for (std::size_t i = 0; i < m; ++i)
                    if (sgn(func[i]) != 0 && sgn(w[k][i]) != 0) dot += func[i] * w[k][i];
                if (sgn(dot) != 0) row.emplace_back(k, dot);
            }
            if (!row.empty()) e.add(row);
        }
    }
    return Subspace::span(e.kernel_basis(), m);
}

/// Z_s(g) = {z in C(g) : phi(s) z = 0 for all s}.
inline Subspace z_s_subspace(const LieAlgebra& g, const DerHomomorphism& phi) {
    if (!(phi.target() == g)) throw DimensionMismatch("z_s_subspace: homomorphism targets a different algebra");
    const std::size_t n = g.dim();
    Echelon e(n);
    for (const auto& img : phi.images())
        for (std::size_t r = 0; r < n; ++r) e.add(img.row(r));
    const Subspace kernel = Subspace::span(e.kernel_basis(), n);
    return center(g).intersection(kernel);
}

struct EigenPart {
    Vector functional;  ///< eigenvalue of each operator on this part
    Subspace space;
};

/// Simultaneous eigenspaces of commuting operators, refined in list order.
/// eigenvalues[k] must list the distinct eigenvalues of ops[k]. Returns
/// nullopt when the refined parts do not span Q^n.
inline std::optional<std::vector<EigenPart>> simultaneous_eigenspaces(std::size_t n, const std::vector<Matrix>& ops,
                                                                      const std::vector<std::vector<Scalar>>& eigenvalues) {
    std::vector<EigenPart> parts{{Vector{}, Subspace::full(n)}};
    for (std::size_t k = 0; k < ops.size(); ++k) {
        std::vector<EigenPart> next;
        for (const auto& part : parts) {
            const auto basis = part.space.basis_vectors();
            const Matrix cols = Matrix::from_columns(basis, n);
            std::size_t covered = 0;
            for (const auto& lambda : eigenvalues[k]) {
                const Matrix shifted = (ops[k] - Matrix::identity(n) * lambda) * cols;
                const Subspace kernel = Subspace::kernel(shifted);
                if (kernel.is_zero()) continue;
                std::vector<Vector> vs;
                for (std::size_t i = 0; i < kernel.dim(); ++i) vs.push_back(cols * kernel.basis_vector(i));
                Vector f = part.functional;
                f.push_back(lambda);
                next.push_back({std::move(f), Subspace::span(vs, n)});
                covered += kernel.dim();
            }
            if (covered != part.space.dim()) return std::nullopt;
        }
        parts = std::move(next);
    }
    return parts;
}

struct TorusReport {
    bool pass = true;
    std::string failure;  ///< empty when pass
    std::optional<std::size_t> witness;  ///< index of the first failing generator
    std::vector<std::vector<Scalar>> eigenvalues;  ///< per generator, when split
};

/// Checks that b_mats span a torus: derivations, pairwise commuting, split
/// semisimple, and simultaneously diagonalizable.
inline TorusReport verify_torus(const LieAlgebra& g, const std::vector<Matrix>& b_mats) {
    TorusReport rep;
    auto fail = [&](std::string why, std::size_t idx) {
        rep.pass = false;
        rep.failure = std::move(why);
        rep.witness = idx;
        return rep;
    };
    const std::size_t n = g.dim();
    for (std::size_t i = 0; i < b_mats.size(); ++i)
        if (!is_derivation(g, b_mats[i])) return fail("generator " + std::to_string(i) + " is not a derivation", i);
    for (std::size_t i = 0; i < b_mats.size(); ++i)
        for (std::size_t j = i + 1; j < b_mats.size(); ++j)
            if (!commutator(b_mats[i], b_mats[j]).is_zero())
                return fail("generators " + std::to_string(i) + " and " + std::to_string(j) + " do not commute", i);
    for (std::size_t i = 0; i < b_mats.size(); ++i) {
        const auto check = split_semisimple_check(b_mats[i]);
        if (!check.semisimple)
            return fail("generator " + std::to_string(i) + " is not semisimple (minimal polynomial " +
                            check.minimal_polynomial.to_string() + ")",
                        i);
        if (!check.eigenvalues)
            return fail("generator " + std::to_string(i) + " has non-rational spectrum (minimal polynomial " +
                            check.minimal_polynomial.to_string() + ")",
                        i);
        rep.eigenvalues.push_back(*check.eigenvalues);
    }
    if (!simultaneous_eigenspaces(n, b_mats, rep.eigenvalues))
        return fail("generators admit no common eigenbasis", 0);
    return rep;
}

inline TorusReport verify_torus(const DerivationSpace& ds, const std::vector<Matrix>& b_mats) {
    return verify_torus(ds.base, b_mats);
}

struct TowerReport {
    std::vector<std::size_t> dims;  ///< dims[k] = dim Der^k(g)
    std::vector<CompletenessCertificate> certificates;
    std::optional<std::size_t> stabilized_at;  ///< first k with Der^k(g) complete
    bool budget_exceeded = false;
};

/// Follows g, Der(g), Der(Der(g)), ... until a complete term appears.
inline TowerReport derivation_tower(const LieAlgebra& g, std::size_t max_steps = kDefaultTowerSteps,
                                    std::size_t dim_cap = kDefaultDimCap) {
    if (!center(g).is_zero()) throw NonzeroCenter("derivation_tower: the algebra has nonzero center");
    TowerReport rep;
    LieAlgebra current = g;
    for (std::size_t step = 0;; ++step) {
        if (current.dim() > dim_cap)
            throw CapExceeded("derivation_tower: dimension " + std::to_string(current.dim()) + " exceeds cap " +
                              std::to_string(dim_cap));
        DerivationSpace ds = derivations(current);
        rep.dims.push_back(current.dim());
        rep.certificates.push_back(is_complete(ds));
        if (rep.certificates.back().complete) {
            rep.stabilized_at = step;
            return rep;
        }
        if (step == max_steps) {
            rep.budget_exceeded = true;
            return rep;
        }
        current = ds.as_algebra;
    }
}

}  // namespace lie

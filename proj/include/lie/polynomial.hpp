#pragma once

#include "lie/echelon.hpp"

#include <algorithm>
#include <optional>
#include <string>
#include <vector>

namespace lie {

/// Univariate polynomial over Q, coefficients lowest degree first.
class Polynomial {
public:
    Polynomial() = default;
    explicit Polynomial(std::vector<Scalar> coeffs) : c_(std::move(coeffs)) { trim(); }

    static Polynomial monomial(std::size_t degree, Scalar coeff = 1) {
        std::vector<Scalar> c(degree + 1);
        c[degree] = std::move(coeff);
        return Polynomial(std::move(c));
    }
    /// x - root
    static Polynomial linear(const Scalar& root) { return Polynomial({-root, Scalar(1)}); }

    bool is_zero() const noexcept { return c_.empty(); }
    /// -1 for the zero polynomial.
    long degree() const noexcept { return static_cast<long>(c_.size()) - 1; }
    const std::vector<Scalar>& coefficients() const noexcept { return c_; }
    const Scalar& leading() const { return c_.back(); }

    Scalar operator()(const Scalar& x) const {
        Scalar acc = 0;
        for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
        return acc;
    }

    Matrix operator()(const Matrix& m) const {
        if (!m.is_square()) throw DimensionMismatch("polynomial evaluation needs a square matrix");
        Matrix acc(m.rows(), m.cols());
        const Matrix id = Matrix::identity(m.rows());
        for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * m + id * (*it);
        return acc;
    }

    Polynomial derivative() const {
        if (c_.size() <= 1) return {};
        std::vector<Scalar> d(c_.size() - 1);
        for (std::size_t i = 1; i < c_.size(); ++i) d[i - 1] = c_[i] * static_cast<unsigned long>(i);
        return Polynomial(std::move(d));
    }

    Polynomial monic() const {
        if (is_zero()) return {};
        Polynomial p = *this;
        const Scalar lead = leading();
        for (auto& x : p.c_) x /= lead;
        return p;
    }

    friend Polynomial operator*(const Polynomial& a, const Polynomial& b) {
        if (a.is_zero() || b.is_zero()) return {};
        std::vector<Scalar> c(a.c_.size() + b.c_.size() - 1);
        for (std::size_t i = 0; i < a.c_.size(); ++i)
            for (std::size_t j = 0; j < b.c_.size(); ++j) c[i + j] += a.c_[i] * b.c_[j];
        return Polynomial(std::move(c));
    }

    friend Polynomial operator-(const Polynomial& a, const Polynomial& b) {
        std::vector<Scalar> c(std::max(a.c_.size(), b.c_.size()));
        for (std::size_t i = 0; i < a.c_.size(); ++i) c[i] += a.c_[i];
        for (std::size_t i = 0; i < b.c_.size(); ++i) c[i] -= b.c_[i];
        return Polynomial(std::move(c));
    }

    /// Euclidean division: returns {quotient, remainder}.
    friend std::pair<Polynomial, Polynomial> divmod(const Polynomial& a, const Polynomial& b) {
        if (b.is_zero()) throw PreconditionError("polynomial division by zero");
        std::vector<Scalar> q(a.c_.size() >= b.c_.size() ? a.c_.size() - b.c_.size() + 1 : 0);
        std::vector<Scalar> r = a.c_;
        const std::size_t db = b.c_.size() - 1;
        while (r.size() > db && !r.empty()) {
            if (sgn(r.back()) == 0) {
                r.pop_back();
                continue;
            }
            const std::size_t shift = r.size() - 1 - db;
            const Scalar f = r.back() / b.c_.back();
            q[shift] = f;
            for (std::size_t i = 0; i <= db; ++i) r[shift + i] -= f * b.c_[i];
            r.pop_back();
        }
        return {Polynomial(std::move(q)), Polynomial(std::move(r))};
    }

    friend bool operator==(const Polynomial& a, const Polynomial& b) { return a.c_ == b.c_; }

    std::string to_string() const {
        if (is_zero()) return "0";
        std::string out;
        for (long i = degree(); i >= 0; --i) {
            const Scalar& x = c_[static_cast<std::size_t>(i)];
            if (sgn(x) == 0) continue;
            if (!out.empty()) out += sgn(x) > 0 ? " + " : " - ";
            else if (sgn(x) < 0) out += "-";
            const Scalar a = abs(x);
            if (a != 1 || i == 0) out += format_scalar(a);
            if (i >= 1) out += "x";
            if (i >= 2) out += "^" + std::to_string(i);
        }
        return out;
    }

private:
    void trim() {
        while (!c_.empty() && sgn(c_.back()) == 0) c_.pop_back();
    }

    std::vector<Scalar> c_;
};

inline Polynomial gcd(Polynomial a, Polynomial b) {
    while (!b.is_zero()) {
        auto r = divmod(a, b).second;
        a = std::move(b);
        b = std::move(r);
    }
    return a.monic();
}

/// Monic polynomial of least degree annihilating m (Krylov search on the powers of m).
inline Polynomial minimal_polynomial(const Matrix& m) {
    if (!m.is_square()) throw DimensionMismatch("minimal_polynomial: matrix is not square");
    const std::size_t n = m.rows();
    std::vector<Vector> powers;
    Echelon e(n * n);
    Matrix power = Matrix::identity(n);
    for (std::size_t k = 0; k <= n; ++k) {
        if (!e.add(power.vec())) {
            // power = sum_i a_i m^i for i < k; minimal polynomial x^k - sum a_i x^i
            const auto coeffs = solve(Matrix::from_columns(powers, n * n), power.vec());
            std::vector<Scalar> c(k + 1);
            for (std::size_t i = 0; i < k; ++i) c[i] = -(*coeffs)[i];
            c[k] = 1;
            return Polynomial(std::move(c));
        }
        powers.push_back(power.vec());
        power = power * m;
    }
    throw Error("minimal_polynomial: Cayley-Hamilton bound exceeded");  // unreachable
}

namespace detail {

inline std::vector<Integer> positive_divisors(Integer n) {
    if (n < 0) n = -n;
    std::vector<Integer> small, large;
    for (Integer d = 1; d * d <= n; ++d) {
        if (n % d != 0) continue;
        small.push_back(d);
        if (d * d != n) large.push_back(n / d);
    }
    small.insert(small.end(), large.rbegin(), large.rend());
    return small;
}

/// Distinct rational roots of p, in increasing order.
inline std::vector<Scalar> rational_roots(const Polynomial& p) {
    std::vector<Scalar> roots;
    if (p.degree() <= 0) return roots;
    Integer l = 1;
    for (const auto& x : p.coefficients()) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), x.get_den_mpz_t());
    std::vector<Integer> ic;
    for (const auto& x : p.coefficients()) ic.push_back(x.get_num() * (l / x.get_den()));
    std::size_t low = 0;
    while (ic[low] == 0) ++low;
    if (low > 0) roots.emplace_back(0);
    const auto ps = positive_divisors(ic[low]);
    const auto qs = positive_divisors(ic.back());
    for (const auto& pd : ps)
        for (const auto& qd : qs)
            for (int sign : {1, -1}) {
                Scalar r(pd * sign, qd);
                r.canonicalize();
                if (sgn(p(r)) == 0 && std::find(roots.begin(), roots.end(), r) == roots.end()) roots.push_back(r);
            }
    std::sort(roots.begin(), roots.end());
    return roots;
}

}  // namespace detail

struct SemisimpleCheck {
    Polynomial minimal_polynomial;
    bool semisimple = false;  ///< minimal polynomial squarefree
    /// Distinct eigenvalues, present only when the minimal polynomial is a
    /// product of distinct rational linear factors; nullopt is the not-split marker.
    std::optional<std::vector<Scalar>> eigenvalues;

    bool split_semisimple() const { return semisimple && eigenvalues.has_value(); }
};

inline SemisimpleCheck split_semisimple_check(const Matrix& m) {
    if (!m.is_square()) throw DimensionMismatch("split_semisimple_check: matrix is not square");
    SemisimpleCheck out;
    out.minimal_polynomial = minimal_polynomial(m);
    const Polynomial& p = out.minimal_polynomial;
    out.semisimple = gcd(p, p.derivative()).degree() == 0;
    if (!out.semisimple) return out;
    auto roots = detail::rational_roots(p);
    Polynomial product({Scalar(1)});
    for (const auto& r : roots) product = product * Polynomial::linear(r);
    if (product == p) out.eigenvalues = std::move(roots);
    return out;
}

}  // namespace lie

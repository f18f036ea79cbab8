#include "lie/polynomial.hpp"
#include "lie/subspace.hpp"

#include <gtest/gtest.h>

using namespace lie;

TEST(Scalar, ParsesAndFormatsExactly) {
    EXPECT_EQ(parse_scalar("6/4"), Scalar(3, 2));
    EXPECT_EQ(parse_scalar("-2"), Scalar(-2));
    EXPECT_EQ(parse_scalar("+0/5"), Scalar(0));
    EXPECT_EQ(format_scalar(parse_scalar("-3/6")), "-1/2");
    EXPECT_EQ(format_scalar(Scalar(4)), "4");
    EXPECT_THROW(parse_scalar("1/0"), ParseError);
    EXPECT_THROW(parse_scalar("0.5"), ParseError);
    EXPECT_THROW(parse_scalar("1/-2"), ParseError);
    EXPECT_THROW(parse_scalar(""), ParseError);
}

TEST(Rref, Identity) {
    const auto r = rref(Matrix::identity(3));
    EXPECT_EQ(r.reduced, Matrix::identity(3));
    EXPECT_EQ(r.pivots, (std::vector<std::size_t>{0, 1, 2}));
}

TEST(Rref, ZeroMatrix) {
    const auto r = rref(Matrix(2, 3));
    EXPECT_EQ(r.reduced, Matrix(2, 3));
    EXPECT_TRUE(r.pivots.empty());
}

TEST(Rref, RankDeficient) {
    const auto r = rref(Matrix{{2, 4}, {1, 2}});
    EXPECT_EQ(r.reduced, (Matrix{{1, 2}, {0, 0}}));
    EXPECT_EQ(r.pivots, (std::vector<std::size_t>{0}));
}

TEST(Rref, FullyReducesAbovePivots) {
    const auto r = rref(Matrix{{1, 2, 3}, {0, 1, 4}, {1, 3, 7}});
    EXPECT_EQ(r.reduced, (Matrix{{1, 0, -5}, {0, 1, 4}, {0, 0, 0}}));
}

TEST(Nullspace, Examples) {
    EXPECT_TRUE(nullspace(Matrix::identity(2)).is_zero());
    EXPECT_EQ(nullspace(Matrix(2, 2)), Subspace::full(2));
    const Subspace k = nullspace(Matrix{{1, 1}});
    ASSERT_EQ(k.dim(), 1u);
    EXPECT_EQ(k.basis_vector(0), (Vector{1, -1}));
}

TEST(Solve, Examples) {
    EXPECT_EQ(*solve(Matrix::identity(2), {3, 5}), (Vector{3, 5}));
    EXPECT_FALSE(solve(Matrix{{1}, {0}}, {0, 1}).has_value());
    EXPECT_EQ(*solve(Matrix{{2, 0}, {0, 4}}, {1, 1}), (Vector{Scalar(1, 2), Scalar(1, 4)}));
    EXPECT_THROW(solve(Matrix::identity(2), {1}), DimensionMismatch);
}

TEST(SubspaceOps, Examples) {
    const auto full = Subspace::full(3);
    auto r = subspace_ops(full, full);
    EXPECT_TRUE(r.equal);
    EXPECT_EQ(r.sum, full);
    EXPECT_EQ(r.intersection, full);

    const auto e1 = Subspace::span({{1, 0}}, 2), e2 = Subspace::span({{0, 1}}, 2);
    r = subspace_ops(e1, e2);
    EXPECT_FALSE(r.equal);
    EXPECT_FALSE(r.contains);
    EXPECT_TRUE(r.sum.is_full());
    EXPECT_TRUE(r.intersection.is_zero());

    const auto a = Subspace::span({{1, 1, 0}}, 3), b = Subspace::span({{1, -1, 0}}, 3);
    r = subspace_ops(a, b);
    EXPECT_TRUE(r.intersection.is_zero());
    EXPECT_EQ(r.sum.dim(), 2u);
    EXPECT_EQ(r.sum, Subspace::span({{1, 0, 0}, {0, 1, 0}}, 3));

    EXPECT_THROW(subspace_ops(e1, a), DimensionMismatch);
}

TEST(SubspaceOps, CanonicalBasisMakesEqualityExact) {
    const auto a = Subspace::span({{2, 4, 0}, {0, 0, 3}}, 3);
    const auto b = Subspace::span({{1, 2, 5}, {1, 2, -1}}, 3);
    EXPECT_EQ(a, b);
    EXPECT_EQ(a.basis(), (Matrix{{1, 2, 0}, {0, 0, 1}}));
}

TEST(SubspaceOps, CoordinatesUsePivots) {
    const auto s = Subspace::span({{1, 2, 0}, {0, 0, 1}}, 3);
    EXPECT_EQ(*s.coordinates({3, 6, -1}), (Vector{3, -1}));
    EXPECT_FALSE(s.coordinates({1, 0, 0}).has_value());
}

TEST(MinimalPolynomial, Examples) {
    EXPECT_EQ(minimal_polynomial(Matrix::identity(4)), Polynomial::linear(1));
    EXPECT_EQ(minimal_polynomial(Matrix{{0, 1}, {0, 0}}), Polynomial::monomial(2));
    EXPECT_EQ(minimal_polynomial(Matrix::diagonal({1, 2})), Polynomial::linear(1) * Polynomial::linear(2));
    EXPECT_EQ(minimal_polynomial(Matrix::diagonal({1, 2})).to_string(), "x^2 - 3x + 2");
    EXPECT_THROW(minimal_polynomial(Matrix(2, 3)), DimensionMismatch);
}

TEST(SplitSemisimple, Examples) {
    const auto d = split_semisimple_check(Matrix::diagonal({1, 1, 2}));
    EXPECT_TRUE(d.semisimple);
    ASSERT_TRUE(d.eigenvalues.has_value());
    EXPECT_EQ(*d.eigenvalues, (std::vector<Scalar>{1, 2}));

    EXPECT_FALSE(split_semisimple_check(Matrix{{0, 1}, {0, 0}}).semisimple);

    const auto rot = split_semisimple_check(Matrix{{0, -1}, {1, 0}});
    EXPECT_TRUE(rot.semisimple);
    EXPECT_FALSE(rot.eigenvalues.has_value());

    EXPECT_THROW(split_semisimple_check(Matrix(1, 2)), DimensionMismatch);
}

TEST(SplitSemisimple, RationalEigenvalues) {
    // diagonalizable with eigenvalues 1/2, -3 in a non-diagonal basis
    const Matrix p{{1, 1}, {1, 2}};
    const Matrix p_inv{{2, -1}, {-1, 1}};
    const Matrix m = p * Matrix::diagonal({Scalar(1, 2), -3}) * p_inv;
    const auto r = split_semisimple_check(m);
    ASSERT_TRUE(r.split_semisimple());
    EXPECT_EQ(*r.eigenvalues, (std::vector<Scalar>{-3, Scalar(1, 2)}));
}

TEST(Polynomial, DivisionAndGcd) {
    const Polynomial p = Polynomial::linear(1) * Polynomial::linear(1) * Polynomial::linear(2);
    const auto [q, r] = divmod(p, Polynomial::linear(2));
    EXPECT_TRUE(r.is_zero());
    EXPECT_EQ(q, Polynomial::linear(1) * Polynomial::linear(1));
    EXPECT_EQ(gcd(p, p.derivative()), Polynomial::linear(1));
}

TEST(Bareiss, MatchesKnownRanks) {
    EXPECT_EQ(bareiss_rank(Matrix::identity(3)), 3u);
    EXPECT_EQ(bareiss_rank(Matrix{{2, 4}, {1, 2}}), 1u);
    EXPECT_EQ(bareiss_rank(Matrix{{0, 0, 1}, {0, 0, 2}, {1, 0, 0}}), 2u);
    EXPECT_EQ(bareiss_rank(Matrix{{Scalar(1, 2), Scalar(1, 3)}, {3, 2}}), 1u);
}

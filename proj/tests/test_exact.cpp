#include <mixsym/exact/sparse.hpp>
#include <mixsym/exact/subspace.hpp>

#include <gtest/gtest.h>

#include <algorithm>

#include "gen.hpp"

using namespace mixsym::exact;

TEST(Rational, LowestTermsAndParsing) {
  EXPECT_EQ(to_string(rational(6, -4)), "-3/2");
  EXPECT_EQ(parse_rational("10/4"), rational(5, 2));
  EXPECT_EQ(parse_rational("-7"), rational(-7));
  EXPECT_THROW(parse_rational("1/0"), std::invalid_argument);
  EXPECT_THROW(parse_rational("1.5"), std::invalid_argument);
  EXPECT_THROW(parse_rational("/3"), std::invalid_argument);
}

TEST(Rational, LargeMagnitudesStayExact) {
  Rational a = parse_rational("123456789012345678901234567890/7");
  Rational b = parse_rational("-98765432109876543210/3");
  Rational s = a + b;
  // a/b + c/d = (ad + bc)/bd, checked on the integer pieces directly
  mpz_class num = mpz_class("123456789012345678901234567890") * 3 - mpz_class("98765432109876543210") * 7;
  Rational expect{num, mpz_class(21)};
  expect.canonicalize();
  EXPECT_EQ(s, expect);
  EXPECT_GT(s.get_den(), 0);
}

TEST(Kernel, Examples) {
  EXPECT_EQ(kernel(Matrix::identity(3)).dim(), 0u);
  EXPECT_EQ(kernel(Matrix(2, 5)).dim(), 5u);
  Matrix m = Matrix::from_rows({{1, 2}, {2, 4}}, 2);
  Subspace k = kernel(m);
  ASSERT_EQ(k.dim(), 1u);
  // hand elimination: x + 2y = 0, so (-2, 1), scaled to a leading 1
  EXPECT_EQ(k.basis().row(0), (Vector{1, rational(-1, 2)}));
}

TEST(Subspace, IntersectExamples) {
  Subspace a = Subspace::span(3, {{1, 0, 0}, {0, 1, 0}});
  EXPECT_EQ(intersect(a, a), a);
  Subspace l1 = Subspace::span(2, {{1, 0}});
  Subspace l2 = Subspace::span(2, {{1, 1}});
  EXPECT_EQ(intersect(l1, l2).dim(), 0u);
  Subspace b = Subspace::span(3, {{1, 1, 1}, {0, 1, 2}});
  Subspace i = intersect(a, b);
  ASSERT_EQ(i.dim(), 1u);
  EXPECT_TRUE(a.contains(i.basis().row(0)));
  EXPECT_TRUE(b.contains(i.basis().row(0)));
  EXPECT_THROW(intersect(a, l1), std::invalid_argument);
}

TEST(SolveInSpan, Examples) {
  Matrix g = Matrix::from_rows({{1, 2, 3}, {0, 1, 1}}, 3);
  EXPECT_EQ(*solve_in_span({1, 2, 3}, g), (Vector{1, 0}));
  EXPECT_EQ(*solve_in_span({0, 0, 0}, g), (Vector{0, 0}));
  EXPECT_FALSE(solve_in_span({0, 1}, Matrix::from_rows({{1, 0}}, 2)).has_value());
}

TEST(Property, RankNullity) {
  testgen::Rng rng(11);
  for (int trial = 0; trial < 60; ++trial) {
    const std::size_t r = rng.range(1, 6), c = rng.range(1, 7);
    Matrix m = testgen::random_matrix(rng, r, c, trial % 3 == 0);
    const std::size_t rk = rank(m);
    EXPECT_EQ(rk, rank(m.transpose()));
    Subspace k = kernel(m);
    EXPECT_EQ(rk + k.dim(), c);
    for (const auto& v : k.basis_vectors()) EXPECT_TRUE(is_zero(m * v));
  }
}

TEST(Property, CanonicalFormIndependentOfGenerators) {
  testgen::Rng rng(12);
  for (int trial = 0; trial < 40; ++trial) {
    const std::size_t n = rng.range(2, 6), g = rng.range(1, 4);
    Matrix gens = testgen::random_matrix(rng, g, n, false);
    // mix the generators with a random invertible matrix
    Matrix mix = testgen::random_invertible(rng, g);
    Subspace a = Subspace::row_space(gens);
    Subspace b = Subspace::row_space(mix * gens);
    EXPECT_EQ(a.basis(), b.basis());
  }
}

TEST(Property, SolveInSpanReproducesTarget) {
  testgen::Rng rng(13);
  for (int trial = 0; trial < 40; ++trial) {
    const std::size_t n = rng.range(2, 6), g = rng.range(1, 5);
    Matrix gens = testgen::random_matrix(rng, g, n, trial % 2 == 0);
    Vector coeffs(g);
    for (auto& c : coeffs) c = rng.rational();
    Vector target(n);
    for (std::size_t i = 0; i < g; ++i)
      for (std::size_t j = 0; j < n; ++j) target[j] += coeffs[i] * gens(i, j);
    auto sol = solve_in_span(target, gens);
    ASSERT_TRUE(sol.has_value());
    EXPECT_EQ(gens.transpose() * *sol, target);
  }
}

TEST(Property, IntersectionDimensionFormula) {
  testgen::Rng rng(14);
  for (int trial = 0; trial < 40; ++trial) {
    const std::size_t n = rng.range(2, 6);
    Subspace a = Subspace::row_space(testgen::random_matrix(rng, rng.range(1, n), n, true));
    Subspace b = Subspace::row_space(testgen::random_matrix(rng, rng.range(1, n), n, true));
    Subspace i = intersect(a, b);
    EXPECT_EQ(i.dim() + sum(a, b).dim(), a.dim() + b.dim());
    EXPECT_TRUE(a.contains(i));
    EXPECT_TRUE(b.contains(i));
  }
}

TEST(Sparse, EchelonKernelMatchesDense) {
  testgen::Rng rng(15);
  for (int trial = 0; trial < 50; ++trial) {
    const std::size_t r = rng.range(1, 7), c = rng.range(1, 8);
    Matrix m = testgen::random_matrix(rng, r, c, true);
    SparseEchelon ech(c);
    for (std::size_t i = 0; i < r; ++i) ech.add_row(to_sparse(m.row(i)));
    EXPECT_EQ(ech.rank(), rank(m));
    std::vector<Vector> ks;
    for (const auto& v : ech.kernel_basis()) ks.push_back(to_dense(v, c));
    EXPECT_EQ(Subspace::span(c, ks), kernel(m));
  }
}

TEST(Sparse, SpanSolver) {
  using Entry = std::pair<int, Rational>;
  SpanSolver<int> s({{Entry{1, 1}, Entry{5, 2}}, {Entry{5, 1}}});
  auto c = s.solve({Entry{1, 3}, Entry{5, 4}});
  ASSERT_TRUE(c.has_value());
  EXPECT_EQ(*c, (Vector{3, -2}));
  EXPECT_FALSE(s.solve({Entry{2, 1}}).has_value());
  EXPECT_TRUE(s.generators_independent());
}

TEST(Sparse, ReducedRowsSpanTheSameSpace) {
  testgen::Rng rng(17);
  for (int trial = 0; trial < 20; ++trial) {
    const std::size_t rows = rng.range(1, 7), cols = rng.range(1, 8);
    const Matrix m = testgen::random_matrix(rng, rows, cols, rng.coin());
    SparseEchelon e(cols);
    for (const auto& r : m.row_vectors()) e.add_row(to_sparse(r));
    const auto red = e.reduced_rows();
    ASSERT_EQ(red.size(), rank(m));
    std::vector<std::size_t> pivots;
    for (const auto& r : red) pivots.push_back(r.front().first);
    for (const auto& r : red) {
      EXPECT_EQ(r.front().second, Rational(1));
      for (const auto& [c, v] : r) {
        if (c != r.front().first) {
          EXPECT_EQ(std::count(pivots.begin(), pivots.end(), c), 0);
        }
      }
    }
    Matrix rm(red.size(), cols);
    for (std::size_t i = 0; i < red.size(); ++i)
      for (const auto& [c, v] : red[i]) rm(i, c) = v;
    EXPECT_EQ(rank(vstack(m, rm)), rank(m));
    EXPECT_EQ(rm, rref(m).reduced);  // reduced echelon form is unique
  }
}

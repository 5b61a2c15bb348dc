#include <mixsym/liealg/invariants.hpp>
#include <mixsym/sternberg/prolong.hpp>

#include <gtest/gtest.h>

using namespace mixsym::sternberg;
using mixsym::eds::spec_grid;

namespace {

/// The explicit 7-parameter family for the second-kind (2,3) symbol, one
/// matrix per parameter a, b, c, e1, e2, p, q, in the basis e0, e1, f0,
/// f1, f2.
std::vector<Matrix> explicit_family() {
  auto m = [](std::initializer_list<std::tuple<std::size_t, std::size_t, int>> entries) {
    Matrix out(5, 5);
    for (const auto& [r, c, v] : entries) out(r, c) = v;
    return out;
  };
  return {
      m({{0, 0, 1}, {1, 1, -1}, {2, 2, 2}, {4, 4, -2}}),  // a
      m({{1, 0, 1}, {3, 2, 1}, {4, 3, 2}}),               // b
      m({{0, 1, 1}, {2, 3, 2}, {3, 4, 1}}),               // c
      m({{0, 0, 1}, {1, 1, 1}}),                          // e1
      m({{2, 2, 1}, {3, 3, 1}, {4, 4, 1}}),               // e2
      m({{0, 2, 1}, {1, 3, 1}}),                          // p
      m({{0, 3, 1}, {1, 4, 1}}),                          // q
  };
}

/// M -> D^{-1} M D with D = diag(1, 1, 2, 1, 1). In the reference
/// normalization c is a multiple of X only after this rescaling of f0.
Matrix rescale(const Matrix& m) {
  const int d[] = {1, 1, 2, 1, 1};
  Matrix out(5, 5);
  for (std::size_t r = 0; r < 5; ++r)
    for (std::size_t c = 0; c < 5; ++c) out(r, c) = m(r, c) * d[c] / d[r];
  return out;
}

/// Exponent vectors of total degree `deg` in n variables, lexicographically
/// descending: the ambient order used by intersection_layer.
std::vector<std::vector<int>> monomials(std::size_t n, int deg) {
  std::vector<std::vector<int>> out;
  std::vector<int> cur(n, 0);
  std::function<void(std::size_t, int)> rec = [&](std::size_t pos, int left) {
    if (pos + 1 == n) {
      cur[pos] = left;
      out.push_back(cur);
      return;
    }
    for (int e = left; e >= 0; --e) {
      cur[pos] = e;
      rec(pos + 1, left - e);
    }
  };
  rec(0, deg);
  return out;
}

Vector to_ambient(const VectorField& v, std::size_t n, int deg) {
  const auto monos = monomials(n, deg);
  Vector out(n * monos.size());
  for (std::size_t c = 0; c < n; ++c)
    for (const auto& [m, coef] : v[c + 1].terms()) {
      std::vector<int> e(n);
      for (std::size_t i = 0; i < n; ++i) e[i] = m.e[i + 1];
      const auto it = std::find(monos.begin(), monos.end(), e);
      EXPECT_NE(it, monos.end());
      if (it != monos.end()) out[c * monos.size() + static_cast<std::size_t>(it - monos.begin())] = coef;
    }
  return out;
}

}  // namespace

TEST(Symbol, ShiftAndDegrees) {
  const GradedSymbol s = build_symbol({2, 3, 1});
  EXPECT_EQ(s.dim(), 5u);
  EXPECT_EQ(s.names, (std::vector<std::string>{"e0", "e1", "f0", "f1", "f2"}));
  EXPECT_EQ(s.degrees, (std::vector<int>{-2, -1, -3, -2, -1}));
  Matrix p = s.X;
  p = p * s.X;
  EXPECT_FALSE(p.is_zero());  // X^2 f2 = f0
  EXPECT_TRUE((p * s.X).is_zero());
  EXPECT_EQ(build_symbol({2, 3, 0}).degrees, (std::vector<int>{-3, -2, -3, -2, -1}));
}

TEST(FlagProlong, SecondKindTwoThreeMatchesExplicitFamily) {
  const GradedMatrixAlgebra a = flag_symbol_prolong(build_symbol({2, 3, 1}));
  EXPECT_EQ(a.dim(), 7u);
  std::vector<Matrix> fam;
  for (const auto& m : explicit_family()) fam.push_back(rescale(m));
  for (const auto& m : fam) EXPECT_TRUE(a.contains(m)) << m.to_string();
  GradedMatrixAlgebra shown;
  shown.ambient = 5;
  shown.layers[0] = fam;
  for (const auto& m : a.basis()) EXPECT_TRUE(shown.contains(m)) << m.to_string();
  // the rescaling matters
  EXPECT_FALSE(a.contains(explicit_family()[1]));
}

TEST(FlagProlong, FirstAndSecondKindShareInvariants) {
  const GradedMatrixAlgebra a1 = flag_symbol_prolong(build_symbol({2, 3, 0}));
  const GradedMatrixAlgebra a2 = flag_symbol_prolong(build_symbol({2, 3, 1}));
  EXPECT_EQ(a1.dim(), 7u);
  EXPECT_FALSE(mixsym::liealg::compare(a1.algebra(), a2.algebra()).certified_non_isomorphic());
}

TEST(FlagProlong, TransposeIsAnInvolution) {
  const GradedMatrixAlgebra a = flag_symbol_prolong(build_symbol({2, 4, 1}));
  const GradedMatrixAlgebra tt = transpose_algebra(transpose_algebra(a));
  EXPECT_EQ(tt.graded_dims(), a.graded_dims());
  for (const auto& [deg, layer] : a.layers) {
    ASSERT_EQ(tt.layers.at(deg).size(), layer.size());
    for (std::size_t i = 0; i < layer.size(); ++i) EXPECT_EQ(tt.layers.at(deg)[i], layer[i]);
  }
  const GradedMatrixAlgebra t = transpose_algebra(a);
  EXPECT_EQ(t.graded_dims().begin()->first, -a.graded_dims().rbegin()->first);
}

TEST(Sternberg, TwoThreeFirstKind) {
  const auto g = sternberg_prolong(TableauSpec{2, 3, 0});
  EXPECT_EQ(g.layer_dims(), (std::vector<std::size_t>{5, 7, 3}));
  EXPECT_EQ(g.dim(), 15u);
  EXPECT_EQ(g.layer_dim(2), 0u);
}

TEST(Sternberg, TransposeOfFirstKind) {
  const GradedMatrixAlgebra a = flag_symbol_prolong(build_symbol({2, 3, 0}));
  const auto g = sternberg_prolong(a, 5), gt = sternberg_prolong(transpose_algebra(a), 5);
  EXPECT_EQ(g.dim(), 15u);
  EXPECT_EQ(gt.dim(), 15u);
  EXPECT_TRUE(mixsym::liealg::compare(g.algebra, gt.algebra).certified_non_isomorphic());
}

TEST(Sternberg, VanishingForKTwo) {
  for (int l = 3; l <= 5; ++l) {
    const auto g = sternberg_prolong(TableauSpec{2, l, 0});
    EXPECT_GT(g.layer_dim(l - 2), 0u) << "l=" << l;
    EXPECT_EQ(g.layer_dim(l - 1), 0u) << "l=" << l;
  }
}

TEST(Sternberg, CapIsEnforced) {
  const GradedMatrixAlgebra a = flag_symbol_prolong(build_symbol({2, 3, 0}));
  try {
    sternberg_prolong(a, 0);
    FAIL() << "expected NotTerminated";
  } catch (const NotTerminated& e) {
    EXPECT_EQ(e.cap, 0);
    EXPECT_EQ(e.dims, (std::vector<std::size_t>{5, 7}));
  }
}

TEST(Sternberg, RecursionEqualsIntersection) {
  for (const auto& s : spec_grid(7)) {
    const GradedMatrixAlgebra a = flag_symbol_prolong(build_symbol(s));
    const auto basis = a.basis();
    const std::size_t n = a.ambient;
    const auto g = sternberg_prolong(a, s.k() + s.l());
    // up to and including the first zero degree
    for (int i = 0; i + 1 <= static_cast<int>(g.layers.size()); ++i) {
      const mixsym::exact::Subspace inter = intersection_layer(basis, n, i);
      EXPECT_EQ(inter.dim(), g.layer_dim(i)) << s.label() << " degree " << i;
      if (static_cast<std::size_t>(i + 1) == g.layers.size()) continue;
      for (const auto& f : g.layers[static_cast<std::size_t>(i + 1)])
        EXPECT_TRUE(inter.contains(to_ambient(f, n, i + 1))) << s.label() << " degree " << i;
    }
  }
}

TEST(Sternberg, BracketsRespectDegree) {
  const auto g = sternberg_prolong(TableauSpec{2, 4, 1});
  EXPECT_TRUE(g.algebra.graded());
  EXPECT_EQ(g.algebra.dim(), g.dim());
}

#pragma once

// Small deterministic generators for property tests.

#include <mixsym/exact/matrix.hpp>
#include <mixsym/poly/poly.hpp>

#include <random>

namespace testgen {

using mixsym::exact::Matrix;
using mixsym::exact::Rational;

class Rng {
 public:
  explicit Rng(unsigned seed) : eng_(seed) {}

  std::size_t range(std::size_t lo, std::size_t hi) {
    return std::uniform_int_distribution<std::size_t>(lo, hi)(eng_);
  }
  long integer(long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(eng_); }
  bool coin(double p = 0.5) { return std::bernoulli_distribution(p)(eng_); }

  /// Small rational, zero about a quarter of the time.
  Rational rational() {
    if (coin(0.25)) return 0;
    return mixsym::exact::rational(integer(-9, 9), integer(1, 5));
  }

 private:
  std::mt19937 eng_;
};

/// With `low_rank`, rows are combinations of a few random rows.
inline Matrix random_matrix(Rng& rng, std::size_t rows, std::size_t cols, bool low_rank) {
  Matrix m(rows, cols);
  if (!low_rank || rows < 2) {
    for (std::size_t r = 0; r < rows; ++r)
      for (std::size_t c = 0; c < cols; ++c) m(r, c) = rng.rational();
    return m;
  }
  const std::size_t k = rng.range(1, rows - 1);
  Matrix basis = random_matrix(rng, k, cols, false);
  for (std::size_t r = 0; r < rows; ++r)
    for (std::size_t i = 0; i < k; ++i) {
      const Rational f = rng.rational();
      for (std::size_t c = 0; c < cols; ++c) m(r, c) += f * basis(i, c);
    }
  return m;
}

inline Matrix random_invertible(Rng& rng, std::size_t n) {
  for (;;) {
    Matrix m = random_matrix(rng, n, n, false);
    if (mixsym::exact::rank(m) == n) return m;
  }
}

/// L * U with L unit lower triangular and U upper triangular with nonzero
/// diagonal, small rational entries: invertible with a tame inverse.
inline Matrix random_lu(Rng& rng, std::size_t n) {
  Matrix l = Matrix::identity(n), u(n, n);
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = 0; c < n; ++c) {
      if (c < r) l(r, c) = rng.rational();
      if (c > r) u(r, c) = rng.rational();
    }
  for (std::size_t i = 0; i < n; ++i) {
    Rational d = 0;
    while (sgn(d) == 0) d = rng.rational();
    u(i, i) = d;
  }
  return l * u;
}

/// D * T_1 ... T_m * P: a random permutation P, transvections T = I + c E_ij
/// and a nonzero diagonal D. Stays sparse, so structure constants of large
/// algebras remain tractable after the change of basis.
inline Matrix random_sparse_change(Rng& rng, std::size_t n, std::size_t transvections) {
  std::vector<std::size_t> perm(n);
  for (std::size_t i = 0; i < n; ++i) perm[i] = i;
  for (std::size_t i = n; i > 1; --i) std::swap(perm[i - 1], perm[rng.range(0, i - 1)]);
  Matrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, perm[i]) = 1;
  for (std::size_t t = 0; t < transvections && n > 1; ++t) {
    const std::size_t i = rng.range(0, n - 1);
    std::size_t j = rng.range(0, n - 2);
    if (j >= i) ++j;
    Rational c = 0;
    while (sgn(c) == 0) c = rng.rational();
    // row_i += c row_j
    for (std::size_t k = 0; k < n; ++k) m(i, k) += c * m(j, k);
  }
  for (std::size_t i = 0; i < n; ++i) {
    Rational d = 0;
    while (sgn(d) == 0) d = rng.rational();
    for (std::size_t k = 0; k < n; ++k) m(i, k) *= d;
  }
  return m;
}

/// Random polynomial in the first `nvars` variables of `vars`, small degree.
inline mixsym::poly::Poly random_poly(Rng& rng, const mixsym::poly::VarTablePtr& vars, std::size_t nvars,
                                      int max_deg = 3, std::size_t max_terms = 4, bool laurent = false) {
  std::vector<mixsym::poly::Term> terms;
  const std::size_t n = rng.range(0, max_terms);
  for (std::size_t t = 0; t < n; ++t) {
    mixsym::poly::Monomial m;
    int budget = static_cast<int>(rng.range(0, static_cast<std::size_t>(max_deg)));
    while (budget > 0) {
      const std::size_t v = rng.range(0, nvars - 1);
      ++m.e[v];
      --budget;
    }
    if (laurent && rng.coin(0.3)) m.e[0] = static_cast<std::int8_t>(m.e[0] - rng.range(1, 3));
    terms.emplace_back(m, rng.rational());
  }
  return mixsym::poly::Poly::from_terms(vars, std::move(terms));
}

}  // namespace testgen

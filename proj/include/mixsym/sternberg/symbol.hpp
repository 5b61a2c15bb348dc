#pragma once

#include <mixsym/eds/tableau.hpp>
#include <mixsym/liealg/lie_algebra.hpp>

#include <map>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

namespace mixsym::sternberg {

using eds::TableauSpec;
using exact::Matrix;
using exact::Rational;
using exact::SparseVec;
using exact::Vector;
using liealg::LieAlgebraSC;

/// V with basis e_0..e_{k-1}, f_0..f_{l-1}, graded by tableau column, and
/// the shift X(e_i) = e_{i-1}, X(f_j) = f_{j-1}.
struct GradedSymbol {
  TableauSpec spec;
  std::vector<int> degrees;
  std::vector<std::string> names;
  Matrix X;

  std::size_t dim() const { return degrees.size(); }
  /// Degree of the elementary matrix sending basis b to basis a.
  int entry_degree(std::size_t a, std::size_t b) const { return degrees[a] - degrees[b]; }
};

inline GradedSymbol build_symbol(const TableauSpec& spec) {
  const std::size_t k = static_cast<std::size_t>(spec.k()), n = k + static_cast<std::size_t>(spec.l());
  GradedSymbol s{spec, {}, {}, Matrix(n, n)};
  for (int i = 0; i < spec.k(); ++i) {
    s.degrees.push_back(spec.degree_e(i));
    s.names.push_back("e" + std::to_string(i));
    if (i > 0) s.X(static_cast<std::size_t>(i - 1), static_cast<std::size_t>(i)) = 1;
  }
  for (int j = 0; j < spec.l(); ++j) {
    s.degrees.push_back(spec.degree_f(j));
    s.names.push_back("f" + std::to_string(j));
    if (j > 0) s.X(k + static_cast<std::size_t>(j - 1), k + static_cast<std::size_t>(j)) = 1;
  }
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b)
      if (sgn(s.X(a, b)) != 0 && s.entry_degree(a, b) != -1) throw std::logic_error("build_symbol: X is not of degree -1");
  return s;
}

/// Graded subalgebra of gl(V): a basis per degree.
struct GradedMatrixAlgebra {
  std::size_t ambient = 0;
  std::map<int, std::vector<Matrix>> layers;

  std::size_t dim() const {
    std::size_t d = 0;
    for (const auto& [deg, b] : layers) d += b.size();
    return d;
  }
  std::vector<Matrix> basis() const {
    std::vector<Matrix> out;
    for (const auto& [deg, b] : layers) out.insert(out.end(), b.begin(), b.end());
    return out;
  }
  std::vector<int> degrees() const {
    std::vector<int> out;
    for (const auto& [deg, b] : layers) out.insert(out.end(), b.size(), deg);
    return out;
  }
  std::map<int, std::size_t> graded_dims() const {
    std::map<int, std::size_t> out;
    for (const auto& [deg, b] : layers)
      if (!b.empty()) out[deg] = b.size();
    return out;
  }
  /// Structure constants; throws when the span is not closed or the
  /// grading is violated.
  LieAlgebraSC algebra() const { return liealg::from_matrices(basis(), degrees()); }
  bool contains(const Matrix& m) const {
    std::vector<Vector> rows;
    for (const auto& b : basis()) rows.push_back(b.entries());
    if (rows.empty()) return m.is_zero();
    return exact::solve_in_span(m.entries(), Matrix::from_rows(rows, ambient * ambient)).has_value();
  }
};

/// a_{-1} = <X>, a_i = {u in gl_i(V) : [u, X] in a_{i-1}}.
inline GradedMatrixAlgebra flag_symbol_prolong(const GradedSymbol& sym) {
  const std::size_t n = sym.dim();
  GradedMatrixAlgebra a;
  a.ambient = n;
  a.layers[-1] = {sym.X};
  int top = 0;
  for (std::size_t p = 0; p < n; ++p)
    for (std::size_t q = 0; q < n; ++q) top = std::max(top, sym.entry_degree(p, q));
  for (int i = 0; i <= top; ++i) {
    // unknowns: entries (p, q) of u of degree i, then coefficients c_t;
    // equation [u, X] - sum c_t A_t = 0
    std::vector<std::pair<std::size_t, std::size_t>> slots;
    for (std::size_t p = 0; p < n; ++p)
      for (std::size_t q = 0; q < n; ++q)
        if (sym.entry_degree(p, q) == i) slots.emplace_back(p, q);
    const auto& prev = a.layers[i - 1];
    std::vector<std::vector<std::pair<std::size_t, Rational>>> images;
    for (const auto& [p, q] : slots) {
      Matrix u(n, n);
      u(p, q) = 1;
      images.push_back(exact::to_sparse(exact::commutator(u, sym.X).entries()));
    }
    for (const auto& m : prev) {
      SparseVec v = exact::to_sparse(m.entries());
      for (auto& e : v) e.second = -e.second;
      images.push_back(std::move(v));
    }
    std::vector<Matrix> layer;
    exact::SparseEchelon seen(n * n);
    for (const auto& kv : exact::kernel_from_images(images)) {
      Matrix u(n, n);
      for (const auto& [s, c] : kv)
        if (s < slots.size()) u(slots[s].first, slots[s].second) = c;
      if (u.is_zero() || !seen.add_row(exact::to_sparse(u.entries()))) continue;
      layer.push_back(std::move(u));
    }
    a.layers[i] = std::move(layer);
  }
  a.algebra();
  return a;
}

/// Entrywise transpose of every basis element, degrees negated.
inline GradedMatrixAlgebra transpose_algebra(const GradedMatrixAlgebra& a) {
  GradedMatrixAlgebra t;
  t.ambient = a.ambient;
  for (const auto& [deg, b] : a.layers) {
    auto& layer = t.layers[-deg];
    for (const auto& m : b) layer.push_back(m.transpose());
  }
  t.algebra();
  return t;
}

}  // namespace mixsym::sternberg

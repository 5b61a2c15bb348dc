#pragma once

#include <mixsym/exact/matrix.hpp>
#include <mixsym/exact/sparse.hpp>
#include <mixsym/exact/subspace.hpp>
#include <mixsym/jet/field_span.hpp>

#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace mixsym::liealg {

using exact::Matrix;
using exact::Rational;
using exact::SparseVec;
using exact::Vector;

struct NotClosed : std::runtime_error {
  NotClosed(std::size_t a_, std::size_t b_)
      : std::runtime_error("bracket of basis elements " + std::to_string(a_) + " and " + std::to_string(b_) +
                           " leaves the span"),
        a(a_),
        b(b_) {}
  std::size_t a, b;
};

struct StructureError : std::logic_error {
  using std::logic_error::logic_error;
};

/// Structure constants [X_a, X_b] = sum_e c[a][b][e] X_e, stored sparsely.
/// Antisymmetry, Jacobi and (when degrees are given) the grading are checked
/// on construction.
class LieAlgebraSC {
 public:
  using Table = std::vector<std::vector<SparseVec>>;

  LieAlgebraSC() = default;
  LieAlgebraSC(Table table, std::optional<std::vector<int>> degrees = std::nullopt,
               std::vector<std::string> labels = {})
      : table_(std::move(table)), degrees_(std::move(degrees)), labels_(std::move(labels)) {
    const std::size_t n = table_.size();
    for (const auto& row : table_)
      if (row.size() != n) throw std::invalid_argument("LieAlgebraSC: table is not square");
    if (degrees_ && degrees_->size() != n) throw std::invalid_argument("LieAlgebraSC: degree count mismatch");
    if (!labels_.empty() && labels_.size() != n) throw std::invalid_argument("LieAlgebraSC: label count mismatch");
    for (auto& row : table_)
      for (auto& v : row) v = exact::normalize(std::move(v));
    check_antisymmetry();
    check_jacobi();
    if (degrees_) check_grading();
  }

  std::size_t dim() const { return table_.size(); }
  const SparseVec& bracket_basis(std::size_t a, std::size_t b) const { return table_.at(a).at(b); }
  Rational constant(std::size_t a, std::size_t b, std::size_t e) const {
    for (const auto& [i, v] : table_.at(a).at(b))
      if (i == e) return v;
    return Rational(0);
  }
  bool graded() const { return degrees_.has_value(); }
  const std::vector<int>& degrees() const {
    if (!degrees_) throw std::logic_error("LieAlgebraSC: not graded");
    return *degrees_;
  }
  const std::vector<std::string>& labels() const { return labels_; }

  /// Bracket of a basis element with a sparse vector.
  SparseVec bracket(std::size_t a, const SparseVec& v) const {
    SparseVec out;
    for (const auto& [b, x] : v) out = exact::add_scaled(out, x, table_[a][b]);
    return out;
  }
  SparseVec bracket(const SparseVec& u, const SparseVec& v) const {
    if (u.size() * v.size() <= dim()) {
      SparseVec out;
      for (const auto& [a, x] : u) out = exact::add_scaled(out, x, bracket(a, v));
      return out;
    }
    // dense accumulator for long operands
    std::vector<Rational> acc(dim());
    std::vector<bool> hit(dim(), false);
    for (const auto& [a, x] : u)
      for (const auto& [b, y] : v) {
        if (a == b) continue;
        const SparseVec& ab = table_[a][b];
        if (ab.empty()) continue;
        const Rational xy = x * y;
        for (const auto& [e, c] : ab) {
          acc[e] += xy * c;
          hit[e] = true;
        }
      }
    SparseVec out;
    for (std::size_t e = 0; e < dim(); ++e)
      if (hit[e] && sgn(acc[e]) != 0) out.emplace_back(e, std::move(acc[e]));
    return out;
  }
  Vector bracket(const Vector& u, const Vector& v) const {
    return exact::to_dense(bracket(exact::to_sparse(u), exact::to_sparse(v)), dim());
  }

  /// Matrix of ad_a: column b holds [X_a, X_b].
  Matrix ad(std::size_t a) const {
    Matrix m(dim(), dim());
    for (std::size_t b = 0; b < dim(); ++b)
      for (const auto& [e, v] : table_[a][b]) m(e, b) = v;
    return m;
  }

  /// The same algebra in the basis f_i = sum_j p(i,j) X_j. The grading is
  /// dropped since the new basis need not be homogeneous.
  LieAlgebraSC change_basis(const Matrix& p) const {
    const std::size_t n = dim();
    if (p.rows() != n || p.cols() != n) throw std::invalid_argument("change_basis: shape mismatch");
    const Matrix pinv = inverse(p);
    std::vector<SparseVec> rows(n), inv_rows(n);
    for (std::size_t i = 0; i < n; ++i) {
      rows[i] = exact::to_sparse(p.row(i));
      inv_rows[i] = exact::to_sparse(pinv.row(i));
    }
    Table t(n, std::vector<SparseVec>(n));
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i + 1; j < n; ++j) {
        const SparseVec w = bracket(rows[i], rows[j]);
        // coordinates x with x P = w
        SparseVec x;
        for (const auto& [e, v] : w) x = exact::add_scaled(x, v, inv_rows[e]);
        t[i][j] = x;
        for (auto& [e, v] : x) v = -v;
        t[j][i] = std::move(x);
      }
    // a change of basis cannot break Jacobi; recheck only antisymmetry
    LieAlgebraSC out;
    out.table_ = std::move(t);
    out.check_antisymmetry();
    return out;
  }

  static Matrix inverse(const Matrix& p) {
    const std::size_t n = p.rows();
    Matrix aug(n, 2 * n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) {
        aug(i, j) = p(i, j);
        if (i == j) aug(i, n + j) = 1;
      }
    const exact::RowEchelon e = exact::rref(aug);
    if (e.pivot_cols.size() < n || e.pivot_cols[n - 1] != n - 1) throw std::invalid_argument("matrix not invertible");
    Matrix inv(n, n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) inv(i, j) = e.reduced(i, n + j);
    return inv;
  }

 private:
  void check_antisymmetry() const {
    for (std::size_t a = 0; a < dim(); ++a) {
      if (!table_[a][a].empty()) throw StructureError("[X,X] != 0 at basis element " + std::to_string(a));
      for (std::size_t b = a + 1; b < dim(); ++b)
        if (exact::add_scaled(table_[a][b], Rational(1), table_[b][a]).size() != 0)
          throw StructureError("antisymmetry fails at (" + std::to_string(a) + "," + std::to_string(b) + ")");
    }
  }

  void check_jacobi() const {
    const std::size_t n = dim();
    for (std::size_t a = 0; a < n; ++a)
      for (std::size_t b = a + 1; b < n; ++b)
        for (std::size_t c = b + 1; c < n; ++c) {
          SparseVec s = bracket(a, table_[b][c]);
          s = exact::add_scaled(s, Rational(1), bracket(b, table_[c][a]));
          s = exact::add_scaled(s, Rational(1), bracket(c, table_[a][b]));
          if (!s.empty())
            throw StructureError("Jacobi fails at (" + std::to_string(a) + "," + std::to_string(b) + "," +
                                 std::to_string(c) + ")");
        }
  }

  void check_grading() const {
    const auto& d = *degrees_;
    for (std::size_t a = 0; a < dim(); ++a)
      for (std::size_t b = 0; b < dim(); ++b)
        for (const auto& [e, v] : table_[a][b])
          if (d[e] != d[a] + d[b])
            throw StructureError("bracket of degrees " + std::to_string(d[a]) + " and " + std::to_string(d[b]) +
                                 " has a component of degree " + std::to_string(d[e]));
  }

  Table table_;
  std::optional<std::vector<int>> degrees_;
  std::vector<std::string> labels_;
};

/// Structure constants of a closed span, given a coordinate map. `coords`
/// returns the coefficients of a bracket in the basis or nullopt.
template <class Element, class BracketFn, class CoordsFn>
LieAlgebraSC from_basis(const std::vector<Element>& basis, BracketFn&& bracket, CoordsFn&& coords,
                        std::optional<std::vector<int>> degrees = std::nullopt, std::vector<std::string> labels = {}) {
  const std::size_t n = basis.size();
  LieAlgebraSC::Table t(n, std::vector<SparseVec>(n));
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = a + 1; b < n; ++b) {
      const std::optional<Vector> c = coords(bracket(basis[a], basis[b]));
      if (!c) throw NotClosed(a, b);
      t[a][b] = exact::to_sparse(*c);
      SparseVec neg = t[a][b];
      for (auto& [e, v] : neg) v = -v;
      t[b][a] = std::move(neg);
    }
  return LieAlgebraSC(std::move(t), std::move(degrees), std::move(labels));
}

inline LieAlgebraSC from_vector_fields(const std::vector<jet::VectorField>& basis,
                                       std::optional<std::vector<int>> degrees = std::nullopt) {
  const jet::FieldSpan span(basis);
  if (!span.independent()) throw std::invalid_argument("from_vector_fields: basis is linearly dependent");
  std::vector<std::string> labels;
  for (const auto& v : basis) labels.push_back(v.to_string());
  return from_basis(
      basis, [](const jet::VectorField& v, const jet::VectorField& w) { return jet::bracket(v, w); },
      [&](const jet::VectorField& v) { return span.coordinates(v); }, std::move(degrees), std::move(labels));
}

/// Matrix Lie algebra under the commutator.
inline LieAlgebraSC from_matrices(const std::vector<Matrix>& basis,
                                  std::optional<std::vector<int>> degrees = std::nullopt) {
  std::vector<std::vector<std::pair<std::size_t, Rational>>> gens;
  for (const auto& m : basis) gens.push_back(exact::to_sparse(m.entries()));
  const exact::SpanSolver<std::size_t> span(gens);
  if (!span.generators_independent()) throw std::invalid_argument("from_matrices: basis is linearly dependent");
  std::vector<std::string> labels;
  for (const auto& m : basis) labels.push_back(m.to_string());
  return from_basis(
      basis, [](const Matrix& a, const Matrix& b) { return exact::commutator(a, b); },
      [&](const Matrix& m) { return span.solve(exact::to_sparse(m.entries())); }, std::move(degrees),
      std::move(labels));
}

}  // namespace mixsym::liealg

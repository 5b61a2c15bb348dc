#pragma once

#include <mixsym/exact/matrix.hpp>

#include <optional>
#include <stdexcept>
#include <vector>

namespace mixsym::exact {

/// A linear subspace of Q^n, stored as the rows of its reduced row echelon
/// basis. Equal subspaces have identical representations.
class Subspace {
 public:
  explicit Subspace(std::size_t ambient = 0) : basis_(0, ambient) {}

  static Subspace span(std::size_t ambient, const std::vector<Vector>& generators) {
    if (generators.empty()) return Subspace(ambient);
    return from_echelon(rref(Matrix::from_rows(generators, ambient)));
  }
  static Subspace row_space(const Matrix& m) { return from_echelon(rref(m)); }
  static Subspace full(std::size_t ambient) { return row_space(Matrix::identity(ambient)); }

  std::size_t ambient_dim() const { return basis_.cols(); }
  std::size_t dim() const { return basis_.rows(); }
  const Matrix& basis() const { return basis_; }
  const std::vector<std::size_t>& pivots() const { return pivots_; }
  std::vector<Vector> basis_vectors() const { return basis_.row_vectors(); }

  /// Coordinates of v in the echelon basis, if v lies in the subspace.
  std::optional<Vector> coordinates(const Vector& v) const {
    if (v.size() != ambient_dim()) throw std::invalid_argument("Subspace: ambient dimension mismatch");
    Vector coords(dim());
    Vector residual = v;
    for (std::size_t r = 0; r < dim(); ++r) {
      coords[r] = residual[pivots_[r]];
      if (sgn(coords[r]) == 0) continue;
      for (std::size_t c = 0; c < ambient_dim(); ++c)
        if (sgn(basis_(r, c)) != 0) residual[c] -= coords[r] * basis_(r, c);
    }
    if (!is_zero(residual)) return std::nullopt;
    return coords;
  }

  bool contains(const Vector& v) const { return coordinates(v).has_value(); }
  bool contains(const Subspace& other) const {
    for (std::size_t r = 0; r < other.dim(); ++r)
      if (!contains(other.basis_.row(r))) return false;
    return true;
  }

  /// Vectors w with <w, v> = 0 for all v in the subspace.
  Subspace annihilator() const;

  friend bool operator==(const Subspace& a, const Subspace& b) { return a.basis_ == b.basis_; }

 private:
  static Subspace from_echelon(RowEchelon e) {
    Subspace s;
    s.basis_ = std::move(e.reduced);
    s.pivots_ = std::move(e.pivot_cols);
    return s;
  }

  Matrix basis_;
  std::vector<std::size_t> pivots_;
};

/// Null space {v : M v = 0}.
inline Subspace kernel(const Matrix& m) {
  const RowEchelon e = rref(m);
  const std::size_t n = m.cols();
  std::vector<bool> is_pivot(n, false);
  for (auto p : e.pivot_cols) is_pivot[p] = true;
  std::vector<Vector> gens;
  for (std::size_t f = 0; f < n; ++f) {
    if (is_pivot[f]) continue;
    Vector v(n);
    v[f] = 1;
    for (std::size_t r = 0; r < e.pivot_cols.size(); ++r) v[e.pivot_cols[r]] = -e.reduced(r, f);
    gens.push_back(std::move(v));
  }
  return Subspace::span(n, gens);
}

inline Subspace Subspace::annihilator() const { return kernel(basis_); }

inline Subspace sum(const Subspace& a, const Subspace& b) {
  if (a.ambient_dim() != b.ambient_dim()) throw std::invalid_argument("sum: ambient dimension mismatch");
  return Subspace::row_space(vstack(a.basis(), b.basis()));
}

inline Subspace intersect(const Subspace& a, const Subspace& b) {
  if (a.ambient_dim() != b.ambient_dim()) throw std::invalid_argument("intersect: ambient dimension mismatch");
  const Subspace ann_a = a.annihilator();
  const Subspace ann_b = b.annihilator();
  return kernel(vstack(ann_a.basis(), ann_b.basis()));
}

/// Coefficients c with sum_i c_i * generators.row(i) == target, or nullopt
/// when the target is outside the row span.
inline std::optional<Vector> solve_in_span(const Vector& target, const Matrix& generators) {
  if (target.size() != generators.cols()) throw std::invalid_argument("solve_in_span: dimension mismatch");
  const std::size_t g = generators.rows();
  Matrix aug(generators.cols(), g + 1);
  for (std::size_t i = 0; i < g; ++i)
    for (std::size_t c = 0; c < generators.cols(); ++c) aug(c, i) = generators(i, c);
  for (std::size_t c = 0; c < target.size(); ++c) aug(c, g) = target[c];
  const RowEchelon e = rref(aug);
  Vector coeffs(g);
  for (std::size_t r = 0; r < e.pivot_cols.size(); ++r) {
    if (e.pivot_cols[r] == g) return std::nullopt;
    coeffs[e.pivot_cols[r]] = e.reduced(r, g);
  }
  return coeffs;
}

}  // namespace mixsym::exact

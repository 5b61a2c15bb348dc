#pragma once

#include <mixsym/exact/rational.hpp>

#include <algorithm>
#include <cstddef>
#include <map>
#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

namespace mixsym::exact {

/// Sparse vector: (index, value) pairs, strictly increasing indices, no zeros.
using SparseVec = std::vector<std::pair<std::size_t, Rational>>;

/// r + a * p.
inline SparseVec add_scaled(const SparseVec& r, const Rational& a, const SparseVec& p) {
  SparseVec out;
  out.reserve(r.size() + p.size());
  std::size_t i = 0, j = 0;
  while (i < r.size() || j < p.size()) {
    if (j == p.size() || (i < r.size() && r[i].first < p[j].first)) {
      out.push_back(r[i++]);
    } else if (i == r.size() || p[j].first < r[i].first) {
      out.emplace_back(p[j].first, a * p[j].second);
      ++j;
    } else {
      Rational v = r[i].second + a * p[j].second;
      if (sgn(v) != 0) out.emplace_back(r[i].first, std::move(v));
      ++i;
      ++j;
    }
  }
  return out;
}

/// Sorts, merges duplicate indices and drops zeros.
inline SparseVec normalize(SparseVec v) {
  std::sort(v.begin(), v.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
  SparseVec out;
  out.reserve(v.size());
  for (auto& [idx, val] : v) {
    if (!out.empty() && out.back().first == idx)
      out.back().second += val;
    else
      out.emplace_back(idx, std::move(val));
    if (sgn(out.back().second) == 0) out.pop_back();
  }
  return out;
}

inline Vector to_dense(const SparseVec& v, std::size_t n) {
  Vector out(n);
  for (const auto& [i, x] : v) out.at(i) = x;
  return out;
}

inline SparseVec to_sparse(const Vector& v) {
  SparseVec out;
  for (std::size_t i = 0; i < v.size(); ++i)
    if (sgn(v[i]) != 0) out.emplace_back(i, v[i]);
  return out;
}

/// Incremental row echelon form over sparse rows. Every stored row has its
/// pivot as its smallest column, normalized to 1, and no entries at pivot
/// columns inserted before it.
class SparseEchelon {
 public:
  explicit SparseEchelon(std::size_t cols) : cols_(cols), pivot_row_(cols) {}

  std::size_t cols() const { return cols_; }
  std::size_t rank() const { return rank_; }

  SparseVec reduce(SparseVec r) const {
    std::size_t pos = 0;
    while (pos < r.size()) {
      const std::size_t c = r[pos].first;
      if (c >= cols_) throw std::out_of_range("SparseEchelon: column out of range");
      if (pivot_row_[c]) {
        const Rational f = -r[pos].second;
        r = add_scaled(r, f, *pivot_row_[c]);
      } else {
        ++pos;
      }
    }
    return r;
  }

  /// Returns true when the row was independent of the rows seen so far.
  bool add_row(SparseVec r) {
    r = reduce(std::move(r));
    if (r.empty()) return false;
    const Rational inv = 1 / r.front().second;
    for (auto& e : r) e.second *= inv;
    pivot_row_[r.front().first] = std::move(r);
    ++rank_;
    return true;
  }

  bool is_pivot(std::size_t c) const { return pivot_row_[c].has_value(); }

  /// Rows of the reduced echelon form, zero at every other pivot column.
  /// For a subspace of high dimension these rows are much sparser than an
  /// arbitrary basis.
  std::vector<SparseVec> reduced_rows() const {
    std::vector<std::optional<SparseVec>> red(cols_);
    for (std::size_t p = cols_; p-- > 0;) {
      if (!pivot_row_[p]) continue;
      SparseVec r = *pivot_row_[p];
      for (std::size_t pos = 1; pos < r.size();) {
        const std::size_t c = r[pos].first;
        if (red[c]) {
          const Rational f = -r[pos].second;
          r = add_scaled(r, f, *red[c]);
        } else {
          ++pos;
        }
      }
      red[p] = std::move(r);
    }
    std::vector<SparseVec> out;
    for (auto& r : red)
      if (r) out.push_back(std::move(*r));
    return out;
  }

  /// One kernel vector per free column f, with entry 1 at f and 0 at the
  /// other free columns. This is the basis read off the reduced form, so it
  /// does not depend on the order in which rows were added.
  std::vector<SparseVec> kernel_basis() const {
    std::vector<std::size_t> free_cols;
    for (std::size_t c = 0; c < cols_; ++c)
      if (!pivot_row_[c]) free_cols.push_back(c);
    std::vector<SparseVec> out;
    out.reserve(free_cols.size());
    for (std::size_t f : free_cols) {
      std::map<std::size_t, Rational> v;
      v[f] = 1;
      for (std::size_t p = cols_; p-- > 0;) {
        if (!pivot_row_[p]) continue;
        Rational acc;
        for (const auto& [c, a] : *pivot_row_[p]) {
          if (c == p) continue;
          auto it = v.find(c);
          if (it != v.end()) acc -= a * it->second;
        }
        if (sgn(acc) != 0) v[p] = std::move(acc);
      }
      SparseVec sv(v.begin(), v.end());
      out.push_back(std::move(sv));
    }
    return out;
  }

 private:
  std::size_t cols_;
  std::size_t rank_ = 0;
  std::vector<std::optional<SparseVec>> pivot_row_;
};

/// Expresses vectors as combinations of a fixed generator list. Keys are
/// arbitrary ordered labels for coordinates, so generators and targets do
/// not need a shared dense layout.
template <class Key>
class SpanSolver {
 public:
  explicit SpanSolver(const std::vector<std::vector<std::pair<Key, Rational>>>& generators)
      : generator_count_(generators.size()) {
    for (const auto& g : generators)
      for (const auto& [k, v] : g) column_of(k);
    rows_.reserve(generators.size());
    for (std::size_t i = 0; i < generators.size(); ++i) {
      Row row{to_columns(generators[i]), SparseVec{{i, Rational(1)}}};
      reduce(row);
      if (row.vec.empty()) {
        dependent_ = true;
        continue;
      }
      const Rational inv = 1 / row.vec.front().second;
      for (auto& e : row.vec) e.second *= inv;
      for (auto& e : row.combo) e.second *= inv;
      pivot_of_.emplace(row.vec.front().first, rows_.size());
      rows_.push_back(std::move(row));
    }
  }

  bool generators_independent() const { return !dependent_; }
  std::size_t rank() const { return rows_.size(); }

  /// Coefficients (dense, one per generator) or nullopt if not in the span.
  std::optional<Vector> solve(const std::vector<std::pair<Key, Rational>>& target) const {
    SparseVec vec;
    for (const auto& [k, v] : target) {
      auto it = columns_.find(k);
      if (it == columns_.end()) {
        if (sgn(v) != 0) return std::nullopt;
        continue;
      }
      vec.emplace_back(it->second, v);
    }
    Row row{normalize(std::move(vec)), {}};
    reduce(row);
    if (!row.vec.empty()) return std::nullopt;
    Vector out(generator_count_);
    for (const auto& [i, v] : row.combo) out[i] = -v;
    return out;
  }

 private:
  struct Row {
    SparseVec vec;
    SparseVec combo;  // vec == sum combo_i * generator_i
  };

  std::size_t column_of(const Key& k) {
    auto [it, inserted] = columns_.emplace(k, columns_.size());
    return it->second;
  }

  SparseVec to_columns(const std::vector<std::pair<Key, Rational>>& g) const {
    SparseVec v;
    for (const auto& [k, x] : g) v.emplace_back(columns_.at(k), x);
    return normalize(std::move(v));
  }

  void reduce(Row& r) const {
    std::size_t pos = 0;
    while (pos < r.vec.size()) {
      auto it = pivot_of_.find(r.vec[pos].first);
      if (it == pivot_of_.end()) {
        ++pos;
        continue;
      }
      const Row& p = rows_[it->second];
      const Rational f = -r.vec[pos].second;
      r.vec = add_scaled(r.vec, f, p.vec);
      r.combo = add_scaled(r.combo, f, p.combo);
    }
  }

  std::size_t generator_count_;
  bool dependent_ = false;
  std::map<Key, std::size_t> columns_;
  std::map<std::size_t, std::size_t> pivot_of_;
  std::vector<Row> rows_;
};

/// Kernel of a linear map given column by column: `images[u]` is the image
/// of unknown u as (equation key, coefficient) pairs. Returns the canonical
/// kernel basis over the unknown indices.
template <class Key>
std::vector<SparseVec> kernel_from_images(const std::vector<std::vector<std::pair<Key, Rational>>>& images) {
  std::map<Key, std::size_t> eq_index;
  for (const auto& img : images)
    for (const auto& [k, v] : img) eq_index.emplace(k, 0);
  std::size_t next = 0;
  for (auto& [k, idx] : eq_index) idx = next++;
  std::vector<SparseVec> rows(eq_index.size());
  for (std::size_t u = 0; u < images.size(); ++u)
    for (const auto& [k, v] : images[u])
      if (sgn(v) != 0) rows[eq_index[k]].emplace_back(u, v);
  SparseEchelon ech(images.size());
  // shorter rows first keeps fill-in low
  std::vector<std::size_t> order(rows.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t a, std::size_t b) { return rows[a].size() < rows[b].size(); });
  for (std::size_t i : order) {
    ech.add_row(normalize(std::move(rows[i])));
    if (ech.rank() == images.size()) break;
  }
  return ech.kernel_basis();
}

}  // namespace mixsym::exact

#pragma once

#include <mixsym/eds/eds.hpp>
#include <mixsym/poly/ratfunc.hpp>

#include <stdexcept>
#include <string>
#include <vector>

namespace mixsym::eds {

/// y^(k) = f, z^(l) = g on the chart J^{k-1,l-1}.
class NonlinearSystem {
 public:
  NonlinearSystem(int k, int l, Poly f, Poly g) : k_(k), l_(l), chart_(k - 1, l - 1), x_(chart_) {
    if (k < 2 || l < k) throw std::invalid_argument("need 2 <= k <= l");
    f_ = f.rebase(chart_.vars());
    g_ = g.rebase(chart_.vars());
    x_[0] = chart_.constant(1);
    for (int i = 0; i + 1 < k; ++i) x_[chart_.y(i)] = chart_.var(chart_.y(i + 1));
    for (int j = 0; j + 1 < l; ++j) x_[chart_.z(j)] = chart_.var(chart_.z(j + 1));
    x_[chart_.y(k - 1)] = f_;
    x_[chart_.z(l - 1)] = g_;
  }

  int k() const { return k_; }
  int l() const { return l_; }
  const JetSpace& chart() const { return chart_; }
  const Poly& f() const { return f_; }
  const Poly& g() const { return g_; }
  const VectorField& X() const { return x_; }

 private:
  int k_, l_;
  JetSpace chart_;
  Poly f_, g_;
  VectorField x_;
};

struct DerivedFlag {
  std::vector<std::size_t> ranks;                    // F_1, F_2, ...
  std::vector<std::vector<VectorField>> generators;  // polynomial, content-cleared
};

namespace detail {

inline poly::PolyMatrix columns_to_matrix(const std::vector<VectorField>& cols, std::size_t rows) {
  poly::PolyMatrix m(rows);
  for (std::size_t r = 0; r < rows; ++r)
    for (const auto& c : cols) m[r].push_back(c[r]);
  return m;
}

/// Generic rank over the fraction field.
inline std::size_t generic_rank(const std::vector<VectorField>& fields, std::size_t rows) {
  if (fields.empty()) return 0;
  return fields.size() - poly::ratfunc_kernel(columns_to_matrix(fields, rows), fields.size()).size();
}

}  // namespace detail

/// F_1 = <d/dy_i, d/dz_j : i, j >= 1>, F_{i+1} = {Y in F_i : [Y,X] in F_i}.
/// For Y = sum h_a G_a the condition is sum h_a [G_a,X] = sum h'_b G_b, a
/// linear system over the fraction field; F_{i+1} is the h-projection of
/// its kernel. Reports F_1..F_{l-1}, stopping early once a term is zero.
inline DerivedFlag derived_flag(const NonlinearSystem& sys) {
  const auto& ch = sys.chart();
  const std::size_t n = ch.dim();
  std::vector<VectorField> gens;
  for (int i = 1; i < sys.k(); ++i) gens.push_back(VectorField::basis(ch.vars(), ch.y(i)));
  for (int j = 1; j < sys.l(); ++j) gens.push_back(VectorField::basis(ch.vars(), ch.z(j)));

  DerivedFlag out;
  out.ranks.push_back(gens.size());
  out.generators.push_back(gens);
  while (static_cast<int>(out.ranks.size()) < sys.l() - 1 && !gens.empty()) {
    std::vector<VectorField> cols;
    for (const auto& g : gens) cols.push_back(jet::bracket(g, sys.X()));
    for (const auto& g : gens) cols.push_back(g);
    const auto ker = poly::ratfunc_kernel(detail::columns_to_matrix(cols, n), cols.size());

    std::vector<VectorField> next;
    std::size_t rank = 0;
    for (const auto& v : ker) {
      VectorField y(ch);
      for (std::size_t a = 0; a < gens.size(); ++a) y += v[a] * gens[a];
      if (y.is_zero()) continue;
      std::vector<VectorField> trial = next;
      trial.push_back(y);
      const std::size_t r = detail::generic_rank(trial, n);
      if (r > rank) {
        rank = r;
        next = std::move(trial);
      }
    }
    gens = std::move(next);
    out.ranks.push_back(gens.size());
    out.generators.push_back(gens);
  }
  return out;
}

}  // namespace mixsym::eds

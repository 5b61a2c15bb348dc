#pragma once

#include <mixsym/eds/tableau.hpp>
#include <mixsym/liealg/lie_algebra.hpp>

#include <algorithm>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

namespace mixsym::tanaka {

using eds::TableauSpec;
using exact::Matrix;
using exact::Rational;
using exact::SparseVec;
using exact::Vector;
using liealg::LieAlgebraSC;

/// Negatively graded nilpotent algebra with basis Y_0..Y_{k-1},
/// Z_0..Z_{l-1}, D and the only brackets [Y_i, D] = Y_{i-1},
/// [Z_j, D] = Z_{j-1}.
struct GradedNilpotent {
  LieAlgebraSC algebra;
  std::vector<std::string> names;
  std::size_t d_index = 0;  // position of D
  int depth = 0;

  std::size_t dim() const { return algebra.dim(); }
  const std::vector<int>& degrees() const { return algebra.degrees(); }

  /// True when the degree -1 part generates everything.
  bool fundamental() const {
    std::vector<SparseVec> gens;
    for (std::size_t i = 0; i < dim(); ++i)
      if (degrees()[i] == -1) gens.push_back(SparseVec{{i, Rational(1)}});
    exact::SparseEchelon span(dim());
    std::vector<SparseVec> basis;
    for (const auto& g : gens)
      if (span.add_row(g)) basis.push_back(g);
    for (std::size_t pos = 0; pos < basis.size(); ++pos)
      for (const auto& g : gens) {
        SparseVec w = algebra.bracket(g, basis[pos]);
        if (!w.empty() && span.add_row(w)) basis.push_back(w);
      }
    return basis.size() == dim();
  }
};

inline GradedNilpotent build_gnla(const TableauSpec& spec) {
  const int k = spec.k(), l = spec.l();
  const std::size_t n = static_cast<std::size_t>(k + l + 1);
  const std::size_t d = n - 1;
  LieAlgebraSC::Table t(n, std::vector<SparseVec>(n));
  std::vector<int> degrees(n);
  std::vector<std::string> names;
  for (int i = 0; i < k; ++i) {
    names.push_back("Y" + std::to_string(i));
    degrees[i] = spec.degree_e(i);
    if (i > 0) {
      t[i][d] = SparseVec{{static_cast<std::size_t>(i - 1), Rational(1)}};
      t[d][i] = SparseVec{{static_cast<std::size_t>(i - 1), Rational(-1)}};
    }
  }
  for (int j = 0; j < l; ++j) {
    const std::size_t z = static_cast<std::size_t>(k + j);
    names.push_back("Z" + std::to_string(j));
    degrees[z] = spec.degree_f(j);
    if (j > 0) {
      t[z][d] = SparseVec{{z - 1, Rational(1)}};
      t[d][z] = SparseVec{{z - 1, Rational(-1)}};
    }
  }
  names.push_back("D");
  degrees[d] = -1;
  GradedNilpotent m{LieAlgebraSC(std::move(t), degrees, names), names, d, spec.depth()};
  for (int deg : degrees)
    if (deg >= 0) throw std::logic_error("build_gnla: non-negative degree");
  return m;
}

namespace detail {

/// Matrix of a degree-0 map: column b is the image of basis element b.
inline Matrix map_matrix(std::size_t n, const std::vector<std::pair<std::size_t, std::size_t>>& slots,
                         const SparseVec& coeffs) {
  Matrix m(n, n);
  for (const auto& [u, v] : coeffs) m(slots[u].first, slots[u].second) = v;
  return m;
}

}  // namespace detail

/// Degree-preserving derivations of m, optionally required to map each
/// listed subspace (given by spanning vectors) into itself.
inline std::vector<Matrix> stab(const GradedNilpotent& m, const std::vector<std::vector<Vector>>& subspaces) {
  const std::size_t n = m.dim();
  const auto& deg = m.degrees();
  // unknown phi(a, b): coefficient of X_a in phi(X_b), deg a == deg b
  std::vector<std::pair<std::size_t, std::size_t>> slots;
  for (std::size_t b = 0; b < n; ++b)
    for (std::size_t a = 0; a < n; ++a)
      if (deg[a] == deg[b]) slots.emplace_back(a, b);

  using Key = std::tuple<int, std::size_t, std::size_t, std::size_t>;
  std::vector<std::vector<std::pair<Key, Rational>>> images(slots.size());
  for (std::size_t s = 0; s < slots.size(); ++s) {
    const auto [a, b] = slots[s];
    auto& img = images[s];
    // phi[u,v] - [phi u, v] - [u, phi v] at key (0, u, v, e)
    for (std::size_t u = 0; u < n; ++u)
      for (std::size_t v = u + 1; v < n; ++v)
        for (const auto& [w, c] : m.algebra.bracket_basis(u, v))
          if (w == b) img.emplace_back(Key{0, u, v, a}, c);
    for (std::size_t v = 0; v < n; ++v) {
      if (v == b) continue;
      // -[X_a, X_v] at (b, v) when b < v, else -[X_v, X_a] at (v, b)
      for (const auto& [e, c] : m.algebra.bracket_basis(a, v)) {
        if (b < v)
          img.emplace_back(Key{0, b, v, e}, -c);
        else
          img.emplace_back(Key{0, v, b, e}, c);
      }
    }
    // phi(S) inside S: annihilator rows w with w . phi(s) = 0
    for (std::size_t si = 0; si < subspaces.size(); ++si) {
      const auto& gens = subspaces[si];
      const exact::Subspace sub = exact::Subspace::span(n, gens);
      const exact::Subspace ann = sub.annihilator();
      const auto sb = sub.basis_vectors();
      const auto ab = ann.basis_vectors();
      for (std::size_t p = 0; p < sb.size(); ++p) {
        if (sgn(sb[p][b]) == 0) continue;
        for (std::size_t q = 0; q < ab.size(); ++q)
          if (sgn(ab[q][a]) != 0) img.emplace_back(Key{1 + static_cast<int>(si), p, q, 0}, sb[p][b] * ab[q][a]);
      }
    }
  }
  std::vector<Matrix> out;
  for (const auto& kv : exact::kernel_from_images(images)) out.push_back(detail::map_matrix(n, slots, kv));
  // closure under the commutator, asserted by building the algebra
  liealg::from_matrices(out);
  return out;
}

inline std::vector<Matrix> der0(const GradedNilpotent& m) { return stab(m, {}); }

/// Stabilizer of E = <D>.
inline std::vector<Matrix> stab_d(const GradedNilpotent& m) {
  Vector d(m.dim());
  d[m.d_index] = 1;
  return stab(m, {{d}});
}

}  // namespace mixsym::tanaka

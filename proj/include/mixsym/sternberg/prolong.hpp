#pragma once

#include <mixsym/jet/field_span.hpp>
#include <mixsym/poly/poly.hpp>
#include <mixsym/sternberg/symbol.hpp>

#include <functional>
#include <map>
#include <stdexcept>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

namespace mixsym::sternberg {

using jet::VectorField;
using poly::Poly;
using poly::VarTablePtr;

struct NotTerminated : std::runtime_error {
  NotTerminated(int cap_, std::vector<std::size_t> dims_)
      : std::runtime_error("Sternberg prolongation has a nonzero layer at the degree cap " + std::to_string(cap_)),
        cap(cap_),
        dims(std::move(dims_)) {}
  int cap;
  std::vector<std::size_t> dims;
};

/// Polynomial vector fields on V. Coordinates u_0..u_{n-1} sit after an
/// unused leading "x" so the usual jet-chart tables apply.
inline VarTablePtr coordinate_table(const std::vector<std::string>& names) {
  std::vector<std::string> all{"x"};
  all.insert(all.end(), names.begin(), names.end());
  return poly::make_vartable(all);
}

inline std::vector<std::string> default_names(std::size_t n) {
  std::vector<std::string> out;
  for (std::size_t i = 0; i < n; ++i) out.push_back("y" + std::to_string(i));
  return out;
}

/// The linear field sum_{a,b} m(a,b) u_b d/du_a.
inline VectorField linear_field(const Matrix& m, const VarTablePtr& vars) {
  VectorField v(vars);
  for (std::size_t a = 0; a < m.rows(); ++a)
    for (std::size_t b = 0; b < m.cols(); ++b)
      if (sgn(m(a, b)) != 0) v[a + 1] += m(a, b) * Poly::variable(vars, b + 1);
  return v;
}

struct SternbergProlongation {
  VarTablePtr vars;
  std::vector<std::vector<VectorField>> layers;  // layers[i + 1] is degree i
  LieAlgebraSC algebra;

  std::size_t dim() const {
    std::size_t d = 0;
    for (const auto& l : layers) d += l.size();
    return d;
  }
  /// Dimension of degree i, i >= -1.
  std::size_t layer_dim(int i) const {
    const std::size_t idx = static_cast<std::size_t>(i + 1);
    return idx < layers.size() ? layers[idx].size() : 0;
  }
  std::vector<std::size_t> layer_dims() const {
    std::vector<std::size_t> out;
    for (const auto& l : layers) out.push_back(l.size());
    return out;
  }
};

namespace detail {

using Key = std::tuple<std::size_t, std::size_t, std::size_t, poly::Monomial>;

/// Layer i+1 from layer i. A field T with homogeneous coefficients of
/// degree i+2 is determined by G^(c) = dT/du_c in g_i, which must satisfy
/// d_a G^(b) = d_b G^(a); Euler then gives T = sum u_c G^(c) / (i+2).
inline std::vector<VectorField> next_layer(const std::vector<VectorField>& prev, std::size_t n, const VarTablePtr& vars,
                                           int poly_degree) {
  const std::size_t m = prev.size();
  // partial[a][t] = d/du_a of prev[t]
  std::vector<std::vector<VectorField>> partial(n);
  for (std::size_t a = 0; a < n; ++a)
    for (const auto& f : prev) {
      VectorField d(vars);
      for (std::size_t c = 0; c < d.size(); ++c) d[c] = f[c].partial(a + 1);
      partial[a].push_back(std::move(d));
    }
  std::vector<std::vector<std::pair<Key, Rational>>> images;
  images.reserve(n * m);
  for (std::size_t c = 0; c < n; ++c)
    for (std::size_t t = 0; t < m; ++t) {
      std::vector<std::pair<Key, Rational>> img;
      // c = b: +d_a prev[t] at (a, b) for a < b; c = a: -d_b prev[t] at (a, b) for b > a
      for (std::size_t a = 0; a < c; ++a)
        for (std::size_t coord = 0; coord < partial[a][t].size(); ++coord)
          for (const auto& [mono, v] : partial[a][t][coord].terms()) img.emplace_back(Key{a, c, coord, mono}, v);
      for (std::size_t b = c + 1; b < n; ++b)
        for (std::size_t coord = 0; coord < partial[b][t].size(); ++coord)
          for (const auto& [mono, v] : partial[b][t][coord].terms()) img.emplace_back(Key{c, b, coord, mono}, -v);
      images.push_back(std::move(img));
    }
  std::vector<VectorField> out;
  const Rational scale = exact::rational(1, poly_degree);
  for (const auto& kv : exact::kernel_from_images(images)) {
    VectorField T(vars);
    for (const auto& [u, v] : kv) {
      const std::size_t c = u / m, t = u % m;
      T += (v * scale) * (Poly::variable(vars, c + 1) * prev[t]);
    }
    out.push_back(std::move(T));
  }
  return out;
}

}  // namespace detail

/// g_{-1} = V, g_0 = a, g_{i+1} = {T : [T, V] in g_i}. Stops at the first
/// zero layer; throws NotTerminated if degree `cap` is still nonzero.
inline SternbergProlongation sternberg_prolong(const std::vector<Matrix>& a, std::size_t n, int cap,
                                               const std::vector<std::string>& names = {}) {
  SternbergProlongation out;
  out.vars = coordinate_table(names.empty() ? default_names(n) : names);
  std::vector<VectorField> neg;
  for (std::size_t c = 0; c < n; ++c) neg.push_back(VectorField::basis(out.vars, c + 1));
  out.layers.push_back(std::move(neg));
  std::vector<VectorField> zero;
  for (const auto& m : a) zero.push_back(linear_field(m, out.vars));
  out.layers.push_back(std::move(zero));
  for (int i = 1; !out.layers.back().empty(); ++i) {
    if (i > cap) throw NotTerminated(cap, out.layer_dims());
    out.layers.push_back(detail::next_layer(out.layers.back(), n, out.vars, i + 1));
  }
  out.layers.pop_back();  // trailing zero layer
  std::vector<VectorField> basis;
  std::vector<int> degrees;
  for (std::size_t l = 0; l < out.layers.size(); ++l)
    for (const auto& f : out.layers[l]) {
      basis.push_back(f);
      degrees.push_back(static_cast<int>(l) - 1);
    }
  out.algebra = liealg::from_vector_fields(basis, degrees);
  return out;
}

inline SternbergProlongation sternberg_prolong(const GradedMatrixAlgebra& a, int cap) {
  return sternberg_prolong(a.basis(), a.ambient, cap);
}

inline SternbergProlongation sternberg_prolong(const GradedSymbol& sym) {
  return sternberg_prolong(flag_symbol_prolong(sym).basis(), sym.dim(), sym.spec.k() + sym.spec.l(), sym.names);
}

inline SternbergProlongation sternberg_prolong(const TableauSpec& spec) { return sternberg_prolong(build_symbol(spec)); }

/// Degree i of the prolongation by the intersection formula: fields with
/// homogeneous coefficients of degree i+1 all of whose i-th partials lie
/// in a. The ambient basis is (coordinate, monomial) with monomials in
/// descending lexicographic order of exponents.
inline exact::Subspace intersection_layer(const std::vector<Matrix>& a, std::size_t n, int i) {
  if (i < 0) throw std::invalid_argument("intersection_layer: need i >= 0");
  // ambient basis: (coordinate, monomial of degree i+1)
  std::vector<std::vector<int>> monos;
  std::vector<int> cur;
  std::function<void(std::size_t, int)> rec = [&](std::size_t pos, int left) {
    if (pos + 1 == n) {
      cur.push_back(left);
      monos.push_back(cur);
      cur.pop_back();
      return;
    }
    for (int e = left; e >= 0; --e) {
      cur.push_back(e);
      rec(pos + 1, left - e);
      cur.pop_back();
    }
  };
  rec(0, i + 1);
  const std::size_t dim = n * monos.size();

  // a as a subspace of gl(V) entries (row a, column b) <-> u_b d/du_a
  std::vector<Vector> rows;
  for (const auto& m : a) rows.push_back(m.entries());
  const exact::Subspace a_span = exact::Subspace::span(n * n, rows);
  const auto ann = a_span.annihilator().basis_vectors();

  // kernel of all ann(a) o d^alpha at once; equation key (alpha index, annihilator row)
  std::vector<std::vector<std::pair<std::pair<std::size_t, std::size_t>, Rational>>> images(dim);
  std::size_t alpha_index = 0;
  // every multiset alpha of i derivative directions
  std::vector<std::size_t> alpha;
  std::function<void()> each = [&] {
    if (static_cast<int>(alpha.size()) == i) {
      // d^alpha maps the basis field (c, mono) to coef * u^(mono - alpha) d/du_c
      for (std::size_t c = 0; c < n; ++c)
        for (std::size_t j = 0; j < monos.size(); ++j) {
          std::vector<int> e = monos[j];
          Rational coef(1);
          bool ok = true;
          for (auto d : alpha) {
            if (e[d] == 0) {
              ok = false;
              break;
            }
            coef *= e[d];
            --e[d];
          }
          if (!ok) continue;
          std::size_t b = n;
          for (std::size_t t = 0; t < n; ++t)
            if (e[t] == 1) b = t;
          // linear field entry (row c, column b)
          for (std::size_t r = 0; r < ann.size(); ++r)
            if (sgn(ann[r][c * n + b]) != 0)
              images[c * monos.size() + j].emplace_back(std::pair{alpha_index, r}, coef * ann[r][c * n + b]);
        }
      ++alpha_index;
      return;
    }
    for (std::size_t d = alpha.empty() ? 0 : alpha.back(); d < n; ++d) {
      alpha.push_back(d);
      each();
      alpha.pop_back();
    }
  };
  each();
  std::vector<Vector> kernel;
  for (const auto& kv : exact::kernel_from_images(images)) kernel.push_back(exact::to_dense(kv, dim));
  const exact::Subspace result = exact::Subspace::span(dim, kernel);
  return result;
}

}  // namespace mixsym::sternberg

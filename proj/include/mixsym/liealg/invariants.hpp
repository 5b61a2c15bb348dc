#pragma once

#include <mixsym/liealg/lie_algebra.hpp>

#include <map>
#include <string>
#include <utility>
#include <vector>

namespace mixsym::liealg {

struct InvariantTuple {
  std::vector<std::size_t> derived_series;  // dim L, dim [L,L], ... until stable
  std::vector<std::size_t> lower_central;   // dim L, dim [L,L], dim [L,[L,L]], ...
  std::size_t center = 0;
  std::size_t killing_rank = 0;
  std::map<int, std::size_t> graded_dims;  // empty when ungraded

  friend bool operator==(const InvariantTuple&, const InvariantTuple&) = default;
};

namespace detail {

inline std::vector<SparseVec> unit_basis(std::size_t n) {
  std::vector<SparseVec> out;
  for (std::size_t i = 0; i < n; ++i) out.push_back(SparseVec{{i, Rational(1)}});
  return out;
}

/// Reduced echelon basis of span [A, B]. Stops early once the span has
/// dimension `limit`, for callers that know an upper bound.
inline std::vector<SparseVec> bracket_span(const LieAlgebraSC& l, const std::vector<SparseVec>& a,
                                           const std::vector<SparseVec>& b, std::size_t limit) {
  exact::SparseEchelon out(l.dim());
  const bool same = &a == &b;  // then [u, v] for u < v suffices
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = same ? i + 1 : 0; j < b.size(); ++j) {
      if (out.rank() == limit) return out.reduced_rows();
      const SparseVec w = l.bracket(a[i], b[j]);
      if (!w.empty()) out.add_row(w);
    }
  return out.reduced_rows();
}

}  // namespace detail

inline std::vector<std::size_t> derived_series(const LieAlgebraSC& l) {
  std::vector<SparseVec> cur = detail::unit_basis(l.dim());
  std::vector<std::size_t> dims{cur.size()};
  while (!cur.empty()) {
    std::vector<SparseVec> next = detail::bracket_span(l, cur, cur, cur.size());
    if (next.size() == cur.size()) break;
    cur = std::move(next);
    dims.push_back(cur.size());
  }
  return dims;
}

inline std::vector<std::size_t> lower_central_series(const LieAlgebraSC& l) {
  const std::vector<SparseVec> all = detail::unit_basis(l.dim());
  std::vector<SparseVec> cur = all;
  std::vector<std::size_t> dims{cur.size()};
  while (!cur.empty()) {
    std::vector<SparseVec> next = detail::bracket_span(l, all, cur, cur.size());
    if (next.size() == cur.size()) break;
    cur = std::move(next);
    dims.push_back(cur.size());
  }
  return dims;
}

inline std::size_t center_dim(const LieAlgebraSC& l) {
  const std::size_t n = l.dim();
  // unknown v_b; equation (a, e): sum_b c[a][b][e] v_b = 0
  std::vector<std::vector<std::pair<std::pair<std::size_t, std::size_t>, Rational>>> images(n);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b)
      for (const auto& [e, v] : l.bracket_basis(a, b)) images[b].emplace_back(std::pair{a, e}, v);
  return exact::kernel_from_images(images).size();
}

/// K(a,b) = tr(ad_a ad_b) = sum_{c,e} c[a][e][c] c[b][c][e].
inline Matrix killing_form(const LieAlgebraSC& l) {
  const std::size_t n = l.dim();
  Matrix k(n, n);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = a; b < n; ++b) {
      Rational s;
      for (std::size_t e = 0; e < n; ++e)
        for (const auto& [c, v] : l.bracket_basis(a, e)) {
          const Rational w = l.constant(b, c, e);
          if (sgn(w) != 0) s += v * w;
        }
      k(a, b) = s;
      k(b, a) = s;
    }
  return k;
}

inline InvariantTuple invariants(const LieAlgebraSC& l) {
  InvariantTuple t;
  t.derived_series = derived_series(l);
  t.lower_central = lower_central_series(l);
  t.center = center_dim(l);
  t.killing_rank = exact::rank(killing_form(l));
  if (l.graded())
    for (int d : l.degrees()) ++t.graded_dims[d];
  return t;
}

inline std::string to_string(const InvariantTuple& t) {
  auto seq = [](const std::vector<std::size_t>& v) {
    std::string s = "(";
    for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + std::to_string(v[i]);
    return s + ")";
  };
  std::string out = "derived " + seq(t.derived_series) + ", lower central " + seq(t.lower_central) + ", center " +
                    std::to_string(t.center) + ", Killing rank " + std::to_string(t.killing_rank);
  if (!t.graded_dims.empty()) {
    out += ", graded {";
    bool first = true;
    for (const auto& [d, c] : t.graded_dims) {
      out += (first ? "" : ", ") + std::to_string(d) + ":" + std::to_string(c);
      first = false;
    }
    out += "}";
  }
  return out;
}

struct Comparison {
  InvariantTuple first, second;
  std::vector<std::string> differing;  // names of invariants that differ
  bool certified_non_isomorphic() const { return !differing.empty(); }
  std::string verdict() const { return certified_non_isomorphic() ? "certified non-isomorphic" : "inconclusive"; }
};

/// Never claims isomorphism: equal tuples only give "inconclusive". Graded
/// dims are compared only when both algebras carry a grading.
inline Comparison compare(const LieAlgebraSC& a, const LieAlgebraSC& b) {
  Comparison c{invariants(a), invariants(b), {}};
  if (a.dim() != b.dim()) c.differing.push_back("dimension");
  if (c.first.derived_series != c.second.derived_series) c.differing.push_back("derived series");
  if (c.first.lower_central != c.second.lower_central) c.differing.push_back("lower central series");
  if (c.first.center != c.second.center) c.differing.push_back("center");
  if (c.first.killing_rank != c.second.killing_rank) c.differing.push_back("Killing rank");
  return c;
}

}  // namespace mixsym::liealg

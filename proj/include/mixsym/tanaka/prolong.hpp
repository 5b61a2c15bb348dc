#pragma once

#include <mixsym/tanaka/gnla.hpp>

#include <map>
#include <stdexcept>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

namespace mixsym::tanaka {

struct ProlongationError : std::logic_error {
  using std::logic_error::logic_error;
};

/// g(m, g0) with a global basis: the m basis first, then layers 0, 1, ...
/// A non-negative element is stored as its action on the m basis, each
/// image a sparse vector over global indices.
struct GradedProlongation {
  std::size_t m_dim = 0;
  std::vector<int> degrees;                      // per global basis element
  std::vector<std::vector<SparseVec>> action;    // per non-negative element
  std::vector<std::size_t> layer_dims;           // layers 0, 1, ...
  LieAlgebraSC algebra;

  std::size_t dim() const { return degrees.size(); }
  std::map<int, std::size_t> graded_dims() const {
    std::map<int, std::size_t> out;
    for (int d : degrees) ++out[d];
    return out;
  }
};

namespace detail {

class TanakaBuilder {
 public:
  TanakaBuilder(const GradedNilpotent& m, const std::vector<Matrix>& g0) : m_(m), n_(m.dim()) {
    degrees_ = m.degrees();
    for (const auto& phi : g0) {
      std::vector<SparseVec> act(n_);
      for (std::size_t b = 0; b < n_; ++b)
        for (std::size_t a = 0; a < n_; ++a)
          if (sgn(phi(a, b)) != 0) {
            if (m.degrees()[a] != m.degrees()[b]) throw std::invalid_argument("tanaka_prolong: g0 not degree 0");
            act[b].emplace_back(a, phi(a, b));
          }
      add_element(0, std::move(act));
    }
    layer_dims_.push_back(g0.size());
  }

  /// [t, v] for a global basis element t and v in the m basis.
  SparseVec act(std::size_t t, std::size_t v) const {
    if (t < n_) return m_.algebra.bracket_basis(t, v);
    return action_[t - n_][v];
  }

  /// Computes layer `deg` >= 1 and returns its dimension.
  std::size_t add_layer(int deg) {
    // unknown (b, t): coefficient of t in phi(X_b), deg t = deg + deg b
    std::vector<std::pair<std::size_t, std::size_t>> slots;
    for (std::size_t b = 0; b < n_; ++b)
      for (std::size_t t = 0; t < degrees_.size(); ++t)
        if (degrees_[t] == deg + degrees_[b]) slots.emplace_back(b, t);
    using Key = std::tuple<std::size_t, std::size_t, std::size_t>;
    std::vector<std::vector<std::pair<Key, Rational>>> images(slots.size());
    for (std::size_t s = 0; s < slots.size(); ++s) {
      const auto [b, t] = slots[s];
      auto& img = images[s];
      // phi[u,v] - [phi u, v] - [u, phi v] at (u, v, e), u < v
      for (std::size_t u = 0; u < n_; ++u)
        for (std::size_t v = u + 1; v < n_; ++v)
          for (const auto& [w, c] : m_.algebra.bracket_basis(u, v))
            if (w == b) img.emplace_back(Key{u, v, t}, c);
      for (std::size_t v = 0; v < n_; ++v) {
        if (v == b) continue;
        for (const auto& [e, c] : act(t, v)) {
          if (b < v)
            img.emplace_back(Key{b, v, e}, -c);
          else
            img.emplace_back(Key{v, b, e}, c);
        }
      }
    }
    const auto ker = exact::kernel_from_images(images);
    for (const auto& kv : ker) {
      std::vector<SparseVec> a(n_);
      for (const auto& [s, c] : kv) a[slots[s].first].emplace_back(slots[s].second, c);
      for (auto& v : a) v = exact::normalize(std::move(v));
      add_element(deg, std::move(a));
    }
    layer_dims_.push_back(ker.size());
    return ker.size();
  }

  GradedProlongation finish() {
    const std::size_t total = degrees_.size();
    LieAlgebraSC::Table t(total, std::vector<SparseVec>(total));
    for (std::size_t u = 0; u < n_; ++u)
      for (std::size_t v = 0; v < n_; ++v) t[u][v] = m_.algebra.bracket_basis(u, v);
    for (std::size_t p = n_; p < total; ++p)
      for (std::size_t v = 0; v < n_; ++v) {
        t[p][v] = action_[p - n_][v];
        t[v][p] = negate(t[p][v]);
      }
    // non-negative pairs by increasing total degree; [p,q] only needs
    // brackets [p, w] with deg w < deg q
    std::vector<std::tuple<int, std::size_t, std::size_t>> order;
    for (std::size_t p = n_; p < total; ++p)
      for (std::size_t q = p + 1; q < total; ++q) order.emplace_back(degrees_[p] + degrees_[q], p, q);
    std::sort(order.begin(), order.end());
    const int top = static_cast<int>(layer_dims_.size()) - 1;
    for (const auto& [d, p, q] : order) {
      // [[p,q], v] = [p, [q,v]] - [q, [p,v]]
      std::vector<SparseVec> target(n_);
      for (std::size_t v = 0; v < n_; ++v)
        target[v] = exact::add_scaled(apply(t, p, t[q][v]), Rational(-1), apply(t, q, t[p][v]));
      const SparseVec coeffs = solve_layer(d, top, target);
      t[p][q] = coeffs;
      t[q][p] = negate(coeffs);
    }
    GradedProlongation out;
    out.m_dim = n_;
    out.degrees = degrees_;
    out.action = action_;
    out.layer_dims = layer_dims_;
    out.algebra = LieAlgebraSC(std::move(t), degrees_);
    return out;
  }

 private:
  static SparseVec negate(SparseVec v) {
    for (auto& e : v) e.second = -e.second;
    return v;
  }

  /// [p, w] for w a sparse vector over global indices, using only filled
  /// table entries.
  SparseVec apply(const LieAlgebraSC::Table& t, std::size_t p, const SparseVec& w) const {
    SparseVec out;
    for (const auto& [i, c] : w) out = exact::add_scaled(out, c, t[p][i]);
    return out;
  }

  /// The unique element of layer d acting on m as `target`.
  SparseVec solve_layer(int d, int top, const std::vector<SparseVec>& target) const {
    bool zero = true;
    for (const auto& v : target) zero = zero && v.empty();
    if (d > top) {
      if (!zero) throw ProlongationError("bracket lands above the last computed layer");
      return {};
    }
    if (zero) return {};
    using Key = std::pair<std::size_t, std::size_t>;
    std::vector<std::size_t> layer;
    std::vector<std::vector<std::pair<Key, Rational>>> gens;
    for (std::size_t p = n_; p < degrees_.size(); ++p) {
      if (degrees_[p] != d) continue;
      layer.push_back(p);
      std::vector<std::pair<Key, Rational>> g;
      for (std::size_t v = 0; v < n_; ++v)
        for (const auto& [e, c] : action_[p - n_][v]) g.emplace_back(Key{v, e}, c);
      gens.push_back(std::move(g));
    }
    const exact::SpanSolver<Key> span(gens);
    if (!span.generators_independent()) throw ProlongationError("layer elements act dependently on m");
    std::vector<std::pair<Key, Rational>> tv;
    for (std::size_t v = 0; v < n_; ++v)
      for (const auto& [e, c] : target[v]) tv.emplace_back(Key{v, e}, c);
    const auto coords = span.solve(tv);
    if (!coords) throw ProlongationError("bracket of non-negative elements is not in the prolongation");
    SparseVec out;
    for (std::size_t i = 0; i < layer.size(); ++i)
      if (sgn((*coords)[i]) != 0) out.emplace_back(layer[i], (*coords)[i]);
    return out;
  }

  void add_element(int deg, std::vector<SparseVec> act) {
    degrees_.push_back(deg);
    action_.push_back(std::move(act));
  }

  const GradedNilpotent& m_;
  std::size_t n_;
  std::vector<int> degrees_;
  std::vector<std::vector<SparseVec>> action_;
  std::vector<std::size_t> layer_dims_;
};

}  // namespace detail

/// Universal prolongation of (m, g0) with the full negative part in the
/// derivation condition. Stops after depth-many consecutive zero layers.
inline GradedProlongation tanaka_prolong(const GradedNilpotent& m, const std::vector<Matrix>& g0, int max_degree = 64) {
  detail::TanakaBuilder b(m, g0);
  int zeros = g0.empty() ? 1 : 0;
  for (int deg = 1; zeros < m.depth; ++deg) {
    if (deg > max_degree) throw ProlongationError("no termination up to degree " + std::to_string(max_degree));
    zeros = b.add_layer(deg) == 0 ? zeros + 1 : 0;
  }
  return b.finish();
}

inline GradedProlongation tanaka_prolong(const TableauSpec& spec) {
  const GradedNilpotent m = build_gnla(spec);
  return tanaka_prolong(m, stab_d(m));
}

}  // namespace mixsym::tanaka

#pragma once

#include <mixsym/eds/eds.hpp>
#include <mixsym/exact/sparse.hpp>
#include <mixsym/jet/jet_space.hpp>

#include <algorithm>
#include <array>
#include <cstdint>
#include <functional>
#include <map>
#include <stdexcept>
#include <string>
#include <tuple>
#include <vector>

namespace mixsym::eds {

struct NotStabilized : std::runtime_error {
  NotStabilized(int bound_, std::size_t dim_, std::size_t dim_next_)
      : std::runtime_error("symmetry dimension not stabilized at degree bound " + std::to_string(bound_) + ": " +
                           std::to_string(dim_) + " vs " + std::to_string(dim_next_) + " at bound " +
                           std::to_string(bound_ + 1)),
        bound(bound_),
        dim(dim_),
        dim_next(dim_next_) {}
  int bound;
  std::size_t dim;
  std::size_t dim_next;
};

struct DeterminingResult {
  int degree_bound = 0;
  std::vector<VectorField> basis;
  std::size_t unknowns = 0;
  std::size_t blocks = 0;
};

namespace detail {

using Weight = std::array<int, 3>;

/// Torus weight: x -> (1,0,0), y_i -> (-i,1,0), z_j -> (-j,0,1). X has
/// weight (-1,0,0), so the determining system splits by weight of m d/dc.
inline Weight coord_weight(const JetSpace& chart, std::size_t c) {
  if (c == 0) return {1, 0, 0};
  if (chart.is_y(c)) return {-chart.order_of(c), 1, 0};
  return {-chart.order_of(c), 0, 1};
}

inline Weight monomial_weight(const JetSpace& chart, const poly::Monomial& m) {
  Weight w{0, 0, 0};
  for (std::size_t v = 0; v < chart.dim(); ++v) {
    if (m.e[v] == 0) continue;
    const Weight cw = coord_weight(chart, v);
    for (int i = 0; i < 3; ++i) w[i] += cw[i] * m.e[v];
  }
  return w;
}

/// Calls f(m) for every monomial in `vars` of total degree <= bound.
inline void for_each_monomial(const std::vector<std::size_t>& vars, int bound,
                              const std::function<void(const poly::Monomial&)>& f) {
  poly::Monomial m;
  std::function<void(std::size_t, int)> rec = [&](std::size_t pos, int left) {
    if (pos == vars.size()) {
      f(m);
      return;
    }
    for (int e = 0; e <= left; ++e) {
      m.e[vars[pos]] = static_cast<std::int8_t>(e);
      rec(pos + 1, left - e);
    }
    m.e[vars[pos]] = 0;
  };
  rec(0, bound);
}

/// The determining system with the F-direction coefficients eliminated.
/// F-invariance makes P_c (c outside F) a function of non-F coordinates
/// only; the E-condition then defines every F coefficient by
///   P_{t_{i+1}} = X(P_{t_i}) - t_{i+1} X(P_x),
/// and what remains are the E-conditions at non-F successors, X(P_top) = 0
/// for the top coordinates, and the degree bound on derived coefficients.
class Determining {
 public:
  using Key = std::tuple<int, std::size_t, poly::Monomial>;

  Determining(const ShiftEDS& eds, int bound) : eds_(eds), bound_(bound) {
    const auto& ch = eds.chart();
    std::vector<std::size_t> ty, tz;
    for (int i = 0; i < eds.spec().k(); ++i) ty.push_back(ch.y(i));
    for (int j = 0; j < eds.spec().l(); ++j) tz.push_back(ch.z(j));
    towers_ = {ty, tz};
    for (std::size_t v = 0; v < ch.dim(); ++v) succ_.push_back(v == 0 ? ch.dim() : ch.successor(v));
  }

  template <class C>
  using Terms = std::vector<std::pair<poly::Monomial, C>>;

  /// Equation-mode total derivative on a sorted term list.
  template <class C>
  Terms<C> X(const Terms<C>& p) const {
    const std::size_t n = eds_.chart().dim();
    Terms<C> out;
    for (const auto& [m, c] : p) {
      if (m.e[0] != 0) {
        poly::Monomial d = m;
        --d.e[0];
        out.emplace_back(d, scale(c, m.e[0]));
      }
      for (std::size_t v = 1; v < n; ++v) {
        if (m.e[v] == 0 || succ_[v] == n) continue;
        poly::Monomial d = m;
        --d.e[v];
        ++d.e[succ_[v]];
        out.emplace_back(d, scale(c, m.e[v]));
      }
    }
    canonicalize(out);
    return out;
  }

  /// Fills the F coefficients from the non-F ones.
  template <class C>
  void derive(std::vector<Terms<C>>& p) const {
    const Terms<C> dx = X(p[0]);
    for (const auto& t : towers_)
      for (std::size_t i = 0; i + 1 < t.size(); ++i)
        if (eds_.in_f(t[i + 1])) p[t[i + 1]] = prolong_step(Terms<C>{}, p[t[i]], t[i + 1], dx);
  }

  template <class C, class Emit>
  void residuals(const std::vector<Terms<C>>& p, Emit&& emit) const {
    const Terms<C> dx = X(p[0]);
    for (const auto& t : towers_) {
      for (std::size_t i = 0; i + 1 < t.size(); ++i) {
        if (eds_.in_f(t[i + 1])) continue;
        Terms<C> r = prolong_step(p[t[i + 1]], p[t[i]], t[i + 1], dx, true);
        if (!r.empty()) emit(0, t[i + 1], r);
      }
      Terms<C> top = X(p[t.back()]);
      if (!top.empty()) emit(1, t.back(), top);
    }
    for (auto c : eds_.f_coords()) {
      Terms<C> excess;
      for (const auto& term : p[c])
        if (term.first.degree() > bound_) excess.push_back(term);
      if (!excess.empty()) emit(2, c, excess);
    }
  }

  DeterminingResult solve() const {
    const auto& ch = eds_.chart();
    const auto nonf = eds_.non_f_coords();
    std::map<Weight, std::vector<std::pair<std::size_t, poly::Monomial>>> blocks;
    std::size_t unknowns = 0;
    for_each_monomial(nonf, bound_, [&](const poly::Monomial& m) {
      const Weight wm = monomial_weight(ch, m);
      for (auto c : nonf) {
        const Weight wc = coord_weight(ch, c);
        blocks[{wm[0] - wc[0], wm[1] - wc[1], wm[2] - wc[2]}].emplace_back(c, m);
        ++unknowns;
      }
    });

    DeterminingResult res;
    res.degree_bound = bound_;
    res.unknowns = unknowns;
    res.blocks = blocks.size();
    for (const auto& [w, block] : blocks) {
      // images of single monomials have integer coefficients
      std::vector<std::vector<std::pair<Key, Rational>>> images;
      images.reserve(block.size());
      for (const auto& [c, m] : block) {
        std::vector<Terms<std::int64_t>> p(ch.dim());
        p[c].emplace_back(m, 1);
        derive(p);
        std::vector<std::pair<Key, Rational>> img;
        residuals(p, [&](int kind, std::size_t coord, const Terms<std::int64_t>& r) {
          for (const auto& [mm, coef] : r) img.emplace_back(Key{kind, coord, mm}, Rational(coef));
        });
        images.push_back(std::move(img));
      }
      for (const auto& kv : exact::kernel_from_images(images)) {
        std::vector<Terms<Rational>> p(ch.dim());
        for (const auto& [u, coef] : kv) {
          const auto& [c, m] = block[u];
          p[c].emplace_back(m, coef);
        }
        for (auto& t : p) canonicalize(t);
        derive(p);
        VectorField v(ch);
        for (std::size_t c = 0; c < ch.dim(); ++c) v[c] = Poly::from_terms(ch.vars(), std::move(p[c]));
        res.basis.push_back(std::move(v));
      }
    }
    return res;
  }

 private:
  static Rational scale(const Rational& c, int k) { return c * k; }
  static std::int64_t scale(std::int64_t c, int k) {
    std::int64_t out;
    if (__builtin_mul_overflow(c, static_cast<std::int64_t>(k), &out))
      throw std::overflow_error("determining: integer coefficient overflow");
    return out;
  }
  static void accumulate(Rational& a, const Rational& b) { a += b; }
  static void accumulate(std::int64_t& a, std::int64_t b) {
    if (__builtin_add_overflow(a, b, &a)) throw std::overflow_error("determining: integer coefficient overflow");
  }
  static bool is_zero(const Rational& c) { return sgn(c) == 0; }
  static bool is_zero(std::int64_t c) { return c == 0; }

  /// Sorts by monomial, merges equal monomials and drops zeros.
  template <class C>
  static void canonicalize(Terms<C>& t) {
    std::sort(t.begin(), t.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
    std::size_t out = 0;
    for (std::size_t i = 0; i < t.size();) {
      std::size_t j = i + 1;
      while (j < t.size() && t[j].first == t[i].first) accumulate(t[i].second, t[j++].second);
      if (!is_zero(t[i].second)) {
        if (out != i) t[out] = std::move(t[i]);
        ++out;
      }
      i = j;
    }
    t.resize(out);
  }

  /// X(prev) - u dx, or with `residual` the difference cur - (X(prev) - u dx).
  template <class C>
  Terms<C> prolong_step(const Terms<C>& cur, const Terms<C>& prev, std::size_t u, const Terms<C>& dx,
                        bool residual = false) const {
    Terms<C> out = X(prev);
    for (const auto& [m, c] : dx) {
      poly::Monomial mu = m;
      ++mu.e[u];
      out.emplace_back(mu, scale(c, -1));
    }
    if (residual) {
      for (auto& t : out) t.second = scale(t.second, -1);
      out.insert(out.end(), cur.begin(), cur.end());
    }
    canonicalize(out);
    return out;
  }

  const ShiftEDS& eds_;
  int bound_;
  std::vector<std::vector<std::size_t>> towers_;
  std::vector<std::size_t> succ_;
};

}  // namespace detail

inline int default_degree_bound(const TableauSpec& spec) { return spec.k() + spec.l(); }

/// Solves at `degree_bound` and re-solves at degree_bound + 1; throws
/// NotStabilized when the dimensions differ.
inline DeterminingResult solve_determining(const TableauSpec& spec, int degree_bound) {
  if (degree_bound < 1) throw std::invalid_argument("degree bound must be >= 1");
  const ShiftEDS eds(spec);
  DeterminingResult r = detail::Determining(eds, degree_bound).solve();
  const std::size_t next = detail::Determining(eds, degree_bound + 1).solve().basis.size();
  if (next != r.basis.size()) throw NotStabilized(degree_bound, r.basis.size(), next);
  return r;
}

inline DeterminingResult solve_determining(const TableauSpec& spec) {
  return solve_determining(spec, default_degree_bound(spec));
}

/// Raises the bound from `start` until two consecutive bounds agree.
inline DeterminingResult solve_determining_auto(const TableauSpec& spec, int start, int max_bound) {
  const ShiftEDS eds(spec);
  DeterminingResult cur = detail::Determining(eds, start).solve();
  std::size_t prev = cur.basis.size();
  for (int b = start; b < max_bound; ++b) {
    DeterminingResult next = detail::Determining(eds, b + 1).solve();
    if (next.basis.size() == cur.basis.size()) return cur;
    prev = cur.basis.size();
    cur = std::move(next);
  }
  throw NotStabilized(max_bound - 1, prev, cur.basis.size());
}

}  // namespace mixsym::eds

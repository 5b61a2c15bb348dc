#pragma once

#include <mixsym/exact/sparse.hpp>
#include <mixsym/jet/gfun.hpp>
#include <mixsym/jet/jet_space.hpp>

#include <map>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace mixsym::jet {

/// g_{i,j} - (x/i) g'_{i,j} + j g_{i-1,j+1}, which must vanish.
inline Poly identity_a_residual(int i, int j) {
  if (i < 1 || j < 1) throw std::invalid_argument("identity (a) needs i, j >= 1");
  JetSpace s(-1, i);
  return g_function(i, j, 0, s) - s.var(0) * g_function(i, j, 1, s) * exact::rational(1, i) +
         Rational(j) * g_function(i - 1, j + 1, 0, s);
}

struct LemmaResult {
  int r = 0, p = 0, q = 0;
  std::size_t kernel_dim = 0;
  std::size_t expected_dim = 0;  // rank of the claimed spanning set
  bool span_equal = false;
  bool ok() const { return span_equal && kernel_dim == expected_dim; }
};

namespace detail {

/// Solutions f(x, z_0..z_{r-q}) of D^{p+1} f = 0 with D truncated at
/// z_{r+1} (z_{r+2} = 0), over monomials of x-degree <= p(r+2) and degree
/// <= p in each z. D preserves z-degree and lowers the weight
/// deg x - sum j*deg z_j by one, so the system splits by that pair.
inline std::vector<Poly> lemma_kernel(const JetSpace& s, int r, int p, int q) {
  const int top = r - q;  // highest z the solution may involve
  std::map<std::pair<int, int>, std::vector<poly::Monomial>> blocks;
  poly::Monomial m;
  std::function<void(int)> rec = [&](int j) {
    if (j > top) {
      int w = m.e[0], zd = 0;
      for (int t = 0; t <= top; ++t) {
        w -= t * m.e[s.z(t)];
        zd += m.e[s.z(t)];
      }
      blocks[{w, zd}].push_back(m);
      return;
    }
    for (int e = 0; e <= p; ++e) {
      m.e[s.z(j)] = static_cast<std::int8_t>(e);
      rec(j + 1);
    }
    m.e[s.z(j)] = 0;
  };
  for (int a = 0; a <= p * (r + 2); ++a) {
    m.e[0] = static_cast<std::int8_t>(a);
    rec(0);
  }

  std::vector<Poly> out;
  for (const auto& [key, block] : blocks) {
    std::vector<std::vector<std::pair<poly::Monomial, Rational>>> images;
    for (const auto& mono : block) {
      Poly d = Poly::monomial(s.vars(), mono, Rational(1));
      for (int t = 0; t <= p; ++t) d = total_derivative(d, s, DerivMode::Equation);
      std::vector<std::pair<poly::Monomial, Rational>> img;
      for (const auto& [mm, c] : d.terms()) img.emplace_back(mm, c);
      images.push_back(std::move(img));
    }
    for (const auto& kv : exact::kernel_from_images(images)) {
      Poly f = s.zero();
      for (const auto& [u, c] : kv) f.add_scaled(c, Poly::monomial(s.vars(), block[u], Rational(1)));
      out.push_back(std::move(f));
    }
  }
  return out;
}

inline std::vector<std::pair<poly::Monomial, Rational>> entries(const Poly& f) {
  std::vector<std::pair<poly::Monomial, Rational>> out;
  for (const auto& [m, c] : f.terms()) out.emplace_back(m, c);
  return out;
}

inline LemmaResult compare_spans(int r, int p, int q, const std::vector<Poly>& kernel, const std::vector<Poly>& claimed) {
  std::vector<std::vector<std::pair<poly::Monomial, Rational>>> kv, cv;
  for (const auto& f : kernel) kv.push_back(entries(f));
  for (const auto& f : claimed) cv.push_back(entries(f));
  exact::SpanSolver<poly::Monomial> ks(kv), cs(cv);
  LemmaResult res;
  res.r = r;
  res.p = p;
  res.q = q;
  res.kernel_dim = ks.rank();
  res.expected_dim = cs.rank();
  res.span_equal = ks.rank() == cs.rank();
  for (const auto& f : claimed)
    if (res.span_equal && !ks.solve(entries(f))) res.span_equal = false;
  for (const auto& f : kernel)
    if (res.span_equal && !cs.solve(entries(f))) res.span_equal = false;
  return res;
}

}  // namespace detail

/// Part (b): D^2 f = 0, df/dz_{r+1} = 0 is solved by 1, x, g^{(s)}_{r,2}.
inline LemmaResult lemma_part_b(int r) {
  if (r < 0) throw std::invalid_argument("lemma: need r >= 0");
  JetSpace s(-1, r + 1);
  std::vector<Poly> w{s.constant(1), s.var(0)};
  for (int t = 0; t <= r; ++t) w.push_back(g_function(r, 2, t, s));
  return detail::compare_spans(r, 1, 0, detail::lemma_kernel(s, r, 1, 0), w);
}

/// Part (c): D^{p+1} f = 0, df/dz_{r+1} = 0 is solved by products of p
/// elements of the part (b) space.
inline LemmaResult lemma_part_c(int r, int p) {
  if (r < 0 || p < 1) throw std::invalid_argument("lemma: need r >= 0, p >= 1");
  JetSpace s(-1, r + 1);
  std::vector<Poly> w{s.constant(1), s.var(0)};
  for (int t = 0; t <= r; ++t) w.push_back(g_function(r, 2, t, s));
  std::vector<Poly> prods;
  std::vector<std::size_t> idx;
  std::function<void()> rec = [&] {
    if (static_cast<int>(idx.size()) == p) {
      Poly f = s.constant(1);
      for (auto i : idx) f *= w[i];
      prods.push_back(std::move(f));
      return;
    }
    for (std::size_t i = idx.empty() ? 0 : idx.back(); i < w.size(); ++i) {
      idx.push_back(i);
      rec();
      idx.pop_back();
    }
  };
  rec();
  return detail::compare_spans(r, p, 0, detail::lemma_kernel(s, r, p, 0), prods);
}

/// Part (d): D^{p+1} f = 0 and f free of z_{r+1-q}..z_{r+1} is solved by
/// x^i g^{(s1)}_{r-q,q+2} ... g^{(sj)}_{r-q,q+2} with i + (q+1)j <= p.
inline LemmaResult lemma_part_d(int r, int p, int q) {
  if (p < 1 || q < 0 || r < q) throw std::invalid_argument("lemma: need p >= 1, 0 <= q <= r");
  JetSpace s(-1, r + 1);
  std::vector<Poly> claimed;
  std::vector<int> ss;
  std::function<void(int)> rec = [&](int j) {
    if (static_cast<int>(ss.size()) == j) {
      Poly prod = s.constant(1);
      for (int t : ss) prod *= g_function(r - q, q + 2, t, s);
      for (int i = 0; i + (q + 1) * j <= p; ++i) claimed.push_back(s.var(0).pow(i) * prod);
      return;
    }
    for (int t = ss.empty() ? 0 : ss.back(); t <= r - q; ++t) {
      ss.push_back(t);
      rec(j);
      ss.pop_back();
    }
  };
  for (int j = 0; (q + 1) * j <= p; ++j) rec(j);
  return detail::compare_spans(r, p, q, detail::lemma_kernel(s, r, p, q), claimed);
}

}  // namespace mixsym::jet

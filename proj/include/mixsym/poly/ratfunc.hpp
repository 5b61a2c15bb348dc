#pragma once

#include <mixsym/poly/poly.hpp>

#include <cstddef>
#include <stdexcept>
#include <vector>

namespace mixsym::poly {

/// Quotient of polynomials; not reduced, equality by cross-multiplication.
class RatFunc {
 public:
  RatFunc() = default;
  explicit RatFunc(Poly num) : num_(std::move(num)), den_(num_.vars(), Rational(1)) {}
  RatFunc(Poly num, Poly den) : num_(std::move(num)), den_(std::move(den)) {
    if (den_.is_zero()) throw std::domain_error("RatFunc: zero denominator");
  }

  const Poly& num() const { return num_; }
  const Poly& den() const { return den_; }
  bool is_zero() const { return num_.is_zero(); }

  friend RatFunc operator+(const RatFunc& a, const RatFunc& b) {
    if (a.den_ == b.den_) return {a.num_ + b.num_, a.den_};
    return {a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_};
  }
  friend RatFunc operator-(const RatFunc& a, const RatFunc& b) {
    if (a.den_ == b.den_) return {a.num_ - b.num_, a.den_};
    return {a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_};
  }
  friend RatFunc operator*(const RatFunc& a, const RatFunc& b) { return {a.num_ * b.num_, a.den_ * b.den_}; }
  friend RatFunc operator/(const RatFunc& a, const RatFunc& b) {
    if (b.is_zero()) throw std::domain_error("RatFunc: division by zero");
    return {a.num_ * b.den_, a.den_ * b.num_};
  }
  friend bool operator==(const RatFunc& a, const RatFunc& b) { return a.num_ * b.den_ == b.num_ * a.den_; }

 private:
  Poly num_;
  Poly den_;
};

using PolyMatrix = std::vector<std::vector<Poly>>;

/// Divides out integer content and the common monomial factor, then makes
/// the first nonzero entry's leading coefficient positive.
inline void clear_content(std::vector<Poly>& v) {
  bool any = false;
  Rational g;
  Monomial mono;
  for (const auto& p : v) {
    if (p.is_zero()) continue;
    const Rational c = p.content();
    const Monomial m = p.monomial_content();
    if (!any) {
      g = c;
      mono = m;
      any = true;
      continue;
    }
    mpz_class num, den;
    mpz_gcd(num.get_mpz_t(), g.get_num_mpz_t(), c.get_num_mpz_t());
    mpz_lcm(den.get_mpz_t(), g.get_den_mpz_t(), c.get_den_mpz_t());
    g = Rational(num, den);
    g.canonicalize();
    for (std::size_t i = 0; i < kMaxVars; ++i) mono.e[i] = std::min(mono.e[i], m.e[i]);
  }
  if (!any) return;
  Rational scale = 1 / g;
  for (const auto& p : v)
    if (!p.is_zero()) {
      if (sgn(p.leading_coefficient()) < 0) scale = -scale;
      break;
    }
  for (auto& p : v)
    if (!p.is_zero()) p = p.divide_monomial(mono) * scale;
}

/// Kernel of a polynomial matrix over the field of rational functions.
/// Fraction-free Gauss-Jordan elimination; each basis vector is cleared to
/// polynomial entries, reduced by common factors found among the pivots,
/// and verified by M*v == 0.
inline std::vector<std::vector<Poly>> ratfunc_kernel(const PolyMatrix& m, std::size_t cols) {
  for (const auto& row : m)
    if (row.size() != cols) throw std::invalid_argument("ratfunc_kernel: ragged matrix");
  PolyMatrix a = m;
  std::vector<std::size_t> pivot_col;  // per reduced row
  std::size_t lead = 0;
  for (std::size_t c = 0; c < cols && lead < a.size(); ++c) {
    std::size_t best = a.size();
    for (std::size_t r = lead; r < a.size(); ++r) {
      if (a[r][c].is_zero()) continue;
      if (best == a.size() || a[r][c].size() < a[best][c].size()) best = r;
    }
    if (best == a.size()) continue;
    std::swap(a[best], a[lead]);
    for (std::size_t r = 0; r < a.size(); ++r) {
      if (r == lead || a[r][c].is_zero()) continue;
      const Poly f = a[r][c];
      const Poly p = a[lead][c];
      for (std::size_t j = 0; j < cols; ++j) a[r][j] = p * a[r][j] - f * a[lead][j];
      clear_content(a[r]);
    }
    clear_content(a[lead]);
    pivot_col.push_back(c);
    ++lead;
  }
  std::vector<bool> is_pivot(cols, false);
  for (auto c : pivot_col) is_pivot[c] = true;
  const VarTablePtr vars = [&]() -> VarTablePtr {
    for (const auto& row : m)
      for (const auto& p : row)
        if (p.vars()) return p.vars();
    return nullptr;
  }();

  std::vector<std::vector<Poly>> basis;
  for (std::size_t f = 0; f < cols; ++f) {
    if (is_pivot[f]) continue;
    // Row r reads piv_r * v_{c_r} + a[r][f] * v_f = 0 once the other free
    // entries are zero.
    Poly prod(vars, Rational(1));
    for (std::size_t r = 0; r < pivot_col.size(); ++r) prod *= a[r][pivot_col[r]];
    std::vector<Poly> v(cols, Poly(vars));
    v[f] = prod;
    for (std::size_t r = 0; r < pivot_col.size(); ++r) {
      Poly others(vars, Rational(1));
      for (std::size_t q = 0; q < pivot_col.size(); ++q)
        if (q != r) others *= a[q][pivot_col[q]];
      v[pivot_col[r]] = -(a[r][f] * others);
    }
    clear_content(v);
    for (std::size_t r = 0; r < pivot_col.size(); ++r) {
      const Poly& piv = a[r][pivot_col[r]];
      if (piv.is_constant()) continue;
      // remove each pivot factor while it divides every entry
      for (;;) {
        std::vector<Poly> q;
        bool ok = true;
        for (const auto& e : v) {
          if (e.is_zero()) {
            q.push_back(e);
            continue;
          }
          try {
            q.push_back(e.divide_exact(piv));
          } catch (const std::domain_error&) {
            ok = false;
            break;
          }
        }
        if (!ok) break;
        v = std::move(q);
        clear_content(v);
      }
    }
    for (const auto& row : m) {
      Poly s(vars);
      for (std::size_t j = 0; j < cols; ++j) s += row[j] * v[j];
      if (!s.is_zero()) throw std::logic_error("ratfunc_kernel: kernel vector failed verification");
    }
    basis.push_back(std::move(v));
  }
  return basis;
}

}  // namespace mixsym::poly

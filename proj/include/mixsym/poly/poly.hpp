#pragma once

#include <mixsym/exact/rational.hpp>

#include <algorithm>
#include <array>
#include <compare>
#include <cstdlib>
#include <cstdint>
#include <limits>
#include <map>
#include <memory>
#include <numeric>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

namespace mixsym::poly {

using exact::Rational;

inline constexpr std::size_t kMaxVars = 24;

/// Ordered coordinate names. Index 0 is always x, the only variable allowed
/// a negative exponent.
class VarTable {
 public:
  explicit VarTable(std::vector<std::string> names) : names_(std::move(names)) {
    if (names_.empty() || names_[0] != "x") throw std::invalid_argument("VarTable: first variable must be x");
    if (names_.size() > kMaxVars) throw std::invalid_argument("VarTable: too many variables");
    for (std::size_t i = 0; i < names_.size(); ++i)
      if (!index_.emplace(names_[i], i).second) throw std::invalid_argument("VarTable: duplicate name " + names_[i]);
  }

  std::size_t size() const { return names_.size(); }
  const std::string& name(std::size_t i) const { return names_.at(i); }
  const std::vector<std::string>& names() const { return names_; }
  bool has(const std::string& n) const { return index_.count(n) != 0; }
  std::size_t index(const std::string& n) const {
    auto it = index_.find(n);
    if (it == index_.end()) throw std::invalid_argument("unknown variable: " + n);
    return it->second;
  }

  friend bool operator==(const VarTable& a, const VarTable& b) { return a.names_ == b.names_; }

 private:
  std::vector<std::string> names_;
  std::unordered_map<std::string, std::size_t> index_;
};

using VarTablePtr = std::shared_ptr<const VarTable>;

inline VarTablePtr make_vartable(std::vector<std::string> names) {
  return std::make_shared<const VarTable>(std::move(names));
}

/// Exponent vector; unused trailing slots are zero.
struct Monomial {
  std::array<std::int8_t, kMaxVars> e{};

  int degree() const {
    int d = 0;
    for (auto v : e) d += v;
    return d;
  }
  Monomial operator*(const Monomial& o) const {
    Monomial m;
    for (std::size_t i = 0; i < kMaxVars; ++i) {
      const int s = e[i] + o.e[i];
      if (s > 127 || s < -128) throw std::overflow_error("Monomial: exponent overflow");
      m.e[i] = static_cast<std::int8_t>(s);
    }
    return m;
  }
  bool divides(const Monomial& o) const {
    for (std::size_t i = 0; i < kMaxVars; ++i)
      if (e[i] > o.e[i]) return false;
    return true;
  }
  friend bool operator==(const Monomial&, const Monomial&) = default;
  friend auto operator<=>(const Monomial&, const Monomial&) = default;
};

/// Graded lexicographic order with x most significant; true when a > b.
inline bool grlex_greater(const Monomial& a, const Monomial& b) {
  const int da = a.degree(), db = b.degree();
  if (da != db) return da > db;
  return a.e > b.e;
}

struct GrlexGreater {
  bool operator()(const Monomial& a, const Monomial& b) const { return grlex_greater(a, b); }
};

struct MonomialHash {
  std::size_t operator()(const Monomial& m) const {
    std::size_t h = 1469598103934665603ull;
    for (auto v : m.e) h = (h ^ static_cast<std::uint8_t>(v)) * 1099511628211ull;
    return h;
  }
};

using Term = std::pair<Monomial, Rational>;

/// Sparse polynomial, Laurent in x. Terms are kept sorted by descending
/// grlex with no zero coefficients, so structural equality is equality.
class Poly {
 public:
  Poly() = default;
  explicit Poly(VarTablePtr vars) : vars_(std::move(vars)) {}
  Poly(VarTablePtr vars, const Rational& c) : vars_(std::move(vars)) {
    if (sgn(c) != 0) terms_.emplace_back(Monomial{}, c);
  }

  static Poly variable(const VarTablePtr& vars, std::size_t i, int power = 1) {
    if (i >= vars->size()) throw std::out_of_range("Poly::variable: index out of range");
    if (i != 0 && power < 0) throw std::domain_error("negative exponent outside x");
    Poly p(vars);
    Monomial m;
    m.e[i] = static_cast<std::int8_t>(power);
    p.terms_.emplace_back(m, Rational(1));
    return p;
  }
  static Poly variable(const VarTablePtr& vars, const std::string& name, int power = 1) {
    return variable(vars, vars->index(name), power);
  }
  static Poly monomial(const VarTablePtr& vars, const Monomial& m, const Rational& c) {
    for (std::size_t i = 1; i < kMaxVars; ++i)
      if (m.e[i] < 0) throw std::domain_error("negative exponent outside x");
    Poly p(vars);
    if (sgn(c) != 0) p.terms_.emplace_back(m, c);
    return p;
  }
  /// Builds from arbitrary terms: sorts, merges and drops zeros.
  static Poly from_terms(const VarTablePtr& vars, std::vector<Term> terms) {
    Poly p(vars);
    std::sort(terms.begin(), terms.end(), [](const Term& a, const Term& b) { return grlex_greater(a.first, b.first); });
    for (auto& t : terms) {
      if (!p.terms_.empty() && p.terms_.back().first == t.first)
        p.terms_.back().second += t.second;
      else
        p.terms_.push_back(std::move(t));
      if (sgn(p.terms_.back().second) == 0) p.terms_.pop_back();
    }
    return p;
  }

  const VarTablePtr& vars() const { return vars_; }
  const std::vector<Term>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }

  bool is_constant() const { return terms_.empty() || (terms_.size() == 1 && terms_[0].first == Monomial{}); }
  Rational constant_term() const {
    if (!terms_.empty() && terms_.back().first == Monomial{}) return terms_.back().second;
    return Rational(0);
  }

  /// Maximum total degree; -1 for the zero polynomial is avoided by callers.
  int degree() const { return terms_.empty() ? -1 : terms_.front().first.degree(); }
  int degree_in(std::size_t var) const {
    int d = std::numeric_limits<int>::min();
    for (const auto& [m, c] : terms_) d = std::max<int>(d, m.e[var]);
    return terms_.empty() ? 0 : d;
  }
  int min_degree_in(std::size_t var) const {
    int d = std::numeric_limits<int>::max();
    for (const auto& [m, c] : terms_) d = std::min<int>(d, m.e[var]);
    return terms_.empty() ? 0 : d;
  }
  bool depends_on(std::size_t var) const {
    for (const auto& [m, c] : terms_)
      if (m.e[var] != 0) return true;
    return false;
  }
  bool has_pole() const { return !terms_.empty() && min_degree_in(0) < 0; }

  Rational coefficient(const Monomial& m) const {
    for (const auto& [mm, c] : terms_)
      if (mm == m) return c;
    return Rational(0);
  }
  const Rational& leading_coefficient() const { return terms_.at(0).second; }

  Poly operator-() const {
    Poly p = *this;
    for (auto& t : p.terms_) t.second = -t.second;
    return p;
  }

  Poly& operator+=(const Poly& o) {
    adopt_vars(o);
    terms_ = merge(terms_, o.terms_, Rational(1));
    return *this;
  }
  Poly& operator-=(const Poly& o) {
    adopt_vars(o);
    terms_ = merge(terms_, o.terms_, Rational(-1));
    return *this;
  }
  Poly& operator*=(const Rational& s) {
    if (sgn(s) == 0) terms_.clear();
    for (auto& t : terms_) t.second *= s;
    return *this;
  }
  /// this += s * o
  Poly& add_scaled(const Rational& s, const Poly& o) {
    adopt_vars(o);
    if (sgn(s) != 0) terms_ = merge(terms_, o.terms_, s);
    return *this;
  }

  friend Poly operator+(Poly a, const Poly& b) { return a += b; }
  friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
  friend Poly operator*(Poly a, const Rational& s) { return a *= s; }
  friend Poly operator*(const Rational& s, Poly a) { return a *= s; }

  friend Poly operator*(const Poly& a, const Poly& b) {
    a.check_vars(b);
    Poly out(a.vars_ ? a.vars_ : b.vars_);
    if (a.is_zero() || b.is_zero()) return out;
    if (b.terms_.size() == 1) return a.times_term(b.terms_[0]);
    if (a.terms_.size() == 1) return b.times_term(a.terms_[0]);
    std::unordered_map<Monomial, Rational, MonomialHash> acc;
    acc.reserve(a.terms_.size() * b.terms_.size());
    for (const auto& [ma, ca] : a.terms_)
      for (const auto& [mb, cb] : b.terms_) acc[ma * mb] += ca * cb;
    std::vector<Term> terms;
    terms.reserve(acc.size());
    for (auto& [m, c] : acc)
      if (sgn(c) != 0) terms.emplace_back(m, std::move(c));
    std::sort(terms.begin(), terms.end(), [](const Term& x, const Term& y) { return grlex_greater(x.first, y.first); });
    out.terms_ = std::move(terms);
    return out;
  }
  Poly& operator*=(const Poly& o) { return *this = *this * o; }

  Poly times_term(const Term& t) const {
    Poly out(vars_);
    if (sgn(t.second) == 0) return out;
    out.terms_.reserve(terms_.size());
    // multiplying by a monomial preserves grlex order
    for (const auto& [m, c] : terms_) out.terms_.emplace_back(m * t.first, c * t.second);
    return out;
  }

  Poly pow(unsigned n) const {
    Poly result(vars_, Rational(1));
    Poly base = *this;
    while (n) {
      if (n & 1u) result *= base;
      n >>= 1u;
      if (n) base *= base;
    }
    return result;
  }

  Poly partial(std::size_t var) const {
    if (!vars_ || var >= vars_->size()) throw std::invalid_argument("partial: unknown variable");
    std::vector<Term> out;
    out.reserve(terms_.size());
    for (const auto& [m, c] : terms_) {
      if (m.e[var] == 0) continue;
      Monomial d = m;
      d.e[var] = static_cast<std::int8_t>(d.e[var] - 1);
      out.emplace_back(d, c * m.e[var]);
    }
    return from_terms(vars_, std::move(out));
  }
  Poly partial(const std::string& name) const {
    if (!vars_) throw std::invalid_argument("partial: polynomial has no variable table");
    return partial(vars_->index(name));
  }

  /// Sets var = 0.
  Poly substitute_zero(std::size_t var) const {
    std::vector<Term> out;
    for (const auto& [m, c] : terms_) {
      if (m.e[var] < 0) throw std::domain_error("substitute_zero: pole at x = 0");
      if (m.e[var] == 0) out.emplace_back(m, c);
    }
    Poly p(vars_);
    p.terms_ = std::move(out);  // dropping terms keeps the order
    return p;
  }

  /// Value at a point given as one rational per variable.
  Rational evaluate(const std::vector<Rational>& point) const {
    Rational sum;
    for (const auto& [m, c] : terms_) {
      Rational t = c;
      for (std::size_t i = 0; i < point.size() && i < kMaxVars; ++i) {
        if (m.e[i] == 0) continue;
        if (m.e[i] < 0 && sgn(point[i]) == 0) throw std::domain_error("evaluate: pole at x = 0");
        mpz_class num, den;
        const unsigned k = static_cast<unsigned>(std::abs(int(m.e[i])));
        mpz_pow_ui(num.get_mpz_t(), point[i].get_num_mpz_t(), k);
        mpz_pow_ui(den.get_mpz_t(), point[i].get_den_mpz_t(), k);
        Rational pw = m.e[i] > 0 ? Rational(num, den) : Rational(den, num);
        pw.canonicalize();
        t *= pw;
      }
      sum += t;
    }
    return sum;
  }

  /// Replaces variable `var` by the polynomial `value`.
  Poly substitute(std::size_t var, const Poly& value) const {
    Poly out(vars_);
    std::map<int, Poly> powers;
    for (const auto& [m, c] : terms_) {
      const int e = m.e[var];
      if (e < 0) throw std::domain_error("substitute: negative exponent");
      Monomial rest = m;
      rest.e[var] = 0;
      auto it = powers.find(e);
      if (it == powers.end()) it = powers.emplace(e, value.pow(static_cast<unsigned>(e))).first;
      out += it->second.times_term({rest, c});
    }
    return out;
  }

  /// Moves the polynomial onto a table that contains all used variables.
  Poly rebase(const VarTablePtr& target) const {
    if (vars_ == target) return *this;
    std::vector<std::size_t> map(vars_ ? vars_->size() : 0);
    for (std::size_t i = 0; i < map.size(); ++i) map[i] = kMaxVars;
    std::vector<Term> out;
    out.reserve(terms_.size());
    for (const auto& [m, c] : terms_) {
      Monomial nm;
      for (std::size_t i = 0; i < map.size(); ++i) {
        if (m.e[i] == 0) continue;
        if (map[i] == kMaxVars) map[i] = target->index(vars_->name(i));
        nm.e[map[i]] = m.e[i];
      }
      out.emplace_back(nm, c);
    }
    return from_terms(target, std::move(out));
  }

  /// Exact division; throws when `d` does not divide this polynomial.
  /// Requires non-negative exponents on both sides.
  Poly divide_exact(const Poly& d) const;

  /// Integer content: positive rational c with this/c having coprime integer
  /// coefficients.
  Rational content() const {
    if (terms_.empty()) return Rational(1);
    mpz_class num = 0, den = 1;
    for (const auto& [m, c] : terms_) {
      mpz_gcd(num.get_mpz_t(), num.get_mpz_t(), c.get_num_mpz_t());
      mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), c.get_den_mpz_t());
    }
    Rational r{num, den};
    r.canonicalize();
    return r;
  }
  /// Greatest monomial dividing every term (componentwise min exponent).
  Monomial monomial_content() const {
    Monomial g;
    if (terms_.empty()) return g;
    g = terms_[0].first;
    for (const auto& [m, c] : terms_)
      for (std::size_t i = 0; i < kMaxVars; ++i) g.e[i] = std::min(g.e[i], m.e[i]);
    return g;
  }
  Poly divide_monomial(const Monomial& m) const {
    Poly out(vars_);
    out.terms_.reserve(terms_.size());
    for (const auto& [mm, c] : terms_) {
      Monomial q;
      for (std::size_t i = 0; i < kMaxVars; ++i) q.e[i] = static_cast<std::int8_t>(mm.e[i] - m.e[i]);
      out.terms_.emplace_back(q, c);
    }
    return out;
  }

  std::string to_string() const;

  friend bool operator==(const Poly& a, const Poly& b) {
    if (a.terms_ != b.terms_) return false;
    if (a.terms_.empty()) return true;
    return a.vars_ == b.vars_ || (a.vars_ && b.vars_ && *a.vars_ == *b.vars_);
  }

 private:
  void check_vars(const Poly& o) const {
    if (vars_ == o.vars_ || !vars_ || !o.vars_) return;
    if (!(*vars_ == *o.vars_)) throw std::invalid_argument("Poly: variable table mismatch");
  }

  void adopt_vars(const Poly& o) {
    check_vars(o);
    if (!vars_) vars_ = o.vars_;
  }

  static std::vector<Term> merge(const std::vector<Term>& a, const std::vector<Term>& b, const Rational& s) {
    std::vector<Term> out;
    out.reserve(a.size() + b.size());
    std::size_t i = 0, j = 0;
    while (i < a.size() || j < b.size()) {
      if (j == b.size() || (i < a.size() && grlex_greater(a[i].first, b[j].first))) {
        out.push_back(a[i++]);
      } else if (i == a.size() || grlex_greater(b[j].first, a[i].first)) {
        out.emplace_back(b[j].first, s * b[j].second);
        ++j;
      } else {
        Rational c = a[i].second + s * b[j].second;
        if (sgn(c) != 0) out.emplace_back(a[i].first, std::move(c));
        ++i;
        ++j;
      }
    }
    return out;
  }

  VarTablePtr vars_;
  std::vector<Term> terms_;
};

inline Poly Poly::divide_exact(const Poly& d) const {
  if (d.is_zero()) throw std::domain_error("divide_exact: division by zero");
  if (has_pole() || d.has_pole()) throw std::domain_error("divide_exact: Laurent operands");
  Poly rem = *this;
  Poly quot(vars_ ? vars_ : d.vars_);
  const Term& lead = d.terms_.front();
  // grlex is a monomial order, so the leading term of the remainder must be
  // divisible by lead(d) at every step when the division is exact.
  while (!rem.is_zero()) {
    const Term& r = rem.terms_.front();
    if (!lead.first.divides(r.first)) throw std::domain_error("divide_exact: not divisible");
    Monomial q;
    for (std::size_t i = 0; i < kMaxVars; ++i) q.e[i] = static_cast<std::int8_t>(r.first.e[i] - lead.first.e[i]);
    const Term t{q, r.second / lead.second};
    rem -= d.times_term(t);
    quot += Poly::from_terms(quot.vars_, {t});
  }
  return quot;
}

inline std::string Poly::to_string() const {
  if (terms_.empty()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [m, c] : terms_) {
    std::string factors;
    for (std::size_t i = 0; i < kMaxVars; ++i) {
      if (m.e[i] == 0) continue;
      if (!factors.empty()) factors += '*';
      factors += vars_->name(i);
      if (m.e[i] != 1) factors += '^' + std::to_string(int(m.e[i]));
    }
    Rational a = abs(c);
    if (first) {
      if (sgn(c) < 0) out += '-';
    } else {
      out += sgn(c) < 0 ? " - " : " + ";
    }
    first = false;
    if (factors.empty()) {
      out += a.get_str();
    } else if (a == 1) {
      out += factors;
    } else {
      out += a.get_str() + '*' + factors;
    }
  }
  return out;
}

}  // namespace mixsym::poly

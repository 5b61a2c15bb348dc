#pragma once

#include <mixsym/jet/jet_space.hpp>

#include <stdexcept>
#include <string>
#include <vector>

namespace mixsym::jet {

/// Derivation sum_c coeff[c] d/dc on a chart with variable table `vars`.
class VectorField {
 public:
  VectorField() = default;
  explicit VectorField(VarTablePtr vars) : vars_(std::move(vars)), coeffs_(vars_->size(), Poly(vars_)) {}
  explicit VectorField(const JetSpace& s) : VectorField(s.vars()) {}

  /// Single term c * d/d(var).
  static VectorField basis(const VarTablePtr& vars, std::size_t var, Poly c) {
    VectorField v(vars);
    v.coeffs_.at(var) = std::move(c);
    return v;
  }
  static VectorField basis(const VarTablePtr& vars, std::size_t var) {
    return basis(vars, var, Poly(vars, Rational(1)));
  }

  const VarTablePtr& vars() const { return vars_; }
  std::size_t size() const { return coeffs_.size(); }
  const Poly& operator[](std::size_t c) const { return coeffs_.at(c); }
  Poly& operator[](std::size_t c) { return coeffs_.at(c); }
  const Poly& component(const std::string& name) const { return coeffs_.at(vars_->index(name)); }
  const std::vector<Poly>& coeffs() const { return coeffs_; }

  bool is_zero() const {
    for (const auto& p : coeffs_)
      if (!p.is_zero()) return false;
    return true;
  }

  /// v(p) = sum_c v^c dp/dc
  Poly apply(const Poly& p) const {
    Poly out(vars_);
    for (std::size_t c = 0; c < coeffs_.size(); ++c) {
      if (coeffs_[c].is_zero() || !p.depends_on(c)) continue;
      out += coeffs_[c] * p.partial(c);
    }
    return out;
  }

  VectorField& operator+=(const VectorField& o) {
    check(o);
    for (std::size_t c = 0; c < coeffs_.size(); ++c) coeffs_[c] += o.coeffs_[c];
    return *this;
  }
  VectorField& operator-=(const VectorField& o) {
    check(o);
    for (std::size_t c = 0; c < coeffs_.size(); ++c) coeffs_[c] -= o.coeffs_[c];
    return *this;
  }
  VectorField& operator*=(const Rational& s) {
    for (auto& p : coeffs_) p *= s;
    return *this;
  }
  VectorField& operator*=(const Poly& f) {
    for (auto& p : coeffs_) p *= f;
    return *this;
  }
  friend VectorField operator+(VectorField a, const VectorField& b) { return a += b; }
  friend VectorField operator-(VectorField a, const VectorField& b) { return a -= b; }
  friend VectorField operator*(const Rational& s, VectorField a) { return a *= s; }
  friend VectorField operator*(const Poly& f, VectorField a) { return a *= f; }

  friend bool operator==(const VectorField& a, const VectorField& b) { return a.coeffs_ == b.coeffs_; }

  /// "coef*d/dx + ..." with parenthesized multi-term coefficients.
  std::string to_string() const {
    std::string out;
    for (std::size_t c = 0; c < coeffs_.size(); ++c) {
      const Poly& p = coeffs_[c];
      if (p.is_zero()) continue;
      const std::string d = "d/d" + vars_->name(c);
      std::string term;
      bool negative = false;
      if (p.size() == 1) {
        const auto& [m, coef] = p.terms()[0];
        negative = sgn(coef) < 0;
        const std::string body = (negative ? -p : p).to_string();
        term = body == "1" ? d : body + "*" + d;
      } else {
        term = "(" + p.to_string() + ")*" + d;
      }
      if (out.empty())
        out = negative ? "-" + term : term;
      else
        out += (negative ? " - " : " + ") + term;
    }
    return out.empty() ? "0" : out;
  }

  VectorField rebase(const VarTablePtr& target) const {
    VectorField out(target);
    for (std::size_t c = 0; c < coeffs_.size(); ++c) {
      if (coeffs_[c].is_zero()) continue;
      out.coeffs_.at(target->index(vars_->name(c))) = coeffs_[c].rebase(target);
    }
    return out;
  }

 private:
  void check(const VectorField& o) const {
    if (vars_ != o.vars_ && !(*vars_ == *o.vars_)) throw std::invalid_argument("VectorField: chart mismatch");
  }

  VarTablePtr vars_;
  std::vector<Poly> coeffs_;
};

/// [v,w]^c = v(w^c) - w(v^c)
inline VectorField bracket(const VectorField& v, const VectorField& w) {
  if (v.vars() != w.vars() && !(*v.vars() == *w.vars())) throw std::invalid_argument("bracket: chart mismatch");
  VectorField out(v.vars());
  for (std::size_t c = 0; c < v.size(); ++c) out[c] = v.apply(w[c]) - w.apply(v[c]);
  return out;
}

}  // namespace mixsym::jet

#pragma once

#include <mixsym/poly/poly.hpp>

#include <stdexcept>
#include <string>
#include <vector>

namespace mixsym::jet {

using exact::Rational;
using poly::Poly;
using poly::VarTablePtr;

/// Chart on J^{a,b}(R,R^2) with coordinates x, y0..ya, z0..zb. An order of
/// -1 drops that family, so J^{-1,r} is the scalar jet space J^r(R,R).
class JetSpace {
 public:
  JetSpace(int order_y, int order_z) : a_(order_y), b_(order_z) {
    if (a_ < -1 || b_ < -1) throw std::invalid_argument("JetSpace: order below -1");
    std::vector<std::string> names{"x"};
    for (int i = 0; i <= a_; ++i) names.push_back("y" + std::to_string(i));
    for (int j = 0; j <= b_; ++j) names.push_back("z" + std::to_string(j));
    vars_ = poly::make_vartable(std::move(names));
  }

  int order_y() const { return a_; }
  int order_z() const { return b_; }
  const VarTablePtr& vars() const { return vars_; }
  std::size_t dim() const { return vars_->size(); }

  std::size_t x() const { return 0; }
  std::size_t y(int i) const {
    if (i < 0 || i > a_) throw std::out_of_range("JetSpace: y" + std::to_string(i) + " not on chart");
    return 1 + static_cast<std::size_t>(i);
  }
  std::size_t z(int j) const {
    if (j < 0 || j > b_) throw std::out_of_range("JetSpace: z" + std::to_string(j) + " not on chart");
    return 1 + static_cast<std::size_t>(a_ + 1) + static_cast<std::size_t>(j);
  }
  bool is_y(std::size_t v) const { return v >= 1 && v <= static_cast<std::size_t>(a_ + 1); }
  bool is_z(std::size_t v) const { return v > static_cast<std::size_t>(a_ + 1) && v < dim(); }
  /// Jet order of coordinate v (0 for x).
  int order_of(std::size_t v) const {
    if (is_y(v)) return static_cast<int>(v) - 1;
    if (is_z(v)) return static_cast<int>(v) - 2 - a_;
    return 0;
  }
  /// Index of the next coordinate in the same tower, or dim() for top ones.
  std::size_t successor(std::size_t v) const {
    if (is_y(v)) return order_of(v) < a_ ? v + 1 : dim();
    if (is_z(v)) return order_of(v) < b_ ? v + 1 : dim();
    return dim();
  }
  bool is_top(std::size_t v) const { return v != 0 && successor(v) == dim(); }

  Poly var(std::size_t i) const { return Poly::variable(vars_, i); }
  Poly constant(const Rational& c) const { return Poly(vars_, c); }
  Poly zero() const { return Poly(vars_); }

  std::string label() const { return "J^{" + std::to_string(a_) + "," + std::to_string(b_) + "}"; }

  /// True when every coordinate of `base` is also a coordinate here.
  bool extends(const JetSpace& base) const { return a_ >= base.a_ && b_ >= base.b_; }

  friend bool operator==(const JetSpace& p, const JetSpace& q) { return p.a_ == q.a_ && p.b_ == q.b_; }

 private:
  int a_;
  int b_;
  VarTablePtr vars_;
};

enum class DerivMode {
  Free,      // plain jet space: top-order dependence is an error
  Equation,  // on y_{a+1} = z_{b+1} = 0: the successor of a top coordinate is 0
};

/// D = d/dx + sum y_{i+1} d/dy_i + sum z_{j+1} d/dz_j.
inline Poly total_derivative(const Poly& p, const JetSpace& space, DerivMode mode = DerivMode::Free) {
  Poly out = p.partial(0);
  for (std::size_t v = 1; v < space.dim(); ++v) {
    if (!p.depends_on(v)) continue;
    const std::size_t next = space.successor(v);
    if (next == space.dim()) {
      if (mode == DerivMode::Free)
        throw std::domain_error("total_derivative: depends on top coordinate " + space.vars()->name(v) + " of " +
                                space.label());
      continue;
    }
    out += p.partial(v) * space.var(next);
  }
  return out;
}

}  // namespace mixsym::jet

#pragma once

#include <mixsym/eds/eds.hpp>
#include <mixsym/jet/gfun.hpp>
#include <mixsym/jet/prolong.hpp>
#include <mixsym/poly/parse.hpp>

#include <functional>
#include <initializer_list>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace mixsym::eds {

struct UncoveredCase : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

enum class BasisCase {
  FirstKindK2,      // delta = 0, k = 2 < l
  FirstKind,        // delta = 0, 2 < k < l
  SecondKind23,     // (2,3), delta = 1
  SecondKind,       // delta = l - k, k < l, (k,l) != (2,3)
  InnerShift,       // 0 < delta < l - k
  Contact3,         // k = 3, delta = -1
  Contact3Mirrored, // (3,3), delta = 1: the previous case with y and z exchanged
  OuterShift,       // delta > l - k, 3 <= k
  OuterShiftMirrored,  // delta < 0, 4 <= k
};

inline std::string to_string(BasisCase c) {
  switch (c) {
    case BasisCase::FirstKindK2: return "first kind, k=2";
    case BasisCase::FirstKind: return "first kind, 2<k<l";
    case BasisCase::SecondKind23: return "second kind, (2,3)";
    case BasisCase::SecondKind: return "second kind";
    case BasisCase::InnerShift: return "shift case 1 (0<δ<l-k)";
    case BasisCase::Contact3: return "shift case 2 (k=3, δ=-1)";
    case BasisCase::Contact3Mirrored: return "shift case 2 mirrored (k=l=3, δ=1)";
    case BasisCase::OuterShift: return "shift case 4 (δ>l-k)";
    case BasisCase::OuterShiftMirrored: return "shift case 5 (δ<0, k>=4)";
  }
  return "?";
}

inline BasisCase classify(const TableauSpec& s) {
  const int k = s.k(), l = s.l(), d = s.delta();
  if (k == 3 && l == 3 && d == 1) return BasisCase::Contact3Mirrored;
  if (d == 0 && k < l) return k == 2 ? BasisCase::FirstKindK2 : BasisCase::FirstKind;
  if (d == l - k && k < l) return (k == 2 && l == 3) ? BasisCase::SecondKind23 : BasisCase::SecondKind;
  if (d > 0 && d < l - k) return BasisCase::InnerShift;
  if (k == 3 && d == -1) return BasisCase::Contact3;
  if (k >= 3 && d > l - k) return BasisCase::OuterShift;
  if (k >= 4 && d < 0) return BasisCase::OuterShiftMirrored;
  throw UncoveredCase("no explicit basis for " + s.label());
}

inline bool is_covered(const TableauSpec& s) {
  try {
    classify(s);
    return true;
  } catch (const UncoveredCase&) {
    return false;
  }
}

struct KnownBasis {
  BasisCase which;
  std::vector<VectorField> fields;       // prolonged to the equation chart
  std::vector<std::string> base_fields;  // as written before prolongation
};

namespace detail {

/// Collects fields given on a base chart and prolongs them onto the
/// equation chart.
class BasisBuilder {
 public:
  BasisBuilder(const ShiftEDS& eds, const JetSpace& base) : eds_(eds), base_(base) {}

  const JetSpace& base() const { return base_; }
  Poly p(const std::string& text) const { return poly::parse_poly(text, base_.vars()); }

  void add(const VectorField& v) {
    out_.base_fields.push_back(v.to_string());
    out_.fields.push_back(jet::prolong(v, base_, eds_.chart(), jet::DerivMode::Equation));
  }
  void add(std::initializer_list<std::pair<const char*, std::string>> comps) {
    VectorField v(base_);
    for (const auto& [name, text] : comps) v[base_.vars()->index(name)] += p(text);
    add(v);
  }
  void add_var(const char* name, const Poly& coeff) {
    add(VectorField::basis(base_.vars(), base_.vars()->index(name), coeff));
  }

  KnownBasis finish(BasisCase c) {
    out_.which = c;
    return std::move(out_);
  }

 private:
  const ShiftEDS& eds_;
  JetSpace base_;
  KnownBasis out_;
};

inline KnownBasis merge(KnownBasis a, KnownBasis b) {
  a.fields.insert(a.fields.end(), b.fields.begin(), b.fields.end());
  a.base_fields.insert(a.base_fields.end(), b.base_fields.begin(), b.base_fields.end());
  return a;
}

inline std::string num(int v) { return std::to_string(v); }

/// The five fields spanning R x gl(2) in most cases.
inline void add_scalars(BasisBuilder& b, int k, int l) {
  b.add({{"x", "1"}});
  b.add({{"x", "x"}});
  b.add({{"x", "x^2"}, {"y0", num(k - 1) + "*x*y0"}, {"z0", num(l - 1) + "*x*z0"}});
  b.add({{"y0", "y0"}});
  b.add({{"z0", "z0"}});
}

inline void add_powers(BasisBuilder& b, const char* var, int count) {
  for (int i = 0; i < count; ++i) b.add_var(var, b.p("x^" + num(i)));
}

/// Nondecreasing sequences of length j over 0..top.
inline void for_each_multiset(int j, int top, std::vector<int>& cur, const std::function<void()>& f) {
  if (static_cast<int>(cur.size()) == j) {
    f();
    return;
  }
  for (int s = cur.empty() ? 0 : cur.back(); s <= top; ++s) {
    cur.push_back(s);
    for_each_multiset(j, top, cur, f);
    cur.pop_back();
  }
}

/// x^i g^{(s1)}_{a,b} ... g^{(sj)}_{a,b} d/d(target) with i + weight*j <= limit,
/// the g functions built on the `family` tower.
inline void add_g_products(BasisBuilder& b, int a, int bb, int weight, int limit, char family, const char* target) {
  for (int j = 0; weight * j <= limit; ++j) {
    std::vector<int> cur;
    for_each_multiset(j, a, cur, [&] {
      Poly prod = b.p("1");
      for (int s : cur) prod *= jet::g_function(a, bb, s, b.base().vars(), family);
      for (int i = 0; i + weight * j <= limit; ++i) b.add_var(target, b.p("x^" + num(i)) * prod);
    });
  }
}

/// Contact symmetries of the order-3 tower u plus the other tower v of
/// order `lv`; u = y for k = 3, delta = -1.
inline void add_contact3(BasisBuilder& b, char u, char v, int lv) {
  const std::string u0 = std::string(1, u) + "0", u1 = std::string(1, u) + "1", v0 = std::string(1, v) + "0";
  auto sub = [&](std::string t) {
    // write the formulas with y for u and z for v, then rename
    std::string out;
    for (std::size_t i = 0; i < t.size(); ++i) {
      if (t[i] == 'y') out += u;
      else if (t[i] == 'z') out += v;
      else out += t[i];
    }
    return out;
  };
  const std::string L = num(lv - 1);
  const char* U0 = u0.c_str();
  const char* U1 = u1.c_str();
  const char* V0 = v0.c_str();
  b.add({{"x", sub("x*(2*y0 - x*y1)")},
         {U0, sub("2*y0^2 - 1/2*x^2*y1^2")},
         {U1, sub("y1*(2*y0 - x*y1)")},
         {V0, sub(L + "*z0*(2*y0 - x*y1)")}});
  b.add({{"x", sub("2*(y0 - x*y1)")}, {U0, sub("-x*y1^2")}, {U1, sub("-y1^2")}, {V0, sub("-" + L + "*z0*y1")}});
  b.add({{"x", "x^2"}, {U0, sub("2*x*y0")}, {U1, sub("2*y0")}, {V0, sub(L + "*x*z0")}});
  b.add({{"x", "x"}, {U1, sub("-y1")}});
  b.add({{U0, sub("y0")}, {U1, sub("y1")}});
  b.add({{V0, sub("z0")}});
  b.add({{"x", sub("y1")}, {U0, sub("1/2*y1^2")}});
  b.add({{"x", "1"}});
  b.add({{U0, "1"}});
  b.add({{U0, "x"}, {U1, "1"}});
  b.add({{U0, "x^2"}, {U1, "2*x"}});
  const Poly w = b.p(sub("x*y1 - 2*y0")), y1 = b.p(sub("y1"));
  for (int i = 0; i <= lv - 1; ++i)
    for (int j0 = 0; i + j0 <= lv - 1; ++j0)
      for (int j1 = 0; i + j0 + j1 <= lv - 1; ++j1)
        b.add_var(V0, b.p("x^" + num(i)) * w.pow(j0) * y1.pow(j1));
}

}  // namespace detail

/// Explicit spanning fields for the covered cases, prolonged onto the
/// equation chart J^{k-1,l-1}.
inline KnownBasis known_basis(const TableauSpec& spec) {
  const BasisCase which = classify(spec);
  const ShiftEDS eds(spec);
  const int k = spec.k(), l = spec.l(), d = spec.delta();
  using detail::num;
  switch (which) {
    case BasisCase::FirstKindK2: {
      detail::BasisBuilder b(eds, JetSpace(0, 0));
      b.add({{"x", "1"}});
      b.add({{"y0", "1"}});
      for (const char* c : {"x", "y0"}) {
        b.add({{"x", c}});
        b.add({{"y0", c}});
      }
      b.add({{"z0", "z0"}});
      b.add({{"x", "x^2"}, {"y0", "x*y0"}, {"z0", num(l - 1) + "*x*z0"}});
      b.add({{"x", "x*y0"}, {"y0", "y0^2"}, {"z0", num(l - 1) + "*y0*z0"}});
      for (int i = 0; i <= l - 1; ++i)
        for (int j = 0; i + j <= l - 1; ++j) b.add_var("z0", b.p("x^" + num(i) + "*y0^" + num(j)));
      return b.finish(which);
    }
    case BasisCase::FirstKind: {
      detail::BasisBuilder b(eds, JetSpace(0, 0));
      detail::add_scalars(b, k, l);
      detail::add_powers(b, "y0", k);
      for (int j = 0; (k - 1) * j <= l - 1; ++j)
        for (int i = 0; i + (k - 1) * j <= l - 1; ++i) b.add_var("z0", b.p("x^" + num(i) + "*y0^" + num(j)));
      return b.finish(which);
    }
    case BasisCase::SecondKind23: {
      detail::BasisBuilder b(eds, JetSpace(0, 1));
      b.add({{"x", "1/2*x^2*z1 - z0*x"},
             {"y0", "1/2*x*y0*z1 - y0*z0"},
             {"z0", "1/4*x^2*z1^2 - z0^2"},
             {"z1", "1/2*x*z1^2 - z0*z1"}});
      b.add({{"x", "2*(x*z1 - z0)"}, {"y0", "y0*z1"}, {"z0", "x*z1^2"}, {"z1", "z1^2"}});
      b.add({{"x", "z1"}, {"z0", "1/2*z1^2"}});
      b.add({{"x", "x^2"}, {"y0", "x*y0"}, {"z0", "2*x*z0"}, {"z1", "2*z0"}});
      b.add({{"x", "x"}, {"z1", "-z1"}});
      b.add({{"z0", "z0"}, {"z1", "z1"}});
      b.add({{"z0", "x^2"}, {"z1", "2*x"}});
      b.add({{"z0", "x"}, {"z1", "1"}});
      b.add({{"x", "1"}});
      b.add({{"z0", "1"}});
      b.add({{"y0", "y0"}});
      b.add({{"y0", "x*z1 - 2*z0"}});
      b.add({{"y0", "x"}});
      b.add({{"y0", "z1"}});
      b.add({{"y0", "1"}});
      return b.finish(which);
    }
    case BasisCase::SecondKind: {
      // (d1), (d2) are point fields; prolonging them straight to the
      // equation chart equals prolonging through J^{0,l-k}.
      detail::BasisBuilder b0(eds, JetSpace(0, 0));
      detail::add_scalars(b0, k, l);
      detail::add_powers(b0, "z0", l);
      detail::add_powers(b0, "y0", k);
      detail::BasisBuilder b1(eds, JetSpace(0, l - k));
      for (int s = 0; s <= l - k; ++s) b1.add_var("y0", jet::g_function(l - k, k, s, b1.base().vars(), 'z'));
      return detail::merge(b0.finish(which), b1.finish(which));
    }
    case BasisCase::InnerShift: {
      detail::BasisBuilder b(eds, JetSpace(0, 0));
      detail::add_scalars(b, k, l);
      detail::add_powers(b, "y0", k);
      detail::add_powers(b, "z0", l);
      return b.finish(which);
    }
    case BasisCase::Contact3: {
      detail::BasisBuilder b(eds, JetSpace(1, 0));
      detail::add_contact3(b, 'y', 'z', l);
      return b.finish(which);
    }
    case BasisCase::Contact3Mirrored: {
      detail::BasisBuilder b(eds, JetSpace(0, 1));
      detail::add_contact3(b, 'z', 'y', k);
      return b.finish(which);
    }
    case BasisCase::OuterShift: {
      detail::BasisBuilder b0(eds, JetSpace(0, 0));
      detail::add_scalars(b0, k, l);
      detail::add_powers(b0, "z0", l);
      detail::BasisBuilder b1(eds, JetSpace(0, d));
      detail::add_g_products(b1, d, l - d, l - d - 1, k - 1, 'z', "y0");
      return detail::merge(b0.finish(which), b1.finish(which));
    }
    case BasisCase::OuterShiftMirrored: {
      detail::BasisBuilder b0(eds, JetSpace(0, 0));
      detail::add_scalars(b0, k, l);
      detail::add_powers(b0, "y0", k);
      detail::BasisBuilder b1(eds, JetSpace(-d, 0));
      detail::add_g_products(b1, -d, k + d, k + d - 1, l - 1, 'y', "z0");
      return detail::merge(b0.finish(which), b1.finish(which));
    }
  }
  throw UncoveredCase("no explicit basis for " + spec.label());
}

}  // namespace mixsym::eds

#pragma once

#include <mixsym/eds/tableau.hpp>
#include <mixsym/exact/subspace.hpp>
#include <mixsym/jet/vector_field.hpp>

#include <optional>
#include <string>
#include <vector>

namespace mixsym::eds {

using exact::Rational;
using jet::JetSpace;
using jet::VectorField;
using poly::Poly;

/// Ordered generating fields of a distribution on one chart.
struct Distribution {
  JetSpace chart;
  std::vector<VectorField> generators;

  std::size_t size() const { return generators.size(); }
  /// Rank of the generators evaluated at the origin of the chart.
  std::size_t rank_at_origin() const {
    std::vector<exact::Vector> rows;
    for (const auto& g : generators) {
      exact::Vector row(chart.dim());
      for (std::size_t c = 0; c < chart.dim(); ++c) row[c] = g[c].constant_term();
      rows.push_back(std::move(row));
    }
    return exact::rank(exact::Matrix::from_rows(rows, chart.dim()));
  }
};

/// E = <X> and F = <d/du : u in F> on the equation y_k = z_l = 0, charted by
/// J^{k-1,l-1}.
class ShiftEDS {
 public:
  explicit ShiftEDS(const TableauSpec& spec) : spec_(spec), chart_(spec.k() - 1, spec.l() - 1), x_(chart_) {
    x_[0] = chart_.constant(1);
    for (int i = 0; i + 1 < spec.k(); ++i) x_[chart_.y(i)] = chart_.var(chart_.y(i + 1));
    for (int j = 0; j + 1 < spec.l(); ++j) x_[chart_.z(j)] = chart_.var(chart_.z(j + 1));
    in_f_.assign(chart_.dim(), false);
    const int d = spec.delta();
    for (int i = d < 0 ? 1 - d : 1; i < spec.k(); ++i) in_f_[chart_.y(i)] = true;
    for (int j = d < 0 ? 1 : d + 1; j < spec.l(); ++j) in_f_[chart_.z(j)] = true;
    for (std::size_t c = 0; c < chart_.dim(); ++c)
      if (in_f_[c]) f_coords_.push_back(c);
  }

  const TableauSpec& spec() const { return spec_; }
  const JetSpace& chart() const { return chart_; }
  /// The E generator d/dx + sum y_{i+1} d/dy_i + sum z_{j+1} d/dz_j.
  const VectorField& X() const { return x_; }
  Distribution E() const { return {chart_, {x_}}; }
  Distribution F() const { return {chart_, f_generators()}; }
  const std::vector<std::size_t>& f_coords() const { return f_coords_; }
  bool in_f(std::size_t c) const { return in_f_.at(c); }
  std::vector<VectorField> f_generators() const {
    std::vector<VectorField> out;
    for (auto c : f_coords_) out.push_back(VectorField::basis(chart_.vars(), c));
    return out;
  }
  std::vector<std::size_t> non_f_coords() const {
    std::vector<std::size_t> out;
    for (std::size_t c = 0; c < chart_.dim(); ++c)
      if (!in_f_[c]) out.push_back(c);
    return out;
  }

 private:
  TableauSpec spec_;
  JetSpace chart_;
  VectorField x_;
  std::vector<bool> in_f_;
  std::vector<std::size_t> f_coords_;
};

inline ShiftEDS build_eds(const TableauSpec& spec) { return ShiftEDS(spec); }

struct SymmetryCheck {
  bool ok = true;
  std::string violation;  // empty when ok
  explicit operator bool() const { return ok; }
};

/// [S,E] in E with lambda = [S,X]^x, and [S,F] in F componentwise.
inline SymmetryCheck is_symmetry(const VectorField& s, const ShiftEDS& eds) {
  const auto& chart = eds.chart();
  if (!(*s.vars() == *chart.vars())) throw std::invalid_argument("is_symmetry: field is not on the equation chart");
  const auto& names = *chart.vars();
  VectorField sx = jet::bracket(s, eds.X());
  const Poly lambda = sx[0];
  for (std::size_t c = 1; c < chart.dim(); ++c) {
    const Poly r = sx[c] - lambda * eds.X()[c];
    if (!r.is_zero())
      return {false, "[S,X] - λX has d/d" + names.name(c) + " component " + r.to_string()};
  }
  for (auto u : eds.f_coords()) {
    for (std::size_t c = 0; c < chart.dim(); ++c) {
      if (eds.in_f(c)) continue;
      // [S, d/du]^c = -d(S^c)/du
      const Poly r = s[c].partial(u);
      if (!r.is_zero())
        return {false, "[S,d/d" + names.name(u) + "] has d/d" + names.name(c) + " component " + (-r).to_string()};
    }
  }
  return {};
}

}  // namespace mixsym::eds

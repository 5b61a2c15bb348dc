#pragma once

#include <mixsym/exact/sparse.hpp>
#include <mixsym/jet/vector_field.hpp>

#include <optional>
#include <utility>
#include <vector>

namespace mixsym::jet {

using FieldKey = std::pair<std::size_t, poly::Monomial>;

/// A field as (coordinate, monomial) -> coefficient entries.
inline std::vector<std::pair<FieldKey, exact::Rational>> field_entries(const VectorField& v) {
  std::vector<std::pair<FieldKey, exact::Rational>> out;
  for (std::size_t c = 0; c < v.size(); ++c)
    for (const auto& [m, coef] : v[c].terms()) out.emplace_back(FieldKey{c, m}, coef);
  return out;
}

/// Linear span of fields over Q on one chart.
class FieldSpan {
 public:
  explicit FieldSpan(const std::vector<VectorField>& fields) : solver_(entries(fields)) {}

  std::size_t rank() const { return solver_.rank(); }
  bool independent() const { return solver_.generators_independent(); }
  std::optional<exact::Vector> coordinates(const VectorField& v) const { return solver_.solve(field_entries(v)); }
  bool contains(const VectorField& v) const { return coordinates(v).has_value(); }
  bool contains_all(const std::vector<VectorField>& vs) const {
    for (const auto& v : vs)
      if (!contains(v)) return false;
    return true;
  }

 private:
  static std::vector<std::vector<std::pair<FieldKey, exact::Rational>>> entries(const std::vector<VectorField>& fs) {
    std::vector<std::vector<std::pair<FieldKey, exact::Rational>>> out;
    out.reserve(fs.size());
    for (const auto& f : fs) out.push_back(field_entries(f));
    return out;
  }

  exact::SpanSolver<FieldKey> solver_;
};

/// Same span: equal ranks and mutual containment.
inline bool same_span(const std::vector<VectorField>& a, const std::vector<VectorField>& b) {
  FieldSpan sa(a), sb(b);
  return sa.rank() == sb.rank() && sa.contains_all(b) && sb.contains_all(a);
}

}  // namespace mixsym::jet

#pragma once

#include <mixsym/cli/report.hpp>
#include <mixsym/eds/derived_flag.hpp>
#include <mixsym/eds/determining.hpp>
#include <mixsym/eds/known_basis.hpp>
#include <mixsym/jet/field_span.hpp>
#include <mixsym/jet/lemma.hpp>
#include <mixsym/poly/parse.hpp>
#include <mixsym/sternberg/prolong.hpp>
#include <mixsym/tanaka/prolong.hpp>

#include <chrono>
#include <optional>
#include <set>
#include <string>
#include <vector>

namespace mixsym::cli {

/// Highest degree bound tried when none is given.
inline constexpr int kMaxAutoBound = 16;

class Stopwatch {
 public:
  double seconds() const { return std::chrono::duration<double>(std::chrono::steady_clock::now() - start_).count(); }

 private:
  std::chrono::steady_clock::time_point start_ = std::chrono::steady_clock::now();
};

/// Tanaka degree of each field from its torus weight, or nullopt when some
/// field is not homogeneous.
inline std::optional<std::vector<int>> tanaka_degrees(const eds::ShiftEDS& e, const std::vector<jet::VectorField>& basis) {
  using namespace eds::detail;
  const TableauSpec& s = e.spec();
  std::vector<int> out;
  for (const auto& v : basis) {
    std::set<int> seen;
    for (std::size_t c = 0; c < v.size(); ++c)
      for (const auto& [m, coef] : v[c].terms()) {
        const Weight wm = monomial_weight(e.chart(), m), wc = coord_weight(e.chart(), c);
        seen.insert((wm[0] - wc[0]) + s.tanaka_cy() * (wm[1] - wc[1]) + s.tanaka_cz() * (wm[2] - wc[2]));
      }
    if (seen.size() != 1) return std::nullopt;
    out.push_back(*seen.begin());
  }
  return out;
}

inline std::map<int, std::size_t> histogram(const std::vector<int>& degrees) {
  std::map<int, std::size_t> out;
  for (int d : degrees) ++out[d];
  return out;
}

inline eds::DeterminingResult solve(const TableauSpec& s, std::optional<int> bound) {
  return bound ? eds::solve_determining(s, *bound)
               : eds::solve_determining_auto(s, eds::default_degree_bound(s), kMaxAutoBound);
}

inline Agreement symmetry_check(const std::vector<jet::VectorField>& fields, const eds::ShiftEDS& e) {
  for (std::size_t i = 0; i < fields.size(); ++i)
    if (auto chk = eds::is_symmetry(fields[i], e); !chk)
      return {"is_symmetry", false, "field " + std::to_string(i) + ": " + chk.violation};
  return {"is_symmetry", true, std::to_string(fields.size()) + " fields"};
}

inline Agreement dimension_agreement(const std::string& what, std::size_t expected, std::size_t got) {
  return {what + " dimension", expected == got, std::to_string(got) + " vs " + std::to_string(expected)};
}

inline Comparison make_comparison(const std::string& against, const liealg::LieAlgebraSC& a,
                                  const liealg::LieAlgebraSC& b) {
  const liealg::Comparison c = liealg::compare(a, b);
  return {against, c.verdict(), c.differing};
}

/// Determining-system report; the grading is reported when every field is
/// homogeneous.
inline Report determining_report(const TableauSpec& s, const eds::ShiftEDS& e, const eds::DeterminingResult& r) {
  Report rep;
  rep.spec = s;
  rep.method = "determining";
  rep.dimension = r.basis.size();
  const auto degrees = tanaka_degrees(e, r.basis);
  if (degrees) rep.graded_dims = histogram(*degrees);
  for (const auto& v : r.basis) rep.basis.push_back(v.to_string());
  rep.invariants = liealg::invariants(liealg::from_vector_fields(r.basis, degrees));
  rep.agreements.push_back(symmetry_check(r.basis, e));
  return rep;
}

/// method is determining, known or both.
inline Report cmd_symmetries(const TableauSpec& s, std::optional<int> bound, const std::string& method) {
  if (method != "determining" && method != "known" && method != "both")
    throw std::invalid_argument("unknown method \"" + method + "\"");
  const Stopwatch clock;
  const eds::ShiftEDS e(s);
  Report rep;
  if (method == "known") {
    const eds::KnownBasis kb = eds::known_basis(s);
    rep.spec = s;
    rep.method = "known-basis";
    rep.dimension = kb.fields.size();
    const auto degrees = tanaka_degrees(e, kb.fields);
    if (degrees) rep.graded_dims = histogram(*degrees);
    rep.basis = kb.base_fields;
    rep.invariants = liealg::invariants(liealg::from_vector_fields(kb.fields, degrees));
    rep.agreements.push_back(symmetry_check(kb.fields, e));
    rep.agreements.push_back({"independent", jet::FieldSpan(kb.fields).independent(), eds::to_string(kb.which)});
  } else {
    const eds::DeterminingResult r = solve(s, bound);
    rep = determining_report(s, e, r);
    if (method == "both") {
      const eds::KnownBasis kb = eds::known_basis(s);
      rep.agreements.push_back(dimension_agreement("known-basis", kb.fields.size(), r.basis.size()));
      rep.agreements.push_back({"known-basis span", jet::same_span(kb.fields, r.basis), eds::to_string(kb.which)});
    }
  }
  rep.seconds = clock.seconds();
  return rep;
}

/// Global basis names of a Tanaka prolongation: the m names, then g<d>_<i>.
inline std::vector<std::string> tanaka_names(const tanaka::GradedNilpotent& m, const tanaka::GradedProlongation& g) {
  std::vector<std::string> out = m.names;
  std::map<int, int> seen;
  for (std::size_t i = m.dim(); i < g.dim(); ++i) {
    const int d = g.degrees[i];
    out.push_back("g" + std::to_string(d) + "_" + std::to_string(seen[d]++));
  }
  return out;
}

inline std::string sparse_string(const exact::SparseVec& v, const std::vector<std::string>& names) {
  if (v.empty()) return "0";
  std::string out;
  for (const auto& [i, c] : v) {
    const std::string coef = exact::to_string(c);
    if (!out.empty()) out += " + ";
    out += (coef == "1" ? "" : coef + "*") + names[i];
  }
  return out;
}

inline Report cmd_prolong(const TableauSpec& s, const std::string& engine, bool transpose, std::optional<int> cap) {
  const Stopwatch clock;
  Report rep;
  rep.spec = s;
  rep.method = engine;
  if (engine == "tanaka") {
    if (transpose) throw std::invalid_argument("--transpose applies to the sternberg engine only");
    const tanaka::GradedNilpotent m = tanaka::build_gnla(s);
    const tanaka::GradedProlongation g = tanaka::tanaka_prolong(m, tanaka::stab_d(m));
    const auto names = tanaka_names(m, g);
    rep.dimension = g.dim();
    rep.graded_dims = g.graded_dims();
    for (std::size_t i = 0; i < g.dim(); ++i) {
      std::string b = names[i];
      if (i >= m.dim()) {
        b += ":";
        const auto& act = g.action[i - m.dim()];
        for (std::size_t u = 0; u < m.dim(); ++u) b += " " + m.names[u] + "->" + sparse_string(act[u], names) + ";";
        b.pop_back();
      }
      rep.basis.push_back(b);
    }
    rep.invariants = liealg::invariants(g.algebra);
  } else if (engine == "sternberg") {
    const int c = cap ? *cap : s.k() + s.l();
    const sternberg::GradedMatrixAlgebra a = sternberg::flag_symbol_prolong(sternberg::build_symbol(s));
    const auto g = sternberg::sternberg_prolong(transpose ? sternberg::transpose_algebra(a) : a, c);
    rep.method = transpose ? "sternberg-transpose" : "sternberg";
    rep.dimension = g.dim();
    for (std::size_t i = 0; i < g.layers.size(); ++i) {
      const int deg = static_cast<int>(i) - 1;
      if (!g.layers[i].empty()) rep.graded_dims[deg] = g.layers[i].size();
      for (const auto& v : g.layers[i]) rep.basis.push_back("deg " + std::to_string(deg) + ": " + v.to_string());
    }
    rep.invariants = liealg::invariants(g.algebra);
    if (transpose) {
      const auto plain = sternberg::sternberg_prolong(a, c);
      rep.agreements.push_back(dimension_agreement("untransposed", plain.dim(), g.dim()));
      rep.comparison = make_comparison(s.label() + " untransposed", g.algebra, plain.algebra);
    }
  } else {
    throw std::invalid_argument("unknown engine \"" + engine + "\"");
  }
  rep.seconds = clock.seconds();
  return rep;
}

/// All methods on one spec. With `against`, also compares the solver
/// algebra with that of (k, l, against).
inline Report cmd_compare(const TableauSpec& s, std::optional<int> bound, std::optional<int> against) {
  const Stopwatch clock;
  const eds::ShiftEDS e(s);
  const eds::DeterminingResult r = solve(s, bound);
  Report rep = determining_report(s, e, r);
  const auto t = tanaka::tanaka_prolong(s);
  rep.agreements.push_back(dimension_agreement("tanaka", r.basis.size(), t.dim()));
  rep.agreements.push_back({"tanaka grading", t.graded_dims() == rep.graded_dims, dims_string(t.graded_dims())});
  const auto g = sternberg::sternberg_prolong(s);
  rep.agreements.push_back(dimension_agreement("sternberg", r.basis.size(), g.dim()));
  if (eds::is_covered(s)) {
    const eds::KnownBasis kb = eds::known_basis(s);
    rep.agreements.push_back(dimension_agreement("known-basis", r.basis.size(), kb.fields.size()));
    rep.agreements.push_back({"known-basis span", jet::same_span(kb.fields, r.basis), eds::to_string(kb.which)});
  }
  if (against) {
    const TableauSpec o(s.k(), s.l(), *against);
    const auto other = solve(o, bound);
    rep.comparison = make_comparison(o.label() + " (dimension " + std::to_string(other.basis.size()) + ")",
                                     liealg::from_vector_fields(r.basis), liealg::from_vector_fields(other.basis));
  }
  rep.seconds = clock.seconds();
  return rep;
}

struct TableauOutput {
  std::string tableau;
  std::string chain;
};

inline TableauOutput cmd_tableau(const TableauSpec& s) { return {s.render(), s.projection_chain_string()}; }

struct LemmaOutput {
  std::string part;
  bool ok = false;
  std::string detail;
  std::size_t kernel_dim = 0;
};

/// Part a takes (i, j) through r and p.
inline LemmaOutput cmd_lemma(const std::string& part, int r, int p, int q) {
  LemmaOutput out;
  out.part = part;
  if (part == "a") {
    if (r < 1 || p < 1) throw std::invalid_argument("part a needs i, j >= 1 (passed as --r, --p)");
    const auto res = jet::identity_a_residual(r, p);
    out.ok = res.is_zero();
    out.detail = "i=" + std::to_string(r) + " j=" + std::to_string(p) + " residual " + res.to_string();
    return out;
  }
  jet::LemmaResult res;
  if (part == "b")
    res = jet::lemma_part_b(r);
  else if (part == "c")
    res = jet::lemma_part_c(r, p);
  else if (part == "d")
    res = jet::lemma_part_d(r, p, q);
  else
    throw std::invalid_argument("unknown lemma part \"" + part + "\"");
  out.ok = res.ok();
  out.kernel_dim = res.kernel_dim;
  out.detail = "r=" + std::to_string(r) + (part == "b" ? "" : " p=" + std::to_string(p)) +
               (part == "d" ? " q=" + std::to_string(q) : "") + ": kernel dim " + std::to_string(res.kernel_dim) +
               ", expected " + std::to_string(res.expected_dim) + ", spans " + (res.span_equal ? "equal" : "differ");
  return out;
}

inline std::vector<std::size_t> cmd_flags(int k, int l, const std::string& f, const std::string& g) {
  if (k < 2 || l < k) throw std::invalid_argument("need 2 <= k <= l");
  const jet::JetSpace ch(k - 1, l - 1);
  return eds::derived_flag(eds::NonlinearSystem(k, l, poly::parse_poly(f, ch.vars()), poly::parse_poly(g, ch.vars())))
      .ranks;
}

struct SuiteRow {
  TableauSpec spec{2, 3, 0};
  int bound = 0;
  std::size_t determining = 0, tanaka = 0, sternberg = 0;
  std::optional<std::size_t> known;
  bool ok = false;
  std::string error;
  double seconds = 0;
};

/// Full grid, sorted by spec. Failures are recorded per row, never thrown.
inline std::vector<SuiteRow> cmd_suite(int max_sum, int max_bound = kMaxAutoBound) {
  std::vector<SuiteRow> rows;
  for (const auto& s : eds::spec_grid(max_sum)) {
    const Stopwatch clock;
    SuiteRow row;
    row.spec = s;
    try {
      const auto r = eds::solve_determining_auto(s, eds::default_degree_bound(s), max_bound);
      row.bound = r.degree_bound;
      row.determining = r.basis.size();
      row.tanaka = tanaka::tanaka_prolong(s).dim();
      row.sternberg = sternberg::sternberg_prolong(s).dim();
      row.ok = row.tanaka == row.determining && row.sternberg == row.determining;
      if (eds::is_covered(s)) {
        const auto kb = eds::known_basis(s);
        row.known = kb.fields.size();
        row.ok = row.ok && *row.known == row.determining && jet::same_span(kb.fields, r.basis);
      }
    } catch (const std::exception& ex) {
      row.error = ex.what();
    }
    row.seconds = clock.seconds();
    rows.push_back(std::move(row));
  }
  return rows;
}

inline Json to_json(const SuiteRow& r, bool with_timing = true) {
  Json j{{"spec", spec_to_json(r.spec)},
         {"degree_bound", r.bound},
         {"determining", r.determining},
         {"tanaka", r.tanaka},
         {"sternberg", r.sternberg},
         {"known_basis", r.known ? Json(*r.known) : Json(nullptr)},
         {"ok", r.ok}};
  if (!r.error.empty()) j["error"] = r.error;
  if (with_timing) j["seconds"] = r.seconds;
  return j;
}

}  // namespace mixsym::cli

#pragma once

#include <mixsym/eds/tableau.hpp>
#include <mixsym/liealg/invariants.hpp>

#include <json.hpp>

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace mixsym::cli {

using Json = nlohmann::ordered_json;
using eds::TableauSpec;
using liealg::InvariantTuple;

struct Agreement {
  std::string name;
  bool ok = false;
  std::string detail;

  friend bool operator==(const Agreement&, const Agreement&) = default;
};

/// Non-isomorphism check against a second algebra. Never an assertion:
/// "inconclusive" is a legitimate outcome.
struct Comparison {
  std::string against;
  std::string verdict;
  std::vector<std::string> differing;

  friend bool operator==(const Comparison&, const Comparison&) = default;
};

struct Report {
  TableauSpec spec{2, 3, 0};
  std::string method;  // determining | tanaka | sternberg | known-basis
  std::size_t dimension = 0;
  std::map<int, std::size_t> graded_dims;
  std::vector<std::string> basis;
  std::optional<InvariantTuple> invariants;
  std::vector<Agreement> agreements;
  std::optional<Comparison> comparison;
  double seconds = 0;

  bool ok() const {
    for (const auto& a : agreements)
      if (!a.ok) return false;
    return true;
  }

  friend bool operator==(const Report&, const Report&) = default;
};

inline Json graded_to_json(const std::map<int, std::size_t>& g) {
  Json out = Json::object();
  for (const auto& [d, c] : g) out[std::to_string(d)] = c;
  return out;
}

inline std::map<int, std::size_t> graded_from_json(const Json& j) {
  std::map<int, std::size_t> out;
  for (const auto& [key, value] : j.items()) out[std::stoi(key)] = value.get<std::size_t>();
  return out;
}

inline Json spec_to_json(const TableauSpec& s) { return Json{{"k", s.k()}, {"l", s.l()}, {"shift", s.delta()}}; }

inline TableauSpec spec_from_json(const Json& j) {
  return TableauSpec(j.at("k").get<int>(), j.at("l").get<int>(), j.at("shift").get<int>());
}

inline Json to_json(const InvariantTuple& t) {
  return Json{{"derived_series", t.derived_series},
              {"lower_central", t.lower_central},
              {"center", t.center},
              {"killing_rank", t.killing_rank},
              {"graded_dims", graded_to_json(t.graded_dims)}};
}

inline InvariantTuple invariants_from_json(const Json& j) {
  InvariantTuple t;
  t.derived_series = j.at("derived_series").get<std::vector<std::size_t>>();
  t.lower_central = j.at("lower_central").get<std::vector<std::size_t>>();
  t.center = j.at("center").get<std::size_t>();
  t.killing_rank = j.at("killing_rank").get<std::size_t>();
  t.graded_dims = graded_from_json(j.at("graded_dims"));
  return t;
}

/// Coefficients inside basis strings are already exact "p/q" text.
inline Json to_json(const Report& r, bool with_timing = true) {
  Json j{{"spec", spec_to_json(r.spec)},
         {"method", r.method},
         {"dimension", r.dimension},
         {"graded_dims", graded_to_json(r.graded_dims)},
         {"basis", r.basis},
         {"invariants", r.invariants ? to_json(*r.invariants) : Json(nullptr)},
         {"agreements", Json::array()}};
  for (const auto& a : r.agreements) j["agreements"].push_back(Json{{"name", a.name}, {"ok", a.ok}, {"detail", a.detail}});
  if (r.comparison)
    j["comparison"] = Json{{"against", r.comparison->against},
                           {"verdict", r.comparison->verdict},
                           {"differing", r.comparison->differing}};
  if (with_timing) j["seconds"] = r.seconds;
  return j;
}

inline Report report_from_json(const Json& j) {
  Report r;
  r.spec = spec_from_json(j.at("spec"));
  r.method = j.at("method").get<std::string>();
  r.dimension = j.at("dimension").get<std::size_t>();
  r.graded_dims = graded_from_json(j.at("graded_dims"));
  r.basis = j.at("basis").get<std::vector<std::string>>();
  if (!j.at("invariants").is_null()) r.invariants = invariants_from_json(j.at("invariants"));
  for (const auto& a : j.at("agreements"))
    r.agreements.push_back({a.at("name").get<std::string>(), a.at("ok").get<bool>(), a.at("detail").get<std::string>()});
  if (j.contains("comparison")) {
    const Json& c = j["comparison"];
    r.comparison = Comparison{c.at("against").get<std::string>(), c.at("verdict").get<std::string>(),
                              c.at("differing").get<std::vector<std::string>>()};
  }
  if (j.contains("seconds")) r.seconds = j["seconds"].get<double>();
  return r;
}

inline std::string dims_string(const std::map<int, std::size_t>& g) {
  std::string out;
  for (const auto& [d, c] : g) out += (out.empty() ? "" : ",") + std::to_string(c);
  return out;
}

inline std::string to_text(const Report& r) {
  std::string out = r.spec.label() + " " + r.method + "\n";
  out += "dimension: " + std::to_string(r.dimension) + "\n";
  if (!r.graded_dims.empty()) {
    out += "dims: " + dims_string(r.graded_dims) + "\n";
    out += "degrees: " + std::to_string(r.graded_dims.begin()->first) + ".." +
           std::to_string(r.graded_dims.rbegin()->first) + "\n";
  }
  if (r.invariants) out += "invariants: " + liealg::to_string(*r.invariants) + "\n";
  for (const auto& a : r.agreements)
    out += std::string(a.ok ? "agree" : "DISAGREE") + ": " + a.name + (a.detail.empty() ? "" : " (" + a.detail + ")") + "\n";
  if (r.comparison) {
    out += "versus " + r.comparison->against + ": " + r.comparison->verdict;
    for (std::size_t i = 0; i < r.comparison->differing.size(); ++i)
      out += (i ? ", " : " by ") + r.comparison->differing[i];
    out += "\n";
  }
  out += "basis:\n";
  for (const auto& b : r.basis) out += "  " + b + "\n";
  return out;
}

}  // namespace mixsym::cli

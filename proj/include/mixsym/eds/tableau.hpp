#pragma once

#include <algorithm>
#include <stdexcept>
#include <string>
#include <vector>

namespace mixsym::eds {

struct InvalidSpec : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

/// The triple (k, l, delta) for y^(k) = z^(l) = 0 with shift delta. All
/// gradings, symbols and EDS shapes are derived from the two-row skew
/// tableau: an l-row of boxes f_{l-1}..f_0 and a k-row e_{k-1}..e_0, the
/// l-row moved delta boxes right of right alignment.
class TableauSpec {
 public:
  TableauSpec(int k, int l, int delta) : k_(k), l_(l), delta_(delta) {
    if (k < 2) throw InvalidSpec("need k >= 2");
    if (l < k) throw InvalidSpec("need l >= k");
    if (delta < 2 - k || delta > l - 2)
      throw InvalidSpec("shift " + std::to_string(delta) + " outside [" + std::to_string(2 - k) + ", " +
                        std::to_string(l - 2) + "]: rows must overlap in at least two cells");
  }

  int k() const { return k_; }
  int l() const { return l_; }
  int delta() const { return delta_; }

  /// Offset that puts the leftmost used column at 1.
  int shift() const { return std::min(delta_, l_ - k_); }
  /// Column (1-based, left to right) of e_i and f_j. X moves one box right.
  int column_e(int i) const { return l_ - i - shift(); }
  int column_f(int j) const { return l_ - j + delta_ - shift(); }
  int width() const { return std::max(column_e(0), column_f(0)); }
  /// Degree is minus the column.
  int degree_e(int i) const { return -column_e(i); }
  int degree_f(int j) const { return -column_f(j); }
  /// Depth of the graded nilpotent algebra: the lowest degree in absolute value.
  int depth() const { return width(); }

  bool first_kind() const { return delta_ == 0; }
  bool second_kind() const { return delta_ == l_ - k_; }

  /// Weighted-degree constants for jet coordinates: deg x = 1,
  /// deg y_i = c_y - i, deg z_j = c_z - j, so that the E generator has
  /// degree -1 and the grading matches the tableau.
  int tanaka_cy() const { return l_ - shift(); }
  int tanaka_cz() const { return l_ + delta_ - shift(); }

  /// Preserved jet projections, e.g. "J^{2,3}→J^{1,2}→J^{0,1}".
  std::vector<std::pair<int, int>> projection_chain() const {
    std::vector<std::pair<int, int>> chain{{k_, l_}};
    for (int a = std::min(k_ - 1, l_ - 1 - delta_); a >= std::max(0, -delta_); --a) chain.emplace_back(a, a + delta_);
    return chain;
  }
  std::string projection_chain_string() const {
    std::string out;
    for (const auto& [a, b] : projection_chain()) {
      if (!out.empty()) out += "→";
      out += "J^{" + std::to_string(a) + "," + std::to_string(b) + "}";
    }
    return out;
  }

  /// Two rows of boxes, the l-row on top, with leading blank cells for the
  /// skew offset.
  std::string render() const {
    const std::size_t cell = std::max(std::to_string(l_ - 1).size(), std::to_string(k_ - 1).size()) + 3;
    auto row = [&](char name, int count, auto column) {
      std::string s(static_cast<std::size_t>(column(count - 1) - 1) * cell, ' ');
      for (int i = count - 1; i >= 0; --i) {
        std::string box = "[" + std::string(1, name) + std::to_string(i);
        box.resize(cell - 1, ' ');
        s += box + "]";
      }
      return s;
    };
    return row('f', l_, [&](int j) { return column_f(j); }) + "\n" +
           row('e', k_, [&](int i) { return column_e(i); }) + "\n";
  }

  std::string label() const {
    return "(" + std::to_string(k_) + "," + std::to_string(l_) + ",δ=" + std::to_string(delta_) + ")";
  }

  friend bool operator==(const TableauSpec&, const TableauSpec&) = default;
  friend auto operator<=>(const TableauSpec&, const TableauSpec&) = default;

 private:
  int k_;
  int l_;
  int delta_;
};

/// All valid specs with 2 <= k <= l and k + l <= max_sum, sorted.
inline std::vector<TableauSpec> spec_grid(int max_sum) {
  std::vector<TableauSpec> out;
  for (int k = 2; 2 * k <= max_sum; ++k)
    for (int l = k; k + l <= max_sum; ++l)
      for (int d = 2 - k; d <= l - 2; ++d) out.emplace_back(k, l, d);
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace mixsym::eds

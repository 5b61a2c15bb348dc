#pragma once

#include <mixsym/jet/jet_space.hpp>

#include <stdexcept>
#include <string>

namespace mixsym::jet {

/// g_{i,j}^{(s)} = d^s/dx^s [ x^{i+j}/(i+j)! * D^i(u0 / x^j) ] in the scalar
/// jet coordinates x, u0..ui where u is `family` ('y' or 'z'). Computed with
/// Laurent arithmetic; the x^{i+j} prefactor must clear every pole.
inline Poly g_function(int i, int j, int s, const VarTablePtr& target, char family = 'z') {
  if (i < 0 || j < 1 || s < 0) throw std::invalid_argument("g_function: need i >= 0, j >= 1, s >= 0");
  if (family != 'y' && family != 'z') throw std::invalid_argument("g_function: family must be y or z");
  const JetSpace chart = family == 'z' ? JetSpace(-1, i) : JetSpace(i, -1);
  const std::size_t u0 = family == 'z' ? chart.z(0) : chart.y(0);
  Poly p = Poly::variable(chart.vars(), u0) * Poly::variable(chart.vars(), 0, -j);
  for (int m = 0; m < i; ++m) p = total_derivative(p, chart, DerivMode::Free);
  p = p * Poly::variable(chart.vars(), 0, i + j) * (1 / exact::factorial(static_cast<unsigned>(i + j)));
  if (p.has_pole()) throw std::logic_error("g_function: pole survived the x^{i+j} prefactor");
  for (int m = 0; m < s; ++m) p = p.partial(0);
  return p.rebase(target);
}

inline Poly g_function(int i, int j, int s, const JetSpace& target, char family = 'z') {
  return g_function(i, j, s, target.vars(), family);
}

}  // namespace mixsym::jet

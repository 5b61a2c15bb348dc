#pragma once

#include <mixsym/jet/vector_field.hpp>

#include <stdexcept>

namespace mixsym::jet {

/// Contact prolongation of a field from `base` to `target`, tower by tower:
///   P_{u_{m+1}} = D(P_{u_m}) - u_{m+1} D(P_x).
/// In Equation mode D is the total derivative restricted to the equation
/// y_{a+1} = z_{b+1} = 0 of the target chart, which is how symmetries of
/// that equation are prolonged past its order.
inline VectorField prolong(const VectorField& field, const JetSpace& base, const JetSpace& target,
                           DerivMode mode = DerivMode::Free) {
  if (!(*field.vars() == *base.vars())) throw std::invalid_argument("prolong: field is not on the base chart");
  if (!target.extends(base)) throw std::invalid_argument("prolong: target does not extend base");
  if ((base.order_y() < 0 && target.order_y() >= 0) || (base.order_z() < 0 && target.order_z() >= 0))
    throw std::invalid_argument("prolong: target adds a dependent variable absent from base");
  VectorField out = field.rebase(target.vars());
  const Poly dx = total_derivative(out[0], target, mode);
  for (int i = base.order_y(); i >= 0 && i < target.order_y(); ++i)
    out[target.y(i + 1)] = total_derivative(out[target.y(i)], target, mode) - target.var(target.y(i + 1)) * dx;
  for (int j = base.order_z(); j >= 0 && j < target.order_z(); ++j)
    out[target.z(j + 1)] = total_derivative(out[target.z(j)], target, mode) - target.var(target.z(j + 1)) * dx;
  return out;
}

}  // namespace mixsym::jet

#include <mixsym/jet/gfun.hpp>
#include <mixsym/jet/prolong.hpp>
#include <mixsym/poly/parse.hpp>

#include <gtest/gtest.h>

#include "gen.hpp"

using namespace mixsym::jet;
using mixsym::exact::rational;
using mixsym::poly::parse_poly;

TEST(JetSpace, CoordinatesInCanonicalOrder) {
  JetSpace s(1, 3);
  EXPECT_EQ(s.vars()->names(), (std::vector<std::string>{"x", "y0", "y1", "z0", "z1", "z2", "z3"}));
  JetSpace scalar(-1, 2);
  EXPECT_EQ(scalar.vars()->names(), (std::vector<std::string>{"x", "z0", "z1", "z2"}));
  EXPECT_EQ(s.successor(s.z(1)), s.z(2));
  EXPECT_TRUE(s.is_top(s.y(1)));
}

TEST(TotalDerivative, Examples) {
  JetSpace s(-1, 4);
  EXPECT_EQ(total_derivative(s.var(0), s), s.constant(1));
  EXPECT_EQ(total_derivative(s.var(s.z(0)), s), s.var(s.z(1)));
  EXPECT_THROW(total_derivative(s.var(s.z(4)), s), std::domain_error);
  EXPECT_TRUE(total_derivative(s.var(s.z(4)), s, DerivMode::Equation).is_zero());
}

TEST(TotalDerivative, SecondDerivativeKillsGr2) {
  for (int r = 1; r <= 5; ++r) {
    // D = d/dx + z1 d/dz0 + ... + z_{r+1} d/dz_r, i.e. the chart J^{r+1}
    // with nothing beyond z_{r+1}
    JetSpace s(-1, r + 1);
    for (int sd = 0; sd <= r; ++sd) {
      Poly g = g_function(r, 2, sd, s);
      EXPECT_FALSE(g.depends_on(s.z(r + 1)));
      Poly d2 = total_derivative(total_derivative(g, s, DerivMode::Equation), s, DerivMode::Equation);
      EXPECT_TRUE(d2.is_zero()) << "r=" << r << " s=" << sd;
    }
  }
}

TEST(GFunction, Examples) {
  JetSpace s(-1, 6);
  for (int j = 1; j <= 5; ++j)
    EXPECT_EQ(g_function(0, j, 0, s), s.var(s.z(0)) * (1 / mixsym::exact::factorial(j)));
  // x^3/3! * D(z0/x^2) = x^3/6 * (z1/x^2 - 2 z0/x^3) expanded by hand
  EXPECT_EQ(g_function(1, 2, 0, s), parse_poly("1/6*x*z1 - 1/3*z0", s.vars()));
  Poly lhs = g_function(1, 1, 0, s) - s.var(0) * g_function(1, 1, 1, s) + g_function(0, 2, 0, s);
  EXPECT_TRUE(lhs.is_zero());
  EXPECT_TRUE(g_function(2, 3, 3, s).is_zero());
  EXPECT_THROW(g_function(1, 0, 0, s), std::invalid_argument);
}

TEST(GFunction, TopCoefficientAndNoPoles) {
  for (int i = 0; i <= 5; ++i)
    for (int j = 1; j <= 5; ++j) {
      JetSpace s(-1, i);
      Poly g = g_function(i, j, 0, s);
      EXPECT_FALSE(g.has_pole());
      // g is linear in z; the z_i coefficient is x^{i+j} x^{-j} / (i+j)!
      mixsym::poly::Monomial m;
      m.e[0] = static_cast<std::int8_t>(i);
      m.e[s.z(i)] = 1;
      EXPECT_EQ(g.coefficient(m), 1 / mixsym::exact::factorial(i + j));
    }
}

TEST(GFunction, IdentityA) {
  for (int i = 1; i <= 6; ++i)
    for (int j = 1; j <= 6; ++j) {
      JetSpace s(-1, i);
      Poly e = g_function(i, j, 0, s) - s.var(0) * g_function(i, j, 1, s) * mixsym::exact::rational(1, i) +
               Rational(j) * g_function(i - 1, j + 1, 0, s);
      EXPECT_TRUE(e.is_zero()) << "i=" << i << " j=" << j;
    }
}

TEST(Bracket, Examples) {
  JetSpace s(0, 0);
  auto dx = VectorField::basis(s.vars(), 0);
  auto xdx = VectorField::basis(s.vars(), 0, s.var(0));
  EXPECT_EQ(bracket(dx, xdx), dx);
  EXPECT_TRUE(bracket(xdx, xdx).is_zero());
}

TEST(Bracket, NonlinearEquationField) {
  JetSpace s(1, 3);
  auto v = s.vars();
  Poly f = parse_poly("y1*z2^2 + z3 - x", v), g = parse_poly("x*z2 + y0^2", v);
  VectorField X(s);
  X[0] = s.constant(1);
  X[s.y(0)] = s.var(s.y(1));
  X[s.y(1)] = f;
  X[s.z(0)] = s.var(s.z(1));
  X[s.z(1)] = s.var(s.z(2));
  X[s.z(2)] = s.var(s.z(3));
  X[s.z(3)] = g;
  VectorField expect(s);
  expect[s.z(1)] = s.constant(1);
  expect[s.y(1)] = parse_poly("2*y1*z2", v);  // df/dz2 by hand
  expect[s.z(3)] = parse_poly("x", v);        // dg/dz2 by hand
  EXPECT_EQ(bracket(VectorField::basis(v, s.z(2)), X), expect);
}

TEST(Property, BracketAxioms) {
  JetSpace s(1, 1);
  testgen::Rng rng(31);
  auto rnd = [&] {
    VectorField v(s);
    for (std::size_t c = 0; c < s.dim(); ++c) v[c] = testgen::random_poly(rng, s.vars(), s.dim(), 2, 2);
    return v;
  };
  for (int t = 0; t < 30; ++t) {
    VectorField a = rnd(), b = rnd(), c = rnd();
    EXPECT_TRUE(bracket(a, a).is_zero());
    EXPECT_EQ(bracket(a, b), rational(-1) * bracket(b, a));
    EXPECT_EQ(bracket(a, b + c), bracket(a, b) + bracket(a, c));
    VectorField jac = bracket(a, bracket(b, c)) + bracket(b, bracket(c, a)) + bracket(c, bracket(a, b));
    EXPECT_TRUE(jac.is_zero());
  }
}

TEST(Prolong, Examples) {
  JetSpace base(0, 0), target(0, 2), wide(3, 3);
  auto dy = VectorField::basis(base.vars(), base.y(0));
  auto p = prolong(dy, base, wide);
  EXPECT_EQ(p, VectorField::basis(wide.vars(), wide.y(0)));

  auto xdx = prolong(VectorField::basis(base.vars(), 0, base.var(0)), base, target);
  VectorField expect = VectorField::basis(target.vars(), 0, target.var(0));
  expect[target.z(1)] = -target.var(target.z(1));
  expect[target.z(2)] = rational(-2) * target.var(target.z(2));
  EXPECT_EQ(xdx, expect);

  // x^2 dx + x y dy + 2 x z dz gains 2 z dz1 on z-order 1
  JetSpace t1(0, 1);
  VectorField v(base);
  v[0] = parse_poly("x^2", base.vars());
  v[base.y(0)] = parse_poly("x*y0", base.vars());
  v[base.z(0)] = parse_poly("2*x*z0", base.vars());
  auto pv = prolong(v, base, t1);
  EXPECT_EQ(pv[t1.z(1)], parse_poly("2*z0", t1.vars()));
  EXPECT_THROW(prolong(v, wide, base), std::invalid_argument);
}

TEST(Property, ProlongationIsALieMorphism) {
  // On J^{2,3} the x- and z-coefficients may not involve y, otherwise the
  // z3 coefficient would need y3.
  JetSpace base(0, 0), target(2, 3);
  auto xz = mixsym::poly::make_vartable({"x", "z0"});
  testgen::Rng rng(32);
  auto rnd = [&] {
    VectorField v(base);
    v[0] = testgen::random_poly(rng, xz, 2, 2, 3).rebase(base.vars());
    v[base.z(0)] = testgen::random_poly(rng, xz, 2, 2, 3).rebase(base.vars());
    v[base.y(0)] = testgen::random_poly(rng, base.vars(), 3, 2, 3);
    return v;
  };
  for (int t = 0; t < 15; ++t) {
    VectorField a = rnd(), b = rnd();
    EXPECT_EQ(prolong(bracket(a, b), base, target),
              bracket(prolong(a, base, target), prolong(b, base, target)));
  }
}

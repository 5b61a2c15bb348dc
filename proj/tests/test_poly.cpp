#include <mixsym/poly/parse.hpp>
#include <mixsym/poly/ratfunc.hpp>

#include <gtest/gtest.h>

#include "gen.hpp"

using namespace mixsym::poly;
using mixsym::exact::rational;

namespace {

VarTablePtr table() { return make_vartable({"x", "y0", "y1", "z0", "z1", "z2", "z3"}); }

}  // namespace

TEST(Poly, PartialExamples) {
  auto v = table();
  EXPECT_EQ(parse_poly("x^2*z0", v).partial("x"), parse_poly("2*x*z0", v));
  EXPECT_EQ(parse_poly("x^-1", v).partial("x"), parse_poly("-x^-2", v));
  // g_{1,1} = (x z1 - z0)/2 expanded by hand; its x-derivative is z1/2
  EXPECT_EQ(parse_poly("1/2*x*z1 - 1/2*z0", v).partial("x"), parse_poly("1/2*z1", v));
  EXPECT_THROW(parse_poly("x", v).partial("w"), std::invalid_argument);
}

TEST(Poly, ArithmeticExamples) {
  auto v = table();
  Poly x = Poly::variable(v, "x"), z0 = Poly::variable(v, "z0");
  EXPECT_EQ((x + z0) * (x - z0), parse_poly("x^2 - z0^2", v));
  Poly p = parse_poly("3*x*y1 - 1/2*z3^2 + 7", v);
  EXPECT_TRUE((p + rational(-1) * p).is_zero());
  EXPECT_EQ(Poly::variable(v, 0, -1) * Poly::variable(v, 0, 2), x);
  EXPECT_EQ(parse_poly("x*z1 + z0", v).substitute_zero(0), z0);
  EXPECT_THROW(parse_poly("x^-1 + z0", v).substitute_zero(0), std::domain_error);
  auto other = make_vartable({"x", "z0"});
  EXPECT_THROW(x + Poly::variable(other, "z0"), std::invalid_argument);
}

TEST(Poly, PrintingIsCanonical) {
  auto v = table();
  EXPECT_EQ(parse_poly("-2*z0 + x*z1", v).to_string(), "x*z1 - 2*z0");
  EXPECT_EQ(parse_poly("1/6*x^2 - y0^3", v).to_string(), "-y0^3 + 1/6*x^2");
  EXPECT_EQ(parse_poly("0", v).to_string(), "0");
  Poly p = parse_poly("3*x^-2*z1 + 1/5*y1^2 - 4", v);
  EXPECT_EQ(parse_poly(p.to_string(), v), p);
}

TEST(Parser, RejectsBadInput) {
  auto v = table();
  EXPECT_THROW(parse_poly("2 x", v), ParseError);
  EXPECT_THROW(parse_poly("z1^-1", v), ParseError);
  EXPECT_THROW(parse_poly("w1", v), ParseError);
  EXPECT_THROW(parse_poly("z9", v), ParseError);
  EXPECT_THROW(parse_poly("(x + 1", v), ParseError);
  EXPECT_THROW(parse_poly("1/0", v), ParseError);
  EXPECT_EQ(parse_poly("(x*z1 - 2*z0)", v), parse_poly("x*z1-2*z0", v));
  EXPECT_EQ(parse_poly("-(x+1)^2", v), parse_poly("-x^2 - 2*x - 1", v));
}

TEST(Poly, ExactDivision) {
  auto v = table();
  Poly a = parse_poly("x^2 - z0^2", v);
  EXPECT_EQ(a.divide_exact(parse_poly("x + z0", v)), parse_poly("x - z0", v));
  EXPECT_THROW(a.divide_exact(parse_poly("x + 2*z0", v)), std::domain_error);
}

TEST(Property, RingAxioms) {
  auto v = table();
  testgen::Rng rng(21);
  for (int t = 0; t < 100; ++t) {
    Poly a = testgen::random_poly(rng, v, 7, 3, 4, true);
    Poly b = testgen::random_poly(rng, v, 7, 3, 4, true);
    Poly c = testgen::random_poly(rng, v, 7, 3, 4, true);
    EXPECT_EQ((a * b) * c, a * (b * c));
    EXPECT_EQ(a * (b + c), a * b + a * c);
    EXPECT_EQ(a * b, b * a);
    EXPECT_EQ(a + b, b + a);
    EXPECT_TRUE((a - a).is_zero());
  }
}

TEST(Property, PartialIsADerivation) {
  auto v = table();
  testgen::Rng rng(22);
  for (int t = 0; t < 100; ++t) {
    Poly a = testgen::random_poly(rng, v, 7, 3, 4, true);
    Poly b = testgen::random_poly(rng, v, 7, 3, 4, true);
    const std::size_t var = rng.range(0, 6);
    EXPECT_EQ((a + b).partial(var), a.partial(var) + b.partial(var));
    EXPECT_EQ((a * b).partial(var), a.partial(var) * b + a * b.partial(var));
  }
}

TEST(Property, ParseRoundTrip) {
  auto v = table();
  testgen::Rng rng(23);
  for (int t = 0; t < 100; ++t) {
    Poly a = testgen::random_poly(rng, v, 7, 4, 5, true);
    EXPECT_EQ(parse_poly(a.to_string(), v), a);
  }
}

TEST(RatFuncKernel, Examples) {
  auto v = table();
  Poly z3 = Poly::variable(v, "z3"), z1 = Poly::variable(v, "z1"), x = Poly::variable(v, "x");
  EXPECT_TRUE(ratfunc_kernel({{z3}}, 1).empty());
  EXPECT_EQ(ratfunc_kernel({{Poly(v)}}, 1).size(), 1u);
  auto k = ratfunc_kernel({{z1, z1 * x}}, 2);
  ASSERT_EQ(k.size(), 1u);
  EXPECT_EQ(k[0][0], x);
  EXPECT_EQ(k[0][1], Poly(v, -1));
}

TEST(RatFunc, CrossMultiplicationEquality) {
  auto v = table();
  Poly x = Poly::variable(v, "x"), z0 = Poly::variable(v, "z0");
  EXPECT_EQ(RatFunc(x * z0, x * x), RatFunc(z0, x));
  EXPECT_EQ(RatFunc(x, z0) + RatFunc(z0, x), RatFunc(x * x + z0 * z0, x * z0));
  EXPECT_THROW(RatFunc(x, Poly(v)), std::domain_error);
}

TEST(Property, RatFuncKernelRankNullity) {
  auto v = table();
  testgen::Rng rng(24);
  for (int t = 0; t < 40; ++t) {
    const std::size_t rows = rng.range(1, 3), cols = rng.range(1, 4);
    PolyMatrix m(rows);
    for (auto& row : m)
      for (std::size_t c = 0; c < cols; ++c) row.push_back(testgen::random_poly(rng, v, 4, 2, 2));
    // occasionally make the last row dependent on the first
    if (rows > 1 && rng.coin()) {
      Poly f = testgen::random_poly(rng, v, 4, 1, 2);
      for (std::size_t c = 0; c < cols; ++c) m[rows - 1][c] = f * m[0][c];
    }
    auto k = ratfunc_kernel(m, cols);
    // Oracle for the generic rank: the largest rank over a few random
    // integer points. It never exceeds the generic rank and reaches it
    // unless every point lies on a proper subvariety.
    std::size_t generic_rank = 0;
    for (int pt = 0; pt < 6; ++pt) {
      std::vector<Rational> point;
      for (std::size_t i = 0; i < v->size(); ++i) point.push_back(rng.integer(1, 97));
      mixsym::exact::Matrix e(rows, cols);
      for (std::size_t r = 0; r < rows; ++r)
        for (std::size_t c = 0; c < cols; ++c) e(r, c) = m[r][c].evaluate(point);
      generic_rank = std::max(generic_rank, mixsym::exact::rank(e));
    }
    EXPECT_EQ(generic_rank + k.size(), cols);
    for (const auto& vec : k) {
      for (const auto& row : m) {
        Poly s(v);
        for (std::size_t c = 0; c < cols; ++c) s += row[c] * vec[c];
        EXPECT_TRUE(s.is_zero());
      }
    }
  }
}

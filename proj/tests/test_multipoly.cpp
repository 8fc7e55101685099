#include <gtest/gtest.h>

#include <random>

#include "rlab/poly/multipoly.hpp"
#include "rlab/poly/rational_function.hpp"

using namespace rlab;

namespace {

const std::vector<std::string> kXY{"x", "y"};

MultiPoly P(const std::string& s, std::vector<std::string> vars = {"x", "y", "r"}) {
  return parse_poly(s, std::move(vars));
}

MultiPoly random_poly(std::mt19937& rng, const std::vector<std::string>& vars, int max_deg,
                      int terms) {
  std::uniform_int_distribution<int> coeff(-5, 5);
  std::vector<Term> ts;
  for (int i = 0; i < terms; ++i) {
    Exponents e(vars.size());
    for (auto& v : e) v = rng() % (max_deg + 1);
    ts.push_back(Term{e, coeff(rng)});
  }
  return MultiPoly(vars, ts);
}

}  // namespace

TEST(MultiPoly, ParsesAndPrintsCanonically) {
  MultiPoly c = P("x^2*y^4 - x*y^4 + y^4 + 2*x^2*y^2 - 3*x*y^2 + 2*y^2 + x^2 - x + 1");
  // Output is in graded lex order regardless of input order.
  EXPECT_EQ(c.to_string(), "x^2*y^4 - x*y^4 + 2*x^2*y^2 + y^4 - 3*x*y^2 + x^2 + 2*y^2 - x + 1");
  EXPECT_EQ(P(c.to_string()), c);
  EXPECT_EQ(P("x^4-x^3+3 x^2-x+1").to_string(), "x^4 - x^3 + 3*x^2 - x + 1");
  // Juxtaposition, parentheses, rationals.
  EXPECT_EQ(P("(y+1)(x y - 1)"), P("x*y^2 + x*y - y - 1"));
  EXPECT_EQ(P("3/2 x - 1/2").to_string(), "3/2*x - 1/2");
  EXPECT_EQ(P("-(x-1)^2"), P("-x^2 + 2*x - 1"));
  EXPECT_THROW(P("x^"), std::invalid_argument);
  EXPECT_THROW(P("x + )"), std::invalid_argument);
  EXPECT_THROW(P("x / y"), std::invalid_argument);
}

TEST(MultiPoly, ArithmeticAndDivision) {
  MultiPoly a = P("x^2 - y"), b = P("x + y^2");
  MultiPoly prod = a * b;
  EXPECT_EQ(*prod.divide_exact(a), b);
  EXPECT_EQ(*prod.divide_exact(b), a);
  EXPECT_FALSE(P("x^2 + 1").divide_exact(P("x + 1")).has_value());
  EXPECT_EQ((a - a).is_zero(), true);
  EXPECT_EQ(P("x*y").substitute("y", P("x + 1")), P("x^2 + x"));
  EXPECT_EQ(P("x^3*y").derivative("x"), P("3*x^2*y"));
  EXPECT_EQ(P("x^3*y^2 + x").coefficients_in("x").size(), 4u);
}

TEST(MultiPoly, DivideOut) {
  MultiPoly p = P("x^4 - x^3 + 3*x^2 - x + 1");
  MultiPoly g = P("x^2 + 1");
  auto [q, k] = divide_out(g * g * p, g);
  EXPECT_EQ(q, p);
  EXPECT_EQ(k, 2u);
  auto [q2, k2] = divide_out(p, P("x + 7"));
  EXPECT_EQ(q2, p);
  EXPECT_EQ(k2, 0u);
}

TEST(MultiPoly, Gcd) {
  MultiPoly g = P("x^2*y - x + 3");
  MultiPoly a = g * P("x*y + y^3 + 1"), b = g * P("x - y^2");
  EXPECT_EQ(gcd(a, b), g.normalized());
  EXPECT_EQ(gcd(P("x^2*y"), P("x*y^3 + x^2*y")), P("x*y"));
  EXPECT_TRUE(gcd(P("x + 1"), P("y + 1")).is_constant());
}

TEST(MultiPoly, GcdRandomProducts) {
  std::mt19937 rng(3);
  for (int trial = 0; trial < 40; ++trial) {
    MultiPoly g = random_poly(rng, kXY, 2, 3);
    MultiPoly a = random_poly(rng, kXY, 2, 3), b = random_poly(rng, kXY, 2, 3);
    if (g.is_zero() || a.is_zero() || b.is_zero()) continue;
    MultiPoly h = gcd(g * a, g * b);
    EXPECT_TRUE((g * a).divide_exact(h).has_value());
    EXPECT_TRUE((g * b).divide_exact(h).has_value());
    EXPECT_TRUE(h.divide_exact(g).has_value() || g.is_constant());
  }
}

TEST(Resultant, SmallExamples) {
  EXPECT_EQ(resultant(P("x - a", {"x", "a", "b"}), P("x - b", {"x", "a", "b"}), "x"),
            P("a - b", {"x", "a", "b"}));
  EXPECT_EQ(resultant(P("x^2 + 1", {"x"}), P("x - 1", {"x"}), "x"), P("2", {"x"}));
  EXPECT_THROW(resultant(P("y + 1"), P("x - 1"), "x"), std::invalid_argument);
}

TEST(Resultant, EvaluationIdentityRandom) {
  std::mt19937 rng(5);
  std::uniform_int_distribution<int> num(-20, 20), den(1, 9);
  for (int trial = 0; trial < 1000; ++trial) {
    MultiPoly f = random_poly(rng, {"x"}, 4, 4);
    if (f.degree("x") < 1) continue;
    BigRational c = make_rational(num(rng), den(rng));
    MultiPoly lin = MultiPoly::variable({"x"}, "x") - MultiPoly({"x"}, c);
    BigRational expect = f.substitute("x", c).constant_value();
    // Res(f, x - c) = f(c) with f first: sign (-1)^{deg f} relative to Res(x - c, f).
    EXPECT_EQ(resultant(lin, f, "x").constant_value(), expect);
  }
}

TEST(Resultant, MultiplicativityRandom) {
  std::mt19937 rng(9);
  int checked = 0;
  while (checked < 1000) {
    MultiPoly f = random_poly(rng, {"x", "y"}, 2, 3), g = random_poly(rng, {"x", "y"}, 2, 3),
              h = random_poly(rng, {"x", "y"}, 2, 3);
    if (f.degree("x") < 1 || g.degree("x") < 1 || h.degree("x") < 1) continue;
    EXPECT_EQ(resultant(f * g, h, "x"), resultant(f, h, "x") * resultant(g, h, "x"));
    ++checked;
  }
}

TEST(Resultant, RemainderShortcutMatchesSylvester) {
  std::mt19937 rng(13);
  int checked = 0;
  while (checked < 300) {
    MultiPoly f = random_poly(rng, {"x", "y"}, 3, 4), g = random_poly(rng, {"x", "y"}, 2, 3);
    if (checked % 2) g += MultiPoly::monomial({"x", "y"}, {3, 0});  // constant leading coefficient
    if (f.degree("x") < 1 || g.degree("x") < 1) continue;
    EXPECT_EQ(resultant(f, g, "x"), sylvester_resultant(f, g, "x"));
    EXPECT_EQ(resultant(g, f, "x"), sylvester_resultant(g, f, "x"));
    ++checked;
  }
}

TEST(RationalFunction, ReducesAndNormalizes) {
  RationalFunction f(P("x^2 - 1"), P("-2*x - 2"));
  EXPECT_EQ(f.num(), P("-1/2*x + 1/2"));
  EXPECT_EQ(f.den(), P("1"));
  RationalFunction a(P("1"), P("x")), b(P("1"), P("y"));
  RationalFunction s = a + b;
  EXPECT_EQ(s.num(), P("x + y"));
  EXPECT_EQ(s.den(), P("x*y"));
  EXPECT_TRUE((s - s).is_zero());
  EXPECT_EQ(s * s.inverse(), RationalFunction(P("1")));
  RationalFunction sub = RationalFunction(P("r*x - 1")).substitute("r", RationalFunction(P("1"), P("x")));
  EXPECT_TRUE(sub.is_zero());
}

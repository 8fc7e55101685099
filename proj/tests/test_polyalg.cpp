#include <gtest/gtest.h>

#include <cmath>
#include <random>

#include "rlab/poly/cyclotomic.hpp"
#include "rlab/poly/factor.hpp"
#include "rlab/poly/number_field.hpp"
#include "rlab/poly/real_roots.hpp"

using namespace rlab;

namespace {

UniPoly U(const std::string& s, const std::string& v = "x") { return UniPoly::parse(s, v); }

std::vector<BigInt> signed_divisors(const BigInt& n) {
  std::vector<BigInt> out;
  BigInt a = abs(n);
  for (BigInt d = 1; d * d <= a; ++d) {
    if (a % d != 0) continue;
    for (const BigInt& e : {d, BigInt(a / d)}) {
      out.push_back(e);
      out.push_back(-e);
    }
  }
  return out;
}

// Brute force: does integer f (lc 1) have a monic integer factor of degree 1 or 2
// whose middle coefficient lies within `bound`?
bool has_small_factor(const UniPoly& f, long bound) {
  BigInt c0 = f.integer_coeffs().front();
  for (const BigInt& b : signed_divisors(c0)) {
    if (f(BigRational(-b)) == 0) return true;
    for (long a = -bound; a <= bound; ++a) {
      UniPoly q("x", std::vector<BigRational>{BigRational(b), BigRational(a), BigRational(1)});
      if ((f % q).is_zero()) return true;
    }
  }
  return false;
}

double eval_d(const UniPoly& f, double x) {
  double acc = 0;
  for (int i = f.degree(); i >= 0; --i) acc = acc * x + f.coeff(i).get_d();
  return acc;
}

// Sum of |c_i x^i|, the scale for rounding error in eval_d.
double eval_abs(const UniPoly& f, double x) {
  double acc = 0;
  for (int i = f.degree(); i >= 0; --i) acc = acc * std::abs(x) + std::abs(f.coeff(i).get_d());
  return acc;
}

}  // namespace

TEST(Factor, KnownIrreducibles) {
  UniPoly p = U("x^4 - x^3 + 3*x^2 - x + 1");
  UniPoly q = U("r^4 - 9*r^2 + 36", "r").with_var("x");
  EXPECT_TRUE(is_irreducible(p));
  EXPECT_TRUE(is_irreducible(q));
  // Any quadratic factor of a monic integer quartic has middle coefficient
  // bounded by 2 * ||f||_2, well inside 80 for both.
  EXPECT_FALSE(has_small_factor(p, 80));
  EXPECT_FALSE(has_small_factor(q, 80));
  EXPECT_TRUE(is_irreducible(U("x^3 - 3*x - 1")));
}

TEST(Factor, BruteForceAgreesOnRandomQuartics) {
  std::mt19937 rng(11);
  std::uniform_int_distribution<int> c(-6, 6);
  for (int trial = 0; trial < 1000; ++trial) {
    std::vector<BigRational> cs{c(rng), c(rng), c(rng), c(rng), 1};
    if (cs[0] == 0) cs[0] = 1;
    UniPoly f("x", cs);
    // Coefficients are at most 6, so ||f||_2 < 13 and factor coefficients stay below 26.
    EXPECT_EQ(is_irreducible(f), !has_small_factor(f, 26)) << f.to_string();
  }
}

TEST(Factor, RoundTripRandomProducts) {
  std::mt19937 rng(17);
  std::uniform_int_distribution<int> c(-4, 4), deg(1, 3), count(1, 3);
  for (int trial = 0; trial < 1000; ++trial) {
    UniPoly f("x", {1});
    int n = count(rng);
    for (int i = 0; i < n; ++i) {
      std::vector<BigRational> cs;
      int d = deg(rng);
      for (int j = 0; j < d; ++j) cs.push_back(c(rng));
      int lead = c(rng);
      cs.push_back(lead == 0 ? 1 : lead);
      f = f * UniPoly("x", cs);
    }
    Factorization fac = factor_univariate(f);
    ASSERT_EQ(fac.expand(), f) << f.to_string();
    for (const auto& [g, e] : fac.factors) {
      EXPECT_GE(e, 1u);
      EXPECT_GT(g.lc(), 0);
      EXPECT_EQ(g, g.primitive());
    }
  }
}

TEST(Factor, SwinnertonDyerStyleRecombination) {
  // Minimal polynomial of sqrt2 + sqrt3: irreducible over Q but splits modulo every prime.
  EXPECT_TRUE(is_irreducible(U("x^4 - 10*x^2 + 1")));
  Factorization f = factor_univariate(U("(x^4 - 10*x^2 + 1)*(x^2 - 2)^2*x"));
  ASSERT_EQ(f.factors.size(), 3u);
  EXPECT_EQ(f.factors[0].first, U("x"));
  EXPECT_EQ(f.factors[1].first, U("x^2 - 2"));
  EXPECT_EQ(f.factors[1].second, 2u);
}

TEST(SquareFree, Decomposition) {
  UniPoly f = U("(x - 1)*(x + 2)^2*(x^2 + 1)^3");
  auto parts = squarefree_decomposition(f);
  UniPoly prod("x", {1});
  for (const auto& [g, e] : parts)
    for (unsigned i = 0; i < e; ++i) prod = prod * g;
  EXPECT_EQ(prod.monic(), f.monic());
  EXPECT_FALSE(is_squarefree(f));
  EXPECT_TRUE(is_squarefree(U("x^3 - 3*x - 1")));
  EXPECT_TRUE(is_palindromic(U("x^4 - x^3 + 3*x^2 - x + 1")));
  EXPECT_FALSE(is_palindromic(U("x^3 - 3*x - 1")));
}

TEST(RealRoots, Counts) {
  EXPECT_EQ(count_real_roots(U("x^2 - 2")), 2);
  EXPECT_EQ(count_real_roots(U("x^3 - 3*x - 1")), 3);
  EXPECT_EQ(count_real_roots(U("x^4 - x^3 + 3*x^2 - x + 1")), 0);
  EXPECT_EQ(count_real_roots(U("r^4 - 9*r^2 + 36", "r")), 0);
}

TEST(RealRoots, IsolationMatchesKnownRoots) {
  std::mt19937 rng(23);
  std::uniform_int_distribution<int> num(-30, 30), den(1, 7);
  for (int trial = 0; trial < 1000; ++trial) {
    std::vector<BigRational> roots;
    int n = 1 + trial % 5;
    UniPoly f("x", {1});
    for (int i = 0; i < n; ++i) {
      BigRational r = make_rational(num(rng), den(rng));
      if (std::find(roots.begin(), roots.end(), r) != roots.end()) continue;
      roots.push_back(r);
      f = f * UniPoly("x", std::vector<BigRational>{-r, 1});
    }
    f = f * U("x^2 + 1");
    std::sort(roots.begin(), roots.end());
    auto ivs = isolate_real_roots(f);
    ASSERT_EQ(ivs.size(), roots.size());
    for (std::size_t i = 0; i < ivs.size(); ++i) EXPECT_TRUE(ivs[i].contains(roots[i]));
  }
}

TEST(RealRoots, AlgebraicSign) {
  AlgebraicNumber s2 = AlgebraicNumber::real_root_near(U("x^2 - 2"), 1.4);
  EXPECT_NEAR(s2.approx(), std::sqrt(2.0), 1e-12);
  EXPECT_EQ(s2.sign_of(U("x - 1")), 1);
  EXPECT_EQ(s2.sign_of(U("x - 3/2")), -1);
  EXPECT_EQ(s2.sign_of(U("x^2 - 2")), 0);
  EXPECT_EQ(s2.sign_of(U("5*x - 7")), 1);
}

TEST(Cyclotomic, TwoCosMinimalPolynomials) {
  EXPECT_EQ(minpoly_two_cos_pi_over(4), U("x^2 - 2"));
  EXPECT_EQ(minpoly_two_cos_pi_over(5), U("x^2 - x - 1"));
  EXPECT_EQ(minpoly_two_cos_pi_over(6), U("x^2 - 3"));
  EXPECT_EQ(minpoly_two_cos_pi_over(9), U("x^3 - 3*x - 1"));
  EXPECT_EQ(minpoly_two_cos_pi_over(3), U("x - 1"));
}

TEST(Cyclotomic, TwoCosPropertiesRange) {
  for (unsigned long n = 3; n <= 60; ++n) {
    UniPoly m = minpoly_two_cos_pi_over(n);
    EXPECT_EQ(static_cast<unsigned long>(m.degree()), euler_phi(2 * n) / 2) << n;
    double u = 2 * std::cos(M_PI / n);
    EXPECT_LT(std::abs(eval_d(m, u)), 1e-12 * eval_abs(m, u)) << n;
    if (n <= 30) EXPECT_TRUE(is_irreducible(m)) << n;
  }
  for (unsigned long k = 0; k <= 12; ++k)
    EXPECT_NEAR(eval_d(chebyshev_two_cos(k), 2 * std::cos(0.3)), 2 * std::cos(0.3 * k), 1e-9);
}

TEST(NumberField, Arithmetic) {
  NumberField k = NumberField::real(U("x^3 - 3*x - 1"), 1.87);
  std::mt19937 rng(29);
  std::uniform_int_distribution<int> c(-9, 9);
  for (int trial = 0; trial < 1000; ++trial) {
    FieldElement a = k.reduce(UniPoly("t", {c(rng), c(rng), c(rng)}));
    if (k.is_zero(a)) continue;
    FieldElement one = k.mul(a, k.inv(a));
    EXPECT_EQ(one, k.from_rational(1));
    double ad = k.approx(a);
    if (std::abs(ad) > 1e-6) EXPECT_EQ(k.sign(a), ad > 0 ? 1 : -1);
  }
  FieldElement t = k.generator();
  EXPECT_EQ(k.minpoly_of(t), U("t^3 - 3*t - 1", "t"));
  EXPECT_EQ(k.minpoly_of(k.mul(t, t)).degree(), 3);
}

TEST(NumberField, QuadraticSplitting) {
  NumberField q = NumberField::rationals();
  auto v = field_factor_quadratic(q, q.from_rational(1), q.from_rational(0), q.from_rational(-2));
  EXPECT_TRUE(v.irreducible);

  NumberField k = NumberField::real(U("t^2 - 2", "t"), 1.41);
  auto s = field_factor_quadratic(k, k.from_rational(1), k.from_rational(0), k.from_rational(-2));
  EXPECT_FALSE(s.irreducible);
  ASSERT_EQ(s.roots.size(), 2u);
  FieldElement t = k.generator();
  EXPECT_TRUE((s.roots[0] == t && s.roots[1] == k.neg(t)) ||
              (s.roots[1] == t && s.roots[0] == k.neg(t)));

  auto u = field_factor_quadratic(k, k.from_rational(1), k.from_rational(0), k.from_rational(-21));
  EXPECT_TRUE(u.irreducible);
  EXPECT_EQ(u.method, "norm-factorization");

  auto n = field_factor_quadratic(k, k.from_rational(1), k.from_rational(0), k.from_rational(3));
  EXPECT_TRUE(n.irreducible);
  EXPECT_EQ(n.method, "negative-discriminant");

  // (z - t)^2 has a repeated root.
  auto r = field_factor_quadratic(k, k.from_rational(1), k.mul(k.from_rational(-2), t),
                                  k.from_rational(2));
  EXPECT_TRUE(r.repeated_root);

  // z^2 - (3 + 2t) = (z - (1 + t))(z + (1 + t)).
  auto w = field_factor_quadratic(k, k.from_rational(1), k.from_rational(0),
                                  k.neg(k.add(k.from_rational(3), k.mul(k.from_rational(2), t))));
  EXPECT_FALSE(w.irreducible);
}

#include <gtest/gtest.h>

#include <random>

#include "golden.hpp"
#include "rlab/repvar/gamma4.hpp"
#include "rlab/repvar/representation.hpp"

using namespace rlab;

namespace {

const std::vector<std::string> kV{"x", "y", "r"};

MultiPoly P(const std::string& s) { return parse_poly(s, kV); }
RationalFunction RF(const std::string& n, const std::string& d = "1") { return RationalFunction(P(n), P(d)); }

bool same_up_to_unit(const MultiPoly& a, const MultiPoly& b) { return a.normalized() == b.normalized(); }

class Gamma4 : public ::testing::Test {
 protected:
  static void SetUpTestSuite() {
    golden = new std::map<std::string, std::string>(load_golden("gamma4_reference.txt"));
    cert = new RigidityCertificate(gamma4_pipeline());
  }
  static void TearDownTestSuite() {
    delete cert;
    delete golden;
  }
  static const std::string& g(const std::string& k) { return golden->at(k); }
  static RigidityCertificate* cert;
  static std::map<std::string, std::string>* golden;
};
RigidityCertificate* Gamma4::cert = nullptr;
std::map<std::string, std::string>* Gamma4::golden = nullptr;

GroupWord random_word(std::mt19937& rng, int len) {
  std::vector<Syllable> s;
  for (int i = 0; i < len; ++i) {
    long e = static_cast<long>(rng() % 3) + 1;
    s.push_back({rng() % 2 ? "a" : "b", rng() % 2 ? e : -e});
  }
  return GroupWord(s);
}

}  // namespace

TEST(EvalWord, Basics) {
  Assignment rho = standard_assignment();
  EXPECT_EQ(eval_word(GroupWord(), rho), SymMat2::identity(kV));
  EXPECT_EQ(eval_word(parse_word("a a^-1"), rho), SymMat2::identity(kV));
  EXPECT_EQ(eval_word(parse_word("a"), rho), SymMat2(RF("x"), RF("1"), RF("0"), RF("1", "x")));
  EXPECT_THROW(eval_word(parse_word("c"), rho), std::invalid_argument);
  Assignment bad{{"a", SymMat2(RF("2"), RF("0"), RF("0"), RF("1"))}};
  EXPECT_THROW(eval_word(parse_word("a"), bad), std::domain_error);
}

TEST(EvalWord, DeterminantAndHomomorphism) {
  Assignment rho = standard_assignment();
  std::mt19937 rng(41);
  RationalFunction one = RationalFunction::constant(kV, 1);
  for (int trial = 0; trial < 60; ++trial) {
    GroupWord u = random_word(rng, 1 + trial % 4), v = random_word(rng, 1 + trial % 3);
    SymMat2 mu = eval_word(u, rho), mv = eval_word(v, rho);
    EXPECT_EQ(mu.determinant(), one);
    EXPECT_EQ(eval_word(u * v, rho), mu * mv);
    EXPECT_EQ(eval_word(u.inverse(), rho), mu.unimodular_inverse());
  }
}

TEST(Residual, TrivialAndErrors) {
  Assignment rho = standard_assignment();
  EXPECT_TRUE(relation_residual(parse_word("a"), parse_word("a^-1"), rho).matrix.is_zero());
  EXPECT_THROW(relation_residual(parse_word("a b"), 3, rho), std::out_of_range);
}

TEST(Residual, SplitPointsDifferByRightFactor) {
  // Moving syllable v from w2 to w1 multiplies the residual on the right by rho(v).
  Assignment rho = standard_assignment();
  Gamma4Options o = Gamma4Options::defaults();
  for (const auto& rel : {o.first.relator, o.second.relator}) {
    ResidualMatrix prev = relation_residual(rel, 0, rho);
    for (std::size_t k = 1; k <= rel.size(); ++k) {
      ResidualMatrix cur = relation_residual(rel, k, rho);
      GroupWord v({rel.syllables()[k - 1]});
      EXPECT_EQ(cur.matrix, prev.matrix * eval_word(v, rho)) << rel.to_string() << " split " << k;
      prev = cur;
    }
  }
}

TEST(Residual, GenericParametersDoNotRepresent) {
  auto c = [](long n, long d = 1) { return RationalFunction::constant(kV, make_rational(n, d)); };
  Assignment rho{{"a", SymMat2(c(2), c(1), c(0), c(1, 2))}, {"b", SymMat2(c(3), c(0), c(1), c(1, 3))}};
  Gamma4Options o = Gamma4Options::defaults();
  EXPECT_FALSE(relation_residual(o.first.relator, o.first.split, rho).matrix.is_zero());
  EXPECT_FALSE(relation_residual(o.second.relator, o.second.split, rho).matrix.is_zero());
}

TEST(SolveLinear, Cases) {
  EXPECT_EQ(solve_linear_parameter(P("r*x - 1"), "r"), RF("1", "x"));
  EXPECT_THROW(solve_linear_parameter(P("x - 1"), "r"), std::invalid_argument);
  EXPECT_THROW(solve_linear_parameter(P("r^2 - x"), "r"), std::invalid_argument);
}

TEST(Palindromic, TracePolynomial) {
  EXPECT_EQ(palindromic_trace_polynomial(UniPoly::parse("x^4 - x^3 + 3*x^2 - x + 1", "x")),
            UniPoly::parse("X^2 - X + 1", "X"));
  EXPECT_EQ(palindromic_trace_polynomial(UniPoly::parse("x^2 + 1", "x")), UniPoly::parse("X", "X"));
  EXPECT_THROW(palindromic_trace_polynomial(UniPoly::parse("x^3 - 3*x - 1", "x")), std::invalid_argument);
}

TEST_F(Gamma4, MatrixR) {
  const char* keys[] = {"R11", "R12", "R21", "R22"};
  for (int k = 0; k < 4; ++k) {
    std::string key = keys[k];
    EXPECT_EQ(cert->R.entries()[k], RF(g(key + "_num"), g(key + "_den"))) << key;
  }
  EXPECT_TRUE(same_up_to_unit(cert->r12_numerator, P(g("R12_num"))));
  EXPECT_EQ(cert->r12_sign, -1);
}

TEST_F(Gamma4, SolvedParameter) {
  EXPECT_EQ(cert->r_solution, RF(g("r_num"), g("r_den")));
}

TEST_F(Gamma4, MatrixR1AndConstraint) {
  EXPECT_TRUE(cert->R1.at(1, 2).is_zero());
  EXPECT_EQ(cert->R1.at(1, 1), RF(g("R1_11_num"), g("R1_11_den")));
  EXPECT_EQ(cert->R1.at(2, 1), RF(g("R1_21_num"), g("R1_21_den")));
  EXPECT_EQ(cert->R1.at(2, 2), RF(g("R1_22_num"), g("R1_22_den")));
  EXPECT_EQ(cert->constraint, P(g("C")));
  ASSERT_EQ(cert->r1_22_discarded.size(), 2u);
  EXPECT_EQ(cert->r1_22_discarded[0].factor, UniPoly::parse("x^2 + 1", "x"));
  EXPECT_EQ(cert->r1_22_discarded[1].factor, UniPoly::parse("x^2 + x + 1", "x"));
}

TEST_F(Gamma4, MatrixSNumerators) {
  for (int k = 0; k < 4; ++k) {
    std::string key = "s" + std::to_string(k + 1);
    MultiPoly want = P(g(key));
    EXPECT_EQ(cert->s[k], want.normalized()) << key;
  }
  // s2 carries the factor (y + 1), s3 the numerator of r.
  EXPECT_TRUE(cert->s[1].divide_exact(P("y + 1")).has_value());
  EXPECT_TRUE(cert->s[2].divide_exact(P(g("r_num"))).has_value());
}

TEST_F(Gamma4, XPolynomial) {
  UniPoly p = UniPoly::parse(g("p"), "x");
  EXPECT_EQ(cert->x_poly, p);
  EXPECT_EQ(cert->x_poly_by_gcd, cert->x_poly_by_intersection);
  EXPECT_TRUE(cert->x_poly_palindromic);
  for (int k = 0; k < 4; ++k) {
    bool has_p = false;
    for (const auto& f : cert->x_eliminant_factors[k]) has_p |= f.factor == p;
    EXPECT_TRUE(has_p) << k;
    // Removing x^2 + x + 1 leaves a quotient still divisible by p.
    MultiPoly e = cert->x_eliminants[k].to_multi();
    auto [q, m] = divide_out(e, P("x^2 + x + 1"));
    EXPECT_GE(m, 1u);
    EXPECT_TRUE(q.divide_exact(p.to_multi()).has_value());
  }
  // Everything else in the gcd is a declared spurious factor.
  for (const auto& f : cert->x_gcd_factors) EXPECT_TRUE(f.spurious || f.factor == p);
}

TEST_F(Gamma4, YPolynomials) {
  ASSERT_EQ(cert->y_polys.size(), 2u);
  EXPECT_EQ(cert->y_polys[0], UniPoly::parse(g("y1"), "y"));
  EXPECT_EQ(cert->y_polys[1], UniPoly::parse(g("y2"), "y"));
  EXPECT_TRUE(cert->y_polys_related_by_sign);
}

TEST_F(Gamma4, RPolynomial) {
  EXPECT_EQ(cert->r_poly, UniPoly::parse(g("rpoly"), "r"));
  EXPECT_EQ(cert->r_eliminants.size(), 8u);
  for (const auto& e : cert->r_eliminants)
    if (!e.is_zero()) EXPECT_TRUE((e % cert->r_poly).is_zero());
}

TEST_F(Gamma4, CharacterPolynomial) {
  EXPECT_TRUE(cert->character_identity);
  EXPECT_EQ(cert->character_poly, UniPoly::parse(g("charpoly"), "X"));
}

TEST_F(Gamma4, NumericCheck) {
  NumericReport rep = numeric_check(*cert, 30);
  EXPECT_TRUE(rep.residual_ok) << rep.offending_entry;
  EXPECT_LT(rep.residual_log10, -20);
  EXPECT_TRUE(rep.r_matches_reference) << rep.r0;
  EXPECT_TRUE(rep.r_root_of_r_poly);
  EXPECT_TRUE(rep.equal_xy_no_solution);
  EXPECT_EQ(rep.equal_xy_residual_log10.size(), 4u);
  for (double v : rep.equal_xy_residual_log10) EXPECT_GT(v, -1);
  EXPECT_TRUE(rep.passed);
  NumericReport hi = numeric_check(*cert, 50);
  EXPECT_LT(hi.residual_log10, -40);
}

TEST(Gamma4Pipeline, ThreeFactorSpuriousListLeavesOrderThreeFactor) {
  Gamma4Options o = Gamma4Options::defaults();
  o.spurious.pop_back();  // drop x^2 - x + 1
  try {
    gamma4_pipeline(o);
    FAIL() << "pipeline should not complete";
  } catch (const PipelineError& e) {
    EXPECT_EQ(e.stage, "eliminate-y");
    EXPECT_NE(std::string(e.what()).find("x^2 - x + 1"), std::string::npos) << e.what();
  }
}

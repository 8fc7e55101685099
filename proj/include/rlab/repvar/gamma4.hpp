#pragma once

#include <array>
#include <stdexcept>
#include <string>
#include <vector>

#include "rlab/groups/word.hpp"
#include "rlab/poly/rational_function.hpp"
#include "rlab/poly/unipoly.hpp"
#include "rlab/repvar/sym_mat2.hpp"

namespace rlab {

/// Failure of one pipeline stage to reproduce an expected structural property.
struct PipelineError : std::runtime_error {
  PipelineError(std::string stage, const std::string& msg)
      : std::runtime_error("[" + stage + "] " + msg), stage(std::move(stage)) {}
  std::string stage;
};

struct SplitRelator {
  GroupWord relator;
  std::size_t split;  // syllables in w1
};

struct Gamma4Options {
  SplitRelator first;   // b a^-2 b a^-1 b^2 | a b^2 a^-1
  SplitRelator second;  // a^2 b a b^2 | a b a^2 b^-1
  /// Factors of x discarded from the eliminants. Each corresponds to rho(a)
  /// having order at most 3 in PSL(2,C): x = 0 is degenerate, x^2 + 1 gives
  /// trace 0 (order 2), x^2 + x + 1 and x^2 - x + 1 give trace -1 and 1
  /// (order 3). Imposing a^2 = 1 or a^3 = 1 on the group yields a finite quotient.
  std::vector<UniPoly> spurious;
  /// Run the independent eliminations concurrently.
  bool parallel = true;

  static Gamma4Options defaults();
};

struct FactorRecord {
  UniPoly factor;
  unsigned multiplicity;
  bool spurious;
};

struct RigidityCertificate {
  // First relator, parameter r still free.
  SymMat2 R;
  MultiPoly r12_numerator;  // integer-primitive, positive leading coefficient
  int r12_sign = 1;         // sign of the actual numerator relative to r12_numerator
  RationalFunction r_solution;

  // First relator after substituting r.
  SymMat2 R1;
  std::vector<FactorRecord> r1_22_discarded;  // spurious factors removed from entry (2,2)
  MultiPoly constraint;                       // C(x, y)

  // Second relator after substituting r.
  std::array<MultiPoly, 4> s;               // normalized numerators s1..s4
  std::array<int, 4> s_signs{};
  std::array<MultiPoly, 4> s_denominators;

  // Elimination of y.
  std::array<UniPoly, 4> x_eliminants;  // Res_y(C, s_i), integer-primitive
  std::array<std::vector<FactorRecord>, 4> x_eliminant_factors;
  UniPoly x_gcd;                       // gcd of the four eliminants
  std::vector<FactorRecord> x_gcd_factors;
  UniPoly x_poly_by_gcd;               // gcd route
  UniPoly x_poly_by_intersection;      // common irreducible factors route
  UniPoly x_poly;
  bool x_poly_palindromic = false;

  // Elimination of x.
  UniPoly y_eliminant;  // Res_x(p, C)
  std::vector<FactorRecord> y_eliminant_factors;
  std::vector<UniPoly> y_polys;
  bool y_polys_related_by_sign = false;

  // Elimination against the entries of R.
  std::vector<UniPoly> r_eliminants;  // one per (entry, y-polynomial)
  UniPoly r_gcd;
  UniPoly r_poly;

  // Characters.
  UniPoly character_poly;  // q with p(x) = x^2 q(x + 1/x)
  bool character_identity = false;
};

RigidityCertificate gamma4_pipeline(const Gamma4Options& options = Gamma4Options::defaults());

/// For palindromic f of degree 2m, the q of degree m with f(x) = x^m q(x + 1/x).
UniPoly palindromic_trace_polynomial(const UniPoly& f, const std::string& var = "X");

/// Published decimal approximations of the solution.
inline constexpr const char* kX0Approx = "0.14840294359835";
inline constexpr const char* kX0ImagApprox = "-0.632502179219";
inline constexpr const char* kR0RealApprox = "-2.29128784747792";
inline constexpr const char* kR0ImagApprox = "0.8660254037844386467";

struct NumericReport {
  int precision = 0;
  int working_digits = 0;
  std::string x0, y0, r0;  // "re im" decimal strings
  bool r_matches_reference = false;
  bool r_root_of_r_poly = false;
  std::array<double, 4> first_residual_log10{};
  std::array<double, 4> second_residual_log10{};
  double residual_log10 = 0;  // max over both relators
  bool residual_ok = false;
  std::string offending_entry;  // set when residual_ok is false
  /// Setting x = y = x0: residual (max entry, log10) of the first relator at each root of the r-polynomial.
  std::vector<double> equal_xy_residual_log10;
  /// Same at the unique r solving the (1,2)-entry of the first relator.
  double equal_xy_solved_residual_log10 = 0;
  bool equal_xy_no_solution = false;
  bool passed = false;
};

NumericReport numeric_check(const RigidityCertificate& cert, int precision,
                            const Gamma4Options& options = Gamma4Options::defaults());

}  // namespace rlab

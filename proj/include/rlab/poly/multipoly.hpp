#pragma once

#include <cstdint>
#include <initializer_list>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "rlab/exact/integer.hpp"

namespace rlab {

using Exponents = std::vector<std::uint32_t>;

struct Term {
  Exponents exps;
  BigRational coeff;
  friend bool operator==(const Term&, const Term&) = default;
};

/// Sparse polynomial over Q in named variables.
///
/// Terms are kept sorted in descending graded-lexicographic order (total
/// degree first, then lexicographic with the first variable most significant)
/// and never hold a zero coefficient. Binary operations between polynomials
/// with different variable lists work over the union of the lists; the left
/// operand's variables come first.
class MultiPoly {
 public:
  MultiPoly() = default;
  explicit MultiPoly(std::vector<std::string> vars) : vars_(std::move(vars)) {}
  MultiPoly(std::vector<std::string> vars, const BigRational& constant);
  MultiPoly(std::vector<std::string> vars, std::vector<Term> terms);

  static MultiPoly variable(const std::vector<std::string>& vars, const std::string& name);
  static MultiPoly constant(const std::vector<std::string>& vars, const BigRational& c) {
    return MultiPoly(vars, c);
  }
  static MultiPoly monomial(const std::vector<std::string>& vars, Exponents exps,
                            const BigRational& c = 1);

  const std::vector<std::string>& vars() const { return vars_; }
  const std::vector<Term>& terms() const { return terms_; }
  std::size_t num_terms() const { return terms_.size(); }

  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  bool is_monomial() const { return terms_.size() == 1; }
  /// Constant term value; only meaningful when is_constant().
  BigRational constant_value() const;

  int var_index(const std::string& name) const;  // -1 when absent
  bool involves(const std::string& name) const { return degree(name) > 0; }
  /// Variables with positive degree, in list order.
  std::vector<std::string> used_vars() const;

  int degree(const std::string& name) const;  // -1 for the zero polynomial
  int total_degree() const;
  const Term& leading_term() const { return terms_.front(); }
  const BigRational& leading_coeff() const { return terms_.front().coeff; }

  /// Coefficients of var^0, var^1, ..., var^deg as polynomials (same variable list).
  std::vector<MultiPoly> coefficients_in(const std::string& name) const;
  static MultiPoly from_coefficients(const std::vector<MultiPoly>& coeffs,
                                     const std::string& name,
                                     const std::vector<std::string>& vars);

  /// Re-expresses this polynomial over a superset variable list.
  MultiPoly with_vars(const std::vector<std::string>& vars) const;
  /// Drops variables that do not occur.
  MultiPoly trimmed() const;

  MultiPoly substitute(const std::string& name, const BigRational& value) const;
  MultiPoly substitute(const std::string& name, const MultiPoly& value) const;
  MultiPoly derivative(const std::string& name) const;

  MultiPoly operator-() const;
  MultiPoly& operator+=(const MultiPoly& o);
  MultiPoly& operator-=(const MultiPoly& o);
  MultiPoly& operator*=(const MultiPoly& o);
  MultiPoly& operator*=(const BigRational& c);

  friend MultiPoly operator+(MultiPoly a, const MultiPoly& b) { return a += b; }
  friend MultiPoly operator-(MultiPoly a, const MultiPoly& b) { return a -= b; }
  friend MultiPoly operator*(const MultiPoly& a, const MultiPoly& b);
  friend MultiPoly operator*(MultiPoly a, const BigRational& c) { return a *= c; }
  friend MultiPoly operator*(const BigRational& c, MultiPoly a) { return a *= c; }
  friend bool operator==(const MultiPoly& a, const MultiPoly& b);

  MultiPoly pow(unsigned e) const;

  /// Exact quotient this / d, or nullopt when d does not divide.
  std::optional<MultiPoly> divide_exact(const MultiPoly& d) const;

  /// Positive rational c such that this / c has coprime integer coefficients.
  BigRational numeric_content() const;
  /// Integer-primitive associate with positive leading coefficient.
  MultiPoly normalized() const;

  /// Evaluates with every variable bound (missing entries throw).
  BigRational evaluate(const std::map<std::string, BigRational>& point) const;

  std::string to_string() const;

 private:
  void canonicalize();  // sorts and merges terms

  std::vector<std::string> vars_;
  std::vector<Term> terms_;
};

/// Descending graded-lexicographic comparison: true when a precedes b.
bool grlex_greater(const Exponents& a, const Exponents& b);

/// Multivariate gcd over Q, normalized integer-primitive with positive
/// leading coefficient (gcd(0, 0) = 0).
MultiPoly gcd(const MultiPoly& a, const MultiPoly& b);

/// Divides out the largest power of g from f. Returns (f / g^k, k).
std::pair<MultiPoly, unsigned> divide_out(const MultiPoly& f, const MultiPoly& g);

/// Sylvester-matrix resultant eliminating `var`, computed by fraction-free
/// elimination over the polynomial ring in the remaining variables.
MultiPoly resultant(const MultiPoly& f, const MultiPoly& g, const std::string& var);

/// The Sylvester determinant alone, without the remainder shortcut that
/// `resultant` applies when one side has a constant leading coefficient.
MultiPoly sylvester_resultant(const MultiPoly& f, const MultiPoly& g, const std::string& var);

/// Parses the human-readable polynomial format (`^` powers, optional `*`,
/// parentheses, rational constants). Identifiers are a letter followed by
/// digits or underscores, so `xy` reads as x*y. Variables appear in the order
/// of `vars`, then in order of first appearance.
MultiPoly parse_poly(const std::string& text, std::vector<std::string> vars = {});

}  // namespace rlab

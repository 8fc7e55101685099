#pragma once

#include <string>
#include <utility>
#include <vector>

#include "rlab/exact/integer.hpp"
#include "rlab/poly/multipoly.hpp"

namespace rlab {

/// Dense univariate polynomial over Q; coefficients stored from the constant
/// term upward with no trailing zeros.
class UniPoly {
 public:
  UniPoly() = default;
  explicit UniPoly(std::string var) : var_(std::move(var)) {}
  UniPoly(std::string var, std::vector<BigRational> coeffs);
  UniPoly(std::string var, std::initializer_list<long> coeffs);

  static UniPoly from_multi(const MultiPoly& p, const std::string& var);
  static UniPoly parse(const std::string& text, const std::string& var);
  static UniPoly x(const std::string& var) { return UniPoly(var, {0, 1}); }

  const std::string& var() const { return var_; }
  const std::vector<BigRational>& coeffs() const { return c_; }
  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  const BigRational& lc() const { return c_.back(); }
  BigRational coeff(std::size_t i) const { return i < c_.size() ? c_[i] : BigRational(0); }

  BigRational operator()(const BigRational& x) const;
  UniPoly derivative() const;
  UniPoly monic() const;
  /// Integer-primitive associate with positive leading coefficient.
  UniPoly primitive() const;
  /// Coefficients as integers; requires integral coefficients.
  std::vector<BigInt> integer_coeffs() const;
  /// x^deg * p(1/x)
  UniPoly reversed() const;
  /// p(q(x))
  UniPoly compose(const UniPoly& q) const;
  UniPoly with_var(std::string v) const { UniPoly out = *this; out.var_ = std::move(v); return out; }

  UniPoly operator-() const;
  friend UniPoly operator+(const UniPoly& a, const UniPoly& b);
  friend UniPoly operator-(const UniPoly& a, const UniPoly& b);
  friend UniPoly operator*(const UniPoly& a, const UniPoly& b);
  friend UniPoly operator*(const BigRational& c, const UniPoly& a);
  friend bool operator==(const UniPoly& a, const UniPoly& b) { return a.c_ == b.c_; }

  /// Quotient and remainder; throws on zero divisor.
  std::pair<UniPoly, UniPoly> divmod(const UniPoly& d) const;
  UniPoly operator%(const UniPoly& d) const { return divmod(d).second; }

  MultiPoly to_multi() const;
  std::string to_string() const { return to_multi().to_string(); }

 private:
  void trim();

  std::string var_ = "x";
  std::vector<BigRational> c_;
};

/// Monic gcd (zero when both are zero).
UniPoly gcd(const UniPoly& a, const UniPoly& b);

/// Extended Euclid: returns (g, s, t) with s*a + t*b = g, g monic.
struct ExtendedGcd {
  UniPoly g, s, t;
};
ExtendedGcd extended_gcd(const UniPoly& a, const UniPoly& b);

bool is_squarefree(const UniPoly& f);

/// Yun's algorithm. Returns monic pairwise-coprime squarefree (factor, multiplicity).
std::vector<std::pair<UniPoly, unsigned>> squarefree_decomposition(const UniPoly& f);

/// True when x^deg * p(1/x) = p(x).
bool is_palindromic(const UniPoly& p);

}  // namespace rlab

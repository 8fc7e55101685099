#pragma once

#include <string>
#include <vector>

#include "rlab/poly/multipoly.hpp"

namespace rlab {

/// Quotient of polynomials kept in lowest terms. The denominator is
/// integer-primitive with a positive leading coefficient; numeric content
/// lives in the numerator.
class RationalFunction {
 public:
  RationalFunction() = default;
  explicit RationalFunction(MultiPoly num);
  RationalFunction(MultiPoly num, MultiPoly den);

  static RationalFunction constant(const std::vector<std::string>& vars, const BigRational& c) {
    return RationalFunction(MultiPoly(vars, c));
  }
  static RationalFunction variable(const std::vector<std::string>& vars, const std::string& v) {
    return RationalFunction(MultiPoly::variable(vars, v));
  }

  const MultiPoly& num() const { return num_; }
  const MultiPoly& den() const { return den_; }
  bool is_zero() const { return num_.is_zero(); }

  RationalFunction operator-() const;
  RationalFunction inverse() const;

  friend RationalFunction operator+(const RationalFunction& a, const RationalFunction& b);
  friend RationalFunction operator-(const RationalFunction& a, const RationalFunction& b);
  friend RationalFunction operator*(const RationalFunction& a, const RationalFunction& b);
  friend RationalFunction operator/(const RationalFunction& a, const RationalFunction& b);
  friend bool operator==(const RationalFunction& a, const RationalFunction& b);

  /// Replaces `var` by another rational function and reduces.
  RationalFunction substitute(const std::string& var, const RationalFunction& value) const;

  std::string to_string() const;

 private:
  struct Reduced {};
  RationalFunction(MultiPoly num, MultiPoly den, Reduced);
  void reduce();
  void normalize_denominator();

  MultiPoly num_;
  MultiPoly den_;
};

}  // namespace rlab

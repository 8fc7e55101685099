#pragma once

#include <array>
#include <string>
#include <vector>

#include "rlab/poly/rational_function.hpp"

namespace rlab {

/// 2x2 matrix over Q(vars), entries stored row-major.
class SymMat2 {
 public:
  SymMat2() = default;
  SymMat2(RationalFunction a11, RationalFunction a12, RationalFunction a21, RationalFunction a22)
      : e_{std::move(a11), std::move(a12), std::move(a21), std::move(a22)} {}
  static SymMat2 identity(const std::vector<std::string>& vars);
  static SymMat2 zero(const std::vector<std::string>& vars);

  /// Entry (i, j) with 1-based indices, matching the usual display.
  const RationalFunction& at(int i, int j) const { return e_[(i - 1) * 2 + (j - 1)]; }
  const std::array<RationalFunction, 4>& entries() const { return e_; }

  RationalFunction determinant() const;
  bool is_zero() const;
  /// Inverse of a determinant-one matrix via the adjugate; throws otherwise.
  SymMat2 unimodular_inverse() const;
  SymMat2 substitute(const std::string& var, const RationalFunction& value) const;

  friend SymMat2 operator*(const SymMat2& a, const SymMat2& b);
  friend SymMat2 operator-(const SymMat2& a, const SymMat2& b);
  friend bool operator==(const SymMat2& a, const SymMat2& b) { return a.e_ == b.e_; }

 private:
  std::array<RationalFunction, 4> e_;
};

}  // namespace rlab

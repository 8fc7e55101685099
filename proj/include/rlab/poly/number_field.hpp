#pragma once

#include <optional>
#include <string>
#include <vector>

#include "rlab/poly/real_roots.hpp"
#include "rlab/poly/unipoly.hpp"

namespace rlab {

/// Element of Q[t]/(m(t)), represented by its reduced polynomial in t.
struct FieldElement {
  UniPoly value;
  friend bool operator==(const FieldElement&, const FieldElement&) = default;
};

/// Q(alpha) for a real root alpha of an irreducible m, with the embedding
/// fixed by an isolating interval.
class NumberField {
 public:
  NumberField(UniPoly minpoly, RationalInterval embedding);
  /// The field Q, presented as Q[t]/(t).
  static NumberField rationals();
  /// Q(alpha) where alpha is the real root of m nearest `approx`.
  static NumberField real(const UniPoly& minpoly, double approx);

  const UniPoly& minpoly() const { return m_; }
  int degree() const { return m_.degree(); }
  const AlgebraicNumber& generator_value() const { return alpha_; }

  FieldElement from_rational(const BigRational& c) const;
  FieldElement generator() const;
  FieldElement reduce(const UniPoly& p) const;

  FieldElement add(const FieldElement& a, const FieldElement& b) const;
  FieldElement sub(const FieldElement& a, const FieldElement& b) const;
  FieldElement mul(const FieldElement& a, const FieldElement& b) const;
  FieldElement neg(const FieldElement& a) const;
  FieldElement inv(const FieldElement& a) const;
  FieldElement pow(const FieldElement& a, unsigned e) const;

  bool is_zero(const FieldElement& a) const { return a.value.is_zero(); }
  /// Sign of the element under the chosen real embedding.
  int sign(const FieldElement& a) const;
  double approx(const FieldElement& a) const;
  /// Minimal polynomial over Q (primitive, positive leading coefficient).
  UniPoly minpoly_of(const FieldElement& a) const;

  std::string to_string(const FieldElement& a) const { return a.value.to_string(); }

 private:
  UniPoly m_;
  AlgebraicNumber alpha_;
};

/// Polynomial over a number field, coefficients low to high.
using FieldPoly = std::vector<FieldElement>;

/// Monic gcd in K[z].
FieldPoly field_poly_gcd(const NumberField& k, FieldPoly a, FieldPoly b);

struct QuadraticVerdict {
  bool irreducible = false;
  bool repeated_root = false;  // discriminant is zero
  std::vector<FieldElement> roots;
  FieldElement discriminant;
  UniPoly discriminant_minpoly;
  /// "zero-discriminant", "negative-discriminant" or "norm-factorization".
  std::string method;
  /// Shift used by the norm method (when it ran).
  int shift = 0;
};

/// Decides whether a*z^2 + b*z + c splits over K by testing whether the
/// discriminant is a square: negative discriminants under the real embedding
/// are settled directly, otherwise Trager's norm method factors z^2 - d.
/// With `sign_shortcut` false the norm method always runs.
QuadraticVerdict field_factor_quadratic(const NumberField& k, const FieldElement& a,
                                        const FieldElement& b, const FieldElement& c,
                                        bool sign_shortcut = true);

}  // namespace rlab

#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "rlab/poly/multipoly.hpp"
#include "rlab/poly/number_field.hpp"

namespace rlab {

/// P(T, R) = 1 + R - R^2 - 2T^2 + RT^2 in variables (T, R): the canonical
/// component of the figure-eight knot group's SL(2,C) character variety,
/// with T the meridian trace and R the trace of the product of meridians.
MultiPoly canonical_component();

/// Discriminant of P as a quadratic in R, computed symbolically (a polynomial in T).
MultiPoly canonical_discriminant();

struct Specialization {
  int n = 0;
  int k = 0;
  NumberField field = NumberField::rationals();  // Q(t), t = 2cos(pi/n)
  FieldElement T;     // 2cos(k pi/n) = V_k(t)
  UniPoly T_minpoly;
  double T_approx = 0;
  // p_{n,k}(R) = a R^2 + b R + c
  FieldElement a, b, c;
  int meridian_order = 0;  // order of the meridian image in PSL(2,C): n / gcd(n, k)
  bool admissible = false;  // |T| not in {0, 1, 2}
};

struct UnsupportedOrder : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

/// Specializes the canonical component at T = 2cos(k pi/n). Requires n >= 3, 1 <= k <= n-1.
Specialization specialize(int n, int k);

/// b^2 - 4ac of p_{n,k} in the field.
FieldElement discriminant_in_R(const Specialization& s);

struct SpecializationVerdict {
  int k = 0;
  std::string T;  // field element text in t
  UniPoly T_minpoly;
  double T_approx = 0;
  int meridian_order = 0;
  bool admissible = false;
  std::string discriminant;
  UniPoly discriminant_minpoly;
  int discriminant_sign = 0;
  bool discriminant_zero = false;
  bool irreducible = false;
  std::string method;
  /// The norm method's answer, computed independently of the sign shortcut.
  bool irreducible_by_norm = false;
  /// P(T, R) reduces to p_{n,k}(R) coefficientwise in the field.
  bool on_component = false;
};

struct RigidityReport {
  int n = 0;
  UniPoly field_minpoly;  // minimal polynomial of 2cos(pi/n)
  std::vector<SpecializationVerdict> specializations;  // k = 1 .. n-1
  std::vector<int> admissible_k;
  /// Minimal polynomials of |T| over the admissible set, as text, with approximations.
  std::vector<std::pair<UniPoly, double>> admissible_abs_T;
  bool all_admissible_irreducible = false;
  bool sign_pairing = false;  // T(n, n-k) = -T(n, k) and admissibility is symmetric
  int sl2_character_count = 0;
  int psl2_character_count = 0;
  int trace_field_degree = 0;
  /// Minimal polynomial of a primitive element R + c*T of Q(T, R) at k = 1.
  UniPoly trace_field_minpoly;
  int trace_field_shift = 0;
  bool discriminant_identity = false;
};

/// Supported: n in {4, 6, 9} and primes n >= 5.
bool rigidity_supported(int n);

RigidityReport rigidity_report(int n);

}  // namespace rlab

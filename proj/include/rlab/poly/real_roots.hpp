#pragma once

#include <vector>

#include "rlab/poly/unipoly.hpp"

namespace rlab {

/// Open interval (lo, hi) with rational endpoints.
struct RationalInterval {
  BigRational lo;
  BigRational hi;
  BigRational width() const { return hi - lo; }
  BigRational midpoint() const { return (lo + hi) / 2; }
  bool contains(const BigRational& v) const { return lo < v && v < hi; }
};

std::vector<UniPoly> sturm_sequence(const UniPoly& f);
/// Sign variations of the sequence at a rational point.
int sign_variations(const std::vector<UniPoly>& seq, const BigRational& x);
/// Total number of distinct real roots (Sturm count over the whole line).
int count_real_roots(const UniPoly& f);
/// Number of distinct roots in (a, b]; endpoints are assumed not to be roots.
int count_roots_between(const std::vector<UniPoly>& seq, const BigRational& a,
                        const BigRational& b);

/// One disjoint isolating interval per real root, sorted ascending. Endpoints
/// are never roots. Requires a squarefree input.
std::vector<RationalInterval> isolate_real_roots(const UniPoly& f);

/// Shrinks an isolating interval of squarefree f below `max_width`.
RationalInterval refine_root(const UniPoly& f, RationalInterval iv, const BigRational& max_width);

/// A real algebraic number: irreducible minimal polynomial plus isolating interval.
class AlgebraicNumber {
 public:
  AlgebraicNumber(UniPoly minpoly, RationalInterval interval);

  /// The real root of irreducible f nearest to `approx` (throws when f has no real roots).
  static AlgebraicNumber real_root_near(const UniPoly& f, double approx);

  const UniPoly& minpoly() const { return minpoly_; }
  const RationalInterval& interval() const { return interval_; }
  double approx() const;
  /// Interval of width below `max_width` containing the number.
  RationalInterval enclosure(const BigRational& max_width) const;
  /// Sign of g(alpha) for a polynomial g with rational coefficients.
  int sign_of(const UniPoly& g) const;

 private:
  UniPoly minpoly_;
  RationalInterval interval_;
};

}  // namespace rlab

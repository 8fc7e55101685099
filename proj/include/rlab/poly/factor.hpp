#pragma once

#include <utility>
#include <vector>

#include "rlab/poly/unipoly.hpp"

namespace rlab {

struct Factorization {
  BigRational unit;
  /// Irreducible, integer-primitive factors with positive leading
  /// coefficient, ordered by degree and then by coefficients.
  std::vector<std::pair<UniPoly, unsigned>> factors;

  UniPoly expand() const;
};

/// Complete factorization over Q: squarefree decomposition, then Zassenhaus
/// (factorization modulo a small prime, Hensel lifting, recombination).
Factorization factor_univariate(const UniPoly& f);

bool is_irreducible(const UniPoly& f);

/// Distinct irreducible factors (primitive, positive leading coefficient).
std::vector<UniPoly> irreducible_factors(const UniPoly& f);

}  // namespace rlab

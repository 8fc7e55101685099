#pragma once

#include <optional>
#include <vector>

#include "rlab/exact/int_matrix.hpp"

namespace rlab {

struct SnfTransforms {
  IntMatrix left;   // rows x rows, unimodular
  IntMatrix right;  // cols x cols, unimodular
};

struct SnfResult {
  /// min(rows, cols) non-negative entries forming a divisibility chain, zeros last.
  std::vector<BigInt> diagonal;
  /// When requested: left * M * right is the diagonal matrix.
  std::optional<SnfTransforms> transforms;
};

SnfResult snf(const IntMatrix& m, bool with_transforms = false);

/// Invariants of the abelian group with relation matrix M (rows = relators,
/// cols = generators): unit factors dropped, finite parts ascending, one zero
/// per free rank at the end.
std::vector<BigInt> abelian_invariants(const IntMatrix& m);

/// Number of zero invariants, i.e. the free rank of the cokernel.
std::size_t free_rank(const std::vector<BigInt>& invariants);

}  // namespace rlab

#pragma once

#include <cstddef>
#include <vector>

#include "rlab/groups/coset_table.hpp"

namespace rlab {

struct LowIndexOptions {
  std::size_t max_index = 1;
  std::size_t min_index = 1;
  /// Only normal subgroups: every partial table must stay regular, which is
  /// enforced by propagating the left-multiplication maps between cosets.
  bool normal_only = false;
  /// Search-node budget; exceeding it yields a partial result.
  long max_nodes = 20'000'000;
};

struct LowIndexResult {
  /// Standardized complete tables, one per conjugacy class, sorted.
  std::vector<CosetTable> tables;
  bool complete = true;
  long nodes = 0;
};

LowIndexResult low_index_tables(const Presentation& p, const LowIndexOptions& options);

/// Whether a complete table is the minimal standardization among all base points.
bool is_canonical(const CosetTable& t);
/// Whether the subgroup of a complete table is normal (all base points give the same table).
bool is_normal(const CosetTable& t);

}  // namespace rlab

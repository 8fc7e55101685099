#pragma once

#include <vector>

#include "rlab/exact/integer.hpp"
#include "rlab/exact/int_matrix.hpp"
#include "rlab/groups/low_index.hpp"
#include "rlab/groups/rewriting.hpp"

namespace rlab {

/// Relator exponent-sum matrix (rows = relators, cols = generators).
IntMatrix relation_matrix(const Presentation& p);
/// Abelian invariants: finite parts ascending, then one 0 per free rank.
std::vector<BigInt> abelianization(const Presentation& p);
/// First Betti number (number of zero invariants).
std::size_t betti_number(const Presentation& p);

struct SubgroupRecord {
  std::size_t index = 0;
  CosetTable table;
  std::vector<BigInt> invariants;
  bool normal = false;
  /// Index of the normal core, i.e. the order of the permutation action on cosets.
  BigInt core_index;
  /// Generators of the subgroup as words in the parent generators.
  std::vector<GroupWord> generators;
};

SubgroupRecord make_subgroup_record(const Presentation& p, const CosetTable& table);

struct SubgroupListing {
  std::vector<SubgroupRecord> records;
  bool complete = true;
  long nodes = 0;
};

/// One record per conjugacy class of subgroups with min_index <= index <= max_index.
SubgroupListing low_index_subgroups(const Presentation& p, std::size_t max_index, std::size_t min_index = 1,
                                    bool normal_only = false, long max_nodes = 20'000'000);

/// Whether the subgroup of `inner` lies in the subgroup of `outer`.
bool table_contains(const Presentation& p, const CosetTable& outer, const CosetTable& inner);

/// b1(H_i) / [G : H_i] along a nested chain; throws std::invalid_argument if
/// a table is incomplete or the chain is not nested.
std::vector<BigRational> luck_sequence(const Presentation& p, const std::vector<CosetTable>& chain);

}  // namespace rlab

#pragma once

#include <vector>

#include "rlab/groups/coset_table.hpp"

namespace rlab {

struct SubgroupPresentation {
  /// Presentation on Schreier generators s1, s2, ...
  Presentation presentation;
  /// For each generator of `presentation`, the corresponding word in the parent group.
  std::vector<GroupWord> generator_words;
};

struct TietzeOptions {
  int max_iterations = 10000;
  long max_total_length = 1'000'000;
};

/// Reidemeister-Schreier rewriting over the spanning tree of first
/// definitions. Throws std::invalid_argument on an incomplete table.
SubgroupPresentation reidemeister_schreier(const Presentation& p, const CosetTable& table, bool simplify = true,
                                           const TietzeOptions& tietze = {});

/// Tietze reduction: drops trivial and duplicate relators, then eliminates
/// generators occurring exactly once in some relator, shortest relator first.
SubgroupPresentation tietze_simplify(const SubgroupPresentation& sp, const TietzeOptions& options = {});

}  // namespace rlab

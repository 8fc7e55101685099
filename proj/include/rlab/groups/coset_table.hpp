#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "rlab/groups/presentation.hpp"

namespace rlab {

enum class CosetStatus { Complete, Overflowed };
enum class CosetStrategy { Hlt, Felsch };

std::string to_string(CosetStatus s);
std::string to_string(CosetStrategy s);
CosetStrategy parse_strategy(const std::string& s);

struct CosetStats {
  long defined = 0;
  long max_live = 0;
  long coincidences = 0;
  long lookaheads = 0;
};

/// Action of the generators on cosets. Column 2i holds the action of
/// generator i, column 2i+1 that of its inverse; -1 marks an undefined entry.
/// Coset 0 is the subgroup (printed as 1 in text output).
class CosetTable {
 public:
  CosetTable() = default;
  CosetTable(std::size_t rank, std::size_t cosets, std::vector<int> data, CosetStatus status = CosetStatus::Complete);

  std::size_t rank() const { return rank_; }
  std::size_t columns() const { return 2 * rank_; }
  std::size_t index() const { return cosets_; }
  CosetStatus status() const { return status_; }
  bool complete() const { return status_ == CosetStatus::Complete; }

  int act(int coset, int letter) const { return data_[static_cast<std::size_t>(coset) * columns() + letter]; }
  /// Image of `coset` under a letter word; -1 if some step is undefined.
  int trace(int coset, const std::vector<int>& letters) const;
  /// Permutation induced by generator `gen` (forward column).
  std::vector<int> permutation(std::size_t gen) const;
  const std::vector<int>& data() const { return data_; }

  /// Renumbers cosets in first-appearance order scanning from `base` row by row.
  CosetTable standardized(int base = 0) const;
  /// Every relator traced from every coset returns to its start.
  bool relators_close(const Presentation& p) const;
  /// Entries are defined, and each column is inverse to its partner column.
  bool consistent() const;

  CosetStats stats;

  friend bool operator==(const CosetTable& a, const CosetTable& b) {
    return a.rank_ == b.rank_ && a.cosets_ == b.cosets_ && a.data_ == b.data_;
  }
  friend bool operator<(const CosetTable& a, const CosetTable& b) {
    if (a.cosets_ != b.cosets_) return a.cosets_ < b.cosets_;
    return a.data_ < b.data_;
  }

 private:
  std::size_t rank_ = 0, cosets_ = 0;
  std::vector<int> data_;
  CosetStatus status_ = CosetStatus::Complete;
};

struct CosetOptions {
  CosetStrategy strategy = CosetStrategy::Hlt;
  std::size_t max_cosets = 100000;
  bool lookahead = true;
};

/// Todd-Coxeter enumeration of the cosets of <subgens> in the presented group.
/// Complete tables are returned in standardized form.
CosetTable coset_enumerate(const Presentation& p, const std::vector<GroupWord>& subgens,
                           const CosetOptions& options = {});

/// Order of the presented group, or 0 if the enumeration overflows.
std::size_t group_order(const Presentation& p, const CosetOptions& options = {});

/// Table of the normal closure of `relators` (as a subgroup of p), obtained by
/// enumerating the quotient presentation on the trivial subgroup.
CosetTable quotient_table(const Presentation& p, const std::vector<GroupWord>& relators,
                          const CosetOptions& options = {});

}  // namespace rlab

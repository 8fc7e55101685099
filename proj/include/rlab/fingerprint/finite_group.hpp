#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "rlab/exact/integer.hpp"
#include "rlab/groups/coset_table.hpp"
#include "rlab/groups/perm.hpp"

namespace rlab {

/// Isomorphism invariants used as a prefilter and as the canonical sort key.
struct InvariantVector {
  std::size_t order = 0;
  std::vector<BigInt> abelian;
  /// Length of the derived series; -1 when the group is not solvable.
  int derived_length = 0;
  std::size_t classes = 0;
  /// element order -> number of elements
  std::map<std::size_t, std::size_t> order_histogram;

  friend auto operator<=>(const InvariantVector&, const InvariantVector&) = default;
  friend bool operator==(const InvariantVector&, const InvariantVector&) = default;
};

/// A finite quotient G/K, held as the regular action of G/K on itself. The
/// generator images are the presentation generators acting on cosets of K.
class FiniteQuotient {
 public:
  /// From a complete coset table of a normal subgroup.
  static FiniteQuotient from_regular_table(const CosetTable& t);
  /// From permutations of any degree; nullopt when the group has more than
  /// `limit` elements.
  static std::optional<FiniteQuotient> from_permutations(const std::vector<Perm>& gens, std::size_t limit);

  std::size_t order() const { return n_; }
  std::size_t rank() const { return gen_elems_.size(); }
  /// Regular permutation of generator i (degree = order).
  Perm generator(std::size_t i) const;
  std::vector<std::string> generator_cycles() const;
  /// Element of generator i.
  int generator_element(std::size_t i) const { return gen_elems_[i]; }
  const InvariantVector& invariants() const { return inv_; }

  // Element 0 is the identity.
  int mul(int a, int b) const { return mul_[static_cast<std::size_t>(a) * n_ + b]; }
  int inv(int a) const { return inv_elem_[a]; }
  std::size_t element_order(int a) const { return elem_order_[a]; }
  std::size_t class_size(int a) const { return class_size_[a]; }

  /// "Z/3", "Z/2 x Z/2 x Z/2", "S3", ... ; a generic label for others.
  std::string label() const;

 private:
  FiniteQuotient(std::size_t n, std::vector<std::vector<int>> right);
  void compute_invariants();
  std::vector<int> subgroup_closure(const std::vector<int>& gens) const;
  std::vector<int> derived_subgroup(const std::vector<int>& h) const;

  std::size_t n_ = 0;
  std::vector<std::vector<int>> right_;  // right multiplication by each generator
  std::vector<int> gen_elems_;
  std::vector<int> mul_, inv_elem_;
  std::vector<std::size_t> elem_order_, class_size_;
  InvariantVector inv_;
};

struct IsoBoundError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

/// Isomorphism test: invariant prefilter, then a backtracking search for
/// generator images. Throws IsoBoundError when an order exceeds `bound`.
bool iso_test(const FiniteQuotient& a, const FiniteQuotient& b, std::size_t bound = 512);

std::string to_string(const InvariantVector& v);

}  // namespace rlab

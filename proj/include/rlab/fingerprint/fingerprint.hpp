#pragma once

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "rlab/fingerprint/finite_group.hpp"
#include "rlab/groups/presentation.hpp"

namespace rlab {

enum class QuotientRoute {
  /// Enumerate normal subgroups of index <= N directly.
  Normal,
  /// Enumerate all subgroups of index <= N and take the permutation group of
  /// each coset action (the quotient by the core).
  Cores,
};

struct FingerprintOptions {
  QuotientRoute route = QuotientRoute::Normal;
  long max_nodes = 20'000'000;
  std::size_t iso_bound = 512;
};

struct QuotientClass {
  FiniteQuotient group;
  /// Number of normal subgroups with this quotient (auxiliary, never compared).
  std::size_t multiplicity = 0;
};

/// Isomorphism classes of quotients of order <= bound, sorted by invariant vector.
struct QuotientFingerprint {
  std::size_t bound = 0;
  bool complete = true;
  long nodes = 0;
  std::string diagnostics;
  std::vector<QuotientClass> classes;

  /// Index of a class isomorphic to q, or -1.
  int find(const FiniteQuotient& q, std::size_t iso_bound = 512) const;
};

QuotientFingerprint quotients_up_to(const Presentation& p, std::size_t bound, const FingerprintOptions& options = {});

enum class Side { G, H };
std::string to_string(Side s);

struct CompareResult {
  /// Agreement up to the bound only; says nothing about profinite completions.
  bool equal = false;
  std::size_t bound = 0;
  /// Smallest order, then least invariant vector, over both sides.
  std::optional<FiniteQuotient> distinguisher;
  Side side = Side::G;
  /// Least class found only in G, and least class found only in H.
  std::optional<FiniteQuotient> only_g, only_h;
};

struct IncompleteFingerprint : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Compares two complete fingerprints; throws IncompleteFingerprint otherwise.
CompareResult compare_fingerprints(const QuotientFingerprint& g, const QuotientFingerprint& h,
                                   std::size_t iso_bound = 512);
CompareResult compare(const Presentation& g, const Presentation& h, std::size_t bound,
                      const FingerprintOptions& options = {});

}  // namespace rlab

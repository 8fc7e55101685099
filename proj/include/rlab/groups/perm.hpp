#pragma once

#include <string>
#include <vector>

#include "rlab/exact/integer.hpp"

namespace rlab {

/// Permutation of {0..n-1} as an image array; products act left to right,
/// so (g * h)[p] = h[g[p]].
using Perm = std::vector<int>;

Perm perm_identity(std::size_t n);
Perm perm_mul(const Perm& g, const Perm& h);
Perm perm_inverse(const Perm& g);
bool perm_is_identity(const Perm& g);
/// Cycle notation on points 1..n, e.g. "(1,2,3)(4,5)"; "()" for the identity.
std::string perm_cycles(const Perm& g);

/// Base and strong generating set built by deterministic Schreier-Sims.
class StabilizerChain {
 public:
  StabilizerChain(std::size_t degree, const std::vector<Perm>& generators);
  BigInt order() const;
  bool contains(const Perm& g) const;
  const std::vector<int>& base() const { return base_; }

 private:
  struct Level {
    int point;
    std::vector<Perm> gens;
    std::vector<int> orbit;
    std::vector<int> transversal;  // index into `reps`, -1 outside the orbit
    std::vector<Perm> reps;
  };
  std::pair<Perm, std::size_t> sift(Perm g, std::size_t from) const;
  void rebuild_orbit(Level& level);

  std::size_t n_;
  std::vector<Level> levels_;
  std::vector<int> base_;
};

BigInt perm_group_order(std::size_t degree, const std::vector<Perm>& generators);

}  // namespace rlab

#include "rlab/groups/perm.hpp"

#include <stdexcept>

namespace rlab {

Perm perm_identity(std::size_t n) {
  Perm p(n);
  for (std::size_t i = 0; i < n; ++i) p[i] = static_cast<int>(i);
  return p;
}

Perm perm_mul(const Perm& g, const Perm& h) {
  Perm out(g.size());
  for (std::size_t i = 0; i < g.size(); ++i) out[i] = h[g[i]];
  return out;
}

Perm perm_inverse(const Perm& g) {
  Perm out(g.size());
  for (std::size_t i = 0; i < g.size(); ++i) out[g[i]] = static_cast<int>(i);
  return out;
}

bool perm_is_identity(const Perm& g) {
  for (std::size_t i = 0; i < g.size(); ++i)
    if (g[i] != static_cast<int>(i)) return false;
  return true;
}

std::string perm_cycles(const Perm& g) {
  std::string out;
  std::vector<bool> seen(g.size(), false);
  for (std::size_t i = 0; i < g.size(); ++i) {
    if (seen[i] || g[i] == static_cast<int>(i)) continue;
    out += "(";
    for (int j = static_cast<int>(i); !seen[j]; j = g[j]) {
      seen[j] = true;
      if (out.back() != '(') out += ",";
      out += std::to_string(j + 1);
    }
    out += ")";
  }
  return out.empty() ? "()" : out;
}

StabilizerChain::StabilizerChain(std::size_t degree, const std::vector<Perm>& generators) : n_(degree) {
  std::vector<Perm> pending;
  for (const auto& g : generators) {
    if (g.size() != n_) throw std::invalid_argument("StabilizerChain: generator degree mismatch");
    if (!perm_is_identity(g)) pending.push_back(g);
  }
  // Insert generators, then close under Schreier generators level by level.
  auto add = [&](const Perm& h, std::size_t j) {
    for (std::size_t l = 0; l <= j; ++l) {
      if (l == levels_.size()) {
        int b = 0;
        while (h[b] == b) ++b;
        levels_.push_back({b, {}, {}, std::vector<int>(n_, -1), {}});
        base_.push_back(b);
      }
    }
    levels_[j].gens.push_back(h);
    for (std::size_t l = 0; l <= j; ++l) rebuild_orbit(levels_[l]);
  };
  for (const auto& g : pending) {
    auto [r, j] = sift(g, 0);
    if (!perm_is_identity(r)) add(r, j);
  }
  // Every generator at level j also lies in the point stabilizers above it,
  // so orbits use gens from levels >= j.
  std::size_t i = levels_.size();
  while (i > 0) {
    std::size_t lev = i - 1;
    bool extended = false;
    for (std::size_t a = 0; a < levels_[lev].orbit.size() && !extended; ++a) {
      int p = levels_[lev].orbit[a];
      const Perm& up = levels_[lev].reps[levels_[lev].transversal[p]];
      for (std::size_t l2 = lev; l2 < levels_.size() && !extended; ++l2)
        for (std::size_t gi = 0; gi < levels_[l2].gens.size() && !extended; ++gi) {
          const Perm& s = levels_[l2].gens[gi];
          int q = s[p];
          Perm sch = perm_mul(perm_mul(up, s), perm_inverse(levels_[lev].reps[levels_[lev].transversal[q]]));
          auto [r, j] = sift(sch, lev + 1);
          if (!perm_is_identity(r)) {
            add(r, j);
            i = j + 1;
            extended = true;
          }
        }
    }
    if (!extended) --i;
  }
}

void StabilizerChain::rebuild_orbit(Level& level) {
  std::size_t idx = static_cast<std::size_t>(&level - levels_.data());
  level.orbit.assign(1, level.point);
  level.transversal.assign(n_, -1);
  level.reps.assign(1, perm_identity(n_));
  level.transversal[level.point] = 0;
  for (std::size_t a = 0; a < level.orbit.size(); ++a) {
    int p = level.orbit[a];
    for (std::size_t l = idx; l < levels_.size(); ++l)
      for (const auto& s : levels_[l].gens) {
        int q = s[p];
        if (level.transversal[q] >= 0) continue;
        level.transversal[q] = static_cast<int>(level.reps.size());
        level.reps.push_back(perm_mul(level.reps[level.transversal[p]], s));
        level.orbit.push_back(q);
      }
  }
}

std::pair<Perm, std::size_t> StabilizerChain::sift(Perm g, std::size_t from) const {
  for (std::size_t l = from; l < levels_.size(); ++l) {
    int q = g[levels_[l].point];
    int t = levels_[l].transversal[q];
    if (t < 0) return {g, l};
    g = perm_mul(g, perm_inverse(levels_[l].reps[t]));
  }
  return {g, levels_.size()};
}

BigInt StabilizerChain::order() const {
  BigInt o = 1;
  for (const auto& l : levels_) o *= static_cast<unsigned long>(l.orbit.size());
  return o;
}

bool StabilizerChain::contains(const Perm& g) const {
  if (g.size() != n_) return false;
  return perm_is_identity(sift(g, 0).first);
}

BigInt perm_group_order(std::size_t degree, const std::vector<Perm>& generators) {
  return StabilizerChain(degree, generators).order();
}

}  // namespace rlab

#include "rlab/fingerprint/finite_group.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "rlab/exact/snf.hpp"

namespace rlab {

FiniteQuotient::FiniteQuotient(std::size_t n, std::vector<std::vector<int>> right) : n_(n), right_(std::move(right)) {
  for (const auto& r : right_) gen_elems_.push_back(r[0]);
  // P_a[c] = c * a, built along the Cayley graph: P_{a g} = P_a followed by right_g.
  mul_.assign(n_ * n_, -1);
  std::vector<std::vector<int>> p(n_);
  p[0].resize(n_);
  std::iota(p[0].begin(), p[0].end(), 0);
  std::vector<int> queue{0};
  for (std::size_t i = 0; i < queue.size(); ++i) {
    int a = queue[i];
    for (const auto& r : right_) {
      int d = r[a];
      if (!p[d].empty()) continue;
      p[d].resize(n_);
      for (std::size_t c = 0; c < n_; ++c) p[d][c] = r[p[a][c]];
      queue.push_back(d);
    }
  }
  if (queue.size() != n_) throw std::invalid_argument("FiniteQuotient: action is not regular");
  for (std::size_t a = 0; a < n_; ++a)
    for (std::size_t c = 0; c < n_; ++c) mul_[c * n_ + a] = p[a][c];
  compute_invariants();
}

FiniteQuotient FiniteQuotient::from_regular_table(const CosetTable& t) {
  if (!t.complete()) throw std::invalid_argument("FiniteQuotient: incomplete coset table");
  std::vector<std::vector<int>> right;
  for (std::size_t g = 0; g < t.rank(); ++g) right.push_back(t.permutation(g));
  return FiniteQuotient(t.index(), std::move(right));
}

std::optional<FiniteQuotient> FiniteQuotient::from_permutations(const std::vector<Perm>& gens, std::size_t limit) {
  if (gens.empty()) return FiniteQuotient(1, {});
  std::size_t deg = gens.front().size();
  std::map<Perm, int> id;
  std::vector<Perm> elems{perm_identity(deg)};
  id[elems[0]] = 0;
  std::vector<std::vector<int>> right(gens.size());
  for (std::size_t i = 0; i < elems.size(); ++i)
    for (std::size_t g = 0; g < gens.size(); ++g) {
      Perm h = perm_mul(elems[i], gens[g]);
      auto [it, fresh] = id.emplace(std::move(h), static_cast<int>(elems.size()));
      if (fresh) {
        if (elems.size() >= limit) return std::nullopt;
        elems.push_back(it->first);
      }
      right[g].push_back(it->second);
    }
  return FiniteQuotient(elems.size(), std::move(right));
}

Perm FiniteQuotient::generator(std::size_t i) const { return right_[i]; }

std::vector<std::string> FiniteQuotient::generator_cycles() const {
  std::vector<std::string> out;
  for (const auto& r : right_) out.push_back(perm_cycles(r));
  return out;
}

std::vector<int> FiniteQuotient::subgroup_closure(const std::vector<int>& gens) const {
  std::vector<char> in(n_, 0);
  std::vector<int> elems{0};
  in[0] = 1;
  for (std::size_t i = 0; i < elems.size(); ++i)
    for (int g : gens) {
      int h = mul(elems[i], g);
      if (!in[h]) {
        in[h] = 1;
        elems.push_back(h);
      }
    }
  return elems;
}

std::vector<int> FiniteQuotient::derived_subgroup(const std::vector<int>& h) const {
  std::vector<char> seen(n_, 0);
  std::vector<int> comms;
  for (int a : h)
    for (int b : h) {
      int c = mul(mul(inv(a), inv(b)), mul(a, b));
      if (!seen[c]) {
        seen[c] = 1;
        comms.push_back(c);
      }
    }
  return subgroup_closure(comms);
}

namespace {

std::vector<std::size_t> prime_factors(std::size_t m) {
  std::vector<std::size_t> out;
  for (std::size_t p = 2; p * p <= m; ++p)
    if (m % p == 0) {
      out.push_back(p);
      while (m % p == 0) m /= p;
    }
  if (m > 1) out.push_back(m);
  return out;
}

std::size_t ilog(std::size_t x, std::size_t p) {
  std::size_t k = 0;
  while (x > 1) {
    x /= p;
    ++k;
  }
  return k;
}

}  // namespace

void FiniteQuotient::compute_invariants() {
  inv_elem_.assign(n_, -1);
  for (std::size_t a = 0; a < n_; ++a)
    for (std::size_t b = 0; b < n_; ++b)
      if (mul(static_cast<int>(a), static_cast<int>(b)) == 0) {
        inv_elem_[a] = static_cast<int>(b);
        break;
      }
  elem_order_.assign(n_, 0);
  for (std::size_t a = 0; a < n_; ++a) {
    int x = static_cast<int>(a);
    std::size_t k = 1;
    while (x != 0) {
      x = mul(x, static_cast<int>(a));
      ++k;
    }
    elem_order_[a] = k;
  }
  // Conjugacy classes as orbits under conjugation by the generators.
  class_size_.assign(n_, 0);
  std::vector<int> cls(n_, -1);
  std::size_t nclasses = 0;
  for (std::size_t a = 0; a < n_; ++a) {
    if (cls[a] >= 0) continue;
    std::vector<int> orbit{static_cast<int>(a)};
    cls[a] = static_cast<int>(nclasses);
    for (std::size_t i = 0; i < orbit.size(); ++i)
      for (int g : gen_elems_) {
        int c = mul(mul(inv(g), orbit[i]), g);
        if (cls[c] < 0) {
          cls[c] = static_cast<int>(nclasses);
          orbit.push_back(c);
        }
      }
    for (int x : orbit) class_size_[x] = orbit.size();
    ++nclasses;
  }

  inv_.order = n_;
  inv_.classes = nclasses;
  inv_.order_histogram.clear();
  for (auto o : elem_order_) inv_.order_histogram[o]++;

  std::vector<int> all(n_);
  std::iota(all.begin(), all.end(), 0);
  std::vector<int> derived = derived_subgroup(all);

  // Abelianization from element orders in Q/Q'.
  std::vector<int> coset(n_, -1);
  std::vector<int> reps;
  for (std::size_t a = 0; a < n_; ++a) {
    if (coset[a] >= 0) continue;
    int id = static_cast<int>(reps.size());
    reps.push_back(static_cast<int>(a));
    for (int d : derived) coset[mul(static_cast<int>(a), d)] = id;
  }
  std::size_t m = reps.size();
  std::vector<std::size_t> ab_order(m);
  for (std::size_t i = 0; i < m; ++i) {
    int x = reps[i];
    std::size_t k = 1;
    while (coset[x] != 0) {
      x = mul(x, reps[i]);
      ++k;
    }
    ab_order[i] = k;
  }
  std::vector<BigInt> diag;
  for (std::size_t p : prime_factors(m)) {
    // r[k] = log_p #{x : x^(p^k) = 1}
    std::vector<std::size_t> r{0};
    for (std::size_t pk = p;; pk *= p) {
      std::size_t c = 0;
      for (auto o : ab_order) c += (pk % o == 0);
      r.push_back(ilog(c, p));
      if (r.back() == r[r.size() - 2]) break;
    }
    for (std::size_t k = 1; k + 1 < r.size(); ++k) {
      std::size_t at_least_k = r[k] - r[k - 1];
      std::size_t at_least_k1 = r[k + 1] - r[k];
      BigInt pk = 1;
      for (std::size_t j = 0; j < k; ++j) pk *= static_cast<unsigned long>(p);
      for (std::size_t j = at_least_k1; j < at_least_k; ++j) diag.push_back(pk);
    }
  }
  IntMatrix dm(diag.size(), diag.size());
  for (std::size_t i = 0; i < diag.size(); ++i) dm(i, i) = diag[i];
  inv_.abelian = diag.empty() ? std::vector<BigInt>{} : abelian_invariants(dm);

  // Derived series.
  std::vector<int> cur = all;
  int len = 0;
  while (cur.size() > 1) {
    std::vector<int> next = (len == 0) ? derived : derived_subgroup(cur);
    if (next.size() == cur.size()) {
      len = -1;
      break;
    }
    cur = std::move(next);
    ++len;
  }
  inv_.derived_length = len;
}

std::string FiniteQuotient::label() const {
  if (n_ == 1) return "1";
  if (inv_.classes == n_) {
    std::string s;
    std::size_t run = 0;
    for (std::size_t i = 0; i < inv_.abelian.size(); i += run) {
      run = 1;
      while (i + run < inv_.abelian.size() && inv_.abelian[i + run] == inv_.abelian[i]) ++run;
      if (!s.empty()) s += " x ";
      std::string z = "Z/" + inv_.abelian[i].get_str();
      s += run == 1 ? z : "(" + z + ")^" + std::to_string(run);
    }
    return s;
  }
  const auto& h = inv_.order_histogram;
  auto count = [&](std::size_t o) { return h.count(o) ? h.at(o) : 0; };
  if (n_ == 8 && count(2) == 1) return "Q8";
  // Dihedral: a cyclic subgroup of index 2 and involutions everywhere outside it.
  std::size_t half = n_ / 2;
  if (n_ % 2 == 0 && half >= 3) {
    for (std::size_t r = 0; r < n_; ++r) {
      if (elem_order_[r] != half) continue;
      std::vector<char> in(n_, 0);
      for (int x : subgroup_closure({static_cast<int>(r)})) in[x] = 1;
      bool dihedral = true;
      for (std::size_t x = 0; x < n_ && dihedral; ++x) dihedral = in[x] || elem_order_[x] == 2;
      if (dihedral) return half == 3 ? "S3" : "D" + std::to_string(n_);
      break;
    }
  }
  return "nonabelian order " + std::to_string(n_);
}

std::string to_string(const InvariantVector& v) {
  std::ostringstream os;
  os << "order=" << v.order << " ab=[";
  for (std::size_t i = 0; i < v.abelian.size(); ++i) os << (i ? "," : "") << v.abelian[i];
  os << "] dl=" << v.derived_length << " classes=" << v.classes << " orders={";
  bool first = true;
  for (const auto& [o, c] : v.order_histogram) {
    os << (first ? "" : ",") << o << ":" << c;
    first = false;
  }
  os << "}";
  return os.str();
}

namespace {

// Extends the partial map x -> phi(x) over the subgroup generated by the
// first k generators; fails on inconsistency or non-injectivity.
bool extend_hom(const FiniteQuotient& a, const FiniteQuotient& b, const std::vector<int>& gens,
                const std::vector<int>& images, std::size_t k, std::vector<int>& phi) {
  phi.assign(a.order(), -1);
  std::vector<char> used(b.order(), 0);
  phi[0] = 0;
  used[0] = 1;
  std::vector<int> queue{0};
  for (std::size_t i = 0; i < queue.size(); ++i) {
    int x = queue[i];
    for (std::size_t j = 0; j < k; ++j) {
      int y = a.mul(x, gens[j]);
      int img = b.mul(phi[x], images[j]);
      if (phi[y] < 0) {
        if (used[img]) return false;
        used[img] = 1;
        phi[y] = img;
        queue.push_back(y);
      } else if (phi[y] != img) {
        return false;
      }
    }
  }
  return true;
}

bool search(const FiniteQuotient& a, const FiniteQuotient& b, const std::vector<int>& gens,
            const std::vector<std::vector<int>>& candidates, std::vector<int>& images, std::size_t k) {
  if (k == gens.size()) return true;
  std::vector<int> phi;
  for (int c : candidates[k]) {
    images[k] = c;
    if (extend_hom(a, b, gens, images, k + 1, phi) && search(a, b, gens, candidates, images, k + 1)) return true;
  }
  return false;
}

}  // namespace

bool iso_test(const FiniteQuotient& a, const FiniteQuotient& b, std::size_t bound) {
  if (a.order() > bound || b.order() > bound)
    throw IsoBoundError("iso_test: group order exceeds bound " + std::to_string(bound));
  if (a.invariants() != b.invariants()) return false;
  // Irredundant generators of a.
  std::vector<int> pool;
  for (std::size_t i = 0; i < a.rank(); ++i) pool.push_back(a.generator_element(i));
  std::vector<int> gens;
  std::vector<char> covered(a.order(), 0);
  covered[0] = 1;
  for (int g : pool) {
    if (covered[g]) continue;
    gens.push_back(g);
    std::vector<int> span{0};
    std::fill(covered.begin(), covered.end(), 0);
    covered[0] = 1;
    for (std::size_t i = 0; i < span.size(); ++i)
      for (int h : gens) {
        int y = a.mul(span[i], h);
        if (!covered[y]) {
          covered[y] = 1;
          span.push_back(y);
        }
      }
    if (span.size() == a.order()) break;
  }
  std::vector<std::vector<int>> candidates(gens.size());
  for (std::size_t i = 0; i < gens.size(); ++i)
    for (std::size_t y = 0; y < b.order(); ++y)
      if (b.element_order(static_cast<int>(y)) == a.element_order(gens[i]) &&
          b.class_size(static_cast<int>(y)) == a.class_size(gens[i]))
        candidates[i].push_back(static_cast<int>(y));
  std::vector<int> images(gens.size(), 0);
  return search(a, b, gens, candidates, images, 0);
}

}  // namespace rlab

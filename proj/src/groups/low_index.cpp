#include "rlab/groups/low_index.hpp"

#include <algorithm>
#include <cstdlib>
#include <limits>
#include <numeric>
#include <stdexcept>

namespace rlab {

namespace {

enum class Cmp { Smaller, Equal, Larger, Unknown };

// Compares the table renumbered from `base` with the table itself, row by row,
// stopping at the first entry undefined on either side.
Cmp compare_from(const std::vector<int>& T, int ncos, int ncols, int base, std::vector<int>& newnum,
                 std::vector<int>& order) {
  std::fill(newnum.begin(), newnum.begin() + ncos, -1);
  order.clear();
  newnum[base] = 0;
  order.push_back(base);
  for (int i = 0; i < ncos; ++i) {
    if (i >= static_cast<int>(order.size())) return Cmp::Unknown;
    int src_row = order[i];
    for (int x = 0; x < ncols; ++x) {
      int orig = T[i * ncols + x];
      int src = T[src_row * ncols + x];
      if (orig < 0 || src < 0) return Cmp::Unknown;
      if (newnum[src] < 0) {
        newnum[src] = static_cast<int>(order.size());
        order.push_back(src);
      }
      int val = newnum[src];
      if (val < orig) return Cmp::Smaller;
      if (val > orig) return Cmp::Larger;
    }
  }
  return Cmp::Equal;
}

class Search {
 public:
  Search(const Presentation& p, const LowIndexOptions& opt) : opt_(opt), ncols_(static_cast<int>(2 * p.rank())) {
    if (opt.max_index < 1) throw std::invalid_argument("low_index: max_index must be at least 1");
    n_ = static_cast<int>(opt.max_index);
    by_letter_ = p.rotations_by_letter();
    // Generators with a short power relator first: their cycles close soonest.
    std::vector<long> power(ncols_ / 2, std::numeric_limits<long>::max());
    for (const auto& r : p.relators())
      if (r.size() == 1) {
        auto g = p.generator_index(r.syllables()[0].gen);
        power[g] = std::min(power[g], std::abs(r.syllables()[0].exp));
      }
    std::vector<int> gens(ncols_ / 2);
    std::iota(gens.begin(), gens.end(), 0);
    std::stable_sort(gens.begin(), gens.end(), [&](int a, int b) { return power[a] < power[b]; });
    for (int g : gens) column_order_.push_back(2 * g);
    for (int g : gens) column_order_.push_back(2 * g + 1);
    newnum_.resize(n_);
    order_.reserve(n_);
    m_.resize(n_);
    minv_.resize(n_);
  }

  LowIndexResult run() {
    State s;
    s.T.assign(static_cast<std::size_t>(n_) * ncols_, -1);
    s.ncos = 1;
    if (ncols_ == 0) {
      record(s);
    } else if (close(s)) {
      dfs(s);
    }
    std::sort(result_.tables.begin(), result_.tables.end());
    result_.nodes = nodes_;
    return result_;
  }

 private:
  struct State {
    std::vector<int> T;
    int ncos = 0;
    int cursor = 0;  // all entries before this flat position are defined
  };

  bool assign(State& s, int c, int x, int d) {
    int ix = inverse_letter(x);
    int& a = s.T[c * ncols_ + x];
    int& b = s.T[d * ncols_ + ix];
    if (a >= 0 || b >= 0) return a == d && b == c;
    a = d;
    b = c;
    stack_.push_back({c, x});
    return true;
  }

  bool scan(State& s, int c, const std::vector<int>& w) {
    int f = c, b = c;
    int i = 0, j = static_cast<int>(w.size()) - 1;
    while (i <= j && s.T[f * ncols_ + w[i]] >= 0) f = s.T[f * ncols_ + w[i++]];
    if (i > j) return f == c;
    while (j >= i && s.T[b * ncols_ + inverse_letter(w[j])] >= 0) b = s.T[b * ncols_ + inverse_letter(w[j--])];
    if (j < i) return f == b;
    if (i == j) return assign(s, f, w[i], b);
    return true;
  }

  bool process(State& s) {
    while (!stack_.empty()) {
      auto [c, x] = stack_.back();
      stack_.pop_back();
      int d = s.T[c * ncols_ + x];
      for (const auto& w : by_letter_[x])
        if (!scan(s, c, w)) return false;
      for (const auto& w : by_letter_[inverse_letter(x)])
        if (!scan(s, d, w)) return false;
    }
    return true;
  }

  // Left multiplication by coset `beta` must extend to a partial automorphism
  // of a regular table; propagate its consequences until stable.
  bool regularize(State& s) {
    for (bool changed = true; changed;) {
      changed = false;
      for (int beta = 1; beta < s.ncos; ++beta) {
        std::fill(m_.begin(), m_.begin() + s.ncos, -1);
        std::fill(minv_.begin(), minv_.begin() + s.ncos, -1);
        m_[0] = beta;
        minv_[beta] = 0;
        order_.assign(1, 0);
        for (std::size_t a = 0; a < order_.size(); ++a) {
          int i = order_[a];
          int e = m_[i];
          for (int x = 0; x < ncols_; ++x) {
            int j = s.T[i * ncols_ + x];
            int f = s.T[e * ncols_ + x];
            if (j < 0) {
              // Pull back: i x = m^-1(e x) when e x is already in the image.
              if (f >= 0 && minv_[f] >= 0) {
                if (!assign(s, i, x, minv_[f])) return false;
                changed = true;
              }
              continue;
            }
            if (f >= 0) {
              if (m_[j] < 0) {
                if (minv_[f] >= 0) return false;
                m_[j] = f;
                minv_[f] = j;
                order_.push_back(j);
              } else if (m_[j] != f) {
                return false;
              }
            } else if (m_[j] >= 0) {
              if (!assign(s, e, x, m_[j])) return false;
              changed = true;
            }
          }
        }
      }
      if (!stack_.empty()) {
        if (!process(s)) return false;
        changed = true;
      }
    }
    return true;
  }

  bool close(State& s) {
    if (!process(s)) {
      stack_.clear();
      return false;
    }
    if (opt_.normal_only && !regularize(s)) {
      stack_.clear();
      return false;
    }
    // Normal mode fills tables out of standard order; regularity replaces canonicity.
    return opt_.normal_only || pruned_ok(s);
  }

  bool pruned_ok(const State& s) {
    for (int beta = 1; beta < s.ncos; ++beta) {
      Cmp c = compare_from(s.T, s.ncos, ncols_, beta, newnum_, order_);
      if (c == Cmp::Smaller) return false;
      if (opt_.normal_only && c == Cmp::Larger) return false;
    }
    return true;
  }

  void record(const State& s) {
    if (s.ncos < static_cast<int>(opt_.min_index)) return;
    std::vector<int> data(s.T.begin(), s.T.begin() + static_cast<std::ptrdiff_t>(s.ncos) * ncols_);
    CosetTable t = CosetTable(ncols_ / 2, s.ncos, std::move(data)).standardized();
    if (opt_.normal_only && !is_normal(t)) return;
    result_.tables.push_back(std::move(t));
  }

  void dfs(State& s) {
    if (!result_.complete) return;
    if (++nodes_ > opt_.max_nodes) {
      result_.complete = false;
      return;
    }
    int total = s.ncos * ncols_;
    int c = -1, x = -1;
    if (!opt_.normal_only) {
      // Row-major order keeps tables in standard form, which the canonicity test needs.
      while (s.cursor < total && s.T[s.cursor] >= 0) ++s.cursor;
      if (s.cursor < total) {
        c = s.cursor / ncols_;
        x = s.cursor % ncols_;
      }
    } else {
      // Column by column, generators before inverses: cycles close early.
      for (int xx : column_order_) {
        for (int cc = 0; cc < s.ncos; ++cc)
          if (s.T[cc * ncols_ + xx] < 0) {
            c = cc;
            x = xx;
            break;
          }
        if (c >= 0) break;
      }
    }
    if (c < 0) {
      record(s);
      return;
    }
    int ix = inverse_letter(x);
    for (int d = 0; d < s.ncos; ++d) {
      if (s.T[d * ncols_ + ix] >= 0) continue;
      State t = s;
      assign(t, c, x, d);
      if (close(t)) dfs(t);
      if (!result_.complete) return;
    }
    if (s.ncos < n_) {
      State t = s;
      t.ncos++;
      assign(t, c, x, s.ncos);
      if (close(t)) dfs(t);
    }
  }

  LowIndexOptions opt_;
  int ncols_, n_ = 0;
  std::vector<std::vector<std::vector<int>>> by_letter_;
  std::vector<std::pair<int, int>> stack_;
  std::vector<int> newnum_, order_, m_, minv_, column_order_;
  LowIndexResult result_;
  long nodes_ = 0;
};

}  // namespace

LowIndexResult low_index_tables(const Presentation& p, const LowIndexOptions& options) {
  return Search(p, options).run();
}

bool is_canonical(const CosetTable& t) {
  if (!t.complete()) return false;
  int n = static_cast<int>(t.index()), ncols = static_cast<int>(t.columns());
  std::vector<int> newnum(n), order;
  for (int beta = 1; beta < n; ++beta)
    if (compare_from(t.data(), n, ncols, beta, newnum, order) == Cmp::Smaller) return false;
  return t.standardized() == t;
}

bool is_normal(const CosetTable& t) {
  if (!t.complete()) return false;
  int n = static_cast<int>(t.index()), ncols = static_cast<int>(t.columns());
  std::vector<int> newnum(n), order;
  for (int beta = 1; beta < n; ++beta)
    if (compare_from(t.data(), n, ncols, beta, newnum, order) != Cmp::Equal) return false;
  return true;
}

}  // namespace rlab

#include "rlab/groups/coset_table.hpp"

#include <algorithm>
#include <array>
#include <functional>
#include <stdexcept>

namespace rlab {

std::string to_string(CosetStatus s) { return s == CosetStatus::Complete ? "Complete" : "Overflowed"; }
std::string to_string(CosetStrategy s) { return s == CosetStrategy::Hlt ? "hlt" : "felsch"; }

CosetStrategy parse_strategy(const std::string& s) {
  if (s == "hlt") return CosetStrategy::Hlt;
  if (s == "felsch") return CosetStrategy::Felsch;
  throw std::invalid_argument("unknown coset strategy '" + s + "' (expected hlt or felsch)");
}

CosetTable::CosetTable(std::size_t rank, std::size_t cosets, std::vector<int> data, CosetStatus status)
    : rank_(rank), cosets_(cosets), data_(std::move(data)), status_(status) {
  if (data_.size() != rank_ * 2 * cosets_) throw std::invalid_argument("CosetTable: data size mismatch");
}

int CosetTable::trace(int coset, const std::vector<int>& letters) const {
  for (int l : letters) {
    if (coset < 0) return -1;
    coset = act(coset, l);
  }
  return coset;
}

std::vector<int> CosetTable::permutation(std::size_t gen) const {
  std::vector<int> out(cosets_);
  for (std::size_t c = 0; c < cosets_; ++c) out[c] = act(static_cast<int>(c), static_cast<int>(2 * gen));
  return out;
}

CosetTable CosetTable::standardized(int base) const {
  std::vector<int> newnum(cosets_, -1), order;
  newnum[base] = 0;
  order.push_back(base);
  for (std::size_t i = 0; i < order.size(); ++i)
    for (std::size_t x = 0; x < columns(); ++x) {
      int d = act(order[i], static_cast<int>(x));
      if (d >= 0 && newnum[d] < 0) {
        newnum[d] = static_cast<int>(order.size());
        order.push_back(d);
      }
    }
  std::size_t n = order.size();
  std::vector<int> out(n * columns(), -1);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t x = 0; x < columns(); ++x) {
      int d = act(order[i], static_cast<int>(x));
      out[i * columns() + x] = d < 0 ? -1 : newnum[d];
    }
  CosetTable t(rank_, n, std::move(out), status_);
  t.stats = stats;
  return t;
}

bool CosetTable::relators_close(const Presentation& p) const {
  if (!complete()) return false;
  std::vector<std::vector<int>> rels;
  for (const auto& r : p.relators()) rels.push_back(p.encode(r));
  for (std::size_t c = 0; c < cosets_; ++c)
    for (const auto& r : rels)
      if (trace(static_cast<int>(c), r) != static_cast<int>(c)) return false;
  return true;
}

bool CosetTable::consistent() const {
  for (std::size_t c = 0; c < cosets_; ++c)
    for (std::size_t x = 0; x < columns(); ++x) {
      int d = act(static_cast<int>(c), static_cast<int>(x));
      if (d < 0 || d >= static_cast<int>(cosets_)) return false;
      if (act(d, inverse_letter(static_cast<int>(x))) != static_cast<int>(c)) return false;
    }
  return true;
}

namespace {

class Enumerator {
 public:
  Enumerator(const Presentation& p, const std::vector<GroupWord>& subgens, const CosetOptions& opt)
      : ncols_(2 * p.rank()), cap_(opt.max_cosets), opt_(opt) {
    if (cap_ < 1) throw std::invalid_argument("coset_enumerate: max_cosets must be at least 1");
    for (const auto& r : p.relators()) rels_.push_back(p.encode(r));
    for (const auto& h : subgens) subgens_.push_back(p.encode(h));
    if (opt_.strategy == CosetStrategy::Felsch) {
      by_letter_ = p.rotations_by_letter();
    }
    table_.assign(std::min<std::size_t>(cap_, 1024) * ncols_, -1);
    alloc_coset();
  }

  CosetTable run() {
    bool ok = opt_.strategy == CosetStrategy::Hlt ? run_hlt() : run_felsch();
    return finish(ok);
  }

 private:
  int& T(int c, int x) { return table_[static_cast<std::size_t>(c) * ncols_ + x]; }
  bool live(int c) const { return p_[c] == c; }

  int alloc_coset() {
    int c;
    if (!free_.empty()) {
      c = free_.back();
      free_.pop_back();
    } else if (p_.size() < cap_) {
      c = static_cast<int>(p_.size());
      p_.push_back(c);
      next_.push_back(-1);
      prev_.push_back(-1);
      if (table_.size() < p_.size() * ncols_) table_.resize(std::min(cap_, 2 * p_.size()) * ncols_, -1);
    } else {
      return -1;
    }
    p_[c] = c;
    next_[c] = -1;
    prev_[c] = last_;
    if (last_ >= 0) next_[last_] = c;
    last_ = c;
    ++live_;
    ++stats_.defined;
    stats_.max_live = std::max<long>(stats_.max_live, live_);
    return c;
  }

  void unlink(int c) {
    if (c == cur_) {
      cur_ = prev_[c];
      cur_died_ = true;
    }
    if (c == scan_) scan_ = prev_[c];
    if (prev_[c] >= 0) next_[prev_[c]] = next_[c];
    if (next_[c] >= 0) prev_[next_[c]] = prev_[c];
    if (last_ == c) last_ = prev_[c];
    --live_;
  }

  int rep(int c) {
    int r = c;
    while (p_[r] != r) r = p_[r];
    while (p_[c] != r) {
      int n = p_[c];
      p_[c] = r;
      c = n;
    }
    return r;
  }

  void merge(int a, int b) {
    a = rep(a);
    b = rep(b);
    if (a == b) return;
    if (a > b) std::swap(a, b);
    p_[b] = a;
    queue_.push_back(b);
  }

  void coincidence(int a, int b) {
    ++stats_.coincidences;
    queue_.clear();
    merge(a, b);
    for (std::size_t qi = 0; qi < queue_.size(); ++qi) {
      int e = queue_[qi];
      unlink(e);
      for (int x = 0; x < static_cast<int>(ncols_); ++x) {
        int f = T(e, x);
        if (f < 0) continue;
        int ix = inverse_letter(x);
        if (T(f, ix) == e) T(f, ix) = -1;
        int e1 = rep(e), f1 = rep(f);
        if (T(e1, x) >= 0) {
          merge(f1, T(e1, x));
        } else if (T(f1, ix) >= 0) {
          merge(e1, T(f1, ix));
        } else {
          T(e1, x) = f1;
          T(f1, ix) = e1;
          deduce(e1, x);
        }
      }
    }
    for (int e : queue_) {
      std::fill(table_.begin() + static_cast<std::ptrdiff_t>(e * ncols_),
                table_.begin() + static_cast<std::ptrdiff_t>((e + 1) * ncols_), -1);
      pending_free_.push_back(e);
    }
    queue_.clear();
  }

  void release_pending() {
    for (int e : pending_free_) free_.push_back(e);
    pending_free_.clear();
  }

  void deduce(int c, int x) {
    if (opt_.strategy == CosetStrategy::Felsch) deductions_.push_back({c, x});
  }

  // Scans w at c; fills gaps when `fill`. Returns false when out of space.
  bool scan(int c, const std::vector<int>& w, bool fill) {
    int f = c, b = c;
    int i = 0, j = static_cast<int>(w.size()) - 1;
    for (;;) {
      while (i <= j && T(f, w[i]) >= 0) f = T(f, w[i++]);
      if (i > j) {
        if (f != b) coincidence(f, b);
        return true;
      }
      while (j >= i && T(b, inverse_letter(w[j])) >= 0) b = T(b, inverse_letter(w[j--]));
      if (j < i) {
        coincidence(f, b);
        return true;
      }
      if (i == j) {
        T(f, w[i]) = b;
        T(b, inverse_letter(w[i])) = f;
        deduce(f, w[i]);
        return true;
      }
      if (!fill) return true;
      if (!define(f, w[i])) return false;
    }
  }

  bool define(int c, int x) {
    int d = alloc_coset();
    if (d < 0) return false;
    T(c, x) = d;
    T(d, inverse_letter(x)) = c;
    deduce(c, x);
    return true;
  }

  // Scans every relator at every live coset without defining. True if space was freed.
  bool lookahead() {
    if (!opt_.lookahead) return false;
    ++stats_.lookaheads;
    deductions_.clear();
    for (int c = 0; c >= 0;) {
      int save = c;
      scan_ = c;
      for (const auto& r : rels_) {
        if (!live(save)) break;
        scan(save, r, false);
      }
      c = scan_ >= 0 ? next_[scan_] : 0;
      if (c == save) c = next_[save];
    }
    scan_ = -1;
    process_deductions();
    release_pending();
    return !free_.empty();
  }

  void process_deductions() {
    while (!deductions_.empty()) {
      auto [c, x] = deductions_.back();
      deductions_.pop_back();
      if (!live(c) || T(c, x) < 0) continue;
      for (const auto& w : by_letter_[x]) {
        if (!live(c)) break;
        scan(c, w, false);
      }
      if (!live(c) || T(c, x) < 0) continue;
      int d = T(c, x);
      for (const auto& w : by_letter_[inverse_letter(x)]) {
        if (!live(d)) break;
        scan(d, w, false);
      }
    }
  }

  bool with_space(const std::function<bool()>& step) {
    for (;;) {
      if (step()) {
        release_pending();
        return true;
      }
      release_pending();
      if (!lookahead()) return false;
    }
  }

  bool run_hlt() {
    for (const auto& h : subgens_)
      if (!with_space([&] { return scan(0, h, true); })) return false;
    cur_ = 0;
    while (cur_ >= 0) {
      cur_died_ = false;
      int c = cur_;
      bool ok = with_space([&] {
        for (const auto& r : rels_) {
          if (!live(c)) return true;
          if (!scan(c, r, true)) return false;
        }
        for (int x = 0; x < static_cast<int>(ncols_); ++x) {
          if (!live(c)) return true;
          if (T(c, x) < 0 && !define(c, x)) return false;
        }
        return true;
      });
      if (!ok) return false;
      if (cur_died_) {
        cur_ = cur_ < 0 ? 0 : next_[cur_];
      } else {
        cur_ = next_[c];
      }
    }
    return true;
  }

  bool run_felsch() {
    for (const auto& h : subgens_)
      if (!with_space([&] {
            bool ok = scan(0, h, true);
            process_deductions();
            return ok;
          }))
        return false;
    int c = 0;
    while (c >= 0) {
      int x = 0;
      while (x < static_cast<int>(ncols_) && T(c, x) >= 0) ++x;
      if (x == static_cast<int>(ncols_)) {
        c = next_[c];
        continue;
      }
      cur_ = c;
      cur_died_ = false;
      bool ok = with_space([&] {
        if (!live(c) || T(c, x) >= 0) return true;
        if (!define(c, x)) return false;
        process_deductions();
        return true;
      });
      if (!ok) return false;
      if (cur_died_) c = cur_ < 0 ? 0 : cur_;
    }
    return true;
  }

  CosetTable finish(bool ok) {
    std::vector<int> order, newnum(p_.size(), -1);
    for (int c = 0; c >= 0; c = next_[c]) {
      newnum[c] = static_cast<int>(order.size());
      order.push_back(c);
    }
    std::vector<int> data(order.size() * ncols_, -1);
    for (std::size_t i = 0; i < order.size(); ++i)
      for (std::size_t x = 0; x < ncols_; ++x) {
        int d = T(order[i], static_cast<int>(x));
        data[i * ncols_ + x] = d < 0 ? -1 : newnum[d];
      }
    CosetTable t(ncols_ / 2, order.size(), std::move(data), ok ? CosetStatus::Complete : CosetStatus::Overflowed);
    t.stats = stats_;
    if (ok) {
      t = t.standardized();
      t.stats = stats_;
    }
    return t;
  }

  std::size_t ncols_, cap_;
  CosetOptions opt_;
  std::vector<std::vector<int>> rels_, subgens_;
  std::vector<std::vector<std::vector<int>>> by_letter_;
  std::vector<int> table_, p_, next_, prev_, free_, pending_free_, queue_;
  std::vector<std::pair<int, int>> deductions_;
  int last_ = -1, cur_ = -1, scan_ = -1;
  bool cur_died_ = false;
  long live_ = 0;
  CosetStats stats_;
};

}  // namespace

CosetTable coset_enumerate(const Presentation& p, const std::vector<GroupWord>& subgens, const CosetOptions& options) {
  for (const auto& h : subgens) p.encode(h);
  return Enumerator(p, subgens, options).run();
}

std::size_t group_order(const Presentation& p, const CosetOptions& options) {
  CosetTable t = coset_enumerate(p, {}, options);
  return t.complete() ? t.index() : 0;
}

CosetTable quotient_table(const Presentation& p, const std::vector<GroupWord>& relators, const CosetOptions& options) {
  return coset_enumerate(p.with_relators(relators), {}, options);
}

}  // namespace rlab

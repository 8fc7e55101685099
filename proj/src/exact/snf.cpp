#include "rlab/exact/snf.hpp"

#include <algorithm>

namespace rlab {
namespace {

class SnfWorker {
 public:
  SnfWorker(const IntMatrix& m, bool track)
      : a_(m), track_(track) {
    if (track_) {
      left_ = IntMatrix::identity(m.rows());
      right_ = IntMatrix::identity(m.cols());
    }
  }

  SnfResult run() {
    const std::size_t k = std::min(a_.rows(), a_.cols());
    for (std::size_t t = 0; t < k; ++t) {
      if (!place_pivot(t)) break;  // remaining block is zero
      settle(t);
    }
    SnfResult out;
    out.diagonal.reserve(k);
    for (std::size_t t = 0; t < k; ++t) out.diagonal.push_back(a_(t, t));
    if (track_) out.transforms = SnfTransforms{std::move(left_), std::move(right_)};
    return out;
  }

 private:
  void swap_rows(std::size_t i, std::size_t j) {
    a_.swap_rows(i, j);
    if (track_) left_.swap_rows(i, j);
  }
  void swap_cols(std::size_t i, std::size_t j) {
    a_.swap_cols(i, j);
    if (track_) right_.swap_cols(i, j);
  }
  void add_row(std::size_t dst, std::size_t src, const BigInt& f) {
    a_.add_row_multiple(dst, src, f);
    if (track_) left_.add_row_multiple(dst, src, f);
  }
  void add_col(std::size_t dst, std::size_t src, const BigInt& f) {
    a_.add_col_multiple(dst, src, f);
    if (track_) right_.add_col_multiple(dst, src, f);
  }
  void negate_row(std::size_t i) {
    a_.negate_row(i);
    if (track_) left_.negate_row(i);
  }

  // Moves the smallest nonzero entry of the trailing block to (t, t).
  bool place_pivot(std::size_t t) {
    std::size_t bi = 0, bj = 0;
    bool found = false;
    BigInt best;
    for (std::size_t i = t; i < a_.rows(); ++i)
      for (std::size_t j = t; j < a_.cols(); ++j) {
        const BigInt& v = a_(i, j);
        if (v == 0) continue;
        BigInt av = abs(v);
        if (!found || av < best) {
          best = av;
          bi = i;
          bj = j;
          found = true;
          if (best == 1) goto done;
        }
      }
  done:
    if (!found) return false;
    swap_rows(t, bi);
    swap_cols(t, bj);
    return true;
  }

  // Clears row and column t and enforces divisibility of the trailing block.
  void settle(std::size_t t) {
    for (;;) {
      bool dirty = false;
      for (std::size_t i = t + 1; i < a_.rows(); ++i) {
        if (a_(i, t) == 0) continue;
        add_row(i, t, -floor_div(a_(i, t), a_(t, t)));
        if (a_(i, t) != 0) dirty = true;
      }
      for (std::size_t j = t + 1; j < a_.cols(); ++j) {
        if (a_(t, j) == 0) continue;
        add_col(j, t, -floor_div(a_(t, j), a_(t, t)));
        if (a_(t, j) != 0) dirty = true;
      }
      if (dirty) {
        place_pivot(t);
        continue;
      }
      // Row and column are clear; check that the pivot divides the rest.
      bool divides = true;
      for (std::size_t i = t + 1; i < a_.rows() && divides; ++i)
        for (std::size_t j = t + 1; j < a_.cols(); ++j)
          if (a_(i, j) % a_(t, t) != 0) {
            add_row(t, i, 1);
            divides = false;
            break;
          }
      if (divides) break;
    }
    if (a_(t, t) < 0) negate_row(t);
  }

  IntMatrix a_;
  bool track_;
  IntMatrix left_;
  IntMatrix right_;
};

}  // namespace

SnfResult snf(const IntMatrix& m, bool with_transforms) {
  return SnfWorker(m, with_transforms).run();
}

std::vector<BigInt> abelian_invariants(const IntMatrix& m) {
  SnfResult r = snf(m);
  std::vector<BigInt> finite;
  std::size_t zeros = m.cols() - r.diagonal.size();
  for (const BigInt& d : r.diagonal) {
    if (d == 0)
      ++zeros;
    else if (d != 1)
      finite.push_back(d);
  }
  std::sort(finite.begin(), finite.end());
  finite.insert(finite.end(), zeros, BigInt(0));
  return finite;
}

std::size_t free_rank(const std::vector<BigInt>& invariants) {
  return static_cast<std::size_t>(
      std::count(invariants.begin(), invariants.end(), BigInt(0)));
}

}  // namespace rlab

#include "rlab/poly/real_roots.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace rlab {
namespace {

int sign(const BigRational& v) { return v > 0 ? 1 : (v < 0 ? -1 : 0); }

BigRational cauchy_bound(const UniPoly& f) {
  BigRational m = 0;
  for (int i = 0; i < f.degree(); ++i) {
    BigRational r = abs(f.coeff(static_cast<std::size_t>(i)) / f.lc());
    if (r > m) m = r;
  }
  return m + 1;
}

// Picks a point in (lo, hi) near the middle that is not a root of f.
BigRational split_point(const UniPoly& f, const BigRational& lo, const BigRational& hi) {
  const BigRational centre = (lo + hi) / 2;
  const BigRational quarter = (hi - lo) / 4;
  BigRational mid = centre;
  for (long j = 1; f(mid) == 0; ++j)
    mid = centre + quarter / (j + 1) * (j % 2 ? 1 : -1);
  return mid;
}

// Horner interval evaluation of g over [lo, hi]; returns a bounding interval.
std::pair<BigRational, BigRational> interval_eval(const UniPoly& g, const BigRational& lo,
                                                  const BigRational& hi) {
  BigRational a = 0, b = 0;
  for (int i = g.degree(); i >= 0; --i) {
    BigRational c1 = a * lo, c2 = a * hi, c3 = b * lo, c4 = b * hi;
    BigRational mn = std::min({c1, c2, c3, c4}), mx = std::max({c1, c2, c3, c4});
    BigRational c = g.coeff(static_cast<std::size_t>(i));
    a = mn + c;
    b = mx + c;
  }
  return {a, b};
}

}  // namespace

std::vector<UniPoly> sturm_sequence(const UniPoly& f) {
  std::vector<UniPoly> seq{f, f.derivative()};
  while (!seq.back().is_zero()) {
    UniPoly r = seq[seq.size() - 2] % seq.back();
    if (r.is_zero()) break;
    seq.push_back(-r);
  }
  if (seq.back().is_zero()) seq.pop_back();
  return seq;
}

int sign_variations(const std::vector<UniPoly>& seq, const BigRational& x) {
  int prev = 0, count = 0;
  for (const auto& p : seq) {
    int s = sign(p(x));
    if (s == 0) continue;
    if (prev != 0 && s != prev) ++count;
    prev = s;
  }
  return count;
}

namespace {

int variations_at_infinity(const std::vector<UniPoly>& seq, bool positive) {
  int prev = 0, count = 0;
  for (const auto& p : seq) {
    int s = sign(p.lc());
    if (!positive && p.degree() % 2 == 1) s = -s;
    if (prev != 0 && s != prev) ++count;
    prev = s;
  }
  return count;
}

}  // namespace

int count_real_roots(const UniPoly& f) {
  if (f.degree() <= 0) return 0;
  auto seq = sturm_sequence(f);
  return variations_at_infinity(seq, false) - variations_at_infinity(seq, true);
}

int count_roots_between(const std::vector<UniPoly>& seq, const BigRational& a,
                        const BigRational& b) {
  return sign_variations(seq, a) - sign_variations(seq, b);
}

std::vector<RationalInterval> isolate_real_roots(const UniPoly& f) {
  if (f.is_zero()) throw std::invalid_argument("isolate_real_roots: zero polynomial");
  if (!is_squarefree(f)) throw std::invalid_argument("isolate_real_roots: input not squarefree");
  std::vector<RationalInterval> out;
  if (f.degree() <= 0) return out;
  auto seq = sturm_sequence(f);
  BigRational b = cauchy_bound(f);
  std::vector<RationalInterval> work{{-b, b}};
  while (!work.empty()) {
    RationalInterval iv = work.back();
    work.pop_back();
    int n = count_roots_between(seq, iv.lo, iv.hi);
    if (n == 0) continue;
    if (n == 1) {
      out.push_back(iv);
      continue;
    }
    BigRational mid = split_point(f, iv.lo, iv.hi);
    work.push_back({iv.lo, mid});
    work.push_back({mid, iv.hi});
  }
  std::sort(out.begin(), out.end(),
            [](const RationalInterval& a, const RationalInterval& c) { return a.lo < c.lo; });
  return out;
}

RationalInterval refine_root(const UniPoly& f, RationalInterval iv, const BigRational& max_width) {
  int slo = sign(f(iv.lo));
  while (iv.width() >= max_width) {
    BigRational mid = iv.midpoint();
    int sm = sign(f(mid));
    if (sm == 0) {
      // Exact rational root; shrink symmetrically around it.
      BigRational half = max_width / 4;
      return {mid - half, mid + half};
    }
    if (sm == slo)
      iv.lo = mid;
    else
      iv.hi = mid;
  }
  return iv;
}

AlgebraicNumber::AlgebraicNumber(UniPoly minpoly, RationalInterval interval)
    : minpoly_(std::move(minpoly)), interval_(std::move(interval)) {
  if (minpoly_(interval_.lo) == 0 || minpoly_(interval_.hi) == 0)
    throw std::invalid_argument("AlgebraicNumber: interval endpoint is a root");
  if (count_roots_between(sturm_sequence(minpoly_), interval_.lo, interval_.hi) != 1)
    throw std::invalid_argument("AlgebraicNumber: interval does not isolate one root");
}

AlgebraicNumber AlgebraicNumber::real_root_near(const UniPoly& f, double approx) {
  auto ivs = isolate_real_roots(f);
  if (ivs.empty()) throw std::invalid_argument("real_root_near: no real roots");
  std::size_t best = 0;
  double best_d = 0;
  for (std::size_t i = 0; i < ivs.size(); ++i) {
    auto r = refine_root(f, ivs[i], BigRational(1, 1000000));
    double d = std::abs(r.midpoint().get_d() - approx);
    if (i == 0 || d < best_d) {
      best = i;
      best_d = d;
    }
  }
  return AlgebraicNumber(f, ivs[best]);
}

double AlgebraicNumber::approx() const {
  return refine_root(minpoly_, interval_, BigRational(1, BigInt(1) << 52)).midpoint().get_d();
}

RationalInterval AlgebraicNumber::enclosure(const BigRational& max_width) const {
  return refine_root(minpoly_, interval_, max_width);
}

int AlgebraicNumber::sign_of(const UniPoly& g) const {
  if (g.is_zero()) return 0;
  // g(alpha) = 0 iff minpoly divides g.
  if ((g % minpoly_).is_zero()) return 0;
  RationalInterval iv = interval_;
  int slo = sign(minpoly_(iv.lo));
  for (;;) {
    auto [a, b] = interval_eval(g, iv.lo, iv.hi);
    if (a > 0) return 1;
    if (b < 0) return -1;
    BigRational mid = iv.midpoint();
    int sm = sign(minpoly_(mid));
    if (sm == 0) return sign(g(mid));
    if (sm == slo)
      iv.lo = mid;
    else
      iv.hi = mid;
  }
}

}  // namespace rlab

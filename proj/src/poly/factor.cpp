#include "rlab/poly/factor.hpp"

#include <algorithm>
#include <cstdint>
#include <random>
#include <stdexcept>

namespace rlab {
namespace {

// ------------------------------------------------------------ arithmetic mod p

using u64 = std::uint64_t;
using PolyP = std::vector<u64>;  // low to high, trimmed

void trim(PolyP& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

u64 powmod(u64 b, u64 e, u64 p) {
  u64 r = 1 % p;
  b %= p;
  while (e) {
    if (e & 1) r = r * b % p;
    b = b * b % p;
    e >>= 1;
  }
  return r;
}

u64 invmod(u64 a, u64 p) { return powmod(a, p - 2, p); }

PolyP sub(const PolyP& a, const PolyP& b, u64 p) {
  PolyP r(std::max(a.size(), b.size()), 0);
  for (std::size_t i = 0; i < r.size(); ++i) {
    u64 x = i < a.size() ? a[i] : 0, y = i < b.size() ? b[i] : 0;
    r[i] = (x + p - y) % p;
  }
  trim(r);
  return r;
}

PolyP add(const PolyP& a, const PolyP& b, u64 p) {
  PolyP r(std::max(a.size(), b.size()), 0);
  for (std::size_t i = 0; i < r.size(); ++i) {
    u64 x = i < a.size() ? a[i] : 0, y = i < b.size() ? b[i] : 0;
    r[i] = (x + y) % p;
  }
  trim(r);
  return r;
}

PolyP mul(const PolyP& a, const PolyP& b, u64 p) {
  if (a.empty() || b.empty()) return {};
  PolyP r(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (!a[i]) continue;
    for (std::size_t j = 0; j < b.size(); ++j) r[i + j] = (r[i + j] + a[i] * b[j]) % p;
  }
  trim(r);
  return r;
}

std::pair<PolyP, PolyP> divmod(PolyP a, const PolyP& b, u64 p) {
  if (b.empty()) throw std::domain_error("division by zero polynomial mod p");
  if (a.size() < b.size()) return {{}, a};
  PolyP q(a.size() - b.size() + 1, 0);
  u64 inv = invmod(b.back(), p);
  for (std::size_t k = q.size(); k-- > 0;) {
    u64 f = a[k + b.size() - 1] * inv % p;
    q[k] = f;
    if (!f) continue;
    for (std::size_t j = 0; j < b.size(); ++j) a[k + j] = (a[k + j] + (p - f) * b[j]) % p;
  }
  trim(a);
  trim(q);
  return {q, a};
}

PolyP rem(const PolyP& a, const PolyP& b, u64 p) { return divmod(a, b, p).second; }

PolyP monic(PolyP a, u64 p) {
  if (a.empty()) return a;
  u64 inv = invmod(a.back(), p);
  for (auto& c : a) c = c * inv % p;
  return a;
}

PolyP gcd_p(PolyP a, PolyP b, u64 p) {
  while (!b.empty()) {
    PolyP r = rem(a, b, p);
    a = std::move(b);
    b = std::move(r);
  }
  return monic(a, p);
}

// s*a + t*b = 1 for coprime a, b.
void ext_gcd_p(const PolyP& a, const PolyP& b, u64 p, PolyP& s, PolyP& t) {
  PolyP r0 = a, r1 = b, s0{1}, s1{}, t0{}, t1{1};
  while (!r1.empty()) {
    auto [q, r] = divmod(r0, r1, p);
    PolyP s2 = sub(s0, mul(q, s1, p), p), t2 = sub(t0, mul(q, t1, p), p);
    r0 = std::move(r1);
    r1 = std::move(r);
    s0 = std::move(s1);
    s1 = std::move(s2);
    t0 = std::move(t1);
    t1 = std::move(t2);
  }
  if (r0.size() != 1) throw std::logic_error("ext_gcd_p: inputs not coprime");
  u64 inv = invmod(r0[0], p);
  s = s0;
  t = t0;
  for (auto& c : s) c = c * inv % p;
  for (auto& c : t) c = c * inv % p;
  trim(s);
  trim(t);
}

PolyP powmod_poly(PolyP base, const BigInt& e, const PolyP& m, u64 p) {
  PolyP result{1};
  base = rem(base, m, p);
  std::size_t bits = mpz_sizeinbase(e.get_mpz_t(), 2);
  for (std::size_t i = bits; i-- > 0;) {
    result = rem(mul(result, result, p), m, p);
    if (mpz_tstbit(e.get_mpz_t(), i)) result = rem(mul(result, base, p), m, p);
  }
  return result;
}

PolyP derivative(const PolyP& a, u64 p) {
  PolyP r;
  for (std::size_t i = 1; i < a.size(); ++i) r.push_back(a[i] * (i % p) % p);
  trim(r);
  return r;
}

PolyP reduce(const std::vector<BigInt>& f, u64 p) {
  PolyP r(f.size());
  BigInt pp = static_cast<unsigned long>(p);
  for (std::size_t i = 0; i < f.size(); ++i) {
    BigInt m;
    mpz_fdiv_r(m.get_mpz_t(), f[i].get_mpz_t(), pp.get_mpz_t());
    r[i] = m.get_ui();
  }
  trim(r);
  return r;
}

// Distinct-degree then equal-degree (Cantor-Zassenhaus) factorization of a
// monic squarefree polynomial over F_p, p odd. Deterministic seed.
std::vector<PolyP> factor_mod_p(PolyP f, u64 p) {
  std::vector<std::pair<PolyP, std::size_t>> ddf;
  PolyP x{0, 1};
  PolyP h = x;
  std::size_t i = 1;
  while (f.size() - 1 >= 2 * i) {
    h = powmod_poly(h, BigInt(static_cast<unsigned long>(p)), f, p);
    PolyP g = gcd_p(sub(h, x, p), f, p);
    if (g.size() > 1) {
      ddf.emplace_back(g, i);
      f = divmod(f, g, p).first;
      h = rem(h, f, p);
    }
    ++i;
  }
  if (f.size() > 1) ddf.emplace_back(f, f.size() - 1);

  std::mt19937_64 rng(0x5eed + p);
  std::vector<PolyP> out;
  for (auto& [g, d] : ddf) {
    std::vector<PolyP> work{g};
    const std::size_t target = (g.size() - 1) / d;
    BigInt e = (pow(BigInt(static_cast<unsigned long>(p)), d) - 1) / 2;
    std::vector<PolyP> done;
    while (!work.empty()) {
      PolyP cur = work.back();
      work.pop_back();
      if (cur.size() - 1 == d) {
        done.push_back(monic(cur, p));
        continue;
      }
      for (;;) {
        PolyP a(cur.size() - 1);
        for (auto& c : a) c = rng() % p;
        trim(a);
        if (a.size() < 2) continue;
        PolyP b = sub(powmod_poly(a, e, cur, p), PolyP{1}, p);
        PolyP s = gcd_p(b, cur, p);
        if (s.size() > 1 && s.size() < cur.size()) {
          work.push_back(s);
          work.push_back(divmod(cur, s, p).first);
          break;
        }
      }
    }
    if (done.size() != target) throw std::logic_error("factor_mod_p: equal-degree split failed");
    out.insert(out.end(), done.begin(), done.end());
  }
  return out;
}

// ------------------------------------------------------------ Z/M polynomials

using PolyZ = std::vector<BigInt>;

void trim(PolyZ& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

PolyZ mod_all(PolyZ a, const BigInt& m) {
  for (auto& c : a) mpz_fdiv_r(c.get_mpz_t(), c.get_mpz_t(), m.get_mpz_t());
  trim(a);
  return a;
}

PolyZ mul_z(const PolyZ& a, const PolyZ& b) {
  if (a.empty() || b.empty()) return {};
  PolyZ r(a.size() + b.size() - 1, BigInt(0));
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
  trim(r);
  return r;
}

PolyZ from_p(const PolyP& a) {
  PolyZ r;
  for (u64 c : a) r.emplace_back(static_cast<unsigned long>(c));
  return r;
}

// Lifts f = g*h (mod p), g monic, to f = G*H (mod p^k).
std::pair<PolyZ, PolyZ> hensel_lift(const PolyZ& f, const PolyP& g, const PolyP& h, u64 p,
                                    unsigned k) {
  PolyP s, t;
  ext_gcd_p(g, h, p, s, t);
  PolyZ G = from_p(g), H = from_p(h);
  BigInt pj = static_cast<unsigned long>(p);
  BigInt pk = pow(BigInt(static_cast<unsigned long>(p)), k);
  for (unsigned j = 1; j < k; ++j) {
    PolyZ prod = mul_z(G, H);
    PolyZ e(std::max(f.size(), prod.size()), BigInt(0));
    for (std::size_t i = 0; i < e.size(); ++i) {
      e[i] = (i < f.size() ? f[i] : BigInt(0)) - (i < prod.size() ? prod[i] : BigInt(0));
      mpz_fdiv_r(e[i].get_mpz_t(), e[i].get_mpz_t(), pk.get_mpz_t());
      e[i] = exact_div(e[i], pj);
    }
    trim(e);
    PolyP ep = reduce(e, p);
    auto [q, dg] = divmod(mul(t, ep, p), g, p);
    PolyP dh = add(mul(ep, s, p), mul(q, h, p), p);
    G.resize(std::max(G.size(), dg.size()), BigInt(0));
    for (std::size_t i = 0; i < dg.size(); ++i) G[i] += pj * static_cast<unsigned long>(dg[i]);
    H.resize(std::max(H.size(), dh.size()), BigInt(0));
    for (std::size_t i = 0; i < dh.size(); ++i) H[i] += pj * static_cast<unsigned long>(dh[i]);
    pj *= static_cast<unsigned long>(p);
  }
  return {mod_all(G, pk), mod_all(H, pk)};
}

PolyP product_mod_p(const std::vector<PolyP>& fs, std::size_t lo, std::size_t hi, u64 p) {
  PolyP r{1};
  for (std::size_t i = lo; i < hi; ++i) r = mul(r, fs[i], p);
  return r;
}

// f (mod p^k) = lc * prod(factors) (mod p). Returns monic lifts.
void lift_all(const PolyZ& f, const std::vector<PolyP>& factors, std::size_t lo,
              std::size_t hi, u64 p, unsigned k, const BigInt& pk, std::vector<PolyZ>& out) {
  if (hi - lo == 1) {
    // f = lc * u with u monic: u = f * lc^{-1} mod p^k
    BigInt inv;
    mpz_invert(inv.get_mpz_t(), f.back().get_mpz_t(), pk.get_mpz_t());
    PolyZ u = f;
    for (auto& c : u) c *= inv;
    out[lo] = mod_all(u, pk);
    return;
  }
  std::size_t mid = lo + (hi - lo) / 2;
  PolyP g = product_mod_p(factors, lo, mid, p);
  PolyP fp = reduce(f, p);
  PolyP h = mul(PolyP{fp.back()}, product_mod_p(factors, mid, hi, p), p);
  auto [G, H] = hensel_lift(f, g, h, p, k);
  lift_all(G, factors, lo, mid, p, k, pk, out);
  lift_all(H, factors, mid, hi, p, k, pk, out);
}

bool is_prime_small(u64 n) {
  if (n < 2) return false;
  for (u64 d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

PolyZ symmetric(PolyZ a, const BigInt& m) {
  BigInt half = m / 2;
  for (auto& c : a) {
    mpz_fdiv_r(c.get_mpz_t(), c.get_mpz_t(), m.get_mpz_t());
    if (c > half) c -= m;
  }
  trim(a);
  return a;
}

UniPoly to_uni(const PolyZ& a, const std::string& var) {
  std::vector<BigRational> c;
  for (const auto& v : a) c.emplace_back(v);
  return UniPoly(var, std::move(c));
}

// Irreducible factors of a squarefree primitive integer polynomial with
// positive leading coefficient.
std::vector<UniPoly> zassenhaus(const UniPoly& f_in) {
  const std::string& var = f_in.var();
  if (f_in.degree() <= 1) return {f_in};
  PolyZ f = f_in.integer_coeffs();

  // Choose a prime keeping f squarefree with the fewest modular factors.
  u64 best_p = 0;
  std::vector<PolyP> best;
  int good = 0;
  for (u64 p = 3; good < 6 && p < 5000; p += 2) {
    if (!is_prime_small(p)) continue;
    PolyP fp = reduce(f, p);
    if (fp.size() != f.size()) continue;
    if (gcd_p(fp, derivative(fp, p), p).size() != 1) continue;
    auto fs = factor_mod_p(monic(fp, p), p);
    ++good;
    if (best_p == 0 || fs.size() < best.size()) {
      best_p = p;
      best = std::move(fs);
    }
    if (best.size() == 1) return {f_in};
  }
  if (best_p == 0) throw std::logic_error("zassenhaus: no suitable prime");
  const u64 p = best_p;

  // Coefficient bound for factors of lc * f.
  BigInt norm2 = 0;
  for (const auto& c : f) norm2 += c * c;
  BigInt norm;
  mpz_sqrt(norm.get_mpz_t(), norm2.get_mpz_t());
  norm += 1;
  BigInt lcf = f.back();
  BigInt bound = 2 * abs(lcf) * norm * pow(BigInt(2), static_cast<unsigned long>(f.size()));
  unsigned k = 1;
  BigInt pk = static_cast<unsigned long>(p);
  while (pk <= bound) {
    pk *= static_cast<unsigned long>(p);
    ++k;
  }

  std::vector<PolyZ> lifted(best.size());
  lift_all(mod_all(f, pk), best, 0, best.size(), p, k, pk, lifted);

  // Recombination.
  std::vector<UniPoly> found;
  UniPoly cur = f_in;
  std::vector<PolyZ> pool = lifted;
  std::size_t s = 1;
  while (2 * s <= pool.size()) {
    bool hit = false;
    std::vector<std::size_t> idx(s);
    for (std::size_t i = 0; i < s; ++i) idx[i] = i;
    const BigInt c = cur.integer_coeffs().back();
    for (;;) {
      PolyZ g{c};
      for (auto i : idx) g = mod_all(mul_z(g, pool[i]), pk);
      g = symmetric(g, pk);
      UniPoly cand = to_uni(g, var).primitive();
      auto [q, r] = cur.divmod(cand);
      if (r.is_zero()) {
        found.push_back(cand);
        cur = q.primitive();
        std::vector<PolyZ> rest;
        for (std::size_t i = 0; i < pool.size(); ++i)
          if (std::find(idx.begin(), idx.end(), i) == idx.end()) rest.push_back(pool[i]);
        pool = std::move(rest);
        hit = true;
        break;
      }
      // next combination
      std::size_t pos = s;
      while (pos > 0 && idx[pos - 1] == pool.size() - s + pos - 1) --pos;
      if (pos == 0) break;
      ++idx[pos - 1];
      for (std::size_t i = pos; i < s; ++i) idx[i] = idx[i - 1] + 1;
    }
    if (!hit) ++s;
  }
  if (cur.degree() > 0) found.push_back(cur.primitive());
  return found;
}

bool poly_less(const UniPoly& a, const UniPoly& b) {
  if (a.degree() != b.degree()) return a.degree() < b.degree();
  for (int i = a.degree(); i >= 0; --i) {
    auto ca = a.coeff(static_cast<std::size_t>(i)), cb = b.coeff(static_cast<std::size_t>(i));
    if (ca != cb) return ca < cb;
  }
  return false;
}

}  // namespace

UniPoly Factorization::expand() const {
  std::string var = factors.empty() ? "x" : factors.front().first.var();
  UniPoly acc(var, {unit});
  for (const auto& [f, m] : factors)
    for (unsigned i = 0; i < m; ++i) acc = acc * f;
  return acc;
}

Factorization factor_univariate(const UniPoly& f) {
  if (f.is_zero()) throw std::invalid_argument("factor_univariate: zero polynomial");
  Factorization out;
  if (f.degree() == 0) {
    out.unit = f.lc();
    return out;
  }
  for (const auto& [part, mult] : squarefree_decomposition(f)) {
    UniPoly prim = part.primitive();
    std::vector<UniPoly> pieces;
    // Pull out powers of the variable first; they never vanish mod p.
    unsigned zeros = 0;
    while (prim.coeff(0) == 0) {
      prim = prim.divmod(UniPoly::x(prim.var())).first;
      ++zeros;
    }
    if (zeros) pieces.push_back(UniPoly::x(prim.var()));
    if (prim.degree() > 0)
      for (auto& g : zassenhaus(prim)) pieces.push_back(g.primitive());
    for (auto& g : pieces) out.factors.emplace_back(std::move(g), mult);
  }
  std::sort(out.factors.begin(), out.factors.end(),
            [](const auto& a, const auto& b) { return poly_less(a.first, b.first); });
  BigRational prod = 1;
  for (const auto& [g, m] : out.factors) prod *= pow(g.lc(), m);
  out.unit = f.lc() / prod;
  return out;
}

bool is_irreducible(const UniPoly& f) {
  if (f.degree() <= 0) return false;
  auto fac = factor_univariate(f);
  return fac.factors.size() == 1 && fac.factors.front().second == 1;
}

std::vector<UniPoly> irreducible_factors(const UniPoly& f) {
  std::vector<UniPoly> out;
  for (auto& [g, m] : factor_univariate(f).factors) out.push_back(g);
  return out;
}

}  // namespace rlab

#include "rlab/poly/unipoly.hpp"

#include <stdexcept>

namespace rlab {

UniPoly::UniPoly(std::string var, std::vector<BigRational> coeffs)
    : var_(std::move(var)), c_(std::move(coeffs)) {
  trim();
}

UniPoly::UniPoly(std::string var, std::initializer_list<long> coeffs) : var_(std::move(var)) {
  for (long c : coeffs) c_.emplace_back(c);
  trim();
}

void UniPoly::trim() {
  while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

UniPoly UniPoly::from_multi(const MultiPoly& p, const std::string& var) {
  for (const auto& v : p.used_vars())
    if (v != var) throw std::invalid_argument("UniPoly: polynomial involves " + v);
  UniPoly out(var);
  auto coeffs = p.coefficients_in(var);
  for (const auto& c : coeffs) out.c_.push_back(c.constant_value());
  out.trim();
  return out;
}

UniPoly UniPoly::parse(const std::string& text, const std::string& var) {
  return from_multi(parse_poly(text, {var}), var);
}

BigRational UniPoly::operator()(const BigRational& x) const {
  BigRational acc = 0;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
  return acc;
}

UniPoly UniPoly::derivative() const {
  UniPoly out(var_);
  for (std::size_t i = 1; i < c_.size(); ++i) out.c_.push_back(c_[i] * static_cast<long>(i));
  out.trim();
  return out;
}

UniPoly UniPoly::monic() const {
  if (is_zero()) return *this;
  UniPoly out = *this;
  BigRational inv = 1 / lc();
  for (auto& c : out.c_) c *= inv;
  return out;
}

UniPoly UniPoly::primitive() const {
  if (is_zero()) return *this;
  BigInt g = 0, l = 1;
  for (const auto& c : c_) {
    g = rlab::gcd(g, c.get_num());
    l = rlab::lcm(l, c.get_den());
  }
  BigRational scale = make_rational(l, abs(g));
  if (lc() < 0) scale = -scale;
  UniPoly out = *this;
  for (auto& c : out.c_) c *= scale;
  return out;
}

std::vector<BigInt> UniPoly::integer_coeffs() const {
  std::vector<BigInt> out;
  out.reserve(c_.size());
  for (const auto& c : c_) {
    if (c.get_den() != 1) throw std::invalid_argument("UniPoly: non-integral coefficient");
    out.push_back(c.get_num());
  }
  return out;
}

UniPoly UniPoly::reversed() const {
  UniPoly out = *this;
  std::reverse(out.c_.begin(), out.c_.end());
  out.trim();
  return out;
}

UniPoly UniPoly::compose(const UniPoly& q) const {
  UniPoly acc(q.var_);
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * q + UniPoly(q.var_, {*it});
  return acc;
}

UniPoly UniPoly::operator-() const {
  UniPoly out = *this;
  for (auto& c : out.c_) c = -c;
  return out;
}

UniPoly operator+(const UniPoly& a, const UniPoly& b) {
  UniPoly out(a.var_);
  out.c_.resize(std::max(a.c_.size(), b.c_.size()));
  for (std::size_t i = 0; i < out.c_.size(); ++i) out.c_[i] = a.coeff(i) + b.coeff(i);
  out.trim();
  return out;
}

UniPoly operator-(const UniPoly& a, const UniPoly& b) { return a + (-b); }

UniPoly operator*(const UniPoly& a, const UniPoly& b) {
  UniPoly out(a.var_);
  if (a.is_zero() || b.is_zero()) return out;
  out.c_.assign(a.c_.size() + b.c_.size() - 1, BigRational(0));
  for (std::size_t i = 0; i < a.c_.size(); ++i) {
    if (a.c_[i] == 0) continue;
    for (std::size_t j = 0; j < b.c_.size(); ++j) out.c_[i + j] += a.c_[i] * b.c_[j];
  }
  out.trim();
  return out;
}

UniPoly operator*(const BigRational& c, const UniPoly& a) {
  UniPoly out = a;
  for (auto& v : out.c_) v *= c;
  out.trim();
  return out;
}

std::pair<UniPoly, UniPoly> UniPoly::divmod(const UniPoly& d) const {
  if (d.is_zero()) throw std::domain_error("UniPoly::divmod: division by zero");
  UniPoly r = *this;
  UniPoly q(var_);
  if (r.degree() < d.degree()) return {q, r};
  q.c_.assign(static_cast<std::size_t>(r.degree() - d.degree() + 1), BigRational(0));
  BigRational inv = 1 / d.lc();
  for (int k = r.degree() - d.degree(); k >= 0; --k) {
    BigRational f = r.c_[static_cast<std::size_t>(k + d.degree())] * inv;
    q.c_[static_cast<std::size_t>(k)] = f;
    if (f == 0) continue;
    for (std::size_t j = 0; j < d.c_.size(); ++j) r.c_[k + j] -= f * d.c_[j];
  }
  r.trim();
  q.trim();
  return {q, r};
}

MultiPoly UniPoly::to_multi() const {
  std::vector<Term> terms;
  for (std::size_t i = 0; i < c_.size(); ++i)
    if (c_[i] != 0) terms.push_back(Term{Exponents{static_cast<std::uint32_t>(i)}, c_[i]});
  return MultiPoly({var_}, std::move(terms));
}

UniPoly gcd(const UniPoly& a, const UniPoly& b) {
  UniPoly x = a, y = b;
  while (!y.is_zero()) {
    UniPoly r = x % y;
    x = std::move(y);
    y = r.monic();
  }
  return x.monic();
}

ExtendedGcd extended_gcd(const UniPoly& a, const UniPoly& b) {
  UniPoly r0 = a, r1 = b;
  UniPoly s0(a.var(), {1}), s1(a.var());
  UniPoly t0(a.var()), t1(a.var(), {1});
  while (!r1.is_zero()) {
    auto [q, r] = r0.divmod(r1);
    UniPoly s2 = s0 - q * s1, t2 = t0 - q * t1;
    r0 = std::move(r1);
    r1 = std::move(r);
    s0 = std::move(s1);
    s1 = std::move(s2);
    t0 = std::move(t1);
    t1 = std::move(t2);
  }
  if (r0.is_zero()) return {r0, s0, t0};
  BigRational inv = 1 / r0.lc();
  return {inv * r0, inv * s0, inv * t0};
}

bool is_squarefree(const UniPoly& f) {
  if (f.degree() <= 0) return true;
  return gcd(f, f.derivative()).degree() == 0;
}

std::vector<std::pair<UniPoly, unsigned>> squarefree_decomposition(const UniPoly& f) {
  if (f.is_zero()) throw std::invalid_argument("squarefree_decomposition: zero polynomial");
  std::vector<std::pair<UniPoly, unsigned>> out;
  if (f.degree() == 0) return out;
  UniPoly fp = f.derivative();
  UniPoly a = gcd(f, fp);
  UniPoly b = f.divmod(a).first;
  UniPoly c = fp.divmod(a).first;
  UniPoly d = c - b.derivative();
  unsigned i = 1;
  while (b.degree() > 0) {
    a = gcd(b, d);
    if (a.degree() > 0) out.emplace_back(a.monic(), i);
    b = b.divmod(a).first;
    c = d.divmod(a).first;
    d = c - b.derivative();
    ++i;
  }
  return out;
}

bool is_palindromic(const UniPoly& p) {
  return p.reversed() == p && p.coeff(0) != 0;
}

}  // namespace rlab

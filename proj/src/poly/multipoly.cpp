#include "rlab/poly/multipoly.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace rlab {

bool grlex_greater(const Exponents& a, const Exponents& b) {
  std::uint64_t da = 0, db = 0;
  for (auto e : a) da += e;
  for (auto e : b) db += e;
  if (da != db) return da > db;
  return a > b;
}

namespace {

std::vector<std::string> union_vars(const std::vector<std::string>& a,
                                    const std::vector<std::string>& b) {
  std::vector<std::string> out = a;
  for (const auto& v : b)
    if (std::find(out.begin(), out.end(), v) == out.end()) out.push_back(v);
  return out;
}

// Merges two descending-sorted term lists, adding b * sign.
std::vector<Term> merge_terms(const std::vector<Term>& a, const std::vector<Term>& b,
                              bool subtract) {
  std::vector<Term> out;
  out.reserve(a.size() + b.size());
  std::size_t i = 0, j = 0;
  while (i < a.size() || j < b.size()) {
    if (j == b.size() || (i < a.size() && grlex_greater(a[i].exps, b[j].exps))) {
      out.push_back(a[i++]);
    } else if (i == a.size() || grlex_greater(b[j].exps, a[i].exps)) {
      out.push_back(b[j++]);
      if (subtract) out.back().coeff = -out.back().coeff;
    } else {
      BigRational c = subtract ? BigRational(a[i].coeff - b[j].coeff) : BigRational(a[i].coeff + b[j].coeff);
      if (c != 0) out.push_back(Term{a[i].exps, std::move(c)});
      ++i;
      ++j;
    }
  }
  return out;
}

}  // namespace

MultiPoly::MultiPoly(std::vector<std::string> vars, const BigRational& constant)
    : vars_(std::move(vars)) {
  if (constant != 0) terms_.push_back(Term{Exponents(vars_.size(), 0), constant});
}

MultiPoly::MultiPoly(std::vector<std::string> vars, std::vector<Term> terms)
    : vars_(std::move(vars)), terms_(std::move(terms)) {
  for (const auto& t : terms_)
    if (t.exps.size() != vars_.size())
      throw std::invalid_argument("MultiPoly: exponent vector length mismatch");
  canonicalize();
}

MultiPoly MultiPoly::variable(const std::vector<std::string>& vars, const std::string& name) {
  auto it = std::find(vars.begin(), vars.end(), name);
  std::vector<std::string> vs = vars;
  std::size_t idx;
  if (it == vars.end()) {
    vs.push_back(name);
    idx = vs.size() - 1;
  } else {
    idx = static_cast<std::size_t>(it - vars.begin());
  }
  Exponents e(vs.size(), 0);
  e[idx] = 1;
  return MultiPoly(vs, {Term{e, 1}});
}

MultiPoly MultiPoly::monomial(const std::vector<std::string>& vars, Exponents exps,
                              const BigRational& c) {
  return MultiPoly(vars, {Term{std::move(exps), c}});
}

void MultiPoly::canonicalize() {
  std::sort(terms_.begin(), terms_.end(),
            [](const Term& a, const Term& b) { return grlex_greater(a.exps, b.exps); });
  std::vector<Term> out;
  out.reserve(terms_.size());
  for (auto& t : terms_) {
    if (!out.empty() && out.back().exps == t.exps)
      out.back().coeff += t.coeff;
    else
      out.push_back(std::move(t));
    if (!out.empty() && out.back().coeff == 0) out.pop_back();
  }
  terms_ = std::move(out);
}

bool MultiPoly::is_constant() const {
  if (terms_.empty()) return true;
  if (terms_.size() > 1) return false;
  for (auto e : terms_[0].exps)
    if (e) return false;
  return true;
}

BigRational MultiPoly::constant_value() const {
  if (terms_.empty()) return 0;
  const Term& last = terms_.back();
  for (auto e : last.exps)
    if (e) return 0;
  return last.coeff;
}

int MultiPoly::var_index(const std::string& name) const {
  auto it = std::find(vars_.begin(), vars_.end(), name);
  return it == vars_.end() ? -1 : static_cast<int>(it - vars_.begin());
}

std::vector<std::string> MultiPoly::used_vars() const {
  std::vector<std::string> out;
  for (std::size_t i = 0; i < vars_.size(); ++i)
    for (const auto& t : terms_)
      if (t.exps[i]) {
        out.push_back(vars_[i]);
        break;
      }
  return out;
}

int MultiPoly::degree(const std::string& name) const {
  if (terms_.empty()) return -1;
  int idx = var_index(name);
  if (idx < 0) return 0;
  std::uint32_t d = 0;
  for (const auto& t : terms_) d = std::max(d, t.exps[idx]);
  return static_cast<int>(d);
}

int MultiPoly::total_degree() const {
  if (terms_.empty()) return -1;
  std::uint32_t d = 0;
  for (auto e : terms_.front().exps) d += e;
  return static_cast<int>(d);
}

std::vector<MultiPoly> MultiPoly::coefficients_in(const std::string& name) const {
  int deg = degree(name);
  if (deg < 0) return {};
  int idx = var_index(name);
  std::vector<std::vector<Term>> buckets(static_cast<std::size_t>(deg) + 1);
  for (const auto& t : terms_) {
    std::uint32_t k = idx < 0 ? 0 : t.exps[idx];
    Term c = t;
    if (idx >= 0) c.exps[idx] = 0;
    buckets[k].push_back(std::move(c));
  }
  std::vector<MultiPoly> out;
  out.reserve(buckets.size());
  for (auto& b : buckets) {
    MultiPoly p(vars_);
    p.terms_ = std::move(b);
    p.canonicalize();
    out.push_back(std::move(p));
  }
  return out;
}

MultiPoly MultiPoly::from_coefficients(const std::vector<MultiPoly>& coeffs,
                                       const std::string& name,
                                       const std::vector<std::string>& vars) {
  MultiPoly v = variable(vars, name);
  MultiPoly out(v.vars());
  MultiPoly power(v.vars(), 1);
  for (const auto& c : coeffs) {
    if (!c.is_zero()) out += c * power;
    power *= v;
  }
  return out;
}

MultiPoly MultiPoly::with_vars(const std::vector<std::string>& vars) const {
  if (vars == vars_) return *this;
  std::vector<std::size_t> map(vars_.size());
  for (std::size_t i = 0; i < vars_.size(); ++i) {
    auto it = std::find(vars.begin(), vars.end(), vars_[i]);
    if (it == vars.end()) {
      if (degree(vars_[i]) > 0)
        throw std::invalid_argument("MultiPoly::with_vars: variable " + vars_[i] + " dropped");
      map[i] = vars.size();
    } else {
      map[i] = static_cast<std::size_t>(it - vars.begin());
    }
  }
  MultiPoly out(vars);
  out.terms_.reserve(terms_.size());
  for (const auto& t : terms_) {
    Exponents e(vars.size(), 0);
    for (std::size_t i = 0; i < vars_.size(); ++i)
      if (map[i] < vars.size()) e[map[i]] = t.exps[i];
    out.terms_.push_back(Term{std::move(e), t.coeff});
  }
  out.canonicalize();
  return out;
}

MultiPoly MultiPoly::trimmed() const {
  return with_vars(used_vars());
}

MultiPoly MultiPoly::substitute(const std::string& name, const BigRational& value) const {
  int idx = var_index(name);
  if (idx < 0) return *this;
  MultiPoly out(vars_);
  out.terms_.reserve(terms_.size());
  for (const auto& t : terms_) {
    Term c = t;
    c.coeff *= rlab::pow(value, t.exps[idx]);
    c.exps[idx] = 0;
    if (c.coeff != 0) out.terms_.push_back(std::move(c));
  }
  out.canonicalize();
  return out;
}

MultiPoly MultiPoly::substitute(const std::string& name, const MultiPoly& value) const {
  if (var_index(name) < 0) return *this;
  auto coeffs = coefficients_in(name);
  // Horner in the substituted value.
  std::vector<std::string> vs = union_vars(vars_, value.vars());
  MultiPoly val = value.with_vars(vs);
  MultiPoly acc(vs);
  for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) {
    acc *= val;
    acc += it->with_vars(vs);
  }
  return acc;
}

MultiPoly MultiPoly::derivative(const std::string& name) const {
  int idx = var_index(name);
  MultiPoly out(vars_);
  if (idx < 0) return out;
  for (const auto& t : terms_) {
    if (t.exps[idx] == 0) continue;
    Term c = t;
    c.coeff *= t.exps[idx];
    c.exps[idx] -= 1;
    out.terms_.push_back(std::move(c));
  }
  out.canonicalize();
  return out;
}

MultiPoly MultiPoly::operator-() const {
  MultiPoly out = *this;
  for (auto& t : out.terms_) t.coeff = -t.coeff;
  return out;
}

MultiPoly& MultiPoly::operator+=(const MultiPoly& o) {
  if (o.vars_ != vars_) {
    auto vs = union_vars(vars_, o.vars_);
    *this = with_vars(vs);
    terms_ = merge_terms(terms_, o.with_vars(vs).terms_, false);
    return *this;
  }
  terms_ = merge_terms(terms_, o.terms_, false);
  return *this;
}

MultiPoly& MultiPoly::operator-=(const MultiPoly& o) {
  if (o.vars_ != vars_) {
    auto vs = union_vars(vars_, o.vars_);
    *this = with_vars(vs);
    terms_ = merge_terms(terms_, o.with_vars(vs).terms_, true);
    return *this;
  }
  terms_ = merge_terms(terms_, o.terms_, true);
  return *this;
}

MultiPoly operator*(const MultiPoly& a, const MultiPoly& b) {
  if (a.vars_ != b.vars_) {
    auto vs = union_vars(a.vars_, b.vars_);
    return a.with_vars(vs) * b.with_vars(vs);
  }
  MultiPoly out(a.vars_);
  if (a.is_zero() || b.is_zero()) return out;
  const std::size_t n = a.vars_.size();
  out.terms_.reserve(a.terms_.size() * b.terms_.size());
  for (const auto& ta : a.terms_)
    for (const auto& tb : b.terms_) {
      Exponents e(n);
      for (std::size_t i = 0; i < n; ++i) e[i] = ta.exps[i] + tb.exps[i];
      out.terms_.push_back(Term{std::move(e), ta.coeff * tb.coeff});
    }
  out.canonicalize();
  return out;
}

MultiPoly& MultiPoly::operator*=(const MultiPoly& o) {
  *this = *this * o;
  return *this;
}

MultiPoly& MultiPoly::operator*=(const BigRational& c) {
  if (c == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& t : terms_) t.coeff *= c;
  return *this;
}

bool operator==(const MultiPoly& a, const MultiPoly& b) {
  if (a.vars_ == b.vars_) return a.terms_ == b.terms_;
  auto vs = union_vars(a.vars_, b.vars_);
  return a.with_vars(vs).terms_ == b.with_vars(vs).terms_;
}

MultiPoly MultiPoly::pow(unsigned e) const {
  MultiPoly result(vars_, 1);
  MultiPoly base = *this;
  while (e) {
    if (e & 1) result *= base;
    e >>= 1;
    if (e) base *= base;
  }
  return result;
}

std::optional<MultiPoly> MultiPoly::divide_exact(const MultiPoly& d) const {
  if (d.is_zero()) throw std::domain_error("MultiPoly::divide_exact: division by zero");
  if (d.vars_ != vars_) {
    auto vs = union_vars(vars_, d.vars_);
    return with_vars(vs).divide_exact(d.with_vars(vs));
  }
  const std::size_t n = vars_.size();
  MultiPoly rem = *this;
  std::vector<Term> quot;
  const Term& lt = d.terms_.front();
  while (!rem.is_zero()) {
    const Term& rt = rem.terms_.front();
    Exponents e(n);
    for (std::size_t i = 0; i < n; ++i) {
      if (rt.exps[i] < lt.exps[i]) return std::nullopt;
      e[i] = rt.exps[i] - lt.exps[i];
    }
    BigRational c = rt.coeff / lt.coeff;
    std::vector<Term> sub;
    sub.reserve(d.terms_.size());
    for (const auto& td : d.terms_) {
      Exponents f(n);
      for (std::size_t i = 0; i < n; ++i) f[i] = td.exps[i] + e[i];
      sub.push_back(Term{std::move(f), td.coeff * c});
    }
    rem.terms_ = merge_terms(rem.terms_, sub, true);
    quot.push_back(Term{std::move(e), std::move(c)});
  }
  MultiPoly q(vars_);
  q.terms_ = std::move(quot);  // produced in descending order
  return q;
}

BigRational MultiPoly::numeric_content() const {
  if (terms_.empty()) return 1;
  BigInt g = 0, l = 1;
  for (const auto& t : terms_) {
    g = rlab::gcd(g, t.coeff.get_num());
    l = rlab::lcm(l, t.coeff.get_den());
  }
  return make_rational(abs(g), l);
}

MultiPoly MultiPoly::normalized() const {
  if (terms_.empty()) return *this;
  BigRational c = numeric_content();
  if (leading_coeff() < 0) c = -c;
  MultiPoly out = *this;
  BigRational inv = 1 / c;
  for (auto& t : out.terms_) t.coeff *= inv;
  return out;
}

BigRational MultiPoly::evaluate(const std::map<std::string, BigRational>& point) const {
  std::vector<BigRational> vals(vars_.size());
  for (std::size_t i = 0; i < vars_.size(); ++i) {
    auto it = point.find(vars_[i]);
    if (it != point.end())
      vals[i] = it->second;
    else if (degree(vars_[i]) > 0)
      throw std::invalid_argument("MultiPoly::evaluate: unbound variable " + vars_[i]);
  }
  BigRational acc = 0;
  for (const auto& t : terms_) {
    BigRational v = t.coeff;
    for (std::size_t i = 0; i < vars_.size(); ++i)
      if (t.exps[i]) v *= rlab::pow(vals[i], t.exps[i]);
    acc += v;
  }
  return acc;
}

std::string MultiPoly::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& t : terms_) {
    BigRational c = t.coeff;
    bool neg = c < 0;
    if (neg) c = -c;
    if (first)
      os << (neg ? "-" : "");
    else
      os << (neg ? " - " : " + ");
    first = false;
    std::string mono;
    for (std::size_t i = 0; i < vars_.size(); ++i) {
      if (!t.exps[i]) continue;
      if (!mono.empty()) mono += "*";
      mono += vars_[i];
      if (t.exps[i] > 1) mono += "^" + std::to_string(t.exps[i]);
    }
    if (mono.empty())
      os << c.get_str();
    else if (c == 1)
      os << mono;
    else
      os << c.get_str() << "*" << mono;
  }
  return os.str();
}

// ---------------------------------------------------------------- gcd

namespace {

MultiPoly monomial_gcd(const MultiPoly& mono, const MultiPoly& f) {
  Exponents e = mono.terms().front().exps;
  for (const auto& t : f.terms())
    for (std::size_t i = 0; i < e.size(); ++i) e[i] = std::min(e[i], t.exps[i]);
  return MultiPoly::monomial(mono.vars(), e, 1);
}

MultiPoly gcd_rec(const MultiPoly& a, const MultiPoly& b);

MultiPoly content_in(const MultiPoly& p, const std::string& v) {
  auto coeffs = p.coefficients_in(v);
  MultiPoly g(p.vars());
  for (const auto& c : coeffs) {
    if (c.is_zero()) continue;
    g = gcd_rec(g, c);
    if (g.is_constant()) break;
  }
  return g;
}

MultiPoly primitive_in(const MultiPoly& p, const std::string& v) {
  MultiPoly c = content_in(p, v);
  if (c.is_constant()) return p.normalized();
  return p.divide_exact(c)->normalized();
}

MultiPoly pseudo_remainder(MultiPoly a, const MultiPoly& b, const std::string& v) {
  const int db = b.degree(v);
  auto bc = b.coefficients_in(v);
  const MultiPoly& lcb = bc.back();
  MultiPoly var = MultiPoly::variable(a.vars(), v);
  while (!a.is_zero() && a.degree(v) >= db) {
    const int da = a.degree(v);
    MultiPoly lca = a.coefficients_in(v).back();
    a = lcb * a - lca * var.pow(static_cast<unsigned>(da - db)) * b;
    a = a.normalized();
  }
  return a;
}

MultiPoly gcd_rec(const MultiPoly& a, const MultiPoly& b) {
  if (a.is_zero()) return b.normalized();
  if (b.is_zero()) return a.normalized();
  if (a.is_constant() || b.is_constant()) return MultiPoly(a.vars(), 1);
  if (a.is_monomial()) return monomial_gcd(a, b);
  if (b.is_monomial()) return monomial_gcd(b, a);

  std::string v;
  for (const auto& name : a.vars())
    if (a.involves(name) || b.involves(name)) {
      v = name;
      break;
    }
  const bool ain = a.involves(v), bin = b.involves(v);
  MultiPoly ca = ain ? content_in(a, v) : a;
  MultiPoly cb = bin ? content_in(b, v) : b;
  MultiPoly c = gcd_rec(ca, cb);
  if (!ain || !bin) return c;

  MultiPoly pa = ca.is_constant() ? a.normalized() : a.divide_exact(ca)->normalized();
  MultiPoly pb = cb.is_constant() ? b.normalized() : b.divide_exact(cb)->normalized();
  if (pa.degree(v) < pb.degree(v)) std::swap(pa, pb);
  for (;;) {
    MultiPoly r = pseudo_remainder(pa, pb, v);
    if (r.is_zero()) break;
    if (!r.involves(v)) {
      pb = MultiPoly(a.vars(), 1);
      break;
    }
    pa = std::move(pb);
    pb = primitive_in(r, v);
  }
  return (c * pb).normalized();
}

}  // namespace

MultiPoly gcd(const MultiPoly& a, const MultiPoly& b) {
  if (a.vars() != b.vars()) {
    auto vs = union_vars(a.vars(), b.vars());
    return gcd_rec(a.with_vars(vs), b.with_vars(vs));
  }
  return gcd_rec(a, b);
}

std::pair<MultiPoly, unsigned> divide_out(const MultiPoly& f, const MultiPoly& g) {
  if (g.is_zero()) throw std::invalid_argument("divide_out: zero divisor");
  if (g.is_constant() || f.is_zero()) return {f, 0};
  MultiPoly cur = f;
  unsigned k = 0;
  while (auto q = cur.divide_exact(g)) {
    cur = std::move(*q);
    ++k;
  }
  return {cur, k};
}

// ---------------------------------------------------------------- resultant

MultiPoly sylvester_resultant(const MultiPoly& f_in, const MultiPoly& g_in, const std::string& var) {
  auto vs = union_vars(f_in.vars(), g_in.vars());
  MultiPoly f = f_in.with_vars(vs), g = g_in.with_vars(vs);
  const int m = f.degree(var), n = g.degree(var);
  if (m <= 0 || n <= 0)
    throw std::invalid_argument("resultant: both inputs must have positive degree in " + var);
  auto fc = f.coefficients_in(var);
  auto gc = g.coefficients_in(var);
  const std::size_t size = static_cast<std::size_t>(m + n);
  std::vector<std::vector<MultiPoly>> a(size, std::vector<MultiPoly>(size, MultiPoly(vs)));
  // n rows of f, then m rows of g; highest coefficient first.
  for (int i = 0; i < n; ++i)
    for (int k = 0; k <= m; ++k) a[i][i + k] = fc[m - k];
  for (int i = 0; i < m; ++i)
    for (int k = 0; k <= n; ++k) a[n + i][i + k] = gc[n - k];

  MultiPoly prev(vs, 1);
  bool negate = false;
  for (std::size_t k = 0; k + 1 < size; ++k) {
    if (a[k][k].is_zero()) {
      std::size_t p = k + 1;
      while (p < size && a[p][k].is_zero()) ++p;
      if (p == size) return MultiPoly(vs);
      std::swap(a[k], a[p]);
      negate = !negate;
    }
    for (std::size_t i = k + 1; i < size; ++i) {
      for (std::size_t j = k + 1; j < size; ++j) {
        MultiPoly num = a[k][k] * a[i][j] - a[i][k] * a[k][j];
        auto q = num.divide_exact(prev);
        if (!q) throw std::logic_error("resultant: inexact Bareiss division");
        a[i][j] = std::move(*q);
      }
      a[i][k] = MultiPoly(vs);
    }
    prev = a[k][k];
  }
  MultiPoly r = a[size - 1][size - 1];
  return negate ? -r : r;
}

namespace {

// Remainder of f modulo g in `var`, where g has a constant leading coefficient.
MultiPoly reduce_by_monic(MultiPoly f, const MultiPoly& g, const std::string& var) {
  const int n = g.degree(var);
  const BigRational inv = 1 / g.coefficients_in(var).back().constant_value();
  MultiPoly x = MultiPoly::variable(g.vars(), var);
  for (int d = f.degree(var); d >= n; d = f.degree(var)) {
    MultiPoly lead = f.coefficients_in(var)[d];
    f -= lead * inv * x.pow(static_cast<unsigned>(d - n)) * g;
  }
  return f;
}

bool constant_leading(const MultiPoly& p, const std::string& var) {
  return p.coefficients_in(var).back().is_constant();
}

}  // namespace

MultiPoly resultant(const MultiPoly& f_in, const MultiPoly& g_in, const std::string& var) {
  auto vs = union_vars(f_in.vars(), g_in.vars());
  MultiPoly f = f_in.with_vars(vs), g = g_in.with_vars(vs);
  const int m = f.degree(var), n = g.degree(var);
  if (m <= 0 || n <= 0)
    throw std::invalid_argument("resultant: both inputs must have positive degree in " + var);
  // With a constant leading coefficient c on the lower-degree side,
  // Res(g, f) = c^(deg f - deg r) Res(g, r) for r = f mod g, which shrinks the
  // Sylvester matrix considerably.
  bool swap = false;
  if (m >= n && constant_leading(g, var)) {
    swap = true;  // work with Res(g, f) = (-1)^(mn) Res(f, g)
  } else if (!(n >= m && constant_leading(f, var))) {
    return sylvester_resultant(f, g, var);
  }
  const MultiPoly& lo = swap ? g : f;
  const MultiPoly& hi = swap ? f : g;
  const int dlo = lo.degree(var), dhi = hi.degree(var);
  MultiPoly r = reduce_by_monic(hi, lo, var);
  MultiPoly out(vs);
  if (!r.is_zero()) {
    const int dr = r.degree(var);
    BigRational c = rlab::pow(lo.coefficients_in(var).back().constant_value(),
                              static_cast<unsigned long>(dhi - dr));
    MultiPoly rest = dr == 0 ? r.pow(static_cast<unsigned>(dlo)) : resultant(lo, r, var);
    out = rest * c;
  }
  if (swap && (static_cast<long>(m) * n) % 2 != 0) out = -out;
  return out;
}

// ---------------------------------------------------------------- parser

namespace {

class PolyParser {
 public:
  PolyParser(const std::string& text, std::vector<std::string> vars)
      : s_(text), vars_(std::move(vars)) {}

  MultiPoly parse() {
    MultiPoly p = expr();
    skip_ws();
    if (pos_ != s_.size()) fail("unexpected character");
    return p.with_vars(vars_);
  }

 private:
  [[noreturn]] void fail(const std::string& what) const {
    throw std::invalid_argument("parse_poly: " + what + " at column " +
                                std::to_string(pos_ + 1) + " in '" + s_ + "'");
  }
  void skip_ws() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }
  char peek() {
    skip_ws();
    return pos_ < s_.size() ? s_[pos_] : '\0';
  }
  bool starts_factor() {
    char c = peek();
    return std::isalpha(static_cast<unsigned char>(c)) ||
           std::isdigit(static_cast<unsigned char>(c)) || c == '(';
  }

  MultiPoly expr() {
    MultiPoly acc(vars_);
    bool neg = false;
    if (peek() == '-') {
      neg = true;
      ++pos_;
    } else if (peek() == '+') {
      ++pos_;
    }
    MultiPoly t = term();
    acc = neg ? -t : t;
    for (;;) {
      char c = peek();
      if (c != '+' && c != '-') break;
      ++pos_;
      MultiPoly rhs = term();
      if (c == '+')
        acc += rhs;
      else
        acc -= rhs;
    }
    return acc;
  }

  MultiPoly term() {
    MultiPoly acc = power();
    for (;;) {
      char c = peek();
      if (c == '*') {
        ++pos_;
        acc *= power();
      } else if (c == '/') {
        ++pos_;
        MultiPoly d = power();
        if (!d.is_constant() || d.is_zero()) fail("division only by nonzero constants");
        acc *= 1 / d.constant_value();
      } else if (starts_factor()) {
        acc *= power();
      } else {
        break;
      }
    }
    return acc;
  }

  MultiPoly power() {
    if (peek() == '-') {
      ++pos_;
      return -power();
    }
    MultiPoly base = primary();
    if (peek() == '^') {
      ++pos_;
      bool paren = peek() == '(';
      if (paren) ++pos_;
      skip_ws();
      std::size_t start = pos_;
      while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
      if (start == pos_) fail("expected non-negative integer exponent");
      unsigned e = static_cast<unsigned>(std::stoul(s_.substr(start, pos_ - start)));
      if (paren) {
        if (peek() != ')') fail("expected ')'");
        ++pos_;
      }
      base = base.pow(e);
    }
    return base;
  }

  MultiPoly primary() {
    char c = peek();
    if (c == '(') {
      ++pos_;
      MultiPoly inner = expr();
      if (peek() != ')') fail("expected ')'");
      ++pos_;
      return inner;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::size_t start = pos_;
      while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
      return MultiPoly(vars_, BigRational(BigInt(s_.substr(start, pos_ - start))));
    }
    if (std::isalpha(static_cast<unsigned char>(c))) {
      std::size_t start = pos_++;
      while (pos_ < s_.size() && (std::isdigit(static_cast<unsigned char>(s_[pos_])) ||
                                  s_[pos_] == '_'))
        ++pos_;
      std::string name = s_.substr(start, pos_ - start);
      if (std::find(vars_.begin(), vars_.end(), name) == vars_.end()) vars_.push_back(name);
      return MultiPoly::variable(vars_, name);
    }
    fail("expected a number, variable or '('");
  }

  std::string s_;
  std::vector<std::string> vars_;
  std::size_t pos_ = 0;
};

}  // namespace

MultiPoly parse_poly(const std::string& text, std::vector<std::string> vars) {
  return PolyParser(text, std::move(vars)).parse();
}

}  // namespace rlab

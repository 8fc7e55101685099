#include <boost/multiprecision/mpfr.hpp>
#include <cmath>
#include <map>
#include <mutex>

#include "rlab/repvar/gamma4.hpp"

namespace rlab {

namespace {

using Real = boost::multiprecision::mpfr_float;

struct Cx {
  Real re, im;
};

Cx operator+(const Cx& a, const Cx& b) { return {a.re + b.re, a.im + b.im}; }
Cx operator-(const Cx& a, const Cx& b) { return {a.re - b.re, a.im - b.im}; }
Cx operator*(const Cx& a, const Cx& b) {
  return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
}
Cx operator/(const Cx& a, const Cx& b) {
  Real d = b.re * b.re + b.im * b.im;
  return {(a.re * b.re + a.im * b.im) / d, (a.im * b.re - a.re * b.im) / d};
}
Real mag(const Cx& a) { return sqrt(a.re * a.re + a.im * a.im); }
Cx conj(const Cx& a) { return {a.re, -a.im}; }

Real to_real(const BigRational& q) {
  return Real(q.get_num().get_str()) / Real(q.get_den().get_str());
}

Cx eval(const MultiPoly& p, const std::map<std::string, Cx>& at) {
  Cx acc{0, 0};
  for (const auto& t : p.terms()) {
    Cx v{to_real(t.coeff), 0};
    for (std::size_t i = 0; i < p.vars().size(); ++i)
      for (std::uint32_t e = 0; e < t.exps[i]; ++e) v = v * at.at(p.vars()[i]);
    acc = acc + v;
  }
  return acc;
}

Cx eval(const UniPoly& p, const Cx& z) {
  Cx acc{0, 0};
  for (auto it = p.coeffs().rbegin(); it != p.coeffs().rend(); ++it) acc = acc * z + Cx{to_real(*it), 0};
  return acc;
}

struct M2 {
  Cx a, b, c, d;
};
M2 operator*(const M2& m, const M2& n) {
  return {m.a * n.a + m.b * n.c, m.a * n.b + m.b * n.d, m.c * n.a + m.d * n.c, m.c * n.b + m.d * n.d};
}
M2 inv(const M2& m) { return {m.d, Cx{0, 0} - m.b, Cx{0, 0} - m.c, m.a}; }

M2 eval_word(const GroupWord& w, const std::map<std::string, M2>& rho) {
  M2 out{{1, 0}, {0, 0}, {0, 0}, {1, 0}};
  for (const auto& syl : w.syllables()) {
    M2 g = rho.at(syl.gen);
    if (syl.exp < 0) g = inv(g);
    for (long k = 0; k < std::labs(syl.exp); ++k) out = out * g;
  }
  return out;
}

std::array<Real, 4> residual(const SplitRelator& rel, const Cx& x, const Cx& y, const Cx& r) {
  Cx one{1, 0}, zero{0, 0};
  std::map<std::string, M2> rho{{"a", {x, one, zero, one / x}}, {"b", {y, zero, r, one / y}}};
  auto [w1, w2] = rel.relator.split_at(rel.split);
  M2 l = eval_word(w1, rho), m = inv(eval_word(w2, rho));
  return {mag(l.a - m.a), mag(l.b - m.b), mag(l.c - m.c), mag(l.d - m.d)};
}

double log10_of(const Real& v, int floor_digits) {
  if (v == 0) return -floor_digits;
  double d = static_cast<double>(log10(v));
  return std::max(d, -static_cast<double>(floor_digits));
}

std::string str(const Cx& z, int digits) {
  return z.re.str(digits, std::ios_base::scientific) + " " + z.im.str(digits, std::ios_base::scientific);
}

Cx newton(const UniPoly& p, Cx z, int digits) {
  UniPoly dp = p.derivative();
  Real eps = pow(Real(10), -digits);
  for (int it = 0; it < 500; ++it) {
    Cx step = eval(p, z) / eval(dp, z);
    z = z - step;
    if (mag(step) < eps) break;
  }
  return z;
}

// Durand-Kerner iteration for all complex roots.
std::vector<Cx> all_roots(const UniPoly& p, int digits) {
  UniPoly m = p.monic();
  int n = m.degree();
  std::vector<Cx> z(n);
  Cx seed{Real("0.4"), Real("0.9")};
  z[0] = {1, 0};
  for (int i = 1; i < n; ++i) z[i] = z[i - 1] * seed;
  Real eps = pow(Real(10), -digits);
  for (int it = 0; it < 2000; ++it) {
    Real worst = 0;
    for (int i = 0; i < n; ++i) {
      Cx den{1, 0};
      for (int j = 0; j < n; ++j)
        if (j != i) den = den * (z[i] - z[j]);
      Cx step = eval(m, z[i]) / den;
      z[i] = z[i] - step;
      worst = std::max(worst, mag(step));
    }
    if (worst < eps) break;
  }
  for (auto& r : z) r = newton(m, r, digits);
  return z;
}

// The backend's default precision is process-wide, so checks run one at a time.
std::mutex precision_mutex;

struct PrecisionScope {
  explicit PrecisionScope(unsigned digits) : lock(precision_mutex), saved(Real::default_precision()) {
    Real::default_precision(digits);
  }
  ~PrecisionScope() { Real::default_precision(saved); }
  std::lock_guard<std::mutex> lock;
  unsigned saved;
};

}  // namespace

NumericReport numeric_check(const RigidityCertificate& cert, int precision,
                            const Gamma4Options& options) {
  if (precision < 5 || precision > 2000) throw std::invalid_argument("precision out of range");
  NumericReport rep;
  rep.precision = precision;
  rep.working_digits = 2 * precision + 10;
  PrecisionScope scope(static_cast<unsigned>(rep.working_digits + 10));
  const int w = rep.working_digits;
  Real tol = pow(Real(10), -precision);

  Cx x0 = newton(cert.x_poly, {Real(kX0Approx), Real(kX0ImagApprox)}, w);
  Cx y0 = conj(x0);
  std::map<std::string, Cx> at{{"x", x0}, {"y", y0}};
  Cx r0 = eval(cert.r_solution.num(), at) / eval(cert.r_solution.den(), at);
  rep.x0 = str(x0, precision + 5);
  rep.y0 = str(y0, precision + 5);
  rep.r0 = str(r0, precision + 5);

  Cx ref{Real(kR0RealApprox), Real(kR0ImagApprox)};
  rep.r_matches_reference = mag(r0 - ref) < Real("1e-13");
  rep.r_root_of_r_poly = mag(eval(cert.r_poly, r0)) < tol;

  Real worst = 0;
  auto r1 = residual(options.first, x0, y0, r0);
  auto r2 = residual(options.second, x0, y0, r0);
  for (int k = 0; k < 4; ++k) {
    rep.first_residual_log10[k] = log10_of(r1[k], w);
    rep.second_residual_log10[k] = log10_of(r2[k], w);
    for (const auto& [rel, v] : {std::pair{1, r1[k]}, std::pair{2, r2[k]}}) {
      if (v > worst) worst = v;
      if (v >= tol && rep.offending_entry.empty())
        rep.offending_entry = "relator " + std::to_string(rel) + " entry (" + std::to_string(k / 2 + 1) +
                              "," + std::to_string(k % 2 + 1) + ") = " + v.str(6, std::ios_base::scientific);
    }
  }
  rep.residual_log10 = log10_of(worst, w);
  rep.residual_ok = worst < tol;

  // x = y = x0: no value of r may satisfy the first relator.
  bool any_vanishes = false;
  for (const Cx& rr : all_roots(cert.r_poly, w)) {
    auto res = residual(options.first, x0, x0, rr);
    Real m = *std::max_element(res.begin(), res.end());
    rep.equal_xy_residual_log10.push_back(log10_of(m, w));
    if (m < tol) any_vanishes = true;
  }
  std::map<std::string, Cx> diag{{"x", x0}, {"y", x0}};
  Cx den = eval(cert.r_solution.den(), diag);
  if (mag(den) > tol) {
    Cx rs = eval(cert.r_solution.num(), diag) / den;
    auto res = residual(options.first, x0, x0, rs);
    Real m = *std::max_element(res.begin(), res.end());
    rep.equal_xy_solved_residual_log10 = log10_of(m, w);
    if (m < tol) any_vanishes = true;
  }
  rep.equal_xy_no_solution = !any_vanishes;
  rep.passed = rep.residual_ok && rep.r_matches_reference && rep.r_root_of_r_poly &&
               rep.equal_xy_no_solution;
  return rep;
}

}  // namespace rlab

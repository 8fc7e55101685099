#include "rlab/charvar/charvar.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "rlab/poly/cyclotomic.hpp"
#include "rlab/poly/factor.hpp"

namespace rlab {

namespace {

const std::vector<std::string> kTR{"T", "R"};

bool is_prime(int n) {
  if (n < 2) return false;
  for (int d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

// Evaluates a polynomial in T (given as a MultiPoly over kTR) at a field element.
FieldElement eval_in_field(const NumberField& k, const MultiPoly& p, const FieldElement& T) {
  auto cs = p.coefficients_in("T");
  FieldElement acc = k.from_rational(0);
  for (auto it = cs.rbegin(); it != cs.rend(); ++it)
    acc = k.add(k.mul(acc, T), k.from_rational(it->constant_value()));
  return acc;
}

UniPoly positive(UniPoly p) {
  if (!p.is_zero() && p.lc() < 0) p = -p;
  return p;
}

}  // namespace

MultiPoly canonical_component() { return parse_poly("1 + R - R^2 - 2*T^2 + R*T^2", kTR); }

MultiPoly canonical_discriminant() {
  auto c = canonical_component().coefficients_in("R");
  return c[1] * c[1] - BigRational(4) * c[2] * c[0];
}

Specialization specialize(int n, int k) {
  if (n < 3) throw std::invalid_argument("specialize: n must be at least 3");
  if (k < 1 || k > n - 1)
    throw std::out_of_range("specialize: k = " + std::to_string(k) + " outside 1.." + std::to_string(n - 1));
  Specialization s;
  s.n = n;
  s.k = k;
  UniPoly m = minpoly_two_cos_pi_over(static_cast<unsigned long>(n), "t");
  s.field = NumberField::real(m, 2 * std::cos(M_PI / n));
  s.T = s.field.reduce(chebyshev_two_cos(static_cast<unsigned long>(k), "t"));
  s.T_minpoly = s.field.minpoly_of(s.T);
  s.T_approx = s.field.approx(s.T);

  auto coeffs = canonical_component().coefficients_in("R");
  s.c = eval_in_field(s.field, coeffs[0], s.T);
  s.b = eval_in_field(s.field, coeffs[1], s.T);
  s.a = eval_in_field(s.field, coeffs[2], s.T);

  s.meridian_order = n / std::gcd(n, k);
  const NumberField& f = s.field;
  bool small_trace = false;
  for (long v : {0L, 1L, -1L, 2L, -2L})
    if (s.T == f.from_rational(v)) small_trace = true;
  s.admissible = !small_trace;
  if (s.admissible != (s.meridian_order >= 4))
    throw std::logic_error("admissibility by trace and by meridian order disagree");
  return s;
}

FieldElement discriminant_in_R(const Specialization& s) {
  const NumberField& f = s.field;
  return f.sub(f.mul(s.b, s.b), f.mul(f.from_rational(4), f.mul(s.a, s.c)));
}

bool rigidity_supported(int n) { return n == 4 || n == 6 || n == 9 || (n >= 5 && is_prime(n)); }

RigidityReport rigidity_report(int n) {
  if (n == 8)
    throw UnsupportedOrder(
        "n = 8 is not supported: Delta_8 admits an epimorphism onto Delta_4, so Galois rigidity fails");
  if (!rigidity_supported(n))
    throw UnsupportedOrder("n = " + std::to_string(n) +
                           " is not supported (need n in {4, 6, 9} or a prime n >= 5)");
  RigidityReport rep;
  rep.n = n;
  rep.field_minpoly = minpoly_two_cos_pi_over(static_cast<unsigned long>(n), "t");

  MultiPoly T = MultiPoly::variable(kTR, "T");
  MultiPoly expected_disc = (T * T - MultiPoly(kTR, 1)) * (T * T - MultiPoly(kTR, 5));
  rep.discriminant_identity = canonical_discriminant() == expected_disc;

  std::vector<Specialization> specs;
  for (int k = 1; k < n; ++k) specs.push_back(specialize(n, k));
  const NumberField& K = specs.front().field;

  rep.all_admissible_irreducible = true;
  rep.sign_pairing = true;
  std::vector<FieldElement> abs_seen;
  for (const auto& s : specs) {
    SpecializationVerdict v;
    v.k = s.k;
    v.T = K.to_string(s.T);
    v.T_minpoly = s.T_minpoly;
    v.T_approx = s.T_approx;
    v.meridian_order = s.meridian_order;
    v.admissible = s.admissible;
    FieldElement d = discriminant_in_R(s);
    v.discriminant = K.to_string(d);
    v.discriminant_minpoly = K.minpoly_of(d);
    v.discriminant_sign = K.sign(d);
    v.discriminant_zero = K.is_zero(d);
    QuadraticVerdict q = field_factor_quadratic(K, s.a, s.b, s.c);
    QuadraticVerdict qn = field_factor_quadratic(K, s.a, s.b, s.c, /*sign_shortcut=*/false);
    v.irreducible = q.irreducible;
    v.method = q.method;
    v.irreducible_by_norm = qn.irreducible;

    // Two routes to p_{n,k}: the explicit -R^2 + (1+T^2)R + (1-2T^2) and the
    // coefficients of P read off at T; split roots must also satisfy it.
    FieldElement T2 = K.mul(s.T, s.T);
    v.on_component = s.a == K.from_rational(-1) && s.b == K.add(K.from_rational(1), T2) &&
                     s.c == K.sub(K.from_rational(1), K.mul(K.from_rational(2), T2));
    for (const auto& root : q.roots)
      v.on_component = v.on_component &&
                       K.is_zero(K.add(K.add(K.mul(s.a, K.mul(root, root)), K.mul(s.b, root)), s.c));

    if (s.admissible) {
      rep.admissible_k.push_back(s.k);
      if (!v.irreducible) rep.all_admissible_irreducible = false;
      rep.sl2_character_count += v.discriminant_zero ? 1 : 2;
      FieldElement a = K.sign(s.T) < 0 ? K.neg(s.T) : s.T;
      if (std::find(abs_seen.begin(), abs_seen.end(), a) == abs_seen.end()) {
        abs_seen.push_back(a);
        rep.admissible_abs_T.emplace_back(K.minpoly_of(a), K.approx(a));
      }
    }
    const Specialization& mirror = specs[static_cast<std::size_t>(n - s.k - 1)];
    if (!(mirror.T == K.neg(s.T)) || mirror.admissible != s.admissible) rep.sign_pairing = false;
    rep.specializations.push_back(std::move(v));
  }
  std::sort(rep.admissible_abs_T.begin(), rep.admissible_abs_T.end(),
            [](const auto& x, const auto& y) { return x.second > y.second; });
  rep.psl2_character_count = rep.sl2_character_count / 2;

  // Trace field Q(T, R) at k = 1: norm of p(t, Z - c t) down to Q for a shift
  // c that makes it squarefree; its irreducible factors have the field's degree.
  const std::vector<std::string> tz{"t", "Z"};
  MultiPoly t = MultiPoly::variable(tz, "t"), Z = MultiPoly::variable(tz, "Z");
  MultiPoly m = rep.field_minpoly.to_multi().with_vars(tz);
  for (int step = 0;; ++step) {
    int c = (step % 2 ? 1 : -1) * ((step + 1) / 2);
    MultiPoly R = Z - BigRational(c) * t;
    MultiPoly p = MultiPoly(tz, 1) + R - R * R - BigRational(2) * t * t + R * t * t;
    UniPoly norm = UniPoly::from_multi(resultant(m, p, "t").trimmed(), "Z");
    if (!is_squarefree(norm)) continue;
    rep.trace_field_shift = c;
    rep.trace_field_minpoly = positive(irreducible_factors(norm).front());
    break;
  }
  rep.trace_field_degree = rep.trace_field_minpoly.degree();
  const auto& first = rep.specializations.front();
  int expected = (first.irreducible ? 2 : 1) * rep.field_minpoly.degree();
  if (rep.trace_field_degree != expected)
    throw std::logic_error("trace-field degree by norm (" + std::to_string(rep.trace_field_degree) +
                           ") disagrees with the splitting verdict (" + std::to_string(expected) + ")");
  return rep;
}

}  // namespace rlab

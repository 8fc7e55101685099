#include "rlab/poly/number_field.hpp"

#include <stdexcept>

#include "rlab/poly/factor.hpp"

namespace rlab {

namespace {

const std::string kGen = "t";

UniPoly squarefree_part(const UniPoly& f) {
  return f.divmod(gcd(f, f.derivative())).first.primitive();
}

}  // namespace

NumberField::NumberField(UniPoly minpoly, RationalInterval embedding)
    : m_(minpoly.with_var(kGen).primitive()), alpha_(m_, std::move(embedding)) {}

NumberField NumberField::rationals() {
  return NumberField(UniPoly::x(kGen), RationalInterval{BigRational(-1), BigRational(1)});
}

NumberField NumberField::real(const UniPoly& minpoly, double approx) {
  auto a = AlgebraicNumber::real_root_near(minpoly.with_var(kGen).primitive(), approx);
  return NumberField(a.minpoly(), a.interval());
}

FieldElement NumberField::from_rational(const BigRational& c) const {
  return FieldElement{UniPoly(kGen, std::vector<BigRational>{c})};
}

FieldElement NumberField::generator() const { return reduce(UniPoly::x(kGen)); }

FieldElement NumberField::reduce(const UniPoly& p) const {
  return FieldElement{(p.with_var(kGen) % m_)};
}

FieldElement NumberField::add(const FieldElement& a, const FieldElement& b) const {
  return FieldElement{a.value + b.value};
}
FieldElement NumberField::sub(const FieldElement& a, const FieldElement& b) const {
  return FieldElement{a.value - b.value};
}
FieldElement NumberField::mul(const FieldElement& a, const FieldElement& b) const {
  return reduce(a.value * b.value);
}
FieldElement NumberField::neg(const FieldElement& a) const { return FieldElement{-a.value}; }

FieldElement NumberField::inv(const FieldElement& a) const {
  if (a.value.is_zero()) throw std::domain_error("NumberField::inv of zero");
  auto eg = extended_gcd(a.value, m_);
  if (eg.g.degree() != 0) throw std::logic_error("NumberField: modulus not irreducible");
  return reduce(eg.s);
}

FieldElement NumberField::pow(const FieldElement& a, unsigned e) const {
  FieldElement r = from_rational(1), b = a;
  while (e) {
    if (e & 1) r = mul(r, b);
    e >>= 1;
    if (e) b = mul(b, b);
  }
  return r;
}

int NumberField::sign(const FieldElement& a) const { return alpha_.sign_of(a.value); }

double NumberField::approx(const FieldElement& a) const {
  auto iv = alpha_.enclosure(BigRational(1, BigInt(1) << 50));
  return a.value(iv.midpoint()).get_d();
}

UniPoly NumberField::minpoly_of(const FieldElement& a) const {
  if (a.value.degree() <= 0) return UniPoly("X", {-a.value.coeff(0), BigRational(1)});
  MultiPoly big_x = MultiPoly::variable({"X", kGen}, "X");
  MultiPoly charpoly =
      resultant(m_.to_multi().with_vars({"X", kGen}), big_x - a.value.to_multi().with_vars({"X", kGen}), kGen);
  return squarefree_part(UniPoly::from_multi(charpoly.trimmed(), "X"));
}

// ------------------------------------------------------------------ K[z]

namespace {

void trim(const NumberField& k, FieldPoly& p) {
  while (!p.empty() && k.is_zero(p.back())) p.pop_back();
}

FieldPoly field_poly_rem(const NumberField& k, FieldPoly a, const FieldPoly& b) {
  trim(k, a);
  if (b.empty()) throw std::domain_error("field_poly_rem: zero divisor");
  FieldElement inv = k.inv(b.back());
  while (a.size() >= b.size()) {
    FieldElement f = k.mul(a.back(), inv);
    std::size_t shift = a.size() - b.size();
    for (std::size_t j = 0; j < b.size(); ++j) a[shift + j] = k.sub(a[shift + j], k.mul(f, b[j]));
    a.pop_back();
    trim(k, a);
  }
  return a;
}

FieldPoly field_poly_monic(const NumberField& k, FieldPoly a) {
  if (a.empty()) return a;
  FieldElement inv = k.inv(a.back());
  for (auto& c : a) c = k.mul(c, inv);
  return a;
}

}  // namespace

FieldPoly field_poly_gcd(const NumberField& k, FieldPoly a, FieldPoly b) {
  trim(k, a);
  trim(k, b);
  while (!b.empty()) {
    FieldPoly r = field_poly_rem(k, a, b);
    a = std::move(b);
    b = std::move(r);
  }
  return field_poly_monic(k, a);
}

QuadraticVerdict field_factor_quadratic(const NumberField& k, const FieldElement& a,
                                        const FieldElement& b, const FieldElement& c,
                                        bool sign_shortcut) {
  if (k.is_zero(a)) throw std::invalid_argument("field_factor_quadratic: leading coefficient is zero");
  QuadraticVerdict out;
  out.discriminant = k.sub(k.mul(b, b), k.mul(k.from_rational(4), k.mul(a, c)));
  const FieldElement& d = out.discriminant;
  out.discriminant_minpoly = k.minpoly_of(d);
  const FieldElement two_a_inv = k.inv(k.mul(k.from_rational(2), a));

  if (k.is_zero(d)) {
    out.method = "zero-discriminant";
    out.repeated_root = true;
    FieldElement r = k.mul(k.neg(b), two_a_inv);
    out.roots = {r, r};
    return out;
  }
  if (sign_shortcut && k.sign(d) < 0) {
    out.method = "negative-discriminant";
    out.irreducible = true;
    return out;
  }

  // Trager: find a shift s with squarefree norm of g(z) = (z - s*t)^2 - d(t).
  out.method = "norm-factorization";
  const std::vector<std::string> vars{"z", kGen};
  const MultiPoly z = MultiPoly::variable(vars, "z");
  const MultiPoly t = MultiPoly::variable(vars, kGen);
  const MultiPoly m = k.minpoly().to_multi().with_vars(vars);
  const MultiPoly dm = d.value.to_multi().with_vars(vars);
  for (int step = 0;; ++step) {
    const int s = (step % 2 ? 1 : -1) * ((step + 1) / 2);  // 0, 1, -1, 2, -2, ...
    MultiPoly g = (z - BigRational(s) * t).pow(2) - dm;
    MultiPoly norm_mp = g.involves(kGen) ? resultant(m, g, kGen)
                                         : g.pow(static_cast<unsigned>(k.degree()));
    UniPoly norm = UniPoly::from_multi(norm_mp.trimmed(), "z");
    if (!is_squarefree(norm)) continue;
    out.shift = s;
    // g in K[z]: z^2 - 2 s t z + (s^2 t^2 - d)
    FieldPoly gk{k.sub(k.reduce(UniPoly(kGen, std::vector<BigRational>{0, 0, BigRational(s * s)})), d),
                 k.reduce(UniPoly(kGen, {0, -2 * s})), k.from_rational(1)};
    for (const UniPoly& h : irreducible_factors(norm)) {
      FieldPoly hk;
      for (const auto& coeff : h.coeffs()) hk.push_back(k.from_rational(coeff));
      FieldPoly common = field_poly_gcd(k, gk, hk);
      if (common.size() == 2) {
        // linear factor z - rho of g, so sqrt(d) = rho - s*t
        FieldElement rho = k.neg(common[0]);
        FieldElement root_d = k.sub(rho, k.reduce(UniPoly(kGen, {0, s})));
        out.roots = {k.mul(k.sub(root_d, b), two_a_inv),
                     k.mul(k.sub(k.neg(root_d), b), two_a_inv)};
        return out;
      }
    }
    out.irreducible = true;
    return out;
  }
}

}  // namespace rlab

#include "rlab/poly/rational_function.hpp"

#include <stdexcept>

namespace rlab {

RationalFunction::RationalFunction(MultiPoly num)
    : num_(std::move(num)), den_(num_.vars(), 1) {}

RationalFunction::RationalFunction(MultiPoly num, MultiPoly den)
    : num_(std::move(num)), den_(std::move(den)) {
  if (den_.is_zero()) throw std::domain_error("RationalFunction: zero denominator");
  reduce();
}

RationalFunction::RationalFunction(MultiPoly num, MultiPoly den, Reduced)
    : num_(std::move(num)), den_(std::move(den)) {
  normalize_denominator();
}

void RationalFunction::reduce() {
  if (num_.is_zero()) {
    den_ = MultiPoly(num_.vars(), 1);
    return;
  }
  MultiPoly g = gcd(num_, den_);
  if (!g.is_constant()) {
    num_ = *num_.divide_exact(g);
    den_ = *den_.divide_exact(g);
  }
  normalize_denominator();
}

void RationalFunction::normalize_denominator() {
  BigRational c = den_.numeric_content();
  if (den_.leading_coeff() < 0) c = -c;
  if (c != 1) {
    BigRational inv = 1 / c;
    num_ *= inv;
    den_ *= inv;
  }
}

RationalFunction RationalFunction::operator-() const {
  RationalFunction out = *this;
  out.num_ = -out.num_;
  return out;
}

RationalFunction RationalFunction::inverse() const {
  if (is_zero()) throw std::domain_error("RationalFunction::inverse of zero");
  return RationalFunction(den_, num_, Reduced{});
}

namespace {

RationalFunction combine(const RationalFunction& a, const RationalFunction& b, bool subtract) {
  if (a.den() == b.den()) {
    MultiPoly n = subtract ? a.num() - b.num() : a.num() + b.num();
    return RationalFunction(std::move(n), a.den());
  }
  MultiPoly g = gcd(a.den(), b.den());
  MultiPoly bd = *b.den().divide_exact(g);
  MultiPoly ad = *a.den().divide_exact(g);
  MultiPoly n = subtract ? a.num() * bd - b.num() * ad : a.num() * bd + b.num() * ad;
  return RationalFunction(std::move(n), a.den() * bd);
}

}  // namespace

RationalFunction operator+(const RationalFunction& a, const RationalFunction& b) {
  return combine(a, b, false);
}

RationalFunction operator-(const RationalFunction& a, const RationalFunction& b) {
  return combine(a, b, true);
}

RationalFunction operator*(const RationalFunction& a, const RationalFunction& b) {
  if (a.is_zero() || b.is_zero()) return RationalFunction(MultiPoly(a.num().vars()));
  // Cross-cancel first to keep the products small.
  MultiPoly g1 = gcd(a.num(), b.den());
  MultiPoly g2 = gcd(b.num(), a.den());
  MultiPoly an = *a.num().divide_exact(g1), bd = *b.den().divide_exact(g1);
  MultiPoly bn = *b.num().divide_exact(g2), ad = *a.den().divide_exact(g2);
  return RationalFunction(an * bn, ad * bd, RationalFunction::Reduced{});
}

RationalFunction operator/(const RationalFunction& a, const RationalFunction& b) {
  return a * b.inverse();
}

bool operator==(const RationalFunction& a, const RationalFunction& b) {
  return a.num_ == b.num_ && a.den_ == b.den_;
}

RationalFunction RationalFunction::substitute(const std::string& var,
                                              const RationalFunction& value) const {
  auto eval = [&](const MultiPoly& p) {
    auto coeffs = p.coefficients_in(var);
    RationalFunction acc(MultiPoly(p.vars()));
    for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it)
      acc = acc * value + RationalFunction(*it);
    return acc;
  };
  if (num_.degree(var) <= 0 && den_.degree(var) <= 0) return *this;
  return eval(num_) / eval(den_);
}

std::string RationalFunction::to_string() const {
  if (den_.is_constant() && den_.constant_value() == 1) return num_.to_string();
  return "(" + num_.to_string() + ")/(" + den_.to_string() + ")";
}

}  // namespace rlab

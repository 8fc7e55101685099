#include "rlab/repvar/sym_mat2.hpp"

#include <stdexcept>

namespace rlab {

SymMat2 SymMat2::identity(const std::vector<std::string>& vars) {
  auto one = RationalFunction::constant(vars, 1), zero = RationalFunction::constant(vars, 0);
  return SymMat2(one, zero, zero, one);
}

SymMat2 SymMat2::zero(const std::vector<std::string>& vars) {
  auto z = RationalFunction::constant(vars, 0);
  return SymMat2(z, z, z, z);
}

RationalFunction SymMat2::determinant() const { return e_[0] * e_[3] - e_[1] * e_[2]; }

bool SymMat2::is_zero() const {
  for (const auto& e : e_)
    if (!e.is_zero()) return false;
  return true;
}

SymMat2 SymMat2::unimodular_inverse() const {
  RationalFunction d = determinant();
  if (!(d.num().is_constant() && d.den().is_constant() &&
        d.num().constant_value() == d.den().constant_value()))
    throw std::domain_error("matrix is not unimodular (determinant " + d.to_string() + ")");
  return SymMat2(e_[3], -e_[1], -e_[2], e_[0]);
}

SymMat2 SymMat2::substitute(const std::string& var, const RationalFunction& value) const {
  return SymMat2(e_[0].substitute(var, value), e_[1].substitute(var, value),
                 e_[2].substitute(var, value), e_[3].substitute(var, value));
}

SymMat2 operator*(const SymMat2& a, const SymMat2& b) {
  const auto& x = a.e_;
  const auto& y = b.e_;
  return SymMat2(x[0] * y[0] + x[1] * y[2], x[0] * y[1] + x[1] * y[3],
                 x[2] * y[0] + x[3] * y[2], x[2] * y[1] + x[3] * y[3]);
}

SymMat2 operator-(const SymMat2& a, const SymMat2& b) {
  return SymMat2(a.e_[0] - b.e_[0], a.e_[1] - b.e_[1], a.e_[2] - b.e_[2], a.e_[3] - b.e_[3]);
}

}  // namespace rlab

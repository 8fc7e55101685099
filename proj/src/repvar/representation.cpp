#include "rlab/repvar/representation.hpp"

#include <cstdlib>
#include <stdexcept>

namespace rlab {

namespace {
const std::vector<std::string> kVars{"x", "y", "r"};
}

Assignment standard_assignment() {
  auto v = [](const std::string& n) { return RationalFunction::variable(kVars, n); };
  auto c = [](long k) { return RationalFunction::constant(kVars, k); };
  RationalFunction x = v("x"), y = v("y"), r = v("r");
  return {{"a", SymMat2(x, c(1), c(0), x.inverse())}, {"b", SymMat2(y, c(0), r, y.inverse())}};
}

SymMat2 eval_word(const GroupWord& w, const Assignment& assignment) {
  std::vector<std::string> vars = kVars;
  if (!assignment.empty()) vars = assignment.begin()->second.at(1, 1).num().vars();
  SymMat2 out = SymMat2::identity(vars);
  std::map<std::string, SymMat2> inverses;
  for (const auto& syl : w.syllables()) {
    auto it = assignment.find(syl.gen);
    if (it == assignment.end()) throw std::invalid_argument("no matrix assigned to '" + syl.gen + "'");
    const SymMat2* m = &it->second;
    auto inv_it = inverses.find(syl.gen);
    if (inv_it == inverses.end()) inv_it = inverses.emplace(syl.gen, m->unimodular_inverse()).first;
    if (syl.exp < 0) m = &inv_it->second;
    for (long k = 0; k < std::labs(syl.exp); ++k) out = out * *m;
  }
  return out;
}

ResidualMatrix relation_residual(const GroupWord& relator, std::size_t split,
                                 const Assignment& assignment) {
  if (split > relator.size())
    throw std::out_of_range("split point " + std::to_string(split) + " beyond relator of " +
                            std::to_string(relator.size()) + " syllables");
  auto [w1, w2] = relator.split_at(split);
  return relation_residual(w1, w2, assignment);
}

ResidualMatrix relation_residual(const GroupWord& w1, const GroupWord& w2,
                                 const Assignment& assignment) {
  ResidualMatrix out;
  out.matrix = eval_word(w1, assignment) - eval_word(w2, assignment).unimodular_inverse();
  for (int k = 0; k < 4; ++k) out.numerators[k] = out.matrix.entries()[k].num();
  return out;
}

RationalFunction solve_linear_parameter(const MultiPoly& numerator, const std::string& param) {
  int d = numerator.degree(param);
  if (d != 1)
    throw std::invalid_argument("numerator has degree " + std::to_string(d) + " in " + param +
                                ", expected 1");
  auto coeffs = numerator.coefficients_in(param);
  return RationalFunction(-coeffs[0], coeffs[1]);
}

RationalFunction solve_linear_parameter(const ResidualMatrix& residual, int i, int j,
                                        const std::string& param) {
  if (i < 1 || i > 2 || j < 1 || j > 2) throw std::out_of_range("entry index out of range");
  return solve_linear_parameter(residual.numerators[(i - 1) * 2 + (j - 1)], param);
}

}  // namespace rlab

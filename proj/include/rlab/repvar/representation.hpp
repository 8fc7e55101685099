#pragma once

#include <array>
#include <map>
#include <string>

#include "rlab/groups/word.hpp"
#include "rlab/repvar/sym_mat2.hpp"

namespace rlab {

using Assignment = std::map<std::string, SymMat2>;

/// The parametrization rho(a) = [[x, 1], [0, 1/x]], rho(b) = [[y, 0], [r, 1/y]]
/// over Q(x, y, r).
Assignment standard_assignment();

/// Product of assigned matrices along the word. Every assigned matrix must
/// have determinant one.
SymMat2 eval_word(const GroupWord& w, const Assignment& assignment);

struct ResidualMatrix {
  SymMat2 matrix;                    // w1 - w2^{-1}
  std::array<MultiPoly, 4> numerators;  // row-major entry numerators
};

/// Splits `relator` after `split` syllables into w1 w2 and returns w1 - w2^{-1}.
ResidualMatrix relation_residual(const GroupWord& relator, std::size_t split,
                                 const Assignment& assignment);

/// w1 - w2^{-1} for an explicit pair, which need not reduce to a nontrivial relator.
ResidualMatrix relation_residual(const GroupWord& w1, const GroupWord& w2,
                                 const Assignment& assignment);

/// Solves numerator = 0 for `param`, which must occur linearly.
RationalFunction solve_linear_parameter(const MultiPoly& numerator, const std::string& param);

/// Same, using entry (i, j) of a residual.
RationalFunction solve_linear_parameter(const ResidualMatrix& residual, int i, int j,
                                        const std::string& param);

}  // namespace rlab

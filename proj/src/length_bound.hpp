// A weighted length invariant for goals whose rewriting hypotheses never
// lighten a word. Internal to the library.

#ifndef IAL_SRC_LENGTH_BOUND_HPP_
#define IAL_SRC_LENGTH_BOUND_HPP_

#include <vector>

#include "ial/formula.hpp"

namespace ial::detail {

// True when `bangs, ant => suc` is underivable because, for some weighting
// of the variables by small naturals, the antecedent is heavier than the
// succedent can be. Applies only when every !-formula has the shape
// !((b1....bn) \ (c1....cm)), the other antecedent members are built from
// variables, 1, products and joins, and so is the succedent. A weighting is
// admissible when every rewrite weighs c1...cm at least as much as b1...bn.
// Top-level !-formulas of `ant` count as bangs.
//
// Backward, an admissible rewrite adds nonnegative weight, a dereliction
// followed by the left division rule needs at most the weight of b1...bn
// for its minor premise while the major premise gains that of c1...cm, and
// the remaining rules preserve the least weight of the antecedent.
bool length_refutes(const std::vector<Formula>& bangs, const std::vector<Formula>& ant, Formula suc);

}  // namespace ial::detail

#endif  // IAL_SRC_LENGTH_BOUND_HPP_

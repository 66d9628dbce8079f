// The dyadic calculus: sequents with a !-zone, their backward rule
// instances, and the admissible zone operations.

#ifndef IAL_DYADIC_HPP_
#define IAL_DYADIC_HPP_

#include <stdexcept>
#include <vector>

#include "ial/rules.hpp"

namespace ial {

class FragmentError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Wraps a monoidal-fragment sequent with an empty zone.
DSequent to_dyadic(const Sequent& s);

// All cut-free finitary dyadic rule instances concluding `ds`. Ad keeps the
// applied formula in the premise zone; with an empty b-chain it inserts the
// c-chain at every antecedent position.
std::vector<BackwardStep> backward_dyadic(const DSequent& ds);

// Zone union with `extra`; every extra must be a monoidal !-formula.
DSequent weaken_zone(const DSequent& ds, const std::vector<Formula>& extra);

// Moves the monoidal !-formula at `position` from the antecedent into the zone.
DSequent absorb(const DSequent& ds, std::size_t position);

// Absorbs every top-level monoidal !-formula of the antecedent.
DSequent absorb_all(const DSequent& ds);

}  // namespace ial

#endif  // IAL_DYADIC_HPP_

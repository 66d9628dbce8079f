// Hypotheses as !-formulas: a hypothesis A1, ..., An => B becomes
// !((A1 . ... . An) \ B), or !B when n = 0. Derivations from hypotheses and
// derivations of the embedded sequent translate into each other.

#ifndef IAL_EMBEDDING_HPP_
#define IAL_EMBEDDING_HPP_

#include <string>
#include <vector>

#include "ial/derivation.hpp"

namespace ial {

using HypothesisSet = std::vector<Sequent>;

enum class HypothesisClass {
  // b1, ..., bn => c1 . ... . cm with variables, n >= 1 and m <= n.
  NE,
  // Any other variables => product of variables (1 for m = 0).
  MonoidalInequation,
  StarFree,
  General,
};

std::string to_string(HypothesisClass c);
HypothesisClass classify_hypothesis(const Sequent& h);

std::vector<Formula> upsilon(const HypothesisSet& hyps);

// !upsilon(hyps), goal antecedent => goal succedent.
Sequent embed(const HypothesisSet& hyps, const Sequent& goal);

// Derivation of !upsilon(hyps), A1, ..., An => B for hyps[index] without
// hypotheses: weakening away the other !-formulas, moving the used one to
// the right, dereliction and the left division rule.
DerivationPtr hypothesis_figure(const HypothesisSet& hyps, std::size_t index);

// Turns a flat derivation of `goal` from `hyps` (Hyp leaves, cut allowed)
// into a derivation of embed(hyps, goal) without hypotheses, prefixing every
// sequent with !upsilon(hyps) and inserting the structural steps the
// context-splitting rules need. Throws std::invalid_argument on schema
// certificates or malformed nodes.
DerivationPtr embed_derivation(const HypothesisSet& hyps, const DerivationPtr& d);

// Converse: erases the !-formulas of a derivation of embed(hyps, goal),
// trading each dereliction of a hypothesis formula for a cut against the
// hypothesis. The result checks in the flat system with cut and `hyps`.
DerivationPtr erase_embedding(const HypothesisSet& hyps, const DerivationPtr& d);

}  // namespace ial

#endif  // IAL_EMBEDDING_HPP_

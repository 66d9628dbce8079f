// Search in the flat calculus: a depth-bounded engine over sequents kept in
// the canonical form !X, G => C (X sorted and duplicate-free, G without
// top-level !-formulas), and an exact search for derivability from
// hypotheses.

#ifndef IAL_FLAT_SEARCH_HPP_
#define IAL_FLAT_SEARCH_HPP_

#include <vector>

#include "ial/search.hpp"

namespace ial {

// Moves every top-level !-formula to a sorted, duplicate-free front prefix.
std::vector<Formula> canonical_antecedent(const std::vector<Formula>& ant);

// Chain of !W, !C, !P1, !P2 steps from `from => suc` to `to => suc`, ending in
// `tail` (which must conclude `to => suc`). The two antecedents must agree on
// their non-! members, and every ! formula needed in `to` must occur in `from`.
DerivationPtr structural_path(const std::vector<Formula>& from, const std::vector<Formula>& to, Formula suc,
                              DerivationPtr tail);

// Depth-bounded cut-free search in the flat calculus. Depth counts macro
// steps: one logical rule together with the structural steps that copy the
// !-prefix into its premises, or one use of a !-formula (copy, move,
// dereliction and the left rule on its body). Stars in the antecedent are
// not eliminated, so such goals end at best in Unknown.
Verdict prove_flat(const Sequent& s, const SearchOptions& opts = {});

// Derivability of `goal` from `hypotheses` in the flat calculus without !.
// A hypothesis b1, ..., bn => D is used through a cut whose left premise is
// the hypothesis itself, followed by the product and unit rules that take D
// apart when it is a product of variables. Exact (never Unknown) when every
// hypothesis is a non-expanding monoidal inequation with n >= 1; otherwise
// bounded by `opts`. Proofs check in the flat system with cut enabled.
Verdict prove_from_hypotheses(const Sequent& goal, const std::vector<Sequent>& hypotheses,
                              const SearchOptions& opts = {});

CheckContext flat_context(const std::vector<Sequent>& hypotheses = {}, bool allow_cut = false);

}  // namespace ial

#endif  // IAL_FLAT_SEARCH_HPP_

// The basic calculus: sequents with a basic right-hand side (r, r1.r2 or
// r^*), rewriting steps driven by a string rewriting system, and a bounded
// backward search.

#ifndef IAL_BASIC_HPP_
#define IAL_BASIC_HPP_

#include <vector>

#include "ial/rewriting.hpp"
#include "ial/search.hpp"

namespace ial {

bool is_bsc_sequent(const Sequent& s);

// All finitary instances concluding `s`: the three axioms, the division and
// meet rules on a preceding variable, product decomposition, and one
// rewriting step per rule of `srs` per matching antecedent segment. Stars in
// the antecedent are handled by the omega-rule (see omega_family), not here.
std::vector<BackwardStep> backward_bsc(const Sequent& s, const RewritingSystem& srs);

// Bounded backward search. Underivable only when the search space below `s`
// was exhausted without cutoff; omega-nodes are searched up to
// opts.star_bound and can only refute.
Verdict prove_bsc(const Sequent& s, const RewritingSystem& srs, const SearchOptions& opts = {});

CheckContext bsc_context(const RewritingSystem& srs);

}  // namespace ial

#endif  // IAL_BASIC_HPP_

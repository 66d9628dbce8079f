// Derivability search for dyadic sequents: an exact decision procedure for
// the star-free NE fragment and a bounded three-valued search with schema
// certificates for omega-nodes.

#ifndef IAL_SEARCH_HPP_
#define IAL_SEARCH_HPP_

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "ial/derivation.hpp"
#include "ial/dyadic.hpp"
#include "ial/ordinal.hpp"

namespace ial {

enum class Status { Derivable, Underivable, Unknown };

std::string to_string(Status s);
// 0 derivable, 1 underivable, 2 unknown.
int exit_code(Status s);

struct SearchOptions {
  // Backward steps along one branch; an omega-step counts as one.
  std::size_t depth = 12;
  // Omega-instances 0..star_bound are searched for refutations.
  std::size_t star_bound = 4;
  // Total visited goals before the search gives up.
  std::size_t node_limit = 2'000'000;
  // Close goals by Id only on variables, so stars are decomposed.
  bool atomic_id = false;
};

struct SearchStats {
  std::size_t nodes = 0;
  std::size_t memo_hits = 0;
  bool cutoff = false;
};

struct Verdict {
  Status status = Status::Unknown;
  DerivationPtr proof;
  // For refutations through the omega-rule: the underivable instance.
  std::optional<DSequent> witness;
  std::optional<std::size_t> witness_instance;
  SearchOptions bounds;
  SearchStats stats;
};

// Exact decision for NE sequents without stars. Throws FragmentError on a
// precondition violation; never returns Unknown.
Verdict decide_ne_star_free(const DSequent& ds);

// Bounded search for monoidal-fragment sequents. Throws FragmentError when
// the sequent is outside the fragment.
Verdict prove_bounded(const DSequent& ds, const SearchOptions& opts = {});

// Context for checking proofs produced by the dyadic searches.
CheckContext dyadic_context(std::size_t omega_bound = 5);

// Largest number of omega-nodes on one path, certificates included.
std::size_t omega_nesting(const DerivationPtr& d);

// Upper bound on the derivation rank: a maximal finitary block counts 1 plus
// the largest rank on its omega frontier; an omega-node counts 1 plus the
// supremum of its instances, bounded by w*a for a certificate whose context
// nests a >= 1 omega-nodes and by the base rank otherwise.
OrdVec rank_upper_bound(const DerivationPtr& d);

struct FinReach {
  std::vector<DSequent> sequents;
  bool exhausted = false;
};

// Star-free sequents reachable from `ds` by backward dyadic steps, up to `cap`.
FinReach enumerate_fin(const DSequent& ds, std::size_t cap);

}  // namespace ial

#endif  // IAL_SEARCH_HPP_

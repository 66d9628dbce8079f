// Depth-bounded backward search over macro steps, shared by the flat and
// basic engines. Internal to the library.

#ifndef IAL_SRC_MACRO_ENGINE_HPP_
#define IAL_SRC_MACRO_ENGINE_HPP_

#include <algorithm>
#include <functional>
#include <limits>
#include <unordered_map>
#include <unordered_set>
#include <vector>

#include "ial/search.hpp"

namespace ial::detail {

constexpr std::size_t kInf = std::numeric_limits<std::size_t>::max();

// A macro without `build` is a probe: its single premise is an invertible
// consequence of the goal, so an absolute refutation of the premise refutes
// the goal, while its success proves nothing.
struct Macro {
  std::vector<Sequent> premises;
  std::function<DerivationPtr(const std::vector<DerivationPtr>&)> build;
};

// Sets `incomplete` when some rule could not be enumerated.
using Generator = std::function<std::vector<Macro>(const Sequent&, bool& incomplete)>;

struct Outcome {
  DerivationPtr proof;
  bool exact = true;
  std::size_t low = kInf;
};

class MacroEngine {
 public:
  MacroEngine(Generator gen, std::size_t node_limit) : gen_(std::move(gen)), node_limit_(node_limit) {}

  Outcome solve(const Sequent& flat, std::size_t budget, std::size_t level) {
    const DSequent s(flat);
    if (++stats_.nodes > node_limit_) {
      stats_.cutoff = true;
      return {nullptr, false, kInf};
    }
    if (auto it = proved_.find(s); it != proved_.end()) {
      ++stats_.memo_hits;
      return {it->second, true, kInf};
    }
    if (refuted_.count(s)) {
      ++stats_.memo_hits;
      return {nullptr, true, kInf};
    }
    if (auto it = on_stack_.find(s); it != on_stack_.end()) return {nullptr, true, it->second};
    if (auto it = failed_budget_.find(s); it != failed_budget_.end() && it->second >= budget) {
      ++stats_.memo_hits;
      return {nullptr, false, kInf};
    }
    if (budget == 0) {
      stats_.cutoff = true;
      return {nullptr, false, kInf};
    }
    on_stack_.emplace(s, level);
    Outcome acc;
    bool incomplete = false;
    for (const auto& m : gen_(flat, incomplete)) {
      if (!m.build) {
        Outcome r = solve(m.premises.at(0), budget == kInf ? kInf : budget - 1, level + 1);
        if (!r.proof && refuted_.count(DSequent(m.premises[0]))) {
          on_stack_.erase(s);
          refuted_.insert(s);
          return {nullptr, true, kInf};
        }
        acc.low = std::min(acc.low, r.low);
        acc.exact = false;
        continue;
      }
      std::vector<DerivationPtr> kids;
      bool ok = true;
      for (const auto& p : m.premises) {
        Outcome r = solve(p, budget == kInf ? kInf : budget - 1, level + 1);
        acc.low = std::min(acc.low, r.low);
        if (!r.proof) {
          acc.exact = acc.exact && r.exact;
          ok = false;
          break;
        }
        kids.push_back(r.proof);
      }
      if (ok) {
        DerivationPtr proof = m.build(kids);
        on_stack_.erase(s);
        proved_.emplace(s, proof);
        return {proof, true, kInf};
      }
    }
    if (incomplete) acc.exact = false;
    on_stack_.erase(s);
    if (acc.low >= level) {
      if (acc.exact)
        refuted_.insert(s);
      else
        failed_budget_[s] = std::max(failed_budget_[s], budget);
    }
    return acc;
  }

  const SearchStats& stats() const { return stats_; }

 private:
  Generator gen_;
  std::size_t node_limit_;
  SearchStats stats_;
  std::unordered_map<DSequent, DerivationPtr, DSequentHash> proved_;
  std::unordered_set<DSequent, DSequentHash> refuted_;
  std::unordered_map<DSequent, std::size_t, DSequentHash> failed_budget_;
  std::unordered_map<DSequent, std::size_t, DSequentHash> on_stack_;
};

inline Verdict run(MacroEngine& engine, const Sequent& goal, std::size_t budget, const SearchOptions& opts) {
  Outcome r = engine.solve(goal, budget, 0);
  Verdict v;
  v.bounds = opts;
  v.stats = engine.stats();
  if (r.proof) {
    v.status = Status::Derivable;
    v.proof = r.proof;
  } else if (r.exact) {
    v.status = Status::Underivable;
  }
  return v;
}

}  // namespace ial::detail

#endif  // IAL_SRC_MACRO_ENGINE_HPP_

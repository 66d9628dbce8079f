#include "ial/search.hpp"

#include <algorithm>
#include <deque>
#include <limits>
#include <unordered_map>
#include <unordered_set>

#include "length_bound.hpp"

namespace ial {

std::string to_string(Status s) {
  switch (s) {
    case Status::Derivable: return "Derivable";
    case Status::Underivable: return "Underivable";
    case Status::Unknown: return "Unknown";
  }
  return "?";
}

int exit_code(Status s) {
  switch (s) {
    case Status::Derivable: return 0;
    case Status::Underivable: return 1;
    case Status::Unknown: return 2;
  }
  return 2;
}

CheckContext dyadic_context(std::size_t omega_bound) {
  CheckContext ctx;
  ctx.system = System::Dyadic;
  ctx.omega_bound = omega_bound;
  return ctx;
}

namespace {

constexpr std::size_t kInf = std::numeric_limits<std::size_t>::max();

bool mentions_block(const DSequent& s) {
  if (s.suc.has_block()) return true;
  return std::any_of(s.ant.begin(), s.ant.end(), [](Formula f) { return f.has_block(); });
}

// A failed goal is `exact` when no bound was hit below it; `low` is the
// shallowest stack level of a repeated goal the failure relied on.
struct Outcome {
  DerivationPtr proof;
  bool exact = true;
  std::size_t low = kInf;
};

class Engine {
 public:
  Engine(const SearchOptions& opts, bool unbounded, std::optional<DSequent> hole = std::nullopt)
      : opts_(opts), unbounded_(unbounded), hole_(std::move(hole)) {}

  Outcome solve(const DSequent& s, std::size_t budget, std::size_t level) {
    if (++stats_.nodes > opts_.node_limit && !unbounded_) {
      stats_.cutoff = true;
      return {nullptr, false, kInf};
    }
    if (hole_ && s == *hole_) return {make_node(Rule{RuleKind::Hole, 0}, s), true, kInf};
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
    if (!unbounded_ && !mentions_block(s) && !sequent_has_star(s) && classify_dsequent(s) == FragmentClass::NE)
      return exact_subcall(s);
    if (detail::length_refutes(s.zone, s.ant, s.suc)) {
      refuted_.insert(s);
      return {nullptr, true, kInf};
    }
    if (budget == 0) {
      stats_.cutoff = true;
      return {nullptr, false, kInf};
    }

    on_stack_.emplace(s, level);
    Outcome acc;
    for (const auto& step : backward_dyadic(s)) {
      if (opts_.atomic_id && step.rule.kind == RuleKind::Id && !s.suc.is_var()) continue;
      if (auto proof = try_step(s, step, budget, level, acc)) return finish_success(s, proof);
    }
    for (std::size_t i = 0; i < s.ant.size(); ++i) {
      if (!s.ant[i].is(Op::Star)) continue;
      const OmegaFamily fam = *omega_family(s, i);
      bool instances_ok = true;
      for (std::size_t n = 0; n <= opts_.star_bound; ++n) {
        const DSequent inst = fam.instance(n);
        Outcome r = solve(inst, budget - 1, level + 1);
        if (r.proof) continue;
        if (!hole_ && refuted_.count(inst)) {
          // Some instance is underivable, so the star cannot be eliminated
          // and, by invertibility, neither is the conclusion derivable.
          on_stack_.erase(s);
          refuted_.insert(s);
          witness_.emplace(s, std::make_pair(inst, n));
          return {nullptr, true, kInf};
        }
        acc.low = std::min(acc.low, r.low);
        acc.exact = acc.exact && r.exact;
        instances_ok = false;
        break;
      }
      if (!instances_ok) continue;
      if (auto proof = schema(s, fam, budget, level)) return finish_success(s, proof);
      acc.exact = false;
    }
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

  std::optional<std::pair<DSequent, std::size_t>> witness(const DSequent& s) const {
    if (auto it = witness_.find(s); it != witness_.end()) return it->second;
    return std::nullopt;
  }

 private:
  DerivationPtr try_step(const DSequent& s, const BackwardStep& step, std::size_t budget, std::size_t level,
                         Outcome& acc) {
    std::vector<DerivationPtr> kids;
    for (const auto& p : step.premises) {
      Outcome r = solve(p, budget - 1, level + 1);
      acc.low = std::min(acc.low, r.low);
      if (!r.proof) {
        acc.exact = acc.exact && r.exact;
        return nullptr;
      }
      kids.push_back(r.proof);
    }
    return make_node(step.rule, s, std::move(kids));
  }

  Outcome finish_success(const DSequent& s, DerivationPtr proof) {
    on_stack_.erase(s);
    proved_.emplace(s, proof);
    return {std::move(proof), true, kInf};
  }

  Outcome exact_subcall(const DSequent& s) {
    Engine sub(opts_, true);
    Outcome r = sub.solve(s, kInf, 0);
    stats_.nodes += sub.stats().nodes;
    if (r.proof) {
      proved_.emplace(s, r.proof);
      return {r.proof, true, kInf};
    }
    refuted_.insert(s);
    return {nullptr, true, kInf};
  }

  // Proof of `s` whose last rule is StarR.
  DerivationPtr solve_star_r(const DSequent& s, std::size_t budget, std::size_t level) {
    for (const auto& step : backward_logical(s)) {
      if (step.rule.kind != RuleKind::StarR) continue;
      Outcome scratch;
      if (auto proof = try_step(s, step, budget, level, scratch)) return proof;
    }
    return nullptr;
  }

  DerivationPtr schema(const DSequent& s, const OmegaFamily& fam, std::size_t budget, std::size_t level) {
    if (budget == 0) return nullptr;
    // Splice form: one more copy of the body is one more StarR premise.
    if (fam.suc.is(Op::Star) && (fam.left.empty() || fam.right.empty())) {
      Outcome child = solve(DSequent(fam.zone, {fam.body}, fam.suc.body()), budget - 1, level + 1);
      if (child.proof) {
        if (DerivationPtr base = solve_star_r(fam.instance(0), budget - 1, level + 1)) {
          auto cert = std::make_shared<SchemaCertificate>();
          cert->family = fam;
          cert->base = base;
          cert->context = make_node(Rule{RuleKind::StarRSplice, 1}, fam.parametric_next(fam.left.empty()), {child.proof});
          return make_schema_node(s, cert);
        }
      }
    }
    // Hole form: derive instance n+1 from an opaque instance n.
    for (bool peel_left : {true, false}) {
      SearchOptions sub_opts = opts_;
      sub_opts.node_limit = opts_.node_limit > stats_.nodes ? opts_.node_limit - stats_.nodes : 0;
      Engine sub(sub_opts, false, fam.parametric());
      Outcome ctx = sub.solve(fam.parametric_next(peel_left), budget - 1, 0);
      stats_.nodes += sub.stats().nodes;
      if (!ctx.proof) continue;
      Outcome base = solve(fam.instance(0), budget - 1, level + 1);
      if (!base.proof) return nullptr;
      auto cert = std::make_shared<SchemaCertificate>();
      cert->family = fam;
      cert->base = base.proof;
      cert->context = ctx.proof;
      return make_schema_node(s, cert);
    }
    return nullptr;
  }

  SearchOptions opts_;
  bool unbounded_;
  std::optional<DSequent> hole_;
  SearchStats stats_;
  std::unordered_map<DSequent, DerivationPtr, DSequentHash> proved_;
  std::unordered_set<DSequent, DSequentHash> refuted_;
  std::unordered_map<DSequent, std::size_t, DSequentHash> failed_budget_;
  std::unordered_map<DSequent, std::size_t, DSequentHash> on_stack_;
  std::unordered_map<DSequent, std::pair<DSequent, std::size_t>, DSequentHash> witness_;
};

}  // namespace

Verdict decide_ne_star_free(const DSequent& ds) {
  if (sequent_has_star(ds)) throw FragmentError("sequent contains a star: " + print_dsequent(ds));
  if (classify_dsequent(ds) != FragmentClass::NE)
    throw FragmentError("sequent is not in the NE fragment: " + print_dsequent(ds));
  Engine engine(SearchOptions{}, true);
  Outcome r = engine.solve(ds, kInf, 0);
  Verdict v;
  v.status = r.proof ? Status::Derivable : Status::Underivable;
  v.proof = r.proof;
  v.stats = engine.stats();
  return v;
}

Verdict prove_bounded(const DSequent& ds, const SearchOptions& opts) {
  const FragmentClass c = classify_dsequent(ds);
  if (c != FragmentClass::NE && c != FragmentClass::Monoidal)
    throw FragmentError("sequent is not in the monoidal fragment: " + print_dsequent(ds));
  Engine engine(opts, false);
  Outcome r = engine.solve(ds, opts.depth, 0);
  Verdict v;
  v.bounds = opts;
  v.stats = engine.stats();
  if (r.proof) {
    v.status = Status::Derivable;
    v.proof = r.proof;
  } else if (r.exact) {
    v.status = Status::Underivable;
    if (auto w = engine.witness(ds)) {
      v.witness = w->first;
      v.witness_instance = w->second;
    }
  }
  return v;
}

std::size_t omega_nesting(const DerivationPtr& d) {
  if (!d) return 0;
  std::size_t m = 0;
  for (const auto& c : d->children) m = std::max(m, omega_nesting(c));
  if (d->schema) m = std::max({m, omega_nesting(d->schema->base), omega_nesting(d->schema->context)});
  return m + (d->rule.kind == RuleKind::StarL ? 1 : 0);
}

namespace {

OrdVec max_ord(const OrdVec& a, const OrdVec& b) { return a < b ? b : a; }

OrdVec frontier_max(const DerivationPtr& d);

OrdVec omega_rank(const DerivationPtr& d) {
  OrdVec sup;
  if (d->schema) {
    const std::size_t a = omega_nesting(d->schema->context);
    sup = a >= 1 ? OrdVec({0, a}) : rank_upper_bound(d->schema->base);
  } else {
    for (const auto& c : d->children) sup = max_ord(sup, rank_upper_bound(c));
  }
  return ord_add(sup, OrdVec::finite(1));
}

OrdVec frontier_max(const DerivationPtr& d) {
  OrdVec m;
  for (const auto& c : d->children) {
    if (!c) continue;
    m = max_ord(m, c->rule.kind == RuleKind::StarL ? omega_rank(c) : frontier_max(c));
  }
  return m;
}

}  // namespace

OrdVec rank_upper_bound(const DerivationPtr& d) {
  if (!d) throw std::invalid_argument("empty derivation");
  if (d->rule.kind == RuleKind::StarL) return omega_rank(d);
  return ord_add(OrdVec::finite(1), frontier_max(d));
}

FinReach enumerate_fin(const DSequent& ds, std::size_t cap) {
  FinReach out;
  std::unordered_set<DSequent, DSequentHash> seen{ds};
  std::deque<DSequent> queue{ds};
  while (!queue.empty()) {
    if (seen.size() > cap) return out;
    DSequent s = std::move(queue.front());
    queue.pop_front();
    out.sequents.push_back(s);
    for (const auto& step : backward_dyadic(s))
      for (const auto& p : step.premises)
        if (!sequent_has_star(p) && seen.insert(p).second) queue.push_back(p);
  }
  out.exhausted = true;
  return out;
}

}  // namespace ial

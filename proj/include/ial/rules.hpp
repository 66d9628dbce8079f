// Rule schemas and per-instance validation for the flat calculus, the
// dyadic calculus and the basic calculus.

#ifndef IAL_RULES_HPP_
#define IAL_RULES_HPP_

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "ial/rewriting.hpp"
#include "ial/sequent.hpp"

namespace ial {

enum class RuleKind : std::uint8_t {
  // Flat calculus.
  Id,
  UnderL,
  UnderR,
  OverL,
  OverR,
  ProdL,
  ProdR,
  OneL,
  OneR,
  ZeroL,
  JoinL,
  JoinR1,
  JoinR2,
  MeetL1,
  MeetL2,
  MeetR,
  StarL,  // the omega-rule
  StarR,  // n = number of premises
  Cut,
  BangL,
  BangR,
  BangP1,
  BangP2,
  BangW,
  BangC,
  Hyp,
  // Dyadic calculus.
  BangLd,
  BangRd,
  Ad,
  Wd,
  BangLdInv,
  CutD1,
  CutD2,
  // Basic calculus.
  IdB,
  ProdRB,
  StarRB,       // n = number of copies
  UnderLB,
  UnderStarLB,  // n = number of consumed copies
  MeetL1B,
  MeetL2B,
  RewriteB,
  // Schema contexts.
  Hole,
  StarRSplice,  // n = number of own premises
};

struct Rule {
  RuleKind kind = RuleKind::Id;
  unsigned n = 0;

  friend bool operator==(const Rule&, const Rule&) = default;
};

// "StarR:3", "Ad", ... Parameterised kinds always print their parameter.
std::string rule_name(Rule r);
std::optional<Rule> parse_rule(std::string_view name);
bool rule_has_param(RuleKind k);

enum class System : std::uint8_t { Flat, Dyadic, Bsc };

std::string to_string(System s);

struct CheckContext {
  System system = System::Flat;
  bool allow_cut = false;
  // Number of explicit omega-instances checked beyond instance 0.
  std::size_t omega_bound = 5;
  std::vector<Sequent> hypotheses;
  const RewritingSystem* srs = nullptr;
  // Set while checking a schema context: block markers may occur opaquely.
  bool allow_block = false;
};

struct RuleInstance {
  Rule rule;
  DSequent conclusion;
  // For StarL: the first premises.size() instances of the family.
  std::vector<DSequent> premises;
};

// Empty on success, otherwise a diagnostic.
std::optional<std::string> instance_error(const RuleInstance& ri, const CheckContext& ctx);

inline bool validate_instance(const RuleInstance& ri, const CheckContext& ctx) {
  return !instance_error(ri, ctx).has_value();
}

// r, r1.r2 or r^* with r, r1, r2 variables.
bool is_basic_rhs(Formula f);

// Gamma, A^n, Delta => C for the star at `position` of the antecedent.
struct OmegaFamily {
  Zone zone;
  std::vector<Formula> left;
  Formula body;
  std::vector<Formula> right;
  Formula suc;

  DSequent conclusion() const;
  DSequent instance(std::size_t n) const;
  // Gamma, <A>^n, Delta => C with the block marker standing for A^n.
  DSequent parametric() const;
  // Instance n+1 written with the marker: A, <A>^n (left) or <A>^n, A.
  DSequent parametric_next(bool peel_left) const;

  friend bool operator==(const OmegaFamily&, const OmegaFamily&) = default;
};

std::optional<OmegaFamily> omega_family(const DSequent& s, std::size_t position);

// Generator n -> Gamma, A^n, Delta => C. Throws std::invalid_argument when
// the position does not hold a star formula.
std::function<DSequent(std::size_t)> omega_premises(const DSequent& s, std::size_t position);

struct BackwardStep {
  Rule rule;
  std::vector<DSequent> premises;
};

// Finitary logical rules shared by the flat and dyadic calculi; the zone is
// threaded unchanged into every premise.
std::vector<BackwardStep> backward_logical(const DSequent& s);

// All cut-free finitary flat rule instances concluding `s`, including
// hypothesis leaves. StarR splits use nonempty segments only.
std::vector<BackwardStep> backward_finitary(const Sequent& s, const std::vector<Sequent>& hypotheses);

// Admissible inversions at an antecedent position: both disjuncts for a join,
// the unfolded pair for a product, instances 0..star_instances for a star.
std::vector<DSequent> invert(const DSequent& s, std::size_t position, std::size_t star_instances = 4);

// Helpers shared by the enumerators.
std::vector<Formula> splice(const std::vector<Formula>& a, std::size_t from, std::size_t to,
                            const std::vector<Formula>& middle);
std::vector<Formula> concat(std::initializer_list<std::vector<Formula>> parts);

}  // namespace ial

#endif  // IAL_RULES_HPP_

#include <algorithm>
#include <random>

#include "doctest.h"
#include "ial/derivation.hpp"
#include "ial/rules.hpp"
#include "oracle.hpp"

using namespace ial;

namespace {

DSequent ds(const char* text) { return parse_dsequent(text); }

bool has_step(const std::vector<BackwardStep>& steps, RuleKind k, const std::vector<DSequent>& premises) {
  return std::any_of(steps.begin(), steps.end(),
                     [&](const BackwardStep& s) { return s.rule.kind == k && s.premises == premises; });
}

DerivationPtr id(const char* text) { return make_node(Rule{RuleKind::Id, 0}, ds(text)); }

// p^n => p^* by StarR with n identity premises.
DerivationPtr star_r_proof(std::size_t n) {
  std::vector<Formula> ant(n, Formula::var("p"));
  std::vector<DerivationPtr> kids;
  for (std::size_t i = 0; i < n; ++i) kids.push_back(id("p => p"));
  return make_node(Rule{RuleKind::StarR, static_cast<unsigned>(n)}, DSequent({}, ant, parse_formula("p^*")), kids);
}

}  // namespace

TEST_SUITE("calculus") {
  TEST_CASE("validate_instance on single nodes") {
    const CheckContext flat;
    CHECK(validate_instance({Rule{RuleKind::Id, 0}, ds("p => p"), {}}, flat));
    CHECK(validate_instance({Rule{RuleKind::ProdL, 0}, ds("g, p.q, d => c"), {ds("g, p, q, d => c")}}, flat));
    CHECK_FALSE(validate_instance({Rule{RuleKind::MeetR, 0}, ds("p => a & b"), {ds("p => a")}}, flat));
    CHECK(validate_instance({Rule{RuleKind::MeetR, 0}, ds("p => a & b"), {ds("p => a"), ds("p => b")}}, flat));
    CHECK_FALSE(validate_instance({Rule{RuleKind::Id, 0}, ds("p => q"), {}}, flat));
    CHECK(validate_instance({Rule{RuleKind::UnderL, 0}, ds("p, p\\q => q"), {ds("p => p"), ds("q => q")}}, flat));
    CHECK(validate_instance({Rule{RuleKind::StarR, 2}, ds("a, b => c^*"), {ds("a => c"), ds("b => c")}}, flat));
    CHECK(validate_instance({Rule{RuleKind::BangC, 0}, ds("!a, b => c"), {ds("!a, !a, b => c")}}, flat));
    CHECK_FALSE(validate_instance({Rule{RuleKind::BangC, 0}, ds("a, b => c"), {ds("a, a, b => c")}}, flat));
  }

  TEST_CASE("backward_finitary examples") {
    CHECK(has_step(backward_finitary(parse_sequent("p => p"), {}), RuleKind::Id, {}));
    CHECK(has_step(backward_finitary(parse_sequent("p, p\\q => q"), {}), RuleKind::UnderL,
                   {ds("p => p"), ds("q => q")}));
    auto star0 = backward_finitary(parse_sequent("=> p^*"), {});
    CHECK(std::any_of(star0.begin(), star0.end(),
                      [](const BackwardStep& s) { return s.rule == Rule{RuleKind::StarR, 0} && s.premises.empty(); }));
    std::vector<Sequent> hyps{parse_sequent("a, b => c")};
    CHECK(has_step(backward_finitary(parse_sequent("a, b => c"), hyps), RuleKind::Hyp, {}));
    CHECK_FALSE(has_step(backward_finitary(parse_sequent("b, a => c"), hyps), RuleKind::Hyp, {}));
  }

  TEST_CASE("every enumerated instance validates") {
    const std::vector<const char*> goals = {
        "p, p\\q, r => q . r",   "a/b, b, c => a . c",   "(a+b), c => (a.c) + (b.c)", "a & b, c => b . c",
        "1, a, 0 => b",          "p^*, p => p^*",        "!(a\\b), a => b",           "a, b => (a.b)^*",
        "!a, !b => !(a.b)",      "=> a\\a",              "a.b, c => a.(b.c)"};
    const CheckContext flat;
    for (const char* g : goals) {
      const Sequent s = parse_sequent(g);
      for (const auto& step : backward_finitary(s, {})) {
        RuleInstance ri{step.rule, DSequent(s), step.premises};
        CAPTURE(g);
        CAPTURE(rule_name(step.rule));
        CHECK(validate_instance(ri, flat));
      }
    }
  }

  TEST_CASE("backward_finitary misses no logical instance") {
    // The oracle enumerates every bang-free logical rule by brute force.
    std::mt19937 rng(4242);
    const std::vector<Formula> atoms = {Formula::var("p"), Formula::var("q"), Formula::one(), Formula::zero()};
    auto random_formula = [&](auto&& self, int depth) -> Formula {
      std::uniform_int_distribution<int> pick(0, depth == 0 ? 3 : 8);
      const int k = pick(rng);
      if (k < 4) return atoms[k];
      Formula a = self(self, depth - 1), b = self(self, depth - 1);
      switch (k) {
        case 4: return Formula::under(a, b);
        case 5: return Formula::over(a, b);
        case 6: return Formula::prod(a, b);
        case 7: return Formula::join(a, b);
        default: return Formula::meet(a, b);
      }
    };
    for (int trial = 0; trial < 400; ++trial) {
      std::vector<Formula> ant;
      const int len = std::uniform_int_distribution<int>(0, 3)(rng);
      for (int i = 0; i < len; ++i) ant.push_back(random_formula(random_formula, 2));
      const Sequent s{ant, random_formula(random_formula, 2)};
      const auto steps = backward_finitary(s, {});
      for (const auto& inst : oracle::NeFixpoint::instances(DSequent(s))) {
        const bool found =
            std::any_of(steps.begin(), steps.end(), [&](const BackwardStep& st) { return st.premises == inst; });
        CAPTURE(print_sequent(s));
        CHECK(found);
      }
    }
  }

  TEST_CASE("omega_premises") {
    auto gen = omega_premises(ds("p^* => p^*"), 0);
    CHECK(gen(0) == ds("=> p^*"));
    CHECK(gen(2) == ds("p, p => p^*"));
    CHECK(omega_premises(ds("a, q^*, b => c"), 1)(1) == ds("a, q, b => c"));
    CHECK_THROWS_AS(omega_premises(ds("a, q^*, b => c"), 0), std::invalid_argument);
  }

  TEST_CASE("check_derivation verdicts") {
    CheckContext flat;
    // Cut is rejected unless allowed.
    auto cut = make_node(Rule{RuleKind::Cut, 0}, ds("p => p"), {id("p => p"), id("p => p")});
    CHECK(check_derivation(cut, flat).verdict == CheckVerdict::Invalid);
    CheckContext with_cut;
    with_cut.allow_cut = true;
    CHECK(check_derivation(cut, with_cut).verdict == CheckVerdict::Valid);

    // p^* => p^* by the omega-rule with explicit instances is only valid up to the bound.
    flat.omega_bound = 5;
    std::vector<DerivationPtr> instances;
    for (std::size_t n = 0; n <= 5; ++n) instances.push_back(star_r_proof(n));
    auto omega = make_node(Rule{RuleKind::StarL, 0}, ds("p^* => p^*"), instances);
    CHECK(check_derivation(omega, flat).verdict == CheckVerdict::ValidUpToBound);

    // A wrong instance makes it invalid.
    instances[3] = star_r_proof(2);
    auto broken = make_node(Rule{RuleKind::StarL, 0}, ds("p^* => p^*"), instances);
    CHECK(check_derivation(broken, flat).verdict == CheckVerdict::Invalid);

    CHECK(exit_code(CheckVerdict::Valid) == 0);
    CHECK(exit_code(CheckVerdict::ValidUpToBound) == 1);
    CHECK(exit_code(CheckVerdict::Invalid) == 2);
  }

  TEST_CASE("derivations serialize and parse back") {
    auto d = make_node(Rule{RuleKind::UnderL, 0}, ds("p, p\\q => q"), {id("p => p"), id("q => q")});
    auto back = parse_derivation(serialize(d));
    CHECK(serialize(back) == serialize(d));
    CHECK(check_derivation(back, CheckContext{}).verdict == CheckVerdict::Valid);
  }

  TEST_CASE("invert") {
    auto joins = invert(ds("c, a + b => d"), 1);
    CHECK(joins == std::vector<DSequent>{ds("c, a => d"), ds("c, b => d")});
    CHECK(invert(ds("a.b => d"), 0) == std::vector<DSequent>{ds("a, b => d")});
    auto stars = invert(ds("p^* => q"), 0, 4);
    REQUIRE(stars.size() == 5);
    CHECK(stars[3] == ds("p, p, p => q"));
    CHECK_THROWS_AS(invert(ds("a\\b => d"), 0), std::invalid_argument);
  }
}

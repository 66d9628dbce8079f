#include <algorithm>
#include <random>

#include "doctest.h"
#include "ial/basic.hpp"
#include "ial/dyadic.hpp"
#include "ial/lower_bound.hpp"

using namespace ial;

namespace {

DSequent ds(const char* text) { return parse_dsequent(text); }

bool has_step(const std::vector<BackwardStep>& steps, RuleKind k, const std::vector<DSequent>& premises) {
  return std::any_of(steps.begin(), steps.end(),
                     [&](const BackwardStep& s) { return s.rule.kind == k && s.premises == premises; });
}

// Random NE dyadic sequents over a, b.
DSequent random_ne(std::mt19937& rng) {
  const std::vector<const char*> pool = {"a",     "b",   "a.b",   "a\\b",   "b/a",         "a+b", "a&b", "1",
                                         "b\\a", "(a.b)\\a", "!(a\\b)", "!((a.b)\\(b.a))", "!(b\\1)"};
  const std::vector<const char*> zone_pool = {"!(a\\b)", "!((b.a)\\a)", "!(b\\1)"};
  std::uniform_int_distribution<std::size_t> any(0, pool.size() - 1);
  std::vector<Formula> zone, ant;
  for (const char* z : zone_pool)
    if (rng() % 3 == 0) zone.push_back(parse_formula(z));
  const std::size_t len = rng() % 4;
  for (std::size_t i = 0; i < len; ++i) ant.push_back(parse_formula(pool[any(rng)]));
  Formula suc = parse_formula(pool[any(rng) % 9]);
  return DSequent(zone, ant, suc);
}

}  // namespace

TEST_SUITE("dyadic") {
  TEST_CASE("to_dyadic") {
    CHECK(to_dyadic(parse_sequent("p, !(a\\a), q => p.q")) == ds("{} ; p, !(a\\a), q => p.q"));
    CHECK(to_dyadic(parse_sequent("=> 1")) == ds("=> 1"));
    CHECK_THROWS_AS(to_dyadic(parse_sequent("!(p^*\\p) => p")), FragmentError);
  }

  TEST_CASE("backward_dyadic examples") {
    CHECK(has_step(backward_dyadic(ds("{!(b\\c)} ; g, b, d => e")), RuleKind::Ad, {ds("{!(b\\c)} ; g, c, d => e")}));
    CHECK(has_step(backward_dyadic(ds("{} ; g, !(a\\b), d => e")), RuleKind::BangLd, {ds("{!(a\\b)} ; g, d => e")}));
    CHECK(has_step(backward_dyadic(ds("{!(a\\b)} ; => !(a\\b)")), RuleKind::BangRd, {ds("{!(a\\b)} ; => a\\b")}));
    // An empty b-chain inserts the c-chain anywhere.
    auto ins = backward_dyadic(ds("{!(1\\c)} ; a => e"));
    CHECK(has_step(ins, RuleKind::Ad, {ds("{!(1\\c)} ; c, a => e")}));
    CHECK(has_step(ins, RuleKind::Ad, {ds("{!(1\\c)} ; a, c => e")}));
  }

  TEST_CASE("weaken_zone and absorb") {
    CHECK(weaken_zone(ds("p => p"), {parse_formula("!(a\\a)")}) == ds("{!(a\\a)} ; p => p"));
    auto once = weaken_zone(ds("p => p"), {parse_formula("!(a\\a)")});
    CHECK(weaken_zone(once, {parse_formula("!(a\\a)")}) == once);
    CHECK(weaken_zone(once, {}) == once);
    CHECK_THROWS(weaken_zone(once, {parse_formula("!(p^*)")}));

    CHECK(absorb(ds("g, !(a\\b), d => c"), 1) == ds("{!(a\\b)} ; g, d => c"));
    CHECK(absorb(ds("{!(a\\b)} ; !(a\\b), d => c"), 0) == ds("{!(a\\b)} ; d => c"));
    CHECK_THROWS(absorb(ds("g, d => c"), 0));
    CHECK(absorb_all(ds("!(a\\b), g, !(b\\a) => c")) == ds("{!(a\\b), !(b\\a)} ; g => c"));
  }

  TEST_CASE("zone relations per rule") {
    std::mt19937 rng(99);
    for (int i = 0; i < 2000; ++i) {
      const DSequent s = random_ne(rng);
      for (const auto& step : backward_dyadic(s)) {
        for (const auto& p : step.premises) {
          CAPTURE(print_dsequent(s));
          CAPTURE(rule_name(step.rule));
          if (step.rule.kind == RuleKind::Ad) {
            CHECK(zone_subset(p.zone, s.zone));
          } else {
            CHECK(zone_subset(s.zone, p.zone));
          }
          if (step.rule.kind != RuleKind::BangLd) CHECK(p.zone == s.zone);
        }
      }
    }
  }

  TEST_CASE("c-parameter never grows backward in the NE fragment") {
    std::mt19937 rng(123);
    for (int i = 0; i < 2000; ++i) {
      const DSequent s = random_ne(rng);
      REQUIRE(classify_dsequent(s) == FragmentClass::NE);
      for (const auto& step : backward_dyadic(s))
        for (const auto& p : step.premises) CHECK(c_parameter(p) <= c_parameter(s));
    }
  }

  TEST_CASE("backward_bsc examples") {
    RewritingSystem srs = parse_srs("x y -> z\n");
    CHECK(has_step(backward_bsc(parse_sequent("lt, ok => lt.ok"), srs), RuleKind::ProdRB, {}));
    CHECK(has_step(backward_bsc(parse_sequent("g, r, r\\b, d => c"), srs), RuleKind::UnderLB,
                   {ds("g, b, d => c")}));
    CHECK(has_step(backward_bsc(parse_sequent("g, x, y, d => c"), srs), RuleKind::RewriteB, {ds("g, z, d => c")}));
    CHECK(has_step(backward_bsc(parse_sequent("r, r, r^*\\b => c"), srs), RuleKind::UnderStarLB,
                   {ds("b => c")}));
    CHECK(has_step(backward_bsc(parse_sequent("r, r, r^*\\b => c"), srs), RuleKind::UnderStarLB,
                   {ds("r, b => c")}));
    CHECK(has_step(backward_bsc(parse_sequent("s, (r\\a) & (s\\b) => c"), srs), RuleKind::MeetL2B,
                   {ds("b => c")}));
    CHECK(is_bsc_sequent(parse_sequent("a, b => a.b")));
    CHECK_FALSE(is_bsc_sequent(parse_sequent("a, b => a + b")));
  }

  TEST_CASE("basic rules are compositions of flat rules") {
    // The meet rule is MeetL followed by UnderL against r => r; the division
    // rules are UnderL against r => r or r^n => r^*.
    const auto fs = gen_formulas(1, "m0q0", "m1q0");
    const Sequent goal = main_sequent(2, 0, {1}, fs);
    const RewritingSystem srs;
    const CheckContext flat;
    std::size_t replayed = 0;
    std::vector<Sequent> frontier{goal, main_sequent(3, 1, {}, fs), parse_sequent("r, r, r^*\\b, (r\\a) & (s\\b) => c")};
    for (const Sequent& s : frontier) {
      for (const auto& step : backward_bsc(s, srs)) {
        const DSequent c(s);
        if (step.rule.kind == RuleKind::MeetL1B || step.rule.kind == RuleKind::MeetL2B) {
          const bool first = step.rule.kind == RuleKind::MeetL1B;
          for (std::size_t i = 1; i < c.ant.size(); ++i) {
            Formula f = c.ant[i];
            if (!f.is(Op::Meet)) continue;
            Formula side = first ? f.left() : f.right();
            if (!side.is(Op::Under) || c.ant[i - 1] != side.left()) continue;
            DSequent mid(c.zone, splice(c.ant, i, i + 1, {side}), c.suc);
            if (splice(c.ant, i - 1, i + 1, {side.right()}) != step.premises[0].ant) continue;
            CHECK(validate_instance({Rule{first ? RuleKind::MeetL1 : RuleKind::MeetL2, 0}, c, {mid}}, flat));
            DSequent minor({}, {side.left()}, side.left());
            CHECK(validate_instance({Rule{RuleKind::UnderL, 0}, mid, {minor, step.premises[0]}}, flat));
            CHECK(validate_instance({Rule{RuleKind::Id, 0}, minor, {}}, flat));
            ++replayed;
          }
        }
        if (step.rule.kind == RuleKind::UnderStarLB) {
          const unsigned n = step.rule.n;
          for (std::size_t i = n; i < c.ant.size(); ++i) {
            Formula f = c.ant[i];
            if (!f.is(Op::Under) || !f.left().is(Op::Star)) continue;
            if (splice(c.ant, i - n, i + 1, {f.right()}) != step.premises[0].ant) continue;
            DSequent minor({}, std::vector<Formula>(n, f.left().body()), f.left());
            CHECK(validate_instance({Rule{RuleKind::UnderL, 0}, c, {minor, step.premises[0]}}, flat));
            ++replayed;
          }
        }
      }
    }
    CHECK(replayed >= 3);
  }
}

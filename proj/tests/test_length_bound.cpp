#include <random>

#include "doctest.h"
#include "ial/dyadic.hpp"
#include "ial/flat_search.hpp"
#include "ial/search.hpp"
#include "length_bound.hpp"

using namespace ial;

namespace {

bool refutes(const char* text) {
  const DSequent s = parse_dsequent(text);
  return detail::length_refutes(s.zone, s.ant, s.suc);
}

bool any_node_refuted(const DerivationPtr& d) {
  if (detail::length_refutes(d->conclusion.zone, d->conclusion.ant, d->conclusion.suc)) return true;
  for (const auto& c : d->children)
    if (any_node_refuted(c)) return true;
  return false;
}

}  // namespace

TEST_SUITE("length bound") {
  TEST_CASE("examples") {
    CHECK(refutes("{!(b \\ c.b)} ; b, b => c"));
    CHECK(refutes("!(b \\ c.b), b, b => c"));
    CHECK(refutes("{} ; a, b => a"));
    CHECK(refutes("{!(a \\ c.c)} ; a + b, a => c"));
    // A shrinking rewrite forces weight 0 on a.
    CHECK_FALSE(refutes("{!((a.a) \\ a)} ; a, a => a"));
    CHECK_FALSE(refutes("{} ; a => a + b"));
    // Only variables, 1, products and joins are weighed.
    CHECK_FALSE(refutes("{} ; a \\ b, a, a => b"));
    CHECK_FALSE(refutes("{!(a \\ b)} ; a, b => b & a"));
    CHECK_FALSE(refutes("!a, a, a => a"));
  }

  TEST_CASE("never refutes a goal derived by forward rewriting") {
    std::mt19937 rng(31337);
    const std::vector<std::string> names = {"a", "b", "c"};
    auto pick = [&] { return names[rng() % names.size()]; };
    std::size_t proved = 0;
    for (int trial = 0; trial < 300; ++trial) {
      std::vector<MonoidalShape> rules;
      std::vector<Formula> zone;
      const std::size_t count = 1 + rng() % 3;
      for (std::size_t r = 0; r < count; ++r) {
        MonoidalShape shape;
        shape.from.resize(1 + rng() % 2);
        shape.to.resize(rng() % 3);
        for (auto& x : shape.from) x = pick();
        for (auto& x : shape.to) x = pick();
        std::vector<Formula> from, to;
        for (const auto& x : shape.from) from.push_back(Formula::var(x));
        for (const auto& x : shape.to) to.push_back(Formula::var(x));
        zone.push_back(Formula::bang(Formula::under(Formula::product(from), Formula::product(to))));
        rules.push_back(shape);
      }
      std::vector<std::string> word(1 + rng() % 3);
      for (auto& x : word) x = pick();
      std::vector<Formula> ant;
      for (const auto& x : word) ant.push_back(Formula::var(x));
      // Rewrite forward a few times; the start word then derives the result.
      for (int step = 0; step < 4; ++step) {
        const auto& r = rules[rng() % rules.size()];
        for (std::size_t i = 0; i + r.from.size() <= word.size(); ++i) {
          if (!std::equal(r.from.begin(), r.from.end(), word.begin() + static_cast<std::ptrdiff_t>(i))) continue;
          word.erase(word.begin() + static_cast<std::ptrdiff_t>(i),
                     word.begin() + static_cast<std::ptrdiff_t>(i + r.from.size()));
          word.insert(word.begin() + static_cast<std::ptrdiff_t>(i), r.to.begin(), r.to.end());
          break;
        }
      }
      std::vector<Formula> out;
      for (const auto& x : word) out.push_back(Formula::var(x));
      const DSequent goal(zone, ant, Formula::product(out));
      CAPTURE(print_dsequent(goal));
      CHECK_FALSE(detail::length_refutes(goal.zone, goal.ant, goal.suc));
      const Verdict v = prove_bounded(goal);
      CHECK(v.status != Status::Underivable);
      if (v.status == Status::Derivable) {
        ++proved;
        CHECK_FALSE(any_node_refuted(v.proof));
      }
    }
    CHECK(proved > 100);
  }
}

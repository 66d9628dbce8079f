#include <random>

#include "doctest.h"
#include "ial/ordinal.hpp"
#include "oracle.hpp"

using namespace ial;

namespace {

OrdVec o(std::vector<std::uint64_t> c) { return OrdVec(std::move(c)); }

}  // namespace

TEST_SUITE("ordinals") {
  TEST_CASE("compare") {
    CHECK(ord_compare(o({1}), o({0, 1})) == std::strong_ordering::less);
    CHECK(ord_compare(o({5, 2}), o({0, 3})) == std::strong_ordering::less);
    CHECK(ord_compare(o({4, 4}), o({4, 4})) == std::strong_ordering::equal);
    CHECK(o({1, 0, 0}) == o({1}));
    CHECK(o({0, 0}).is_zero());
  }

  TEST_CASE("natural sum and shift") {
    CHECK(ord_add(o({3}), o({3})) == o({6}));
    CHECK(ord_add(o({0, 1}), o({2})) == o({2, 1}));
    CHECK(ord_add(o({7, 1}), OrdVec()) == o({7, 1}));
    CHECK(ord_shift(o({3})) == o({0, 3}));
    CHECK(ord_shift(OrdVec()) == OrdVec());
    CHECK(ord_shift(o({1, 2})) == o({0, 1, 2}));
  }

  TEST_CASE("prime coding") {
    CHECK(rho(o({2, 1})) == 12u);
    CHECK(rho(OrdVec()) == 1u);
    CHECK(rho_inv(45) == o({0, 2, 1}));
    CHECK_THROWS_AS(rho_inv(0), OrdinalError);
    CHECK_FALSE(rho(o({64})).has_value());
    for (std::uint64_t n = 1; n <= 2000; ++n) {
      CHECK(rho(rho_inv(n)) == n);
      CHECK(rho_inv(n).coeffs() == oracle::prime_exponents(n));
    }
  }

  TEST_CASE("base, step and lift") {
    auto bs = base_step(o({5, 2}));
    CHECK(bs.base == o({0, 2}));
    CHECK(bs.step == 5);
    CHECK(base_step(o({7})).base.is_zero());
    CHECK(base_step(o({0, 1})).step == 0);
    CHECK(lift(o({1, 1}), 2) == o({3, 1}));
    CHECK(lift(o({0, 1}), 5) == o({1, 1}));
    CHECK(lift(o({2}), 1) == o({3}));
    CHECK_THROWS_AS(lift(o({2}), 0), OrdinalError);
  }

  TEST_CASE("text forms") {
    CHECK(to_string(o({5, 2})) == "(5,2)");
    CHECK(to_string(OrdVec()) == "()");
    CHECK(parse_ordvec("(5,2)") == o({5, 2}));
    CHECK(parse_ordvec("()") == OrdVec());
    CHECK(nu_string(o({4, 1, 3})) == "w^2*3 + w*1 + 4");
    CHECK(nu_string(OrdVec()) == "0");
    CHECK_THROWS(parse_ordvec("(1,x)"));
  }

  TEST_CASE("mu") {
    CHECK(mu(parse_formula("p")).is_zero());
    CHECK(mu(parse_formula("p^*")) == o({3}));
    CHECK(mu(parse_formula("(p^*)^*")) == o({3, 3}));
    CHECK(mu(parse_formula("p^* \\ q^*")) == o({6}));
    CHECK(mu(parse_formula("!(a\\b)")).is_zero());
    CHECK_THROWS_AS(mu(parse_formula("!(p^*)")), OrdinalError);
    CHECK(mu_sequent(parse_dsequent("{!(a\\b)} ; p^* => p^*")) == o({6}));
    CHECK(mu_sequent(parse_dsequent("(p^*)^* => (p^*)^*")) == o({6, 6}));
  }

  TEST_CASE("compare agrees with Cantor normal forms") {
    std::mt19937 rng(5);
    for (int i = 0; i < 1000; ++i) {
      auto rand_vec = [&] {
        std::vector<std::uint64_t> c(rng() % 4);
        for (auto& x : c) x = rng() % 4;
        return OrdVec(c);
      };
      OrdVec a = rand_vec(), b = rand_vec();
      const auto ord = ord_compare(a, b);
      const int expect = oracle::compare_cantor_strings(nu_string(a), nu_string(b));
      CHECK((ord < 0) == (expect < 0));
      CHECK((ord == 0) == (expect == 0));
      CHECK(ord_add(base_step(a).base, OrdVec::finite(base_step(a).step)) == a);
      CHECK(ord_add(a, b) == ord_add(b, a));
    }
  }
}

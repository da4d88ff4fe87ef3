#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <vector>

#include "mzv/composition.hpp"
#include "mzv/identities.hpp"

using mzv::Composition;

TEST_CASE("composition enumerators") {
  CHECK(mzv::compositions_by_weight(3) ==
        std::vector<Composition>{{1}, {1, 1}, {2}, {1, 1, 1}, {1, 2}, {2, 1}, {3}});
  CHECK(mzv::compositions_by_weight(0).empty());
  CHECK(mzv::compositions_by_weight(6).size() == 63);  // sum of 2^(w-1)

  CHECK(mzv::compositions_up_to(2, 2) ==
        std::vector<Composition>{{1}, {1, 1}, {1, 2}, {2}, {2, 1}, {2, 2}});
  CHECK(mzv::compositions_up_to(5, 3).size() == 3 + 9 + 27 + 81 + 243);
  CHECK(mzv::compositions_up_to(0, 3).empty());
}

TEST_CASE("suite bookkeeping") {
  mzv::SuiteResult r;
  r.suite = "demo";
  r.record("a", true, "");
  r.record("b", false, "lhs=1 rhs=2");
  r.record("c", true, "");
  CHECK(r.cases == 3);
  CHECK(r.failures == 1);
  REQUIRE(r.counterexamples.size() == 1);
  CHECK(r.counterexamples[0].key == "b");
  CHECK(r.counterexamples[0].detail == "lhs=1 rhs=2");
}

TEST_CASE("stuffle suite is clean") {
  const mzv::SuiteResult r = mzv::run_stuffle_suite(5, 8);
  // 49 ordered pairs with weight sum <= 5, each checked at N = 0..8.
  CHECK(r.cases == 49 * 9);
  CHECK(r.failures == 0);
  CHECK(r.counterexamples.empty());
}

TEST_CASE("star suite is clean") {
  const mzv::SuiteResult r = mzv::run_star_suite(3, 3, 10);
  CHECK(r.cases == 39 * 11);
  CHECK(r.failures == 0);
}

TEST_CASE("reduction suite is clean") {
  const mzv::SuiteResult r = mzv::run_reduction_suite(3, 3, 10);
  CHECK(r.cases == 39 * 10);
  CHECK(r.failures == 0);
}

TEST_CASE("binomial suite is clean") {
  const mzv::SuiteResult r = mzv::run_binomial_suite(12, 4);
  CHECK(r.cases == 12 * 5);
  CHECK(r.failures == 0);
}

TEST_CASE("xi suite is clean at loose tolerance") {
  mzv::NumericConfig cfg;
  cfg.tol = 1e-4;
  const mzv::SuiteResult r = mzv::run_xi_suite(4, cfg);
  // 9 star cases + 15 series/stuffle + 8 integral + 4*4 truncation cases.
  CHECK(r.cases == 9 + 15 + 8 + 16);
  CHECK(r.failures == 0);
}

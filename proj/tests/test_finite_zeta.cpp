#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <stdexcept>
#include <vector>

#include "mzv/composition.hpp"
#include "mzv/finite_zeta.hpp"
#include "mzv/identities.hpp"
#include "mzv/rational.hpp"
#include "oracles.hpp"

using mzv::BigRational;
using mzv::Composition;

TEST_CASE("pinned values") {
  CHECK(mzv::zeta_finite(3, Composition{1}) == BigRational(11, 6));
  CHECK(mzv::zeta_finite(2, Composition{1, 1}) == BigRational(1, 2));
  CHECK(mzv::zeta_star_finite(2, Composition{1, 1}) == BigRational(7, 4));
  CHECK(mzv::zeta_star_finite(2, Composition{1}) == BigRational(3, 2));
  CHECK(mzv::zeta_finite(3, Composition{2}) == BigRational(49, 36));
  CHECK(mzv::zeta_finite(3, Composition{2}) == BigRational(5, 4) + BigRational(1, 9));
}

TEST_CASE("empty tuple and degenerate upper limits") {
  CHECK(mzv::zeta_finite(0, Composition{}) == BigRational(1));
  CHECK(mzv::zeta_finite(5, Composition{}) == BigRational(1));
  CHECK(mzv::zeta_star_finite(0, Composition{}) == BigRational(1));
  // Strict variant vanishes when depth exceeds the upper limit.
  CHECK(mzv::zeta_finite(2, Composition{1, 1, 1}) == BigRational());
  CHECK(mzv::zeta_finite(0, Composition{3}) == BigRational());
  // Star variant vanishes only at upper == 0.
  CHECK(mzv::zeta_star_finite(0, Composition{1, 1, 1}) == BigRational());
  CHECK(mzv::zeta_star_finite(1, Composition{1, 1, 1}) == BigRational(1));
  CHECK(mzv::zeta_star_finite(2, Composition{1, 1, 1}) == BigRational(1) + BigRational(7, 8));
}

TEST_CASE("matches naive enumeration") {
  for (const Composition& c : mzv::compositions_up_to(3, 3)) {
    for (std::int64_t N = 0; N <= 8; ++N) {
      CHECK(mzv::zeta_finite(N, c) == oracle::naive_zeta(N, c, false));
      CHECK(mzv::zeta_star_finite(N, c) == oracle::naive_zeta(N, c, true));
    }
  }
}

TEST_CASE("profiles agree with pointwise evaluation") {
  for (const Composition& c : {Composition{}, Composition{2}, Composition{1, 1},
                               Composition{2, 1, 3}}) {
    const auto p = mzv::zeta_finite_profile(12, c);
    const auto ps = mzv::zeta_star_finite_profile(12, c);
    REQUIRE(p.size() == 13);
    REQUIRE(ps.size() == 13);
    for (std::int64_t m = 0; m <= 12; ++m) {
      CHECK(p[static_cast<std::size_t>(m)] == mzv::zeta_finite(m, c));
      CHECK(ps[static_cast<std::size_t>(m)] == mzv::zeta_star_finite(m, c));
    }
  }
}

TEST_CASE("star_to_ordinary merge patterns") {
  CHECK(mzv::star_to_ordinary(Composition{1, 1, 1}) ==
        std::vector<Composition>{{3}, {1, 2}, {2, 1}, {1, 1, 1}});
  CHECK(mzv::star_to_ordinary(Composition{2, 1}) == std::vector<Composition>{{3}, {2, 1}});
  CHECK(mzv::star_to_ordinary(Composition{4}) == std::vector<Composition>{{4}});
  CHECK(mzv::star_to_ordinary(Composition{2, 1, 3}) ==
        std::vector<Composition>{{6}, {2, 4}, {3, 3}, {2, 1, 3}});
  CHECK_THROWS_AS(mzv::star_to_ordinary(Composition{}), std::invalid_argument);

  // The expansion sums to the star value, exactly.
  for (const Composition& c : mzv::compositions_up_to(4, 3)) {
    BigRational sum;
    for (const Composition& f : mzv::star_to_ordinary(c)) sum += mzv::zeta_finite(9, f);
    CHECK(sum == mzv::zeta_star_finite(9, c));
  }
}

TEST_CASE("upper-limit reduction") {
  const mzv::UpperReduction red = mzv::reduce_upper(2, Composition{1, 1});
  CHECK(red.upper == 2);
  CHECK(red.kept == Composition{1, 1});
  CHECK(red.rest == Composition{1});
  CHECK(red.exponent == 1);
  CHECK(mzv::check_upper_reduction(red));
  // The recursion instance behind it: 1/2 = 0 + (1/2) * 1.
  CHECK(mzv::zeta_finite(2, Composition{1, 1}) ==
        mzv::zeta_finite(1, Composition{1, 1}) +
            BigRational(1, 2) * mzv::zeta_finite(1, Composition{1}));
  CHECK(mzv::zeta_finite(1, Composition{1, 1}) == BigRational());

  CHECK_THROWS_AS(mzv::reduce_upper(0, Composition{2}), std::invalid_argument);
  CHECK_THROWS_AS(mzv::reduce_upper(3, Composition{}), std::invalid_argument);

  for (const Composition& c : mzv::compositions_up_to(3, 3)) {
    for (std::int64_t N = 1; N <= 12; ++N) {
      CHECK(mzv::check_upper_reduction(mzv::reduce_upper(N, c)));
    }
  }
}

TEST_CASE("alternating binomial sum") {
  CHECK(mzv::alternating_binomial_sum(2, 1) == BigRational(3, 2));
  CHECK(mzv::alternating_binomial_sum(3, 0) == BigRational(1));
  CHECK(mzv::alternating_binomial_sum(1, 4) == BigRational(1));
  CHECK(mzv::alternating_binomial_sum(2, 0) == BigRational(1));
  for (int r = 0; r <= 4; ++r) {
    const Composition ones{std::vector<int>(static_cast<std::size_t>(r), 1)};
    for (std::int64_t n = 1; n <= 12; ++n) {
      CHECK(mzv::alternating_binomial_sum(n, r) == mzv::zeta_star_finite(n, ones));
    }
  }
}

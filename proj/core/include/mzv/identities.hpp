#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "mzv/composition.hpp"
#include "mzv/numeric.hpp"

namespace mzv {

// Exhaustive identity suites over bounded composition ranges.  Shared by the
// CLI `verify` command and the acceptance harness; every case is checked in
// exact rational arithmetic unless the suite is inherently numeric.

struct SuiteCase {
  std::string key;     // deterministic case label, e.g. "stuffle k=2,1 h=3 N=14"
  bool ok = false;
  std::string detail;  // exact values on failure, empty on success
};

struct SuiteResult {
  std::string suite;
  std::int64_t cases = 0;
  std::int64_t failures = 0;
  std::vector<SuiteCase> counterexamples;  // failed cases only
  void record(const std::string& key, bool ok, const std::string& detail);
};

// zeta_N(k) * zeta_N(h) = sum of mult * zeta_N(f) for every pair with
// weight(k) + weight(h) <= max_weight and every N in {0,...,max_upper}.
SuiteResult run_stuffle_suite(int max_weight, std::int64_t max_upper);

// zeta*_N(c) equals its comma-deletion expansion for every composition with
// depth <= max_depth and parts <= max_part, every N <= max_upper.
SuiteResult run_star_suite(int max_depth, int max_part, std::int64_t max_upper);

// zeta_N(c) = zeta_{N-1}(c) + N^{-k1} zeta_{N-1}(tail) over the same range.
SuiteResult run_reduction_suite(int max_depth, int max_part, std::int64_t max_upper);

// alternating_binomial_sum(n, r) = zeta*_n({1}^r) for n <= max_n, r <= max_r.
SuiteResult run_binomial_suite(std::int64_t max_n, int max_r);

// Numeric cross-route agreement for xi (all three routes plus the depth-one
// closed star form) over small fixed ranges, together with the exact
// finite-truncation identity through upper limit max_upper.
SuiteResult run_xi_suite(std::int64_t max_upper, const NumericConfig& cfg);

// All compositions with given bounds, lexicographic; depth 1..max_depth.
std::vector<Composition> compositions_up_to(int max_depth, int max_part);
// All nonempty compositions of every weight w <= max_weight, lexicographic
// within each weight, ascending weight.
std::vector<Composition> compositions_by_weight(int max_weight);

}  // namespace mzv

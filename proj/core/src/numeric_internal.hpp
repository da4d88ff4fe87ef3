#pragma once

// Shared internals of the numeric evaluators.  Tail-bound derivations live
// at the definitions in numeric.cpp; xi.cpp reuses the kernels and the
// term-count solver for the series route.

#include <cstdint>
#include <functional>

#include "mzv/composition.hpp"

namespace mzv::detail {

constexpr double kEps = 2.3e-16;        // one ulp of 1.0, rounded up
constexpr std::int64_t kBlock = 65536;  // accumulator flush interval

double gmax_log_over_sqrt(int p);
double fp_slack(double terms, int p, double mag, bool zpow);
double zeta_tail_bound(double N, int k1, int r);
double xi_series_tail_bound(double N, int k1, int p);
double polylog_tail_bound(double M, double z, int k1, int r);
std::int64_t solve_terms(double target, std::int64_t max_terms,
                         const std::function<double(double)>& bound);
double xi_chain_sum(const Composition& c, std::int64_t n, std::int64_t terms);

}  // namespace mzv::detail

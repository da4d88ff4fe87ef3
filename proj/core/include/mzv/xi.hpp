#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "mzv/composition.hpp"
#include "mzv/numeric.hpp"
#include "mzv/rational.hpp"
#include "mzv/stuffle.hpp"

namespace mzv {

// xi_{k1,...,kr}(n) = 1/Gamma(n) * integral_0^inf t^{n-1}/(e^t - 1)
//                     * Li_{k1,...,kr}(1 - e^{-t}) dt
// for an index tuple with depth >= 1 and integer n >= 1.  Three independent
// evaluation routes are provided; cross_check establishes that they agree
// within their reported bounds.

// Route 1: adaptive quadrature of the integrand on [0, t_cut] plus a bound on
// the remaining tail, using Li_c(1-e^{-t}) <= zeta(c) for k1 >= 2 and
// Li_c(1-e^{-t}) <= t^r/r! for k1 == 1.  The k1 == 1, depth > 1 case is
// served best-effort: the cutoff is capped so the near-1 polylog series stays
// affordable and the larger achieved bound is reported honestly.
EvalResult xi_integral(const Composition& c, std::int64_t n, const NumericConfig& cfg = {});

// Route 2: the double-series form
//   xi_c(n) = sum_{n1 >= 1} zetastar_{n1}({1}^{n-1}) zeta_{n1-1}(k2,...,kr)
//             / n1^{k1+1},
// summed directly in double precision with a rigorous tail bound.
EvalResult xi_series(const Composition& c, std::int64_t n, const NumericConfig& cfg = {});

// Route 3: the closed form as an integer combination of infinite multiple
// zeta values, from stuffle products of the merge patterns of {1}^{n-1} with
// (k2,...,kr).  Every summand is admissible (first entry >= k1+1) and is
// evaluated by zeta_infinite with tolerance tol / (term count with
// multiplicity); summands are accumulated in lexicographic term order.
EvalResult xi_stuffle_route(const Composition& c, std::int64_t n, const NumericConfig& cfg = {});

// The integer combination behind route 3.  Each term (a, f1, ..., fj) stands
// for one infinite zeta summand.  For n == 1 this is the single tuple
// (k1+1, k2, ..., kr).
StuffleExpansion xi_expansion_terms(const Composition& c, std::int64_t n);

// Exact partial sum of route 2 through n1 = upper.  Equal, as an exact
// rational, to the route-3 combination with every summand truncated at the
// same upper limit; check_xi_truncation verifies precisely that.
BigRational xi_series_partial_exact(const Composition& c, std::int64_t n, std::int64_t upper);

struct XiTruncationCheck {
  bool ok = false;
  BigRational series_side;     // xi_series_partial_exact
  BigRational expansion_side;  // sum of mult * zeta_finite(upper, term)
};
XiTruncationCheck check_xi_truncation(const Composition& c, std::int64_t n, std::int64_t upper);

// Evaluates every applicable route plus, when depth == 1, the closed star
// form zeta*(k1+1, {1}^{n-1}); checks pairwise agreement of all values
// within the sum of the reported bounds.
struct RouteResult {
  std::string route;
  EvalResult result;
};
struct XiCrossCheck {
  std::vector<RouteResult> routes;
  bool consistent = false;
  double max_gap = 0.0;      // largest observed pairwise |vi - vj|
  double max_allowed = 0.0;  // bound sum for the pair realising max_gap
};
XiCrossCheck cross_check(const Composition& c, std::int64_t n, const NumericConfig& cfg = {});

}  // namespace mzv

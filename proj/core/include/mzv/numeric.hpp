#pragma once

#include <cstdint>

#include "mzv/composition.hpp"

namespace mzv {

// A double-precision value together with a rigorous bound on the total
// truncation error.  Rounding error of the summation itself is controlled by
// blockwise accumulation and is folded into the bound.
struct EvalResult {
  double value = 0.0;
  double error_bound = 0.0;
};

struct NumericConfig {
  double tol = 1e-6;                       // requested total error bound
  std::int64_t max_terms = 2'000'000'000;  // hard cap on series terms
  int quad_max_depth = 48;                 // adaptive quadrature recursion cap
  double t_cut = 0.0;                      // integral cutoff; 0 = derive from tol
};

// Throws std::invalid_argument when tol < 1e-13 (below what double-precision
// accumulation can honour) or when tol/max_terms are not positive.
void validate_config(const NumericConfig& cfg);

// Multiple polylogarithm Li_{k1,...,kr}(z) = sum over n1 > ... > nr >= 1 of
// z^{n1} / (n1^k1 ... nr^kr), for 0 <= z < 1 and nonempty index.  Depth one
// with k1 == 1 uses -log(1-z) directly.  The reported error_bound covers the
// series tail; it is <= tol unless max_terms was hit, in which case it is the
// bound actually achieved.
EvalResult polylog(const Composition& c, double z, const NumericConfig& cfg = {});

// Infinite multiple zeta value; requires an admissible index (k1 >= 2).
EvalResult zeta_infinite(const Composition& c, const NumericConfig& cfg = {});

// Infinite star value via the expansion into ordinary values; each of the
// 2^(depth-1) summands is evaluated to tol / 2^(depth-1).
EvalResult zeta_star_infinite(const Composition& c, const NumericConfig& cfg = {});

inline EvalResult polylog(const Composition& c, double z, double tol) {
  NumericConfig cfg; cfg.tol = tol; return polylog(c, z, cfg);
}
inline EvalResult zeta_infinite(const Composition& c, double tol) {
  NumericConfig cfg; cfg.tol = tol; return zeta_infinite(c, cfg);
}
inline EvalResult zeta_star_infinite(const Composition& c, double tol) {
  NumericConfig cfg; cfg.tol = tol; return zeta_star_infinite(c, cfg);
}

}  // namespace mzv

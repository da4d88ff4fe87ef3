#pragma once

#include <cstdint>
#include <vector>

#include "mzv/composition.hpp"
#include "mzv/rational.hpp"

namespace mzv {

// Exact truncated multiple zeta value
//   zeta_N(k1,...,kr) = sum_{N >= n1 > n2 > ... > nr >= 1} 1/(n1^k1 ... nr^kr)
// and its star variant with ">=" between successive summation indices.
// Both are 1 for the empty tuple and 0 when depth > N (strict case) or when
// N == 0 and depth >= 1 (star case).
BigRational zeta_finite(std::int64_t upper, const Composition& c);
BigRational zeta_star_finite(std::int64_t upper, const Composition& c);

// Whole column zeta_m(c) for m = 0..upper in one O(upper * depth) sweep.
// profile[m] equals zeta_finite(m, c); likewise for the star variant.
std::vector<BigRational> zeta_finite_profile(std::int64_t upper, const Composition& c);
std::vector<BigRational> zeta_star_finite_profile(std::int64_t upper, const Composition& c);

// Expands a star value into ordinary values over the same upper limit:
// zeta*_N(k1,...,kr) = sum over ways of merging adjacent runs of indices,
// i.e. over compositions (b1,...,bh) of r, of zeta_N applied to the tuple of
// blockwise part sums.  Terms are ordered by output depth h = 1..r, then
// lexicographically by merge pattern.  Throws on the empty tuple.
std::vector<Composition> star_to_ordinary(const Composition& c);

// One step of the upper-limit recursion
//   zeta_N(c) = zeta_{N-1}(c) + N^{-k1} * zeta_{N-1}(k2,...,kr).
struct UpperReduction {
  std::int64_t upper = 0;  // the N that was peeled
  Composition kept;        // c itself
  Composition rest;        // (k2,...,kr)
  int exponent = 0;        // k1
};

// Requires upper >= 1 and depth >= 1 (throws std::invalid_argument otherwise).
UpperReduction reduce_upper(std::int64_t upper, const Composition& c);

// Exact check of the recursion step described by a reduction record.
bool check_upper_reduction(const UpperReduction& red);

// sum_{l=1}^{n} C(n,l) (-1)^(l-1) / l^r, exactly.  Equals the depth-one star
// value zeta*_n(r) for r >= 1, and 1 for every n >= 1 when r == 0.
BigRational alternating_binomial_sum(std::int64_t n, int r);

}  // namespace mzv

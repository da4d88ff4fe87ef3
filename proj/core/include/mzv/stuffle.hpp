#pragma once

#include <cstdint>
#include <map>

#include "mzv/composition.hpp"
#include "mzv/rational.hpp"

namespace mzv {

// A finite integer combination of index tuples, i.e. an element of the
// quasi-shuffle algebra written in the monomial basis.  Keys are kept in
// lexicographic order; multiplicities are exact and may exceed one.
class StuffleExpansion {
public:
  using Terms = std::map<Composition, std::int64_t>;

  void add(const Composition& c, std::int64_t mult);
  std::int64_t multiplicity(const Composition& c) const;  // 0 when absent
  std::int64_t total_multiplicity() const;                // sum of multiplicities
  std::size_t distinct_terms() const { return terms_.size(); }
  const Terms& terms() const { return terms_; }

private:
  Terms terms_;
};

// The stuffle (quasi-shuffle) product of two index tuples: interleave the
// parts of both tuples keeping each tuple's internal order, where at every
// step the two current heads may also be merged into their sum.  Recursion:
//   st(e, v) = v,  st(u, e) = u,
//   st(a.u, b.v) = a.st(u, b.v) + b.st(a.u, v) + (a+b).st(u, v).
// The number of terms counted with multiplicity is the Delannoy number
// D(depth(k), depth(h)).
StuffleExpansion stuffle_product(const Composition& k, const Composition& h);

// Exact check that zeta_N(k) * zeta_N(h) equals the stuffle expansion summed
// termwise under zeta_N, for one upper limit N.
struct StuffleCheck {
  bool ok = false;
  BigRational product;   // zeta_N(k) * zeta_N(h)
  BigRational expanded;  // sum of mult * zeta_N(term)
};

StuffleCheck verify_stuffle(std::int64_t upper, const Composition& k, const Composition& h);

}  // namespace mzv

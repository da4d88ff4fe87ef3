#pragma once

#include <compare>
#include <cstdint>
#include <initializer_list>
#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

namespace mzv {

// An index tuple (k1,...,kr) of positive integers, possibly empty.  Used both
// as a zeta argument and as a composition of an integer into ordered parts.
// Ordering is lexicographic on the parts, so shorter prefixes come first.
class Composition {
public:
  Composition() = default;
  Composition(std::initializer_list<int> parts);
  explicit Composition(std::vector<int> parts);

  // Parses "2,1,1".  The empty string is the empty tuple.  Throws
  // std::invalid_argument naming the offending token otherwise.
  static Composition parse(std::string_view text);

  int depth() const noexcept { return static_cast<int>(parts_.size()); }
  bool empty() const noexcept { return parts_.empty(); }
  std::int64_t weight() const noexcept;

  // depth >= 1 and k1 >= 2, so the infinite series converges.
  bool admissible() const noexcept;

  int first() const;         // requires depth >= 1
  Composition tail() const;  // (k2,...,kr); requires depth >= 1
  Composition prepended(int part) const;

  const std::vector<int>& parts() const noexcept { return parts_; }
  int operator[](int i) const { return parts_[static_cast<std::size_t>(i)]; }

  std::string str() const;  // "2,1,1"; empty tuple renders as ""

  auto operator<=>(const Composition&) const = default;

private:
  std::vector<int> parts_;
};

std::ostream& operator<<(std::ostream& os, const Composition& c);

// All compositions of m into exactly h positive parts, in lexicographic
// order.  compositions_of(m, 0) is empty for m >= 1; by convention the
// degenerate call compositions_of(0, 0) yields the single empty composition.
std::vector<Composition> compositions_of(std::int64_t m, int h);

}  // namespace mzv

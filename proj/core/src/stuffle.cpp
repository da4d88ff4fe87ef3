#include "mzv/stuffle.hpp"

#include "mzv/finite_zeta.hpp"

namespace mzv {

void StuffleExpansion::add(const Composition& c, std::int64_t mult) {
  if (mult == 0) return;
  terms_[c] += mult;
}

std::int64_t StuffleExpansion::multiplicity(const Composition& c) const {
  auto it = terms_.find(c);
  return it == terms_.end() ? 0 : it->second;
}

std::int64_t StuffleExpansion::total_multiplicity() const {
  std::int64_t total = 0;
  for (const auto& [c, m] : terms_) total += m;
  return total;
}

namespace {

// St(a.u, b.v) = a.St(u, b.v) + b.St(a.u, v) + (a+b).St(u, v), with the
// empty tuple as identity.  Index pairs (i, j) into the two part lists make
// the subproblem lattice explicit; results are combined bottom-up so each
// cell is built once.  Term counts with multiplicity follow the Delannoy
// recursion D(r,s) = D(r-1,s) + D(r,s-1) + D(r-1,s-1).
StuffleExpansion product_from(const Composition& k, const Composition& h,
                              int i, int j,
                              std::vector<std::vector<StuffleExpansion>>& memo,
                              std::vector<std::vector<bool>>& done) {
  if (done[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)]) {
    return memo[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
  }
  StuffleExpansion out;
  const int r = k.depth();
  const int s = h.depth();
  if (i == r || j == s) {
    std::vector<int> rest;
    for (int a = i; a < r; ++a) rest.push_back(k[a]);
    for (int b = j; b < s; ++b) rest.push_back(h[b]);
    out.add(Composition(std::move(rest)), 1);
  } else {
    auto extend = [&out](const StuffleExpansion& sub, int head) {
      for (const auto& [c, mult] : sub.terms()) out.add(c.prepended(head), mult);
    };
    extend(product_from(k, h, i + 1, j, memo, done), k[i]);
    extend(product_from(k, h, i, j + 1, memo, done), h[j]);
    extend(product_from(k, h, i + 1, j + 1, memo, done), k[i] + h[j]);
  }
  memo[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = out;
  done[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = true;
  return out;
}

}  // namespace

StuffleExpansion stuffle_product(const Composition& k, const Composition& h) {
  const auto rows = static_cast<std::size_t>(k.depth()) + 1;
  const auto cols = static_cast<std::size_t>(h.depth()) + 1;
  std::vector<std::vector<StuffleExpansion>> memo(rows, std::vector<StuffleExpansion>(cols));
  std::vector<std::vector<bool>> done(rows, std::vector<bool>(cols, false));
  return product_from(k, h, 0, 0, memo, done);
}

StuffleCheck verify_stuffle(std::int64_t upper, const Composition& k, const Composition& h) {
  StuffleCheck out;
  out.product = zeta_finite(upper, k) * zeta_finite(upper, h);
  const StuffleExpansion expansion = stuffle_product(k, h);
  for (const auto& [f, mult] : expansion.terms()) {
    out.expanded += BigRational(static_cast<long>(mult)) * zeta_finite(upper, f);
  }
  out.ok = out.product == out.expanded;
  return out;
}

}  // namespace mzv

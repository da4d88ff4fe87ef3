#include "mzv/finite_zeta.hpp"

#include <stdexcept>

namespace mzv {

namespace {

// Shared sweep maintaining the suffix chain val[j] = zeta_m(c_j,...,c_{r-1})
// (or the star variant) for j = 0..r-1, val[r] = 1.  Strict values use the
// previous row of the deeper suffix, so the chain updates top-down; star
// values use the current row, so the chain updates bottom-up.
std::vector<BigRational> sweep(std::int64_t upper, const Composition& c,
                               bool star, bool keep_profile) {
  const int r = c.depth();
  std::vector<BigRational> profile;
  if (keep_profile) profile.reserve(static_cast<std::size_t>(upper) + 1);

  std::vector<BigRational> val(static_cast<std::size_t>(r) + 1);
  val[static_cast<std::size_t>(r)] = BigRational(1);

  auto top = [&]() { return r == 0 ? BigRational(1) : val[0]; };
  if (keep_profile) profile.push_back(top());

  for (std::int64_t m = 1; m <= upper; ++m) {
    const auto mu = static_cast<unsigned long>(m);
    if (star) {
      for (int j = r - 1; j >= 0; --j) {
        const auto ju = static_cast<std::size_t>(j);
        val[ju] += BigRational::reciprocal_pow(mu, static_cast<unsigned long>(c[j])) * val[ju + 1];
      }
    } else {
      for (int j = 0; j < r; ++j) {
        const auto ju = static_cast<std::size_t>(j);
        val[ju] += BigRational::reciprocal_pow(mu, static_cast<unsigned long>(c[j])) * val[ju + 1];
      }
    }
    if (keep_profile) profile.push_back(top());
  }

  if (!keep_profile) profile.push_back(top());
  return profile;
}

void require_upper(std::int64_t upper) {
  if (upper < 0) throw std::invalid_argument("upper limit must be >= 0");
}

}  // namespace

BigRational zeta_finite(std::int64_t upper, const Composition& c) {
  require_upper(upper);
  return sweep(upper, c, /*star=*/false, /*keep_profile=*/false).back();
}

BigRational zeta_star_finite(std::int64_t upper, const Composition& c) {
  require_upper(upper);
  return sweep(upper, c, /*star=*/true, /*keep_profile=*/false).back();
}

std::vector<BigRational> zeta_finite_profile(std::int64_t upper, const Composition& c) {
  require_upper(upper);
  return sweep(upper, c, /*star=*/false, /*keep_profile=*/true);
}

std::vector<BigRational> zeta_star_finite_profile(std::int64_t upper, const Composition& c) {
  require_upper(upper);
  return sweep(upper, c, /*star=*/true, /*keep_profile=*/true);
}

std::vector<Composition> star_to_ordinary(const Composition& c) {
  if (c.empty()) throw std::invalid_argument("star conversion needs depth >= 1");
  const int r = c.depth();
  std::vector<Composition> out;
  out.reserve(1u << (r - 1));
  // Merge patterns grouped by output depth h; blocks of sizes (b1,...,bh)
  // sum consecutive runs of parts.
  for (int h = 1; h <= r; ++h) {
    for (const Composition& blocks : compositions_of(r, h)) {
      std::vector<int> merged;
      merged.reserve(static_cast<std::size_t>(h));
      int pos = 0;
      for (int b = 0; b < h; ++b) {
        int s = 0;
        for (int i = 0; i < blocks[b]; ++i) s += c[pos++];
        merged.push_back(s);
      }
      out.emplace_back(std::move(merged));
    }
  }
  return out;
}

UpperReduction reduce_upper(std::int64_t upper, const Composition& c) {
  if (c.empty()) throw std::invalid_argument("reduction needs depth >= 1");
  if (upper < 1) throw std::invalid_argument("reduction needs upper >= 1");
  return UpperReduction{upper, c, c.tail(), c.first()};
}

bool check_upper_reduction(const UpperReduction& red) {
  const BigRational lhs = zeta_finite(red.upper, red.kept);
  const BigRational rhs =
      zeta_finite(red.upper - 1, red.kept) +
      BigRational::reciprocal_pow(static_cast<unsigned long>(red.upper),
                                  static_cast<unsigned long>(red.exponent)) *
          zeta_finite(red.upper - 1, red.rest);
  return lhs == rhs;
}

BigRational alternating_binomial_sum(std::int64_t n, int r) {
  if (n < 1) throw std::invalid_argument("alternating binomial sum needs n >= 1");
  if (r < 0) throw std::invalid_argument("alternating binomial sum needs r >= 0");
  BigRational acc;
  for (std::int64_t l = 1; l <= n; ++l) {
    BigRational term = binomial(n, l) * BigRational::reciprocal_pow(
                                            static_cast<unsigned long>(l),
                                            static_cast<unsigned long>(r));
    if ((l - 1) % 2 == 0) {
      acc += term;
    } else {
      acc -= term;
    }
  }
  return acc;
}

}  // namespace mzv

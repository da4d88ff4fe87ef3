#include "mzv/numeric.hpp"

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <limits>
#include <stdexcept>
#include <vector>

#include "mzv/finite_zeta.hpp"
#include "numeric_internal.hpp"

namespace mzv {

void validate_config(const NumericConfig& cfg) {
  if (!(cfg.tol > 0.0)) throw std::invalid_argument("tolerance must be positive");
  if (cfg.tol < 1e-13) {
    throw std::invalid_argument("tolerance below 1e-13 is unattainable in double precision");
  }
  if (cfg.max_terms < 1) throw std::invalid_argument("max_terms must be >= 1");
  if (cfg.quad_max_depth < 1) throw std::invalid_argument("quad_max_depth must be >= 1");
  if (cfg.t_cut < 0.0 || !std::isfinite(cfg.t_cut)) {
    throw std::invalid_argument("t_cut must be finite and >= 0");
  }
}

namespace detail {

double gmax_log_over_sqrt(int p) {
  // max over x >= 1 of (1+ln x)^p / sqrt(x), attained at 1+ln x = 2p
  if (p <= 0) return 1.0;
  return std::pow(2.0 * p, p) * std::exp(0.5 - p);
}

// Worst-case rounding slack of the blockwise kernels after `terms` steps.
// Outer accumulator: each block of kBlock nonnegative terms contributes at
// most kBlock*eps times its sum, and the flushes another terms/kBlock * eps
// of the total.  Inner chain states are bounded by (1+ln m)^p; their
// accumulated rounding enters the output through weights m^{-q} with q >= 2,
// at most eps * sum_m (1+ln m)^p / m <= eps * (1+ln M)^{p+1}/(p+1).  zpow
// adds the compounded relative error of a running z^m power.
double fp_slack(double terms, int p, double mag, bool zpow) {
  if (terms < 1) terms = 1;
  mag = std::max(mag, 1.0);
  double slack = kEps * mag *
                 (static_cast<double>(kBlock) + terms / static_cast<double>(kBlock) + 64.0);
  if (zpow) slack += kEps * terms * mag;
  slack += kEps * std::pow(1.0 + std::log(std::max(terms, 2.0)), p + 1) / (p + 1);
  return slack;
}

// Tail of zeta(c) truncated at N, admissible c: the summand is at most
// (1+ln n)^{r-1} n^{-k1} (each inner sum bounded by a harmonic number).
// Once (1+ln n)^{r-1}/sqrt(n) is nonincreasing (N >= e^{2(r-1)}), half a
// power of n absorbs the log factor at the cost of the factor 2; below the
// threshold the global maximum of that ratio serves instead.
double zeta_tail_bound(double N, int k1, int r) {
  N = std::max(N, 1.0);
  const int p = r - 1;
  if (N >= std::exp(2.0 * p)) {
    return 2.0 * std::pow(1.0 + std::log(N), p) * std::pow(N, 1.0 - k1) / (k1 - 1);
  }
  return gmax_log_over_sqrt(p) * std::pow(N, 1.5 - k1) / (k1 - 1.5);
}

// Tail of the xi double series truncated at N: the summand is at most
// (1+ln n)^{p} n^{-(k1+1)} with p = n_arg + r - 2; same dominance argument.
double xi_series_tail_bound(double N, int k1, int p) {
  N = std::max(N, 1.0);
  if (N >= std::exp(2.0 * p)) {
    return 2.0 * std::pow(1.0 + std::log(N), p) * std::pow(N, -static_cast<double>(k1)) / k1;
  }
  return gmax_log_over_sqrt(p) * std::pow(N, 0.5 - k1) / (k1 - 0.5);
}

// Tail of Li_c(z) truncated at M.  Geometric leg: once
// (1+ln n)^{r-1} n^{-k1} is nonincreasing (n >= e^{(r-1)/k1 - 1}) the first
// omitted summand bounds the rest through the geometric series in z.
// Polynomial leg (k1 >= 2, z-free): the zeta tail argument; exact integral
// comparison at depth 1.
double polylog_tail_bound(double M, double z, int k1, int r) {
  M = std::max(M, 1.0);
  const int p = r - 1;
  const double L = 1.0 + std::log(M + 1.0);
  double best = std::numeric_limits<double>::max();
  if (M + 1.0 >= std::exp(std::max(0.0, static_cast<double>(p) / k1 - 1.0))) {
    const double logzpow = (M + 1.0) * std::log(z);  // -inf at z=0 is fine
    const double lead =
        std::pow(L, p) * std::exp(logzpow) / ((1.0 - z) * std::pow(M + 1.0, k1));
    best = std::min(best, lead);
  }
  if (k1 >= 2) {
    double poly;
    if (p == 0) {
      poly = std::pow(M, 1.0 - k1) / (k1 - 1);
    } else if (M + 1.0 >= std::exp(2.0 * p)) {
      poly = 2.0 * std::pow(L, p) * std::pow(M, 1.0 - k1) / (k1 - 1);
    } else {
      poly = gmax_log_over_sqrt(p) * std::pow(M, 1.5 - k1) / (k1 - 1.5);
    }
    best = std::min(best, poly);
  }
  return best;
}

// Smallest term count whose bound does not exceed target, capped at
// max_terms.  Only the certified endpoint survives the doubling phase, so a
// non-monotone prefix of the bound function cannot produce an unsound count.
std::int64_t solve_terms(double target, std::int64_t max_terms,
                         const std::function<double(double)>& bound) {
  std::int64_t hi = std::min<std::int64_t>(64, max_terms);
  while (hi < max_terms && bound(static_cast<double>(hi)) > target) {
    hi = (hi > max_terms / 2) ? max_terms : hi * 2;
  }
  if (bound(static_cast<double>(hi)) > target) return max_terms;
  std::int64_t lo = 1;
  while (lo + 1 < hi) {
    const std::int64_t mid = lo + (hi - lo) / 2;
    if (bound(static_cast<double>(mid)) <= target) {
      hi = mid;
    } else {
      lo = mid;
    }
  }
  return hi;
}

namespace {

inline double ipow_inv(double inv, int e) {
  double p = inv;
  for (int i = 1; i < e; ++i) p *= inv;
  return p;
}

// sum_{m=1}^{terms} z^m m^{-k1} zeta_{m-1}(k2,...,kr): the strict suffix
// chain v[j] = zeta_m(c_j,...) consumes the previous row of the deeper
// entry, so updating in ascending j after forming the term is exact.
template <bool WithZ>
double strict_chain_sum(const Composition& c, double z, std::int64_t terms) {
  const int r = c.depth();
  const int k1 = c.first();
  const int* e = c.parts().data();
  double stack_v[64];
  std::vector<double> heap_v;
  double* v = stack_v;
  if (r + 1 > 64) {
    heap_v.assign(static_cast<std::size_t>(r) + 1, 0.0);
    v = heap_v.data();
  }
  for (int i = 0; i <= r; ++i) v[i] = 0.0;
  v[r] = 1.0;

  double sum = 0.0, block = 0.0, dn = 0.0, zp = 1.0;
  for (std::int64_t m = 1; m <= terms; ++m) {
    dn += 1.0;
    const double inv = 1.0 / dn;
    double term = ipow_inv(inv, k1) * v[1];
    if constexpr (WithZ) {
      zp *= z;
      term *= zp;
    }
    block += term;
    for (int j = 1; j < r; ++j) v[j] += ipow_inv(inv, e[j]) * v[j + 1];
    if ((m & (kBlock - 1)) == 0) {
      sum += block;
      block = 0.0;
    }
  }
  return sum + block;
}

}  // namespace

// sum_{m=1}^{terms} zeta*_m({1}^{n-1}) zeta_{m-1}(k2,...,kr) m^{-(k1+1)}.
// The star chain w[j] = zeta*_m({1}^j) uses the same-row shorter value, so
// ascending j sees the fresh w[j-1]; the strict chain works as above.
double xi_chain_sum(const Composition& c, std::int64_t n, std::int64_t terms) {
  const int r = c.depth();
  const int k1 = c.first();
  const int* e = c.parts().data();
  std::vector<double> w(static_cast<std::size_t>(n), 0.0);
  w[0] = 1.0;
  std::vector<double> v(static_cast<std::size_t>(r) + 1, 0.0);
  v[static_cast<std::size_t>(r)] = 1.0;
  double* wp = w.data();
  double* vp = v.data();

  double sum = 0.0, block = 0.0, dn = 0.0;
  for (std::int64_t m = 1; m <= terms; ++m) {
    dn += 1.0;
    const double inv = 1.0 / dn;
    for (std::int64_t j = 1; j < n; ++j) wp[j] += inv * wp[j - 1];
    block += ipow_inv(inv, k1 + 1) * wp[n - 1] * vp[1];
    for (int j = 1; j < r; ++j) vp[j] += ipow_inv(inv, e[j]) * vp[j + 1];
    if ((m & (kBlock - 1)) == 0) {
      sum += block;
      block = 0.0;
    }
  }
  return sum + block;
}

}  // namespace detail

EvalResult polylog(const Composition& c, double z, const NumericConfig& cfg) {
  validate_config(cfg);
  if (c.empty()) throw std::invalid_argument("polylog needs depth >= 1");
  if (!(z >= 0.0 && z < 1.0)) {
    throw std::invalid_argument("polylog argument must lie in [0,1)");
  }
  const int r = c.depth();
  const int k1 = c.first();
  if (r == 1 && k1 == 1) {
    const double v = -std::log1p(-z);
    return {v, 4.0 * detail::kEps * (std::abs(v) + 1.0)};
  }
  if (z == 0.0) return {0.0, 0.0};

  const int p = r - 1;
  auto bound = [&](double M) {
    return detail::polylog_tail_bound(M, z, k1, r) + detail::fp_slack(M, p, 4.0, true);
  };
  const std::int64_t terms = detail::solve_terms(cfg.tol, cfg.max_terms, bound);
  const double value = detail::strict_chain_sum<true>(c, z, terms);
  double err = detail::polylog_tail_bound(static_cast<double>(terms), z, k1, r) +
               detail::fp_slack(static_cast<double>(terms), p, std::abs(value), true);
  if (!std::isfinite(err)) err = std::numeric_limits<double>::max();
  return {value, err};
}

EvalResult zeta_infinite(const Composition& c, const NumericConfig& cfg) {
  validate_config(cfg);
  if (!c.admissible()) {
    throw std::invalid_argument("infinite zeta needs an admissible index (k1 >= 2)");
  }
  const int r = c.depth();
  const int k1 = c.first();
  const int p = r - 1;
  auto bound = [&](double N) {
    return detail::zeta_tail_bound(N, k1, r) + detail::fp_slack(N, p, 4.0, false);
  };
  const std::int64_t terms = detail::solve_terms(cfg.tol, cfg.max_terms, bound);
  const double value = detail::strict_chain_sum<false>(c, 1.0, terms);
  double err = detail::zeta_tail_bound(static_cast<double>(terms), k1, r) +
               detail::fp_slack(static_cast<double>(terms), p, std::abs(value), false);
  if (!std::isfinite(err)) err = std::numeric_limits<double>::max();
  return {value, err};
}

EvalResult zeta_star_infinite(const Composition& c, const NumericConfig& cfg) {
  validate_config(cfg);
  if (!c.admissible()) {
    throw std::invalid_argument("infinite star value needs an admissible index (k1 >= 2)");
  }
  const std::vector<Composition> expansion = star_to_ordinary(c);
  NumericConfig per = cfg;
  per.tol = std::max(cfg.tol / static_cast<double>(expansion.size()), 1e-13);
  EvalResult out{0.0, 0.0};
  for (const Composition& d : expansion) {
    const EvalResult e = zeta_infinite(d, per);
    out.value += e.value;
    out.error_bound += e.error_bound;
  }
  return out;
}

}  // namespace mzv

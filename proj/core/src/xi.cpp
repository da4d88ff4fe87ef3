#include "mzv/xi.hpp"

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <limits>
#include <stdexcept>
#include <vector>

#include "mzv/finite_zeta.hpp"
#include "numeric_internal.hpp"

namespace mzv {

namespace {

void validate_xi_args(const Composition& c, std::int64_t n) {
  if (c.empty()) throw std::invalid_argument("xi needs an index of depth >= 1");
  if (n < 1) throw std::invalid_argument("xi argument n must be >= 1");
}

}  // namespace

StuffleExpansion xi_expansion_terms(const Composition& c, std::int64_t n) {
  validate_xi_args(c, n);
  if (n > 40) {
    throw std::invalid_argument("closed-form expansion grows exponentially in n; n must be <= 40");
  }
  const Composition k = c.tail();
  const int k1 = c.first();
  StuffleExpansion out;
  if (n == 1) {
    out.add(k.prepended(k1 + 1), 1);
    return out;
  }
  for (int h = 1; h <= n - 1; ++h) {
    for (const Composition& l : compositions_of(n - 1, h)) {
      const StuffleExpansion fam1 = stuffle_product(l, k);
      for (const auto& [f, mult] : fam1.terms()) out.add(f.prepended(k1 + 1), mult);
      const StuffleExpansion fam2 = stuffle_product(l.tail(), k);
      const int shift = l.first();
      for (const auto& [f, mult] : fam2.terms()) out.add(f.prepended(k1 + 1 + shift), mult);
    }
  }
  return out;
}

EvalResult xi_series(const Composition& c, std::int64_t n, const NumericConfig& cfg) {
  validate_config(cfg);
  validate_xi_args(c, n);
  if (n > 1'000'000) throw std::invalid_argument("series route supports n <= 1000000");
  const int r = c.depth();
  const int k1 = c.first();
  const int p = static_cast<int>(n - 1) + (r - 1);
  auto bound = [&](double N) {
    return detail::xi_series_tail_bound(N, k1, p) +
           detail::fp_slack(N, p, 3.0 + static_cast<double>(n), false);
  };
  const std::int64_t terms = detail::solve_terms(cfg.tol, cfg.max_terms, bound);
  const double value = detail::xi_chain_sum(c, n, terms);
  double err = detail::xi_series_tail_bound(static_cast<double>(terms), k1, p) +
               detail::fp_slack(static_cast<double>(terms), p, std::abs(value), false);
  if (!std::isfinite(err)) err = std::numeric_limits<double>::max();
  return {value, err};
}

EvalResult xi_stuffle_route(const Composition& c, std::int64_t n, const NumericConfig& cfg) {
  validate_config(cfg);
  validate_xi_args(c, n);
  const StuffleExpansion expansion = xi_expansion_terms(c, n);
  NumericConfig per = cfg;
  per.tol = std::max(cfg.tol / static_cast<double>(expansion.total_multiplicity()), 1e-13);
  EvalResult out{0.0, 0.0};
  for (const auto& [f, mult] : expansion.terms()) {
    const EvalResult e = zeta_infinite(f, per);
    out.value += static_cast<double>(mult) * e.value;
    out.error_bound += static_cast<double>(mult) * e.error_bound;
  }
  return out;
}

BigRational xi_series_partial_exact(const Composition& c, std::int64_t n, std::int64_t upper) {
  validate_xi_args(c, n);
  if (upper < 0) throw std::invalid_argument("upper limit must be >= 0");
  const int r = c.depth();
  const int k1 = c.first();
  std::vector<BigRational> w(static_cast<std::size_t>(n));
  w[0] = BigRational(1);
  std::vector<BigRational> v(static_cast<std::size_t>(r) + 1);
  v[static_cast<std::size_t>(r)] = BigRational(1);
  BigRational acc;
  for (std::int64_t m = 1; m <= upper; ++m) {
    const auto mu = static_cast<unsigned long>(m);
    for (std::int64_t j = 1; j < n; ++j) {
      w[static_cast<std::size_t>(j)] +=
          BigRational::reciprocal_pow(mu, 1) * w[static_cast<std::size_t>(j - 1)];
    }
    acc += BigRational::reciprocal_pow(mu, static_cast<unsigned long>(k1) + 1) *
           w[static_cast<std::size_t>(n - 1)] * v[1];
    for (int j = 1; j < r; ++j) {
      v[static_cast<std::size_t>(j)] +=
          BigRational::reciprocal_pow(mu, static_cast<unsigned long>(c[j])) *
          v[static_cast<std::size_t>(j) + 1];
    }
  }
  return acc;
}

XiTruncationCheck check_xi_truncation(const Composition& c, std::int64_t n, std::int64_t upper) {
  XiTruncationCheck out;
  out.series_side = xi_series_partial_exact(c, n, upper);
  const StuffleExpansion expansion = xi_expansion_terms(c, n);
  for (const auto& [f, mult] : expansion.terms()) {
    out.expansion_side += BigRational(static_cast<long>(mult)) * zeta_finite(upper, f);
  }
  out.ok = out.series_side == out.expansion_side;
  return out;
}

// ---------------------------------------------------------------------------
// Integral route: adaptive Simpson on [0, T] for
//   g(t) = t^{n-1} e^{-t} Li_c(1 - e^{-t}) / (z Gamma(n)),  z = 1 - e^{-t},
// plus a closed-form bound on the remainder beyond T.

namespace {

// Pointwise envelope Li_c(1-e^{-t}) <= C t^p.  For k1 >= 2 a constant
// (any upper bound for zeta(c)) works.  For k1 == 1 every part may be
// lowered to 1, and Li_{{1}^r}(z) = (-ln(1-z))^r / r! = t^r/r! exactly.
struct LiEnvelope {
  double C = 1.0;
  int p = 0;
};

LiEnvelope li_envelope(const Composition& c, const NumericConfig& cfg) {
  if (c.first() >= 2) {
    NumericConfig rough;
    rough.tol = 1e-3;
    rough.max_terms = std::min<std::int64_t>(cfg.max_terms, 100'000'000);
    const EvalResult z = zeta_infinite(c, rough);
    return {z.value + z.error_bound, 0};
  }
  double fact = 1.0;
  for (int i = 2; i <= c.depth(); ++i) fact *= i;
  return {1.0 / fact, c.depth()};
}

// Gamma(m, T) / (m-1)! = e^{-T} sum_{i<m} T^i/i!, integer m >= 1.
double reg_upper_gamma(int m, double T) {
  double u = std::exp(-T);
  double acc = 0.0;
  for (int i = 0; i < m; ++i) {
    acc += u;
    u *= T / (i + 1);
  }
  return acc;
}

// integral_T^inf t^{n-1} e^{-t}/(1-e^{-t}) C t^p dt / Gamma(n)
//   <= C/(1-e^{-T}) * Gamma(n+p, T)/Gamma(n)
double integral_tail(const LiEnvelope& env, std::int64_t n, double T) {
  const int m = static_cast<int>(n) + env.p;
  double ratio = 1.0;  // (m-1)!/(n-1)!
  for (std::int64_t i = n; i < m; ++i) ratio *= static_cast<double>(i);
  return env.C * ratio * reg_upper_gamma(m, T) / (-std::expm1(-T));
}

struct FNode {
  double g = 0.0;     // integrand value
  double lerr = 0.0;  // share of the node's polylog error bound
};

struct IntegrandCtx {
  const Composition* c = nullptr;
  std::int64_t n = 1;
  int r = 1;
  double gamma_n = 1.0;
  double budget_scale = 0.0;  // (tol/4)/T
  double budget_lo = 1e-10;
  double budget_hi = 5e-3;
  std::int64_t li_max_terms = 0;
};

FNode eval_node(const IntegrandCtx& ctx, double t) {
  if (t <= 0.0) {
    return {(ctx.n == 1 && ctx.r == 1) ? 1.0 : 0.0, 0.0};
  }
  const double z = -std::expm1(-t);
  const double tpow = std::pow(t, static_cast<double>(ctx.n - 1));
  const double w = tpow * std::exp(-t) / (z * ctx.gamma_n);
  // Allowing the node a polylog error of (tol/4)/(w*T) keeps the integrated
  // contribution of all Li errors below tol/4; the e^t growth makes deep
  // nodes cheap despite z -> 1.
  double budget = ctx.budget_scale / std::max(w, 1e-300);
  budget = std::clamp(budget, ctx.budget_lo, ctx.budget_hi);
  NumericConfig li_cfg;
  li_cfg.tol = budget;
  li_cfg.max_terms = ctx.li_max_terms;
  const EvalResult li = polylog(*ctx.c, z, li_cfg);
  return {w * li.value, w * li.error_bound};
}

struct QuadAccum {
  double value = 0.0;
  double quad_err = 0.0;
  double li_err = 0.0;
};

// Classic adaptive Simpson with Richardson acceptance.  Li errors enter the
// quadrature linearly with positive weights, so they combine exactly like
// the values; the accepted panel's bound is (16(Ll+Lr) + L)/15.
void simpson_rec(const IntegrandCtx& ctx, double a, const FNode& fa, double m, const FNode& fm,
                 double b, const FNode& fb, double S, double L, double tol_panel, int depth,
                 QuadAccum& acc) {
  const double lm = 0.5 * (a + m);
  const double rm = 0.5 * (m + b);
  const FNode flm = eval_node(ctx, lm);
  const FNode frm = eval_node(ctx, rm);
  const double h12 = (b - a) / 12.0;
  const double Sl = h12 * (fa.g + 4.0 * flm.g + fm.g);
  const double Sr = h12 * (fm.g + 4.0 * frm.g + fb.g);
  const double Ll = h12 * (fa.lerr + 4.0 * flm.lerr + fm.lerr);
  const double Lr = h12 * (fm.lerr + 4.0 * frm.lerr + fb.lerr);
  const double est = (Sl + Sr - S) / 15.0;
  if (depth <= 0 || std::abs(est) <= tol_panel) {
    acc.value += Sl + Sr + est;
    acc.quad_err += std::abs(est);
    acc.li_err += (16.0 * (Ll + Lr) + L) / 15.0;
    return;
  }
  simpson_rec(ctx, a, fa, lm, flm, m, fm, Sl, Ll, 0.5 * tol_panel, depth - 1, acc);
  simpson_rec(ctx, m, fm, rm, frm, b, fb, Sr, Lr, 0.5 * tol_panel, depth - 1, acc);
}

}  // namespace

EvalResult xi_integral(const Composition& c, std::int64_t n, const NumericConfig& cfg) {
  validate_config(cfg);
  validate_xi_args(c, n);
  if (n > 170) throw std::invalid_argument("integral route supports n <= 170");
  const int r = c.depth();
  const int k1 = c.first();
  const double tol = cfg.tol;

  const LiEnvelope env = li_envelope(c, cfg);
  double T = cfg.t_cut;
  if (T <= 0.0) {
    // The k1 == 1, depth > 1 series needs ~e^T terms per node near the
    // cutoff, so that case trades tail size for feasibility and reports the
    // larger bound.
    const double cap = (k1 == 1 && r > 1) ? 12.0 : 250.0;
    T = 4.0;
    while (T < cap && integral_tail(env, n, T) > 0.25 * tol) T += 0.5;
  }
  const double tail = integral_tail(env, n, T);

  IntegrandCtx ctx;
  ctx.c = &c;
  ctx.n = n;
  ctx.r = r;
  ctx.gamma_n = 1.0;
  for (std::int64_t i = 2; i < n; ++i) ctx.gamma_n *= static_cast<double>(i);
  ctx.budget_scale = 0.25 * tol / T;
  ctx.li_max_terms = std::min<std::int64_t>(
      cfg.max_terms, (k1 == 1 && r > 1) ? 4'000'000 : 200'000'000);

  const int seed = 16;
  std::vector<FNode> nodes(2 * seed + 1);
  for (int i = 0; i <= 2 * seed; ++i) {
    nodes[static_cast<std::size_t>(i)] = eval_node(ctx, T * i / (2.0 * seed));
  }
  QuadAccum acc;
  for (int i = 0; i < seed; ++i) {
    const double a = T * (2 * i) / (2.0 * seed);
    const double m = T * (2 * i + 1) / (2.0 * seed);
    const double b = T * (2 * i + 2) / (2.0 * seed);
    const FNode& fa = nodes[static_cast<std::size_t>(2 * i)];
    const FNode& fm = nodes[static_cast<std::size_t>(2 * i + 1)];
    const FNode& fb = nodes[static_cast<std::size_t>(2 * i + 2)];
    const double S = (b - a) / 6.0 * (fa.g + 4.0 * fm.g + fb.g);
    const double L = (b - a) / 6.0 * (fa.lerr + 4.0 * fm.lerr + fb.lerr);
    simpson_rec(ctx, a, fa, m, fm, b, fb, S, L, 0.5 * tol / seed, cfg.quad_max_depth, acc);
  }

  double err = tail + acc.quad_err + acc.li_err +
               detail::kEps * 1e3 * (std::abs(acc.value) + 1.0);
  if (!std::isfinite(err)) err = std::numeric_limits<double>::max();
  return {acc.value, err};
}

XiCrossCheck cross_check(const Composition& c, std::int64_t n, const NumericConfig& cfg) {
  XiCrossCheck out;
  out.routes.push_back({"integral", xi_integral(c, n, cfg)});
  out.routes.push_back({"series", xi_series(c, n, cfg)});
  out.routes.push_back({"stuffle", xi_stuffle_route(c, n, cfg)});
  if (c.depth() == 1) {
    std::vector<int> star(static_cast<std::size_t>(n), 1);
    star[0] = c.first() + 1;
    out.routes.push_back({"star", zeta_star_infinite(Composition(std::move(star)), cfg)});
  }
  out.consistent = true;
  for (std::size_t i = 0; i < out.routes.size(); ++i) {
    for (std::size_t j = i + 1; j < out.routes.size(); ++j) {
      const double gap = std::abs(out.routes[i].result.value - out.routes[j].result.value);
      const double allowed =
          out.routes[i].result.error_bound + out.routes[j].result.error_bound;
      if (gap > out.max_gap) {
        out.max_gap = gap;
        out.max_allowed = allowed;
      }
      if (gap > allowed) out.consistent = false;
    }
  }
  return out;
}

}  // namespace mzv

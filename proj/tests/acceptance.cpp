// Acceptance gate: ten criteria, one PASS/FAIL line each, nonzero exit if
// any fail.  Exact criteria run in rationals; numeric criteria pin their
// tolerances here and every numeric case is re-audited at tol/100 (criterion
// 10) against the coarser run's certified interval.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "mzv/composition.hpp"
#include "mzv/finite_zeta.hpp"
#include "mzv/identities.hpp"
#include "mzv/numeric.hpp"
#include "mzv/xi.hpp"
#include "oracles.hpp"

using mzv::Composition;
using mzv::EvalResult;
using mzv::NumericConfig;

namespace {

double now_s() {
  return std::chrono::duration<double>(
             std::chrono::steady_clock::now().time_since_epoch())
      .count();
}

struct Audit {
  std::string label;
  std::function<EvalResult(const NumericConfig&)> eval;
  NumericConfig cfg;
  EvalResult coarse;
};

std::vector<Audit> g_audits;
std::set<std::string> g_audit_labels;

EvalResult tracked(std::string label, std::function<EvalResult(const NumericConfig&)> eval,
                   const NumericConfig& cfg) {
  EvalResult r = eval(cfg);
  if (g_audit_labels.insert(label).second) {
    g_audits.push_back({std::move(label), std::move(eval), cfg, r});
  }
  return r;
}

bool report(int idx, bool ok, const char* what, const std::string& detail) {
  std::printf("%s criterion %d (%s): %s\n", ok ? "PASS" : "FAIL", idx, what, detail.c_str());
  std::fflush(stdout);
  return ok;
}

std::string cases_and_time(std::int64_t cases, std::int64_t failures, double dt, double budget) {
  char buf[128];
  std::snprintf(buf, sizeof buf, "%lld cases, %lld failures, %.1fs (budget %.0fs)",
                static_cast<long long>(cases), static_cast<long long>(failures), dt, budget);
  return buf;
}

bool criterion_suite(int idx, const char* what, mzv::SuiteResult (*run)(), double budget) {
  const double t0 = now_s();
  const mzv::SuiteResult r = run();
  const double dt = now_s() - t0;
  bool ok = r.failures == 0 && dt < budget;
  for (std::size_t i = 0; i < r.counterexamples.size() && i < 3; ++i) {
    std::printf("  counterexample %s: %s\n", r.counterexamples[i].key.c_str(),
                r.counterexamples[i].detail.c_str());
  }
  return report(idx, ok, what, cases_and_time(r.cases, r.failures, dt, budget));
}

Composition star_index(int k, std::int64_t n) {
  std::vector<int> parts(static_cast<std::size_t>(n), 1);
  parts[0] = k + 1;
  return Composition(std::move(parts));
}

NumericConfig wide_cfg(double tol) {
  NumericConfig cfg;
  cfg.tol = tol;
  cfg.max_terms = 16'000'000'000LL;
  return cfg;
}

bool criterion5() {
  const double t0 = now_s();
  const NumericConfig cfg = wide_cfg(4.9e-7);
  bool ok = true;
  double worst_gap = 0.0;
  for (int k = 1; k <= 3; ++k) {
    for (std::int64_t n = 1; n <= 3; ++n) {
      const Composition c{k};
      const EvalResult a = tracked(
          "xi_series((" + c.str() + "),n=" + std::to_string(n) + ")@4.9e-7",
          [c, n](const NumericConfig& t) { return mzv::xi_series(c, n, t); }, cfg);
      const Composition s = star_index(k, n);
      const EvalResult b = tracked(
          "zeta_star((" + s.str() + "))@4.9e-7",
          [s](const NumericConfig& t) { return mzv::zeta_star_infinite(s, t); }, cfg);
      const double gap = std::abs(a.value - b.value);
      worst_gap = std::max(worst_gap, gap);
      ok = ok && gap <= 1e-6 && a.error_bound <= 5e-7 && b.error_bound <= 5e-7;
    }
  }
  const double dt = now_s() - t0;
  ok = ok && dt < 60.0;
  char buf[128];
  std::snprintf(buf, sizeof buf, "9 index pairs, max gap %.2e, %.1fs (budget 60s)", worst_gap,
                dt);
  return report(5, ok, "double series equals closed star form at depth one", buf);
}

bool criterion6() {
  const double t0 = now_s();
  const NumericConfig cfg = wide_cfg(4.9e-7);
  bool ok = true;
  double worst_gap = 0.0;
  for (const Composition& c : {Composition{2}, Composition{3}, Composition{2, 1},
                               Composition{3, 1}, Composition{2, 1, 1}}) {
    for (std::int64_t n = 1; n <= 3; ++n) {
      const EvalResult s = tracked(
          "xi_series((" + c.str() + "),n=" + std::to_string(n) + ")@4.9e-7",
          [c, n](const NumericConfig& t) { return mzv::xi_series(c, n, t); }, cfg);
      const EvalResult u = tracked(
          "xi_stuffle((" + c.str() + "),n=" + std::to_string(n) + ")@4.9e-7",
          [c, n](const NumericConfig& t) { return mzv::xi_stuffle_route(c, n, t); }, cfg);
      const double gap = std::abs(s.value - u.value);
      worst_gap = std::max(worst_gap, gap);
      ok = ok && gap <= 1e-6;
    }
  }
  const double dt = now_s() - t0;
  ok = ok && dt < 300.0;
  char buf[128];
  std::snprintf(buf, sizeof buf, "15 cases, max gap %.2e, %.1fs (budget 300s)", worst_gap, dt);
  return report(6, ok, "double series equals the zeta-value expansion", buf);
}

bool criterion7() {
  const double t0 = now_s();
  const NumericConfig cfg = wide_cfg(4.9e-6);
  bool ok = true;
  double worst_gap = 0.0;
  for (const Composition& c :
       {Composition{1}, Composition{2}, Composition{3}, Composition{2, 1}}) {
    for (std::int64_t n = 1; n <= 2; ++n) {
      const EvalResult q = tracked(
          "xi_integral((" + c.str() + "),n=" + std::to_string(n) + ")@4.9e-6",
          [c, n](const NumericConfig& t) { return mzv::xi_integral(c, n, t); }, cfg);
      const EvalResult s = tracked(
          "xi_series((" + c.str() + "),n=" + std::to_string(n) + ")@4.9e-6",
          [c, n](const NumericConfig& t) { return mzv::xi_series(c, n, t); }, cfg);
      const double gap = std::abs(q.value - s.value);
      worst_gap = std::max(worst_gap, gap);
      ok = ok && gap <= 1e-5;
    }
  }
  const double dt = now_s() - t0;
  ok = ok && dt < 300.0;
  char buf[128];
  std::snprintf(buf, sizeof buf, "8 cases, max gap %.2e, %.1fs (budget 300s)", worst_gap, dt);
  return report(7, ok, "quadrature route equals the series route", buf);
}

bool criterion8() {
  bool ok = true;
  const NumericConfig cfg = wide_cfg(4.9e-7);
  const EvalResult a = tracked(
      "xi_series((2),n=1)@4.9e-7",
      [](const NumericConfig& t) { return mzv::xi_series(Composition{2}, 1, t); }, cfg);
  const oracle::Bracket z3 = oracle::zeta_bracket(3);
  ok = ok && z3.contains(a.value, 1e-6);

  const EvalResult b = tracked(
      "xi_series((1),n=1)@4.9e-7",
      [](const NumericConfig& t) { return mzv::xi_series(Composition{1}, 1, t); }, cfg);
  const oracle::Bracket z2 = oracle::zeta_bracket(2);
  ok = ok && z2.contains(b.value, 1e-6);

  const NumericConfig cfg4 = wide_cfg(4.9e-8);
  const EvalResult c = tracked(
      "zeta_infinite((4))@4.9e-8",
      [](const NumericConfig& t) { return mzv::zeta_infinite(Composition{4}, t); }, cfg4);
  const oracle::Bracket z4 = oracle::zeta_bracket(4);
  ok = ok && z4.contains(c.value, 1e-7);

  char buf[160];
  std::snprintf(buf, sizeof buf,
                "xi((2),1)=%.9f xi((1),1)=%.9f zeta(4)=%.9f vs bracketed sums", a.value,
                b.value, c.value);
  return report(8, ok, "anchor values against independent summation brackets", buf);
}

bool criterion9() {
  const double t0 = now_s();
  std::int64_t cases = 0;
  std::int64_t failures = 0;
  for (const Composition& c : {Composition{2, 1}, Composition{3, 1}}) {
    for (std::int64_t n = 2; n <= 3; ++n) {
      for (std::int64_t N = 1; N <= 20; ++N) {
        const mzv::XiTruncationCheck chk = mzv::check_xi_truncation(c, n, N);
        if (!chk.ok) ++failures;
        ++cases;
      }
    }
  }
  const double dt = now_s() - t0;
  const bool ok = failures == 0 && dt < 60.0;
  return report(9, ok, "exact finite truncation of the double series",
                cases_and_time(cases, failures, dt, 60.0));
}

bool criterion10() {
  const double t0 = now_s();
  bool ok = true;
  std::int64_t checked = 0;
  for (const Audit& a : g_audits) {
    NumericConfig fine = a.cfg;
    fine.tol = std::max(a.cfg.tol / 100.0, 1e-13);
    const EvalResult r = a.eval(fine);
    const bool inside = std::abs(r.value - a.coarse.value) <= a.coarse.error_bound;
    if (!inside) {
      std::printf("  audit failed for %s: fine %.17g vs coarse %.17g +- %.3g\n",
                  a.label.c_str(), r.value, a.coarse.value, a.coarse.error_bound);
      ok = false;
    }
    ++checked;
  }
  const double dt = now_s() - t0;
  char buf[128];
  std::snprintf(buf, sizeof buf, "%lld numeric cases re-run at tol/100, %.1fs",
                static_cast<long long>(checked), dt);
  return report(10, ok, "error-bound soundness audit", buf);
}

}  // namespace

int main() {
  bool all = true;
  all &= criterion_suite(1, "exact stuffle product identity",
                         [] { return mzv::run_stuffle_suite(7, 20); }, 120.0);
  all &= criterion_suite(2, "exact star-to-ordinary conversion",
                         [] { return mzv::run_star_suite(5, 3, 30); }, 30.0);
  all &= criterion_suite(3, "exact alternating binomial identity",
                         [] { return mzv::run_binomial_suite(40, 6); }, 10.0);
  all &= criterion_suite(4, "exact upper-limit reduction",
                         [] { return mzv::run_reduction_suite(5, 3, 30); }, 30.0);
  all &= criterion5();
  all &= criterion6();
  all &= criterion7();
  all &= criterion8();
  all &= criterion9();
  all &= criterion10();
  return all ? 0 : 1;
}

#include "mzv/identities.hpp"

#include <cmath>
#include <cstdio>
#include <functional>
#include <string>
#include <utility>
#include <vector>

#include "mzv/finite_zeta.hpp"
#include "mzv/stuffle.hpp"
#include "mzv/xi.hpp"

namespace mzv {

namespace {

std::string fmt(double x) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

std::string paren(const Composition& c) { return "(" + c.str() + ")"; }

// Agreement of two interval results: values must differ by no more than the
// sum of the reported bounds.
bool record_gap(SuiteResult& out, const std::string& key, const char* la, const EvalResult& a,
                const char* lb, const EvalResult& b) {
  const double gap = std::abs(a.value - b.value);
  const double allowed = a.error_bound + b.error_bound;
  const bool ok = gap <= allowed;
  std::string detail;
  if (!ok) {
    detail = std::string(la) + "=" + fmt(a.value) + "+-" + fmt(a.error_bound) + " " + lb + "=" +
             fmt(b.value) + "+-" + fmt(b.error_bound) + " gap=" + fmt(gap);
  }
  out.record(key, ok, detail);
  return ok;
}

}  // namespace

void SuiteResult::record(const std::string& key, bool ok, const std::string& detail) {
  ++cases;
  if (!ok) {
    ++failures;
    counterexamples.push_back({key, ok, detail});
  }
}

std::vector<Composition> compositions_by_weight(int max_weight) {
  std::vector<Composition> out;
  std::vector<int> prefix;
  std::function<void(int)> rec = [&](int rem) {
    for (int p = 1; p <= rem; ++p) {
      prefix.push_back(p);
      if (p == rem) {
        out.emplace_back(prefix);
      } else {
        rec(rem - p);
      }
      prefix.pop_back();
    }
  };
  for (int w = 1; w <= max_weight; ++w) rec(w);
  return out;
}

std::vector<Composition> compositions_up_to(int max_depth, int max_part) {
  std::vector<Composition> out;
  std::vector<int> prefix;
  std::function<void()> rec = [&]() {
    for (int p = 1; p <= max_part; ++p) {
      prefix.push_back(p);
      out.emplace_back(prefix);
      if (static_cast<int>(prefix.size()) < max_depth) rec();
      prefix.pop_back();
    }
  };
  if (max_depth >= 1) rec();
  return out;
}

SuiteResult run_stuffle_suite(int max_weight, std::int64_t max_upper) {
  SuiteResult out;
  out.suite = "stuffle";
  const std::vector<Composition> comps = compositions_by_weight(max_weight - 1);
  std::vector<std::vector<BigRational>> profiles;
  profiles.reserve(comps.size());
  for (const Composition& c : comps) profiles.push_back(zeta_finite_profile(max_upper, c));
  for (std::size_t i = 0; i < comps.size(); ++i) {
    for (std::size_t j = 0; j < comps.size(); ++j) {
      const Composition& k = comps[i];
      const Composition& h = comps[j];
      if (k.weight() + h.weight() > max_weight) continue;
      const StuffleExpansion prod = stuffle_product(k, h);
      std::vector<std::pair<std::vector<BigRational>, std::int64_t>> rhs;
      rhs.reserve(prod.distinct_terms());
      for (const auto& [f, mult] : prod.terms()) {
        rhs.emplace_back(zeta_finite_profile(max_upper, f), mult);
      }
      for (std::int64_t N = 0; N <= max_upper; ++N) {
        const BigRational lhs =
            profiles[i][static_cast<std::size_t>(N)] * profiles[j][static_cast<std::size_t>(N)];
        BigRational sum;
        for (const auto& [pf, mult] : rhs) {
          sum += BigRational(static_cast<long>(mult)) * pf[static_cast<std::size_t>(N)];
        }
        const bool ok = lhs == sum;
        out.record("stuffle k=" + paren(k) + " h=" + paren(h) + " N=" + std::to_string(N), ok,
                   ok ? "" : "product=" + lhs.str() + " expansion=" + sum.str());
      }
    }
  }
  return out;
}

SuiteResult run_star_suite(int max_depth, int max_part, std::int64_t max_upper) {
  SuiteResult out;
  out.suite = "star";
  for (const Composition& c : compositions_up_to(max_depth, max_part)) {
    const std::vector<BigRational> star = zeta_star_finite_profile(max_upper, c);
    std::vector<std::vector<BigRational>> parts;
    for (const Composition& f : star_to_ordinary(c)) {
      parts.push_back(zeta_finite_profile(max_upper, f));
    }
    for (std::int64_t N = 0; N <= max_upper; ++N) {
      BigRational sum;
      for (const auto& pf : parts) sum += pf[static_cast<std::size_t>(N)];
      const bool ok = star[static_cast<std::size_t>(N)] == sum;
      out.record("star c=" + paren(c) + " N=" + std::to_string(N), ok,
                 ok ? ""
                    : "star=" + star[static_cast<std::size_t>(N)].str() +
                          " expansion=" + sum.str());
    }
  }
  return out;
}

SuiteResult run_reduction_suite(int max_depth, int max_part, std::int64_t max_upper) {
  SuiteResult out;
  out.suite = "reduce";
  for (const Composition& c : compositions_up_to(max_depth, max_part)) {
    for (std::int64_t N = 1; N <= max_upper; ++N) {
      const UpperReduction red = reduce_upper(N, c);
      const bool ok = check_upper_reduction(red);
      std::string detail;
      if (!ok) {
        detail = "zeta_N=" + zeta_finite(N, c).str() +
                 " zeta_{N-1}=" + zeta_finite(N - 1, c).str() +
                 " peeled=" + zeta_finite(N - 1, red.rest).str();
      }
      out.record("reduce c=" + paren(c) + " N=" + std::to_string(N), ok, detail);
    }
  }
  return out;
}

SuiteResult run_binomial_suite(std::int64_t max_n, int max_r) {
  SuiteResult out;
  out.suite = "binomial";
  for (int r = 0; r <= max_r; ++r) {
    const Composition ones{std::vector<int>(static_cast<std::size_t>(r), 1)};
    const std::vector<BigRational> prof = zeta_star_finite_profile(max_n, ones);
    for (std::int64_t n = 1; n <= max_n; ++n) {
      const BigRational lhs = alternating_binomial_sum(n, r);
      const bool ok = lhs == prof[static_cast<std::size_t>(n)];
      out.record(
          "binomial n=" + std::to_string(n) + " r=" + std::to_string(r), ok,
          ok ? "" : "sum=" + lhs.str() + " star=" + prof[static_cast<std::size_t>(n)].str());
    }
  }
  return out;
}

SuiteResult run_xi_suite(std::int64_t max_upper, const NumericConfig& cfg) {
  SuiteResult out;
  out.suite = "xi";

  // Depth one against the closed star form zeta*(k+1, {1}^{n-1}).
  for (int k = 1; k <= 3; ++k) {
    for (std::int64_t n = 1; n <= 3; ++n) {
      const Composition c{k};
      const EvalResult a = xi_series(c, n, cfg);
      std::vector<int> idx(static_cast<std::size_t>(n), 1);
      idx[0] = k + 1;
      const EvalResult b = zeta_star_infinite(Composition(std::move(idx)), cfg);
      record_gap(out, "xi-star k=" + std::to_string(k) + " n=" + std::to_string(n), "series", a,
                 "star", b);
    }
  }

  // Series route against the expansion into infinite zeta values.
  for (const Composition& c :
       {Composition{2}, Composition{3}, Composition{2, 1}, Composition{3, 1},
        Composition{2, 1, 1}}) {
    for (std::int64_t n = 1; n <= 3; ++n) {
      const EvalResult s = xi_series(c, n, cfg);
      const EvalResult t = xi_stuffle_route(c, n, cfg);
      record_gap(out, "xi-routes c=" + paren(c) + " n=" + std::to_string(n), "series", s,
                 "stuffle", t);
    }
  }

  // Quadrature against the series route.
  for (const Composition& c :
       {Composition{1}, Composition{2}, Composition{3}, Composition{2, 1}}) {
    for (std::int64_t n = 1; n <= 2; ++n) {
      const EvalResult q = xi_integral(c, n, cfg);
      const EvalResult s = xi_series(c, n, cfg);
      record_gap(out, "xi-integral c=" + paren(c) + " n=" + std::to_string(n), "integral", q,
                 "series", s);
    }
  }

  // Exact truncation: partial double series versus the expansion truncated at
  // the same upper limit.
  for (const Composition& c : {Composition{2, 1}, Composition{3, 1}}) {
    for (std::int64_t n = 2; n <= 3; ++n) {
      for (std::int64_t N = 1; N <= max_upper; ++N) {
        const XiTruncationCheck chk = check_xi_truncation(c, n, N);
        out.record("xi-truncation c=" + paren(c) + " n=" + std::to_string(n) +
                       " N=" + std::to_string(N),
                   chk.ok,
                   chk.ok ? ""
                          : "series=" + chk.series_side.str() +
                                " expansion=" + chk.expansion_side.str());
      }
    }
  }
  return out;
}

}  // namespace mzv

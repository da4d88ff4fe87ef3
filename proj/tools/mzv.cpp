#include <charconv>
#include <chrono>
#include <cstdint>
#include <cstdio>
#include <cstdlib>
#include <iostream>
#include <string>
#include <system_error>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "mzv/composition.hpp"
#include "mzv/finite_zeta.hpp"
#include "mzv/identities.hpp"
#include "mzv/numeric.hpp"
#include "mzv/stuffle.hpp"
#include "mzv/xi.hpp"

// Exit codes: 0 success, 1 failed identity or cross-check, 2 invalid input,
// 3 tolerance not met (value still printed with its achieved bound).

namespace {

using ordered_json = nlohmann::ordered_json;

std::string fmt_double(double x) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

std::int64_t parse_int64(const std::string& s, const char* what) {
  std::int64_t v = 0;
  const char* last = s.data() + s.size();
  const auto [p, ec] = std::from_chars(s.data(), last, v);
  if (ec != std::errc() || p != last) {
    throw std::invalid_argument(std::string("invalid ") + what + " \"" + s + "\"");
  }
  return v;
}

double parse_double(const std::string& s, const char* what) {
  double v = 0.0;
  const char* last = s.data() + s.size();
  const auto [p, ec] = std::from_chars(s.data(), last, v);
  if (ec != std::errc() || p != last) {
    throw std::invalid_argument(std::string("invalid ") + what + " \"" + s + "\"");
  }
  return v;
}

// Flag wins over the MZV_MAX_TERMS environment variable, which wins over the
// library default.
std::int64_t resolve_max_terms(const std::string& flag) {
  std::int64_t v = mzv::NumericConfig{}.max_terms;
  if (!flag.empty()) {
    v = parse_int64(flag, "max-terms");
  } else if (const char* env = std::getenv("MZV_MAX_TERMS")) {
    v = parse_int64(env, "MZV_MAX_TERMS");
  }
  if (v <= 0) throw std::invalid_argument("max-terms must be positive");
  return v;
}

int emit_invalid(bool json_mode, const ordered_json& query, const std::string& msg) {
  if (json_mode) {
    const ordered_json rec{
        {"query", query}, {"value", ""}, {"error_bound", ""},
        {"status", "invalid-input"},     {"message", msg}};
    std::cout << rec.dump() << "\n";
  } else {
    std::cerr << "error: " << msg << "\n";
  }
  return 2;
}

int cmd_finite_zeta(bool json_mode, const std::string& index, const std::string& upper_str,
                    bool star) {
  const ordered_json query{{"command", "finite-zeta"},
                           {"index", index},
                           {"upper", upper_str},
                           {"star", star ? "true" : "false"}};
  try {
    const std::int64_t upper = parse_int64(upper_str, "upper limit");
    if (upper < 0) throw std::invalid_argument("upper limit must be >= 0");
    const mzv::Composition c = mzv::Composition::parse(index);
    const mzv::BigRational v =
        star ? mzv::zeta_star_finite(upper, c) : mzv::zeta_finite(upper, c);
    if (json_mode) {
      const ordered_json rec{
          {"query", query}, {"value", v.str()}, {"error_bound", "0"}, {"status", "ok"}};
      std::cout << rec.dump() << "\n";
    } else {
      std::cout << v.str() << "\n";
    }
    return 0;
  } catch (const std::exception& e) {
    return emit_invalid(json_mode, query, e.what());
  }
}

int cmd_stuffle(bool json_mode, const std::string& left, const std::string& right) {
  const ordered_json query{{"command", "stuffle"}, {"left", left}, {"right", right}};
  try {
    const mzv::StuffleExpansion product =
        mzv::stuffle_product(mzv::Composition::parse(left), mzv::Composition::parse(right));
    if (json_mode) {
      ordered_json terms = ordered_json::array();
      std::string canon;
      for (const auto& [f, mult] : product.terms()) {
        std::vector<std::string> parts;
        for (int p : f.parts()) parts.push_back(std::to_string(p));
        terms.push_back({{"parts", parts}, {"mult", std::to_string(mult)}});
        if (!canon.empty()) canon += " + ";
        if (mult != 1) canon += std::to_string(mult) + "*";
        canon += "(" + f.str() + ")";
      }
      const ordered_json rec{{"query", query},        {"value", canon}, {"terms", terms},
                             {"error_bound", "0"},    {"status", "ok"}};
      std::cout << rec.dump() << "\n";
    } else {
      ordered_json terms = ordered_json::array();
      for (const auto& [f, mult] : product.terms()) {
        terms.push_back({{"parts", f.parts()}, {"mult", mult}});
      }
      std::cout << terms.dump() << "\n";
    }
    return 0;
  } catch (const std::exception& e) {
    return emit_invalid(json_mode, query, e.what());
  }
}

int cmd_xi(bool json_mode, const std::string& index, const std::string& n_str,
           const std::string& route, const std::string& tol_str,
           const std::string& max_terms_str) {
  const ordered_json query{{"command", "xi"}, {"index", index},   {"n", n_str},
                           {"route", route},  {"tol", tol_str},   {"max_terms", max_terms_str}};
  try {
    const std::int64_t n = parse_int64(n_str, "n");
    const mzv::Composition c = mzv::Composition::parse(index);
    mzv::NumericConfig cfg;
    cfg.tol = parse_double(tol_str, "tol");
    cfg.max_terms = resolve_max_terms(max_terms_str);

    std::vector<mzv::RouteResult> rows;
    bool ran_cross = false;
    bool consistent = true;
    double max_gap = 0.0;
    double max_allowed = 0.0;
    if (route == "all") {
      mzv::XiCrossCheck cc = mzv::cross_check(c, n, cfg);
      rows = std::move(cc.routes);
      ran_cross = true;
      consistent = cc.consistent;
      max_gap = cc.max_gap;
      max_allowed = cc.max_allowed;
    } else if (route == "integral") {
      rows.push_back({"integral", mzv::xi_integral(c, n, cfg)});
    } else if (route == "series") {
      rows.push_back({"series", mzv::xi_series(c, n, cfg)});
    } else {
      rows.push_back({"stuffle", mzv::xi_stuffle_route(c, n, cfg)});
    }

    bool tol_met = true;
    for (const auto& row : rows) tol_met = tol_met && row.result.error_bound <= cfg.tol;
    const char* status = tol_met ? "ok" : "tolerance-not-met";

    if (json_mode) {
      ordered_json routes = ordered_json::array();
      std::size_t best = 0;
      for (std::size_t i = 0; i < rows.size(); ++i) {
        routes.push_back({{"route", rows[i].route},
                          {"value", fmt_double(rows[i].result.value)},
                          {"error_bound", fmt_double(rows[i].result.error_bound)},
                          {"status", rows[i].result.error_bound <= cfg.tol
                                         ? "ok"
                                         : "tolerance-not-met"}});
        if (rows[i].result.error_bound < rows[best].result.error_bound) best = i;
      }
      ordered_json rec{{"query", query},
                       {"value", fmt_double(rows[best].result.value)},
                       {"error_bound", fmt_double(rows[best].result.error_bound)},
                       {"status", status},
                       {"routes", routes}};
      if (ran_cross) {
        rec["cross_check"] = ordered_json{{"consistent", consistent ? "true" : "false"},
                                          {"max_gap", fmt_double(max_gap)},
                                          {"max_allowed", fmt_double(max_allowed)}};
      }
      std::cout << rec.dump() << "\n";
    } else {
      for (const auto& row : rows) {
        std::printf("%-9s %s +- %s\n", row.route.c_str(), fmt_double(row.result.value).c_str(),
                    fmt_double(row.result.error_bound).c_str());
      }
      if (ran_cross) {
        std::printf("cross-check %s: max gap %s, allowed %s\n", consistent ? "PASS" : "FAIL",
                    fmt_double(max_gap).c_str(), fmt_double(max_allowed).c_str());
      }
      if (!tol_met) {
        std::fprintf(stderr, "tolerance not met: requested %s\n", fmt_double(cfg.tol).c_str());
      }
    }
    if (!consistent) return 1;
    return tol_met ? 0 : 3;
  } catch (const std::exception& e) {
    return emit_invalid(json_mode, query, e.what());
  }
}

int cmd_verify(bool json_mode, const std::string& suite, const std::string& mw_str,
               const std::string& mu_str) {
  const ordered_json query{{"command", "verify"},
                           {"suite", suite},
                           {"max_weight", mw_str},
                           {"max_upper", mu_str}};
  try {
    const std::int64_t max_weight = parse_int64(mw_str, "max-weight");
    const std::int64_t max_upper = parse_int64(mu_str, "max-upper");
    if (max_weight < 0 || max_upper < 0) {
      throw std::invalid_argument("bounds must be >= 0");
    }
    mzv::NumericConfig cfg;
    cfg.max_terms = resolve_max_terms("");

    const auto want = [&](const char* s) { return suite == "all" || suite == s; };
    std::vector<mzv::SuiteResult> results;
    const auto timed = [&](auto&& fn) {
      const auto t0 = std::chrono::steady_clock::now();
      results.push_back(fn());
      const std::chrono::duration<double> dt = std::chrono::steady_clock::now() - t0;
      std::fprintf(stderr, "suite %s: %.2f s\n", results.back().suite.c_str(), dt.count());
    };
    if (want("binomial")) timed([&] { return mzv::run_binomial_suite(40, 6); });
    if (want("reduce")) timed([&] { return mzv::run_reduction_suite(5, 3, max_upper); });
    if (want("star")) timed([&] { return mzv::run_star_suite(5, 3, max_upper); });
    if (want("stuffle")) {
      timed([&] { return mzv::run_stuffle_suite(static_cast<int>(max_weight), max_upper); });
    }
    if (want("xi")) timed([&] { return mzv::run_xi_suite(max_upper, cfg); });

    std::int64_t cases = 0;
    std::int64_t failures = 0;
    for (auto& r : results) {
      cases += r.cases;
      failures += r.failures;
      std::sort(r.counterexamples.begin(), r.counterexamples.end(),
                [](const mzv::SuiteCase& a, const mzv::SuiteCase& b) { return a.key < b.key; });
    }

    if (json_mode) {
      ordered_json suites = ordered_json::array();
      for (const auto& r : results) {
        ordered_json ces = ordered_json::array();
        for (const auto& ce : r.counterexamples) {
          ces.push_back({{"key", ce.key}, {"detail", ce.detail}});
        }
        suites.push_back({{"suite", r.suite},
                          {"cases", std::to_string(r.cases)},
                          {"failures", std::to_string(r.failures)},
                          {"counterexamples", ces}});
      }
      const ordered_json rec{{"query", query},
                             {"cases", std::to_string(cases)},
                             {"failures", std::to_string(failures)},
                             {"status", failures == 0 ? "ok" : "verification-failed"},
                             {"suites", suites}};
      std::cout << rec.dump() << "\n";
    } else {
      for (const auto& r : results) {
        std::printf("suite %s: %lld cases, %lld failures\n", r.suite.c_str(),
                    static_cast<long long>(r.cases), static_cast<long long>(r.failures));
        for (const auto& ce : r.counterexamples) {
          std::printf("FAIL %s: %s\n", ce.key.c_str(), ce.detail.c_str());
        }
      }
      if (failures == 0) {
        std::printf("all %lld cases passed\n", static_cast<long long>(cases));
      } else {
        std::printf("%lld of %lld cases failed\n", static_cast<long long>(failures),
                    static_cast<long long>(cases));
      }
    }
    return failures == 0 ? 0 : 1;
  } catch (const std::exception& e) {
    return emit_invalid(json_mode, query, e.what());
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"multiple zeta values: exact finite sums, certified numerics, identity checks"};
  app.require_subcommand(1);
  bool json_mode = false;
  app.add_flag("--json", json_mode, "machine-readable record on stdout; numbers as strings");

  auto* fz = app.add_subcommand("finite-zeta", "exact zeta_N or zeta*_N of an index tuple");
  std::string fz_index;
  std::string fz_upper;
  bool fz_star = false;
  fz->add_option("--index", fz_index, "comma-separated parts, \"\" for the empty tuple")
      ->required();
  fz->add_option("--upper", fz_upper, "upper summation limit N >= 0")->required();
  fz->add_flag("--star", fz_star, "non-strict (star) variant");

  auto* st = app.add_subcommand("stuffle", "stuffle product of two index tuples");
  std::string st_left;
  std::string st_right;
  st->add_option("--left", st_left, "left tuple")->required();
  st->add_option("--right", st_right, "right tuple")->required();

  auto* xi = app.add_subcommand("xi", "xi_{k1,...,kr}(n) by independent routes");
  std::string xi_index;
  std::string xi_n;
  std::string xi_route{"all"};
  std::string xi_tol{"1e-6"};
  std::string xi_max_terms;
  xi->add_option("--index", xi_index, "index tuple k1,...,kr")->required();
  xi->add_option("--n", xi_n, "argument n >= 1")->required();
  xi->add_option("--route", xi_route, "evaluation route")
      ->check(CLI::IsMember({"integral", "series", "stuffle", "all"}));
  xi->add_option("--tol", xi_tol, "target absolute error (default 1e-6)");
  xi->add_option("--max-terms", xi_max_terms, "series length cap, overrides MZV_MAX_TERMS");

  auto* vf = app.add_subcommand("verify", "exhaustive identity suites over bounded ranges");
  std::string vf_suite{"all"};
  std::string vf_mw{"7"};
  std::string vf_mu{"20"};
  vf->add_option("--suite", vf_suite, "which suite to run")
      ->check(CLI::IsMember({"stuffle", "star", "reduce", "binomial", "xi", "all"}));
  vf->add_option("--max-weight", vf_mw, "stuffle weight bound (default 7)");
  vf->add_option("--max-upper", vf_mu, "upper-limit bound (default 20)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  if (fz->parsed()) return cmd_finite_zeta(json_mode, fz_index, fz_upper, fz_star);
  if (st->parsed()) return cmd_stuffle(json_mode, st_left, st_right);
  if (xi->parsed()) {
    return cmd_xi(json_mode, xi_index, xi_n, xi_route, xi_tol, xi_max_terms);
  }
  return cmd_verify(json_mode, vf_suite, vf_mw, vf_mu);
}

#pragma once

#include <chrono>
#include <cmath>
#include <cstdint>
#include <functional>
#include <iomanip>
#include <random>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "turan/constructions.hpp"
#include "turan/core.hpp"
#include "turan/density_function.hpp"
#include "turan/extremal.hpp"
#include "turan/io.hpp"
#include "turan/lagrangian.hpp"
#include "turan/symmetrization.hpp"

namespace turan {

inline constexpr const char* kToolkitVersion = "0.1.0";

enum class CheckStatus { pass, fail, skipped };

inline std::string to_string(CheckStatus s) {
  switch (s) {
    case CheckStatus::pass: return "pass";
    case CheckStatus::fail: return "fail";
    default: return "skipped";
  }
}

struct CheckResult {
  std::string name;
  std::string suite;
  CheckStatus status = CheckStatus::skipped;
  Json measured;
  Json expected;
  std::string tolerance;
  std::string detail;
  double elapsed_seconds = 0.0;
};

using TuranBuilder = std::function<PartitionedHypergraph(std::size_t, unsigned, std::size_t)>;

struct VerifyOptions {
  std::string suite = "all";
  std::uint64_t seed = 0;
  /// Replaceable for mutation testing of the turan-size check.
  TuranBuilder turan_builder = [](std::size_t n, unsigned r, std::size_t l) {
    return turan_hypergraph(n, r, l);
  };
};

struct VerifyReport {
  std::string suite;
  std::uint64_t seed = 0;
  std::vector<CheckResult> checks;

  [[nodiscard]] std::size_t count(CheckStatus s) const {
    return static_cast<std::size_t>(
        std::count_if(checks.begin(), checks.end(), [&](const CheckResult& c) { return c.status == s; }));
  }
  [[nodiscard]] bool ok() const { return count(CheckStatus::fail) == 0; }

  /// Elapsed times are left out unless asked for, so repeated runs with one
  /// seed produce identical bytes.
  [[nodiscard]] Json to_json(bool with_timing = false) const {
    Json list = Json::array();
    for (const auto& c : checks) {
      Json j{{"name", c.name},
             {"suite", c.suite},
             {"status", to_string(c.status)},
             {"measured", c.measured},
             {"expected", c.expected},
             {"tolerance", c.tolerance},
             {"detail", c.detail}};
      if (with_timing) j["elapsed_seconds"] = c.elapsed_seconds;
      list.push_back(std::move(j));
    }
    return Json{{"version", kToolkitVersion},
                {"suite", suite},
                {"seed", seed},
                {"summary",
                 {{"pass", count(CheckStatus::pass)},
                  {"fail", count(CheckStatus::fail)},
                  {"skipped", count(CheckStatus::skipped)}}},
                {"checks", list}};
  }

  [[nodiscard]] std::string table() const {
    std::size_t w = 4;
    for (const auto& c : checks) w = std::max(w, c.name.size());
    std::ostringstream out;
    out << std::left << std::setw(static_cast<int>(w)) << "check" << "  status   time(s)  detail\n";
    for (const auto& c : checks) {
      out << std::left << std::setw(static_cast<int>(w)) << c.name << "  " << std::setw(7)
          << to_string(c.status) << "  " << std::right << std::setw(7) << std::fixed
          << std::setprecision(2) << c.elapsed_seconds << "  " << c.detail << "\n";
    }
    out << count(CheckStatus::pass) << " passed, " << count(CheckStatus::fail) << " failed, "
        << count(CheckStatus::skipped) << " skipped\n";
    return out.str();
  }
};

namespace detail {

using Clock = std::chrono::steady_clock;

inline double seconds_since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

inline std::uint64_t instance_seed(std::uint64_t seed, std::string_view tag, std::uint64_t i) {
  std::uint64_t h = 1469598103934665603ULL;
  for (char c : tag) h = (h ^ static_cast<unsigned char>(c)) * 1099511628211ULL;
  return splitmix64(splitmix64(seed) ^ h ^ (i * 0x9E3779B97F4A7C15ULL));
}

inline std::size_t uniform_int(std::mt19937_64& rng, std::size_t lo, std::size_t hi) {
  return std::uniform_int_distribution<std::size_t>(lo, hi)(rng);
}

inline double uniform_real(std::mt19937_64& rng, double lo, double hi) {
  return std::uniform_real_distribution<double>(lo, hi)(rng);
}

/// Random graph that is free of `pred`: edges offered in random order up to
/// a target size.
inline Hypergraph random_free_graph(std::size_t n, unsigned r, const ForbiddenPredicate& pred,
                                    std::size_t target, std::mt19937_64& rng) {
  auto order = all_subsets(n, r);
  std::shuffle(order.begin(), order.end(), rng);
  Hypergraph g(n, r);
  for (const auto& e : order) {
    if (g.edge_count() >= target) break;
    Hypergraph h = g.with_edge(e);
    if (!pred.violated_through(h, e)) g = std::move(h);
  }
  return g;
}

/// Seeded random 2- and 3-graphs on at most 8 vertices.
inline std::vector<Hypergraph> symmetrization_corpus(std::uint64_t seed) {
  std::vector<Hypergraph> out;
  for (std::uint64_t i = 0; i < 200; ++i) {
    std::mt19937_64 rng(instance_seed(seed, "symmetrization-corpus", i));
    const unsigned r = i % 2 == 0 ? 2 : 3;
    const std::size_t n = uniform_int(rng, r + 1, 8);
    const double density = uniform_real(rng, 0.1, 0.7);
    out.push_back(random_hypergraph(n, r, density, rng()));
  }
  return out;
}

inline Json rational_json(const Rational& q) {
  return std::to_string(q.numerator()) + "/" + std::to_string(q.denominator());
}

// ---------------------------------------------------------------------------
// Individual checks. Each fills status, measured, expected, tolerance, detail.
// ---------------------------------------------------------------------------

inline void check_mantel(CheckResult& c, const VerifyOptions&) {
  c.tolerance = "exact; each n within 10 s";
  const auto k3 = ForbiddenPredicate::subgraph(complete_hypergraph(3, 2));
  bool ok = true;
  c.measured = Json::object();
  c.expected = Json::object();
  for (std::size_t n = 3; n <= 7; ++n) {
    const auto t0 = Clock::now();
    const auto res = brute_force_ex(n, 2, k3, SearchBudget{0, 10.0});
    const double secs = seconds_since(t0);
    const std::size_t want = (n / 2) * ((n + 1) / 2);
    c.measured[std::to_string(n)] = res.value;
    c.expected[std::to_string(n)] = want;
    const bool honest = res.witness.edge_count() == res.value && !k3.violated(res.witness);
    if (!res.exact || res.value != want || !honest || secs > 10.0) {
      ok = false;
      c.detail += "n=" + std::to_string(n) + " mismatch; ";
    }
  }
  c.status = ok ? CheckStatus::pass : CheckStatus::fail;
  if (ok) c.detail = "ex(n, K3) = floor(n/2)ceil(n/2) for n = 3..7";
}

inline void check_cancellative(CheckResult& c, const VerifyOptions&) {
  c.tolerance = "exact; n=6 within 300 s";
  const auto pred = ForbiddenPredicate::cancellative(3);
  bool ok = true;
  c.measured = Json::object();
  c.expected = Json::object();
  for (std::size_t n : {5u, 6u}) {
    const auto t0 = Clock::now();
    const auto res = brute_force_ex(n, 3, pred, SearchBudget{0, 300.0});
    const double secs = seconds_since(t0);
    const auto want = turan_edge_count(n, 3, 3);
    c.measured[std::to_string(n)] = res.value;
    c.expected[std::to_string(n)] = want;
    const bool honest = res.witness.edge_count() == res.value && is_cancellative(res.witness);
    if (!res.exact || res.value != want || !honest || secs > 300.0) {
      ok = false;
      c.detail += "n=" + std::to_string(n) + " mismatch; ";
    }
  }
  c.status = ok ? CheckStatus::pass : CheckStatus::fail;
  if (ok) c.detail = "largest cancellative 3-graph equals |T_3(n,3)| for n = 5, 6";
}

inline void check_sigma_lower_bound(CheckResult& c, const VerifyOptions& opts) {
  c.tolerance = "exact predicate; within 10 s";
  const auto pred = ForbiddenPredicate::sigma(3);
  const auto t0 = Clock::now();
  bool ok = true;
  c.measured = Json::object();
  c.expected = Json::object();
  for (std::size_t n = 3; n <= 9; ++n) {
    const Hypergraph t = turan_hypergraph(n, 3, 3).graph;
    const bool free = !contains_sigma_member(t);
    SearchResult res;
    if (binomial(n, 3) <= 20) {
      res = brute_force_ex(n, 3, pred, SearchBudget{0, 5.0});
    } else {
      LocalSearchOptions lo;
      lo.seed = instance_seed(opts.seed, "sigma-lower-bound", n);
      lo.iters = 20;
      lo.start = t;
      res = local_search_lower(n, 3, pred, lo);
    }
    const bool honest = !contains_sigma_member(res.witness) && res.witness.edge_count() == res.value;
    c.measured[std::to_string(n)] = Json{{"turan_sigma_free", free}, {"search_value", res.value}};
    c.expected[std::to_string(n)] = Json{{"turan_sigma_free", true}, {"search_value_at_least", t.edge_count()}};
    if (!free || res.value < t.edge_count() || !honest) {
      ok = false;
      c.detail += "n=" + std::to_string(n) + " failed; ";
    }
  }
  if (seconds_since(t0) > 10.0) {
    ok = false;
    c.detail += "time limit exceeded; ";
  }
  c.status = ok ? CheckStatus::pass : CheckStatus::fail;
  if (ok) c.detail = "T_3(n,3) is Sigma_3-free and searches reach |T_3(n,3)| for n = 3..9";
}

inline void check_turan_size(CheckResult& c, const VerifyOptions& opts) {
  c.tolerance = "exact";
  std::size_t mismatches = 0;
  std::string first;
  auto compare = [&](std::size_t n, unsigned r, std::uint64_t want) {
    const auto got = opts.turan_builder(n, r, r).graph.edge_count();
    if (got != want) {
      if (!mismatches) first = "T_" + std::to_string(r) + "(" + std::to_string(n) + ") has " +
                               std::to_string(got) + " edges, expected " + std::to_string(want);
      ++mismatches;
    }
  };
  std::size_t cases = 0;
  for (std::size_t n = 3; n <= 30; ++n, ++cases) compare(n, 3, (n / 3) * ((n + 1) / 3) * ((n + 2) / 3));
  for (unsigned r : {3u, 4u}) {
    for (std::size_t n = r; n <= 30; ++n, ++cases) {
      std::uint64_t want = 1;
      for (unsigned i = 1; i <= r; ++i) want *= (n + i - 1) / r;
      compare(n, r, want);
    }
  }
  c.measured = Json{{"cases", cases}, {"mismatches", mismatches}};
  c.expected = Json{{"mismatches", 0}};
  c.status = mismatches == 0 ? CheckStatus::pass : CheckStatus::fail;
  c.detail = mismatches == 0 ? "floor-product formulas hold for n <= 30" : first;
}

inline void check_motzkin_straus(CheckResult& c, const VerifyOptions& opts) {
  c.tolerance = "1e-6; within 60 s";
  const auto t0 = Clock::now();
  double worst = 0.0;
  for (std::uint64_t i = 0; i < 30; ++i) {
    std::mt19937_64 rng(instance_seed(opts.seed, "motzkin-straus", i));
    const std::size_t n = uniform_int(rng, 3, 9);
    const Hypergraph g = random_hypergraph(n, 2, uniform_real(rng, 0.2, 0.9), rng());
    LagrangianOptions lo;
    lo.restarts = 50;
    lo.seed = rng();
    const double err = std::abs(lagrangian(g, lo).value - motzkin_straus_reference(g));
    worst = std::max(worst, err);
  }
  const double secs = seconds_since(t0);
  c.measured = Json{{"max_abs_error", worst}};
  c.expected = Json{{"max_abs_error", 0.0}};
  c.status = worst <= 1e-6 && secs <= 60.0 ? CheckStatus::pass : CheckStatus::fail;
  c.detail = "30 random 2-graphs on <= 9 vertices against 1 - 1/omega";
}

inline void check_complete_lagrangian(CheckResult& c, const VerifyOptions& opts) {
  c.tolerance = "1e-8; within 30 s";
  const auto t0 = Clock::now();
  const std::vector<std::pair<std::size_t, unsigned>> cases{{3, 2}, {4, 2}, {4, 3}, {5, 3}, {6, 3}, {5, 4}};
  double worst = 0.0;
  c.measured = Json::object();
  c.expected = Json::object();
  for (auto [m, r] : cases) {
    LagrangianOptions lo;
    lo.seed = instance_seed(opts.seed, "complete-lagrangian", m * 16 + r);
    const double got = lagrangian(complete_hypergraph(m, r), lo).value;
    const double want = static_cast<double>(falling_ratio(static_cast<std::int64_t>(m), r));
    const std::string key = "K_" + std::to_string(m) + "^(" + std::to_string(r) + ")";
    c.measured[key] = got;
    c.expected[key] = want;
    worst = std::max(worst, std::abs(got - want));
  }
  c.status = worst <= 1e-8 && seconds_since(t0) <= 30.0 ? CheckStatus::pass : CheckStatus::fail;
  c.detail = "max abs error " + std::to_string(worst);
}

inline void check_fr_mr(CheckResult& c, const VerifyOptions&) {
  c.tolerance = "exact rational identity; M_r within 1e-9";
  std::size_t mismatches = 0;
  for (unsigned r = 2; r <= 5; ++r) {
    for (int k = 3; k <= 8; ++k) {
      const BigRational lhs = BigRational(k - 2) * f_r_exact(r, BigRational(k));
      const BigRational rhs = falling_ratio(k + static_cast<int>(r) - 3, r);
      if (lhs != rhs) ++mismatches;
    }
  }
  const double m2 = compute_Mr(2), m3 = compute_Mr(3), m4 = compute_Mr(4);
  const double e4 = std::abs(m4 - (2.0 + std::sqrt(3.0)));
  c.measured = Json{{"identity_mismatches", mismatches}, {"M_2", m2}, {"M_3", m3}, {"M_4", m4}};
  c.expected = Json{{"identity_mismatches", 0}, {"M_2", 2.0}, {"M_3", 2.0}, {"M_4", 2.0 + std::sqrt(3.0)}};
  const bool ok = mismatches == 0 && std::abs(m2 - 2.0) <= 1e-9 && std::abs(m3 - 2.0) <= 1e-9 && e4 <= 1e-9;
  c.status = ok ? CheckStatus::pass : CheckStatus::fail;
  c.detail = "(k-2) f_r(k) = [k+r-3]_r/(k+r-3)^r for k = 3..8, r = 2..5";
}

inline void check_gradient(CheckResult& c, const VerifyOptions& opts) {
  c.tolerance = "identity 1e-12; finite differences 1e-6; within 30 s";
  const auto t0 = Clock::now();
  double identity = 0.0, max_rule = 0.0, fd = 0.0;
  for (std::uint64_t i = 0; i < 100; ++i) {
    std::mt19937_64 rng(instance_seed(opts.seed, "gradient-identities", i));
    const unsigned r = static_cast<unsigned>(uniform_int(rng, 2, 4));
    const std::size_t n = uniform_int(rng, r, 9);
    const Hypergraph g = random_hypergraph(n, r, uniform_real(rng, 0.2, 0.8), rng());
    std::exponential_distribution<double> expo(1.0);
    std::vector<double> w(n);
    for (auto& v : w) v = expo(rng) + 1e-3;
    const WeightVector x(w);
    const double p = poly_value(g, x);
    const auto lam = grad(g, x);
    double weighted = 0.0, top = lam.empty() ? 0.0 : lam[0];
    for (std::size_t v = 0; v < n; ++v) {
      weighted += lam[v] * x[v];
      top = std::max(top, lam[v]);
    }
    identity = std::max(identity, std::abs(p - weighted / r));
    max_rule = std::max(max_rule, r * p - top);
    const double h = 1e-5;
    for (std::size_t v = 0; v < n; ++v) {
      auto up = x.values(), down = x.values();
      up[v] += h;
      down[v] -= h;
      const double diff = (poly_value_raw(g, up) - poly_value_raw(g, down)) / (2 * h);
      fd = std::max(fd, std::abs(diff - lam[v]));
    }
  }
  c.measured = Json{{"weighted_sum_error", identity}, {"max_rule_excess", max_rule}, {"finite_difference_error", fd}};
  c.expected = Json{{"weighted_sum_error", 0.0}, {"max_rule_excess", 0.0}, {"finite_difference_error", 0.0}};
  const bool ok = identity <= 1e-12 && max_rule <= 1e-12 && fd <= 1e-6 && seconds_since(t0) <= 30.0;
  c.status = ok ? CheckStatus::pass : CheckStatus::fail;
  c.detail = "100 random (G, x) with r in {2,3,4}";
}

inline void check_symmetrization(CheckResult& c, const VerifyOptions& opts) {
  c.tolerance = "exact; within 300 s";
  const auto t0 = Clock::now();
  std::size_t monotone_fail = 0, cover_fail = 0, blowup_fail = 0, free_inputs = 0, freeness_fail = 0;
  for (const auto& g : symmetrization_corpus(opts.seed)) {
    const auto run = run_plain(g);
    const auto states = replay_states(g, run.trace);
    for (std::size_t i = 0; i + 1 < states.size(); ++i)
      if (states[i + 1].edge_count() < states[i].edge_count()) ++monotone_fail;
    const auto reps = core_representatives(run.result);
    if (!covers_pairs(reps.quotient)) ++cover_fail;
    const auto perm = class_order_relabeling(reps.classes, run.result.n());
    if (relabel(run.result, perm, run.result.n()) != blowup(reps.quotient, reps.sizes)) ++blowup_fail;
    const auto pred = ForbiddenPredicate::family(complete_hypergraph(g.r(), g.r()), 4);
    if (!pred.violated(g)) {
      ++free_inputs;
      for (const auto& s : states)
        if (pred.violated(s)) {
          ++freeness_fail;
          break;
        }
    }
  }
  c.measured = Json{{"monotonicity_violations", monotone_fail},
                    {"quotients_not_covering", cover_fail},
                    {"blowup_mismatches", blowup_fail},
                    {"family_free_inputs", free_inputs},
                    {"freeness_lost", freeness_fail}};
  c.expected = Json{{"monotonicity_violations", 0},
                    {"quotients_not_covering", 0},
                    {"blowup_mismatches", 0},
                    {"freeness_lost", 0}};
  const bool ok = monotone_fail + cover_fail + blowup_fail + freeness_fail == 0 && free_inputs > 0 &&
                  seconds_since(t0) <= 300.0;
  c.status = ok ? CheckStatus::pass : CheckStatus::fail;
  c.detail = "200 random graphs, r in {2,3}, n <= 8; " + std::to_string(free_inputs) + " family-free inputs";
}

inline void check_cleaning(CheckResult& c, const VerifyOptions& opts) {
  c.tolerance = "exact; within 300 s";
  const auto t0 = Clock::now();
  const std::vector<Rational> alphas{Rational(1, 4), Rational(1, 2), Rational(3, 4)};
  std::size_t runs = 0, not_dense = 0, replay_fail = 0, nonempty = 0;
  for (const auto& g : symmetrization_corpus(opts.seed)) {
    for (const auto& a : alphas) {
      ++runs;
      const auto run = run_with_cleaning(g, a);
      if (!run.vertices.empty()) {
        ++nonempty;
        if (!is_alpha_dense(run.result, run.vertices, a)) ++not_dense;
      }
      if (replay(g, run.trace) != run.result) ++replay_fail;
    }
  }
  c.measured = Json{{"runs", runs}, {"nonempty_outputs", nonempty}, {"not_alpha_dense", not_dense},
                    {"replay_mismatches", replay_fail}};
  c.expected = Json{{"not_alpha_dense", 0}, {"replay_mismatches", 0}};
  c.status = not_dense + replay_fail == 0 && seconds_since(t0) <= 300.0 ? CheckStatus::pass : CheckStatus::fail;
  c.detail = "alpha in {1/4, 1/2, 3/4} over the symmetrization corpus";
}

inline void check_frankl(CheckResult& c, const VerifyOptions& opts) {
  c.tolerance = "exact inequality; within 60 s";
  const auto t0 = Clock::now();
  std::size_t violations = 0;
  double tightest = 0.0;
  for (std::uint64_t i = 0; i < 200; ++i) {
    std::mt19937_64 rng(instance_seed(opts.seed, "frankl-matching", i));
    const std::size_t n = uniform_int(rng, 3, 9);
    const Hypergraph g = random_hypergraph(n, 3, uniform_real(rng, 0.05, 0.9), rng());
    const std::size_t nu = max_matching(g);
    const std::uint64_t bound = nu * binomial(n, 2);
    if (g.edge_count() > bound) ++violations;
    if (bound > 0) tightest = std::max(tightest, static_cast<double>(g.edge_count()) / static_cast<double>(bound));
  }
  c.measured = Json{{"violations", violations}, {"max_edges_over_bound", tightest}};
  c.expected = Json{{"violations", 0}};
  c.status = violations == 0 && seconds_since(t0) <= 60.0 ? CheckStatus::pass : CheckStatus::fail;
  c.detail = "|E| <= nu * C(n,2) on 200 random 3-graphs, n <= 9";
}

inline void check_kernel_clean(CheckResult& c, const VerifyOptions& opts) {
  c.tolerance = "exact; within 60 s";
  const auto t0 = Clock::now();
  std::size_t post_fail = 0, loss_fail = 0, idem_fail = 0, instances = 0;
  for (std::uint64_t i = 0; i < 60; ++i) {
    std::mt19937_64 rng(instance_seed(opts.seed, "kernel-clean", i));
    const unsigned r = static_cast<unsigned>(uniform_int(rng, 3, 4));
    const std::size_t n = uniform_int(rng, r + 1, 8);
    const unsigned d = static_cast<unsigned>(uniform_int(rng, 1, r - 1));
    const std::size_t p = uniform_int(rng, 1, 3);
    const Hypergraph g = random_hypergraph(n, r, uniform_real(rng, 0.2, 0.95), rng());
    const Hypergraph out = kernel_clean(g, p, d);
    ++instances;
    for (const auto& ds : all_subsets(n, d)) {
      const VertexSet dset(ds);
      if (set_degree(out, dset) > 0 && kernel_degree(out, dset) <= p) {
        ++post_fail;
        break;
      }
    }
    const std::uint64_t allowed = p * binomial(n, d) * binomial(n, r - d - 1);
    if (g.edge_count() > out.edge_count() + allowed) ++loss_fail;
    if (kernel_clean(out, p, d) != out) ++idem_fail;
  }
  c.measured = Json{{"instances", instances}, {"postcondition_failures", post_fail},
                    {"edge_loss_violations", loss_fail}, {"not_idempotent", idem_fail}};
  c.expected = Json{{"postcondition_failures", 0}, {"edge_loss_violations", 0}, {"not_idempotent", 0}};
  const bool ok = post_fail + loss_fail + idem_fail == 0 && seconds_since(t0) <= 60.0;
  c.status = ok ? CheckStatus::pass : CheckStatus::fail;
  c.detail = "every d-set of nonzero degree has kernel degree > p";
}

inline void check_family_free(CheckResult& c, const VerifyOptions& opts) {
  c.tolerance = "exact; within 300 s";
  const auto t0 = Clock::now();
  const Hypergraph edge = complete_hypergraph(3, 3);
  const Hypergraph h = expanded_clique_with_embedded(edge, 4).graph;
  const auto h_free = ForbiddenPredicate::subgraph(h);
  std::size_t members_left = 0, loss_fail = 0, not_subgraph = 0, nonempty = 0;
  for (std::uint64_t i = 0; i < 50; ++i) {
    std::mt19937_64 rng(instance_seed(opts.seed, "family-free-extraction", i));
    const std::size_t n = uniform_int(rng, 4, 8);
    const std::size_t target = uniform_int(rng, 1, binomial(n, 3));
    const Hypergraph g = random_free_graph(n, 3, h_free, target, rng);
    const auto res = family_free_subgraph(g, edge, 3);
    if (res.diagnostic) ++members_left;
    if (g.edge_count() > res.graph.edge_count() + res.p * binomial(n, 0) * binomial(n, 2)) ++loss_fail;
    for (const auto& e : res.graph.edges())
      if (!g.has_edge(e)) {
        ++not_subgraph;
        break;
      }
    if (!res.graph.empty()) ++nonempty;
  }
  c.measured = Json{{"family_members_left", members_left}, {"edge_loss_violations", loss_fail},
                    {"not_subgraph", not_subgraph}, {"nonempty_outputs", nonempty}};
  c.expected = Json{{"family_members_left", 0}, {"edge_loss_violations", 0}, {"not_subgraph", 0}};
  const bool ok = members_left + loss_fail + not_subgraph == 0 && seconds_since(t0) <= 300.0;
  c.status = ok ? CheckStatus::pass : CheckStatus::fail;
  c.detail = "50 random H^e_4-free 3-graphs, n <= 8";
}

inline void check_blowup_bound(CheckResult& c, const VerifyOptions& opts) {
  c.tolerance = "slack 1e-6 n^3; within 120 s";
  const auto t0 = Clock::now();
  const auto f_free = ForbiddenPredicate::subgraph(enlargement(star_graph(3), 3));
  double worst = -1.0;
  std::size_t violations = 0;
  for (std::uint64_t i = 0; i < 20; ++i) {
    std::mt19937_64 rng(instance_seed(opts.seed, "blowup-bound", i));
    const std::size_t nl = uniform_int(rng, 3, 6);
    const Hypergraph l = random_free_graph(nl, 3, f_free, binomial(nl, 3), rng);
    std::vector<std::size_t> sizes(nl);
    for (auto& s : sizes) s = uniform_int(rng, 1, 30 / nl);
    std::size_t n = 0;
    for (auto s : sizes) n += s;
    LagrangianOptions lo;
    lo.seed = rng();
    const double lam = lagrangian(l, lo).value;
    const double n3 = static_cast<double>(n) * n * n;
    const double edges = static_cast<double>(blowup(l, sizes).edge_count());
    const double excess = (edges - lam * n3 / 6.0) / n3;
    worst = std::max(worst, excess);
    if (excess > 1e-6) ++violations;
  }
  c.measured = Json{{"violations", violations}, {"max_excess_over_n3", worst}};
  c.expected = Json{{"violations", 0}};
  c.status = violations == 0 && seconds_since(t0) <= 120.0 ? CheckStatus::pass : CheckStatus::fail;
  c.detail = "|blowup(L)| <= lambda(L) n^3/3! for 20 random F-free L";
}

inline void check_stability(CheckResult& c, const VerifyOptions& opts) {
  c.tolerance = "support size <= k+r-3 at eps = 0.01; within 30 s";
  const auto t0 = Clock::now();
  bool ok = true;
  c.measured = Json::object();
  c.expected = Json::object();
  for (auto [k, r] : std::vector<std::pair<std::size_t, unsigned>>{{3, 3}, {4, 3}}) {
    const std::size_t m = k + r - 3;
    const Hypergraph g = complete_hypergraph(m, r).with_vertex_count(m + 3);
    LagrangianOptions lo;
    lo.seed = instance_seed(opts.seed, "stability-probe", k);
    const auto est = lagrangian(g, lo);
    const auto heavy = stability_probe(est.weights, 0.01);
    const std::string key = "(k=" + std::to_string(k) + ",r=" + std::to_string(r) + ")";
    c.measured[key] = Json{{"concentration_set_size", heavy.size()}, {"converged", est.converged}};
    c.expected[key] = Json{{"concentration_set_size_at_most", m}, {"converged", true}};
    if (!est.converged || heavy.size() > m) ok = false;
  }
  c.status = ok && seconds_since(t0) <= 30.0 ? CheckStatus::pass : CheckStatus::fail;
  c.detail = "optimal weights of K_{k+r-3}^(r) plus isolated vertices";
}

struct CheckDef {
  const char* name;
  const char* suite;
  void (*run)(CheckResult&, const VerifyOptions&);
};

inline const std::vector<CheckDef>& check_registry() {
  static const std::vector<CheckDef> defs{
      {"blowup-bound", "lagrangian", check_blowup_bound},
      {"cancellative-exact", "extremal", check_cancellative},
      {"cleaning-contract", "symmetrization", check_cleaning},
      {"complete-lagrangian", "lagrangian", check_complete_lagrangian},
      {"family-free-extraction", "extremal", check_family_free},
      {"fr-mr-closed-forms", "lagrangian", check_fr_mr},
      {"frankl-matching", "core", check_frankl},
      {"gradient-identities", "lagrangian", check_gradient},
      {"kernel-clean", "extremal", check_kernel_clean},
      {"mantel-exact", "extremal", check_mantel},
      {"motzkin-straus", "lagrangian", check_motzkin_straus},
      {"sigma-lower-bound", "core", check_sigma_lower_bound},
      {"stability-probe", "lagrangian", check_stability},
      {"symmetrization-invariants", "symmetrization", check_symmetrization},
      {"turan-size", "core", check_turan_size},
  };
  return defs;
}

}  // namespace detail

inline std::vector<std::string> verify_suites() {
  return {"all", "core", "lagrangian", "symmetrization", "extremal"};
}

inline std::vector<std::string> verify_check_names() {
  std::vector<std::string> out;
  for (const auto& d : detail::check_registry()) out.emplace_back(d.name);
  return out;
}

/// Runs one named check; exceptions become failures.
inline CheckResult run_check(const std::string& name, const VerifyOptions& opts = {}) {
  for (const auto& d : detail::check_registry()) {
    if (name != d.name) continue;
    CheckResult c;
    c.name = d.name;
    c.suite = d.suite;
    const auto t0 = detail::Clock::now();
    try {
      d.run(c, opts);
    } catch (const std::exception& e) {
      c.status = CheckStatus::fail;
      c.detail = std::string("exception: ") + e.what();
    }
    c.elapsed_seconds = detail::seconds_since(t0);
    return c;
  }
  throw InvalidArgument("unknown check '" + name + "'");
}

/// Runs every check of the suite in name order.
inline VerifyReport run_verify(const VerifyOptions& opts = {}) {
  const auto suites = verify_suites();
  if (std::find(suites.begin(), suites.end(), opts.suite) == suites.end())
    throw InvalidArgument("unknown suite '" + opts.suite + "'");
  VerifyReport report;
  report.suite = opts.suite;
  report.seed = opts.seed;
  for (const auto& d : detail::check_registry())
    if (opts.suite == "all" || opts.suite == d.suite) report.checks.push_back(run_check(d.name, opts));
  return report;
}

}  // namespace turan

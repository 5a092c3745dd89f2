#include <fstream>
#include <iostream>
#include <string>

#include "CLI11.hpp"

#include "turan/core.hpp"
#include "turan/extremal.hpp"
#include "turan/io.hpp"
#include "turan/lagrangian.hpp"
#include "turan/symmetrization.hpp"
#include "turan/verify.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitVerifyFailed = 1;
constexpr int kExitUsage = 2;
constexpr int kExitBudget = 3;

using turan::Json;

void emit(const std::string& text, const std::string& path) {
  if (path.empty() || path == "-") {
    std::cout << text;
    return;
  }
  std::ofstream out(path);
  if (!out) throw turan::InvalidArgument("cannot write '" + path + "'");
  out << text;
}

turan::Rational parse_fraction(const std::string& s) {
  const auto slash = s.find('/');
  try {
    if (slash == std::string::npos) return turan::Rational(std::stoll(s));
    return turan::Rational(std::stoll(s.substr(0, slash)), std::stoll(s.substr(slash + 1)));
  } catch (const std::exception&) {
    throw turan::InvalidArgument("expected a fraction P/Q, got '" + s + "'");
  }
}

int cmd_construct(const std::string& spec, const std::string& out) {
  emit(turan::serialize_hypergraph(turan::build_construction(spec)), out);
  return kExitOk;
}

int cmd_info(const std::string& file, bool json) {
  const auto g = turan::read_hypergraph_file(file);
  const auto deg = g.degrees();
  std::size_t dmin = deg.empty() ? 0 : *std::min_element(deg.begin(), deg.end());
  std::size_t dmax = deg.empty() ? 0 : *std::max_element(deg.begin(), deg.end());
  const double mean = g.n() ? static_cast<double>(g.edge_count() * g.r()) / static_cast<double>(g.n()) : 0.0;
  Json j{{"n", g.n()}, {"r", g.r()}, {"edges", g.edge_count()}, {"covers_pairs", turan::covers_pairs(g)},
         {"degree", {{"min", dmin}, {"max", dmax}, {"mean", mean}}}};
  if (json) {
    std::cout << j.dump(2) << "\n";
  } else {
    std::cout << "n             " << g.n() << "\n"
              << "r             " << g.r() << "\n"
              << "edges         " << g.edge_count() << "\n"
              << "covers pairs  " << (turan::covers_pairs(g) ? "yes" : "no") << "\n"
              << "degree        min " << dmin << ", max " << dmax << ", mean " << mean << "\n";
  }
  return kExitOk;
}

int cmd_lagrangian(const std::string& file, std::optional<double> beta, std::size_t restarts,
                   std::uint64_t seed, bool json) {
  const auto g = turan::read_hypergraph_file(file);
  turan::LagrangianOptions opts;
  opts.restarts = restarts;
  opts.seed = seed;
  Json j;
  if (beta) {
    const auto c = turan::lagrangian_constrained(g, *beta, opts);
    j = turan::to_json(c.estimate);
    j["beta"] = *beta;
    j["cap_binds"] = c.cap_binds;
    j["equality_value"] = c.equality_value;
  } else {
    j = turan::to_json(turan::lagrangian(g, opts));
  }
  if (json) {
    std::cout << j.dump(2) << "\n";
  } else {
    std::cout << "lambda        " << j["value"].get<double>() << "\n"
              << "certificate   " << j["certificate"].get<std::string>() << "\n"
              << "converged     " << (j["converged"].get<bool>() ? "yes" : "no") << "\n"
              << "residual      " << j["gradient_residual"].get<double>() << "\n";
    if (beta) std::cout << "equality      " << j["equality_value"].get<double>() << "\n";
  }
  return kExitOk;
}

int cmd_symmetrize(const std::string& file, const std::string& alpha, const std::string& trace_path,
                   const std::string& out, bool json) {
  const auto g = turan::read_hypergraph_file(file);
  const auto run = alpha.empty() ? turan::run_plain(g) : turan::run_with_cleaning(g, parse_fraction(alpha));
  if (!trace_path.empty()) emit(turan::to_json(run.trace).dump(2) + "\n", trace_path);
  if (!out.empty()) emit(turan::serialize_hypergraph(run.result), out);
  const auto reps = turan::core_representatives(run.compact());
  if (json) {
    Json j{{"result", turan::to_json(run.result)},
           {"vertices", turan::to_json(run.vertices)},
           {"steps", run.trace.steps.size()},
           {"class_sizes", reps.sizes},
           {"quotient", turan::to_json(reps.quotient)}};
    std::cout << j.dump(2) << "\n";
  } else {
    std::cout << "steps         " << run.trace.steps.size() << "\n"
              << "vertices      " << run.vertices.size() << "\n"
              << "edges         " << run.result.edge_count() << "\n"
              << "classes       " << reps.sizes.size() << "\n";
  }
  return kExitOk;
}

struct SearchArgs {
  std::size_t n = 0, n_min = 0;
  unsigned r = 0;
  std::string forbid;
  bool exact = false, heuristic = false, json = false, csv = false;
  double budget_secs = 0.0;
  std::size_t iters = 200;
  std::uint64_t seed = 0;
};

int cmd_search(const SearchArgs& a) {
  const auto pred = turan::build_forbidden(a.forbid, a.r);
  const std::size_t lo = a.n_min ? a.n_min : a.n;
  if (lo > a.n) throw turan::InvalidArgument("--n-min must not exceed --n");
  bool exhausted = false;
  Json rows = Json::array();
  if (a.csv) std::cout << "n,value,exact,nodes\n";
  for (std::size_t n = lo; n <= a.n; ++n) {
    const bool fits = turan::binomial(n, a.r) <= turan::kExactCandidateCap;
    turan::SearchResult res;
    if (a.heuristic || (!a.exact && !fits)) {
      if (!a.heuristic)
        throw turan::InvalidArgument("C(n,r) exceeds the exact-search cap of 64; pass --heuristic");
      turan::LocalSearchOptions lo_opts;
      lo_opts.seed = a.seed;
      lo_opts.iters = a.iters;
      lo_opts.max_seconds = a.budget_secs;
      res = turan::local_search_lower(n, a.r, pred, lo_opts);
    } else {
      res = turan::brute_force_ex(n, a.r, pred, turan::SearchBudget{0, a.budget_secs});
      exhausted = exhausted || !res.exact;
    }
    if (a.csv) {
      std::cout << n << "," << res.value << "," << (res.exact ? "true" : "false") << "," << res.nodes_explored << "\n";
    } else if (a.json) {
      Json j = turan::to_json(res);
      j["n"] = n;
      j["forbidden"] = pred.describe();
      rows.push_back(std::move(j));
    } else {
      std::cout << "ex(" << n << ", " << pred.describe() << ") " << (res.exact ? "= " : ">= ") << res.value
                << "  (" << res.nodes_explored << " nodes, " << res.elapsed.count() << " s)\n";
    }
  }
  if (a.json && !a.csv) std::cout << (rows.size() == 1 ? rows[0] : rows).dump(2) << "\n";
  return exhausted ? kExitBudget : kExitOk;
}

int cmd_verify(const std::string& suite, std::uint64_t seed, const std::string& json_out, bool timing) {
  turan::VerifyOptions opts;
  opts.suite = suite;
  opts.seed = seed;
  const auto report = turan::run_verify(opts);
  std::cout << report.table();
  if (!json_out.empty()) emit(report.to_json(timing).dump(2) + "\n", json_out);
  return report.ok() ? kExitOk : kExitVerifyFailed;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Hypergraph Turan toolkit"};
  app.require_subcommand(1);

  std::string spec, out, file, alpha, trace, suite = "all", json_out;
  bool json = false, timing = false;
  std::optional<double> beta;
  std::size_t restarts = 50;
  std::uint64_t seed = 0;
  SearchArgs search;

  auto* construct = app.add_subcommand("construct", "Build a named construction and write it as .hg");
  construct->add_option("spec", spec, "e.g. turan:n=9,r=3,l=3")->required();
  construct->add_option("-o,--output", out, "output file (default stdout)");

  auto* info = app.add_subcommand("info", "Summary statistics of a .hg file");
  info->add_option("file", file)->required();
  info->add_flag("--json", json);

  auto* lag = app.add_subcommand("lagrangian", "Estimate the Lagrangian of a hypergraph");
  lag->add_option("--graph", file)->required();
  lag->add_option("--beta", beta, "cap on the largest weight");
  lag->add_option("--restarts", restarts);
  lag->add_option("--seed", seed);
  lag->add_flag("--json", json);

  auto* sym = app.add_subcommand("symmetrize", "Run symmetrization, optionally with cleaning");
  sym->add_option("--graph", file)->required();
  sym->add_option("--alpha", alpha, "cleaning threshold as P/Q");
  sym->add_option("--trace", trace, "write the trace as JSON");
  sym->add_option("-o,--output", out, "write the resulting graph as .hg");
  sym->add_flag("--json", json);

  auto* srch = app.add_subcommand("search", "Exact or heuristic Turan numbers");
  srch->add_option("--n", search.n)->required();
  srch->add_option("--n-min", search.n_min, "sweep n from this value (CSV-friendly)");
  srch->add_option("--r", search.r)->required();
  srch->add_option("--forbid", search.forbid, "sigma:r=3, cancellative, family:F=(...),p=4 or a construction")
      ->required();
  auto* ex = srch->add_flag("--exact", search.exact);
  srch->add_flag("--heuristic", search.heuristic)->excludes(ex);
  srch->add_option("--budget-secs", search.budget_secs);
  srch->add_option("--iters", search.iters, "heuristic rounds");
  srch->add_option("--seed", search.seed);
  srch->add_flag("--json", search.json);
  srch->add_flag("--csv", search.csv);

  auto* ver = app.add_subcommand("verify", "Run the acceptance checks");
  ver->add_option("--suite", suite)->check(CLI::IsMember(turan::verify_suites()));
  ver->add_option("--seed", seed);
  ver->add_option("--json", json_out, "write the JSON report to this file ('-' for stdout)");
  ver->add_flag("--timing", timing, "include elapsed times in the JSON report");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (*construct) return cmd_construct(spec, out);
    if (*info) return cmd_info(file, json);
    if (*lag) return cmd_lagrangian(file, beta, restarts, seed, json);
    if (*sym) return cmd_symmetrize(file, alpha, trace, out, json);
    if (*srch) return cmd_search(search);
    if (*ver) return cmd_verify(suite, seed, json_out, timing);
  } catch (const turan::ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::logic_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}

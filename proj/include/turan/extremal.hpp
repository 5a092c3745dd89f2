#pragma once

#include <algorithm>
#include <chrono>
#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "turan/constructions.hpp"
#include "turan/core.hpp"
#include "turan/hypergraph.hpp"

namespace turan {

// ---------------------------------------------------------------------------
// Forbidden configurations
// ---------------------------------------------------------------------------

enum class ForbiddenKind { subgraph, family, sigma, cancellative };

/// A monotone property: once G violates it, so does every supergraph.
class ForbiddenPredicate {
 public:
  static ForbiddenPredicate subgraph(Hypergraph f) {
    ForbiddenPredicate p(ForbiddenKind::subgraph, f.r());
    p.pattern_ = std::move(f);
    return p;
  }
  static ForbiddenPredicate family(Hypergraph f, std::size_t size) {
    if (size < f.n()) throw InvalidArgument("family predicate: requires p >= n(F)");
    ForbiddenPredicate p(ForbiddenKind::family, f.r());
    p.pattern_ = std::move(f);
    p.p_ = size;
    return p;
  }
  static ForbiddenPredicate sigma(unsigned r) { return {ForbiddenKind::sigma, r}; }
  static ForbiddenPredicate cancellative(unsigned r) { return {ForbiddenKind::cancellative, r}; }

  [[nodiscard]] ForbiddenKind kind() const noexcept { return kind_; }
  [[nodiscard]] unsigned r() const noexcept { return r_; }
  [[nodiscard]] const Hypergraph& pattern() const noexcept { return pattern_; }
  [[nodiscard]] std::size_t family_size() const noexcept { return p_; }

  [[nodiscard]] std::string describe() const {
    switch (kind_) {
      case ForbiddenKind::subgraph:
        return "subgraph(n=" + std::to_string(pattern_.n()) + ",r=" + std::to_string(r_) +
               ",edges=" + std::to_string(pattern_.edge_count()) + ")";
      case ForbiddenKind::family:
        return "family(n=" + std::to_string(pattern_.n()) + ",edges=" +
               std::to_string(pattern_.edge_count()) + ",p=" + std::to_string(p_) + ")";
      case ForbiddenKind::sigma: return "sigma(r=" + std::to_string(r_) + ")";
      case ForbiddenKind::cancellative: return "cancellative(r=" + std::to_string(r_) + ")";
    }
    return {};
  }

  /// Full check.
  [[nodiscard]] bool violated(const Hypergraph& g) const {
    check_uniformity(g);
    switch (kind_) {
      case ForbiddenKind::subgraph: return contains_subhypergraph(g, pattern_).has_value();
      case ForbiddenKind::family: return contains_family_member(g, pattern_, p_).has_value();
      case ForbiddenKind::sigma: return contains_sigma_member(g);
      case ForbiddenKind::cancellative: return !is_cancellative(g);
    }
    return false;
  }

  /// Incremental check: G minus `added` is assumed free; only configurations
  /// using `added` are inspected.
  [[nodiscard]] bool violated_through(const Hypergraph& g, const Edge& added) const {
    check_uniformity(g);
    switch (kind_) {
      case ForbiddenKind::subgraph:
        if (pattern_.empty()) return pattern_.n() <= g.n();
        return contains_subhypergraph_through(g, pattern_, added).has_value();
      case ForbiddenKind::family:
        return contains_family_member_through(g, pattern_, p_, added).has_value();
      case ForbiddenKind::sigma:
        return triple_through(g, added, [this](const Edge& a, const Edge& b, const Edge& c) {
          return sigma_roles(a, b, c) || sigma_roles(a, c, b) || sigma_roles(b, c, a);
        });
      case ForbiddenKind::cancellative:
        return triple_through(g, added, [](const Edge& a, const Edge& b, const Edge& c) {
          return diff_inside(a, b, c) || diff_inside(a, c, b) || diff_inside(b, c, a);
        });
    }
    return false;
  }

 private:
  ForbiddenPredicate(ForbiddenKind k, unsigned r) : kind_(k), r_(r), pattern_(0, r) {}

  void check_uniformity(const Hypergraph& g) const {
    if (g.r() != r_) throw InvalidArgument("forbidden predicate: uniformity mismatch");
  }

  /// x △ y ⊆ z.
  static bool diff_inside(const Edge& x, const Edge& y, const Edge& z) {
    Edge diff;
    std::set_symmetric_difference(x.begin(), x.end(), y.begin(), y.end(), std::back_inserter(diff));
    return is_subset(diff, z);
  }

  bool sigma_roles(const Edge& x, const Edge& y, const Edge& z) const {
    return intersection_size(x, y) + 1 == r_ && diff_inside(x, y, z);
  }

  template <class Test>
  static bool triple_through(const Hypergraph& g, const Edge& added, Test test) {
    Edge e = added;
    std::sort(e.begin(), e.end());
    const auto& es = g.edges();
    for (std::size_t i = 0; i < es.size(); ++i) {
      if (es[i] == e) continue;
      for (std::size_t j = i + 1; j < es.size(); ++j) {
        if (es[j] == e) continue;
        if (test(e, es[i], es[j])) return true;
      }
    }
    return false;
  }

  ForbiddenKind kind_;
  unsigned r_;
  Hypergraph pattern_;
  std::size_t p_ = 0;
};

// ---------------------------------------------------------------------------
// Exact search
// ---------------------------------------------------------------------------

struct SearchBudget {
  std::uint64_t max_nodes = 0;       ///< 0 = unlimited
  double max_seconds = 0.0;          ///< 0 = unlimited
};

struct SearchResult {
  std::size_t value = 0;
  Hypergraph witness;
  bool exact = false;
  std::uint64_t nodes_explored = 0;
  std::chrono::duration<double> elapsed{0};
};

inline constexpr std::uint64_t kExactCandidateCap = 64;

/// Candidate r-subsets of [n] in colexicographic order.
inline std::vector<Edge> colex_subsets(std::size_t n, std::size_t r) {
  auto subsets = all_subsets(n, r);
  std::sort(subsets.begin(), subsets.end(), [](const Edge& a, const Edge& b) {
    return std::lexicographical_compare(a.rbegin(), a.rend(), b.rbegin(), b.rend());
  });
  return subsets;
}

namespace detail {

class ExactSearch {
 public:
  ExactSearch(std::size_t n, unsigned r, const ForbiddenPredicate& pred, SearchBudget budget)
      : pred_(pred), budget_(budget), candidates_(colex_subsets(n, r)), graph_(n, r),
        start_(std::chrono::steady_clock::now()) {
    result_.witness = graph_;
  }

  SearchResult run() {
    // Any nonempty free graph can be relabeled to contain {0, ..., r-1},
    // the first colex candidate, so that edge is forced when it is free.
    if (!candidates_.empty()) {
      Hypergraph first = graph_.with_edge(candidates_.front());
      if (!pred_.violated(first)) {
        graph_ = std::move(first);
        record();
        dfs(1);
      }
    }
    result_.exact = !out_of_budget_;
    result_.elapsed = std::chrono::steady_clock::now() - start_;
    return result_;
  }

 private:
  void dfs(std::size_t idx) {
    if (out_of_budget_ || !tick()) return;
    if (idx == candidates_.size()) return;
    if (graph_.edge_count() + (candidates_.size() - idx) <= result_.value) return;
    const Edge& e = candidates_[idx];
    Hypergraph with = graph_.with_edge(e);
    if (!pred_.violated_through(with, e)) {
      std::swap(graph_, with);
      record();
      dfs(idx + 1);
      std::swap(graph_, with);
    }
    dfs(idx + 1);
  }

  void record() {
    if (graph_.edge_count() > result_.value) {
      result_.value = graph_.edge_count();
      result_.witness = graph_;
    }
  }

  bool tick() {
    ++result_.nodes_explored;
    if (budget_.max_nodes && result_.nodes_explored > budget_.max_nodes) out_of_budget_ = true;
    if (budget_.max_seconds > 0 && (result_.nodes_explored & 1023) == 0) {
      const std::chrono::duration<double> t = std::chrono::steady_clock::now() - start_;
      if (t.count() > budget_.max_seconds) out_of_budget_ = true;
    }
    return !out_of_budget_;
  }

  const ForbiddenPredicate& pred_;
  SearchBudget budget_;
  std::vector<Edge> candidates_;
  Hypergraph graph_;
  std::chrono::steady_clock::time_point start_;
  SearchResult result_;
  bool out_of_budget_ = false;
};

}  // namespace detail

/// ex(n, forbidden) by exhaustive branch and bound. Refuses inputs with more
/// than 64 candidate edges.
inline SearchResult brute_force_ex(std::size_t n, unsigned r, const ForbiddenPredicate& forbidden,
                                   SearchBudget budget = {}) {
  if (r != forbidden.r()) throw InvalidArgument("brute_force_ex: uniformity mismatch");
  if (r == 0 || n < r) return {0, Hypergraph(n, std::max(r, 1u)), true, 0, {}};
  if (binomial(n, r) > kExactCandidateCap)
    throw InvalidArgument("brute_force_ex: C(" + std::to_string(n) + "," + std::to_string(r) + ") = " +
                          std::to_string(binomial(n, r)) +
                          " candidate edges exceeds the exact-search cap of 64; use heuristic mode");
  return detail::ExactSearch(n, r, forbidden, budget).run();
}

// ---------------------------------------------------------------------------
// Heuristic lower bounds
// ---------------------------------------------------------------------------

struct LocalSearchOptions {
  std::uint64_t seed = 0;
  std::size_t iters = 200;
  std::optional<Hypergraph> start;   ///< overrides the default seed graph
  double max_seconds = 0.0;          ///< 0 = unlimited
};

/// Starting graph: T_r(n, p-1) for family predicates, T_r(n, r) for sigma
/// and cancellative ones, otherwise (or if that graph is not free) empty.
inline Hypergraph default_seed_graph(std::size_t n, const ForbiddenPredicate& pred) {
  std::size_t parts = 0;
  if (pred.kind() == ForbiddenKind::family && pred.family_size() >= pred.r() + 1) parts = pred.family_size() - 1;
  if (pred.kind() == ForbiddenKind::sigma || pred.kind() == ForbiddenKind::cancellative) parts = pred.r();
  if (parts) {
    Hypergraph t = turan_hypergraph(n, pred.r(), parts).graph;
    if (!pred.violated(t)) return t;
  }
  return Hypergraph(n, pred.r());
}

/// Randomized hill climbing: each round drops up to two random edges and
/// regrows greedily in random order, keeping the result when it is no
/// smaller. Deterministic per seed.
inline SearchResult local_search_lower(std::size_t n, unsigned r, const ForbiddenPredicate& forbidden,
                                       const LocalSearchOptions& opts = {}) {
  if (r != forbidden.r()) throw InvalidArgument("local_search_lower: uniformity mismatch");
  const auto start = std::chrono::steady_clock::now();
  SearchResult res;
  Hypergraph cur = opts.start ? *opts.start : default_seed_graph(n, forbidden);
  if (cur.n() != n || cur.r() != r) throw InvalidArgument("local_search_lower: seed graph shape mismatch");
  if (forbidden.violated(cur)) throw InvalidArgument("local_search_lower: seed graph is not free");
  res.value = cur.edge_count();
  res.witness = cur;
  if (n < r) return res;

  std::mt19937_64 rng(opts.seed);
  std::vector<Edge> candidates = all_subsets(n, r);
  for (std::size_t it = 0; it < opts.iters; ++it) {
    if (opts.max_seconds > 0) {
      const std::chrono::duration<double> t = std::chrono::steady_clock::now() - start;
      if (t.count() > opts.max_seconds) break;
    }
    ++res.nodes_explored;
    Hypergraph next = cur;
    const std::size_t drops = std::min<std::size_t>(next.edge_count(), it % 3 == 0 ? 0 : 1 + it % 2);
    for (std::size_t k = 0; k < drops; ++k) {
      std::uniform_int_distribution<std::size_t> pick(0, next.edge_count() - 1);
      next = next.without_edge(next.edges()[pick(rng)]);
    }
    std::shuffle(candidates.begin(), candidates.end(), rng);
    for (const auto& e : candidates) {
      if (next.has_edge(e)) continue;
      Hypergraph h = next.with_edge(e);
      if (!forbidden.violated_through(h, e)) next = std::move(h);
    }
    if (next.edge_count() >= cur.edge_count()) cur = std::move(next);
    if (cur.edge_count() > res.value) {
      res.value = cur.edge_count();
      res.witness = cur;
    }
  }
  res.exact = false;
  res.elapsed = std::chrono::steady_clock::now() - start;
  return res;
}

// ---------------------------------------------------------------------------
// Cleaning procedures
// ---------------------------------------------------------------------------

/// While some d-set has degree in (0, p·C(n, r-d-1)], remove every edge
/// through it (smallest such d-set first). Afterwards every d-set of nonzero
/// degree has kernel degree > p.
inline Hypergraph kernel_clean(const Hypergraph& g, std::size_t p, unsigned d) {
  if (d == 0 || d >= g.r()) throw InvalidArgument("kernel_clean: requires 0 < d < r");
  const std::uint64_t threshold = p * binomial(g.n(), g.r() - d - 1);
  Hypergraph cur = g;
  bool changed = true;
  while (changed && !cur.empty()) {
    changed = false;
    for (const auto& ds : shadow(cur, d)) {
      const std::size_t deg = set_degree(cur, ds);
      if (deg == 0 || deg > threshold) continue;
      std::vector<Edge> keep;
      for (const auto& e : cur.edges())
        if (!is_subset(ds.span(), e)) keep.push_back(e);
      cur = Hypergraph(cur.n(), cur.r(), std::move(keep));
      changed = true;
      break;
    }
  }
  return cur;
}

struct FamilyFreeResult {
  Hypergraph graph;
  std::size_t p = 0;
  /// Set when the output still contains a family member, which can only
  /// happen if the input was not H^F_{m+1}-free.
  std::optional<Embedding> diagnostic;
};

/// Removes edges so that no member of the family H^F_{m+1} survives, losing
/// at most p·C(n, r-3)·C(n, 2) edges with p = n(H^F_{m+1}).
inline FamilyFreeResult family_free_subgraph(const Hypergraph& g, const Hypergraph& f, std::size_t m) {
  if (g.r() != f.r()) throw InvalidArgument("family_free_subgraph: uniformity mismatch");
  if (g.r() < 3) throw InvalidArgument("family_free_subgraph: requires r >= 3");
  FamilyFreeResult out;
  out.p = expanded_clique_with_embedded(f, m + 1).graph.n();
  out.graph = kernel_clean(g, out.p, 2);
  out.diagnostic = contains_family_member(out.graph, f, m + 1);
  return out;
}

}  // namespace turan

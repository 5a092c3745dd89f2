#pragma once

#include <algorithm>
#include <cstdint>
#include <random>
#include <vector>

#include "turan/core.hpp"
#include "turan/lagrangian.hpp"

namespace turan {

struct DensitySearchOptions {
  LagrangianOptions lagrangian = [] {
    LagrangianOptions o;
    o.restarts = 10;
    return o;
  }();
  /// Exhaustive enumeration is used while C(t_max, r) stays at or below this.
  std::uint64_t exhaustive_limit = 25;
  std::size_t local_rounds = 200;
  std::uint64_t seed = 0;
};

struct DensitySearchResult {
  double best_value = 0.0;
  Hypergraph witness;
  bool exhaustive = false;
  std::size_t graphs_evaluated = 0;
};

namespace detail {

class DensitySearch {
 public:
  DensitySearch(const Hypergraph& f, std::size_t t, const DensitySearchOptions& opts)
      : f_(f), t_(t), opts_(opts), candidates_(all_subsets(t, f.r())),
        graph_(t, f.r()) {
    best_.witness = graph_;
  }

  DensitySearchResult exhaustive() {
    best_.exhaustive = true;
    // Relabeling lets any nonempty graph contain {0..r-1}, so that edge is
    // forced whenever it is F-free on its own.
    if (f_.n() <= t_ && f_.empty()) {
      evaluate(graph_);
      return best_;
    }
    Hypergraph first = graph_.with_edge(candidates_.front());
    if (contains_subhypergraph(first, f_)) {
      evaluate(graph_);
      return best_;
    }
    graph_ = first;
    recurse(1);
    return best_;
  }

  DensitySearchResult local() {
    best_.exhaustive = false;
    std::mt19937_64 rng(opts_.seed);
    for (std::size_t round = 0; round < opts_.local_rounds; ++round) {
      std::vector<Edge> order = candidates_;
      std::shuffle(order.begin(), order.end(), rng);
      Hypergraph g = (round % 2 == 1 && !best_.witness.empty()) ? best_.witness : Hypergraph(t_, f_.r());
      // Perturb the incumbent by dropping a random edge before regrowing.
      if (!g.empty()) {
        std::uniform_int_distribution<std::size_t> pick(0, g.edge_count() - 1);
        g = g.without_edge(g.edges()[pick(rng)]);
      }
      for (const auto& e : order) {
        if (g.has_edge(e)) continue;
        Hypergraph h = g.with_edge(e);
        if (!contains_subhypergraph_through(h, f_, e)) g = std::move(h);
      }
      evaluate(g);
    }
    return best_;
  }

 private:
  void recurse(std::size_t idx) {
    if (idx == candidates_.size()) {
      if (is_maximal()) evaluate(graph_);
      return;
    }
    const Edge& e = candidates_[idx];
    Hypergraph with = graph_.with_edge(e);
    if (!contains_subhypergraph_through(with, f_, e)) {
      std::swap(graph_, with);
      recurse(idx + 1);
      std::swap(graph_, with);
    }
    recurse(idx + 1);
  }

  bool is_maximal() const {
    for (const auto& e : candidates_) {
      if (graph_.has_edge(e)) continue;
      if (!contains_subhypergraph_through(graph_.with_edge(e), f_, e)) return false;
    }
    return true;
  }

  void evaluate(const Hypergraph& g) {
    ++best_.graphs_evaluated;
    const double v = lagrangian(g, opts_.lagrangian).value;
    if (best_.graphs_evaluated == 1 || v > best_.best_value + 1e-12) {
      best_.best_value = v;
      best_.witness = g;
    }
  }

  const Hypergraph& f_;
  std::size_t t_;
  DensitySearchOptions opts_;
  std::vector<Edge> candidates_;
  Hypergraph graph_;
  DensitySearchResult best_;
};

}  // namespace detail

/// Lower bound on the Lagrangian density π_λ(F): the best λ(G) over F-free
/// G on t_max vertices (graphs on fewer vertices embed with isolated ones).
inline DensitySearchResult lagrangian_density_search(const Hypergraph& f, std::size_t t_max,
                                                     const DensitySearchOptions& opts = {}) {
  if (t_max < f.r()) throw InvalidArgument("lagrangian_density_search: requires t_max >= r");
  detail::DensitySearch search(f, t_max, opts);
  if (binomial(t_max, f.r()) <= opts.exhaustive_limit) return search.exhaustive();
  return search.local();
}

}  // namespace turan

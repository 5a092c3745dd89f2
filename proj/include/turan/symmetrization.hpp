#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <tuple>
#include <vector>

#include "turan/core.hpp"
#include "turan/hypergraph.hpp"

namespace turan {

// ---------------------------------------------------------------------------
// Equivalence classes and cloning
// ---------------------------------------------------------------------------

namespace detail {

/// Link of every vertex as a sorted list of (r-1)-sets.
inline std::vector<std::vector<Edge>> vertex_links(const Hypergraph& g) {
  std::vector<std::vector<Edge>> links(g.n());
  for (const auto& e : g.edges()) {
    for (std::size_t i = 0; i < e.size(); ++i) {
      Edge f;
      f.reserve(e.size() - 1);
      for (std::size_t j = 0; j < e.size(); ++j)
        if (j != i) f.push_back(e[j]);
      links[e[i]].push_back(std::move(f));
    }
  }
  for (auto& l : links) std::sort(l.begin(), l.end());
  return links;
}

/// Classes of identical links among `vertices`, ordered by smallest member.
/// Also fills class_of[v] with the class index (unset for other vertices).
inline std::vector<VertexSet> classes_among(const Hypergraph& g, const VertexSet& vertices,
                                            std::vector<std::size_t>* class_of = nullptr) {
  const auto links = vertex_links(g);
  std::map<std::vector<Edge>, std::size_t> index;
  std::vector<std::vector<Vertex>> groups;
  if (class_of) class_of->assign(g.n(), SIZE_MAX);
  for (Vertex v : vertices) {
    auto [it, inserted] = index.emplace(links[v], groups.size());
    if (inserted) groups.emplace_back();
    groups[it->second].push_back(v);
    if (class_of) (*class_of)[v] = it->second;
  }
  std::vector<VertexSet> out;
  out.reserve(groups.size());
  for (auto& gr : groups) out.emplace_back(std::move(gr));
  return out;
}

inline VertexSet all_vertices(std::size_t n) {
  std::vector<Vertex> v(n);
  for (std::size_t i = 0; i < n; ++i) v[i] = static_cast<Vertex>(i);
  return VertexSet(std::move(v));
}

}  // namespace detail

/// Partition of {0..n-1} by equality of vertex links.
inline std::vector<VertexSet> equivalence_classes(const Hypergraph& g) {
  return detail::classes_among(g, detail::all_vertices(g.n()));
}

/// Makes v a clone of u: drops every edge through v and adds {v} ∪ D for
/// each D in the link of u. Requires {u, v} uncovered.
inline Hypergraph symmetrize(const Hypergraph& g, Vertex v, Vertex u) {
  if (u >= g.n() || v >= g.n()) throw InvalidArgument("symmetrize: vertex out of range");
  if (u == v) throw InvalidArgument("symmetrize: u and v must differ");
  std::vector<Edge> out;
  std::vector<Edge> cloned;
  for (const auto& e : g.edges()) {
    const bool has_u = std::binary_search(e.begin(), e.end(), u);
    const bool has_v = std::binary_search(e.begin(), e.end(), v);
    if (has_u && has_v) throw PreconditionViolation("symmetrize: pair {u, v} is covered");
    if (!has_v) out.push_back(e);
    if (has_u) {
      Edge f = e;
      *std::find(f.begin(), f.end(), u) = v;
      cloned.push_back(std::move(f));
    }
  }
  out.insert(out.end(), cloned.begin(), cloned.end());
  return Hypergraph(g.n(), g.r(), std::move(out));
}

// ---------------------------------------------------------------------------
// Traces
// ---------------------------------------------------------------------------

enum class StepKind { symmetrize, clean };

inline std::string to_string(StepKind k) { return k == StepKind::symmetrize ? "symmetrize" : "clean"; }

struct TraceStep {
  StepKind kind = StepKind::symmetrize;
  VertexSet donor_class;          ///< symmetrize: every member is cloned onto target
  std::optional<Vertex> target;   ///< symmetrize only
  VertexSet removed;              ///< clean: the set Z_i
  std::size_t edges_before = 0;
  std::size_t edges_after = 0;
  /// clean: the exception rule wanted a donor vertex but none was left, so
  /// the minimum-degree vertex itself was removed.
  bool flagged = false;
};

struct SymmetrizationTrace {
  std::vector<TraceStep> steps;
};

struct SymmetrizationRun {
  Hypergraph result;     ///< on the original label space; removed vertices isolated
  VertexSet vertices;    ///< vertices still present
  SymmetrizationTrace trace;

  /// Result restricted to the surviving vertices, relabeled 0..k-1.
  [[nodiscard]] Hypergraph compact() const { return induced_subgraph(result, vertices); }
};

/// Replays a trace from the input graph, returning every intermediate graph
/// (input first, final result last).
inline std::vector<Hypergraph> replay_states(const Hypergraph& g, const SymmetrizationTrace& trace) {
  std::vector<Hypergraph> states{g};
  Hypergraph cur = g;
  for (const auto& step : trace.steps) {
    if (step.kind == StepKind::symmetrize) {
      if (!step.target) throw InvalidArgument("replay: symmetrize step without target");
      for (Vertex w : step.donor_class) cur = symmetrize(cur, w, *step.target);
    } else {
      cur = delete_vertices(cur, step.removed);
    }
    states.push_back(cur);
  }
  return states;
}

inline Hypergraph replay(const Hypergraph& g, const SymmetrizationTrace& trace) {
  return replay_states(g, trace).back();
}

// ---------------------------------------------------------------------------
// Density threshold
// ---------------------------------------------------------------------------

/// Minimum degree over `vertices` at least α·C(|vertices|-1, r-1), compared
/// exactly. The vertexless graph counts as dense.
inline bool is_alpha_dense(const Hypergraph& g, const VertexSet& vertices, const Rational& alpha) {
  if (vertices.empty()) return true;
  const auto deg = g.degrees();
  std::size_t dmin = SIZE_MAX;
  for (Vertex v : vertices) dmin = std::min(dmin, deg[v]);
  const auto need = binomial(vertices.size() - 1, g.r() - 1);
  return static_cast<__int128>(dmin) * alpha.denominator() >=
         static_cast<__int128>(need) * alpha.numerator();
}

inline bool is_alpha_dense(const Hypergraph& g, const Rational& alpha) {
  return is_alpha_dense(g, detail::all_vertices(g.n()), alpha);
}

// ---------------------------------------------------------------------------
// The symmetrization algorithms
// ---------------------------------------------------------------------------

namespace detail {

struct PairChoice {
  Vertex u = 0, v = 0;
};

/// Nonadjacent nonequivalent (u, v) with d(u) >= d(v): maximize d(u), then
/// smallest u, then smallest v.
inline std::optional<PairChoice> choose_pair(const Hypergraph& g, const VertexSet& vertices,
                                             const std::vector<std::size_t>& class_of) {
  const auto deg = g.degrees();
  const auto cov = covered_pair_matrix(g);
  std::optional<PairChoice> best;
  std::tuple<std::int64_t, Vertex, Vertex> best_key{};
  for (Vertex u : vertices) {
    for (Vertex v : vertices) {
      if (u == v || cov[u][v] || class_of[u] == class_of[v] || deg[u] < deg[v]) continue;
      const std::tuple<std::int64_t, Vertex, Vertex> key{-static_cast<std::int64_t>(deg[u]), u, v};
      if (!best || key < best_key) {
        best = PairChoice{u, v};
        best_key = key;
      }
    }
  }
  return best;
}

class Symmetrizer {
 public:
  Symmetrizer(const Hypergraph& g, std::optional<Rational> alpha)
      : graph_(g), vertices_(all_vertices(g.n())), alpha_(alpha) {}

  SymmetrizationRun run() {
    if (alpha_ && !is_alpha_dense(graph_, vertices_, *alpha_)) clean(nullptr, nullptr);
    while (!vertices_.empty()) {
      std::vector<std::size_t> class_of;
      const auto classes = classes_among(graph_, vertices_, &class_of);
      const auto pick = choose_pair(graph_, vertices_, class_of);
      if (!pick) break;
      const VertexSet donor = classes[class_of[pick->v]];
      const VertexSet receiving = classes[class_of[pick->u]];

      TraceStep step;
      step.kind = StepKind::symmetrize;
      step.donor_class = donor;
      step.target = pick->u;
      step.edges_before = graph_.edge_count();
      for (Vertex w : donor) graph_ = symmetrize(graph_, w, pick->u);
      step.edges_after = graph_.edge_count();
      trace_.steps.push_back(std::move(step));

      if (alpha_ && !is_alpha_dense(graph_, vertices_, *alpha_)) clean(&donor, &receiving);
    }
    return {graph_, vertices_, trace_};
  }

 private:
  /// Deletes minimum-degree vertices until dense or vertexless. When the
  /// minimum-degree vertex lies in the class that just received clones, a
  /// surviving donor vertex (smallest label) is deleted instead.
  void clean(const VertexSet* donor, const VertexSet* receiving) {
    TraceStep step;
    step.kind = StepKind::clean;
    step.edges_before = graph_.edge_count();
    std::vector<Vertex> removed;
    while (!vertices_.empty() && !is_alpha_dense(graph_, vertices_, *alpha_)) {
      const auto deg = graph_.degrees();
      Vertex z = vertices_[0];
      for (Vertex v : vertices_)
        if (deg[v] < deg[z]) z = v;
      Vertex victim = z;
      if (receiving && receiving->contains(z)) {
        auto alive = std::find_if(donor->begin(), donor->end(),
                                  [&](Vertex w) { return vertices_.contains(w); });
        if (alive != donor->end()) victim = *alive;
        else step.flagged = true;
      }
      graph_ = delete_vertices(graph_, VertexSet{victim});
      vertices_.erase(victim);
      removed.push_back(victim);
    }
    step.removed = VertexSet(std::move(removed));
    step.edges_after = graph_.edge_count();
    trace_.steps.push_back(std::move(step));
  }

  Hypergraph graph_;
  VertexSet vertices_;
  std::optional<Rational> alpha_;
  SymmetrizationTrace trace_;
};

}  // namespace detail

/// Symmetrization without cleaning: while two nonadjacent nonequivalent
/// vertices u, v exist (d(u) >= d(v)), clone v's whole class onto u.
inline SymmetrizationRun run_plain(const Hypergraph& g) { return detail::Symmetrizer(g, std::nullopt).run(); }

/// Symmetrization with cleaning at threshold α: after each round, delete
/// vertices until the graph is α-dense or vertexless. The input itself is
/// cleaned first when it is not α-dense, so a nonempty output is always
/// α-dense. α = 0 never cleans.
inline SymmetrizationRun run_with_cleaning(const Hypergraph& g, const Rational& alpha) {
  if (alpha < 0 || alpha > 1) throw InvalidArgument("run_with_cleaning: requires 0 <= alpha <= 1");
  return detail::Symmetrizer(g, alpha).run();
}

// ---------------------------------------------------------------------------
// Class representatives
// ---------------------------------------------------------------------------

struct CoreRepresentatives {
  VertexSet representatives;          ///< smallest label of each class
  Hypergraph quotient;                ///< induced on representatives, relabeled
  std::vector<std::size_t> sizes;     ///< class sizes aligned with representatives
  std::vector<VertexSet> classes;
};

inline CoreRepresentatives core_representatives(const Hypergraph& g) {
  CoreRepresentatives out;
  out.classes = equivalence_classes(g);
  std::vector<Vertex> reps;
  for (const auto& c : out.classes) {
    reps.push_back(c[0]);
    out.sizes.push_back(c.size());
  }
  out.representatives = VertexSet(std::move(reps));
  out.quotient = induced_subgraph(g, out.representatives);
  return out;
}

/// Maps class i's j-th member to block position offset_i + j, matching the
/// vertex layout of blowup(quotient, sizes).
inline std::vector<Vertex> class_order_relabeling(const std::vector<VertexSet>& classes, std::size_t n) {
  std::vector<Vertex> perm(n, 0);
  Vertex next = 0;
  for (const auto& c : classes)
    for (Vertex v : c) perm[v] = next++;
  return perm;
}

}  // namespace turan

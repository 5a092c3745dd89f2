#pragma once

#include <algorithm>
#include <array>
#include <iterator>
#include <numeric>
#include <cstdint>
#include <map>
#include <optional>
#include <random>
#include <utility>
#include <vector>

#include "turan/core.hpp"
#include "turan/hypergraph.hpp"

namespace turan {

// ---------------------------------------------------------------------------
// Turán hypergraphs
// ---------------------------------------------------------------------------

struct PartitionedHypergraph {
  Hypergraph graph;
  std::vector<VertexSet> parts;
};

/// T_r(n, l): complete l-partite r-graph with part sizes ceil(n/l) first,
/// then floor(n/l); parts occupy consecutive labels.
inline PartitionedHypergraph turan_hypergraph(std::size_t n, unsigned r, std::size_t l) {
  if (r < 1 || l < r) throw InvalidArgument("turan_hypergraph: requires l >= r >= 1");
  std::vector<VertexSet> parts;
  Vertex next = 0;
  for (std::size_t i = 0; i < l; ++i) {
    const std::size_t size = n / l + (i < n % l ? 1 : 0);
    std::vector<Vertex> members;
    for (std::size_t k = 0; k < size; ++k) members.push_back(next++);
    parts.emplace_back(std::move(members));
  }
  std::vector<Edge> edges;
  for (const auto& choice : all_subsets(l, r)) {
    std::vector<std::size_t> pick(r, 0);
    bool nonempty = true;
    for (Vertex p : choice) nonempty = nonempty && !parts[p].empty();
    if (!nonempty) continue;
    while (true) {
      Edge e(r);
      for (unsigned k = 0; k < r; ++k) e[k] = parts[choice[k]][pick[k]];
      edges.push_back(std::move(e));
      unsigned k = 0;
      while (k < r && ++pick[k] == parts[choice[k]].size()) pick[k++] = 0;
      if (k == r) break;
    }
  }
  return {Hypergraph(n, r, std::move(edges)), std::move(parts)};
}

/// |T_r(n, l)| computed from part sizes alone (elementary symmetric sum).
inline std::uint64_t turan_edge_count(std::size_t n, unsigned r, std::size_t l) {
  if (r < 1 || l < r) throw InvalidArgument("turan_edge_count: requires l >= r >= 1");
  // e[k] = elementary symmetric polynomial of degree k in the part sizes.
  std::vector<std::uint64_t> e(r + 1, 0);
  e[0] = 1;
  for (std::size_t i = 0; i < l; ++i) {
    const std::uint64_t size = n / l + (i < n % l ? 1 : 0);
    for (unsigned k = r; k >= 1; --k) e[k] += e[k - 1] * size;
  }
  return e[r];
}

// ---------------------------------------------------------------------------
// Generalized triangle, cancellative and Σ_r checks
// ---------------------------------------------------------------------------

/// T_r on 2r-1 vertices: {0..r-1}, {0..r-2, r}, {r-1, r, ..., 2r-2}.
inline Hypergraph generalized_triangle(unsigned r) {
  if (r < 2) throw InvalidArgument("generalized_triangle: requires r >= 2");
  Edge a, b, c;
  for (Vertex i = 0; i < r; ++i) a.push_back(i);
  for (Vertex i = 0; i + 1 < r; ++i) b.push_back(i);
  b.push_back(r);
  for (Vertex i = r - 1; i <= 2 * r - 2; ++i) c.push_back(i);
  return Hypergraph(2 * r - 1, r, {a, b, c});
}

/// Three distinct edges (a, b, c) with b △ c ⊆ a.
using EdgeTriple = std::array<Edge, 3>;

namespace detail {

inline Edge symmetric_difference(const Edge& a, const Edge& b) {
  Edge out;
  std::set_symmetric_difference(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

inline std::vector<std::vector<std::size_t>> incidence(const Hypergraph& g) {
  std::vector<std::vector<std::size_t>> inc(g.n());
  for (std::size_t i = 0; i < g.edge_count(); ++i)
    for (Vertex v : g.edges()[i]) inc[v].push_back(i);
  return inc;
}

}  // namespace detail

/// Returns a witness that G is not cancellative, if any.
inline std::optional<EdgeTriple> find_cancellative_violation(const Hypergraph& g) {
  const auto& es = g.edges();
  const auto inc = detail::incidence(g);
  for (std::size_t i = 0; i < es.size(); ++i) {
    for (std::size_t j = i + 1; j < es.size(); ++j) {
      // |b △ c| = 2(r - |b ∩ c|) must fit inside an r-set.
      if (2 * (g.r() - intersection_size(es[i], es[j])) > g.r()) continue;
      const Edge diff = detail::symmetric_difference(es[i], es[j]);
      for (std::size_t k : inc[diff.front()]) {
        if (k == i || k == j) continue;
        if (is_subset(diff, es[k])) return EdgeTriple{es[k], es[i], es[j]};
      }
    }
  }
  return std::nullopt;
}

inline bool is_cancellative(const Hypergraph& g) { return !find_cancellative_violation(g); }

/// Returns (D1, D2, D3) with |D1 ∩ D2| = r-1 and D1 △ D2 ⊆ D3, if any.
inline std::optional<EdgeTriple> find_sigma_member(const Hypergraph& g) {
  const auto& es = g.edges();
  std::map<std::pair<Vertex, Vertex>, std::vector<std::size_t>> by_pair;
  for (std::size_t i = 0; i < es.size(); ++i)
    for (std::size_t a = 0; a < es[i].size(); ++a)
      for (std::size_t b = a + 1; b < es[i].size(); ++b) by_pair[{es[i][a], es[i][b]}].push_back(i);
  for (std::size_t i = 0; i < es.size(); ++i) {
    for (std::size_t j = i + 1; j < es.size(); ++j) {
      if (intersection_size(es[i], es[j]) + 1 != g.r()) continue;
      const Edge diff = detail::symmetric_difference(es[i], es[j]);
      auto it = by_pair.find({diff[0], diff[1]});
      if (it != by_pair.end() && !it->second.empty())
        return EdgeTriple{es[i], es[j], es[it->second.front()]};
    }
  }
  return std::nullopt;
}

inline bool contains_sigma_member(const Hypergraph& g) { return find_sigma_member(g).has_value(); }

// ---------------------------------------------------------------------------
// Expanded cliques with an embedded F
// ---------------------------------------------------------------------------

struct ExpandedClique {
  Hypergraph graph;
  VertexSet core;
  std::map<std::pair<Vertex, Vertex>, VertexSet> pads;
};

/// H^F_p. Core = 0..p-1 with F on 0..n(F)-1; each core pair not covered by F
/// gets r-2 fresh vertices, allocated in lexicographic pair order after p-1.
inline ExpandedClique expanded_clique_with_embedded(const Hypergraph& f, std::size_t p) {
  if (p < f.n()) throw InvalidArgument("expanded_clique_with_embedded: requires p >= n(F)");
  if (f.r() < 2) throw InvalidArgument("expanded_clique_with_embedded: requires r >= 2");
  const unsigned r = f.r();
  const auto cov = covered_pair_matrix(f);
  std::vector<Edge> edges = f.edges();
  std::map<std::pair<Vertex, Vertex>, VertexSet> pads;
  Vertex next = static_cast<Vertex>(p);
  for (Vertex i = 0; i < p; ++i) {
    for (Vertex j = i + 1; j < p; ++j) {
      if (j < f.n() && cov[i][j]) continue;
      Edge e{i, j};
      std::vector<Vertex> pad;
      for (unsigned k = 0; k + 2 < r; ++k) pad.push_back(next++);
      e.insert(e.end(), pad.begin(), pad.end());
      edges.push_back(std::move(e));
      pads.emplace(std::make_pair(i, j), VertexSet(std::move(pad)));
    }
  }
  std::vector<Vertex> core(p);
  std::iota(core.begin(), core.end(), 0);
  return {Hypergraph(next, r, std::move(edges)), VertexSet(std::move(core)), std::move(pads)};
}

/// r-uniform expanded p-clique H^r_p (F empty).
inline Hypergraph expanded_clique(unsigned r, std::size_t p) {
  return expanded_clique_with_embedded(Hypergraph(0, r), p).graph;
}

/// Generalized fan Fan^r = H^e_{r+1} for a single r-edge e; the apex is r.
inline Hypergraph fan(unsigned r) {
  Edge e(r);
  std::iota(e.begin(), e.end(), 0);
  return expanded_clique_with_embedded(Hypergraph(r, r, {e}), r + 1).graph;
}

/// (r_target-2)-fold enlargement: the fresh set D = {n(T), ..., n(T)+r_target-3}
/// is added to every edge of the 2-graph T.
inline Hypergraph enlargement(const Hypergraph& t, unsigned r_target) {
  if (t.r() != 2) throw InvalidArgument("enlargement: input must be a 2-graph");
  if (r_target < 2) throw InvalidArgument("enlargement: requires r_target >= 2");
  const std::size_t extra = r_target - 2;
  std::vector<Edge> edges;
  for (const auto& e : t.edges()) {
    Edge f = e;
    for (std::size_t k = 0; k < extra; ++k) f.push_back(static_cast<Vertex>(t.n() + k));
    edges.push_back(std::move(f));
  }
  return Hypergraph(t.n() + extra, r_target, std::move(edges));
}

// ---------------------------------------------------------------------------
// Family membership: some p-set C with every pair covered and F ⊆ G[C]
// ---------------------------------------------------------------------------

namespace detail {

/// Calls `visit` on every k-clique of the adjacency matrix, ascending order;
/// stops early when `visit` returns true.
template <class Visit>
bool for_each_clique(const std::vector<std::vector<bool>>& adj, std::size_t k, Visit&& visit) {
  const std::size_t n = adj.size();
  std::vector<Vertex> cur;
  auto rec = [&](auto&& self, const std::vector<Vertex>& cands) -> bool {
    if (cur.size() == k) return visit(cur);
    if (cur.size() + cands.size() < k) return false;
    for (std::size_t i = 0; i < cands.size(); ++i) {
      const Vertex v = cands[i];
      std::vector<Vertex> next;
      for (std::size_t j = i + 1; j < cands.size(); ++j)
        if (adj[v][cands[j]]) next.push_back(cands[j]);
      cur.push_back(v);
      if (self(self, next)) return true;
      cur.pop_back();
      if (cur.size() + (cands.size() - i - 1) < k) break;
    }
    return false;
  };
  std::vector<Vertex> all(n);
  std::iota(all.begin(), all.end(), 0);
  return rec(rec, all);
}

inline Embedding family_certificate(const Hypergraph& g, const VertexSet& core,
                                    const std::vector<Vertex>& local_map) {
  Embedding emb;
  emb.kind = EmbeddingKind::family_member;
  emb.core = core;
  for (Vertex v : local_map) emb.map.push_back(core[v]);
  for (std::size_t i = 0; i < core.size(); ++i) {
    for (std::size_t j = i + 1; j < core.size(); ++j) {
      for (const auto& e : g.edges()) {
        if (std::binary_search(e.begin(), e.end(), core[i]) &&
            std::binary_search(e.begin(), e.end(), core[j])) {
          emb.covering_edges.push_back(e);
          break;
        }
      }
    }
  }
  return emb;
}

/// Checks whether C is the core of a family member: pairwise covered and
/// F embeds into G[C]. Returns the certificate when it is.
inline std::optional<Embedding> family_member_on_core(const Hypergraph& g, const Hypergraph& f,
                                                      const VertexSet& core) {
  const Hypergraph sub = induced_subgraph(g, core);
  detail::SubgraphMatcher m(sub, f);
  auto local = m.run();
  if (!local) return std::nullopt;
  return family_certificate(g, core, *local);
}

}  // namespace detail

/// Does G contain a member of the family H^F_p? Searches p-cliques of the
/// covered-pair graph first, then tests F inside each candidate core.
inline std::optional<Embedding> contains_family_member(const Hypergraph& g, const Hypergraph& f,
                                                       std::size_t p) {
  if (g.r() != f.r()) throw InvalidArgument("contains_family_member: uniformity mismatch");
  if (p < f.n()) throw InvalidArgument("contains_family_member: requires p >= n(F)");
  if (p > g.n()) return std::nullopt;
  const auto cov = covered_pair_matrix(g);
  std::optional<Embedding> found;
  detail::for_each_clique(cov, p, [&](const std::vector<Vertex>& c) {
    found = detail::family_member_on_core(g, f, VertexSet(c));
    return found.has_value();
  });
  return found;
}

/// Incremental variant: assumes G - anchor is family-free and looks only at
/// cores that could have been created by adding `anchor` (those meeting it in
/// at least two vertices).
inline std::optional<Embedding> contains_family_member_through(const Hypergraph& g,
                                                               const Hypergraph& f, std::size_t p,
                                                               const Edge& anchor) {
  if (p > g.n() || p < 2) return contains_family_member(g, f, p);
  const auto cov = covered_pair_matrix(g);
  std::optional<Embedding> found;
  for (std::size_t a = 0; a < anchor.size() && !found; ++a) {
    for (std::size_t b = a + 1; b < anchor.size() && !found; ++b) {
      const Vertex x = anchor[a], y = anchor[b];
      // Restrict to cliques through {x, y}, avoiding earlier anchor pairs.
      std::vector<Vertex> common;
      for (Vertex w = 0; w < g.n(); ++w)
        if (w != x && w != y && cov[x][w] && cov[y][w]) common.push_back(w);
      std::vector<std::vector<bool>> sub(common.size(), std::vector<bool>(common.size()));
      for (std::size_t i = 0; i < common.size(); ++i)
        for (std::size_t j = 0; j < common.size(); ++j) sub[i][j] = cov[common[i]][common[j]];
      detail::for_each_clique(sub, p - 2, [&](const std::vector<Vertex>& c) {
        std::vector<Vertex> core{x, y};
        for (Vertex i : c) core.push_back(common[i]);
        found = detail::family_member_on_core(g, f, VertexSet(std::move(core)));
        return found.has_value();
      });
    }
  }
  return found;
}

// ---------------------------------------------------------------------------
// 2-graph conveniences (trees and friends)
// ---------------------------------------------------------------------------

inline Hypergraph path_graph(std::size_t k) {
  std::vector<Edge> edges;
  for (Vertex i = 0; i + 1 < k; ++i) edges.push_back({i, i + 1});
  return Hypergraph(k, 2, std::move(edges));
}

inline Hypergraph cycle_graph(std::size_t k) {
  if (k < 3) throw InvalidArgument("cycle_graph: requires k >= 3");
  auto edges = path_graph(k).edges();
  edges.push_back({0, static_cast<Vertex>(k - 1)});
  return Hypergraph(k, 2, std::move(edges));
}

/// K_{1,k-1} with center 0.
inline Hypergraph star_graph(std::size_t k) {
  std::vector<Edge> edges;
  for (Vertex i = 1; i < k; ++i) edges.push_back({0, i});
  return Hypergraph(k, 2, std::move(edges));
}

/// Path 0..handle-1 with the remaining k-handle vertices as leaves on the
/// last path vertex.
inline Hypergraph broom_graph(std::size_t k, std::size_t handle) {
  if (handle < 1 || handle > k) throw InvalidArgument("broom_graph: requires 1 <= handle <= k");
  auto edges = path_graph(handle).edges();
  for (Vertex i = static_cast<Vertex>(handle); i < k; ++i)
    edges.push_back({static_cast<Vertex>(handle - 1), i});
  return Hypergraph(k, 2, std::move(edges));
}

/// Uniform labeled tree on k vertices (Prüfer decoding), seeded.
inline Hypergraph random_tree(std::size_t k, std::uint64_t seed) {
  if (k <= 2) return path_graph(k);
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<Vertex> pick(0, static_cast<Vertex>(k - 1));
  std::vector<Vertex> code(k - 2);
  for (auto& c : code) c = pick(rng);
  std::vector<std::size_t> deg(k, 1);
  for (Vertex c : code) ++deg[c];
  std::vector<Edge> edges;
  for (Vertex c : code) {
    Vertex leaf = 0;
    while (deg[leaf] != 1) ++leaf;
    edges.push_back({leaf, c});
    --deg[leaf];
    --deg[c];
  }
  std::vector<Vertex> rest;
  for (Vertex v = 0; v < k; ++v)
    if (deg[v] == 1) rest.push_back(v);
  edges.push_back({rest[0], rest[1]});
  return Hypergraph(k, 2, std::move(edges));
}

/// Each r-subset of [n] independently with probability `density`.
inline Hypergraph random_hypergraph(std::size_t n, unsigned r, double density, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::bernoulli_distribution coin(density);
  std::vector<Edge> edges;
  for (auto& e : all_subsets(n, r))
    if (coin(rng)) edges.push_back(std::move(e));
  return Hypergraph(n, r, std::move(edges));
}

}  // namespace turan

#pragma once

#include <algorithm>
#include <bit>
#include <iterator>
#include <cstdint>
#include <limits>
#include <numeric>
#include <optional>
#include <queue>
#include <set>
#include <vector>

#include <boost/rational.hpp>

#include "turan/hypergraph.hpp"

namespace turan {

using Rational = boost::rational<std::int64_t>;

// ---------------------------------------------------------------------------
// Link, shadow, pair coverage
// ---------------------------------------------------------------------------

/// Link of S: the (r-|S|)-graph {f : f ∩ S = ∅, f ∪ S ∈ E(G)} on the same
/// label space. Its edge count is the degree d_G(S).
inline Hypergraph link(const Hypergraph& g, const VertexSet& s) {
  if (s.size() >= g.r()) throw InvalidArgument("link: |S| must be < r");
  for (Vertex v : s)
    if (v >= g.n()) throw InvalidArgument("link: vertex out of range");
  std::vector<Edge> out;
  for (const auto& e : g.edges()) {
    if (!is_subset(s.span(), e)) continue;
    Edge f;
    f.reserve(e.size() - s.size());
    std::set_difference(e.begin(), e.end(), s.begin(), s.end(), std::back_inserter(f));
    out.push_back(std::move(f));
  }
  return Hypergraph(g.n(), g.r() - static_cast<unsigned>(s.size()), std::move(out));
}

/// d_G(S), without materializing the link.
inline std::size_t set_degree(const Hypergraph& g, const VertexSet& s) {
  std::size_t d = 0;
  for (const auto& e : g.edges())
    if (is_subset(s.span(), e)) ++d;
  return d;
}

/// p-shadow: every p-set contained in some edge, in lexicographic order.
inline std::vector<VertexSet> shadow(const Hypergraph& g, unsigned p) {
  if (p < 1 || p > g.r()) throw InvalidArgument("shadow: p must satisfy 1 <= p <= r");
  std::set<Edge> acc;
  const auto pattern = all_subsets(g.r(), p);
  for (const auto& e : g.edges()) {
    for (const auto& idx : pattern) {
      Edge f;
      f.reserve(p);
      for (Vertex i : idx) f.push_back(e[i]);
      acc.insert(std::move(f));
    }
  }
  std::vector<VertexSet> out;
  out.reserve(acc.size());
  for (const auto& f : acc) out.emplace_back(f);
  return out;
}

/// Symmetric n×n matrix, true where the pair lies in a common edge.
inline std::vector<std::vector<bool>> covered_pair_matrix(const Hypergraph& g) {
  std::vector<std::vector<bool>> cov(g.n(), std::vector<bool>(g.n(), false));
  for (const auto& e : g.edges())
    for (std::size_t i = 0; i < e.size(); ++i)
      for (std::size_t j = i + 1; j < e.size(); ++j) cov[e[i]][e[j]] = cov[e[j]][e[i]] = true;
  return cov;
}

inline bool covers_pairs(const Hypergraph& g) {
  const auto cov = covered_pair_matrix(g);
  for (std::size_t u = 0; u < g.n(); ++u)
    for (std::size_t v = u + 1; v < g.n(); ++v)
      if (!cov[u][v]) return false;
  return true;
}

// ---------------------------------------------------------------------------
// Blowup
// ---------------------------------------------------------------------------

/// Replaces vertex i of L by an independent class of sizes[i] vertices
/// (consecutive blocks); every edge becomes all its transversals.
inline Hypergraph blowup(const Hypergraph& l, const std::vector<std::size_t>& sizes) {
  if (sizes.size() != l.n()) throw InvalidArgument("blowup: need one size per vertex");
  std::vector<std::size_t> offset(sizes.size() + 1, 0);
  for (std::size_t i = 0; i < sizes.size(); ++i) {
    if (sizes[i] == 0) throw InvalidArgument("blowup: class sizes must be positive");
    offset[i + 1] = offset[i] + sizes[i];
  }
  std::vector<Edge> out;
  for (const auto& e : l.edges()) {
    std::vector<std::size_t> pick(e.size(), 0);
    while (true) {
      Edge f(e.size());
      for (std::size_t k = 0; k < e.size(); ++k)
        f[k] = static_cast<Vertex>(offset[e[k]] + pick[k]);
      out.push_back(std::move(f));
      std::size_t k = 0;
      while (k < e.size() && ++pick[k] == sizes[e[k]]) pick[k++] = 0;
      if (k == e.size()) break;
    }
  }
  return Hypergraph(offset.back(), l.r(), std::move(out));
}

// ---------------------------------------------------------------------------
// Sub-hypergraph containment
// ---------------------------------------------------------------------------

enum class EmbeddingKind { subgraph, family_member };

/// Injective pattern -> host vertex map certifying containment. For family
/// members it also records the core and one covering host edge per core pair
/// (pairs in lexicographic order of core positions).
struct Embedding {
  std::vector<Vertex> map;
  EmbeddingKind kind = EmbeddingKind::subgraph;
  std::optional<VertexSet> core;
  std::vector<Edge> covering_edges;
};

namespace detail {

/// Backtracking matcher. Pattern vertices are placed in decreasing-degree
/// order (ties by label), host candidates ascending; a pattern edge is checked
/// as soon as its last vertex is placed.
class SubgraphMatcher {
 public:
  SubgraphMatcher(const Hypergraph& host, const Hypergraph& pattern)
      : host_(host), pattern_(pattern), host_deg_(host.degrees()),
        pat_deg_(pattern.degrees()), host_cov_(covered_pair_matrix(host)),
        pat_cov_(covered_pair_matrix(pattern)) {}

  /// `fixed` holds pattern->host assignments made before the search.
  std::optional<std::vector<Vertex>> run(const std::vector<std::pair<Vertex, Vertex>>& fixed = {}) {
    const std::size_t k = pattern_.n();
    if (k > host_.n()) return std::nullopt;
    assign_.assign(k, kUnset);
    used_.assign(host_.n(), false);
    for (auto [p, h] : fixed) {
      if (assign_[p] != kUnset || used_[h]) return std::nullopt;
      assign_[p] = h;
      used_[h] = true;
    }
    order_.clear();
    for (Vertex v = 0; v < k; ++v)
      if (assign_[v] == kUnset) order_.push_back(v);
    std::stable_sort(order_.begin(), order_.end(),
                     [&](Vertex a, Vertex b) { return pat_deg_[a] > pat_deg_[b]; });

    // Edges fully determined by the fixed part are checked up front; the rest
    // are attached to whichever free vertex is placed last.
    std::vector<std::size_t> position(k, 0);
    for (std::size_t i = 0; i < order_.size(); ++i) position[order_[i]] = i + 1;
    closing_.assign(order_.size() + 1, {});
    for (const auto& e : pattern_.edges()) {
      std::size_t last = 0;
      for (Vertex v : e) last = std::max(last, position[v]);
      closing_[last].push_back(&e);
    }
    for (const Edge* e : closing_[0])
      if (!edge_ok(*e)) return std::nullopt;
    if (!fixed_pairs_ok()) return std::nullopt;
    if (extend(0)) return assign_;
    return std::nullopt;
  }

 private:
  static constexpr Vertex kUnset = std::numeric_limits<Vertex>::max();

  bool edge_ok(const Edge& e) {
    scratch_.clear();
    for (Vertex v : e) scratch_.push_back(assign_[v]);
    std::sort(scratch_.begin(), scratch_.end());
    return host_.has_edge(scratch_);
  }

  bool fixed_pairs_ok() const {
    for (Vertex a = 0; a < pattern_.n(); ++a)
      for (Vertex b = a + 1; b < pattern_.n(); ++b)
        if (assign_[a] != kUnset && assign_[b] != kUnset && pat_cov_[a][b] &&
            !host_cov_[assign_[a]][assign_[b]])
          return false;
    return true;
  }

  bool extend(std::size_t depth) {
    if (depth == order_.size()) return true;
    const Vertex pv = order_[depth];
    for (Vertex hv = 0; hv < host_.n(); ++hv) {
      if (used_[hv] || host_deg_[hv] < pat_deg_[pv]) continue;
      bool ok = true;
      for (Vertex w = 0; w < pattern_.n() && ok; ++w)
        if (assign_[w] != kUnset && pat_cov_[pv][w] && !host_cov_[hv][assign_[w]]) ok = false;
      if (!ok) continue;
      assign_[pv] = hv;
      used_[hv] = true;
      for (const Edge* e : closing_[depth + 1])
        if (!edge_ok(*e)) { ok = false; break; }
      if (ok && extend(depth + 1)) return true;
      assign_[pv] = kUnset;
      used_[hv] = false;
    }
    return false;
  }

  const Hypergraph& host_;
  const Hypergraph& pattern_;
  std::vector<std::size_t> host_deg_, pat_deg_;
  std::vector<std::vector<bool>> host_cov_, pat_cov_;
  std::vector<Vertex> assign_;
  std::vector<bool> used_;
  std::vector<Vertex> order_;
  std::vector<std::vector<const Edge*>> closing_;
  Edge scratch_;
};

}  // namespace detail

/// Finds a (not necessarily induced) copy of `pattern` in `host`.
inline std::optional<Embedding> contains_subhypergraph(const Hypergraph& host,
                                                       const Hypergraph& pattern) {
  if (host.r() != pattern.r()) throw InvalidArgument("contains_subhypergraph: uniformity mismatch");
  detail::SubgraphMatcher m(host, pattern);
  auto map = m.run();
  if (!map) return std::nullopt;
  return Embedding{std::move(*map), EmbeddingKind::subgraph, std::nullopt, {}};
}

/// Finds a copy of `pattern` in `host` that uses host edge `anchor`. Used for
/// incremental freeness checks after adding `anchor`.
inline std::optional<Embedding> contains_subhypergraph_through(const Hypergraph& host,
                                                               const Hypergraph& pattern,
                                                               const Edge& anchor) {
  if (host.r() != pattern.r()) throw InvalidArgument("contains_subhypergraph: uniformity mismatch");
  detail::SubgraphMatcher m(host, pattern);
  for (const auto& pe : pattern.edges()) {
    Edge perm = anchor;
    std::sort(perm.begin(), perm.end());
    do {
      std::vector<std::pair<Vertex, Vertex>> fixed;
      for (std::size_t i = 0; i < pe.size(); ++i) fixed.emplace_back(pe[i], perm[i]);
      if (auto map = m.run(fixed))
        return Embedding{std::move(*map), EmbeddingKind::subgraph, std::nullopt, {}};
    } while (std::next_permutation(perm.begin(), perm.end()));
  }
  return std::nullopt;
}

// ---------------------------------------------------------------------------
// Matchings and kernel degree
// ---------------------------------------------------------------------------

namespace detail {

class MatchingSolver {
 public:
  explicit MatchingSolver(const Hypergraph& g) : g_(g) {}

  std::size_t solve() {
    std::vector<std::size_t> cands(g_.edge_count());
    std::iota(cands.begin(), cands.end(), 0);
    best_ = 0;
    recurse(cands, 0);
    return best_;
  }

 private:
  void recurse(const std::vector<std::size_t>& cands, std::size_t count) {
    best_ = std::max(best_, count);
    if (cands.empty()) return;
    std::set<Vertex> verts;
    for (std::size_t c : cands) verts.insert(g_.edges()[c].begin(), g_.edges()[c].end());
    const std::size_t bound = std::min(cands.size(), verts.size() / g_.r());
    if (count + bound <= best_) return;

    // Branch on the smallest vertex still in play: matched by one of its
    // edges, or left unmatched.
    const Vertex v = *verts.begin();
    std::vector<std::size_t> without_v;
    for (std::size_t c : cands) {
      const Edge& e = g_.edges()[c];
      if (!std::binary_search(e.begin(), e.end(), v)) {
        without_v.push_back(c);
        continue;
      }
      std::vector<std::size_t> next;
      for (std::size_t d : cands)
        if (intersection_size(e, g_.edges()[d]) == 0) next.push_back(d);
      recurse(next, count + 1);
    }
    recurse(without_v, count);
  }

  const Hypergraph& g_;
  std::size_t best_ = 0;
};

}  // namespace detail

/// Exact maximum number of pairwise disjoint edges (branch and bound).
inline std::size_t max_matching(const Hypergraph& g) { return detail::MatchingSolver(g).solve(); }

/// d*_G(D): the largest s such that s edges pairwise intersect exactly in D.
/// Equal to the matching number of the link of D.
inline std::size_t kernel_degree(const Hypergraph& g, const VertexSet& d) {
  if (d.size() >= g.r()) throw InvalidArgument("kernel_degree: |D| must be < r");
  const Hypergraph l = link(g, d);
  if (l.empty()) return 0;
  return max_matching(l);
}

// ---------------------------------------------------------------------------
// Maximum average degree
// ---------------------------------------------------------------------------

struct AverageDegree {
  Rational value;      ///< d(G) = max over subgraphs H of 2e(H)/n(H)
  VertexSet witness;   ///< vertex set of a maximizing induced subgraph
};

namespace detail {

inline std::size_t induced_edge_count(const Hypergraph& g, const VertexSet& s) {
  std::size_t c = 0;
  for (const auto& e : g.edges())
    if (s.contains(e[0]) && s.contains(e[1])) ++c;
  return c;
}

inline AverageDegree max_average_degree_enumerate(const Hypergraph& g) {
  const std::size_t n = g.n();
  if (n > 30) throw InvalidArgument("max_average_degree: enumeration limited to n <= 30");
  AverageDegree best{Rational(0), n ? VertexSet{0} : VertexSet{}};
  std::vector<std::uint32_t> adj(n, 0);
  for (const auto& e : g.edges()) {
    adj[e[0]] |= 1u << e[1];
    adj[e[1]] |= 1u << e[0];
  }
  for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << n); ++mask) {
    std::int64_t twice_edges = 0;
    for (std::size_t v = 0; v < n; ++v)
      if (mask >> v & 1) twice_edges += std::popcount(adj[v] & static_cast<std::uint32_t>(mask));
    const Rational val(twice_edges, std::popcount(mask));
    if (val > best.value) {
      std::vector<Vertex> members;
      for (std::size_t v = 0; v < n; ++v)
        if (mask >> v & 1) members.push_back(static_cast<Vertex>(v));
      best = {val, VertexSet(std::move(members))};
    }
  }
  return best;
}

/// Dinic max-flow on integer capacities.
class MaxFlow {
 public:
  explicit MaxFlow(std::size_t n) : adj_(n), level_(n), it_(n) {}

  void add_edge(std::size_t u, std::size_t v, std::int64_t cap) {
    adj_[u].push_back({v, adj_[v].size(), cap});
    adj_[v].push_back({u, adj_[u].size() - 1, 0});
  }

  std::int64_t run(std::size_t s, std::size_t t) {
    std::int64_t flow = 0;
    while (bfs(s, t)) {
      std::fill(it_.begin(), it_.end(), 0);
      while (std::int64_t f = dfs(s, t, std::numeric_limits<std::int64_t>::max())) flow += f;
    }
    return flow;
  }

  /// Vertices reachable from s in the residual graph after run().
  std::vector<bool> source_side(std::size_t s) const {
    std::vector<bool> seen(adj_.size(), false);
    std::queue<std::size_t> q;
    q.push(s);
    seen[s] = true;
    while (!q.empty()) {
      auto u = q.front();
      q.pop();
      for (const auto& a : adj_[u])
        if (a.cap > 0 && !seen[a.to]) { seen[a.to] = true; q.push(a.to); }
    }
    return seen;
  }

 private:
  struct Arc { std::size_t to, rev; std::int64_t cap; };

  bool bfs(std::size_t s, std::size_t t) {
    std::fill(level_.begin(), level_.end(), -1);
    std::queue<std::size_t> q;
    level_[s] = 0;
    q.push(s);
    while (!q.empty()) {
      auto u = q.front();
      q.pop();
      for (const auto& a : adj_[u])
        if (a.cap > 0 && level_[a.to] < 0) { level_[a.to] = level_[u] + 1; q.push(a.to); }
    }
    return level_[t] >= 0;
  }

  std::int64_t dfs(std::size_t u, std::size_t t, std::int64_t f) {
    if (u == t) return f;
    for (auto& i = it_[u]; i < adj_[u].size(); ++i) {
      Arc& a = adj_[u][i];
      if (a.cap <= 0 || level_[a.to] != level_[u] + 1) continue;
      if (std::int64_t got = dfs(a.to, t, std::min(f, a.cap))) {
        a.cap -= got;
        adj_[a.to][a.rev].cap += got;
        return got;
      }
    }
    return 0;
  }

  std::vector<std::vector<Arc>> adj_;
  std::vector<int> level_;
  std::vector<std::size_t> it_;
};

/// Dinkelbach iteration on the densest-subgraph min-cut (Goldberg's network).
/// For density g = a/b the cut around H costs b·m·n + 2(a|H| - b·e(H)), so a
/// cut below b·m·n exposes a strictly denser H; exact in integer arithmetic.
inline AverageDegree max_average_degree_flow(const Hypergraph& g) {
  const std::size_t n = g.n();
  const auto m = static_cast<std::int64_t>(g.edge_count());
  if (n == 0) return {Rational(0), {}};
  if (m == 0) return {Rational(0), VertexSet{0}};
  const auto deg = g.degrees();

  std::vector<Vertex> all(n);
  std::iota(all.begin(), all.end(), 0);
  VertexSet witness(all);
  Rational density(m, static_cast<std::int64_t>(n));

  while (true) {
    const std::int64_t a = density.numerator(), b = density.denominator();
    const std::size_t s = n, t = n + 1;
    MaxFlow flow(n + 2);
    for (std::size_t v = 0; v < n; ++v) {
      flow.add_edge(s, v, b * m);
      flow.add_edge(v, t, b * m + 2 * a - b * static_cast<std::int64_t>(deg[v]));
    }
    for (const auto& e : g.edges()) {
      flow.add_edge(e[0], e[1], b);
      flow.add_edge(e[1], e[0], b);
    }
    const std::int64_t cut = flow.run(s, t);
    if (cut >= b * m * static_cast<std::int64_t>(n)) break;
    const auto side = flow.source_side(s);
    std::vector<Vertex> h;
    for (std::size_t v = 0; v < n; ++v)
      if (side[v]) h.push_back(static_cast<Vertex>(v));
    VertexSet hs(std::move(h));
    const Rational next(static_cast<std::int64_t>(induced_edge_count(g, hs)),
                        static_cast<std::int64_t>(hs.size()));
    if (hs.empty() || next <= density) break;
    density = next;
    witness = std::move(hs);
  }
  return {density * 2, witness};
}

}  // namespace detail

inline constexpr std::size_t kAverageDegreeEnumerationLimit = 20;

/// Exact maximum average degree of a 2-graph: subset enumeration up to
/// kAverageDegreeEnumerationLimit vertices, parametric min-cut beyond.
inline AverageDegree max_average_degree(const Hypergraph& g) {
  if (g.r() != 2) throw InvalidArgument("max_average_degree: requires a 2-graph");
  if (g.n() <= kAverageDegreeEnumerationLimit) return detail::max_average_degree_enumerate(g);
  return detail::max_average_degree_flow(g);
}

}  // namespace turan

#pragma once

#include <algorithm>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace turan {

// ---------------------------------------------------------------------------
// Errors
// ---------------------------------------------------------------------------

class InvalidArgument : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Raised when an operation's documented precondition does not hold for the
/// given graph (e.g. symmetrizing across a covered pair).
class PreconditionViolation : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

using Vertex = std::uint32_t;
using Edge = std::vector<Vertex>;

// ---------------------------------------------------------------------------
// VertexSet
// ---------------------------------------------------------------------------

/// Sorted, duplicate-free list of vertex ids.
class VertexSet {
 public:
  VertexSet() = default;
  VertexSet(std::initializer_list<Vertex> vs) : VertexSet(std::vector<Vertex>(vs)) {}
  explicit VertexSet(std::vector<Vertex> vs) : members_(std::move(vs)) {
    std::sort(members_.begin(), members_.end());
    members_.erase(std::unique(members_.begin(), members_.end()), members_.end());
  }

  [[nodiscard]] std::size_t size() const noexcept { return members_.size(); }
  [[nodiscard]] bool empty() const noexcept { return members_.empty(); }
  [[nodiscard]] auto begin() const noexcept { return members_.begin(); }
  [[nodiscard]] auto end() const noexcept { return members_.end(); }
  [[nodiscard]] Vertex operator[](std::size_t i) const { return members_[i]; }
  [[nodiscard]] const std::vector<Vertex>& members() const noexcept { return members_; }
  [[nodiscard]] std::span<const Vertex> span() const noexcept { return members_; }

  [[nodiscard]] bool contains(Vertex v) const {
    return std::binary_search(members_.begin(), members_.end(), v);
  }

  void insert(Vertex v) {
    auto it = std::lower_bound(members_.begin(), members_.end(), v);
    if (it == members_.end() || *it != v) members_.insert(it, v);
  }

  void erase(Vertex v) {
    auto it = std::lower_bound(members_.begin(), members_.end(), v);
    if (it != members_.end() && *it == v) members_.erase(it);
  }

  friend bool operator==(const VertexSet&, const VertexSet&) = default;
  friend auto operator<=>(const VertexSet&, const VertexSet&) = default;

 private:
  std::vector<Vertex> members_;
};

// ---------------------------------------------------------------------------
// Counting helpers
// ---------------------------------------------------------------------------

/// Binomial coefficient C(n, k); 0 when k > n. Throws on 64-bit overflow.
inline std::uint64_t binomial(std::uint64_t n, std::uint64_t k) {
  if (k > n) return 0;
  k = std::min(k, n - k);
  unsigned __int128 c = 1;
  for (std::uint64_t i = 0; i < k; ++i) {
    c = c * (n - i) / (i + 1);
    if (c > UINT64_MAX) throw InvalidArgument("binomial: overflow");
  }
  return static_cast<std::uint64_t>(c);
}

/// [m]_r = m(m-1)...(m-r+1), with [m]_0 = 1.
inline std::uint64_t falling_factorial(std::int64_t m, std::int64_t r) {
  if (r < 0 || m < r) throw InvalidArgument("falling_factorial: requires m >= r >= 0");
  unsigned __int128 acc = 1;
  for (std::int64_t i = 0; i < r; ++i) {
    acc *= static_cast<unsigned __int128>(m - i);
    if (acc > UINT64_MAX) throw InvalidArgument("falling_factorial: overflow");
  }
  return static_cast<std::uint64_t>(acc);
}

inline std::uint64_t factorial(unsigned r) { return falling_factorial(r, r); }

// ---------------------------------------------------------------------------
// Hypergraph
// ---------------------------------------------------------------------------

/// r-uniform hypergraph on the dense label space {0..n-1}.
///
/// Edges are stored as sorted vertex lists, and the edge list itself is kept
/// sorted lexicographically, so membership is a binary search. Values are
/// immutable once constructed; "modifying" operations return a new graph.
class Hypergraph {
 public:
  Hypergraph() = default;

  Hypergraph(std::size_t n, unsigned r) : n_(n), r_(r) {
    if (r == 0) throw InvalidArgument("hypergraph: uniformity must be >= 1");
  }

  /// Validates and canonicalizes: each edge sorted, duplicate edges merged.
  Hypergraph(std::size_t n, unsigned r, std::vector<Edge> edges) : Hypergraph(n, r) {
    for (auto& e : edges) {
      std::sort(e.begin(), e.end());
      check_edge(e);
    }
    std::sort(edges.begin(), edges.end());
    edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
    edges_ = std::move(edges);
  }

  [[nodiscard]] std::size_t n() const noexcept { return n_; }
  [[nodiscard]] unsigned r() const noexcept { return r_; }
  [[nodiscard]] const std::vector<Edge>& edges() const noexcept { return edges_; }
  [[nodiscard]] std::size_t edge_count() const noexcept { return edges_.size(); }
  [[nodiscard]] bool empty() const noexcept { return edges_.empty(); }

  /// `e` must be sorted.
  [[nodiscard]] bool has_edge(std::span<const Vertex> e) const {
    auto it = std::lower_bound(edges_.begin(), edges_.end(), e,
                               [](const Edge& a, std::span<const Vertex> b) {
                                 return std::lexicographical_compare(a.begin(), a.end(),
                                                                     b.begin(), b.end());
                               });
    return it != edges_.end() && std::equal(it->begin(), it->end(), e.begin(), e.end());
  }

  [[nodiscard]] std::size_t degree(Vertex v) const {
    std::size_t d = 0;
    for (const auto& e : edges_)
      if (std::binary_search(e.begin(), e.end(), v)) ++d;
    return d;
  }

  [[nodiscard]] std::vector<std::size_t> degrees() const {
    std::vector<std::size_t> d(n_, 0);
    for (const auto& e : edges_)
      for (Vertex v : e) ++d[v];
    return d;
  }

  [[nodiscard]] Hypergraph with_edge(Edge e) const {
    std::sort(e.begin(), e.end());
    check_edge(e);
    Hypergraph g = *this;
    auto it = std::lower_bound(g.edges_.begin(), g.edges_.end(), e);
    if (it == g.edges_.end() || *it != e) g.edges_.insert(it, std::move(e));
    return g;
  }

  [[nodiscard]] Hypergraph without_edge(const Edge& e) const {
    Hypergraph g = *this;
    auto it = std::lower_bound(g.edges_.begin(), g.edges_.end(), e);
    if (it != g.edges_.end() && *it == e) g.edges_.erase(it);
    return g;
  }

  /// Same edges, larger label space (extra vertices isolated).
  [[nodiscard]] Hypergraph with_vertex_count(std::size_t n) const {
    if (n < n_) {
      for (const auto& e : edges_)
        if (e.back() >= n) throw InvalidArgument("with_vertex_count: edge out of range");
    }
    Hypergraph g = *this;
    g.n_ = n;
    return g;
  }

  friend bool operator==(const Hypergraph&, const Hypergraph&) = default;

 private:
  void check_edge(const Edge& e) const {
    if (e.size() != r_)
      throw InvalidArgument("hypergraph: edge has " + std::to_string(e.size()) +
                            " vertices, expected " + std::to_string(r_));
    for (std::size_t i = 0; i < e.size(); ++i) {
      if (e[i] >= n_)
        throw InvalidArgument("hypergraph: vertex " + std::to_string(e[i]) + " out of range");
      if (i > 0 && e[i] == e[i - 1])
        throw InvalidArgument("hypergraph: repeated vertex " + std::to_string(e[i]));
    }
  }

  std::size_t n_ = 0;
  unsigned r_ = 1;
  std::vector<Edge> edges_;
};

// ---------------------------------------------------------------------------
// Small structural helpers shared by several modules
// ---------------------------------------------------------------------------

/// Sub-hypergraph induced on `keep`, relabeled 0..|keep|-1 in ascending order.
inline Hypergraph induced_subgraph(const Hypergraph& g, const VertexSet& keep) {
  std::vector<std::int64_t> index(g.n(), -1);
  for (std::size_t i = 0; i < keep.size(); ++i) {
    if (keep[i] >= g.n()) throw InvalidArgument("induced_subgraph: vertex out of range");
    index[keep[i]] = static_cast<std::int64_t>(i);
  }
  std::vector<Edge> out;
  for (const auto& e : g.edges()) {
    Edge f;
    f.reserve(e.size());
    for (Vertex v : e) {
      if (index[v] < 0) break;
      f.push_back(static_cast<Vertex>(index[v]));
    }
    if (f.size() == e.size()) out.push_back(std::move(f));
  }
  return Hypergraph(keep.size(), g.r(), std::move(out));
}

/// Drops every edge touching `removed`; labels are unchanged.
inline Hypergraph delete_vertices(const Hypergraph& g, const VertexSet& removed) {
  std::vector<Edge> out;
  for (const auto& e : g.edges()) {
    bool hit = std::any_of(e.begin(), e.end(), [&](Vertex v) { return removed.contains(v); });
    if (!hit) out.push_back(e);
  }
  return Hypergraph(g.n(), g.r(), std::move(out));
}

/// Applies `perm` (old label -> new label) to every edge.
inline Hypergraph relabel(const Hypergraph& g, std::span<const Vertex> perm, std::size_t new_n) {
  if (perm.size() != g.n()) throw InvalidArgument("relabel: permutation size mismatch");
  std::vector<Edge> out;
  out.reserve(g.edge_count());
  for (const auto& e : g.edges()) {
    Edge f;
    f.reserve(e.size());
    for (Vertex v : e) f.push_back(perm[v]);
    out.push_back(std::move(f));
  }
  return Hypergraph(new_n, g.r(), std::move(out));
}

inline bool is_subset(std::span<const Vertex> small, std::span<const Vertex> big) {
  return std::includes(big.begin(), big.end(), small.begin(), small.end());
}

inline std::size_t intersection_size(std::span<const Vertex> a, std::span<const Vertex> b) {
  std::size_t i = 0, j = 0, c = 0;
  while (i < a.size() && j < b.size()) {
    if (a[i] < b[j]) ++i;
    else if (b[j] < a[i]) ++j;
    else { ++c; ++i; ++j; }
  }
  return c;
}

/// All k-subsets of {0..n-1} in lexicographic order.
inline std::vector<Edge> all_subsets(std::size_t n, std::size_t k) {
  std::vector<Edge> out;
  if (k > n) return out;
  Edge cur(k);
  for (std::size_t i = 0; i < k; ++i) cur[i] = static_cast<Vertex>(i);
  while (true) {
    out.push_back(cur);
    std::size_t i = k;
    while (i > 0 && cur[i - 1] == n - k + i - 1) --i;
    if (i == 0) break;
    ++cur[i - 1];
    for (std::size_t j = i; j < k; ++j) cur[j] = cur[j - 1] + 1;
  }
  return out;
}

/// Complete r-graph K_m^(r).
inline Hypergraph complete_hypergraph(std::size_t m, unsigned r) {
  return Hypergraph(m, r, all_subsets(m, r));
}

}  // namespace turan

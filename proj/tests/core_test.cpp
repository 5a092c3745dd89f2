#include <gtest/gtest.h>

#include <random>

#include "oracles.hpp"
#include "turan/constructions.hpp"
#include "turan/core.hpp"

using namespace turan;

namespace {

Hypergraph random_graph(std::size_t n, unsigned r, double density, std::uint64_t seed) {
  return random_hypergraph(n, r, density, seed);
}

}  // namespace

TEST(Hypergraph, CanonicalizesEdges) {
  Hypergraph g(5, 3, {{2, 1, 0}, {0, 1, 2}, {4, 3, 1}});
  EXPECT_EQ(g.edge_count(), 2u);
  EXPECT_EQ(g.edges()[0], (Edge{0, 1, 2}));
  EXPECT_EQ(g.edges()[1], (Edge{1, 3, 4}));
  EXPECT_TRUE(g.has_edge(Edge{1, 3, 4}));
  EXPECT_FALSE(g.has_edge(Edge{0, 1, 3}));
}

TEST(Hypergraph, RejectsMalformedEdges) {
  EXPECT_THROW(Hypergraph(4, 3, {{0, 1}}), InvalidArgument);
  EXPECT_THROW(Hypergraph(4, 3, {{0, 1, 1}}), InvalidArgument);
  EXPECT_THROW(Hypergraph(4, 3, {{0, 1, 4}}), InvalidArgument);
  EXPECT_THROW(Hypergraph(4, 0), InvalidArgument);
}

TEST(Hypergraph, IsolatedVerticesAreRepresentable) {
  Hypergraph g(10, 2, {{0, 1}});
  EXPECT_EQ(g.n(), 10u);
  EXPECT_EQ(g.degree(9), 0u);
}

TEST(Counting, FallingFactorial) {
  EXPECT_EQ(falling_factorial(4, 3), 24u);
  EXPECT_EQ(falling_factorial(7, 0), 1u);
  EXPECT_EQ(falling_factorial(5, 3), 60u);
  EXPECT_THROW(falling_factorial(2, 3), InvalidArgument);
}

TEST(Counting, Binomial) {
  EXPECT_EQ(binomial(5, 2), 10u);
  EXPECT_EQ(binomial(3, 5), 0u);
  EXPECT_EQ(binomial(64, 32), 1832624140942590534u);
  EXPECT_EQ(all_subsets(6, 3).size(), 20u);
  EXPECT_EQ(all_subsets(4, 0).size(), 1u);
}

TEST(Link, Examples) {
  Hypergraph g(4, 3, {{0, 1, 2}, {0, 1, 3}});
  const auto l = link(g, VertexSet{0, 1});
  EXPECT_EQ(l.r(), 1u);
  EXPECT_EQ(l.edges(), (std::vector<Edge>{{2}, {3}}));

  Hypergraph single(4, 3, {{0, 1, 2}});
  EXPECT_TRUE(link(single, VertexSet{3}).empty());
  EXPECT_EQ(link(single, VertexSet{3}).r(), 2u);

  const auto t = turan_hypergraph(6, 3, 3).graph;
  EXPECT_EQ(link(t, VertexSet{0}).edge_count(), 4u);
}

TEST(Link, Errors) {
  Hypergraph g(4, 3, {{0, 1, 2}});
  EXPECT_THROW(link(g, VertexSet{0, 1, 2}), InvalidArgument);
  EXPECT_THROW(link(g, VertexSet{7}), InvalidArgument);
}

TEST(Link, DegreeAndHandshake) {
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    const auto g = random_graph(7, 3, 0.4, seed);
    std::size_t total = 0;
    for (Vertex v = 0; v < g.n(); ++v) {
      EXPECT_EQ(set_degree(g, VertexSet{v}), link(g, VertexSet{v}).edge_count());
      total += g.degree(v);
    }
    EXPECT_EQ(total, 3 * g.edge_count());
  }
}

TEST(Shadow, Examples) {
  Hypergraph g(4, 3, {{0, 1, 2}});
  EXPECT_EQ(shadow(g, 2), (std::vector<VertexSet>{{0, 1}, {0, 2}, {1, 2}}));
  EXPECT_EQ(shadow(g, 3), (std::vector<VertexSet>{{0, 1, 2}}));
  Hypergraph h(4, 3, {{0, 1, 2}, {1, 2, 3}});
  const auto s = shadow(h, 2);
  EXPECT_EQ(s.size(), 5u);
  EXPECT_EQ(std::count(s.begin(), s.end(), VertexSet{0, 3}), 0);
  EXPECT_THROW(shadow(h, 0), InvalidArgument);
  EXPECT_THROW(shadow(h, 4), InvalidArgument);
}

TEST(Shadow, TopLevelAndMonotone) {
  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    const auto g = random_graph(7, 3, 0.3, seed);
    EXPECT_EQ(shadow(g, 3).size(), g.edge_count());
    Hypergraph bigger = g;
    const auto extra = random_graph(7, 3, 0.3, seed + 100);
    for (const auto& e : extra.edges()) bigger = bigger.with_edge(e);
    const auto small = shadow(g, 2), large = shadow(bigger, 2);
    for (const auto& s : small) EXPECT_TRUE(std::binary_search(large.begin(), large.end(), s));
  }
}

TEST(CoversPairs, Examples) {
  EXPECT_TRUE(covers_pairs(complete_hypergraph(4, 3)));
  EXPECT_FALSE(covers_pairs(Hypergraph(4, 3, {{0, 1, 2}})));
  EXPECT_FALSE(covers_pairs(turan_hypergraph(6, 3, 3).graph));
  EXPECT_TRUE(covers_pairs(Hypergraph(1, 2)));
  EXPECT_TRUE(covers_pairs(Hypergraph(0, 3)));
}

TEST(Blowup, Examples) {
  EXPECT_EQ(blowup(Hypergraph(3, 3, {{0, 1, 2}}), {2, 2, 2}).edge_count(), 8u);
  const auto tri = complete_hypergraph(3, 2);
  EXPECT_EQ(blowup(tri, {1, 1, 1}), tri);
  EXPECT_EQ(blowup(complete_hypergraph(3, 3), {3, 3, 3}), turan_hypergraph(9, 3, 3).graph);
  EXPECT_THROW(blowup(tri, {1, 0, 1}), InvalidArgument);
  EXPECT_THROW(blowup(tri, {1, 1}), InvalidArgument);
}

TEST(Blowup, EdgeCountIsProductSum) {
  std::mt19937_64 rng(3);
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    const auto l = random_graph(5, 3, 0.5, seed);
    std::vector<std::size_t> sizes(5);
    for (auto& s : sizes) s = 1 + rng() % 4;
    std::size_t want = 0;
    for (const auto& e : l.edges()) want += sizes[e[0]] * sizes[e[1]] * sizes[e[2]];
    EXPECT_EQ(blowup(l, sizes).edge_count(), want);
  }
}

TEST(Containment, Examples) {
  const auto edge = complete_hypergraph(3, 3);
  auto emb = contains_subhypergraph(turan_hypergraph(6, 3, 3).graph, edge);
  ASSERT_TRUE(emb);
  EXPECT_EQ(emb->kind, EmbeddingKind::subgraph);
  EXPECT_FALSE(contains_subhypergraph(turan_hypergraph(9, 3, 3).graph, generalized_triangle(3)));
  EXPECT_FALSE(contains_subhypergraph(turan_hypergraph(8, 2, 3).graph, complete_hypergraph(4, 2)));
  EXPECT_THROW(contains_subhypergraph(complete_hypergraph(4, 2), edge), InvalidArgument);
}

TEST(Containment, EmbeddingIsValid) {
  for (std::uint64_t seed = 0; seed < 30; ++seed) {
    const auto host = random_graph(7, 3, 0.45, seed);
    const auto pattern = generalized_triangle(3);
    auto emb = contains_subhypergraph(host, pattern);
    if (!emb) continue;
    std::vector<Vertex> image = emb->map;
    std::sort(image.begin(), image.end());
    EXPECT_EQ(std::adjacent_find(image.begin(), image.end()), image.end());
    for (const auto& e : pattern.edges()) {
      Edge f;
      for (Vertex v : e) f.push_back(emb->map[v]);
      std::sort(f.begin(), f.end());
      EXPECT_TRUE(host.has_edge(f));
    }
  }
}

TEST(Containment, AgreesWithBruteForce) {
  const std::vector<Hypergraph> patterns{generalized_triangle(3), fan(3).with_vertex_count(7),
                                         complete_hypergraph(4, 3), Hypergraph(5, 3, {{0, 1, 2}, {2, 3, 4}})};
  for (std::uint64_t seed = 0; seed < 40; ++seed) {
    const auto host = random_graph(7, 3, 0.15 + 0.02 * static_cast<double>(seed % 20), seed);
    for (const auto& p : patterns)
      EXPECT_EQ(contains_subhypergraph(host, p).has_value(), oracle::contains(host, p)) << "seed " << seed;
  }
  for (std::uint64_t seed = 0; seed < 40; ++seed) {
    const auto host = random_graph(7, 2, 0.5, seed);
    for (const auto& p : {complete_hypergraph(4, 2), cycle_graph(5), path_graph(6), star_graph(5)})
      EXPECT_EQ(contains_subhypergraph(host, p).has_value(), oracle::contains(host, p)) << "seed " << seed;
  }
}

TEST(Containment, ThroughAnchorMatchesDifference) {
  // A copy through e exists iff G has a copy and G - e does not, or some
  // copy uses e; check the weaker implication against brute force.
  const auto pattern = generalized_triangle(3);
  for (std::uint64_t seed = 0; seed < 30; ++seed) {
    const auto g = random_graph(6, 3, 0.3, seed);
    for (const auto& e : g.edges()) {
      const bool through = contains_subhypergraph_through(g, pattern, e).has_value();
      if (!oracle::contains(g, pattern)) EXPECT_FALSE(through);
      if (oracle::contains(g, pattern) && !oracle::contains(g.without_edge(e), pattern)) EXPECT_TRUE(through);
    }
  }
}

TEST(Matching, Examples) {
  EXPECT_EQ(max_matching(Hypergraph(9, 3, {{0, 1, 2}, {3, 4, 5}, {6, 7, 8}})), 3u);
  EXPECT_EQ(max_matching(Hypergraph(5, 3, {{0, 1, 2}, {0, 3, 4}})), 1u);
  EXPECT_EQ(max_matching(turan_hypergraph(6, 3, 3).graph), 2u);
  EXPECT_EQ(max_matching(Hypergraph(4, 3)), 0u);
}

TEST(Matching, AgreesWithSubsetEnumeration) {
  for (std::uint64_t seed = 0; seed < 60; ++seed) {
    const auto g = random_graph(8, 3, 0.05 + 0.004 * static_cast<double>(seed), seed);
    if (g.edge_count() > 20) continue;
    EXPECT_EQ(max_matching(g), oracle::max_matching(g)) << "seed " << seed;
  }
}

TEST(Matching, FranklBound) {
  for (std::uint64_t seed = 0; seed < 50; ++seed) {
    const std::size_t n = 4 + seed % 6;
    const auto g = random_graph(n, 3, 0.1 + 0.015 * static_cast<double>(seed), seed);
    EXPECT_LE(g.edge_count(), max_matching(g) * binomial(n, 2));
  }
}

TEST(KernelDegree, Examples) {
  EXPECT_EQ(kernel_degree(Hypergraph(5, 3, {{0, 1, 2}, {0, 1, 3}, {0, 1, 4}}), VertexSet{0, 1}), 3u);
  EXPECT_EQ(kernel_degree(Hypergraph(4, 3, {{0, 1, 2}, {0, 1, 3}, {0, 2, 3}}), VertexSet{0}), 1u);
  EXPECT_EQ(kernel_degree(Hypergraph(5, 3, {{0, 1, 2}}), VertexSet{3, 4}), 0u);
  EXPECT_THROW(kernel_degree(Hypergraph(5, 3), VertexSet{0, 1, 2}), InvalidArgument);
}

TEST(KernelDegree, IsSunflowerSize) {
  // Brute force: largest set of edges through D pairwise meeting exactly in D.
  for (std::uint64_t seed = 0; seed < 30; ++seed) {
    const auto g = random_graph(7, 3, 0.5, seed);
    const VertexSet d{0};
    std::vector<Edge> through;
    for (const auto& e : g.edges())
      if (e[0] == 0) through.push_back(e);
    std::size_t best = 0;
    for (std::uint32_t mask = 1; mask < (1u << through.size()); ++mask) {
      bool ok = true;
      for (std::size_t i = 0; i < through.size() && ok; ++i)
        for (std::size_t j = i + 1; j < through.size() && ok; ++j)
          if ((mask >> i & 1u) && (mask >> j & 1u)) ok = intersection_size(through[i], through[j]) == 1;
      if (ok) best = std::max<std::size_t>(best, static_cast<std::size_t>(__builtin_popcount(mask)));
    }
    EXPECT_EQ(kernel_degree(g, d), best) << "seed " << seed;
  }
}

TEST(AverageDegree, Examples) {
  EXPECT_EQ(max_average_degree(complete_hypergraph(4, 2)).value, Rational(3));
  const auto p4 = max_average_degree(path_graph(4));
  EXPECT_EQ(p4.value, Rational(3, 2));
  EXPECT_EQ(p4.witness, (VertexSet{0, 1, 2, 3}));
  EXPECT_EQ(max_average_degree(complete_hypergraph(4, 2).with_vertex_count(5)).value, Rational(3));
  EXPECT_THROW(max_average_degree(complete_hypergraph(4, 3)), InvalidArgument);
}

TEST(AverageDegree, EnumerationMatchesBruteForce) {
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    const auto g = random_graph(8, 2, 0.4, seed);
    Rational best(0);
    for (std::uint32_t mask = 1; mask < (1u << 8); ++mask) {
      std::size_t e = 0;
      for (const auto& ed : g.edges())
        if ((mask >> ed[0] & 1u) && (mask >> ed[1] & 1u)) ++e;
      best = std::max(best, Rational(static_cast<std::int64_t>(2 * e), __builtin_popcount(mask)));
    }
    const auto got = max_average_degree(g);
    EXPECT_EQ(got.value, best);
    const auto induced = detail::induced_edge_count(g, got.witness);
    EXPECT_EQ(Rational(static_cast<std::int64_t>(2 * induced), static_cast<std::int64_t>(got.witness.size())),
              got.value);
  }
}

TEST(AverageDegree, FlowMatchesEnumeration) {
  for (std::uint64_t seed = 0; seed < 25; ++seed) {
    const std::size_t n = 6 + seed % 12;
    const auto g = random_graph(n, 2, 0.1 + 0.03 * static_cast<double>(seed % 20), seed);
    const auto a = detail::max_average_degree_enumerate(g);
    const auto b = detail::max_average_degree_flow(g);
    EXPECT_EQ(a.value, b.value) << "seed " << seed;
    const auto induced = detail::induced_edge_count(g, b.witness);
    if (!b.witness.empty())
      EXPECT_EQ(Rational(static_cast<std::int64_t>(2 * induced), static_cast<std::int64_t>(b.witness.size())),
                b.value);
  }
}

TEST(AverageDegree, LargeGraphUsesFlow) {
  // Disjoint K_5 and a long path: densest part is the clique, value 4.
  auto edges = complete_hypergraph(5, 2).edges();
  for (Vertex v = 5; v + 1 < 40; ++v) edges.push_back({v, v + 1});
  const Hypergraph g(40, 2, edges);
  const auto d = max_average_degree(g);
  EXPECT_EQ(d.value, Rational(4));
  EXPECT_EQ(d.witness, (VertexSet{0, 1, 2, 3, 4}));
}

#include <gtest/gtest.h>

#include "oracles.hpp"
#include "turan/constructions.hpp"

using namespace turan;

TEST(TuranHypergraph, Examples) {
  EXPECT_EQ(turan_hypergraph(9, 3, 3).graph.edge_count(), 27u);
  const auto t7 = turan_hypergraph(7, 3, 3);
  EXPECT_EQ(t7.graph.edge_count(), 12u);
  EXPECT_EQ(t7.parts[0].size(), 3u);
  EXPECT_EQ(t7.parts[1].size(), 2u);
  EXPECT_EQ(t7.parts[2].size(), 2u);
  EXPECT_THROW(turan_hypergraph(5, 3, 2), InvalidArgument);
}

TEST(TuranHypergraph, PartsAndTransversality) {
  for (std::size_t n = 0; n <= 12; ++n) {
    for (unsigned r = 2; r <= 4; ++r) {
      for (std::size_t l = r; l <= r + 2; ++l) {
        const auto t = turan_hypergraph(n, r, l);
        std::vector<int> part_of(n, -1);
        std::size_t total = 0;
        for (std::size_t i = 0; i < t.parts.size(); ++i) {
          total += t.parts[i].size();
          for (Vertex v : t.parts[i]) {
            EXPECT_EQ(part_of[v], -1);
            part_of[v] = static_cast<int>(i);
          }
          if (i > 0) EXPECT_GE(t.parts[i - 1].size(), t.parts[i].size());
          EXPECT_LE(t.parts[0].size() - t.parts.back().size(), 1u);
        }
        EXPECT_EQ(total, n);
        // Brute force: count r-sets meeting r distinct parts.
        std::size_t transversals = 0;
        for (const auto& e : all_subsets(n, r)) {
          std::vector<int> seen;
          for (Vertex v : e) seen.push_back(part_of[v]);
          std::sort(seen.begin(), seen.end());
          if (std::adjacent_find(seen.begin(), seen.end()) == seen.end()) ++transversals;
        }
        EXPECT_EQ(t.graph.edge_count(), transversals);
        EXPECT_EQ(turan_edge_count(n, r, l), transversals);
      }
    }
  }
}

TEST(TuranHypergraph, BalancedFormula) {
  for (unsigned r = 2; r <= 4; ++r) {
    for (std::size_t n = r; n <= 24; ++n) {
      std::uint64_t want = 1;
      for (unsigned i = 1; i <= r; ++i) want *= (n + i - 1) / r;
      EXPECT_EQ(turan_hypergraph(n, r, r).graph.edge_count(), want);
    }
  }
}

TEST(TuranHypergraph, DensityWhenDivisible) {
  // |T_r(n,m)| = ([m]_r/m^r) n^r/r! when m | n and bounded by it otherwise.
  for (unsigned r = 2; r <= 3; ++r) {
    for (std::size_t m = r; m <= 5; ++m) {
      for (std::size_t n = m; n <= 15; ++n) {
        const double bound = static_cast<double>(falling_factorial(static_cast<std::int64_t>(m), r)) /
                             std::pow(static_cast<double>(m), r) * std::pow(static_cast<double>(n), r) /
                             static_cast<double>(factorial(r));
        const double got = static_cast<double>(turan_edge_count(n, r, m));
        if (n % m == 0) EXPECT_NEAR(got, bound, 1e-9);
        EXPECT_LE(got, bound + 1e-9);
      }
    }
  }
}

TEST(GeneralizedTriangle, Examples) {
  EXPECT_EQ(generalized_triangle(3).edges(), (std::vector<Edge>{{0, 1, 2}, {0, 1, 3}, {2, 3, 4}}));
  EXPECT_EQ(generalized_triangle(2), complete_hypergraph(3, 2));
  for (unsigned r = 2; r <= 6; ++r) {
    EXPECT_EQ(generalized_triangle(r).n(), 2 * r - 1);
    EXPECT_EQ(generalized_triangle(r).edge_count(), 3u);
  }
  EXPECT_THROW(generalized_triangle(1), InvalidArgument);
}

TEST(Cancellative, Examples) {
  EXPECT_TRUE(is_cancellative(turan_hypergraph(6, 3, 3).graph));
  EXPECT_FALSE(is_cancellative(generalized_triangle(3)));
  EXPECT_TRUE(is_cancellative(Hypergraph(5, 3, {{0, 1, 2}, {0, 1, 3}})));
}

TEST(Cancellative, AgreesWithDefinition) {
  // A ∪ B = A ∪ C with B != C, over ordered triples.
  for (std::uint64_t seed = 0; seed < 60; ++seed) {
    const auto g = random_hypergraph(6, 3, 0.1 + 0.01 * static_cast<double>(seed), seed);
    bool violation = false;
    const auto& es = g.edges();
    for (std::size_t a = 0; a < es.size() && !violation; ++a)
      for (std::size_t b = 0; b < es.size() && !violation; ++b)
        for (std::size_t c = 0; c < es.size() && !violation; ++c) {
          if (b == c || a == b || a == c) continue;
          Edge ab, ac;
          std::set_union(es[a].begin(), es[a].end(), es[b].begin(), es[b].end(), std::back_inserter(ab));
          std::set_union(es[a].begin(), es[a].end(), es[c].begin(), es[c].end(), std::back_inserter(ac));
          violation = ab == ac;
        }
    EXPECT_EQ(is_cancellative(g), !violation) << "seed " << seed;
  }
}

TEST(Sigma, Examples) {
  for (unsigned r = 2; r <= 5; ++r) EXPECT_TRUE(contains_sigma_member(generalized_triangle(r)));
  for (std::size_t n = 3; n <= 9; ++n) EXPECT_FALSE(contains_sigma_member(turan_hypergraph(n, 3, 3).graph));
  EXPECT_FALSE(contains_sigma_member(Hypergraph(7, 3, {{0, 1, 2}, {0, 3, 4}, {1, 3, 5}})));
}

TEST(Sigma, WitnessesAreCancellativeViolations) {
  for (std::uint64_t seed = 0; seed < 60; ++seed) {
    const auto g = random_hypergraph(7, 3, 0.15, seed);
    if (auto w = find_sigma_member(g)) {
      EXPECT_EQ(intersection_size((*w)[0], (*w)[1]), 2u);
      EXPECT_FALSE(is_cancellative(g));
    }
    if (is_cancellative(g)) EXPECT_FALSE(contains_sigma_member(g));
  }
}

TEST(ExpandedClique, Examples) {
  const auto h33 = expanded_clique_with_embedded(Hypergraph(0, 3), 3);
  EXPECT_EQ(h33.graph.n(), 6u);
  EXPECT_EQ(h33.graph.edge_count(), 3u);

  const auto fan3 = expanded_clique_with_embedded(Hypergraph(3, 3, {{0, 1, 2}}), 4);
  EXPECT_EQ(fan3.graph.n(), 7u);
  EXPECT_EQ(fan3.graph.edge_count(), 4u);
  EXPECT_EQ(fan3.graph, fan(3));
  // Apex 3: three edges through it pairwise meeting only there.
  std::vector<Edge> through;
  for (const auto& e : fan3.graph.edges())
    if (std::binary_search(e.begin(), e.end(), 3u)) through.push_back(e);
  ASSERT_EQ(through.size(), 3u);
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = i + 1; j < 3; ++j) EXPECT_EQ(intersection_size(through[i], through[j]), 1u);

  // Two edges sharing r-1 vertices, p = r+1: the generalized triangle.
  for (unsigned r = 3; r <= 4; ++r) {
    Edge a(r), b(r);
    std::iota(a.begin(), a.end(), 0);
    std::iota(b.begin(), b.end(), 0);
    b.back() = r;
    const auto h = expanded_clique_with_embedded(Hypergraph(r + 1, r, {a, b}), r + 1).graph;
    EXPECT_EQ(h.n(), generalized_triangle(r).n());
    EXPECT_TRUE(oracle::contains(h, generalized_triangle(r)));
    EXPECT_EQ(h.edge_count(), 3u);
  }
  EXPECT_THROW(expanded_clique_with_embedded(Hypergraph(5, 3), 4), InvalidArgument);
}

TEST(ExpandedClique, StructuralInvariants) {
  for (std::size_t p = 3; p <= 6; ++p) {
    for (unsigned r = 2; r <= 4; ++r) {
      const Hypergraph f = r <= p ? complete_hypergraph(r, r) : Hypergraph(0, r);
      const auto h = expanded_clique_with_embedded(f, p);
      std::size_t uncovered = 0;
      for (std::size_t i = 0; i < p; ++i)
        for (std::size_t j = i + 1; j < p; ++j)
          if (!(j < f.n() && oracle::pair_covered(f, static_cast<Vertex>(i), static_cast<Vertex>(j)))) ++uncovered;
      EXPECT_EQ(h.graph.n(), p + (r - 2) * uncovered);
      EXPECT_EQ(h.graph.edge_count(), f.edge_count() + uncovered);
      for (Vertex a = 0; a < p; ++a)
        for (Vertex b = a + 1; b < p; ++b) EXPECT_TRUE(oracle::pair_covered(h.graph, a, b));
      std::vector<Vertex> all;
      for (const auto& [pair, pad] : h.pads) {
        EXPECT_EQ(pad.size(), r - 2);
        for (Vertex v : pad) {
          EXPECT_GE(v, p);
          all.push_back(v);
        }
        Edge e{pair.first, pair.second};
        e.insert(e.end(), pad.begin(), pad.end());
        std::sort(e.begin(), e.end());
        EXPECT_TRUE(h.graph.has_edge(e));
      }
      std::sort(all.begin(), all.end());
      EXPECT_EQ(std::adjacent_find(all.begin(), all.end()), all.end());
    }
  }
}

TEST(Enlargement, Examples) {
  const auto f = enlargement(star_graph(3), 3);
  EXPECT_EQ(f.n(), 4u);
  ASSERT_EQ(f.edge_count(), 2u);
  EXPECT_EQ(intersection_size(f.edges()[0], f.edges()[1]), 2u);
  // H^F_4 for this F is the generalized triangle.
  const auto h = expanded_clique_with_embedded(f, 4).graph;
  EXPECT_EQ(h.edge_count(), 3u);
  EXPECT_TRUE(oracle::contains(h, generalized_triangle(3)));

  EXPECT_EQ(enlargement(path_graph(5), 2), path_graph(5));
  EXPECT_THROW(enlargement(complete_hypergraph(3, 3), 4), InvalidArgument);
}

TEST(Enlargement, RoundTrip) {
  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    const auto t = random_tree(6, seed);
    for (unsigned r = 2; r <= 5; ++r) {
      const auto f = enlargement(t, r);
      EXPECT_EQ(f.edge_count(), t.edge_count());
      EXPECT_EQ(f.n(), t.n() + r - 2);
      std::vector<Vertex> d;
      for (Vertex v = static_cast<Vertex>(t.n()); v < f.n(); ++v) d.push_back(v);
      const auto back = r == 2 ? f : link(f, VertexSet(d));
      EXPECT_EQ(back, t.with_vertex_count(f.n()));
    }
  }
}

TEST(FamilyMembership, Examples) {
  for (std::size_t m = 3; m <= 4; ++m)
    for (std::size_t n = m; n <= 9; ++n)
      EXPECT_FALSE(contains_family_member(turan_hypergraph(n, 3, m).graph, Hypergraph(0, 3), m + 1));

  const auto edge = complete_hypergraph(3, 3);
  const auto h = expanded_clique_with_embedded(edge, 4);
  const auto cert = contains_family_member(h.graph, edge, 4);
  ASSERT_TRUE(cert);
  EXPECT_EQ(cert->kind, EmbeddingKind::family_member);
  EXPECT_EQ(*cert->core, (VertexSet{0, 1, 2, 3}));

  EXPECT_TRUE(contains_family_member(complete_hypergraph(4, 3), edge, 4));
  EXPECT_THROW(contains_family_member(complete_hypergraph(4, 3), complete_hypergraph(3, 2), 4), InvalidArgument);
  EXPECT_THROW(contains_family_member(complete_hypergraph(4, 3), complete_hypergraph(5, 3), 4), InvalidArgument);
}

TEST(FamilyMembership, CertificateIsValid) {
  const auto edge = complete_hypergraph(3, 3);
  for (std::uint64_t seed = 0; seed < 40; ++seed) {
    const auto g = random_hypergraph(8, 3, 0.2, seed);
    auto cert = contains_family_member(g, edge, 4);
    if (!cert) continue;
    ASSERT_TRUE(cert->core);
    EXPECT_EQ(cert->core->size(), 4u);
    for (std::size_t i = 0; i < 4; ++i)
      for (std::size_t j = i + 1; j < 4; ++j)
        EXPECT_TRUE(oracle::pair_covered(g, (*cert->core)[i], (*cert->core)[j]));
    Edge image;
    for (Vertex v : cert->map) {
      EXPECT_TRUE(cert->core->contains(v));
      image.push_back(v);
    }
    std::sort(image.begin(), image.end());
    EXPECT_TRUE(g.has_edge(image));
    EXPECT_EQ(cert->covering_edges.size(), 6u);
  }
}

TEST(FamilyMembership, AgreesWithBruteForce) {
  const std::vector<std::pair<Hypergraph, std::size_t>> cases{
      {Hypergraph(0, 3), 4}, {complete_hypergraph(3, 3), 4}, {complete_hypergraph(3, 3), 5},
      {enlargement(star_graph(3), 3), 4}};
  for (std::uint64_t seed = 0; seed < 30; ++seed) {
    const auto g = random_hypergraph(7, 3, 0.08 + 0.01 * static_cast<double>(seed), seed);
    for (const auto& [f, p] : cases)
      EXPECT_EQ(contains_family_member(g, f, p).has_value(), oracle::contains_family_member(g, f, p))
          << "seed " << seed << " p " << p;
  }
  for (std::uint64_t seed = 0; seed < 30; ++seed) {
    const auto g = random_hypergraph(7, 2, 0.5, seed);
    EXPECT_EQ(contains_family_member(g, path_graph(3), 4).has_value(),
              oracle::contains_family_member(g, path_graph(3), 4));
  }
}

TEST(FamilyMembership, IncrementalMatchesFull) {
  const auto edge = complete_hypergraph(3, 3);
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    auto order = all_subsets(7, 3);
    std::mt19937_64 rng(seed);
    std::shuffle(order.begin(), order.end(), rng);
    Hypergraph g(7, 3);
    for (const auto& e : order) {
      const auto h = g.with_edge(e);
      const bool through = contains_family_member_through(h, edge, 4, e).has_value();
      EXPECT_EQ(through, contains_family_member(h, edge, 4).has_value());
      if (!through) g = h;
    }
  }
}

TEST(TwoGraphs, Shapes) {
  EXPECT_EQ(path_graph(5).edge_count(), 4u);
  EXPECT_EQ(cycle_graph(5).edge_count(), 5u);
  EXPECT_EQ(star_graph(5).degree(0), 4u);
  const auto broom = broom_graph(6, 3);
  EXPECT_EQ(broom.edge_count(), 5u);
  EXPECT_EQ(broom.degree(2), 4u);
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    const auto t = random_tree(8, seed);
    EXPECT_EQ(t.edge_count(), 7u);
    EXPECT_EQ(random_tree(8, seed), t);
    // Connected: every vertex reachable from 0.
    std::vector<bool> seen(8, false);
    std::vector<Vertex> stack{0};
    seen[0] = true;
    while (!stack.empty()) {
      const Vertex v = stack.back();
      stack.pop_back();
      for (const auto& e : t.edges())
        for (Vertex w : e)
          if ((e[0] == v || e[1] == v) && !seen[w]) {
            seen[w] = true;
            stack.push_back(w);
          }
    }
    EXPECT_TRUE(std::all_of(seen.begin(), seen.end(), [](bool b) { return b; }));
  }
}

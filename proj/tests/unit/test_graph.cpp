#include <gtest/gtest.h>

#include "factorcrit/errors.hpp"
#include "factorcrit/extremal.hpp"
#include "factorcrit/invariants.hpp"
#include "support/oracles.hpp"

namespace factorcrit {
namespace {

TEST(GraphCore, EmptyGraph) {
  EXPECT_EQ(empty_graph(0).order(), 0u);
  EXPECT_EQ(empty_graph(0).edge_count(), 0u);
  const Graph g = empty_graph(3);
  EXPECT_EQ(g.order(), 3u);
  EXPECT_EQ(g.edge_count(), 0u);
  const Graph five = empty_graph(5);
  EXPECT_EQ(independence_number(five), 5u);
  EXPECT_EQ(clique_number(five).omega, 1u);
}

TEST(GraphCore, AddEdge) {
  Graph g = empty_graph(2);
  g.add_edge(0, 1);
  EXPECT_EQ(g, complete_graph(2));
  g.add_edge(1, 0);
  EXPECT_EQ(g.edge_count(), 1u);
  EXPECT_THROW(g.add_edge(1, 1), InputError);
  EXPECT_THROW(g.add_edge(0, 2), InputError);
}

TEST(GraphCore, CompleteGraph) {
  EXPECT_EQ(complete_graph(4).edge_count(), 6u);
  EXPECT_EQ(complete_graph(1).order(), 1u);
  EXPECT_EQ(complete_graph(1).edge_count(), 0u);
  EXPECT_EQ(clique_number(complete_graph(7)).omega, 7u);
}

TEST(GraphCore, RowsStaySymmetricAndLoopFree) {
  Rng rng(7);
  for (int trial = 0; trial < 50; ++trial) {
    const std::size_t n = 1 + uniform_below(rng, 130);
    Graph g = oracle::random_gnp(n, 0.3, rng);
    std::size_t bits = 0;
    for (Vertex u = 0; u < n; ++u) {
      EXPECT_FALSE(g.has_edge(u, u));
      bits += g.degree(u);
      for (Vertex v = 0; v < n; ++v) EXPECT_EQ(g.has_edge(u, v), g.has_edge(v, u));
    }
    EXPECT_EQ(bits, 2 * g.edge_count());
  }
}

TEST(GraphCore, DisjointUnion) {
  const Graph two_k2 = disjoint_union(complete_graph(2), complete_graph(2));
  EXPECT_EQ(two_k2.order(), 4u);
  EXPECT_EQ(two_k2.edge_count(), 2u);
  EXPECT_FALSE(two_k2.has_edge(1, 2));
  const Graph three_k1 = disjoint_union(disjoint_union(complete_graph(1), complete_graph(1)), complete_graph(1));
  EXPECT_EQ(three_k1, empty_graph(3));

  Rng rng(11);
  for (int i = 0; i < 100; ++i) {
    const Graph a = oracle::random_gnp(8, 0.5, rng);
    const Graph b = oracle::random_gnp(8, 0.5, rng);
    EXPECT_EQ(disjoint_union(a, b).edge_count(), a.edge_count() + b.edge_count());
  }
}

TEST(GraphCore, Join) {
  EXPECT_EQ(join(complete_graph(1), complete_graph(1)), complete_graph(2));
  EXPECT_EQ(join(complete_graph(3), complete_graph(4)), complete_graph(7));
  Rng rng(13);
  for (int i = 0; i < 100; ++i) {
    const Graph a = oracle::random_gnp(1 + uniform_below(rng, 8), 0.5, rng);
    const Graph b = oracle::random_gnp(1 + uniform_below(rng, 8), 0.5, rng);
    EXPECT_EQ(join(a, b).edge_count(), a.edge_count() + b.edge_count() + a.order() * b.order());
  }
}

TEST(GraphCore, Complement) {
  EXPECT_EQ(complement(complete_graph(6)), empty_graph(6));
  Rng rng(17);
  for (int i = 0; i < 100; ++i) {
    const Graph g = oracle::random_gnp(1 + uniform_below(rng, 70), 0.4, rng);
    EXPECT_EQ(complement(complement(g)), g);
  }
  EXPECT_TRUE(oracle::isomorphic(complement(cycle_graph(5)), cycle_graph(5)));
  EXPECT_FALSE(oracle::isomorphic(complement(cycle_graph(6)), cycle_graph(6)));
}

TEST(GraphCore, RelabelRejectsNonPermutations) {
  const Graph g = path_graph(3);
  const std::vector<Vertex> bad{0, 0, 1};
  EXPECT_THROW(relabel(g, bad), InputError);
  const std::vector<Vertex> swap{2, 1, 0};
  EXPECT_EQ(relabel(g, swap), g);
}

TEST(Extremal, SmallestCaseLayout) {
  const ExtremalParams p{17, 1, 1};
  const Graph g = construct_extremal(p);
  EXPECT_EQ(g.order(), 17u);
  EXPECT_EQ(g.edge_count(), 121u);
  // The lone degree-1 vertex is the last one and hangs off the hub.
  EXPECT_EQ(g.degree(16), 1u);
  EXPECT_TRUE(g.has_edge(0, 16));
  EXPECT_EQ(g.degree(0), 16u);
  for (Vertex v = 1; v < 16; ++v) EXPECT_EQ(g.degree(v), 15u);
}

TEST(Extremal, EdgeCountsAndThresholds) {
  EXPECT_EQ(construct_extremal({25, 2, 1}).edge_count(), 257u);
  EXPECT_EQ(extremal_edge_count({17, 1, 1}), 121);
  EXPECT_EQ(extremal_edge_count({25, 2, 1}), 257);
  EXPECT_EQ(thm4_threshold({17, 1, 1}), 109);
  EXPECT_EQ(thm4_threshold({25, 2, 1}), 240);
}

TEST(Extremal, FormulaMatchesConstructionUpTo60) {
  for (std::int64_t t = 1; t <= 20; ++t)
    for (std::int64_t k = 1; k <= t; ++k)
      for (std::int64_t n = 1; n <= 60; ++n) {
        const ExtremalParams p{n, t, k};
        if (!params_valid(p)) continue;
        const Graph g = construct_extremal(p);
        ASSERT_EQ(static_cast<std::int64_t>(g.order()), n);
        EXPECT_EQ(static_cast<std::int64_t>(g.edge_count()), extremal_edge_count(p))
            << n << ' ' << t << ' ' << k;
        if (meets_edge_order_bound(p)) EXPECT_GT(extremal_edge_count(p), thm4_threshold(p));
      }
}

TEST(Extremal, RejectsInvalidParams) {
  EXPECT_THROW(construct_extremal({17, 1, 2}), InputError);   // t < k
  EXPECT_THROW(construct_extremal({16, 1, 1}), InputError);   // parity
  EXPECT_THROW(construct_extremal({2, 1, 0}), InputError);    // k < 1
  EXPECT_THROW(construct_extremal({3, 2, 1}), InputError);    // empty middle clique
  EXPECT_NO_THROW(construct_extremal({5, 2, 1}));
}

TEST(Extremal, OrderBoundsAreExact) {
  // 2n >= 15t - 11k + 29 has its boundary at n = 16.5 for t = k = 1.
  EXPECT_FALSE(meets_edge_order_bound({16, 1, 1}));
  EXPECT_TRUE(meets_edge_order_bound({17, 1, 1}));
  // t = 2, k = 1 needs n >= 24 exactly.
  EXPECT_TRUE(meets_edge_order_bound({24, 2, 1}));
  EXPECT_FALSE(meets_edge_order_bound({23, 2, 1}));
  EXPECT_EQ(min_order_edge(1, 1), 17);
  EXPECT_EQ(min_order_edge(2, 1), 25);
  EXPECT_EQ(min_order_edge(2, 2), 20);
  EXPECT_EQ(min_order_edge(3, 1), 33);
  EXPECT_EQ(min_order_edge(3, 2), 26);
  EXPECT_EQ(min_order_edge(3, 3), 21);
  // t = 5: t^2 + 5t/2 + 2 = 39.5 dominates (15*5 - 11*5 + 29)/2 = 24.5.
  EXPECT_EQ(min_order_spectral(5, 5), 41);
  EXPECT_EQ(min_order_edge(5, 5), 25);
}

}  // namespace
}  // namespace factorcrit

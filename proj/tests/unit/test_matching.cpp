#include <gtest/gtest.h>

#include "factorcrit/errors.hpp"
#include "factorcrit/extremal.hpp"
#include "factorcrit/matching.hpp"
#include "support/oracles.hpp"

namespace factorcrit {
namespace {

Graph petersen() {
  Graph g(10);
  for (Vertex i = 0; i < 5; ++i) {
    g.add_edge(i, (i + 1) % 5);
    g.add_edge(i, i + 5);
    g.add_edge(5 + i, 5 + (i + 2) % 5);
  }
  return g;
}

TEST(Matching, SmallCases) {
  EXPECT_EQ(max_matching(complete_graph(4)).size(), 2u);
  EXPECT_EQ(max_matching(cycle_graph(5)).size(), 2u);
  EXPECT_EQ(max_matching(empty_graph(0)).size(), 0u);
  EXPECT_TRUE(has_perfect_matching(complete_graph(4)));
  EXPECT_FALSE(has_perfect_matching(complete_graph(3)));
  EXPECT_TRUE(has_perfect_matching(petersen()));
  EXPECT_TRUE(oracle::MatchingSearch(petersen()).perfect((1u << 10) - 1));
}

TEST(Matching, NeedsBlossomContraction) {
  // Two triangles joined by a path: greedy choices must be undone through
  // odd cycles.
  const std::vector<Edge> e{{0, 1}, {1, 2}, {2, 0}, {2, 3}, {3, 4}, {4, 5}, {5, 6}, {6, 7}, {7, 5}};
  const Graph g = from_edges(8, e);
  EXPECT_EQ(max_matching(g).size(), 4u);
  EXPECT_EQ(static_cast<int>(max_matching(g).size()), oracle::max_matching_size(g));
}

TEST(Matching, ExhaustiveUpToSixVertices) {
  for (std::size_t n = 0; n <= 6; ++n) {
    const std::uint64_t codes = std::uint64_t{1} << (n * (n - (n > 0)) / 2);
    for (std::uint64_t code = 0; code < codes; ++code) {
      const Graph g = oracle::graph_from_code(n, code);
      const auto m = max_matching(g);
      ASSERT_TRUE(is_valid_matching(g, m));
      ASSERT_EQ(static_cast<int>(m.size()), oracle::max_matching_size(g)) << n << ' ' << code;
    }
  }
}

TEST(Matching, RandomUpToEightVertices) {
  Rng rng(99);
  for (int i = 0; i < 2000; ++i) {
    const std::size_t n = 1 + uniform_below(rng, 8);
    const Graph g = oracle::random_gnp(n, 0.15 + 0.7 * static_cast<double>(uniform_below(rng, 100)) / 100.0, rng);
    const auto m = max_matching(g);
    ASSERT_TRUE(is_valid_matching(g, m));
    ASSERT_EQ(static_cast<int>(m.size()), oracle::max_matching_size(g));
    EXPECT_EQ(has_perfect_matching(g), 2 * m.size() == n);
  }
}

TEST(Matching, LargerRandomGraphsAgreeWithMemoisedSearch) {
  Rng rng(5);
  for (int i = 0; i < 200; ++i) {
    const std::size_t n = 9 + uniform_below(rng, 10);
    const Graph g = oracle::random_gnp(n, 0.2, rng);
    ASSERT_EQ(static_cast<int>(max_matching(g).size()), oracle::max_matching_size(g));
  }
}

TEST(Matching, IsValidMatchingRejectsBadPairs) {
  const Graph g = path_graph(4);
  EXPECT_FALSE(is_valid_matching(g, Matching{{{0, 2}}}));
  EXPECT_FALSE(is_valid_matching(g, Matching{{{0, 1}, {1, 2}}}));
  EXPECT_TRUE(is_valid_matching(g, Matching{{{0, 1}, {2, 3}}}));
}

TEST(Criticality, CompleteGraphs) {
  for (std::size_t n = 1; n <= 9; ++n)
    for (std::int64_t k = 0; k <= static_cast<std::int64_t>(n); ++k) {
      const auto v = is_k_factor_critical(complete_graph(n), k);
      if ((static_cast<std::int64_t>(n) - k) % 2 == 0) {
        EXPECT_TRUE(v.is_critical);
        EXPECT_EQ(v.reason, CriticalityReason::AllSubsetsPass);
      } else {
        EXPECT_FALSE(v.is_critical);
        EXPECT_EQ(v.reason, CriticalityReason::Parity);
        EXPECT_FALSE(v.witness.has_value());
      }
    }
}

TEST(Criticality, OddCycleIsFactorCritical) {
  const auto v = is_k_factor_critical(cycle_graph(5), 1);
  EXPECT_TRUE(v.is_critical);
  EXPECT_EQ(v.subsets_checked, 5u);
  EXPECT_FALSE(is_k_factor_critical(cycle_graph(5), 2).is_critical);
}

TEST(Criticality, ZeroReducesToPerfectMatching) {
  EXPECT_TRUE(is_k_factor_critical(petersen(), 0).is_critical);
  const auto v = is_k_factor_critical(path_graph(4), 0);
  EXPECT_TRUE(v.is_critical);
  const Graph star = join(complete_graph(1), empty_graph(3));
  const auto s = is_k_factor_critical(star, 0);
  EXPECT_FALSE(s.is_critical);
  EXPECT_EQ(s.reason, CriticalityReason::WitnessFound);
  EXPECT_TRUE(s.witness->empty());
}

TEST(Criticality, RejectsOutOfRangeK) {
  EXPECT_THROW(is_k_factor_critical(complete_graph(4), -1), InputError);
  EXPECT_THROW(is_k_factor_critical(complete_graph(4), 5), InputError);
}

TEST(Criticality, ExtremalGraphHasHubWitness) {
  const auto v = is_k_factor_critical(construct_extremal({17, 1, 1}), 1);
  EXPECT_FALSE(v.is_critical);
  ASSERT_TRUE(v.witness.has_value());
  EXPECT_EQ(*v.witness, std::vector<Vertex>{0});

  for (std::int64_t t = 1; t <= 4; ++t)
    for (std::int64_t k = 1; k <= t; ++k)
      for (std::int64_t n = 1; n <= 30; ++n) {
        const ExtremalParams p{n, t, k};
        if (!params_valid(p)) continue;
        const Graph g = construct_extremal(p);
        const auto verdict = is_k_factor_critical(g, k);
        EXPECT_FALSE(verdict.is_critical);
        EXPECT_EQ(verdict.reason, CriticalityReason::WitnessFound);
        // Any k hub vertices form a witness; the lexicographic one is [0, k).
        std::vector<Vertex> hub_prefix(static_cast<std::size_t>(k));
        std::iota(hub_prefix.begin(), hub_prefix.end(), Vertex{0});
        EXPECT_EQ(*verdict.witness, hub_prefix);
        VertexSet last_hubs(g.order());
        for (std::int64_t i = 0; i < k; ++i) last_hubs.insert(static_cast<Vertex>(t - 1 - i));
        EXPECT_FALSE(has_perfect_matching(g, last_hubs));
      }
}

TEST(Criticality, ReseedingMatchesNaiveResolve) {
  Rng rng(31);
  for (int i = 0; i < 400; ++i) {
    const std::size_t n = 4 + uniform_below(rng, 9);
    const Graph g = oracle::random_gnp(n, 0.5 + 0.4 * static_cast<double>(uniform_below(rng, 10)) / 10.0, rng);
    const auto k = static_cast<std::int64_t>(uniform_below(rng, 4));
    if (k > static_cast<std::int64_t>(n)) continue;
    const auto a = is_k_factor_critical(g, k, {.reseed = true});
    const auto b = is_k_factor_critical(g, k, {.reseed = false});
    ASSERT_EQ(a.is_critical, b.is_critical);
    ASSERT_EQ(a.witness, b.witness);
    ASSERT_EQ(a.is_critical, oracle::is_k_factor_critical(g, static_cast<int>(k)));
  }
}

TEST(Criticality, WitnessIsLexicographicallyFirstFailure) {
  Rng rng(37);
  for (int i = 0; i < 300; ++i) {
    const std::size_t n = 6 + 2 * uniform_below(rng, 3);
    const Graph g = oracle::random_gnp(n, 0.6, rng);
    const auto v = is_k_factor_critical(g, 2);
    if (v.is_critical) continue;
    ASSERT_TRUE(v.witness.has_value());
    oracle::MatchingSearch search(g);
    const oracle::Mask all = (1u << n) - 1;
    // Scan pairs (a, b) lexicographically for the first failing one.
    std::vector<Vertex> first;
    for (Vertex a = 0; a < n && first.empty(); ++a)
      for (Vertex b = a + 1; b < n && first.empty(); ++b)
        if (!search.perfect(all & ~((1u << a) | (1u << b)))) first = {a, b};
    EXPECT_EQ(*v.witness, first);
  }
}

}  // namespace
}  // namespace factorcrit

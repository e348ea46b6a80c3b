#include <gtest/gtest.h>

#include "factorcrit/campaign.hpp"
#include "factorcrit/closure.hpp"
#include "factorcrit/connectivity.hpp"
#include "factorcrit/errors.hpp"
#include "factorcrit/invariants.hpp"
#include "factorcrit/random_graph.hpp"
#include "factorcrit/verify.hpp"
#include "support/oracles.hpp"

namespace factorcrit {
namespace {

using nlohmann::json;

TEST(Thm4, Examples) {
  const auto kn = verify_thm4(complete_graph(17), 1, 1);
  EXPECT_EQ(kn.conclusion, Conclusion::Critical);
  EXPECT_TRUE(kn.all_hypotheses_pass());

  const auto ext = verify_thm4(construct_extremal({17, 1, 1}), 1, 1);
  EXPECT_EQ(ext.conclusion, Conclusion::ExtremalException);
  ASSERT_TRUE(ext.criticality.has_value());
  ASSERT_TRUE(ext.criticality->witness.has_value());
  EXPECT_EQ(*ext.criticality->witness, std::vector<Vertex>{0});
  EXPECT_EQ(ext.extremal, std::optional<bool>(true));

  const auto thin = verify_thm4(cycle_graph(17), 1, 1);
  EXPECT_EQ(thin.conclusion, Conclusion::HypothesesUnmet);
  EXPECT_EQ(thin.hypothesis("edge_threshold").status, CheckStatus::Fail);
  EXPECT_EQ(thin.hypothesis("connectivity").status, CheckStatus::Pass);

  EXPECT_EQ(verify_thm4(complete_graph(16), 1, 1).hypothesis("parity").status, CheckStatus::Fail);
  EXPECT_EQ(verify_thm4(complete_graph(15), 1, 1).hypothesis("order_bound").status, CheckStatus::Fail);
  EXPECT_EQ(verify_thm4(complete_graph(17), 1, 2).hypothesis("parameters").status, CheckStatus::Fail);
}

TEST(Thm4, ClosureOfNonExtremalGraphIsRecognised) {
  // Removing hub-to-middle edges leaves degree sums at the closure threshold,
  // so the closure restores the extremal graph.
  const ExtremalParams p{17, 1, 1};
  Graph g = construct_extremal(p);
  g.remove_edge(0, 5);
  const auto r = verify_thm4(g, 1, 1);
  EXPECT_EQ(r.conclusion, Conclusion::ExtremalException);
  EXPECT_GT(*r.closure_edges_added, 0u);
}

TEST(Thm5, Examples) {
  const auto kn = verify_thm5(complete_graph(17), 1, 1);
  EXPECT_EQ(kn.conclusion, Conclusion::Critical);
  EXPECT_NEAR(kn.spectral->rho, 16.0, 1e-9);

  const auto ext = verify_thm5(construct_extremal({17, 1, 1}), 1, 1);
  EXPECT_EQ(ext.conclusion, Conclusion::ExtremalException);
  // rho(G) equals the threshold, so the comparison lands in the slack band.
  EXPECT_EQ(ext.hypothesis("spectral_threshold").status, CheckStatus::Indeterminate);

  const auto disconnected = verify_thm5(disjoint_union(complete_graph(16), complete_graph(1)), 1, 1);
  EXPECT_EQ(disconnected.conclusion, Conclusion::HypothesesUnmet);
  EXPECT_FALSE(disconnected.spectral.has_value());
}

TEST(Thm5, ThresholdBelowExtremalFails) {
  Graph g = construct_extremal({17, 1, 1});
  g.remove_edge(1, 2);
  const auto r = verify_thm5(g, 1, 1);
  EXPECT_EQ(r.hypothesis("spectral_threshold").status, CheckStatus::Fail);
  EXPECT_EQ(r.conclusion, Conclusion::HypothesesUnmet);
}

TEST(RandomGraphs, DeterministicAndConnected) {
  for (std::uint64_t seed = 0; seed < 40; ++seed) {
    const auto t = static_cast<std::int64_t>(1 + seed % 4);
    const std::size_t n = 6 + seed % 15;
    const std::size_t surplus = seed * 3 % 11;
    const Graph a = random_t_connected(n, t, surplus, seed);
    EXPECT_EQ(a, random_t_connected(n, t, surplus, seed));
    EXPECT_EQ(a.edge_count(), harary_backbone(n, t).edge_count() + surplus);
    EXPECT_GE(static_cast<std::int64_t>(vertex_connectivity(a).kappa), t);
  }
  EXPECT_NE(random_t_connected(20, 2, 10, 1), random_t_connected(20, 2, 10, 2));
  EXPECT_THROW(random_t_connected(5, 5, 0, 1), InputError);
  EXPECT_THROW(random_t_connected(5, 2, 100, 1), InputError);
}

TEST(RandomGraphs, BackboneAndConnectivity) {
  for (std::uint64_t seed = 0; seed < 5; ++seed) EXPECT_EQ(random_t_connected(10, 2, 0, seed), cycle_graph(10));
  for (std::uint64_t seed = 0; seed < 100; ++seed)
    EXPECT_GE(vertex_connectivity(random_t_connected(20, 3, 15, seed)).kappa, 3u);
}

TEST(RandomGraphs, SeedMixingIsOrderSensitive) {
  EXPECT_NE(mix_seed({1, 2}), mix_seed({2, 1}));
  EXPECT_EQ(mix_seed({1, 2, 3}), mix_seed({1, 2, 3}));
  Rng rng(5);
  for (int i = 0; i < 1000; ++i) {
    const auto x = uniform_between(rng, -3, 4);
    ASSERT_GE(x, -3);
    ASSERT_LE(x, 4);
  }
}

TEST(Campaign, ConfigParsing) {
  const auto c = parse_campaign_config(json::parse(R"({"t":[1,3],"k":[1,3],"n":"min","samples":5})"));
  EXPECT_EQ(c.t_max, 3);
  EXPECT_EQ(c.samples, 5u);
  EXPECT_EQ(campaign_cells(c, Theorem::Edge).size(), 6u);
  EXPECT_EQ(campaign_cells(c, Theorem::Edge).front(), (ExtremalParams{17, 1, 1}));
  EXPECT_EQ(parse_campaign_config(to_json(c)).theorems.size(), 2u);

  const auto ranged = parse_campaign_config(json::parse(R"({"theorems":["thm4"],"t":2,"k":1,"n":[20,30]})"));
  for (const auto& p : campaign_cells(ranged, Theorem::Edge)) {
    EXPECT_TRUE(meets_edge_order_bound(p));
    EXPECT_EQ(p.n % 2, 1);
  }
  EXPECT_EQ(campaign_cells(ranged, Theorem::Edge).size(), 3u);  // 25, 27, 29

  for (const char* bad : {R"([])", R"({"k":1})", R"({"t":1,"k":1,"bogus":0})",
                          R"({"t":1,"k":0})", R"({"t":1,"k":2})", R"({"t":1,"k":1,"samples":0})",
                          R"({"t":1,"k":1,"theorems":["thm6"]})", R"({"t":1,"k":1,"n":[10,12]})",
                          R"({"t":[3,1],"k":1})", R"({"t":1,"k":1,"surplus":{"min":5,"max":1}})",
                          R"({"t":1,"k":1,"n":"max"})"})
    EXPECT_THROW(parse_campaign_config(json::parse(bad)), InputError) << bad;
}

TEST(Campaign, SurplusRange) {
  CampaignConfig c;
  const ExtremalParams p{17, 1, 1};
  const auto r = effective_surplus(c, p);
  EXPECT_EQ(r.min, 109 - 17 - 17);
  EXPECT_EQ(r.max, 136 - 17);
  c.surplus = SurplusRange{0, 1000};
  EXPECT_EQ(effective_surplus(c, p).max, 119);
}

TEST(Campaign, SamplesAreConsistentWithRecomputation) {
  CampaignConfig c;
  c.t_max = 2;
  c.k_max = 2;
  c.samples = 500;
  c.theorems = {Theorem::Edge};
  int critical = 0, exceptional = 0;
  for (const auto& cell : campaign_cells(c, Theorem::Edge)) {
    const auto range = effective_surplus(c, cell);
    for (std::size_t i = 0; i < c.samples; i += 3) {
      const auto s = draw_sample(cell, range, sample_seed(c.seed, cell, i));
      const auto r = verify_thm4(s.graph, cell.t, cell.k);
      ASSERT_NE(r.conclusion, Conclusion::Violation);
      if (r.conclusion == Conclusion::Critical) {
        ++critical;
        if (i % 30 == 0) ASSERT_TRUE(oracle::is_k_factor_critical(s.graph, static_cast<int>(cell.k)));
      } else if (r.conclusion == Conclusion::ExtremalException) {
        ++exceptional;
        ASSERT_FALSE(is_k_factor_critical(s.graph, cell.k).is_critical);
        ASSERT_TRUE(is_extremal(l_closure(s.graph, cell.n + cell.k - 1).graph, cell));
      } else {
        ASSERT_FALSE(r.all_hypotheses_pass());
      }
    }
  }
  EXPECT_GT(critical, 100);
}

TEST(Campaign, ReportIsDeterministic) {
  CampaignConfig c;
  c.samples = 30;
  c.seed = 99;
  const auto a = to_json(search_counterexample(c)).dump();
  const auto b = to_json(search_counterexample(c)).dump();
  EXPECT_EQ(a, b);
  const auto j = json::parse(a);
  EXPECT_FALSE(j["violation"].get<bool>());
  ASSERT_EQ(j["reports"].size(), 2u);
  std::size_t total = 0;
  for (const auto& [name, count] : j["reports"][0]["cells"][0]["counts"].items()) total += count.get<std::size_t>();
  EXPECT_EQ(total, 30u);

  c.seed = 100;
  EXPECT_NE(to_json(search_counterexample(c)).dump(), a);
}

}  // namespace
}  // namespace factorcrit

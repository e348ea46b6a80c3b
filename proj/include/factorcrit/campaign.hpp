#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <vector>

#include <json.hpp>

#include "factorcrit/extremal.hpp"
#include "factorcrit/verify.hpp"

namespace factorcrit {

struct SurplusRange {
  std::int64_t min = 0;
  std::int64_t max = 0;
};

struct CampaignConfig {
  std::vector<Theorem> theorems{Theorem::Edge, Theorem::Spectral};
  std::int64_t t_min = 1, t_max = 1;
  std::int64_t k_min = 1, k_max = 1;
  /// Unset: each cell uses the smallest order the theorem admits. Otherwise
  /// every parity-correct n in [n_min, n_max] meeting the theorem's bound.
  std::optional<std::pair<std::int64_t, std::int64_t>> n_range;
  std::size_t samples = 100;
  std::uint64_t seed = 1;
  /// Unset: surplus edges drawn from [T - B - n, C(n,2) - B] where T is the
  /// edge threshold and B the backbone size, straddling the edge threshold
  /// and reaching the complete graph.
  std::optional<SurplusRange> surplus;
};

/// Reads {"theorems", "t", "k", "n", "samples", "seed", "surplus"}; see the
/// README for the schema. Throws InputError on malformed or empty grids.
CampaignConfig parse_campaign_config(const nlohmann::json& j);
nlohmann::json to_json(const CampaignConfig& c);

struct SampleRecord {
  std::uint64_t seed = 0;
  std::int64_t surplus = 0;
  Conclusion conclusion = Conclusion::Critical;
};

struct CellReport {
  ExtremalParams params;
  SurplusRange surplus;
  std::map<Conclusion, std::size_t> counts;
  /// Samples that were not CRITICAL and not HYPOTHESES_UNMET.
  std::vector<SampleRecord> exceptions;
};

struct TheoremCampaign {
  Theorem theorem = Theorem::Edge;
  std::vector<CellReport> cells;
};

struct CampaignReport {
  CampaignConfig config;
  std::vector<TheoremCampaign> theorems;

  std::size_t count(Conclusion c) const;
  bool violation_found() const { return count(Conclusion::Violation) > 0; }
};

/// Grid cells (t, k, n) for one theorem, in increasing (t, k, n) order.
std::vector<ExtremalParams> campaign_cells(const CampaignConfig& c, Theorem theorem);

SurplusRange effective_surplus(const CampaignConfig& c, const ExtremalParams& cell);

/// Per-sample seed: mix of the master seed, the cell's (t, k, n) and the index.
std::uint64_t sample_seed(std::uint64_t master, const ExtremalParams& cell, std::size_t index);

/// The graph sample `seed` denotes in a cell with the given surplus range.
struct Sample {
  std::int64_t surplus;
  Graph graph;
};
Sample draw_sample(const ExtremalParams& cell, const SurplusRange& range, std::uint64_t seed);

CampaignReport search_counterexample(const CampaignConfig& c);

nlohmann::json to_json(const CampaignReport& r);

}  // namespace factorcrit

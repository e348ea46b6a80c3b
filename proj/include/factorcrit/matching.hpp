#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "factorcrit/graph.hpp"

namespace factorcrit {

struct Matching {
  std::vector<Edge> pairs;  // (u, v) with u < v, sorted by u

  std::size_t size() const noexcept { return pairs.size(); }
};

/// Maximum-cardinality matching by Edmonds' blossom algorithm. Deterministic:
/// exposed vertices are processed in increasing order.
Matching max_matching(const Graph& g);
/// Maximum matching of g minus the vertices in `removed`.
Matching max_matching(const Graph& g, const VertexSet& removed);

bool has_perfect_matching(const Graph& g);
bool has_perfect_matching(const Graph& g, const VertexSet& removed);

/// Pairs are edges of g and pairwise vertex-disjoint.
bool is_valid_matching(const Graph& g, const Matching& m);

enum class CriticalityReason { Parity, WitnessFound, AllSubsetsPass };

const char* to_string(CriticalityReason r);

struct CriticalityVerdict {
  bool is_critical = false;
  CriticalityReason reason = CriticalityReason::Parity;
  /// Lexicographically first k-set whose removal leaves no perfect matching.
  std::optional<std::vector<Vertex>> witness;
  std::uint64_t subsets_checked = 0;
};

struct CriticalityOptions {
  /// Carry the matching of the previous subset into the next one instead of
  /// solving every G - S from scratch. Never changes the verdict.
  bool reseed = true;
};

/// Decides whether G - S has a perfect matching for every k-subset S,
/// enumerating subsets in lexicographic order with early exit.
/// Throws InputError unless 0 <= k <= n.
CriticalityVerdict is_k_factor_critical(const Graph& g, std::int64_t k,
                                        CriticalityOptions options = {});

}  // namespace factorcrit

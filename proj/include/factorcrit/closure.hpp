#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "factorcrit/graph.hpp"
#include "factorcrit/matching.hpp"

namespace factorcrit {

struct ClosureStep {
  Vertex u = 0;
  Vertex v = 0;
  std::size_t degree_u = 0;  // degrees just before {u,v} was joined
  std::size_t degree_v = 0;

  friend bool operator==(const ClosureStep&, const ClosureStep&) = default;
};

struct ClosureTrace {
  std::int64_t l = 0;
  std::vector<ClosureStep> added;
};

struct ClosureResult {
  Graph graph;
  ClosureTrace trace;
};

/// The l-closure: repeatedly joins a nonadjacent pair with degree sum >= l
/// until none remains. Among eligible pairs the lexicographically smallest
/// (u, v) is joined first.
ClosureResult l_closure(const Graph& g, std::int64_t l);

/// Same closure, but eligible pairs are joined in increasing `pair_rank`
/// order, where pair (u, v), u < v, has rank pair_rank[u * n + v]. The
/// resulting graph does not depend on the ranking; the trace does.
ClosureResult l_closure(const Graph& g, std::int64_t l, std::span<const std::size_t> pair_rank);

/// Re-applies a trace to g, checking that each step joins a currently
/// nonadjacent pair with the recorded degrees and degree sum >= l. Throws
/// InputError on the first inconsistent step.
Graph replay(const Graph& g, const ClosureTrace& trace);

/// Every nonadjacent pair has degree sum <= l-1, i.e. h is its own l-closure.
bool closure_degree_condition(const Graph& h, std::int64_t l);

/// One JSON object per added edge: {"u":..,"v":..,"du":..,"dv":..}.
std::string trace_json_lines(const ClosureTrace& trace);

struct EquivalenceReport {
  std::int64_t k = 0;
  std::int64_t l = 0;
  Graph closure;
  std::size_t edges_added = 0;
  CriticalityVerdict original;
  CriticalityVerdict closed;
  bool equivalent = false;
};

/// Criticality of G and of its (n+k-1)-closure. Throws InputError unless G is
/// connected and 1 <= k <= n-2.
EquivalenceReport lemma2_equivalence(const Graph& g, std::int64_t k);

}  // namespace factorcrit

#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "factorcrit/graph.hpp"

namespace factorcrit {

struct ConnectivityResult {
  std::size_t kappa = 0;
  /// Minimum vertex separator, sorted. Absent for complete graphs (including
  /// K_1); empty for disconnected graphs.
  std::optional<std::vector<Vertex>> separator;
};

/// Exact vertex connectivity. Throws InputError for the null graph.
ConnectivityResult vertex_connectivity(const Graph& g);

/// Maximum number of internally vertex-disjoint paths between nonadjacent
/// s and t, stopping early once `limit` paths are found.
std::size_t local_connectivity(const Graph& g, Vertex s, Vertex t,
                               std::size_t limit = SIZE_MAX);

/// n > t and kappa(G) >= t. Stops as soon as some pair certifies kappa < t.
bool is_t_connected(const Graph& g, std::int64_t t);

}  // namespace factorcrit

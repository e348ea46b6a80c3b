#include "factorcrit/random_graph.hpp"

#include <string>

#include "factorcrit/connectivity.hpp"
#include "factorcrit/errors.hpp"

namespace factorcrit {

std::uint64_t mix_seed(std::initializer_list<std::uint64_t> parts) {
  std::uint64_t h = 0x9E3779B97F4A7C15ULL;
  for (std::uint64_t p : parts) {
    h ^= p + 0x9E3779B97F4A7C15ULL + (h << 6) + (h >> 2);
    std::uint64_t z = (h += 0x9E3779B97F4A7C15ULL);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    h = z ^ (z >> 31);
  }
  return h;
}

std::uint64_t uniform_below(Rng& rng, std::uint64_t bound) {
  if (bound == 0) throw InputError("uniform_below needs a positive bound");
  const std::uint64_t limit = UINT64_MAX - UINT64_MAX % bound;
  for (;;) {
    const std::uint64_t x = rng();
    if (x < limit) return x % bound;
  }
}

std::int64_t uniform_between(Rng& rng, std::int64_t lo, std::int64_t hi) {
  if (hi < lo) throw InputError("empty integer range");
  return lo + static_cast<std::int64_t>(uniform_below(rng, static_cast<std::uint64_t>(hi - lo) + 1));
}

std::vector<Vertex> random_permutation(std::size_t n, Rng& rng) {
  std::vector<Vertex> perm(n);
  for (Vertex i = 0; i < n; ++i) perm[i] = i;
  for (std::size_t i = n; i > 1; --i) std::swap(perm[i - 1], perm[uniform_below(rng, i)]);
  return perm;
}

Graph harary_backbone(std::size_t n, std::int64_t t) {
  if (t < 0) throw InputError("t must be nonnegative");
  const auto reach = static_cast<std::size_t>((t + 1) / 2);
  if (2 * reach + 1 >= n) return complete_graph(n);
  Graph g(n);
  for (Vertex v = 0; v < n; ++v)
    for (std::size_t d = 1; d <= reach; ++d) g.add_edge(v, (v + d) % n);
  return g;
}

void add_random_edges(Graph& g, std::size_t count, Rng& rng) {
  std::vector<Edge> non_edges;
  for (Vertex u = 0; u < g.order(); ++u)
    for (Vertex v = u + 1; v < g.order(); ++v)
      if (!g.has_edge(u, v)) non_edges.emplace_back(u, v);
  if (count > non_edges.size())
    throw InputError("requested " + std::to_string(count) + " extra edges but only " +
                     std::to_string(non_edges.size()) + " non-edges exist");
  // Partial Fisher-Yates.
  for (std::size_t i = 0; i < count; ++i) {
    const std::size_t j = i + uniform_below(rng, non_edges.size() - i);
    std::swap(non_edges[i], non_edges[j]);
    g.add_edge(non_edges[i].first, non_edges[i].second);
  }
}

Graph random_t_connected(std::size_t n, std::int64_t t, std::size_t surplus, std::uint64_t seed) {
  if (t < 1 || static_cast<std::size_t>(t) >= n)
    throw InputError("random_t_connected needs n > t >= 1 (n=" + std::to_string(n) +
                     ", t=" + std::to_string(t) + ")");
  Rng rng(seed);
  for (int attempt = 0; attempt < 16; ++attempt) {
    Graph g = harary_backbone(n, t);
    add_random_edges(g, surplus, rng);
    if (is_t_connected(g, t)) return g;
  }
  throw std::logic_error("backbone failed to be t-connected");
}

}  // namespace factorcrit

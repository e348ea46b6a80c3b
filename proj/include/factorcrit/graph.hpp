#pragma once

#include <cstddef>
#include <span>
#include <utility>
#include <vector>

#include "factorcrit/vertex_set.hpp"

namespace factorcrit {

using Edge = std::pair<Vertex, Vertex>;

/// Simple undirected graph on vertices 0..n-1.
///
/// Adjacency is a dense row-major bit matrix: row u holds bit v iff {u,v} is an
/// edge. Rows are padded to whole 64-bit words; padding bits are always zero.
/// Symmetry and loop-freeness are maintained by every mutator.
class Graph {
 public:
  Graph() = default;
  explicit Graph(std::size_t n);

  std::size_t order() const noexcept { return n_; }
  std::size_t edge_count() const noexcept { return edges_; }
  std::size_t words_per_row() const noexcept { return stride_; }

  bool has_edge(Vertex u, Vertex v) const {
    return (bits_[u * stride_ + v / kWordBits] >> (v % kWordBits)) & 1U;
  }

  /// Inserts {u,v}. Idempotent. Throws InputError on u == v or u,v >= n.
  void add_edge(Vertex u, Vertex v);
  /// Removes {u,v} if present. Throws InputError on invalid vertices.
  void remove_edge(Vertex u, Vertex v);

  std::size_t degree(Vertex v) const { return popcount(row(v)); }
  std::vector<std::size_t> degrees() const;
  std::size_t min_degree() const;

  std::span<const Word> row(Vertex v) const {
    return {bits_.data() + v * stride_, stride_};
  }
  VertexSet neighbors(Vertex v) const { return VertexSet(n_, row(v)); }

  /// Edges as (u, v) with u < v, sorted lexicographically.
  std::vector<Edge> edges() const;

  /// Subgraph induced by `keep`, relabelled to 0..|keep|-1 in increasing order.
  Graph induced(const VertexSet& keep) const;

  friend bool operator==(const Graph&, const Graph&) = default;

 private:
  void check_pair(Vertex u, Vertex v) const;

  std::size_t n_ = 0;
  std::size_t stride_ = 0;
  std::size_t edges_ = 0;
  std::vector<Word> bits_;
};

Graph empty_graph(std::size_t n);
Graph complete_graph(std::size_t n);
Graph cycle_graph(std::size_t n);
Graph path_graph(std::size_t n);
Graph from_edges(std::size_t n, std::span<const Edge> edges);

/// G + H: vertices of H are shifted by order(G).
Graph disjoint_union(const Graph& g, const Graph& h);
/// G ∨ H: disjoint union plus every edge between the two parts.
Graph join(const Graph& g, const Graph& h);
Graph complement(const Graph& g);

/// Vertex v of g becomes perm[v] in the result. perm must be a permutation.
Graph relabel(const Graph& g, std::span<const Vertex> perm);

/// E(sub) ⊆ E(super) on the same vertex set.
bool is_spanning_subgraph(const Graph& sub, const Graph& super);

bool is_connected(const Graph& g);
/// Connectivity of g with `removed` deleted. An empty remainder counts as connected.
bool is_connected_without(const Graph& g, const VertexSet& removed);

}  // namespace factorcrit

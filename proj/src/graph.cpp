#include "factorcrit/graph.hpp"

#include <algorithm>
#include <cassert>
#include <string>

#include "factorcrit/errors.hpp"

namespace factorcrit {

Graph::Graph(std::size_t n)
    : n_(n), stride_(words_for(n)), bits_(n * words_for(n), 0) {}

void Graph::check_pair(Vertex u, Vertex v) const {
  if (u >= n_ || v >= n_) {
    throw InputError("vertex out of range: {" + std::to_string(u) + "," +
                     std::to_string(v) + "} in graph of order " +
                     std::to_string(n_));
  }
  if (u == v) throw InputError("loop at vertex " + std::to_string(u));
}

void Graph::add_edge(Vertex u, Vertex v) {
  check_pair(u, v);
  if (has_edge(u, v)) return;
  bits_[u * stride_ + v / kWordBits] |= Word{1} << (v % kWordBits);
  bits_[v * stride_ + u / kWordBits] |= Word{1} << (u % kWordBits);
  ++edges_;
  assert(has_edge(v, u));
}

void Graph::remove_edge(Vertex u, Vertex v) {
  check_pair(u, v);
  if (!has_edge(u, v)) return;
  bits_[u * stride_ + v / kWordBits] &= ~(Word{1} << (v % kWordBits));
  bits_[v * stride_ + u / kWordBits] &= ~(Word{1} << (u % kWordBits));
  --edges_;
  assert(!has_edge(v, u));
}

std::vector<std::size_t> Graph::degrees() const {
  std::vector<std::size_t> d(n_);
  for (Vertex v = 0; v < n_; ++v) d[v] = degree(v);
  return d;
}

std::size_t Graph::min_degree() const {
  std::size_t best = n_ == 0 ? 0 : n_ - 1;
  for (Vertex v = 0; v < n_; ++v) best = std::min(best, degree(v));
  return best;
}

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  out.reserve(edges_);
  for (Vertex u = 0; u < n_; ++u) {
    for_each_bit(row(u), [&](Vertex v) {
      if (u < v) out.emplace_back(u, v);
    });
  }
  return out;
}

Graph Graph::induced(const VertexSet& keep) const {
  std::vector<Vertex> index(n_, n_);
  std::size_t m = 0;
  keep.for_each([&](Vertex v) { index[v] = m++; });
  Graph h(m);
  keep.for_each([&](Vertex u) {
    for_each_bit(row(u), [&](Vertex v) {
      if (u < v && index[v] != n_) h.add_edge(index[u], index[v]);
    });
  });
  return h;
}

Graph empty_graph(std::size_t n) { return Graph(n); }

Graph complete_graph(std::size_t n) {
  Graph g(n);
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = u + 1; v < n; ++v) g.add_edge(u, v);
  return g;
}

Graph cycle_graph(std::size_t n) {
  if (n < 3) throw InputError("cycle needs at least 3 vertices");
  Graph g(n);
  for (Vertex v = 0; v < n; ++v) g.add_edge(v, (v + 1) % n);
  return g;
}

Graph path_graph(std::size_t n) {
  Graph g(n);
  for (Vertex v = 0; v + 1 < n; ++v) g.add_edge(v, v + 1);
  return g;
}

Graph from_edges(std::size_t n, std::span<const Edge> edges) {
  Graph g(n);
  for (auto [u, v] : edges) g.add_edge(u, v);
  return g;
}

Graph disjoint_union(const Graph& g, const Graph& h) {
  const std::size_t off = g.order();
  Graph out(off + h.order());
  for (auto [u, v] : g.edges()) out.add_edge(u, v);
  for (auto [u, v] : h.edges()) out.add_edge(u + off, v + off);
  return out;
}

Graph join(const Graph& g, const Graph& h) {
  Graph out = disjoint_union(g, h);
  const std::size_t off = g.order();
  for (Vertex u = 0; u < g.order(); ++u)
    for (Vertex v = 0; v < h.order(); ++v) out.add_edge(u, off + v);
  return out;
}

Graph complement(const Graph& g) {
  const std::size_t n = g.order();
  Graph out(n);
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = u + 1; v < n; ++v)
      if (!g.has_edge(u, v)) out.add_edge(u, v);
  return out;
}

Graph relabel(const Graph& g, std::span<const Vertex> perm) {
  const std::size_t n = g.order();
  if (perm.size() != n) throw InputError("permutation size does not match graph order");
  std::vector<bool> seen(n, false);
  for (Vertex p : perm) {
    if (p >= n || seen[p]) throw InputError("relabel map is not a permutation");
    seen[p] = true;
  }
  Graph out(n);
  for (auto [u, v] : g.edges()) out.add_edge(perm[u], perm[v]);
  return out;
}

bool is_spanning_subgraph(const Graph& sub, const Graph& super) {
  if (sub.order() != super.order()) return false;
  for (Vertex v = 0; v < sub.order(); ++v) {
    auto a = sub.row(v);
    auto b = super.row(v);
    for (std::size_t w = 0; w < a.size(); ++w)
      if ((a[w] & ~b[w]) != 0) return false;
  }
  return true;
}

bool is_connected_without(const Graph& g, const VertexSet& removed) {
  const std::size_t n = g.order();
  VertexSet unvisited = VertexSet::full(n) - removed;
  if (unvisited.empty()) return true;
  std::vector<Vertex> stack{unvisited.front()};
  unvisited.erase(stack.back());
  while (!stack.empty()) {
    const Vertex u = stack.back();
    stack.pop_back();
    VertexSet next = g.neighbors(u) & unvisited;
    next.for_each([&](Vertex v) {
      unvisited.erase(v);
      stack.push_back(v);
    });
  }
  return unvisited.empty();
}

bool is_connected(const Graph& g) { return is_connected_without(g, VertexSet(g.order())); }

}  // namespace factorcrit

#include "factorcrit/connectivity.hpp"

#include <algorithm>
#include <deque>
#include <limits>

#include "factorcrit/errors.hpp"

namespace factorcrit {

namespace {

// Unit vertex-capacity flow network: vertex v splits into in(v) = 2v and
// out(v) = 2v+1 joined by a capacity-1 arc; each edge {u,v} becomes arcs
// out(u)->in(v) and out(v)->in(u) of unbounded capacity.
class SplitNetwork {
 public:
  explicit SplitNetwork(const Graph& g) : head_(2 * g.order(), -1) {
    for (Vertex v = 0; v < g.order(); ++v) add_arc(in(v), out(v), 1);
    for (auto [u, v] : g.edges()) {
      add_arc(out(u), in(v), kInfinite);
      add_arc(out(v), in(u), kInfinite);
    }
  }

  static std::size_t in(Vertex v) { return 2 * v; }
  static std::size_t out(Vertex v) { return 2 * v + 1; }

  // Dinic's algorithm from `source` to `sink`, capped at `limit` units.
  std::size_t max_flow(std::size_t source, std::size_t sink, std::size_t limit) {
    for (auto& a : arcs_) a.flow = 0;
    std::size_t flow = 0;
    while (flow < limit && build_levels(source, sink)) {
      cursor_.assign(head_.begin(), head_.end());
      while (flow < limit) {
        const int pushed = push(source, sink, 1);
        if (pushed == 0) break;
        flow += static_cast<std::size_t>(pushed);
      }
    }
    return flow;
  }

  // Nodes reachable from `source` in the residual network of the last flow.
  std::vector<bool> residual_reachable(std::size_t source) const {
    std::vector<bool> seen(head_.size(), false);
    std::deque<std::size_t> queue{source};
    seen[source] = true;
    while (!queue.empty()) {
      const std::size_t x = queue.front();
      queue.pop_front();
      for (int e = head_[x]; e != -1; e = arcs_[static_cast<std::size_t>(e)].next) {
        const auto& a = arcs_[static_cast<std::size_t>(e)];
        if (a.cap - a.flow > 0 && !seen[a.to]) {
          seen[a.to] = true;
          queue.push_back(a.to);
        }
      }
    }
    return seen;
  }

 private:
  static constexpr int kInfinite = std::numeric_limits<int>::max() / 2;

  struct Arc {
    std::size_t to;
    int next;
    int cap;
    int flow;
  };

  void add_arc(std::size_t from, std::size_t to, int cap) {
    arcs_.push_back({to, head_[from], cap, 0});
    head_[from] = static_cast<int>(arcs_.size() - 1);
    arcs_.push_back({from, head_[to], 0, 0});
    head_[to] = static_cast<int>(arcs_.size() - 1);
  }

  bool build_levels(std::size_t source, std::size_t sink) {
    level_.assign(head_.size(), -1);
    level_[source] = 0;
    std::deque<std::size_t> queue{source};
    while (!queue.empty()) {
      const std::size_t x = queue.front();
      queue.pop_front();
      for (int e = head_[x]; e != -1; e = arcs_[static_cast<std::size_t>(e)].next) {
        const auto& a = arcs_[static_cast<std::size_t>(e)];
        if (a.cap - a.flow > 0 && level_[a.to] < 0) {
          level_[a.to] = level_[x] + 1;
          queue.push_back(a.to);
        }
      }
    }
    return level_[sink] >= 0;
  }

  int push(std::size_t x, std::size_t sink, int amount) {
    if (x == sink) return amount;
    for (int& e = cursor_[x]; e != -1; e = arcs_[static_cast<std::size_t>(e)].next) {
      auto& a = arcs_[static_cast<std::size_t>(e)];
      if (a.cap - a.flow <= 0 || level_[a.to] != level_[x] + 1) continue;
      const int got = push(a.to, sink, std::min(amount, a.cap - a.flow));
      if (got > 0) {
        a.flow += got;
        arcs_[static_cast<std::size_t>(e ^ 1)].flow -= got;
        return got;
      }
    }
    return 0;
  }

  std::vector<int> head_;
  std::vector<Arc> arcs_;
  std::vector<int> level_;
  std::vector<int> cursor_;
};

struct PairCut {
  std::size_t value;
  Vertex s;
  Vertex t;
};

// Minimum local connectivity over the candidate pairs of the
// Esfahanian-Hakimi scheme: a minimum-degree vertex v against each of its
// non-neighbours, and every nonadjacent pair inside N(v). Returns nullopt for
// complete graphs. Flows are capped at the best value so far (and at `cap`).
std::optional<PairCut> min_pair_cut(const Graph& g, SplitNetwork& net, std::size_t cap) {
  const std::size_t n = g.order();
  Vertex v = 0;
  for (Vertex u = 1; u < n; ++u)
    if (g.degree(u) < g.degree(v)) v = u;

  std::optional<PairCut> best;
  auto consider = [&](Vertex s, Vertex t) {
    const std::size_t limit = best ? best->value : cap;
    if (limit == 0) return;
    const std::size_t f = net.max_flow(SplitNetwork::out(s), SplitNetwork::in(t), limit);
    if (!best || f < best->value) best = PairCut{f, s, t};
  };

  for (Vertex w = 0; w < n; ++w)
    if (w != v && !g.has_edge(v, w)) consider(v, w);
  const auto nbrs = g.neighbors(v).to_vector();
  for (std::size_t i = 0; i < nbrs.size(); ++i)
    for (std::size_t j = i + 1; j < nbrs.size(); ++j)
      if (!g.has_edge(nbrs[i], nbrs[j])) consider(nbrs[i], nbrs[j]);
  return best;
}

}  // namespace

std::size_t local_connectivity(const Graph& g, Vertex s, Vertex t, std::size_t limit) {
  if (s >= g.order() || t >= g.order() || s == t || g.has_edge(s, t))
    throw InputError("local connectivity needs two distinct nonadjacent vertices");
  SplitNetwork net(g);
  return net.max_flow(SplitNetwork::out(s), SplitNetwork::in(t), limit);
}

ConnectivityResult vertex_connectivity(const Graph& g) {
  const std::size_t n = g.order();
  if (n == 0) throw InputError("vertex connectivity of the null graph is undefined");
  SplitNetwork net(g);
  auto cut = min_pair_cut(g, net, n);
  if (!cut) return {n - 1, std::nullopt};

  // Recompute the winning flow to read its minimum cut off the residual graph.
  net.max_flow(SplitNetwork::out(cut->s), SplitNetwork::in(cut->t), n);
  const auto reach = net.residual_reachable(SplitNetwork::out(cut->s));
  std::vector<Vertex> separator;
  for (Vertex u = 0; u < n; ++u)
    if (reach[SplitNetwork::in(u)] && !reach[SplitNetwork::out(u)]) separator.push_back(u);
  return {cut->value, separator};
}

bool is_t_connected(const Graph& g, std::int64_t t) {
  if (t < 0) throw InputError("t must be nonnegative");
  const std::size_t n = g.order();
  if (n <= static_cast<std::size_t>(t)) return false;
  if (t == 0) return true;
  SplitNetwork net(g);
  auto cut = min_pair_cut(g, net, static_cast<std::size_t>(t));
  return !cut || cut->value >= static_cast<std::size_t>(t);
}

}  // namespace factorcrit

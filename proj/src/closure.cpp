#include "factorcrit/closure.hpp"

#include <algorithm>
#include <functional>
#include <set>
#include <sstream>

#include "factorcrit/errors.hpp"

namespace factorcrit {

namespace {

ClosureResult close_with(const Graph& g, std::int64_t l,
                         const std::function<std::size_t(Vertex, Vertex)>& rank) {
  const std::size_t n = g.order();
  ClosureResult result{g, ClosureTrace{l, {}}};
  Graph& h = result.graph;
  std::vector<std::size_t> deg = h.degrees();

  auto eligible = [&](Vertex u, Vertex v) {
    return !h.has_edge(u, v) &&
           static_cast<std::int64_t>(deg[u] + deg[v]) >= l;
  };

  // Degrees only grow, so an eligible pair stays eligible until joined; the
  // worklist only ever needs pairs touching an endpoint of the last edge.
  std::set<std::pair<std::size_t, Edge>> work;
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = u + 1; v < n; ++v)
      if (eligible(u, v)) work.insert({rank(u, v), {u, v}});

  while (!work.empty()) {
    const auto [u, v] = work.begin()->second;
    work.erase(work.begin());
    result.trace.added.push_back({u, v, deg[u], deg[v]});
    h.add_edge(u, v);
    ++deg[u];
    ++deg[v];
    for (Vertex end : {u, v}) {
      for (Vertex w = 0; w < n; ++w) {
        if (w == end) continue;
        const Vertex a = std::min(end, w);
        const Vertex b = std::max(end, w);
        if (eligible(a, b)) work.insert({rank(a, b), {a, b}});
      }
    }
  }
  return result;
}

}  // namespace

ClosureResult l_closure(const Graph& g, std::int64_t l) {
  const std::size_t n = g.order();
  return close_with(g, l, [n](Vertex u, Vertex v) { return u * n + v; });
}

ClosureResult l_closure(const Graph& g, std::int64_t l, std::span<const std::size_t> pair_rank) {
  const std::size_t n = g.order();
  if (pair_rank.size() != n * n) throw InputError("pair ranking must have n*n entries");
  return close_with(g, l, [&](Vertex u, Vertex v) { return pair_rank[u * n + v]; });
}

Graph replay(const Graph& g, const ClosureTrace& trace) {
  Graph h = g;
  std::size_t index = 0;
  for (const auto& step : trace.added) {
    const std::string where = "closure step " + std::to_string(index++);
    if (step.u >= h.order() || step.v >= h.order() || step.u == step.v)
      throw InputError(where + ": invalid pair");
    if (h.has_edge(step.u, step.v)) throw InputError(where + ": pair already adjacent");
    if (h.degree(step.u) != step.degree_u || h.degree(step.v) != step.degree_v)
      throw InputError(where + ": recorded degrees do not match");
    if (static_cast<std::int64_t>(step.degree_u + step.degree_v) < trace.l)
      throw InputError(where + ": degree sum below l");
    h.add_edge(step.u, step.v);
  }
  return h;
}

bool closure_degree_condition(const Graph& h, std::int64_t l) {
  const std::size_t n = h.order();
  const auto deg = h.degrees();
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = u + 1; v < n; ++v)
      if (!h.has_edge(u, v) && static_cast<std::int64_t>(deg[u] + deg[v]) > l - 1) return false;
  return true;
}

std::string trace_json_lines(const ClosureTrace& trace) {
  std::ostringstream out;
  for (const auto& s : trace.added)
    out << "{\"u\":" << s.u << ",\"v\":" << s.v << ",\"du\":" << s.degree_u
        << ",\"dv\":" << s.degree_v << "}\n";
  return out.str();
}

EquivalenceReport lemma2_equivalence(const Graph& g, std::int64_t k) {
  const auto n = static_cast<std::int64_t>(g.order());
  if (k < 1 || k > n - 2)
    throw InputError("k must satisfy 1 <= k <= n-2 (k=" + std::to_string(k) +
                     ", n=" + std::to_string(n) + ")");
  if (!is_connected(g)) throw InputError("graph must be connected");
  EquivalenceReport report;
  report.k = k;
  report.l = n + k - 1;
  auto closed = l_closure(g, report.l);
  report.edges_added = closed.trace.added.size();
  report.closure = std::move(closed.graph);
  report.original = is_k_factor_critical(g, k);
  report.closed = is_k_factor_critical(report.closure, k);
  report.equivalent = report.original.is_critical == report.closed.is_critical;
  return report;
}

}  // namespace factorcrit

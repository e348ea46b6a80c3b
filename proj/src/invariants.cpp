#include "factorcrit/invariants.hpp"

#include <algorithm>
#include <numeric>

#include "factorcrit/closure.hpp"
#include "factorcrit/connectivity.hpp"
#include "factorcrit/errors.hpp"

namespace factorcrit {

namespace {

class CliqueSearch {
 public:
  explicit CliqueSearch(const Graph& g) : g_(g) {}

  CliqueResult run() {
    const std::size_t n = g_.order();
    if (n == 0) return {};
    best_ = {0};
    current_.clear();
    expand(VertexSet::full(n));
    std::sort(best_.begin(), best_.end());
    return {best_.size(), best_};
  }

 private:
  // Greedy sequential colouring of `p`. order[i] has colour bound[i]; bounds
  // are nondecreasing, so scanning from the back visits high colours first.
  void colour(const VertexSet& p, std::vector<Vertex>& order,
              std::vector<std::size_t>& bound) const {
    VertexSet uncoloured = p;
    std::size_t c = 0;
    while (!uncoloured.empty()) {
      ++c;
      VertexSet cls = uncoloured;
      while (!cls.empty()) {
        const Vertex v = cls.front();
        cls.erase(v);
        uncoloured.erase(v);
        cls -= g_.neighbors(v);
        order.push_back(v);
        bound.push_back(c);
      }
    }
  }

  void expand(VertexSet p) {
    std::vector<Vertex> order;
    std::vector<std::size_t> bound;
    colour(p, order, bound);
    for (std::size_t i = order.size(); i-- > 0;) {
      if (current_.size() + bound[i] <= best_.size()) return;
      const Vertex v = order[i];
      current_.push_back(v);
      VertexSet next = p & g_.neighbors(v);
      if (next.empty()) {
        if (current_.size() > best_.size()) best_ = current_;
      } else {
        expand(std::move(next));
      }
      current_.pop_back();
      p.erase(v);
    }
  }

  const Graph& g_;
  std::vector<Vertex> current_;
  std::vector<Vertex> best_;
};

}  // namespace

CliqueResult clique_number(const Graph& g) { return CliqueSearch(g).run(); }

CliqueResult maximum_independent_set(const Graph& g) { return clique_number(complement(g)); }

std::size_t independence_number(const Graph& g) { return maximum_independent_set(g).omega; }

bool induces_clique(const Graph& g, const std::vector<Vertex>& vs) {
  for (std::size_t i = 0; i < vs.size(); ++i)
    for (std::size_t j = i + 1; j < vs.size(); ++j)
      if (!g.has_edge(vs[i], vs[j])) return false;
  return true;
}

bool induces_independent_set(const Graph& g, const std::vector<Vertex>& vs) {
  for (std::size_t i = 0; i < vs.size(); ++i)
    for (std::size_t j = i + 1; j < vs.size(); ++j)
      if (vs[i] == vs[j] || g.has_edge(vs[i], vs[j])) return false;
  return true;
}

bool favaron_condition(const Graph& g, std::int64_t k, std::int64_t t) {
  if (k < 0 || t < k) throw InputError("Favaron's condition needs t >= k >= 0");
  const auto n = static_cast<std::int64_t>(g.order());
  if ((n - k) % 2 != 0) return false;
  if (!is_t_connected(g, t)) return false;
  return static_cast<std::int64_t>(independence_number(g)) <= t - k + 1;
}

const char* to_string(Lemma8Status s) {
  switch (s) {
    case Lemma8Status::Pass: return "pass";
    case Lemma8Status::Fail: return "fail";
    case Lemma8Status::HypothesesUnmet: return "hypotheses unmet";
  }
  return "unknown";
}

Lemma8Report lemma8_check(const Graph& h, std::int64_t t, std::int64_t k) {
  const auto n = static_cast<std::int64_t>(h.order());
  const ExtremalParams p{n, t, k};
  Lemma8Report r;
  r.edges = static_cast<std::int64_t>(h.edge_count());
  r.threshold = thm4_threshold(p);
  r.required_omega = n + k - t - 1;

  if (!(t >= k && k >= 1)) {
    r.unmet = "t >= k >= 1";
  } else if ((n - k) % 2 != 0) {
    r.unmet = "n ≡ k (mod 2)";
  } else if (!meets_edge_order_bound(p)) {
    r.unmet = "2n >= 15t-11k+29";
  } else if (!closure_degree_condition(h, n + k - 1)) {
    r.unmet = "H equals its (n+k-1)-closure";
  } else if (!is_t_connected(h, t)) {
    r.unmet = "H is t-connected";
  } else if (r.edges <= r.threshold) {
    r.unmet = "e(H) > threshold";
  }
  if (!r.unmet.empty()) return r;

  r.omega = clique_number(h).omega;
  r.status = static_cast<std::int64_t>(*r.omega) >= r.required_omega ? Lemma8Status::Pass
                                                                     : Lemma8Status::Fail;
  return r;
}

std::optional<ExtremalBlocks> recognize_extremal(const Graph& g, const ExtremalParams& p) {
  if (!params_valid(p) || static_cast<std::int64_t>(g.order()) != p.n) return std::nullopt;
  const std::size_t n = g.order();
  const auto hub_size = static_cast<std::size_t>(p.hub_size());
  const auto middle_size = static_cast<std::size_t>(p.middle_size());
  const auto indep_size = static_cast<std::size_t>(p.independent_size());
  if (static_cast<std::int64_t>(g.edge_count()) != extremal_edge_count(p)) return std::nullopt;

  ExtremalBlocks blocks;
  VertexSet hub(n);
  for (Vertex v = 0; v < n; ++v) {
    if (g.degree(v) == n - 1) {
      blocks.hub.push_back(v);
      hub.insert(v);
    }
  }
  if (blocks.hub.size() != hub_size) return std::nullopt;

  // Non-hub vertices whose whole neighbourhood is the hub have degree t,
  // share the neighbourhood N = hub and are pairwise nonadjacent.
  std::vector<Vertex> low;
  std::vector<Vertex> rest;
  for (Vertex v = 0; v < n; ++v) {
    if (hub.contains(v)) continue;
    (g.neighbors(v) == hub ? low : rest).push_back(v);
  }
  if (middle_size == 1 && rest.empty() && low.size() == indep_size + 1) {
    // K_1 in the middle is indistinguishable from the independent vertices.
    rest.push_back(low.front());
    low.erase(low.begin());
  }
  if (low.size() != indep_size || rest.size() != middle_size) return std::nullopt;
  if (!induces_clique(g, rest) || !induces_independent_set(g, low)) return std::nullopt;
  for (Vertex v : low)
    if (g.degree(v) != hub_size) return std::nullopt;

  blocks.middle = std::move(rest);
  blocks.independent = std::move(low);
  return blocks;
}

bool is_extremal(const Graph& g, const ExtremalParams& p) {
  return recognize_extremal(g, p).has_value();
}

}  // namespace factorcrit

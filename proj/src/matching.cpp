#include "factorcrit/matching.hpp"

#include <algorithm>
#include <deque>
#include <numeric>
#include <string>

#include "factorcrit/errors.hpp"

namespace factorcrit {

namespace {

constexpr int kNone = -1;

// Edmonds' blossom search over the active vertices of a fixed graph. The
// current matching persists across calls so callers can reseed it after
// toggling vertices in and out of the active set.
class BlossomSolver {
 public:
  explicit BlossomSolver(const Graph& g)
      : g_(g),
        n_(g.order()),
        active_(VertexSet::full(g.order())),
        mate_(n_, kNone),
        parent_(n_),
        base_(n_),
        used_(n_),
        blossom_(n_),
        lca_mark_(n_) {}

  void deactivate(Vertex v) {
    if (!active_.contains(v)) return;
    active_.erase(v);
    if (mate_[v] != kNone) {
      mate_[static_cast<std::size_t>(mate_[v])] = kNone;
      mate_[v] = kNone;
    }
  }
  void activate(Vertex v) { active_.insert(v); }

  void greedy() {
    active_.for_each([&](Vertex u) {
      if (mate_[u] != kNone) return;
      VertexSet cand = g_.neighbors(u) & active_;
      cand.for_each([&](Vertex v) {
        if (mate_[u] == kNone && mate_[v] == kNone) {
          mate_[u] = static_cast<int>(v);
          mate_[v] = static_cast<int>(u);
        }
      });
    });
  }

  // Augments from every exposed active vertex in increasing order. With
  // stop_on_failure, returns as soon as one exposed vertex cannot be
  // augmented; such a vertex is missed by some maximum matching.
  bool augment_all(bool stop_on_failure) {
    bool all = true;
    for (Vertex v = 0; v < n_; ++v) {
      if (!active_.contains(v) || mate_[v] != kNone) continue;
      if (!augment_from(v)) {
        all = false;
        if (stop_on_failure) return false;
      }
    }
    return all;
  }

  Matching matching() const {
    Matching m;
    for (Vertex v = 0; v < n_; ++v)
      if (mate_[v] != kNone && static_cast<Vertex>(mate_[v]) > v)
        m.pairs.emplace_back(v, static_cast<Vertex>(mate_[v]));
    return m;
  }

 private:
  int lca(int a, int b) {
    std::fill(lca_mark_.begin(), lca_mark_.end(), false);
    for (;;) {
      a = base_[static_cast<std::size_t>(a)];
      lca_mark_[static_cast<std::size_t>(a)] = true;
      if (mate_[static_cast<std::size_t>(a)] == kNone) break;
      a = parent_[static_cast<std::size_t>(mate_[static_cast<std::size_t>(a)])];
    }
    for (;;) {
      b = base_[static_cast<std::size_t>(b)];
      if (lca_mark_[static_cast<std::size_t>(b)]) return b;
      b = parent_[static_cast<std::size_t>(mate_[static_cast<std::size_t>(b)])];
    }
  }

  void mark_path(int v, int b, int child) {
    while (base_[static_cast<std::size_t>(v)] != b) {
      const auto vs = static_cast<std::size_t>(v);
      const auto mv = static_cast<std::size_t>(mate_[vs]);
      blossom_[static_cast<std::size_t>(base_[vs])] = true;
      blossom_[static_cast<std::size_t>(base_[mv])] = true;
      parent_[vs] = child;
      child = mate_[vs];
      v = parent_[mv];
    }
  }

  int find_path(Vertex root) {
    std::fill(used_.begin(), used_.end(), false);
    std::fill(parent_.begin(), parent_.end(), kNone);
    std::iota(base_.begin(), base_.end(), 0);
    used_[root] = true;
    std::deque<Vertex> queue{root};
    while (!queue.empty()) {
      const Vertex v = queue.front();
      queue.pop_front();
      int found = kNone;
      VertexSet nbrs = g_.neighbors(v) & active_;
      nbrs.for_each([&](Vertex to) {
        if (found != kNone) return;
        const int ti = static_cast<int>(to);
        if (base_[v] == base_[to] || mate_[v] == ti) return;
        if (to == root ||
            (mate_[to] != kNone && parent_[static_cast<std::size_t>(mate_[to])] != kNone)) {
          const int cur = lca(static_cast<int>(v), ti);
          std::fill(blossom_.begin(), blossom_.end(), false);
          mark_path(static_cast<int>(v), cur, ti);
          mark_path(ti, cur, static_cast<int>(v));
          for (Vertex i = 0; i < n_; ++i) {
            if (!active_.contains(i) || !blossom_[static_cast<std::size_t>(base_[i])]) continue;
            base_[i] = cur;
            if (!used_[i]) {
              used_[i] = true;
              queue.push_back(i);
            }
          }
        } else if (parent_[to] == kNone) {
          parent_[to] = static_cast<int>(v);
          if (mate_[to] == kNone) {
            found = ti;
            return;
          }
          const auto next = static_cast<std::size_t>(mate_[to]);
          used_[next] = true;
          queue.push_back(next);
        }
      });
      if (found != kNone) return found;
    }
    return kNone;
  }

  bool augment_from(Vertex root) {
    int v = find_path(root);
    if (v == kNone) return false;
    while (v != kNone) {
      const int pv = parent_[static_cast<std::size_t>(v)];
      const int next = mate_[static_cast<std::size_t>(pv)];
      mate_[static_cast<std::size_t>(v)] = pv;
      mate_[static_cast<std::size_t>(pv)] = v;
      v = next;
    }
    return true;
  }

  const Graph& g_;
  std::size_t n_;
  VertexSet active_;
  std::vector<int> mate_;
  std::vector<int> parent_;
  std::vector<int> base_;
  std::vector<bool> used_;
  std::vector<bool> blossom_;
  std::vector<bool> lca_mark_;
};

// Advances `idx` to the next k-combination of {0..n-1} in lexicographic order.
bool next_combination(std::vector<Vertex>& idx, std::size_t n) {
  const std::size_t k = idx.size();
  std::size_t i = k;
  while (i > 0) {
    --i;
    if (idx[i] < n - k + i) {
      ++idx[i];
      for (std::size_t j = i + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
      return true;
    }
  }
  return false;
}

}  // namespace

Matching max_matching(const Graph& g) { return max_matching(g, VertexSet(g.order())); }

Matching max_matching(const Graph& g, const VertexSet& removed) {
  BlossomSolver solver(g);
  removed.for_each([&](Vertex v) { solver.deactivate(v); });
  solver.greedy();
  solver.augment_all(false);
  return solver.matching();
}

bool has_perfect_matching(const Graph& g) { return has_perfect_matching(g, VertexSet(g.order())); }

bool has_perfect_matching(const Graph& g, const VertexSet& removed) {
  if ((g.order() - removed.size()) % 2 != 0) return false;
  BlossomSolver solver(g);
  removed.for_each([&](Vertex v) { solver.deactivate(v); });
  solver.greedy();
  return solver.augment_all(true);
}

bool is_valid_matching(const Graph& g, const Matching& m) {
  std::vector<bool> covered(g.order(), false);
  for (auto [u, v] : m.pairs) {
    if (u >= g.order() || v >= g.order() || u == v || !g.has_edge(u, v)) return false;
    if (covered[u] || covered[v]) return false;
    covered[u] = covered[v] = true;
  }
  return true;
}

const char* to_string(CriticalityReason r) {
  switch (r) {
    case CriticalityReason::Parity: return "PARITY";
    case CriticalityReason::WitnessFound: return "WITNESS_FOUND";
    case CriticalityReason::AllSubsetsPass: return "ALL_SUBSETS_PASS";
  }
  return "UNKNOWN";
}

CriticalityVerdict is_k_factor_critical(const Graph& g, std::int64_t k,
                                        CriticalityOptions options) {
  const std::size_t n = g.order();
  if (k < 0 || static_cast<std::size_t>(k) > n)
    throw InputError("k must satisfy 0 <= k <= n (k=" + std::to_string(k) +
                     ", n=" + std::to_string(n) + ")");
  CriticalityVerdict verdict;
  if ((n - static_cast<std::size_t>(k)) % 2 != 0) {
    verdict.reason = CriticalityReason::Parity;
    return verdict;
  }

  const auto ks = static_cast<std::size_t>(k);
  std::vector<Vertex> subset(ks);
  std::iota(subset.begin(), subset.end(), Vertex{0});

  BlossomSolver reused(g);
  std::vector<Vertex> previous;
  bool first = true;
  do {
    ++verdict.subsets_checked;
    bool perfect = false;
    if (options.reseed) {
      for (Vertex v : previous) reused.activate(v);
      for (Vertex v : subset) reused.deactivate(v);
      if (first) reused.greedy();
      perfect = reused.augment_all(true);
      previous = subset;
      first = false;
    } else {
      VertexSet removed(n);
      for (Vertex v : subset) removed.insert(v);
      perfect = has_perfect_matching(g, removed);
    }
    if (!perfect) {
      verdict.reason = CriticalityReason::WitnessFound;
      verdict.witness = subset;
      return verdict;
    }
  } while (ks > 0 && next_combination(subset, n));

  verdict.is_critical = true;
  verdict.reason = CriticalityReason::AllSubsetsPass;
  return verdict;
}

}  // namespace factorcrit

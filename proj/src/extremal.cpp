#include "factorcrit/extremal.hpp"

#include "factorcrit/errors.hpp"

namespace factorcrit {

std::string params_violation(const ExtremalParams& p) {
  if (p.k < 1) return "k must be at least 1 (k=" + std::to_string(p.k) + ")";
  if (p.t < p.k)
    return "t must be at least k (t=" + std::to_string(p.t) +
           ", k=" + std::to_string(p.k) + ")";
  if ((p.n - p.k) % 2 != 0)
    return "n must have the parity of k (n=" + std::to_string(p.n) +
           ", k=" + std::to_string(p.k) + ")";
  if (p.middle_size() < 1)
    return "n+k-2t-1 must be at least 1 (got " + std::to_string(p.middle_size()) + ")";
  return {};
}

bool params_valid(const ExtremalParams& p) { return params_violation(p).empty(); }

void validate(const ExtremalParams& p) {
  if (auto why = params_violation(p); !why.empty()) throw InputError(why);
}

Graph construct_extremal(const ExtremalParams& p) {
  validate(p);
  const auto hub = static_cast<std::size_t>(p.hub_size());
  const auto middle = static_cast<std::size_t>(p.middle_size());
  const auto n = static_cast<std::size_t>(p.n);
  Graph g(n);
  // Hub plus middle block is one clique of size n+k-t-1.
  for (Vertex u = 0; u < hub + middle; ++u)
    for (Vertex v = u + 1; v < hub + middle; ++v) g.add_edge(u, v);
  for (Vertex v = hub + middle; v < n; ++v)
    for (Vertex h = 0; h < hub; ++h) g.add_edge(h, v);
  return g;
}

std::int64_t binomial2(std::int64_t m) { return m < 2 ? 0 : m * (m - 1) / 2; }

std::int64_t extremal_edge_count(const ExtremalParams& p) {
  return binomial2(p.n + p.k - p.t - 1) + p.t * (p.t - p.k + 1);
}

std::int64_t thm4_threshold(const ExtremalParams& p) {
  return binomial2(p.n + p.k - p.t - 2) + (p.t - p.k + 2) * (p.t + 1);
}

bool meets_edge_order_bound(const ExtremalParams& p) {
  return 2 * p.n >= 15 * p.t - 11 * p.k + 29;
}

bool meets_spectral_order_bound(const ExtremalParams& p) {
  return meets_edge_order_bound(p) && 2 * p.n >= 2 * p.t * p.t + 5 * p.t + 4;
}

namespace {

template <typename Pred>
std::int64_t smallest_order(std::int64_t t, std::int64_t k, Pred ok) {
  if (k < 1 || t < k) throw InputError("need t >= k >= 1");
  ExtremalParams p{k, t, k};
  while (!(ok(p) && params_valid(p))) p.n += 2;
  return p.n;
}

}  // namespace

std::int64_t min_order_edge(std::int64_t t, std::int64_t k) {
  return smallest_order(t, k, meets_edge_order_bound);
}

std::int64_t min_order_spectral(std::int64_t t, std::int64_t k) {
  return smallest_order(t, k, meets_spectral_order_bound);
}

}  // namespace factorcrit

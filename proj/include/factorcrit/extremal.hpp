#pragma once

#include <cstdint>
#include <string>

#include "factorcrit/graph.hpp"

namespace factorcrit {

/// Parameter triple of the family K_t ∨ (K_{n+k-2t-1} + (t-k+1)K_1).
struct ExtremalParams {
  std::int64_t n = 0;
  std::int64_t t = 0;
  std::int64_t k = 0;

  std::int64_t hub_size() const { return t; }
  std::int64_t middle_size() const { return n + k - 2 * t - 1; }
  std::int64_t independent_size() const { return t - k + 1; }

  friend bool operator==(const ExtremalParams&, const ExtremalParams&) = default;
};

/// Empty string when t >= k >= 1, n ≡ k (mod 2) and the middle clique is
/// nonempty; otherwise a description of the first violated invariant.
std::string params_violation(const ExtremalParams& p);
bool params_valid(const ExtremalParams& p);
/// Throws InputError naming the violated invariant.
void validate(const ExtremalParams& p);

/// Hub [0,t), then the middle clique, then the t-k+1 independent vertices.
Graph construct_extremal(const ExtremalParams& p);

std::int64_t binomial2(std::int64_t m);

/// C(n+k-t-1, 2) + t(t-k+1). Exact integer arithmetic; no validation.
std::int64_t extremal_edge_count(const ExtremalParams& p);
/// C(n+k-t-2, 2) + (t-k+2)(t+1). Exact integer arithmetic; no validation.
std::int64_t thm4_threshold(const ExtremalParams& p);

/// 2n >= 15t - 11k + 29.
bool meets_edge_order_bound(const ExtremalParams& p);
/// Edge bound and also 2n >= 2t^2 + 5t + 4.
bool meets_spectral_order_bound(const ExtremalParams& p);

/// Smallest n ≡ k (mod 2) satisfying the respective order bound (and the
/// middle-clique invariant).
std::int64_t min_order_edge(std::int64_t t, std::int64_t k);
std::int64_t min_order_spectral(std::int64_t t, std::int64_t k);

}  // namespace factorcrit

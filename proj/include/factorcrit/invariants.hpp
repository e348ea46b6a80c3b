#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "factorcrit/extremal.hpp"
#include "factorcrit/graph.hpp"

namespace factorcrit {

struct CliqueResult {
  std::size_t omega = 0;
  std::vector<Vertex> witness;  // sorted
};

/// Exact maximum clique: branch and bound with a greedy-colouring bound over
/// bitset candidate sets.
CliqueResult clique_number(const Graph& g);

/// Exact alpha(G) = omega(complement(G)).
std::size_t independence_number(const Graph& g);
CliqueResult maximum_independent_set(const Graph& g);

bool induces_clique(const Graph& g, const std::vector<Vertex>& vs);
bool induces_independent_set(const Graph& g, const std::vector<Vertex>& vs);

/// t-connected, alpha(G) <= t-k+1 and n ≡ k (mod 2). Any graph meeting this
/// is k-factor-critical. Throws InputError unless t >= k >= 0.
bool favaron_condition(const Graph& g, std::int64_t k, std::int64_t t);

enum class Lemma8Status { Pass, Fail, HypothesesUnmet };

const char* to_string(Lemma8Status s);

struct Lemma8Report {
  Lemma8Status status = Lemma8Status::HypothesesUnmet;
  /// First unmet hypothesis, empty when all hold.
  std::string unmet;
  std::int64_t edges = 0;
  std::int64_t threshold = 0;
  std::int64_t required_omega = 0;
  std::optional<std::size_t> omega;  // computed only when hypotheses hold
};

/// For a t-connected graph equal to its own (n+k-1)-closure, with the order
/// bound, parity and e(H) above the edge threshold: checks omega(H) >=
/// n+k-t-1.
Lemma8Report lemma8_check(const Graph& h, std::int64_t t, std::int64_t k);

/// Vertex blocks of a recognised K_t ∨ (K_{n+k-2t-1} + (t-k+1)K_1).
struct ExtremalBlocks {
  std::vector<Vertex> hub;          // the t universal vertices
  std::vector<Vertex> middle;       // rest of the maximum clique
  std::vector<Vertex> independent;  // the t-k+1 vertices of degree t
};

/// Structural recognition without isomorphism search: exactly t universal
/// vertices, the t-k+1 remaining vertices adjacent only to them are pairwise
/// nonadjacent with common neighbourhood equal to the hub, and everything
/// else forms a clique with the hub of size n+k-t-1.
std::optional<ExtremalBlocks> recognize_extremal(const Graph& g, const ExtremalParams& p);
bool is_extremal(const Graph& g, const ExtremalParams& p);

}  // namespace factorcrit

#pragma once

#include <cstdint>
#include <initializer_list>
#include <random>
#include <vector>

#include "factorcrit/graph.hpp"

namespace factorcrit {

using Rng = std::mt19937_64;

/// Order-sensitive SplitMix64 combination of seed material.
std::uint64_t mix_seed(std::initializer_list<std::uint64_t> parts);

/// Uniform integer in [0, bound) by rejection; unlike
/// std::uniform_int_distribution the sequence is identical on every platform.
std::uint64_t uniform_below(Rng& rng, std::uint64_t bound);
std::int64_t uniform_between(Rng& rng, std::int64_t lo, std::int64_t hi);  // inclusive

std::vector<Vertex> random_permutation(std::size_t n, Rng& rng);

/// Circulant graph joining each vertex to its ceil(t/2) nearest neighbours on
/// each side (K_n once that covers everything). Its connectivity is at least t.
Graph harary_backbone(std::size_t n, std::int64_t t);

/// Backbone plus `surplus` distinct non-edges drawn uniformly. Deterministic
/// in `seed`. Throws InputError when t < 1, t >= n, or surplus exceeds the
/// number of non-edges of the backbone.
Graph random_t_connected(std::size_t n, std::int64_t t, std::size_t surplus, std::uint64_t seed);

/// Adds `count` distinct non-edges of g drawn uniformly.
void add_random_edges(Graph& g, std::size_t count, Rng& rng);

}  // namespace factorcrit

#pragma once

#include <random>
#include <span>
#include <utility>
#include <vector>

#include "treeqaoa/graph.hpp"
#include "treeqaoa/graph_algorithms.hpp"

namespace treeqaoa {

/// I_1 = sum_i b_i - sum_{(i,j) in E} b_i b_j.
int i1_value(const Graph &g, std::span<const std::uint8_t> bits);

/// I_2 = I_1(bits) + I_1(complement of bits).
int i2_value(const Graph &g, std::span<const std::uint8_t> bits);

/// The same quantity as i2_value written through the cut: n - |E| + cut.
int i2_via_cut(const Graph &g, std::span<const std::uint8_t> bits);

Bits complement(std::span<const std::uint8_t> bits);

/// Indicator of a vertex set.
Bits indicator(const Graph &g, std::span<const int> vertices);

bool is_independent(const Graph &g, std::span<const int> vertices);

/// Removes one endpoint of a violated edge until the 1-set is independent.
/// Rule: lowest-index violated edge; drop the endpoint with more neighbours
/// still in the set, ties going to the higher vertex index. Returns the
/// surviving vertices in increasing order; the size is at least I_1(bits).
std::vector<int> repair_independent(const Graph &g, std::span<const std::uint8_t> bits);

/// Same procedure with the violated edge and the dropped endpoint chosen
/// uniformly at random.
std::vector<int> repair_independent_random(const Graph &g, std::span<const std::uint8_t> bits,
                                           std::mt19937_64 &rng);

/// Repairs the 1-side and the 0-side separately: two disjoint independent
/// sets with |A| + |B| >= I_2(bits).
std::pair<std::vector<int>, std::vector<int>>
two_independent_sets(const Graph &g, std::span<const std::uint8_t> bits);

} // namespace treeqaoa

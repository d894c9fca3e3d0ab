#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "treeqaoa/graph.hpp"

namespace treeqaoa {

/// Bit i is the side of vertex i; 1 also means "in the set" for the MIS costs.
using Bits = std::vector<std::uint8_t>;

/// Shortest cycle length; nullopt for a forest. BFS from every vertex,
/// O(n |E|).
std::optional<int> girth(const Graph &g);

/// Largest p with girth >= 2p+2, i.e. floor((girth-2)/2); nullopt when the
/// graph is a forest (every depth is certified). Throws InvalidParameter for
/// a graph that is not regular.
std::optional<int> max_certified_depth(const Graph &g);

/// Proper edge colouring with at most max_degree+1 colours (Misra-Gries).
/// Entry i is the colour of g.edges()[i].
std::vector<int> edge_coloring(const Graph &g);

bool is_proper_edge_coloring(const Graph &g, std::span<const int> colors);

int color_count(std::span<const int> colors);

/// Number of edges whose endpoints fall on different sides.
int cut_value(const Graph &g, std::span<const std::uint8_t> bits);

struct BruteForceCut {
    int value = 0;
    Bits assignment;
};

/// Exact maximum cut by Gray-code enumeration of 2^(n-1) assignments.
/// Throws ResourceError when n exceeds `max_vertices`.
BruteForceCut brute_force_maxcut(const Graph &g, int max_vertices = 28);

} // namespace treeqaoa

#pragma once

#include <algorithm>
#include <random>
#include <set>
#include <vector>

#include "treeqaoa/graph.hpp"

namespace testing {

/// Erdos-Renyi style graph with every degree capped at max_degree.
inline treeqaoa::Graph random_graph(std::mt19937_64 &rng, int n, double density, int max_degree) {
    std::vector<int> deg(static_cast<std::size_t>(n), 0);
    std::vector<treeqaoa::Edge> edges;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) {
            const double r = static_cast<double>(rng() >> 11) * 0x1.0p-53;
            if (r < density && deg[u] < max_degree && deg[v] < max_degree) {
                edges.emplace_back(u, v);
                ++deg[u];
                ++deg[v];
            }
        }
    return treeqaoa::Graph(n, edges);
}

/// Uniform-ish cubic graph by the pairing model, rejecting loops and
/// multi-edges. n must be even.
inline treeqaoa::Graph random_cubic(std::mt19937_64 &rng, int n) {
    for (;;) {
        std::vector<int> stubs;
        for (int v = 0; v < n; ++v)
            for (int k = 0; k < 3; ++k)
                stubs.push_back(v);
        std::shuffle(stubs.begin(), stubs.end(), rng);
        std::set<std::pair<int, int>> seen;
        bool ok = true;
        for (std::size_t i = 0; i < stubs.size() && ok; i += 2) {
            int u = stubs[i], v = stubs[i + 1];
            if (u > v)
                std::swap(u, v);
            ok = u != v && seen.insert({u, v}).second;
        }
        if (!ok)
            continue;
        return treeqaoa::Graph(n, std::vector<treeqaoa::Edge>(seen.begin(), seen.end()));
    }
}

inline std::vector<std::uint8_t> random_bits(std::mt19937_64 &rng, int n) {
    std::vector<std::uint8_t> b(static_cast<std::size_t>(n));
    for (auto &x : b)
        x = static_cast<std::uint8_t>(rng() & 1u);
    return b;
}

} // namespace testing

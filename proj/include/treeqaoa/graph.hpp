#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace treeqaoa {

using Edge = std::pair<int, int>;

/// Simple undirected graph on vertices 0..n-1.
///
/// Edges are stored normalised (u < v) in insertion order; the edge index is
/// the position in that list.
class Graph {
  public:
    Graph() = default;
    /// Throws InvalidParameter on a self-loop, duplicate or out-of-range edge.
    Graph(int vertex_count, const std::vector<Edge> &edges);

    int vertex_count() const noexcept { return n_; }
    std::size_t edge_count() const noexcept { return edges_.size(); }
    const std::vector<Edge> &edges() const noexcept { return edges_; }
    const std::vector<int> &neighbors(int v) const { return adj_.at(static_cast<std::size_t>(v)); }
    int degree(int v) const { return static_cast<int>(neighbors(v).size()); }
    int max_degree() const noexcept;

    /// Common degree when every vertex has the same degree.
    std::optional<int> regular_degree() const noexcept;

    bool has_edge(int u, int v) const;

  private:
    int n_ = 0;
    std::vector<Edge> edges_;
    std::vector<std::vector<int>> adj_;
};

/// Reads the edge-list format: one "u v" pair per line, optional "n <count>"
/// header, '#' comments and blank lines ignored. Throws ParseError carrying
/// the offending line number.
Graph parse_graph(std::string_view text);

/// Writes "n <count>" followed by one edge per line.
std::string format_graph(const Graph &g);

/// Standard fixtures: cycle, path, complete_bipartite (3,3 by default),
/// petersen, heawood, pappus, moebius_kantor, mcgee, tutte_coxeter.
/// `size` is the vertex count for cycle/path and the side length for
/// complete_bipartite. Throws InvalidParameter for unknown names.
Graph named_graph(std::string_view name, std::optional<int> size = std::nullopt);

Graph cycle_graph(int n);
Graph path_graph(int n);
Graph complete_bipartite(int a, int b);

/// Builds a cubic graph from an LCF code repeated `repeats` times.
Graph lcf_graph(int n, const std::vector<int> &shifts, int repeats);

/// Generalised Petersen graph GP(n, k).
Graph generalized_petersen(int n, int k);

} // namespace treeqaoa

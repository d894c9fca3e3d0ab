#include "treeqaoa/graph_algorithms.hpp"

#include <algorithm>
#include <bit>
#include <limits>
#include <queue>
#include <string>

#include "treeqaoa/errors.hpp"

namespace treeqaoa {

namespace {

void check_length(const Graph &g, std::size_t len) {
    if (len != static_cast<std::size_t>(g.vertex_count()))
        throw InvalidParameter("bit string has length " + std::to_string(len) +
                               ", graph has " + std::to_string(g.vertex_count()) + " vertices");
}

// Misra-Gries state: at[v][c] is the neighbour joined to v by colour c, or -1.
class ColoringState {
  public:
    ColoringState(int n, int colors)
        : colors_(colors), at_(static_cast<std::size_t>(n), std::vector<int>(static_cast<std::size_t>(colors), -1)) {}

    bool is_free(int v, int c) const { return at_[idx(v)][idx(c)] == -1; }

    int free_color(int v) const {
        for (int c = 0; c < colors_; ++c)
            if (is_free(v, c))
                return c;
        return -1;
    }

    int common_free_color(int u, int v) const {
        for (int c = 0; c < colors_; ++c)
            if (is_free(u, c) && is_free(v, c))
                return c;
        return -1;
    }

    int color_of(int u, int v) const {
        for (int c = 0; c < colors_; ++c)
            if (at_[idx(u)][idx(c)] == v)
                return c;
        return -1;
    }

    int neighbor_by(int v, int c) const { return at_[idx(v)][idx(c)]; }

    void set(int u, int v, int c) {
        at_[idx(u)][idx(c)] = v;
        at_[idx(v)][idx(c)] = u;
    }

    void clear(int u, int v, int c) {
        at_[idx(u)][idx(c)] = -1;
        at_[idx(v)][idx(c)] = -1;
    }

  private:
    static std::size_t idx(int i) { return static_cast<std::size_t>(i); }
    int colors_;
    std::vector<std::vector<int>> at_;
};

void color_edge(const Graph &g, ColoringState &st, int u, int v) {
    if (const int shared = st.common_free_color(u, v); shared >= 0) {
        st.set(u, v, shared);
        return;
    }
    // Maximal fan of u starting at the uncoloured edge (u, v).
    std::vector<int> fan{v};
    std::vector<bool> in_fan(static_cast<std::size_t>(g.vertex_count()), false);
    in_fan[static_cast<std::size_t>(v)] = true;
    for (bool grown = true; grown;) {
        grown = false;
        for (int x : g.neighbors(u)) {
            if (in_fan[static_cast<std::size_t>(x)])
                continue;
            const int cx = st.color_of(u, x);
            if (cx >= 0 && st.is_free(fan.back(), cx)) {
                fan.push_back(x);
                in_fan[static_cast<std::size_t>(x)] = true;
                grown = true;
                break;
            }
        }
    }

    const int c = st.free_color(u);
    const int d = st.free_color(fan.back());

    // Invert the cd-path leaving u (u has c free, so the path starts on d).
    std::vector<std::pair<int, int>> path;
    std::vector<int> path_colors;
    for (int cur = u, want = d;;) {
        const int next = st.neighbor_by(cur, want);
        if (next < 0)
            break;
        path.emplace_back(cur, next);
        path_colors.push_back(want);
        cur = next;
        want = want == d ? c : d;
    }
    for (std::size_t i = 0; i < path.size(); ++i)
        st.clear(path[i].first, path[i].second, path_colors[i]);
    for (std::size_t i = 0; i < path.size(); ++i)
        st.set(path[i].first, path[i].second, path_colors[i] == d ? c : d);

    // First fan vertex with d free whose prefix is still a fan.
    std::size_t w = fan.size();
    for (std::size_t i = 0; i < fan.size(); ++i) {
        if (i > 0) {
            const int ci = st.color_of(u, fan[i]);
            if (ci < 0 || !st.is_free(fan[i - 1], ci))
                break;
        }
        if (st.is_free(fan[i], d)) {
            w = i;
            break;
        }
    }
    if (w == fan.size())
        throw Error("edge colouring invariant violated at vertex " + std::to_string(u));

    // Rotate the fan prefix and close it with d.
    std::vector<int> shifted(w + 1, -1);
    for (std::size_t i = 1; i <= w; ++i) {
        shifted[i] = st.color_of(u, fan[i]);
        st.clear(u, fan[i], shifted[i]);
    }
    for (std::size_t i = 1; i <= w; ++i)
        st.set(u, fan[i - 1], shifted[i]);
    st.set(u, fan[w], d);
}

} // namespace

std::optional<int> girth(const Graph &g) {
    const int n = g.vertex_count();
    int best = std::numeric_limits<int>::max();
    std::vector<int> dist(static_cast<std::size_t>(n));
    std::vector<int> parent(static_cast<std::size_t>(n));
    for (int root = 0; root < n; ++root) {
        std::fill(dist.begin(), dist.end(), -1);
        dist[static_cast<std::size_t>(root)] = 0;
        parent[static_cast<std::size_t>(root)] = -1;
        std::queue<int> queue;
        queue.push(root);
        while (!queue.empty()) {
            const int u = queue.front();
            queue.pop();
            const int du = dist[static_cast<std::size_t>(u)];
            if (2 * du + 1 >= best)
                break;
            for (int w : g.neighbors(u)) {
                auto &dw = dist[static_cast<std::size_t>(w)];
                if (dw < 0) {
                    dw = du + 1;
                    parent[static_cast<std::size_t>(w)] = u;
                    queue.push(w);
                } else if (parent[static_cast<std::size_t>(u)] != w) {
                    best = std::min(best, du + dw + 1);
                }
            }
        }
    }
    if (best == std::numeric_limits<int>::max())
        return std::nullopt;
    return best;
}

std::optional<int> max_certified_depth(const Graph &g) {
    if (!g.regular_degree())
        throw InvalidParameter("max_certified_depth needs a regular graph");
    const auto gth = girth(g);
    if (!gth)
        return std::nullopt;
    return (*gth - 2) / 2;
}

std::vector<int> edge_coloring(const Graph &g) {
    const int colors = g.max_degree() + 1;
    ColoringState st(g.vertex_count(), colors);
    for (const auto &[u, v] : g.edges())
        color_edge(g, st, u, v);
    std::vector<int> out;
    out.reserve(g.edge_count());
    for (const auto &[u, v] : g.edges())
        out.push_back(st.color_of(u, v));
    return out;
}

bool is_proper_edge_coloring(const Graph &g, std::span<const int> colors) {
    if (colors.size() != g.edge_count())
        return false;
    std::vector<std::vector<int>> seen(static_cast<std::size_t>(g.vertex_count()));
    for (std::size_t i = 0; i < colors.size(); ++i) {
        if (colors[i] < 0)
            return false;
        const auto [u, v] = g.edges()[i];
        for (int x : {u, v}) {
            auto &s = seen[static_cast<std::size_t>(x)];
            if (std::find(s.begin(), s.end(), colors[i]) != s.end())
                return false;
            s.push_back(colors[i]);
        }
    }
    return true;
}

int color_count(std::span<const int> colors) {
    std::vector<int> sorted(colors.begin(), colors.end());
    std::sort(sorted.begin(), sorted.end());
    return static_cast<int>(std::unique(sorted.begin(), sorted.end()) - sorted.begin());
}

int cut_value(const Graph &g, std::span<const std::uint8_t> bits) {
    check_length(g, bits.size());
    int cut = 0;
    for (const auto &[u, v] : g.edges())
        cut += (bits[static_cast<std::size_t>(u)] != 0) != (bits[static_cast<std::size_t>(v)] != 0);
    return cut;
}

BruteForceCut brute_force_maxcut(const Graph &g, int max_vertices) {
    const int n = g.vertex_count();
    if (n > max_vertices)
        throw ResourceError("brute-force max cut limited to " + std::to_string(max_vertices) +
                            " vertices, graph has " + std::to_string(n));
    BruteForceCut best{0, Bits(static_cast<std::size_t>(n), 0)};
    if (n <= 1)
        return best;
    // Vertex n-1 stays on side 0; Gray code over the rest.
    Bits bits(static_cast<std::size_t>(n), 0);
    int cut = 0;
    const std::uint64_t total = std::uint64_t{1} << (n - 1);
    for (std::uint64_t step = 1; step < total; ++step) {
        const int v = std::countr_zero(step);
        const auto vi = static_cast<std::size_t>(v);
        for (int w : g.neighbors(v))
            cut += bits[static_cast<std::size_t>(w)] == bits[vi] ? 1 : -1;
        bits[vi] ^= 1u;
        if (cut > best.value) {
            best.value = cut;
            best.assignment = bits;
        }
    }
    return best;
}

} // namespace treeqaoa

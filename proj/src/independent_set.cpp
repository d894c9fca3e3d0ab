#include "treeqaoa/independent_set.hpp"

#include <string>

#include "treeqaoa/errors.hpp"

namespace treeqaoa {

namespace {

void check_length(const Graph &g, std::size_t len) {
    if (len != static_cast<std::size_t>(g.vertex_count()))
        throw InvalidParameter("bit string has length " + std::to_string(len) +
                               ", graph has " + std::to_string(g.vertex_count()) + " vertices");
}

bool on(std::span<const std::uint8_t> bits, int v) { return bits[static_cast<std::size_t>(v)] != 0; }

std::vector<int> members(const Bits &in) {
    std::vector<int> out;
    for (std::size_t v = 0; v < in.size(); ++v)
        if (in[v])
            out.push_back(static_cast<int>(v));
    return out;
}

int degree_within(const Graph &g, const Bits &in, int v) {
    int count = 0;
    for (int w : g.neighbors(v))
        count += in[static_cast<std::size_t>(w)] != 0;
    return count;
}

} // namespace

int i1_value(const Graph &g, std::span<const std::uint8_t> bits) {
    check_length(g, bits.size());
    int weight = 0;
    for (int v = 0; v < g.vertex_count(); ++v)
        weight += on(bits, v);
    int violations = 0;
    for (const auto &[u, v] : g.edges())
        violations += on(bits, u) && on(bits, v);
    return weight - violations;
}

Bits complement(std::span<const std::uint8_t> bits) {
    Bits out(bits.size());
    for (std::size_t i = 0; i < bits.size(); ++i)
        out[i] = bits[i] ? 0 : 1;
    return out;
}

int i2_value(const Graph &g, std::span<const std::uint8_t> bits) {
    return i1_value(g, bits) + i1_value(g, complement(bits));
}

int i2_via_cut(const Graph &g, std::span<const std::uint8_t> bits) {
    return g.vertex_count() - static_cast<int>(g.edge_count()) + cut_value(g, bits);
}

Bits indicator(const Graph &g, std::span<const int> vertices) {
    Bits out(static_cast<std::size_t>(g.vertex_count()), 0);
    for (int v : vertices)
        out.at(static_cast<std::size_t>(v)) = 1;
    return out;
}

bool is_independent(const Graph &g, std::span<const int> vertices) {
    const Bits in = indicator(g, vertices);
    for (const auto &[u, v] : g.edges())
        if (in[static_cast<std::size_t>(u)] && in[static_cast<std::size_t>(v)])
            return false;
    return true;
}

std::vector<int> repair_independent(const Graph &g, std::span<const std::uint8_t> bits) {
    check_length(g, bits.size());
    Bits in(bits.begin(), bits.end());
    for (auto &b : in)
        b = b ? 1 : 0;
    const auto &edges = g.edges();
    for (std::size_t e = 0; e < edges.size(); ++e) {
        // Removals only clear bits, so earlier edges never become violated again.
        const auto [u, v] = edges[e];
        if (!in[static_cast<std::size_t>(u)] || !in[static_cast<std::size_t>(v)])
            continue;
        const int du = degree_within(g, in, u);
        const int dv = degree_within(g, in, v);
        const int drop = du != dv ? (du > dv ? u : v) : std::max(u, v);
        in[static_cast<std::size_t>(drop)] = 0;
    }
    return members(in);
}

std::vector<int> repair_independent_random(const Graph &g, std::span<const std::uint8_t> bits,
                                           std::mt19937_64 &rng) {
    check_length(g, bits.size());
    Bits in(bits.begin(), bits.end());
    for (auto &b : in)
        b = b ? 1 : 0;
    std::vector<Edge> violated;
    for (;;) {
        violated.clear();
        for (const auto &[u, v] : g.edges())
            if (in[static_cast<std::size_t>(u)] && in[static_cast<std::size_t>(v)])
                violated.emplace_back(u, v);
        if (violated.empty())
            break;
        const auto pick = violated[static_cast<std::size_t>(rng() % violated.size())];
        const int drop = (rng() & 1u) ? pick.first : pick.second;
        in[static_cast<std::size_t>(drop)] = 0;
    }
    return members(in);
}

std::pair<std::vector<int>, std::vector<int>>
two_independent_sets(const Graph &g, std::span<const std::uint8_t> bits) {
    return {repair_independent(g, bits), repair_independent(g, complement(bits))};
}

} // namespace treeqaoa

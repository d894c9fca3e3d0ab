#include "treeqaoa/graph.hpp"

#include <algorithm>
#include <charconv>
#include <set>
#include <sstream>

#include "treeqaoa/errors.hpp"

namespace treeqaoa {

namespace {

Edge normalized(int u, int v) { return u < v ? Edge{u, v} : Edge{v, u}; }

std::string_view trim(std::string_view s) {
    const auto first = s.find_first_not_of(" \t\r");
    if (first == std::string_view::npos)
        return {};
    const auto last = s.find_last_not_of(" \t\r");
    return s.substr(first, last - first + 1);
}

std::vector<std::string_view> split_ws(std::string_view s) {
    std::vector<std::string_view> out;
    std::size_t i = 0;
    while (i < s.size()) {
        while (i < s.size() && (s[i] == ' ' || s[i] == '\t'))
            ++i;
        const std::size_t start = i;
        while (i < s.size() && s[i] != ' ' && s[i] != '\t')
            ++i;
        if (i > start)
            out.push_back(s.substr(start, i - start));
    }
    return out;
}

bool parse_index(std::string_view token, long long &out) {
    const char *end = token.data() + token.size();
    auto [ptr, ec] = std::from_chars(token.data(), end, out);
    return ec == std::errc{} && ptr == end && out >= 0;
}

// Cubic graph from a list of chords on top of a Hamiltonian cycle. Chords
// listed from both ends are added once.
Graph cycle_with_chords(int n, const std::vector<Edge> &chords) {
    std::set<Edge> seen;
    std::vector<Edge> edges;
    auto add = [&](int u, int v) {
        const Edge e = normalized(u, v);
        if (seen.insert(e).second)
            edges.push_back(e);
    };
    for (int i = 0; i < n; ++i)
        add(i, (i + 1) % n);
    for (const auto &[u, v] : chords)
        add(u, v);
    return Graph(n, edges);
}

} // namespace

Graph::Graph(int vertex_count, const std::vector<Edge> &edges) : n_(vertex_count) {
    if (vertex_count < 0)
        throw InvalidParameter("vertex count must be non-negative");
    adj_.resize(static_cast<std::size_t>(vertex_count));
    std::set<Edge> seen;
    edges_.reserve(edges.size());
    for (const auto &[u, v] : edges) {
        if (u < 0 || v < 0 || u >= n_ || v >= n_)
            throw InvalidParameter("edge (" + std::to_string(u) + "," + std::to_string(v) +
                                   ") has an endpoint outside 0.." + std::to_string(n_ - 1));
        if (u == v)
            throw InvalidParameter("self-loop at vertex " + std::to_string(u));
        const Edge e = normalized(u, v);
        if (!seen.insert(e).second)
            throw InvalidParameter("duplicate edge (" + std::to_string(e.first) + "," +
                                   std::to_string(e.second) + ")");
        edges_.push_back(e);
        adj_[static_cast<std::size_t>(u)].push_back(v);
        adj_[static_cast<std::size_t>(v)].push_back(u);
    }
}

int Graph::max_degree() const noexcept {
    std::size_t best = 0;
    for (const auto &nb : adj_)
        best = std::max(best, nb.size());
    return static_cast<int>(best);
}

std::optional<int> Graph::regular_degree() const noexcept {
    if (adj_.empty())
        return std::nullopt;
    const std::size_t d = adj_.front().size();
    for (const auto &nb : adj_)
        if (nb.size() != d)
            return std::nullopt;
    return static_cast<int>(d);
}

bool Graph::has_edge(int u, int v) const {
    const auto &nb = neighbors(u);
    return std::find(nb.begin(), nb.end(), v) != nb.end();
}

Graph parse_graph(std::string_view text) {
    std::vector<Edge> edges;
    std::set<Edge> seen;
    std::optional<long long> declared;
    long long max_id = -1;
    std::size_t line_no = 0;

    while (!text.empty()) {
        const auto nl = text.find('\n');
        std::string_view line = text.substr(0, nl);
        text = nl == std::string_view::npos ? std::string_view{} : text.substr(nl + 1);
        ++line_no;

        if (const auto hash = line.find('#'); hash != std::string_view::npos)
            line = line.substr(0, hash);
        line = trim(line);
        if (line.empty())
            continue;

        const auto tokens = split_ws(line);
        if (tokens.size() == 2 && tokens[0] == "n") {
            if (declared)
                throw ParseError(line_no, "repeated 'n' header");
            if (!edges.empty())
                throw ParseError(line_no, "'n' header must precede the edges");
            long long count = 0;
            if (!parse_index(tokens[1], count))
                throw ParseError(line_no, "malformed vertex count '" + std::string(tokens[1]) + "'");
            declared = count;
            continue;
        }
        long long u = 0, v = 0;
        if (tokens.size() != 2 || !parse_index(tokens[0], u) || !parse_index(tokens[1], v))
            throw ParseError(line_no, "expected 'u v' with non-negative integers, got '" +
                                          std::string(line) + "'");
        if (u > 1'000'000'000 || v > 1'000'000'000)
            throw ParseError(line_no, "vertex id too large");
        if (u == v)
            throw ParseError(line_no, "self-loop at vertex " + std::to_string(u));
        const Edge e = normalized(static_cast<int>(u), static_cast<int>(v));
        if (!seen.insert(e).second)
            throw ParseError(line_no, "duplicate edge (" + std::to_string(e.first) + "," +
                                          std::to_string(e.second) + ")");
        if (declared && std::max(u, v) >= *declared)
            throw ParseError(line_no, "vertex id exceeds declared n = " + std::to_string(*declared));
        max_id = std::max({max_id, u, v});
        edges.push_back(e);
    }
    const long long n = declared ? *declared : max_id + 1;
    return Graph(static_cast<int>(n), edges);
}

std::string format_graph(const Graph &g) {
    std::ostringstream os;
    os << "n " << g.vertex_count() << '\n';
    for (const auto &[u, v] : g.edges())
        os << u << ' ' << v << '\n';
    return os.str();
}

Graph cycle_graph(int n) {
    if (n < 3)
        throw InvalidParameter("cycle needs n >= 3, got " + std::to_string(n));
    std::vector<Edge> edges;
    for (int i = 0; i < n; ++i)
        edges.push_back(normalized(i, (i + 1) % n));
    return Graph(n, edges);
}

Graph path_graph(int n) {
    if (n < 1)
        throw InvalidParameter("path needs n >= 1, got " + std::to_string(n));
    std::vector<Edge> edges;
    for (int i = 0; i + 1 < n; ++i)
        edges.emplace_back(i, i + 1);
    return Graph(n, edges);
}

Graph complete_bipartite(int a, int b) {
    if (a < 1 || b < 1)
        throw InvalidParameter("complete bipartite sides must be positive");
    std::vector<Edge> edges;
    for (int i = 0; i < a; ++i)
        for (int j = 0; j < b; ++j)
            edges.emplace_back(i, a + j);
    return Graph(a + b, edges);
}

Graph lcf_graph(int n, const std::vector<int> &shifts, int repeats) {
    if (shifts.empty() || static_cast<int>(shifts.size()) * repeats != n)
        throw InvalidParameter("LCF code length times repeats must equal n");
    std::vector<Edge> chords;
    for (int i = 0; i < n; ++i) {
        const int s = shifts[static_cast<std::size_t>(i) % shifts.size()];
        chords.emplace_back(i, ((i + s) % n + n) % n);
    }
    return cycle_with_chords(n, chords);
}

Graph generalized_petersen(int n, int k) {
    if (n < 3 || k < 1 || 2 * k >= n)
        throw InvalidParameter("generalized Petersen GP(n,k) needs n >= 3, 1 <= k < n/2");
    std::vector<Edge> edges;
    for (int i = 0; i < n; ++i) {
        edges.push_back(normalized(i, (i + 1) % n));
        edges.emplace_back(i, n + i);
        edges.push_back(normalized(n + i, n + (i + k) % n));
    }
    return Graph(2 * n, edges);
}

Graph named_graph(std::string_view name, std::optional<int> size) {
    if (name == "cycle")
        return cycle_graph(size.value_or(6));
    if (name == "path")
        return path_graph(size.value_or(4));
    if (name == "complete_bipartite")
        return complete_bipartite(size.value_or(3), size.value_or(3));
    if (name == "petersen")
        return generalized_petersen(5, 2);
    if (name == "heawood")
        return lcf_graph(14, {5, -5}, 7);
    if (name == "pappus")
        return lcf_graph(18, {5, 7, -7, 7, -7, -5}, 3);
    if (name == "moebius_kantor")
        return generalized_petersen(8, 3);
    if (name == "mcgee")
        return lcf_graph(24, {12, 7, -7}, 8);
    if (name == "tutte_coxeter")
        return lcf_graph(30, {-13, -9, 7, -7, 9, 13}, 5);
    throw InvalidParameter("unknown graph name '" + std::string(name) + "'");
}

} // namespace treeqaoa

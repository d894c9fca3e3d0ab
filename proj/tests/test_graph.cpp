#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "treeqaoa/errors.hpp"
#include "treeqaoa/graph.hpp"
#include "treeqaoa/graph_algorithms.hpp"
#include "treeqaoa/independent_set.hpp"
#include "random_graphs.hpp"

using namespace treeqaoa;

namespace {

std::vector<int> degree_sequence(const Graph &g) {
    std::vector<int> d;
    for (int v = 0; v < g.vertex_count(); ++v)
        d.push_back(g.degree(v));
    std::sort(d.begin(), d.end());
    return d;
}

} // namespace

TEST_CASE("parse a triangle") {
    const Graph g = parse_graph("0 1\n1 2\n2 0\n");
    CHECK(g.vertex_count() == 3);
    CHECK(g.edge_count() == 3);
    CHECK(girth(g) == 3);
}

TEST_CASE("parse header, comments and blank lines") {
    const Graph g = parse_graph("# a path plus an isolated vertex\nn 4\n\n0 1  # first\n1 2\n");
    CHECK(g.vertex_count() == 4);
    CHECK(g.edge_count() == 2);
    CHECK(g.degree(3) == 0);
}

TEST_CASE("parse errors carry line numbers") {
    auto line_of = [](const char *text) -> std::size_t {
        try {
            parse_graph(text);
        } catch (const ParseError &e) {
            return e.line();
        }
        return 0;
    };
    CHECK(line_of("0 1\n0 1\n") == 2);
    CHECK(line_of("0 1\n1 0\n") == 2);
    CHECK(line_of("0 1\n2 2\n") == 2);
    CHECK(line_of("0 1\nzero 1\n") == 2);
    CHECK(line_of("0 1 2\n") == 1);
    CHECK(line_of("0 -1\n") == 1);
    CHECK(line_of("n 2\n0 5\n") == 2);
}

TEST_CASE("Heawood round trips through the text format") {
    const Graph g = named_graph("heawood");
    const Graph back = parse_graph(format_graph(g));
    CHECK(back.vertex_count() == 14);
    CHECK(back.edge_count() == 21);
    CHECK(girth(back) == 6);
    CHECK(degree_sequence(back) == degree_sequence(g));
    for (const auto &[u, v] : g.edges())
        CHECK(back.has_edge(u, v));
}

TEST_CASE("graph constructor rejects bad edges") {
    CHECK_THROWS_AS(Graph(3, {{0, 0}}), InvalidParameter);
    CHECK_THROWS_AS(Graph(3, {{0, 1}, {1, 0}}), InvalidParameter);
    CHECK_THROWS_AS(Graph(3, {{0, 3}}), InvalidParameter);
}

TEST_CASE("girth") {
    for (int n = 3; n <= 20; ++n)
        CHECK(girth(cycle_graph(n)) == n);
    CHECK(!girth(path_graph(7)));
    CHECK(girth(named_graph("petersen")) == 5);
    CHECK(girth(named_graph("heawood")) == 6);
    CHECK(girth(named_graph("mcgee")) == 7);
    CHECK(girth(complete_bipartite(3, 3)) == 4);
}

TEST_CASE("named fixtures") {
    struct Fixture {
        const char *name;
        int n;
        int edges;
        int degree;
        int girth;
    };
    for (const Fixture f : {Fixture{"petersen", 10, 15, 3, 5}, Fixture{"heawood", 14, 21, 3, 6},
                            Fixture{"pappus", 18, 27, 3, 6}, Fixture{"moebius_kantor", 16, 24, 3, 6},
                            Fixture{"mcgee", 24, 36, 3, 7}, Fixture{"tutte_coxeter", 30, 45, 3, 8},
                            Fixture{"complete_bipartite", 6, 9, 3, 4}}) {
        CAPTURE(f.name);
        const Graph g = named_graph(f.name);
        CHECK(g.vertex_count() == f.n);
        CHECK(static_cast<int>(g.edge_count()) == f.edges);
        CHECK(g.regular_degree() == f.degree);
        CHECK(girth(g) == f.girth);
    }
    const Graph c8 = named_graph("cycle", 8);
    CHECK(c8.vertex_count() == 8);
    CHECK(c8.regular_degree() == 2);
    CHECK(girth(c8) == 8);
    CHECK_THROWS_AS(named_graph("dodecahedron"), InvalidParameter);
}

TEST_CASE("certified depth") {
    CHECK(max_certified_depth(named_graph("heawood")) == 2);
    CHECK(max_certified_depth(cycle_graph(36)) == 17);
    CHECK(max_certified_depth(named_graph("petersen")) == 1);
    CHECK(!max_certified_depth(Graph(2, {{0, 1}})));
    CHECK_THROWS_AS(max_certified_depth(path_graph(5)), InvalidParameter);
}

TEST_CASE("edge colouring") {
    CHECK(color_count(edge_coloring(cycle_graph(6))) == 2);
    const auto c5 = edge_coloring(cycle_graph(5));
    CHECK(is_proper_edge_coloring(cycle_graph(5), c5));
    CHECK(color_count(c5) == 3);
    const Graph pet = named_graph("petersen");
    const auto cp = edge_coloring(pet);
    CHECK(is_proper_edge_coloring(pet, cp));
    CHECK(color_count(cp) <= 4);

    std::mt19937_64 rng(31);
    for (int i = 0; i < 200; ++i) {
        const int n = 5 + static_cast<int>(rng() % 30);
        const int cap = 1 + static_cast<int>(rng() % 6);
        const Graph g = testing::random_graph(rng, n, 0.4, cap);
        const auto colors = edge_coloring(g);
        CHECK(is_proper_edge_coloring(g, colors));
        CHECK(color_count(colors) <= g.max_degree() + 1);
    }
    CHECK_FALSE(is_proper_edge_coloring(pet, std::vector<int>(15, 0)));
}

TEST_CASE("cut values") {
    const Graph c6 = cycle_graph(6);
    CHECK(cut_value(c6, Bits(6, 0)) == 0);
    CHECK(cut_value(c6, Bits{0, 1, 0, 1, 0, 1}) == 6);
    CHECK(cut_value(complete_bipartite(3, 3), Bits{0, 0, 0, 1, 1, 1}) == 9);
    CHECK_THROWS_AS(cut_value(c6, Bits(5, 0)), InvalidParameter);
    std::mt19937_64 rng(8);
    for (int i = 0; i < 100; ++i) {
        const Graph g = testing::random_cubic(rng, 12);
        const Bits b = testing::random_bits(rng, 12);
        CHECK(cut_value(g, b) == cut_value(g, complement(b)));
    }
}

TEST_CASE("brute-force max cut") {
    CHECK(brute_force_maxcut(cycle_graph(5)).value == 4);
    CHECK(brute_force_maxcut(complete_bipartite(3, 3)).value == 9);
    const Graph pet = named_graph("petersen");
    const auto best = brute_force_maxcut(pet);
    CHECK(best.value == 12);
    CHECK(cut_value(pet, best.assignment) == best.value);
    // Girth 5 >= 4 certifies the depth-1 bound.
    CHECK(static_cast<double>(best.value) / 15.0 >= 0.6924);
    CHECK_THROWS_AS(brute_force_maxcut(cycle_graph(29)), ResourceError);
    CHECK_NOTHROW(brute_force_maxcut(cycle_graph(29), 29));
}

#include <doctest.h>

#include <sstream>

#include "vulnet/generators.hpp"
#include "vulnet/graph.hpp"

using namespace vulnet;

TEST_CASE("graph constructor validates input") {
    CHECK_THROWS_AS(Graph(-1, {}), contract_error);
    CHECK_THROWS_AS(Graph(2, {{0, 2}}), contract_error);
    CHECK_THROWS_AS(Graph(2, {{-1, 0}}), contract_error);
    CHECK_THROWS_AS(Graph(2, {{1, 1}}), contract_error);
    CHECK_THROWS_AS(Graph(2, {{0, 1}}, {"only_one_label"}), contract_error);
}

TEST_CASE("duplicate edges collapse and neighbors are sorted") {
    Graph g(4, {{2, 1}, {0, 1}, {1, 0}, {0, 1}, {3, 0}});
    CHECK(g.m() == 3);
    CHECK(g.degree(0) == 2);
    CHECK(g.degree(1) == 2);
    auto nb = g.neighbors(0);
    CHECK(std::vector<int>(nb.begin(), nb.end()) == std::vector<int>{1, 3});
    CHECK(g.has_edge(1, 2));
    CHECK(g.has_edge(2, 1));
    CHECK_FALSE(g.has_edge(2, 3));
    CHECK(g.edges() == std::vector<std::pair<int, int>>{{0, 1}, {0, 3}, {1, 2}});
}

TEST_CASE("default labels are the indices") {
    Graph g(3, {{0, 1}});
    CHECK(g.label(0) == "0");
    CHECK(g.label(2) == "2");
    CHECK_THROWS_AS((void)g.label(3), contract_error);
}

TEST_CASE("edge list loading interns labels in reading order") {
    std::istringstream in("a b   # trailing comment\n\n# whole-line comment\nb c\nc a\n");
    Graph g = load_edge_list(in);
    CHECK(g.n() == 3);
    CHECK(g.m() == 3);
    CHECK(g.label(0) == "a");
    CHECK(g.label(1) == "b");
    CHECK(g.label(2) == "c");
    CHECK(g.has_edge(0, 1));
    CHECK(g.has_edge(1, 2));
    CHECK(g.has_edge(2, 0));
}

TEST_CASE("edge list parse errors carry line numbers") {
    std::istringstream one_token("a b\nc\n");
    CHECK_THROWS_WITH_AS(load_edge_list(one_token),
                         doctest::Contains("line 2"), parse_error);
    std::istringstream three_tokens("a b c\n");
    CHECK_THROWS_WITH_AS(load_edge_list(three_tokens),
                         doctest::Contains("exactly two"), parse_error);
    std::istringstream loop("x y\n\nz z\n");
    CHECK_THROWS_WITH_AS(load_edge_list(loop), doctest::Contains("line 3"), parse_error);
}

TEST_CASE("missing file raises io_error") {
    CHECK_THROWS_AS(load_edge_list_file("/nonexistent/not_a_file.txt"), io_error);
}

TEST_CASE("set helpers agree with hand values on the star") {
    Graph g = star6();
    auto leaves = NodeSet::of(7, {1, 2, 3, 4, 5, 6});
    CHECK(neighbors_of_set(g, leaves) == NodeSet::of(7, {0}));
    CHECK(vulnerability_of_set(g, leaves) == 5);
    CHECK(controlled_set(g, leaves) == NodeSet::of(7, {0})); // only the hub is surrounded
    CHECK(power_p(g, leaves) == -5);
    CHECK(power_q(g, leaves) == -5);
    CHECK(is_independent(g, leaves));
    CHECK_FALSE(is_independent(g, NodeSet::of(7, {0, 1})));
    CHECK(boundary_size(g, leaves) == 6);
    auto hub = NodeSet::of(7, {0});
    CHECK(vulnerability_of_set(g, hub) == -5);
    CHECK(power_p(g, hub) == 5); // the hub controls all six leaves
}

TEST_CASE("degree extremes") {
    Graph g = fig1_bottomleft();
    CHECK(max_degree(g) == 6);
    CHECK(min_degree(g) == 1);
    CHECK(min_degree(cycle_graph(5)) == 2);
    CHECK(max_degree(cycle_graph(5)) == 2);
}

TEST_CASE("connected components preserve order and labels") {
    std::istringstream in("a b\nc d\nd e\n");
    Graph g = load_edge_list(in);
    CHECK_FALSE(is_connected(g));
    auto comps = connected_components(g);
    REQUIRE(comps.size() == 2);
    CHECK(comps[0].graph.n() == 2);
    CHECK(comps[0].graph.label(0) == "a");
    CHECK(comps[0].original == std::vector<int>{0, 1});
    CHECK(comps[1].graph.n() == 3);
    CHECK(comps[1].graph.label(0) == "c");
    CHECK(comps[1].original == std::vector<int>{2, 3, 4});
    CHECK(comps[1].graph.has_edge(0, 1));
    CHECK(comps[1].graph.has_edge(1, 2));
    CHECK_FALSE(comps[1].graph.has_edge(0, 2));

    CHECK(is_connected(star6()));
    CHECK(is_connected(Graph(1, {})));
    CHECK(is_connected(Graph(0, {})));
    CHECK_FALSE(is_connected(Graph(2, {})));
}

TEST_CASE("node deletion remaps indices and keeps labels") {
    Graph c4 = cycle_graph(4);
    auto [h, orig] = delete_node(c4, 0);
    CHECK(h.n() == 3);
    CHECK(h.m() == 2);
    CHECK(orig == std::vector<int>{1, 2, 3});
    CHECK(h.label(0) == "1");
    CHECK(h.has_edge(0, 1));
    CHECK(h.has_edge(1, 2));
    CHECK_FALSE(h.has_edge(0, 2));

    auto [h2, orig2] = delete_nodes(star6(), NodeSet::of(7, {0, 3}));
    CHECK(h2.n() == 5);
    CHECK(h2.m() == 0);
    CHECK(orig2 == std::vector<int>{1, 2, 4, 5, 6});
    CHECK(h2.label(2) == "l4");
}

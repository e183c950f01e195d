#include <doctest.h>

#include "oracles.hpp"
#include "vulnet/generators.hpp"
#include "vulnet/matching.hpp"

using namespace vulnet;
using namespace vulnet::testing;

namespace {

BipartiteGraph random_bipartite(int l, int r, double p, Pcg32& rng) {
    BipartiteGraph b{l, r, std::vector<std::vector<int>>(static_cast<std::size_t>(l))};
    for (int i = 0; i < l; ++i)
        for (int j = 0; j < r; ++j)
            if (rng.uniform() < p) b.adj[static_cast<std::size_t>(i)].push_back(j);
    return b;
}

void check_matching_consistent(const BipartiteGraph& b, const Matching& m) {
    int count = 0;
    for (int l = 0; l < b.left; ++l) {
        int r = m.left_to_right[static_cast<std::size_t>(l)];
        if (r < 0) continue;
        ++count;
        CHECK(m.right_to_left[static_cast<std::size_t>(r)] == l);
        const auto& adj = b.adj[static_cast<std::size_t>(l)];
        CHECK(std::find(adj.begin(), adj.end(), r) != adj.end());
    }
    CHECK(count == m.size);
}

} // namespace

TEST_CASE("hopcroft-karp agrees with an augmenting-path reference") {
    Pcg32 rng(123, 1);
    for (int trial = 0; trial < 300; ++trial) {
        int l = 1 + static_cast<int>(rng.bounded(7));
        int r = 1 + static_cast<int>(rng.bounded(7));
        BipartiteGraph b = random_bipartite(l, r, 0.35, rng);
        Matching m = hopcroft_karp(b);
        CHECK(m.size == brute_matching(b));
        check_matching_consistent(b, m);
    }
}

TEST_CASE("konig cover has matching size and covers every edge") {
    Pcg32 rng(321, 2);
    for (int trial = 0; trial < 200; ++trial) {
        int l = 1 + static_cast<int>(rng.bounded(8));
        int r = 1 + static_cast<int>(rng.bounded(8));
        BipartiteGraph b = random_bipartite(l, r, 0.3, rng);
        Matching m = hopcroft_karp(b);
        BipartiteCover c = konig_cover(b, m);
        CHECK(c.size == m.size);
        for (int i = 0; i < l; ++i)
            for (int j : b.adj[static_cast<std::size_t>(i)]) {
                bool covered = c.left_in[static_cast<std::size_t>(i)] ||
                               c.right_in[static_cast<std::size_t>(j)];
                CHECK(covered);
            }
    }
}

TEST_CASE("doubled graph of the star and the 4-cycle") {
    auto ds = double_graph(star6());
    CHECK(ds.left == 7);
    CHECK(ds.right == 7);
    CHECK(ds.adj[0].size() == 6);
    CHECK(hopcroft_karp(ds).size == 2);

    auto dc = double_graph(cycle_graph(4));
    CHECK(dc.left == 4);
    for (const auto& row : dc.adj) CHECK(row.size() == 2);
    CHECK(hopcroft_karp(dc).size == 4);
}

TEST_CASE("two-matching and two-cover hand values") {
    CHECK(two_matching_number(star6()) == 2);
    auto cover = min_two_vertex_cover(star6());
    CHECK(cover.total == 2);
    CHECK(cover.u[0] == 2); // weight sits on the hub

    CHECK(two_matching_number(cycle_graph(4)) == 4);
    CHECK(two_matching_number(cycle_graph(5)) == 5);
    CHECK(two_matching_number(path_graph(3)) == 2);
    CHECK(has_perfect_two_matching(cycle_graph(5)));
    CHECK(has_perfect_two_matching(cycle_graph(4)));
    CHECK_FALSE(has_perfect_two_matching(star6()));
    CHECK_FALSE(has_perfect_two_matching(path_graph(3)));
}

TEST_CASE("two-matching equals two-cover on exhaustive and random graphs") {
    for (const Graph& g : all_connected_graphs(4)) {
        long long nu2 = two_matching_number(g);
        CHECK(nu2 == brute_two_matching_total(g));
        auto cover = min_two_vertex_cover(g);
        CHECK(cover.total == brute_min_two_cover_total(g));
        CHECK(nu2 == cover.total); // strong duality
    }
    Pcg32 rng(77, 7);
    for (int trial = 0; trial < 120; ++trial) {
        int n = 2 + static_cast<int>(rng.bounded(5));
        Graph g = random_graph(n, 0.45, rng);
        if (g.m() > 14) continue;
        long long nu2 = two_matching_number(g);
        CHECK(nu2 == brute_two_matching_total(g));
        CHECK(min_two_vertex_cover(g).total == nu2);
    }
}

TEST_CASE("max two-matching is a valid certificate") {
    Pcg32 rng(99, 3);
    for (int trial = 0; trial < 150; ++trial) {
        int n = 2 + static_cast<int>(rng.bounded(7));
        Graph g = random_graph(n, 0.4, rng);
        TwoMatching tm = max_two_matching(g);
        auto edges = g.edges();
        REQUIRE(tm.weight.size() == edges.size());
        std::vector<int> sum(static_cast<std::size_t>(n), 0);
        long long total = 0;
        for (std::size_t e = 0; e < edges.size(); ++e) {
            int w = tm.weight[e];
            CHECK(w >= 0);
            CHECK(w <= 2);
            sum[static_cast<std::size_t>(edges[e].first)] += w;
            sum[static_cast<std::size_t>(edges[e].second)] += w;
            total += w;
        }
        for (int v : sum) CHECK(v <= 2);
        CHECK(total == tm.total);
        CHECK(tm.total == two_matching_number(g));
        bool all_two = true;
        for (int v : sum)
            if (v != 2) all_two = false;
        CHECK(tm.perfect == all_two);
        CHECK(tm.perfect == (tm.total == n));
    }
}

TEST_CASE("bipartite fast path matches the doubled-graph route") {
    Pcg32 rng(55, 9);
    for (int trial = 0; trial < 100; ++trial) {
        int l = 1 + static_cast<int>(rng.bounded(5));
        int r = 1 + static_cast<int>(rng.bounded(5));
        // random bipartite as a plain Graph
        std::vector<std::pair<int, int>> edges;
        for (int i = 0; i < l; ++i)
            for (int j = 0; j < r; ++j)
                if (rng.uniform() < 0.4) edges.emplace_back(i, l + j);
        Graph g(l + r, edges);
        CHECK(two_matching_bipartite(g).total == two_matching_number(g));
    }
    CHECK(two_matching_bipartite(cycle_graph(6)).total == 6);
    CHECK_THROWS_WITH_AS(two_matching_bipartite(cycle_graph(5)),
                         doctest::Contains("bipartite"), contract_error);
}

TEST_CASE("hall witness pairs or violator") {
    Graph c4 = cycle_graph(4);
    auto pairs = hall_witness(c4, NodeSet::of(4, {0, 2}));
    CHECK(pairs.size() == 2);
    CHECK(pairs[0].first == 0);
    CHECK(pairs[1].first == 2);
    CHECK(pairs[0].second != pairs[1].second);

    Graph g = star6();
    auto leaves = NodeSet::of(7, {1, 2, 3, 4, 5, 6});
    try {
        hall_witness(g, leaves);
        CHECK(false);
    } catch (const hall_error& e) {
        CHECK(e.violator.count() > neighbors_of_set(g, e.violator).count());
    }
}

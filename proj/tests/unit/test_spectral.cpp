#include <doctest.h>

#include <cmath>

#include "oracles.hpp"
#include "vulnet/generators.hpp"
#include "vulnet/spectral.hpp"
#include "vulnet/vulnerability.hpp"

using namespace vulnet;
using namespace vulnet::testing;

TEST_CASE("closed-form eigenvalues") {
    CHECK(algebraic_connectivity(complete_graph(5)).lambda2 == doctest::Approx(5.0).epsilon(1e-8));
    CHECK(algebraic_connectivity(complete_graph(9)).lambda2 == doctest::Approx(9.0).epsilon(1e-8));
    CHECK(algebraic_connectivity(cycle_graph(4)).lambda2 == doctest::Approx(2.0).epsilon(1e-8));
    CHECK(algebraic_connectivity(path_graph(3)).lambda2 == doctest::Approx(1.0).epsilon(1e-8));
    CHECK(algebraic_connectivity(path_graph(2)).lambda2 == doctest::Approx(2.0).epsilon(1e-8));
    // star on n nodes: lambda2 = 1
    CHECK(algebraic_connectivity(star6()).lambda2 == doctest::Approx(1.0).epsilon(1e-8));
}

TEST_CASE("connectivity flag") {
    auto c4 = algebraic_connectivity(cycle_graph(4));
    CHECK(c4.connected);
    CHECK(c4.tolerance > 0);

    Graph two_triangles(6, {{0, 1}, {1, 2}, {2, 0}, {3, 4}, {4, 5}, {5, 3}});
    auto r = algebraic_connectivity(two_triangles);
    CHECK_FALSE(r.connected);
    CHECK(std::abs(r.lambda2) <= r.tolerance);
}

TEST_CASE("contracts and the dense cap") {
    CHECK_THROWS_AS(algebraic_connectivity(Graph(1, {})), contract_error);
    CHECK_THROWS_AS(algebraic_connectivity(Graph(0, {})), contract_error);
    CHECK_THROWS_AS(algebraic_connectivity(cycle_graph(12), 10), budget_error);
    CHECK_NOTHROW(algebraic_connectivity(cycle_graph(10), 10));
}

TEST_CASE("expansion chain on hand-picked sets") {
    Graph g = star6();
    auto leaves = NodeSet::of(7, {1, 2, 3, 4, 5, 6});
    auto rep = expansion_inequality_check(g, leaves);
    CHECK(rep.independent);
    CHECK(rep.neighbor_count == 1);
    CHECK(rep.ratio == doctest::Approx(1.0)); // 6 boundary edges over 6 nodes
    CHECK(rep.lower_ok);
    CHECK(rep.upper_ok);
    CHECK(rep.mean_degree_identity);

    // dependent set: upper bound not claimed
    auto pair = NodeSet::of(7, {0, 1});
    auto rep2 = expansion_inequality_check(g, pair);
    CHECK_FALSE(rep2.independent);
    CHECK(rep2.lower_ok);

    CHECK_THROWS_AS(expansion_inequality_check(g, NodeSet(7)), contract_error);
}

TEST_CASE("expansion invariants hold on random graphs") {
    Pcg32 rng(333, 7);
    for (int trial = 0; trial < 80; ++trial) {
        int n = 3 + static_cast<int>(rng.bounded(20));
        Graph g = random_connected_graph(n, static_cast<int>(rng.bounded(n)), rng);
        double l2 = algebraic_connectivity(g).lambda2;

        // arbitrary nonempty set
        NodeSet s(n);
        for (int i = 0; i < n; ++i)
            if (rng.bounded(3) == 0) s.set(i);
        if (s.count() == 0 || s.count() == n) s = NodeSet::of(n, {0});
        auto rep = expansion_inequality_check(g, s, l2);
        CHECK(rep.lower_ok);
        if (rep.independent) {
            CHECK(rep.upper_ok);
            CHECK(rep.mean_degree_identity);
        }

        // independent set grown greedily
        NodeSet ind(n);
        NodeSet blocked(n);
        for (int i = 0; i < n; ++i) {
            if (blocked.test(i)) continue;
            ind.set(i);
            blocked.set(i);
            for (int u : g.neighbors(i)) blocked.set(u);
        }
        auto rep2 = expansion_inequality_check(g, ind, l2);
        CHECK(rep2.independent);
        CHECK(rep2.lower_ok);
        CHECK(rep2.upper_ok);
        CHECK(rep2.mean_degree_identity);
    }
}

TEST_CASE("leaf siblings certificate") {
    auto s = leaf_siblings_bound(star6());
    REQUIRE(s.has_value());
    CHECK(s->center == 0);
    CHECK(s->count == 6);
    CHECK(s->nu_lower == 5);
    CHECK(s->lambda2_upper == 1.0);
    // the certificate is sound: nu_bar really is >= 5 and lambda2 really is <= 1
    CHECK(network_vulnerability(star6()).nu_bar >= s->nu_lower);
    CHECK(algebraic_connectivity(star6()).lambda2 <= s->lambda2_upper + 1e-8);

    auto p = leaf_siblings_bound(path_graph(3));
    REQUIRE(p.has_value());
    CHECK(p->count == 2);
    CHECK(p->nu_lower == 1);

    CHECK_FALSE(leaf_siblings_bound(cycle_graph(4)).has_value());
    CHECK_FALSE(leaf_siblings_bound(path_graph(4)).has_value()); // no shared center
}

TEST_CASE("leaf siblings never contradicts exact answers") {
    Pcg32 rng(444, 8);
    for (int trial = 0; trial < 60; ++trial) {
        int n = 3 + static_cast<int>(rng.bounded(8));
        Graph g = random_connected_graph(n, static_cast<int>(rng.bounded(4)), rng);
        auto cert = leaf_siblings_bound(g);
        if (!cert) continue;
        CHECK(cert->count >= 2);
        CHECK(brute_nu_bar(g) >= cert->nu_lower);
        CHECK(algebraic_connectivity(g).lambda2 <= cert->lambda2_upper + 1e-8);
    }
}

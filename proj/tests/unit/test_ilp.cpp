#include <doctest.h>

#include <set>
#include <sstream>

#include "oracles.hpp"
#include "vulnet/generators.hpp"
#include "vulnet/ilp.hpp"

using namespace vulnet;
using namespace vulnet::testing;

TEST_CASE("model shape") {
    auto k2 = build_model(path_graph(2));
    CHECK(k2.nodes == 2);
    CHECK(k2.var_name.size() == 4);
    CHECK(k2.rows.size() == 4); // one edge row, two support rows, nonempty

    auto star = build_model(star6());
    CHECK(star.var_name.size() == 14);
    CHECK(star.rows.size() == 19); // 3 * 6 + 1

    auto c4 = build_model(cycle_graph(4));
    CHECK(c4.var_name.size() == 8);
    CHECK(c4.rows.size() == 13);

    // objective is +1 on the x block, -1 on the y block; only x is integral
    for (int i = 0; i < 4; ++i) {
        CHECK(c4.objective[i] == 1);
        CHECK(c4.objective[4 + i] == -1);
        CHECK(c4.integer_var[i] == 1);
        CHECK(c4.integer_var[4 + i] == 0);
    }
    CHECK(c4.rows.back().name == "nonempty");
    CHECK(c4.rows.back().sense == RowSense::ge);
    CHECK(c4.rows.back().rhs == 1);
}

TEST_CASE("lp export dialect") {
    std::istringstream src("a b\n");
    Graph g = load_edge_list(src);
    auto m = build_model(g);
    std::ostringstream out;
    export_lp(m, out);
    std::string text = out.str();

    CHECK(text.find("\\ group vulnerability integer program") == 0);
    CHECK(text.find("Maximize") != std::string::npos);
    CHECK(text.find("Subject To") != std::string::npos);
    CHECK(text.find("Bounds") != std::string::npos);
    CHECK(text.find("Generals") != std::string::npos);
    CHECK(text.rfind("End") != std::string::npos);
    CHECK(text.find("Maximize") < text.find("Subject To"));
    CHECK(text.find("Subject To") < text.find("Bounds"));
    CHECK(text.find("Bounds") < text.find("Generals"));
    CHECK(text.find("Generals") < text.rfind("End"));

    CHECK(text.find(" obj: x_a + x_b - y_a - y_b") != std::string::npos);
    CHECK(text.find(" e1: x_a + x_b <= 1") != std::string::npos);
    CHECK(text.find(" s1: y_b - x_a >= 0") != std::string::npos);
    CHECK(text.find(" s2: y_a - x_b >= 0") != std::string::npos);
    CHECK(text.find(" nonempty: x_a + x_b >= 1") != std::string::npos);
    CHECK(text.find(" 0 <= x_a <= 1") != std::string::npos);
    CHECK(text.find(" 0 <= y_b <= 1") != std::string::npos);

    // Generals lists exactly the x block
    auto gen_at = text.find("Generals");
    auto end_at = text.rfind("End");
    std::string generals = text.substr(gen_at, end_at - gen_at);
    CHECK(generals.find("x_a") != std::string::npos);
    CHECK(generals.find("x_b") != std::string::npos);
    CHECK(generals.find("y_a") == std::string::npos);
}

TEST_CASE("name sanitization and collisions") {
    std::istringstream src("n-1 n.1\nn.1 n_1\n");
    Graph g = load_edge_list(src);
    auto m = build_model(g);
    // all three labels sanitize to n_1; dedup keeps them distinct
    std::set<std::string> names(m.var_name.begin(), m.var_name.end());
    CHECK(names.size() == m.var_name.size());
    CHECK(names.count("x_n_1") == 1);
    CHECK(names.count("x_n_1_2") == 1);
    CHECK(names.count("x_n_1_3") == 1);

    std::ostringstream out;
    export_lp(m, out);
    CHECK(out.str().find("x_n_1_3") != std::string::npos);
}

TEST_CASE("exported rows reparse to the model") {
    auto m = build_model(cycle_graph(4));
    std::ostringstream out;
    export_lp(m, out);
    std::istringstream in(out.str());

    // count constraint lines between Subject To and Bounds; each model row
    // must appear by name with its sense
    std::string line;
    bool in_rows = false;
    std::set<std::string> seen;
    while (std::getline(in, line)) {
        if (line == "Subject To") { in_rows = true; continue; }
        if (line == "Bounds") break;
        if (!in_rows || line.empty()) continue;
        auto colon = line.find(':');
        REQUIRE(colon != std::string::npos);
        std::string name = line.substr(1, colon - 1);
        seen.insert(name);
        bool ge = line.find(">=") != std::string::npos;
        bool le = line.find("<=") != std::string::npos;
        CHECK(ge != le);
    }
    CHECK(seen.size() == m.rows.size());
    for (const auto& row : m.rows) CHECK(seen.count(row.name) == 1);
}

TEST_CASE("relaxation on the star is integral at the top") {
    auto m = build_model(star6());
    auto sol = solve_relaxation(m);
    CHECK(sol.objective == Rational(5));
    CHECK(sol.x1.count() == 6);
    for (int i = 1; i < 7; ++i) CHECK(sol.x1.test(i));
    CHECK_FALSE(sol.x1.test(0));

    auto res = extract_integral(star6(), sol);
    REQUIRE(res.has_value());
    CHECK(res->nu_bar == 5);
    CHECK(res->method == Method::relaxation);
}

TEST_CASE("zero objective with a realizing set") {
    Graph g = cycle_graph(4);
    auto sol = solve_relaxation(build_model(g));
    CHECK(sol.objective == Rational(0));
    auto res = extract_integral(g, sol);
    REQUIRE(res.has_value());
    CHECK(res->nu_bar == 0);
    CHECK(res->optimal_set == NodeSet::of(4, {0, 2})); // first pin that lands
}

TEST_CASE("zero objective that certifies strictly negative") {
    // K3: the relaxation sits at 0 (x = 1/2 everywhere, y = 1/2) but no
    // integral set realizes it, so every pinned solve comes back negative
    Graph k3 = complete_graph(3);
    auto sol = solve_relaxation(build_model(k3));
    CHECK(sol.objective == Rational(0));
    CHECK_FALSE(extract_integral(k3, sol).has_value());

    Graph pet = petersen_graph();
    auto psol = solve_relaxation(build_model(pet));
    CHECK(psol.objective == Rational(0));
    CHECK_FALSE(extract_integral(pet, psol).has_value());
}

TEST_CASE("relaxation bounds and extraction agree with the oracle") {
    Pcg32 rng(555, 9);
    for (int trial = 0; trial < 100; ++trial) {
        int n = 2 + static_cast<int>(rng.bounded(6));
        Graph g = random_connected_graph(n, static_cast<int>(rng.bounded(2 * n)), rng);
        int exact = brute_nu_bar(g);
        auto sol = solve_relaxation(build_model(g));

        CHECK(sol.objective >= Rational(std::max(exact, 0)));
        if (sol.objective > 0) {
            // a positive LP optimum is attained by an independent set
            CHECK(sol.objective == Rational(exact));
        }

        auto res = extract_integral(g, sol);
        if (exact >= 0) {
            REQUIRE(res.has_value());
            CHECK(res->nu_bar == exact);
            CHECK(vulnerability_of_set(g, res->optimal_set) == exact);
            // independence of the reported set
            bool indep = true;
            res->optimal_set.for_each([&](int u) {
                for (int v : g.neighbors(u))
                    if (res->optimal_set.test(v)) indep = false;
            });
            CHECK(indep);
        } else {
            CHECK_FALSE(res.has_value());
        }
    }
}

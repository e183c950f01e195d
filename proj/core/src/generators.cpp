#include "vulnet/generators.hpp"

#include <algorithm>
#include <cassert>

namespace vulnet {

Graph erdos_renyi(int n, double p, std::uint64_t seed, std::uint64_t stream) {
    if (n < 0) throw contract_error("erdos_renyi needs n >= 0");
    if (!(p >= 0.0 && p <= 1.0)) throw contract_error("erdos_renyi needs p in [0, 1]");
    Pcg32 rng(seed, stream);
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (rng.uniform() < p) edges.emplace_back(i, j);
    return Graph(n, edges);
}

Graph erdos_renyi_mean_degree(int n, double mean_degree, std::uint64_t seed,
                              std::uint64_t stream) {
    if (n < 2) throw contract_error("erdos_renyi_mean_degree needs n >= 2");
    if (!(mean_degree >= 0.0 && mean_degree <= n - 1))
        throw contract_error("mean degree must lie in [0, n-1]");
    return erdos_renyi(n, mean_degree / (n - 1), seed, stream);
}

Graph barabasi_albert(int n, int m_per_step, std::uint64_t seed, std::uint64_t stream) {
    if (n < 1) throw contract_error("barabasi_albert needs n >= 1");
    if (m_per_step < 1 || m_per_step > n / 2)
        throw contract_error("barabasi_albert needs 1 <= m_per_step <= n/2");

    Pcg32 rng(seed, stream);
    std::vector<std::uint64_t> weight(static_cast<std::size_t>(n), 1); // degree + 1
    std::uint64_t total = 1; // node 0 is present from the start
    std::vector<std::pair<int, int>> edges;
    std::vector<std::uint64_t> scratch;
    for (int t = 1; t < n; ++t) {
        int k = std::min(m_per_step, t);
        scratch.assign(weight.begin(), weight.begin() + t);
        std::uint64_t remaining = total;
        for (int c = 0; c < k; ++c) {
            std::uint64_t draw = rng.bounded64(remaining);
            int target = 0;
            for (;; ++target) {
                if (draw < scratch[static_cast<std::size_t>(target)]) break;
                draw -= scratch[static_cast<std::size_t>(target)];
            }
            edges.emplace_back(target, t);
            remaining -= scratch[static_cast<std::size_t>(target)];
            scratch[static_cast<std::size_t>(target)] = 0; // without replacement
            weight[static_cast<std::size_t>(target)] += 1;
        }
        weight[static_cast<std::size_t>(t)] += static_cast<std::uint64_t>(k);
        total += 1 + 2ULL * static_cast<std::uint64_t>(k);
    }
    return Graph(n, edges);
}

namespace {

std::vector<std::string> hub_labels(int whites, int greys) {
    std::vector<std::string> labels{"c"};
    for (int i = 1; i <= whites; ++i) labels.push_back("w" + std::to_string(i));
    for (int i = 1; i <= greys; ++i) labels.push_back("g" + std::to_string(i));
    return labels;
}

} // namespace

Graph star6() {
    std::vector<std::string> labels{"c"};
    for (int i = 1; i <= 6; ++i) labels.push_back("l" + std::to_string(i));
    std::vector<std::pair<int, int>> edges;
    for (int i = 1; i <= 6; ++i) edges.emplace_back(0, i);
    return Graph(7, edges, labels);
}

Graph fig1_topright() {
    std::vector<std::pair<int, int>> edges;
    for (int i = 1; i <= 6; ++i) edges.emplace_back(0, i);
    edges.emplace_back(1, 2);
    edges.emplace_back(3, 4);
    edges.emplace_back(5, 6);
    return Graph(7, edges, hub_labels(6, 0));
}

Graph fig1_bottomleft() {
    std::vector<std::pair<int, int>> edges;
    for (int i = 1; i <= 6; ++i) edges.emplace_back(0, i);
    edges.emplace_back(3, 4);
    edges.emplace_back(4, 5);
    edges.emplace_back(5, 6);
    return Graph(7, edges, hub_labels(6, 0));
}

Graph fig1_bottomright() {
    // lexicographically smallest wiring with the whites independent, white
    // degree multiset (3,2,2,2,2,2) and all five greys supporting some white
    std::vector<std::pair<int, int>> edges;
    for (int i = 1; i <= 6; ++i) edges.emplace_back(0, i);
    edges.emplace_back(1, 7);
    edges.emplace_back(1, 8);
    edges.emplace_back(2, 7);
    edges.emplace_back(3, 7);
    edges.emplace_back(4, 9);
    edges.emplace_back(5, 10);
    edges.emplace_back(6, 11);
    return Graph(12, edges, hub_labels(6, 5));
}

Graph cycle_graph(int k) {
    if (k < 3) throw contract_error("cycle_graph needs k >= 3");
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i < k; ++i) edges.emplace_back(i, (i + 1) % k);
    return Graph(k, edges);
}

Graph complete_graph(int k) {
    if (k < 1) throw contract_error("complete_graph needs k >= 1");
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i < k; ++i)
        for (int j = i + 1; j < k; ++j) edges.emplace_back(i, j);
    return Graph(k, edges);
}

Graph path_graph(int k) {
    if (k < 1) throw contract_error("path_graph needs k >= 1");
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i + 1 < k; ++i) edges.emplace_back(i, i + 1);
    return Graph(k, edges);
}

Graph petersen_graph() {
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i < 5; ++i) {
        edges.emplace_back(i, (i + 1) % 5); // outer cycle
        edges.emplace_back(i, i + 5);       // spoke
        edges.emplace_back(5 + i, 5 + (i + 2) % 5); // inner pentagram
    }
    return Graph(10, edges);
}

Graph fixture(const std::string& name) {
    if (name == "star6") return star6();
    if (name == "fig1_topright") return fig1_topright();
    if (name == "fig1_bottomleft") return fig1_bottomleft();
    if (name == "fig1_bottomright") return fig1_bottomright();
    if (name == "petersen") return petersen_graph();
    auto paren = name.find('(');
    if (paren != std::string::npos && name.back() == ')') {
        std::string base = name.substr(0, paren);
        int k = 0;
        try {
            k = std::stoi(name.substr(paren + 1, name.size() - paren - 2));
        } catch (const std::exception&) {
            throw contract_error("bad fixture parameter in '" + name + "'");
        }
        if (base == "cycle") return cycle_graph(k);
        if (base == "complete") return complete_graph(k);
        if (base == "path") return path_graph(k);
    }
    throw contract_error("unknown fixture '" + name + "'");
}

} // namespace vulnet

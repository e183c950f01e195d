#include "vulnet/graph.hpp"

#include <algorithm>
#include <cassert>
#include <fstream>
#include <sstream>
#include <unordered_map>

namespace vulnet {

Graph::Graph(int n, const std::vector<std::pair<int, int>>& edges,
             std::vector<std::string> labels) {
    if (n < 0) throw contract_error("graph size must be non-negative");
    adj_.assign(static_cast<std::size_t>(n), {});
    for (auto [a, b] : edges) {
        if (a < 0 || a >= n || b < 0 || b >= n)
            throw contract_error("edge endpoint out of range");
        if (a == b) throw contract_error("self-loops are not allowed");
        adj_[static_cast<std::size_t>(a)].push_back(b);
        adj_[static_cast<std::size_t>(b)].push_back(a);
    }
    for (auto& nbrs : adj_) {
        std::sort(nbrs.begin(), nbrs.end());
        nbrs.erase(std::unique(nbrs.begin(), nbrs.end()), nbrs.end());
        m_ += static_cast<long long>(nbrs.size());
    }
    m_ /= 2;
    if (labels.empty()) {
        labels_.reserve(static_cast<std::size_t>(n));
        for (int i = 0; i < n; ++i) labels_.push_back(std::to_string(i));
    } else {
        if (static_cast<int>(labels.size()) != n)
            throw contract_error("label count does not match node count");
        labels_ = std::move(labels);
    }
}

bool Graph::has_edge(int i, int j) const {
    check(i);
    check(j);
    const auto& nbrs = adj_[static_cast<std::size_t>(i)];
    return std::binary_search(nbrs.begin(), nbrs.end(), j);
}

std::vector<std::pair<int, int>> Graph::edges() const {
    std::vector<std::pair<int, int>> out;
    out.reserve(static_cast<std::size_t>(m_));
    for (int i = 0; i < n(); ++i)
        for (int j : adj_[static_cast<std::size_t>(i)])
            if (i < j) out.emplace_back(i, j);
    return out;
}

Graph load_edge_list(std::istream& in) {
    std::unordered_map<std::string, int> index;
    std::vector<std::string> labels;
    std::vector<std::pair<int, int>> edges;

    auto intern = [&](const std::string& lbl) {
        auto [it, fresh] = index.emplace(lbl, static_cast<int>(labels.size()));
        if (fresh) labels.push_back(lbl);
        return it->second;
    };

    std::string line;
    int line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (auto hash = line.find('#'); hash != std::string::npos)
            line.erase(hash);
        std::istringstream tok(line);
        std::string a, b, extra;
        if (!(tok >> a)) continue; // blank or comment-only line
        if (!(tok >> b)) throw parse_error("expected two labels", line_no);
        if (tok >> extra) throw parse_error("expected exactly two labels", line_no);
        if (a == b) throw parse_error("self-loop '" + a + "'", line_no);
        int ia = intern(a); // sequenced: first appearance in reading order
        int ib = intern(b);
        edges.emplace_back(ia, ib);
    }
    int n = static_cast<int>(labels.size());
    return Graph(n, edges, std::move(labels));
}

Graph load_edge_list_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw io_error("cannot open '" + path + "'");
    return load_edge_list(in);
}

NodeSet neighbors_of_set(const Graph& g, const NodeSet& t) {
    if (t.universe() != g.n()) throw contract_error("NodeSet universe does not match graph");
    NodeSet nbrs(g.n());
    t.for_each([&](int i) {
        for (int j : g.neighbors(i)) nbrs.set(j);
    });
    return nbrs;
}

int vulnerability_of_set(const Graph& g, const NodeSet& t) {
    NodeSet nbrs = neighbors_of_set(g, t);
    int v = t.count() - nbrs.count();
    // the interior form |I(T)| - |N(T)\T| must agree
    assert(v == (t - nbrs).count() - (nbrs - t).count());
    return v;
}

NodeSet controlled_set(const Graph& g, const NodeSet& t) {
    if (t.universe() != g.n()) throw contract_error("NodeSet universe does not match graph");
    NodeSet b(g.n());
    for (int i = 0; i < g.n(); ++i) {
        bool inside = true;
        for (int j : g.neighbors(i)) {
            if (!t.test(j)) {
                inside = false;
                break;
            }
        }
        if (inside) b.set(i);
    }
    return b;
}

int power_p(const Graph& g, const NodeSet& t) {
    return controlled_set(g, t).count() - t.count();
}

int power_q(const Graph& g, const NodeSet& t) {
    NodeSet supported = controlled_set(g, t) - t;
#ifndef NDEBUG
    assert(is_independent(g, supported));
#endif
    return supported.count() - t.count();
}

bool is_independent(const Graph& g, const NodeSet& s) {
    if (s.universe() != g.n()) throw contract_error("NodeSet universe does not match graph");
    bool ok = true;
    s.for_each([&](int i) {
        if (!ok) return;
        for (int j : g.neighbors(i)) {
            if (s.test(j)) {
                ok = false;
                return;
            }
        }
    });
    return ok;
}

long long boundary_size(const Graph& g, const NodeSet& s) {
    if (s.universe() != g.n()) throw contract_error("NodeSet universe does not match graph");
    long long cut = 0;
    s.for_each([&](int i) {
        for (int j : g.neighbors(i))
            if (!s.test(j)) ++cut;
    });
    return cut;
}

int min_degree(const Graph& g) {
    if (g.n() == 0) throw contract_error("min_degree of an empty graph");
    int d = g.degree(0);
    for (int i = 1; i < g.n(); ++i) d = std::min(d, g.degree(i));
    return d;
}

int max_degree(const Graph& g) {
    if (g.n() == 0) throw contract_error("max_degree of an empty graph");
    int d = g.degree(0);
    for (int i = 1; i < g.n(); ++i) d = std::max(d, g.degree(i));
    return d;
}

std::vector<Component> connected_components(const Graph& g) {
    std::vector<int> comp(static_cast<std::size_t>(g.n()), -1);
    int count = 0;
    std::vector<int> stack;
    for (int start = 0; start < g.n(); ++start) {
        if (comp[static_cast<std::size_t>(start)] != -1) continue;
        comp[static_cast<std::size_t>(start)] = count;
        stack.push_back(start);
        while (!stack.empty()) {
            int i = stack.back();
            stack.pop_back();
            for (int j : g.neighbors(i)) {
                if (comp[static_cast<std::size_t>(j)] == -1) {
                    comp[static_cast<std::size_t>(j)] = count;
                    stack.push_back(j);
                }
            }
        }
        ++count;
    }

    std::vector<Component> out(static_cast<std::size_t>(count));
    std::vector<int> local(static_cast<std::size_t>(g.n()));
    for (int i = 0; i < g.n(); ++i) {
        auto& c = out[static_cast<std::size_t>(comp[static_cast<std::size_t>(i)])];
        local[static_cast<std::size_t>(i)] = static_cast<int>(c.original.size());
        c.original.push_back(i);
    }
    for (auto& c : out) {
        std::vector<std::pair<int, int>> edges;
        std::vector<std::string> labels;
        labels.reserve(c.original.size());
        for (int old : c.original) labels.push_back(g.label(old));
        for (std::size_t k = 0; k < c.original.size(); ++k) {
            int old = c.original[k];
            for (int j : g.neighbors(old))
                if (old < j) edges.emplace_back(static_cast<int>(k),
                                                local[static_cast<std::size_t>(j)]);
        }
        c.graph = Graph(static_cast<int>(c.original.size()), edges, std::move(labels));
    }
    return out;
}

bool is_connected(const Graph& g) {
    if (g.n() == 0) return true;
    NodeSet seen(g.n());
    std::vector<int> stack{0};
    seen.set(0);
    int visited = 1;
    while (!stack.empty()) {
        int i = stack.back();
        stack.pop_back();
        for (int j : g.neighbors(i)) {
            if (!seen.test(j)) {
                seen.set(j);
                ++visited;
                stack.push_back(j);
            }
        }
    }
    return visited == g.n();
}

std::pair<Graph, std::vector<int>> delete_node(const Graph& g, int i) {
    if (i < 0 || i >= g.n()) throw contract_error("node index out of range for delete_node");
    NodeSet t(g.n());
    t.set(i);
    return delete_nodes(g, t);
}

std::pair<Graph, std::vector<int>> delete_nodes(const Graph& g, const NodeSet& t) {
    if (t.universe() != g.n()) throw contract_error("NodeSet universe does not match graph");
    std::vector<int> original;
    original.reserve(static_cast<std::size_t>(g.n() - t.count()));
    std::vector<int> local(static_cast<std::size_t>(g.n()), -1);
    for (int v = 0; v < g.n(); ++v) {
        if (t.test(v)) continue;
        local[static_cast<std::size_t>(v)] = static_cast<int>(original.size());
        original.push_back(v);
    }
    std::vector<std::pair<int, int>> edges;
    std::vector<std::string> labels;
    labels.reserve(original.size());
    for (int old : original) labels.push_back(g.label(old));
    for (int old : original) {
        for (int b : g.neighbors(old))
            if (old < b && !t.test(b))
                edges.emplace_back(local[static_cast<std::size_t>(old)],
                                   local[static_cast<std::size_t>(b)]);
    }
    return {Graph(static_cast<int>(original.size()), edges, std::move(labels)), original};
}

} // namespace vulnet

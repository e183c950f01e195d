#pragma once

#include <istream>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "vulnet/errors.hpp"
#include "vulnet/nodeset.hpp"

namespace vulnet {

// simple undirected graph, immutable once built; neighbor lists are sorted
class Graph {
public:
    Graph() = default;
    Graph(int n, const std::vector<std::pair<int, int>>& edges,
          std::vector<std::string> labels = {});

    int n() const { return static_cast<int>(adj_.size()); }
    long long m() const { return m_; }

    std::span<const int> neighbors(int i) const {
        check(i);
        return adj_[static_cast<std::size_t>(i)];
    }
    int degree(int i) const {
        check(i);
        return static_cast<int>(adj_[static_cast<std::size_t>(i)].size());
    }
    bool has_edge(int i, int j) const;

    const std::string& label(int i) const {
        check(i);
        return labels_[static_cast<std::size_t>(i)];
    }
    const std::vector<std::string>& labels() const { return labels_; }

    // edges as (i, j) pairs with i < j, lexicographically sorted
    std::vector<std::pair<int, int>> edges() const;

private:
    void check(int i) const {
        if (i < 0 || i >= n()) throw contract_error("node index out of range for Graph");
    }

    std::vector<std::vector<int>> adj_;
    std::vector<std::string> labels_;
    long long m_ = 0;
};

// whitespace-separated "label label" per line, '#' starts a comment,
// duplicate edges collapse silently, self-loops are an error
Graph load_edge_list(std::istream& in);
Graph load_edge_list_file(const std::string& path);

// N(T): all nodes adjacent to some member of T (may intersect T)
NodeSet neighbors_of_set(const Graph& g, const NodeSet& t);

// v_G(T) = |T| - |N(T)|
int vulnerability_of_set(const Graph& g, const NodeSet& t);

// B(T): nodes whose whole neighborhood lies inside T (isolated nodes always qualify)
NodeSet controlled_set(const Graph& g, const NodeSet& t);

// p_G(T) = |B(T)| - |T|,  q_G(T) = |B(T) \ T| - |T|
int power_p(const Graph& g, const NodeSet& t);
int power_q(const Graph& g, const NodeSet& t);

bool is_independent(const Graph& g, const NodeSet& s);

// number of edges with exactly one endpoint in s
long long boundary_size(const Graph& g, const NodeSet& s);

int min_degree(const Graph& g);
int max_degree(const Graph& g);

struct Component {
    Graph graph;
    std::vector<int> original; // component index -> index in the parent graph
};

std::vector<Component> connected_components(const Graph& g);
bool is_connected(const Graph& g);

// copy with node i removed; second member maps new index -> old index
std::pair<Graph, std::vector<int>> delete_node(const Graph& g, int i);

// copy with a whole set removed; second member maps new index -> old index
std::pair<Graph, std::vector<int>> delete_nodes(const Graph& g, const NodeSet& t);

} // namespace vulnet

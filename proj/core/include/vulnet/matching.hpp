#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "vulnet/graph.hpp"

namespace vulnet {

// bipartite graph with separate left/right index spaces
struct BipartiteGraph {
    int left = 0;
    int right = 0;
    std::vector<std::vector<int>> adj; // adj[l] = sorted right neighbors of left node l
};

struct Matching {
    std::vector<int> left_to_right; // -1 when unmatched
    std::vector<int> right_to_left;
    int size = 0;
};

// maximum bipartite matching; deterministic (lowest-index augmenting paths first)
Matching hopcroft_karp(const BipartiteGraph& b);

struct BipartiteCover {
    std::vector<char> left_in;
    std::vector<char> right_in;
    int size = 0;
};

// minimum vertex cover from a maximum matching (Konig)
BipartiteCover konig_cover(const BipartiteGraph& b, const Matching& m);

// doubled bipartite graph D(G): left copies i', right copies i'',
// with i'-j'' and j'-i'' for every edge ij
BipartiteGraph double_graph(const Graph& g);

// weights u_i in {0,1,2} with u_i + u_j >= 2 on every edge; total = tau2
struct TwoVertexCover {
    std::vector<int> u;
    int total = 0;
};

// edge weights w_e in {0,1,2} with weighted degree <= 2 everywhere; indexed
// like Graph::edges(); perfect when every weighted degree equals 2
struct TwoMatching {
    std::vector<int> weight;
    long long total = 0;
    bool perfect = false;
};

// nu2 = tau2 = size of a maximum matching of D(G)
int two_matching_number(const Graph& g);
TwoVertexCover min_two_vertex_cover(const Graph& g);
TwoMatching max_two_matching(const Graph& g);
bool has_perfect_two_matching(const Graph& g);

// 2-coloring based shortcut for bipartite graphs: nu2 = 2 * max matching;
// throws contract_error when an odd cycle is found
TwoMatching two_matching_bipartite(const Graph& g);

// raised by hall_witness when no saturating matching exists; violator is a
// subset T of s with |T| > |N(T)|
struct hall_error : std::runtime_error {
    NodeSet violator;
    explicit hall_error(NodeSet t)
        : std::runtime_error("no saturating matching: Hall violator of size " +
                             std::to_string(t.count())),
          violator(std::move(t)) {}
};

// injective map phi: s -> N(s) with phi(i) adjacent to i (pre: s independent and nonempty)
std::vector<std::pair<int, int>> hall_witness(const Graph& g, const NodeSet& s);

} // namespace vulnet

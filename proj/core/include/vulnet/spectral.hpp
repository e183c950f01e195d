#pragma once

#include <optional>

#include "vulnet/graph.hpp"

namespace vulnet {

struct SpectralResult {
    double lambda2 = 0;
    double tolerance = 0;   // absolute accuracy bound: 1e-9 * max(1, max degree)
    bool connected = false; // lambda2 > tolerance
};

// second-smallest eigenvalue of the Laplacian L = D - A, dense solve;
// pre: 2 <= n <= dense_cap
SpectralResult algebraic_connectivity(const Graph& g, int dense_cap = 5000);

struct ExpansionReport {
    double lambda2 = 0;
    double lower = 0;              // lambda2 * (1 - |S|/n)
    double ratio = 0;              // |boundary(S)| / |S|
    long long neighbor_count = 0;  // |N(S)|
    bool independent = false;
    bool lower_ok = false;         // lower <= ratio, up to eigensolver tolerance
    bool upper_ok = false;         // ratio <= |N(S)|; only meaningful for independent S
    bool mean_degree_identity = false; // |boundary(S)| == sum of degrees over S
};

// the chain lambda2 (1 - |S|/n) <= |dS|/|S| <= |N(S)| for independent S;
// pre: s nonempty; lambda2 is computed when not supplied
ExpansionReport expansion_inequality_check(const Graph& g, const NodeSet& s,
                                           std::optional<double> lambda2 = std::nullopt);

struct LeafSiblings {
    int center = -1;  // node holding k >= 2 degree-1 neighbors
    int count = 0;    // k
    int nu_lower = 0; // nu_bar >= k - 1
    double lambda2_upper = 1.0;
};

// k degree-1 nodes sharing a neighbor force lambda2 <= 1 and nu_bar >= k-1
std::optional<LeafSiblings> leaf_siblings_bound(const Graph& g);

} // namespace vulnet

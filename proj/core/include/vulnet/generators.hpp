#pragma once

#include <cstdint>
#include <string>

#include "vulnet/graph.hpp"
#include "vulnet/rng.hpp"

namespace vulnet {

// G(n, p): every pair drawn independently, scanned in lexicographic order
Graph erdos_renyi(int n, double p, std::uint64_t seed, std::uint64_t stream = 0);

// p = mean_degree / (n - 1); pre: n >= 2, 0 <= mean_degree <= n-1
Graph erdos_renyi_mean_degree(int n, double mean_degree, std::uint64_t seed,
                              std::uint64_t stream = 0);

// growth from a single node; node t attaches to min(m_per_step, t) distinct
// earlier nodes, drawn without replacement with weight (degree + 1);
// pre: n >= 1, 1 <= m_per_step <= n/2
Graph barabasi_albert(int n, int m_per_step, std::uint64_t seed, std::uint64_t stream = 0);

Graph star6();            // hub "c" with leaves "l1".."l6"
Graph fig1_topright();    // hub "c", whites "w1".."w6" paired up
Graph fig1_bottomleft();  // hub "c", whites "w1".."w6" with a path over w3..w6
Graph fig1_bottomright(); // hub "c", whites "w1".."w6", greys "g1".."g5"
Graph cycle_graph(int k);    // pre: k >= 3
Graph complete_graph(int k); // pre: k >= 1
Graph path_graph(int k);     // pre: k >= 1
Graph petersen_graph();

// star6, fig1_topright, fig1_bottomleft, fig1_bottomright, petersen,
// cycle(k), complete(k), path(k)
Graph fixture(const std::string& name);

} // namespace vulnet

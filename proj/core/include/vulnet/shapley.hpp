#pragma once

#include <cstdint>
#include <vector>

#include "vulnet/graph.hpp"
#include "vulnet/rational.hpp"

namespace vulnet {

enum class Measure { p, q, v };

const char* measure_name(Measure m);

struct PowerVector {
    Measure measure = Measure::p;
    std::vector<Rational> score;
};

// the characteristic function behind each measure:
//   p -> p_G(T) = |B(T)| - |T|,  q -> q_G(T),  v -> v_G(T)
long long coalition_value(const Graph& g, Measure m, const NodeSet& t);

// closed-form Shapley values, exact:
//   phi_p(i) = -1 + sum_{j ~ i} 1/d_j
//   phi_q(i) = -1 - 1/(1+d_i) + sum_{j ~ i} 1/((1+d_j) d_j)
//   phi_v = -phi_p
PowerVector shapley_power(const Graph& g, Measure m);

// brute-force references; subset form sums weighted marginals over all
// coalitions (pre: n <= 10), permutation form averages over all n! orders
// (pre: n <= 8)
PowerVector shapley_oracle_subsets(const Graph& g, Measure m);
PowerVector shapley_oracle_permutations(const Graph& g, Measure m);

struct CoreViolation {
    NodeSet coalition;
    Rational allocated; // sum of scores over the coalition
    long long demanded = 0; // w(coalition)
};

struct CoreReport {
    unsigned long long checked = 0;
    std::vector<CoreViolation> violations; // at most 16 retained
};

// checks sum_{i in T} score_i >= w(T) over all singletons, V, every pair when
// n <= 64, and `samples` random coalitions; exact arithmetic throughout;
// pre: measure p or v
CoreReport core_check(const Graph& g, const PowerVector& pv, int samples, std::uint64_t seed);

} // namespace vulnet

#pragma once

#include <optional>
#include <vector>

#include "vulnet/graph.hpp"

namespace vulnet {

enum class Verdict { vulnerable, quasi_regularizable, regularizable };

struct Classification {
    Verdict verdict = Verdict::vulnerable;
    int nu2 = 0;
    // lowest node whose removal kills the perfect 2-matching (quasi only)
    std::optional<int> failing_node;
};

// pre: g connected and nonempty
Classification classify(const Graph& g);

enum class Method {
    two_cover,
    per_node_two_cover,
    binary_search,
    branch_and_bound,
    relaxation,
    oracle,
};

const char* method_name(Method m);
const char* verdict_name(Verdict v);

struct VulnerabilityResult {
    int nu_bar = 0;
    int nu_hat = 0;
    NodeSet optimal_set;   // nonempty independent set with v_G = nu_bar
    NodeSet executioners;  // N(optimal_set)
    Method method = Method::two_cover;
    // set when branch-and-bound ran out of node budget; nu_bar is then only a lower bound
    bool lower_bound_only = false;
};

struct Budget {
    // projected subset enumerations allowed in vul_at_least / binary search
    unsigned long long enumeration = 100'000'000ULL;
    // branch-and-bound search tree nodes before giving up with a lower bound
    unsigned long long bnb_nodes = 100'000'000ULL;
    // auto routing uses binary search when min_degree <= delta_cap
    int delta_cap = 2;
};

// nu_bar for a graph classified vulnerable or quasi-regularizable:
// vulnerable -> zeros of a minimum 2-vertex cover (nu_bar = n - tau2 > 0),
// quasi      -> zeros of a minimum 2-vertex cover of G minus the failing node
VulnerabilityResult compute_nonnegative(const Graph& g, const Classification& c);

struct VulAtLeastResult {
    bool holds = false;
    NodeSet witness; // deleted set T when holds (empty universe-sized set otherwise)
};

// decides nu_bar >= k by enumerating deletion sets of size -k and looking for
// a non-regularizable remainder component; pre: 1 - min_degree(g) <= k <= -1
VulAtLeastResult vul_at_least(const Graph& g, int k, const Budget& budget = {});

// pre: classify(g) = regularizable
VulnerabilityResult compute_negative_binary_search(const Graph& g, const Budget& budget = {});
VulnerabilityResult compute_negative_bnb(const Graph& g, const Budget& budget = {});

// exhaustive ground truth over all subsets; pre: 1 <= n <= 20
VulnerabilityResult oracle_nu_bar(const Graph& g);

// classify-then-route entry point; pre: g connected and nonempty
VulnerabilityResult network_vulnerability(const Graph& g, const Budget& budget = {});

struct ComponentwiseClassification {
    Verdict combined = Verdict::vulnerable;
    std::vector<Component> components;
    std::vector<Classification> per_component;
};

ComponentwiseClassification classify_componentwise(const Graph& g);

struct ComponentwiseVulnerability {
    VulnerabilityResult combined; // sets live in the parent graph's index space
    std::vector<Component> components;
    std::vector<VulnerabilityResult> per_component;
};

// nu_bar(G) = sum of max(nu_bar_c, 0) when some component has nu_bar_c >= 0,
// otherwise the single best component value
ComponentwiseVulnerability network_vulnerability_componentwise(const Graph& g,
                                                               const Budget& budget = {});

} // namespace vulnet

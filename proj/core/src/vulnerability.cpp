#include "vulnet/vulnerability.hpp"

#include <algorithm>
#include <bit>
#include <cassert>
#include <cstdint>
#include <limits>
#include <numeric>
#include <stdexcept>

#include "vulnet/matching.hpp"

namespace vulnet {

namespace {

// C(n, k) but never larger than cap + 1 (saturating)
unsigned long long binom_capped(int n, int k, unsigned long long cap) {
    if (k < 0 || k > n) return 0;
    if (k > n - k) k = n - k;
    unsigned __int128 r = 1;
    for (int i = 1; i <= k; ++i) {
        r = r * static_cast<unsigned>(n - k + i) / static_cast<unsigned>(i);
        if (r > cap) return cap + 1;
    }
    return static_cast<unsigned long long>(r);
}

// not 2-bicritical, i.e. the component has nu_bar >= 0
bool non_regularizable(const Graph& c) {
    if (two_matching_number(c) < c.n()) return true;
    for (int i = 0; i < c.n(); ++i)
        if (two_matching_number(delete_node(c, i).first) < c.n() - 1) return true;
    return false;
}

int lowest_min_degree_node(const Graph& g) {
    int delta = min_degree(g);
    for (int i = 0;; ++i)
        if (g.degree(i) == delta) return i;
}

void finish(const Graph& g, VulnerabilityResult& r) {
    if (r.optimal_set.empty())
        throw std::logic_error("internal: empty optimal set");
    if (!is_independent(g, r.optimal_set))
        throw std::logic_error("internal: optimal set is not independent");
    if (!r.lower_bound_only && vulnerability_of_set(g, r.optimal_set) != r.nu_bar)
        throw std::logic_error("internal: optimal set does not realize nu_bar");
    r.nu_hat = std::max(r.nu_bar, 0);
    r.executioners = neighbors_of_set(g, r.optimal_set);
}

} // namespace

const char* method_name(Method m) {
    switch (m) {
        case Method::two_cover: return "two_cover";
        case Method::per_node_two_cover: return "per_node_two_cover";
        case Method::binary_search: return "binary_search";
        case Method::branch_and_bound: return "branch_and_bound";
        case Method::relaxation: return "relaxation";
        case Method::oracle: return "oracle";
    }
    return "unknown";
}

const char* verdict_name(Verdict v) {
    switch (v) {
        case Verdict::vulnerable: return "vulnerable";
        case Verdict::quasi_regularizable: return "quasi_regularizable";
        case Verdict::regularizable: return "regularizable";
    }
    return "unknown";
}

Classification classify(const Graph& g) {
    if (g.n() == 0) throw contract_error("classify needs a nonempty graph");
    if (!is_connected(g)) {
        auto comps = connected_components(g);
        throw contract_error("graph is disconnected (" + std::to_string(comps.size()) +
                             " components); use the componentwise mode");
    }
    Classification c;
    c.nu2 = two_matching_number(g);
    if (c.nu2 < g.n()) {
        c.verdict = Verdict::vulnerable;
        return c;
    }
    for (int i = 0; i < g.n(); ++i) {
        if (two_matching_number(delete_node(g, i).first) < g.n() - 1) {
            c.verdict = Verdict::quasi_regularizable;
            c.failing_node = i;
            return c;
        }
    }
    c.verdict = Verdict::regularizable;
    return c;
}

VulnerabilityResult compute_nonnegative(const Graph& g, const Classification& c) {
    VulnerabilityResult r;
    if (c.verdict == Verdict::vulnerable) {
        TwoVertexCover cover = min_two_vertex_cover(g);
        r.optimal_set = NodeSet(g.n());
        for (int i = 0; i < g.n(); ++i)
            if (cover.u[static_cast<std::size_t>(i)] == 0) r.optimal_set.set(i);
        r.nu_bar = g.n() - cover.total;
        r.method = Method::two_cover;
    } else if (c.verdict == Verdict::quasi_regularizable) {
        // remove the failing node, take the zeros of a minimum 2-vertex cover
        // of the remainder; that set peaks at 1 there and at 0 in g
        auto [h, mapping] = delete_node(g, c.failing_node.value());
        TwoVertexCover cover = min_two_vertex_cover(h);
        assert(h.n() - cover.total == 1);
        r.optimal_set = NodeSet(g.n());
        for (int i = 0; i < h.n(); ++i)
            if (cover.u[static_cast<std::size_t>(i)] == 0)
                r.optimal_set.set(mapping[static_cast<std::size_t>(i)]);
        r.nu_bar = 0;
        r.method = Method::per_node_two_cover;
    } else {
        throw contract_error("compute_nonnegative needs a vulnerable or quasi-regularizable graph");
    }
    finish(g, r);
    return r;
}

VulAtLeastResult vul_at_least(const Graph& g, int k, const Budget& budget) {
    if (g.n() == 0) throw contract_error("vul_at_least needs a nonempty graph");
    int delta = min_degree(g);
    if (k >= 0 || k < 1 - delta)
        throw contract_error("vul_at_least needs 1 - min_degree(g) <= k <= -1");

    int t = -k;
    if (binom_capped(g.n(), t, budget.enumeration) > budget.enumeration)
        throw budget_error("vul_at_least would enumerate more than the configured budget of "
                           "subsets; use branch-and-bound instead");

    // deletion sets of size t in lexicographic order, so the first witness is
    // the lowest one
    std::vector<int> idx(static_cast<std::size_t>(t));
    std::iota(idx.begin(), idx.end(), 0);
    while (true) {
        NodeSet del(g.n());
        for (int i : idx) del.set(i);
        auto [h, mapping] = delete_nodes(g, del);
        for (const auto& comp : connected_components(h)) {
            if (non_regularizable(comp.graph)) return {true, del};
        }
        int pos = t - 1;
        while (pos >= 0 && idx[static_cast<std::size_t>(pos)] == g.n() - t + pos) --pos;
        if (pos < 0) break;
        ++idx[static_cast<std::size_t>(pos)];
        for (int q = pos + 1; q < t; ++q)
            idx[static_cast<std::size_t>(q)] = idx[static_cast<std::size_t>(q - 1)] + 1;
    }
    return {false, NodeSet(g.n())};
}

VulnerabilityResult compute_negative_binary_search(const Graph& g, const Budget& budget) {
    Classification c = classify(g);
    if (c.verdict != Verdict::regularizable)
        throw contract_error("compute_negative_binary_search needs a regularizable graph");

    int delta = min_degree(g); // >= 2 for a regularizable graph
    int lb = 1 - delta;
    VulnerabilityResult r;
    r.method = Method::binary_search;

    if (lb >= -1) {
        // the whole range collapses to -1: a minimum degree node by itself
        r.nu_bar = -1;
        r.optimal_set = NodeSet(g.n());
        r.optimal_set.set(lowest_min_degree_node(g));
        finish(g, r);
        return r;
    }

    // probes run down binary-search levels; the widest enumerates C(n, delta-2)
    {
        int range = -1 - lb;
        int levels = 1;
        while ((1 << levels) < range + 1) ++levels;
        unsigned long long per = binom_capped(g.n(), delta - 2, budget.enumeration);
        if (per > budget.enumeration / static_cast<unsigned long long>(levels))
            throw budget_error("binary search enumeration over budget; use branch-and-bound");
    }

    int lo = lb, hi = -1;
    NodeSet witness(g.n());
    bool have_witness = false;
    while (lo < hi) {
        int mid = lo + (hi - lo + 1) / 2;
        VulAtLeastResult probe = vul_at_least(g, mid, budget);
        if (probe.holds) {
            lo = mid;
            witness = probe.witness;
            have_witness = true;
        } else {
            hi = mid - 1;
        }
    }
    r.nu_bar = lo;

    if (!have_witness) {
        // every probe failed, so nu_bar sits at the degree lower bound
        r.optimal_set = NodeSet(g.n());
        r.optimal_set.set(lowest_min_degree_node(g));
    } else {
        // grow the witness back into an optimal set: the non-regularizable
        // remainder component contributes its own best independent set
        auto [h, mapping] = delete_nodes(g, witness);
        bool done = false;
        for (const auto& comp : connected_components(h)) {
            if (!non_regularizable(comp.graph)) continue;
            VulnerabilityResult sub = compute_nonnegative(comp.graph, classify(comp.graph));
            r.optimal_set = NodeSet(g.n());
            sub.optimal_set.for_each([&](int local) {
                r.optimal_set.set(mapping[static_cast<std::size_t>(
                    comp.original[static_cast<std::size_t>(local)])]);
            });
            done = true;
            break;
        }
        if (!done) throw std::logic_error("internal: witness lost its non-regularizable component");
    }
    finish(g, r);
    return r;
}

namespace {

// depth-first enumeration of independent sets in a fixed branching order;
// prunes with the candidate count and with a Konig-Ore deficiency bound:
// whatever subset of the candidates is added, the gain cannot exceed
// |C| - max_matching(C -> new neighbors)
struct BranchAndBound {
    const Graph& g;
    unsigned long long node_budget;
    std::vector<int> pos; // node -> branching rank
    long long incumbent;
    NodeSet best;
    unsigned long long nodes = 0;
    bool out_of_budget = false;

    BranchAndBound(const Graph& graph, const Budget& budget)
        : g(graph), node_budget(budget.bnb_nodes), pos(static_cast<std::size_t>(graph.n())),
          best(graph.n()) {
        // low degree first: cheap singletons make strong early incumbents
        std::vector<int> order(static_cast<std::size_t>(g.n()));
        std::iota(order.begin(), order.end(), 0);
        std::stable_sort(order.begin(), order.end(),
                         [&](int a, int b) { return g.degree(a) < g.degree(b); });
        for (std::size_t k = 0; k < order.size(); ++k)
            pos[static_cast<std::size_t>(order[k])] = static_cast<int>(k);
        incumbent = 1 - min_degree(g);
        best.set(lowest_min_degree_node(g));
    }

    int matching_bound(const std::vector<int>& cand, const NodeSet& z) {
        BipartiteGraph b;
        b.left = static_cast<int>(cand.size());
        b.adj.assign(cand.size(), {});
        std::vector<int> right_id(static_cast<std::size_t>(g.n()), -1);
        int rc = 0;
        for (std::size_t l = 0; l < cand.size(); ++l) {
            for (int w : g.neighbors(cand[l])) {
                if (z.test(w)) continue;
                if (right_id[static_cast<std::size_t>(w)] == -1)
                    right_id[static_cast<std::size_t>(w)] = rc++;
                b.adj[l].push_back(right_id[static_cast<std::size_t>(w)]);
            }
        }
        b.right = rc;
        return hopcroft_karp(b).size;
    }

    void dfs(NodeSet& s, int s_size, const NodeSet& z, int z_count,
             const std::vector<int>& cand) {
        if (out_of_budget) return;
        if (++nodes > node_budget) {
            out_of_budget = true;
            return;
        }
        long long v = s_size - z_count;
        if (s_size > 0 && v > incumbent) {
            incumbent = v;
            best = s;
        }
        if (cand.empty()) return;
        if (v + static_cast<long long>(cand.size()) <= incumbent) return;
        if (v + static_cast<long long>(cand.size()) - matching_bound(cand, z) <= incumbent)
            return;

        for (std::size_t i = 0; i < cand.size(); ++i) {
            if (out_of_budget) return;
            if (v + static_cast<long long>(cand.size() - i) <= incumbent) break;
            int u = cand[i];
            std::vector<int> next;
            next.reserve(cand.size() - i);
            for (std::size_t k = i + 1; k < cand.size(); ++k)
                if (!g.has_edge(u, cand[k])) next.push_back(cand[k]);
            NodeSet z2 = z;
            int zc = z_count;
            for (int w : g.neighbors(u)) {
                if (!z2.test(w)) {
                    z2.set(w);
                    ++zc;
                }
            }
            s.set(u);
            dfs(s, s_size + 1, z2, zc, next);
            s.reset(u);
        }
    }

    VulnerabilityResult run() {
        std::vector<int> cand(static_cast<std::size_t>(g.n()));
        std::iota(cand.begin(), cand.end(), 0);
        std::sort(cand.begin(), cand.end(),
                  [&](int a, int b) { return pos[static_cast<std::size_t>(a)] <
                                             pos[static_cast<std::size_t>(b)]; });
        NodeSet s(g.n());
        dfs(s, 0, NodeSet(g.n()), 0, cand);
        VulnerabilityResult r;
        r.nu_bar = static_cast<int>(incumbent);
        r.optimal_set = best;
        r.method = Method::branch_and_bound;
        r.lower_bound_only = out_of_budget;
        return r;
    }
};

} // namespace

VulnerabilityResult compute_negative_bnb(const Graph& g, const Budget& budget) {
    if (g.n() == 0) throw contract_error("compute_negative_bnb needs a nonempty graph");
    VulnerabilityResult r = BranchAndBound(g, budget).run();
    // even a budget-cut run carries a realized set; check what it claims
    if (vulnerability_of_set(g, r.optimal_set) != r.nu_bar)
        throw std::logic_error("internal: branch-and-bound set does not realize its bound");
    finish(g, r);
    return r;
}

VulnerabilityResult oracle_nu_bar(const Graph& g) {
    int n = g.n();
    if (n == 0) throw contract_error("oracle_nu_bar needs a nonempty graph");
    if (n > 20) throw contract_error("oracle_nu_bar refuses graphs with more than 20 nodes");

    std::vector<std::uint32_t> nb(static_cast<std::size_t>(n), 0);
    for (int i = 0; i < n; ++i)
        for (int j : g.neighbors(i)) nb[static_cast<std::size_t>(i)] |= std::uint32_t{1} << j;

    // nbr[mask] = N(mask), built by peeling the lowest bit
    std::vector<std::uint32_t> nbr(std::size_t{1} << n, 0);
    int best_any = 0; // the empty set scores 0
    long long best_ind = std::numeric_limits<long long>::min();
    std::uint32_t best_mask = 0;
    for (std::uint32_t mask = 1; mask < (std::uint32_t{1} << n); ++mask) {
        std::uint32_t low = mask & (~mask + 1);
        std::uint32_t nm = nbr[mask ^ low] | nb[static_cast<std::size_t>(std::countr_zero(low))];
        nbr[mask] = nm;
        int v = std::popcount(mask) - std::popcount(nm);
        if (v > best_any) best_any = v;
        if ((mask & nm) == 0 && v > best_ind) {
            best_ind = v;
            best_mask = mask;
        }
    }
    // restricting to independent sets loses nothing (Eq. over all subsets)
    assert(static_cast<long long>(best_any) == std::max(best_ind, 0LL));

    VulnerabilityResult r;
    r.nu_bar = static_cast<int>(best_ind);
    r.optimal_set = NodeSet(n);
    for (int i = 0; i < n; ++i)
        if (best_mask & (std::uint32_t{1} << i)) r.optimal_set.set(i);
    r.method = Method::oracle;
    finish(g, r);
    return r;
}

VulnerabilityResult network_vulnerability(const Graph& g, const Budget& budget) {
    Classification c = classify(g);
    if (c.verdict != Verdict::regularizable) return compute_nonnegative(g, c);
    if (min_degree(g) <= budget.delta_cap) {
        try {
            return compute_negative_binary_search(g, budget);
        } catch (const budget_error&) {
            // enumeration too wide for this graph; fall through
        }
    }
    return compute_negative_bnb(g, budget);
}

ComponentwiseClassification classify_componentwise(const Graph& g) {
    if (g.n() == 0) throw contract_error("classify needs a nonempty graph");
    ComponentwiseClassification out;
    out.components = connected_components(g);
    bool any_vul = false, any_quasi = false;
    for (const auto& comp : out.components) {
        Classification c = classify(comp.graph);
        any_vul = any_vul || c.verdict == Verdict::vulnerable;
        any_quasi = any_quasi || c.verdict == Verdict::quasi_regularizable;
        out.per_component.push_back(c);
    }
    out.combined = any_vul     ? Verdict::vulnerable
                   : any_quasi ? Verdict::quasi_regularizable
                               : Verdict::regularizable;
    return out;
}

ComponentwiseVulnerability network_vulnerability_componentwise(const Graph& g,
                                                               const Budget& budget) {
    if (g.n() == 0) throw contract_error("network vulnerability needs a nonempty graph");
    ComponentwiseVulnerability out;
    out.components = connected_components(g);
    for (const auto& comp : out.components)
        out.per_component.push_back(network_vulnerability(comp.graph, budget));

    bool any_nonneg = false;
    Method used = Method::two_cover;
    for (const auto& sub : out.per_component) {
        any_nonneg = any_nonneg || sub.nu_bar >= 0;
        if (static_cast<int>(sub.method) > static_cast<int>(used)) used = sub.method;
    }

    VulnerabilityResult& r = out.combined;
    r.method = used;
    r.optimal_set = NodeSet(g.n());
    if (any_nonneg) {
        // independent sets split over components, so the nonnegative parts add up
        long long total = 0;
        for (std::size_t k = 0; k < out.per_component.size(); ++k) {
            const auto& sub = out.per_component[k];
            if (sub.nu_bar < 0) continue;
            total += sub.nu_bar;
            sub.optimal_set.for_each([&](int local) {
                r.optimal_set.set(out.components[k].original[static_cast<std::size_t>(local)]);
            });
        }
        r.nu_bar = static_cast<int>(total);
    } else {
        std::size_t arg = 0;
        for (std::size_t k = 1; k < out.per_component.size(); ++k)
            if (out.per_component[k].nu_bar > out.per_component[arg].nu_bar) arg = k;
        const auto& sub = out.per_component[arg];
        r.nu_bar = sub.nu_bar;
        sub.optimal_set.for_each([&](int local) {
            r.optimal_set.set(out.components[arg].original[static_cast<std::size_t>(local)]);
        });
        // a budget-cut component could in truth beat the chosen one
        for (const auto& other : out.per_component)
            r.lower_bound_only = r.lower_bound_only || other.lower_bound_only;
    }
    finish(g, r);
    return out;
}

} // namespace vulnet

#include "vulnet/matching.hpp"

#include <algorithm>
#include <cassert>
#include <limits>
#include <queue>

namespace vulnet {

namespace {

constexpr int kInf = std::numeric_limits<int>::max();

// layered BFS/DFS phases; left nodes are processed in index order throughout,
// so the matching is a deterministic function of the input
struct HopcroftKarp {
    const BipartiteGraph& b;
    std::vector<int> match_l, match_r, dist;

    explicit HopcroftKarp(const BipartiteGraph& bg)
        : b(bg),
          match_l(static_cast<std::size_t>(bg.left), -1),
          match_r(static_cast<std::size_t>(bg.right), -1),
          dist(static_cast<std::size_t>(bg.left), kInf) {}

    bool bfs() {
        std::queue<int> q;
        for (int l = 0; l < b.left; ++l) {
            if (match_l[static_cast<std::size_t>(l)] == -1) {
                dist[static_cast<std::size_t>(l)] = 0;
                q.push(l);
            } else {
                dist[static_cast<std::size_t>(l)] = kInf;
            }
        }
        bool reachable_free = false;
        while (!q.empty()) {
            int l = q.front();
            q.pop();
            for (int r : b.adj[static_cast<std::size_t>(l)]) {
                int l2 = match_r[static_cast<std::size_t>(r)];
                if (l2 == -1) {
                    reachable_free = true;
                } else if (dist[static_cast<std::size_t>(l2)] == kInf) {
                    dist[static_cast<std::size_t>(l2)] = dist[static_cast<std::size_t>(l)] + 1;
                    q.push(l2);
                }
            }
        }
        return reachable_free;
    }

    bool dfs(int l) {
        for (int r : b.adj[static_cast<std::size_t>(l)]) {
            int l2 = match_r[static_cast<std::size_t>(r)];
            if (l2 == -1 ||
                (dist[static_cast<std::size_t>(l2)] == dist[static_cast<std::size_t>(l)] + 1 &&
                 dfs(l2))) {
                match_l[static_cast<std::size_t>(l)] = r;
                match_r[static_cast<std::size_t>(r)] = l;
                return true;
            }
        }
        dist[static_cast<std::size_t>(l)] = kInf;
        return false;
    }

    Matching run() {
        int size = 0;
        while (bfs()) {
            for (int l = 0; l < b.left; ++l)
                if (match_l[static_cast<std::size_t>(l)] == -1 && dfs(l)) ++size;
        }
        return {std::move(match_l), std::move(match_r), size};
    }
};

} // namespace

Matching hopcroft_karp(const BipartiteGraph& b) {
    return HopcroftKarp(b).run();
}

BipartiteCover konig_cover(const BipartiteGraph& b, const Matching& m) {
    // alternating reachability from free left nodes: non-matching edges
    // left->right, matching edges right->left
    std::vector<char> zl(static_cast<std::size_t>(b.left), 0);
    std::vector<char> zr(static_cast<std::size_t>(b.right), 0);
    std::vector<int> stack;
    for (int l = 0; l < b.left; ++l) {
        if (m.left_to_right[static_cast<std::size_t>(l)] == -1) {
            zl[static_cast<std::size_t>(l)] = 1;
            stack.push_back(l);
        }
    }
    while (!stack.empty()) {
        int l = stack.back();
        stack.pop_back();
        for (int r : b.adj[static_cast<std::size_t>(l)]) {
            if (zr[static_cast<std::size_t>(r)]) continue;
            zr[static_cast<std::size_t>(r)] = 1;
            int l2 = m.right_to_left[static_cast<std::size_t>(r)];
            // r unmatched would mean an augmenting path; the matching is maximum
            assert(l2 != -1);
            if (l2 != -1 && !zl[static_cast<std::size_t>(l2)]) {
                zl[static_cast<std::size_t>(l2)] = 1;
                stack.push_back(l2);
            }
        }
    }

    BipartiteCover cover;
    cover.left_in.assign(static_cast<std::size_t>(b.left), 0);
    cover.right_in.assign(static_cast<std::size_t>(b.right), 0);
    for (int l = 0; l < b.left; ++l) {
        if (!zl[static_cast<std::size_t>(l)]) {
            cover.left_in[static_cast<std::size_t>(l)] = 1;
            ++cover.size;
        }
    }
    for (int r = 0; r < b.right; ++r) {
        if (zr[static_cast<std::size_t>(r)]) {
            cover.right_in[static_cast<std::size_t>(r)] = 1;
            ++cover.size;
        }
    }
    assert(cover.size == m.size);
#ifndef NDEBUG
    for (int l = 0; l < b.left; ++l)
        for (int r : b.adj[static_cast<std::size_t>(l)])
            assert(cover.left_in[static_cast<std::size_t>(l)] ||
                   cover.right_in[static_cast<std::size_t>(r)]);
#endif
    return cover;
}

BipartiteGraph double_graph(const Graph& g) {
    BipartiteGraph b;
    b.left = b.right = g.n();
    b.adj.assign(static_cast<std::size_t>(g.n()), {});
    for (int i = 0; i < g.n(); ++i) {
        auto nbrs = g.neighbors(i);
        b.adj[static_cast<std::size_t>(i)].assign(nbrs.begin(), nbrs.end());
    }
    return b;
}

int two_matching_number(const Graph& g) {
    return hopcroft_karp(double_graph(g)).size;
}

TwoVertexCover min_two_vertex_cover(const Graph& g) {
    BipartiteGraph d = double_graph(g);
    Matching m = hopcroft_karp(d);
    BipartiteCover c = konig_cover(d, m);
    TwoVertexCover out;
    out.u.assign(static_cast<std::size_t>(g.n()), 0);
    for (int i = 0; i < g.n(); ++i) {
        out.u[static_cast<std::size_t>(i)] =
            (c.left_in[static_cast<std::size_t>(i)] ? 1 : 0) +
            (c.right_in[static_cast<std::size_t>(i)] ? 1 : 0);
        out.total += out.u[static_cast<std::size_t>(i)];
    }
    assert(out.total == m.size);
#ifndef NDEBUG
    for (auto [i, j] : g.edges())
        assert(out.u[static_cast<std::size_t>(i)] + out.u[static_cast<std::size_t>(j)] >= 2);
#endif
    return out;
}

TwoMatching max_two_matching(const Graph& g) {
    BipartiteGraph d = double_graph(g);
    Matching m = hopcroft_karp(d);
    auto edges = g.edges();
    TwoMatching out;
    out.weight.assign(edges.size(), 0);
    for (std::size_t e = 0; e < edges.size(); ++e) {
        auto [i, j] = edges[e];
        if (m.left_to_right[static_cast<std::size_t>(i)] == j)
            ++out.weight[e]; // i' - j''
        if (m.left_to_right[static_cast<std::size_t>(j)] == i)
            ++out.weight[e]; // j' - i''
        out.total += out.weight[e];
    }
    assert(out.total == m.size);
#ifndef NDEBUG
    {
        std::vector<int> wdeg(static_cast<std::size_t>(g.n()), 0);
        for (std::size_t e = 0; e < edges.size(); ++e) {
            wdeg[static_cast<std::size_t>(edges[e].first)] += out.weight[e];
            wdeg[static_cast<std::size_t>(edges[e].second)] += out.weight[e];
        }
        for (int i = 0; i < g.n(); ++i) assert(wdeg[static_cast<std::size_t>(i)] <= 2);
    }
#endif
    out.perfect = (out.total == g.n()); // every copy matched <=> all weighted degrees 2
    return out;
}

bool has_perfect_two_matching(const Graph& g) {
    return two_matching_number(g) == g.n();
}

TwoMatching two_matching_bipartite(const Graph& g) {
    // 2-color by BFS
    std::vector<int> side(static_cast<std::size_t>(g.n()), -1);
    std::vector<int> queue;
    for (int start = 0; start < g.n(); ++start) {
        if (side[static_cast<std::size_t>(start)] != -1) continue;
        side[static_cast<std::size_t>(start)] = 0;
        queue.push_back(start);
        std::size_t head = queue.size() - 1;
        while (head < queue.size()) {
            int i = queue[head++];
            for (int j : g.neighbors(i)) {
                if (side[static_cast<std::size_t>(j)] == -1) {
                    side[static_cast<std::size_t>(j)] = 1 - side[static_cast<std::size_t>(i)];
                    queue.push_back(j);
                } else if (side[static_cast<std::size_t>(j)] ==
                           side[static_cast<std::size_t>(i)]) {
                    throw contract_error("graph is not bipartite: odd cycle found");
                }
            }
        }
    }

    // matching between the two sides, then every matched edge gets weight 2
    std::vector<int> left_ids, right_ids;
    std::vector<int> local(static_cast<std::size_t>(g.n()), -1);
    for (int i = 0; i < g.n(); ++i) {
        if (side[static_cast<std::size_t>(i)] == 0) {
            local[static_cast<std::size_t>(i)] = static_cast<int>(left_ids.size());
            left_ids.push_back(i);
        } else {
            local[static_cast<std::size_t>(i)] = static_cast<int>(right_ids.size());
            right_ids.push_back(i);
        }
    }
    BipartiteGraph b;
    b.left = static_cast<int>(left_ids.size());
    b.right = static_cast<int>(right_ids.size());
    b.adj.assign(left_ids.size(), {});
    for (std::size_t l = 0; l < left_ids.size(); ++l)
        for (int j : g.neighbors(left_ids[l]))
            b.adj[l].push_back(local[static_cast<std::size_t>(j)]);
    Matching m = hopcroft_karp(b);

    auto edges = g.edges();
    TwoMatching out;
    out.weight.assign(edges.size(), 0);
    for (std::size_t e = 0; e < edges.size(); ++e) {
        auto [i, j] = edges[e];
        int l = side[static_cast<std::size_t>(i)] == 0 ? i : j;
        int r = l == i ? j : i;
        if (m.left_to_right[static_cast<std::size_t>(local[static_cast<std::size_t>(l)])] ==
            local[static_cast<std::size_t>(r)])
            out.weight[e] = 2;
        out.total += out.weight[e];
    }
    assert(out.total == 2LL * m.size);
    out.perfect = (out.total == g.n());
    return out;
}

std::vector<std::pair<int, int>> hall_witness(const Graph& g, const NodeSet& s) {
    if (s.universe() != g.n()) throw contract_error("NodeSet universe does not match graph");
    if (s.empty()) throw contract_error("hall_witness needs a nonempty set");
    if (!is_independent(g, s)) throw contract_error("hall_witness needs an independent set");

    std::vector<int> left_ids = s.members();
    NodeSet nbrs = neighbors_of_set(g, s);
    std::vector<int> right_ids = nbrs.members();
    std::vector<int> right_local(static_cast<std::size_t>(g.n()), -1);
    for (std::size_t r = 0; r < right_ids.size(); ++r)
        right_local[static_cast<std::size_t>(right_ids[r])] = static_cast<int>(r);

    BipartiteGraph b;
    b.left = static_cast<int>(left_ids.size());
    b.right = static_cast<int>(right_ids.size());
    b.adj.assign(left_ids.size(), {});
    for (std::size_t l = 0; l < left_ids.size(); ++l)
        for (int j : g.neighbors(left_ids[l]))
            b.adj[l].push_back(right_local[static_cast<std::size_t>(j)]);

    Matching m = hopcroft_karp(b);
    if (m.size < b.left) {
        // alternating reachability from an unmatched left node yields a set
        // with more members than neighbors
        std::vector<char> zl(static_cast<std::size_t>(b.left), 0);
        std::vector<char> zr(static_cast<std::size_t>(b.right), 0);
        std::vector<int> stack;
        for (int l = 0; l < b.left; ++l) {
            if (m.left_to_right[static_cast<std::size_t>(l)] == -1) {
                zl[static_cast<std::size_t>(l)] = 1;
                stack.push_back(l);
            }
        }
        while (!stack.empty()) {
            int l = stack.back();
            stack.pop_back();
            for (int r : b.adj[static_cast<std::size_t>(l)]) {
                if (zr[static_cast<std::size_t>(r)]) continue;
                zr[static_cast<std::size_t>(r)] = 1;
                int l2 = m.right_to_left[static_cast<std::size_t>(r)];
                if (l2 != -1 && !zl[static_cast<std::size_t>(l2)]) {
                    zl[static_cast<std::size_t>(l2)] = 1;
                    stack.push_back(l2);
                }
            }
        }
        NodeSet violator(g.n());
        for (int l = 0; l < b.left; ++l)
            if (zl[static_cast<std::size_t>(l)]) violator.set(left_ids[static_cast<std::size_t>(l)]);
        assert(violator.count() > neighbors_of_set(g, violator).count());
        throw hall_error(std::move(violator));
    }

    std::vector<std::pair<int, int>> phi;
    phi.reserve(left_ids.size());
    for (std::size_t l = 0; l < left_ids.size(); ++l)
        phi.emplace_back(left_ids[l],
                         right_ids[static_cast<std::size_t>(
                             m.left_to_right[l])]);
    return phi;
}

} // namespace vulnet

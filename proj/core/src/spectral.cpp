#include "vulnet/spectral.hpp"

#include <Eigen/Dense>
#include <Eigen/Eigenvalues>

#include <algorithm>
#include <cassert>

namespace vulnet {

SpectralResult algebraic_connectivity(const Graph& g, int dense_cap) {
    if (g.n() < 2)
        throw contract_error("algebraic connectivity needs at least two nodes");
    if (g.n() > dense_cap)
        throw budget_error("graph exceeds the dense eigensolver cap of " +
                           std::to_string(dense_cap) + " nodes");

    int n = g.n();
    Eigen::MatrixXd lap = Eigen::MatrixXd::Zero(n, n);
    for (int i = 0; i < n; ++i) {
        lap(i, i) = g.degree(i);
        for (int j : g.neighbors(i)) lap(i, j) = -1.0;
    }
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(lap, Eigen::EigenvaluesOnly);

    SpectralResult r;
    r.lambda2 = solver.eigenvalues()(1); // ascending order
    r.tolerance = 1e-9 * std::max(1, max_degree(g));
    r.connected = r.lambda2 > r.tolerance;
    // the smallest eigenvalue of a Laplacian is exactly 0
    assert(std::abs(solver.eigenvalues()(0)) <= r.tolerance);
    return r;
}

ExpansionReport expansion_inequality_check(const Graph& g, const NodeSet& s,
                                           std::optional<double> lambda2) {
    if (s.universe() != g.n()) throw contract_error("NodeSet universe does not match graph");
    if (s.empty()) throw contract_error("expansion check needs a nonempty set");

    ExpansionReport r;
    double tol;
    if (lambda2) {
        r.lambda2 = *lambda2;
        tol = 1e-9 * std::max(1, max_degree(g));
    } else {
        SpectralResult sr = algebraic_connectivity(g);
        r.lambda2 = sr.lambda2;
        tol = sr.tolerance;
    }

    long long size = s.count();
    long long cut = boundary_size(g, s);
    r.lower = r.lambda2 * (1.0 - static_cast<double>(size) / g.n());
    r.ratio = static_cast<double>(cut) / static_cast<double>(size);
    r.neighbor_count = neighbors_of_set(g, s).count();
    r.independent = is_independent(g, s);
    r.lower_ok = r.lower <= r.ratio + tol;
    if (r.independent) {
        long long degsum = 0;
        s.for_each([&](int i) { degsum += g.degree(i); });
        // no internal edges, so the boundary is everything incident to S
        r.mean_degree_identity = (cut == degsum);
        r.upper_ok = cut <= r.neighbor_count * size; // |dS|/|S| <= |N(S)| in integers
    }
    return r;
}

std::optional<LeafSiblings> leaf_siblings_bound(const Graph& g) {
    int best = 0, arg = -1;
    for (int i = 0; i < g.n(); ++i) {
        int leaves = 0;
        for (int j : g.neighbors(i))
            if (g.degree(j) == 1) ++leaves;
        if (leaves > best) {
            best = leaves;
            arg = i;
        }
    }
    if (best < 2) return std::nullopt;
    LeafSiblings out;
    out.center = arg;
    out.count = best;
    out.nu_lower = best - 1;
    out.lambda2_upper = 1.0;
    return out;
}

} // namespace vulnet

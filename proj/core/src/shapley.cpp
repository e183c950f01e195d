#include "vulnet/shapley.hpp"

#include <algorithm>
#include <cassert>
#include <numeric>

#include "vulnet/rng.hpp"

namespace vulnet {

const char* measure_name(Measure m) {
    switch (m) {
        case Measure::p: return "p";
        case Measure::q: return "q";
        case Measure::v: return "v";
    }
    return "?";
}

long long coalition_value(const Graph& g, Measure m, const NodeSet& t) {
    switch (m) {
        case Measure::p: return power_p(g, t);
        case Measure::q: return power_q(g, t);
        case Measure::v: return vulnerability_of_set(g, t);
    }
    throw contract_error("unknown measure");
}

PowerVector shapley_power(const Graph& g, Measure m) {
    PowerVector out;
    out.measure = m;
    out.score.assign(static_cast<std::size_t>(g.n()), Rational(0));

    // Term-by-term rational accumulation pays a gcd per neighbor, which
    // dominates on large graphs. Neighbor terms depend only on the neighbor's
    // degree, so bucket them by degree, build one common denominator per node,
    // and canonicalize once.
    std::vector<int> mult(static_cast<std::size_t>(g.n()), 0);
    std::vector<int> touched;
    touched.reserve(64);

    for (int i = 0; i < g.n(); ++i) {
        for (int j : g.neighbors(i)) {
            int d = g.degree(j);
            if (mult[static_cast<std::size_t>(d)]++ == 0) touched.push_back(d);
        }
        // the per-degree denominator: d for measure p/v, (1+d)d for measure q
        auto term_den = [&](long long d) {
            return m == Measure::q ? (1 + d) * d : d;
        };
        BigInt den = 1;
        if (m == Measure::q) den = 1 + g.degree(i);
        for (int d : touched) den = boost::multiprecision::lcm(den, BigInt(term_den(d)));
        BigInt num = -den; // the leading -1
        if (m == Measure::q) num -= den / (1 + g.degree(i));
        for (int d : touched) num += mult[static_cast<std::size_t>(d)] * (den / term_den(d));
        if (m == Measure::v) num = -num;
        out.score[static_cast<std::size_t>(i)] = Rational(num, den);

        for (int d : touched) mult[static_cast<std::size_t>(d)] = 0;
        touched.clear();
    }
    return out;
}

PowerVector shapley_oracle_subsets(const Graph& g, Measure m) {
    int n = g.n();
    if (n < 1 || n > 10) throw contract_error("subset-form oracle handles 1 <= n <= 10");

    std::vector<long long> fact(static_cast<std::size_t>(n) + 1, 1);
    for (int i = 1; i <= n; ++i)
        fact[static_cast<std::size_t>(i)] = fact[static_cast<std::size_t>(i - 1)] * i;

    PowerVector out;
    out.measure = m;
    out.score.assign(static_cast<std::size_t>(n), Rational(0));

    for (int i = 0; i < n; ++i) {
        // marginals grouped by |T|; the weight |T|!(n-|T|-1)!/n! only depends on size
        std::vector<long long> by_size(static_cast<std::size_t>(n), 0);
        std::uint32_t others = ((n == 32 ? 0u : (1u << n)) - 1) & ~(1u << i);
        // iterate subsets of 'others' including the empty set
        std::uint32_t sub = 0;
        while (true) {
            NodeSet t(n), ti(n);
            for (int j = 0; j < n; ++j)
                if (sub & (1u << j)) {
                    t.set(j);
                    ti.set(j);
                }
            ti.set(i);
            int size = std::popcount(sub);
            by_size[static_cast<std::size_t>(size)] +=
                coalition_value(g, m, ti) - coalition_value(g, m, t);
            if (sub == others) break;
            sub = (sub - others) & others; // next subset of the mask
        }
        Rational acc;
        for (int c = 0; c < n; ++c)
            acc += Rational(by_size[static_cast<std::size_t>(c)] *
                                fact[static_cast<std::size_t>(c)] *
                                fact[static_cast<std::size_t>(n - c - 1)],
                            fact[static_cast<std::size_t>(n)]);
        out.score[static_cast<std::size_t>(i)] = acc;
    }
    return out;
}

PowerVector shapley_oracle_permutations(const Graph& g, Measure m) {
    int n = g.n();
    if (n < 1 || n > 8) throw contract_error("permutation-form oracle handles 1 <= n <= 8");

    std::vector<long long> sum(static_cast<std::size_t>(n), 0);
    std::vector<int> perm(static_cast<std::size_t>(n));
    std::iota(perm.begin(), perm.end(), 0);
    long long count = 0;
    do {
        NodeSet prefix(n);
        long long before = 0; // w(empty) = p/q/v of the empty set
        {
            NodeSet empty(n);
            before = coalition_value(g, m, empty);
        }
        for (int node : perm) {
            prefix.set(node);
            long long after = coalition_value(g, m, prefix);
            sum[static_cast<std::size_t>(node)] += after - before;
            before = after;
        }
        ++count;
    } while (std::next_permutation(perm.begin(), perm.end()));

    PowerVector out;
    out.measure = m;
    out.score.assign(static_cast<std::size_t>(n), Rational(0));
    for (int i = 0; i < n; ++i)
        out.score[static_cast<std::size_t>(i)] = Rational(sum[static_cast<std::size_t>(i)], count);
    return out;
}

CoreReport core_check(const Graph& g, const PowerVector& pv, int samples, std::uint64_t seed) {
    if (pv.measure == Measure::q)
        throw contract_error("core_check applies to measures p and v");
    if (static_cast<int>(pv.score.size()) != g.n())
        throw contract_error("score vector does not match graph size");

    CoreReport report;
    auto check = [&](const NodeSet& t) {
        Rational alloc;
        t.for_each([&](int i) { alloc += pv.score[static_cast<std::size_t>(i)]; });
        long long demand = coalition_value(g, pv.measure, t);
        ++report.checked;
        if (alloc < demand && report.violations.size() < 16)
            report.violations.push_back({t, alloc, demand});
    };

    NodeSet all(g.n());
    for (int i = 0; i < g.n(); ++i) {
        NodeSet t(g.n());
        t.set(i);
        check(t);
        all.set(i);
    }
    check(all);
    if (g.n() <= 64) {
        for (int i = 0; i < g.n(); ++i)
            for (int j = i + 1; j < g.n(); ++j) {
                NodeSet t(g.n());
                t.set(i);
                t.set(j);
                check(t);
            }
    }

    Pcg32 rng(seed);
    for (int s = 0; s < samples; ++s) {
        NodeSet t(g.n());
        std::uint32_t chunk = 0;
        for (int i = 0; i < g.n(); ++i) {
            if (i % 32 == 0) chunk = rng.next();
            if (chunk & (1u << (i % 32))) t.set(i);
        }
        check(t);
    }
    return report;
}

} // namespace vulnet

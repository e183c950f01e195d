#include "vulnet/ilp.hpp"

#include <cassert>
#include <cctype>
#include <map>
#include <stdexcept>

namespace vulnet {

namespace {

std::string sanitize(const std::string& s) {
    std::string out;
    for (char ch : s) {
        unsigned char uc = static_cast<unsigned char>(ch);
        out += (std::isalnum(uc) || ch == '_') ? ch : '_';
    }
    if (out.empty()) out = "_";
    return out;
}

} // namespace

IlpModel build_model(const Graph& g) {
    if (g.n() == 0) throw contract_error("cannot build a model for the empty graph");
    const int n = g.n();
    IlpModel m;
    m.nodes = n;
    m.var_name.resize(2 * n);
    m.objective.resize(2 * n);
    m.integer_var.assign(2 * n, 0);

    // distinct variable names even when sanitized labels collide
    std::vector<std::string> base(n);
    std::map<std::string, int> used;
    for (int i = 0; i < n; ++i) {
        std::string s = sanitize(g.label(i));
        int seen = used[s]++;
        if (seen > 0) s += "_" + std::to_string(seen + 1);
        base[i] = s;
    }
    for (int i = 0; i < n; ++i) {
        m.var_name[i] = "x_" + base[i];
        m.var_name[n + i] = "y_" + base[i];
        m.objective[i] = 1;
        m.objective[n + i] = -1;
        m.integer_var[i] = 1;
    }

    auto edges = g.edges();
    for (std::size_t k = 0; k < edges.size(); ++k) {
        auto [i, j] = edges[k];
        IlpRow row;
        row.name = "e" + std::to_string(k + 1);
        row.terms = {{i, 1}, {j, 1}};
        row.sense = RowSense::le;
        row.rhs = 1;
        m.rows.push_back(std::move(row));
    }
    int s_id = 1;
    for (auto [i, j] : edges) {
        IlpRow a;
        a.name = "s" + std::to_string(s_id++);
        a.terms = {{n + j, 1}, {i, -1}};
        a.sense = RowSense::ge;
        a.rhs = 0;
        m.rows.push_back(std::move(a));
        IlpRow b;
        b.name = "s" + std::to_string(s_id++);
        b.terms = {{n + i, 1}, {j, -1}};
        b.sense = RowSense::ge;
        b.rhs = 0;
        m.rows.push_back(std::move(b));
    }
    IlpRow nonempty;
    nonempty.name = "nonempty";
    for (int i = 0; i < n; ++i) nonempty.terms.push_back({i, 1});
    nonempty.sense = RowSense::ge;
    nonempty.rhs = 1;
    m.rows.push_back(std::move(nonempty));
    return m;
}

namespace {

void write_terms(std::ostream& out, const IlpModel& m, const std::vector<IlpTerm>& terms) {
    bool first = true;
    for (const auto& t : terms) {
        if (t.coef == 0) continue;
        int mag = t.coef < 0 ? -t.coef : t.coef;
        if (first) {
            if (t.coef < 0) out << "- ";
        } else {
            out << (t.coef < 0 ? " - " : " + ");
        }
        if (mag != 1) out << mag << " ";
        out << m.var_name[t.col];
        first = false;
    }
    if (first) out << "0 " << m.var_name[0];
}

} // namespace

void export_lp(const IlpModel& m, std::ostream& out) {
    out << "\\ group vulnerability integer program\n";
    out << "Maximize\n obj: ";
    std::vector<IlpTerm> obj;
    for (int j = 0; j < 2 * m.nodes; ++j)
        if (m.objective[j] != 0) obj.push_back({j, m.objective[j]});
    write_terms(out, m, obj);
    out << "\nSubject To\n";
    for (const auto& row : m.rows) {
        out << " " << row.name << ": ";
        write_terms(out, m, row.terms);
        out << (row.sense == RowSense::le ? " <= " : " >= ") << row.rhs << "\n";
    }
    out << "Bounds\n";
    for (int j = 0; j < 2 * m.nodes; ++j)
        out << " 0 <= " << m.var_name[j] << " <= 1\n";
    out << "Generals\n";
    for (int j = 0; j < 2 * m.nodes; ++j)
        if (m.integer_var[j]) out << " " << m.var_name[j] << "\n";
    out << "End\n";
}

namespace {

// Dense tableau simplex over the rationals. Bland's rule on both the entering
// and the leaving choice, so it cannot cycle; exact arithmetic, so there is no
// tolerance anywhere. Sized for the tiny models this library builds.
struct Simplex {
    int nrows = 0;
    int ncols = 0;            // structural + slack + artificial
    int nstruct = 0;
    int first_artificial = 0; // columns past this never re-enter in phase two
    std::vector<std::vector<Rational>> a;
    std::vector<Rational> b;
    std::vector<int> basis;   // row -> basic column
    std::vector<char> active; // redundant rows get switched off after phase one
    std::vector<Rational> reduced;
    Rational objval;

    void pivot(int prow, int pcol) {
        Rational pv = a[prow][pcol];
        assert(pv != 0);
        for (auto& v : a[prow])
            if (v != 0) v /= pv;
        b[prow] /= pv;
        Rational f = reduced[pcol];
        if (f != 0) {
            for (int j = 0; j < ncols; ++j)
                if (a[prow][j] != 0) reduced[j] -= f * a[prow][j];
            objval += f * b[prow];
        }
        for (int r = 0; r < nrows; ++r) {
            if (r == prow || a[r][pcol] == 0) continue;
            Rational g = a[r][pcol];
            for (int j = 0; j < ncols; ++j)
                if (a[prow][j] != 0) a[r][j] -= g * a[prow][j];
            b[r] -= g * b[prow];
        }
        basis[prow] = pcol;
    }

    void load_objective(const std::vector<Rational>& c) {
        reduced = c;
        reduced.resize(ncols, Rational(0));
        objval = 0;
        // each tableau row is the identity on the basic columns, so the
        // original cost of basis[r] is what multiplies row r
        std::vector<Rational> orig = reduced;
        for (int r = 0; r < nrows; ++r) {
            if (!active[r]) continue;
            const Rational& cb = orig[basis[r]];
            if (cb == 0) continue;
            for (int j = 0; j < ncols; ++j)
                if (a[r][j] != 0) reduced[j] -= cb * a[r][j];
            objval += cb * b[r];
        }
    }

    // maximizes; returns false on an unbounded ray
    bool optimize(bool allow_artificial) {
        for (;;) {
            int enter = -1;
            int limit = allow_artificial ? ncols : first_artificial;
            for (int j = 0; j < limit; ++j) {
                if (reduced[j] > 0) {
                    enter = j;
                    break;
                }
            }
            if (enter < 0) return true;
            int leave = -1;
            Rational best;
            for (int r = 0; r < nrows; ++r) {
                if (!active[r] || a[r][enter] <= 0) continue;
                Rational ratio = b[r] / a[r][enter];
                if (leave < 0 || ratio < best ||
                    (ratio == best && basis[r] < basis[leave])) {
                    leave = r;
                    best = ratio;
                }
            }
            if (leave < 0) return false;
            pivot(leave, enter);
        }
    }
};

} // namespace

RelaxationSolution solve_relaxation(const IlpModel& m) {
    const int n = m.nodes;
    const int nstruct = 2 * n;

    // normalize every row to <= with the upper bounds appended as plain rows;
    // rows whose rhs ends up negative get flipped during tableau assembly
    struct NormRow {
        std::vector<IlpTerm> terms;
        int rhs;
    };
    std::vector<NormRow> rows;
    rows.reserve(m.rows.size() + nstruct);
    for (const auto& row : m.rows) {
        NormRow nr;
        nr.terms = row.terms;
        nr.rhs = row.rhs;
        if (row.sense == RowSense::ge) {
            for (auto& t : nr.terms) t.coef = -t.coef;
            nr.rhs = -nr.rhs;
        }
        rows.push_back(std::move(nr));
    }
    for (int j = 0; j < nstruct; ++j) rows.push_back({{{j, 1}}, 1});

    Simplex sx;
    sx.nrows = static_cast<int>(rows.size());
    sx.nstruct = nstruct;
    int nslack = sx.nrows;
    int nart = 0;
    for (const auto& r : rows)
        if (r.rhs < 0) ++nart;
    sx.first_artificial = nstruct + nslack;
    sx.ncols = sx.first_artificial + nart;
    sx.a.assign(sx.nrows, std::vector<Rational>(sx.ncols, Rational(0)));
    sx.b.assign(sx.nrows, Rational(0));
    sx.basis.assign(sx.nrows, -1);
    sx.active.assign(sx.nrows, 1);

    int art = sx.first_artificial;
    for (int r = 0; r < sx.nrows; ++r) {
        int sign = rows[r].rhs < 0 ? -1 : 1;
        for (const auto& t : rows[r].terms) sx.a[r][t.col] += Rational(sign * t.coef);
        sx.a[r][nstruct + r] = sign; // slack
        sx.b[r] = sign * rows[r].rhs;
        if (sign < 0) {
            sx.a[r][art] = 1;
            sx.basis[r] = art++;
        } else {
            sx.basis[r] = nstruct + r;
        }
    }

    if (nart > 0) {
        std::vector<Rational> phase1(sx.ncols, Rational(0));
        for (int j = sx.first_artificial; j < sx.ncols; ++j) phase1[j] = -1;
        sx.load_objective(phase1);
        if (!sx.optimize(true))
            throw std::logic_error("internal: phase one unbounded");
        if (sx.objval != 0)
            throw std::logic_error("internal: relaxation infeasible");
        for (int r = 0; r < sx.nrows; ++r) {
            if (sx.basis[r] < sx.first_artificial) continue;
            int pcol = -1;
            for (int j = 0; j < sx.first_artificial; ++j) {
                if (sx.a[r][j] != 0) {
                    pcol = j;
                    break;
                }
            }
            if (pcol >= 0)
                sx.pivot(r, pcol);
            else
                sx.active[r] = 0; // linearly dependent row
        }
    }

    std::vector<Rational> c(sx.ncols, Rational(0));
    for (int j = 0; j < nstruct; ++j) c[j] = m.objective[j];
    sx.load_objective(c);
    if (!sx.optimize(false))
        throw std::logic_error("internal: relaxation unbounded");

    std::vector<Rational> z(nstruct, Rational(0));
    for (int r = 0; r < sx.nrows; ++r)
        if (sx.active[r] && sx.basis[r] < nstruct) z[sx.basis[r]] = sx.b[r];

    RelaxationSolution sol;
    sol.x.assign(z.begin(), z.begin() + n);
    sol.y.assign(z.begin() + n, z.end());
    sol.objective = 0;
    for (int j = 0; j < nstruct; ++j) sol.objective += Rational(m.objective[j]) * z[j];
    if (sol.objective != sx.objval)
        throw std::logic_error("internal: simplex objective mismatch");

    // hard feasibility audit; models are small enough to always afford it
    for (int j = 0; j < nstruct; ++j)
        if (z[j] < 0 || z[j] > 1)
            throw std::logic_error("internal: relaxation variable out of bounds");
    for (const auto& row : m.rows) {
        Rational lhs = 0;
        for (const auto& t : row.terms) lhs += Rational(t.coef) * z[t.col];
        bool ok = row.sense == RowSense::le ? lhs <= row.rhs : lhs >= row.rhs;
        if (!ok) throw std::logic_error("internal: relaxation violates row " + row.name);
    }

    sol.x1 = NodeSet(n);
    for (int i = 0; i < n; ++i)
        if (sol.x[i] == 1) sol.x1.set(i);
    return sol;
}

std::optional<VulnerabilityResult> extract_integral(const Graph& g,
                                                    const RelaxationSolution& sol) {
    if (sol.objective < 0)
        throw contract_error("relaxation objective below zero: not an unpinned solution");
    if (sol.objective > 0) {
        // half-integrality: a positive optimum is achieved by an integral point
        // and the simplex lands on a vertex, so X1 must already realize it
        if (denominator(sol.objective) != 1)
            throw std::logic_error("internal: positive relaxation value is fractional");
        int value = numerator(sol.objective).convert_to<int>();
        if (sol.x1.empty() || !is_independent(g, sol.x1) ||
            vulnerability_of_set(g, sol.x1) != value)
            throw std::logic_error("internal: X1 does not realize a positive relaxation");
        VulnerabilityResult r;
        r.nu_bar = value;
        r.nu_hat = value;
        r.optimal_set = sol.x1;
        r.executioners = neighbors_of_set(g, r.optimal_set);
        r.method = Method::relaxation;
        return r;
    }
    // zero objective: nu_bar is 0 or negative; pinning x_i = 1 keeps the value
    // at 0 for some i exactly when a zero-vulnerability independent set exists
    IlpModel base = build_model(g);
    for (int i = 0; i < g.n(); ++i) {
        IlpModel pinned = base;
        IlpRow pin;
        pin.name = "pin";
        pin.terms = {{i, 1}};
        pin.sense = RowSense::ge;
        pin.rhs = 1;
        pinned.rows.push_back(std::move(pin));
        RelaxationSolution ps = solve_relaxation(pinned);
        if (ps.objective != 0) continue;
        if (ps.x1.empty() || !is_independent(g, ps.x1)) continue;
        if (vulnerability_of_set(g, ps.x1) != 0) continue;
        VulnerabilityResult r;
        r.nu_bar = 0;
        r.nu_hat = 0;
        r.optimal_set = ps.x1;
        r.executioners = neighbors_of_set(g, r.optimal_set);
        r.method = Method::relaxation;
        return r;
    }
    return std::nullopt;
}

} // namespace vulnet

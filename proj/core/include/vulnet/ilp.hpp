#pragma once

#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "vulnet/graph.hpp"
#include "vulnet/rational.hpp"
#include "vulnet/vulnerability.hpp"

namespace vulnet {

enum class RowSense { le, ge };

struct IlpTerm {
    int col = 0;
    int coef = 0;
};

struct IlpRow {
    std::string name;
    std::vector<IlpTerm> terms;
    RowSense sense = RowSense::le;
    int rhs = 0;
};

// max sum(x_i - y_i) over x_i + x_j <= 1 (edges), y_j >= x_i and y_i >= x_j
// (edges), sum x_i >= 1, all variables in [0,1], x integral
struct IlpModel {
    int nodes = 0; // x_i is column i, y_i is column nodes + i
    std::vector<std::string> var_name;
    std::vector<int> objective;    // one coefficient per column
    std::vector<char> integer_var; // marks the x block
    std::vector<IlpRow> rows;      // 3m + 1 rows; the [0,1] bounds live apart
};

IlpModel build_model(const Graph& g);

// CPLEX-style LP text: Maximize / Subject To / Bounds / Generals / End
void export_lp(const IlpModel& m, std::ostream& out);

struct RelaxationSolution {
    Rational objective;
    std::vector<Rational> x, y;
    NodeSet x1; // {i : x_i == 1}, exact comparison
};

// exact primal simplex (two phases, Bland's rule, rational arithmetic)
RelaxationSolution solve_relaxation(const IlpModel& m);

// objective > 0: X1 is an optimal set outright; objective == 0: re-solve with
// each x_i pinned to 1 in turn and verify the result combinatorially; nullopt
// when every pin fails, which certifies nu_bar < 0
std::optional<VulnerabilityResult> extract_integral(const Graph& g,
                                                    const RelaxationSolution& sol);

} // namespace vulnet

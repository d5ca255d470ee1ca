#pragma once

#include "flatnorm/rational.hpp"

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <utility>
#include <vector>

namespace flatnorm {

/**
 * Standard-form linear program: min c.x s.t. A x = b, x >= 0, with optional
 * per-variable upper bounds (realized internally as explicit slack rows, the
 * same construction the multiplicity-capped formulation uses). All data is
 * exact rational; the solver performs no floating-point arithmetic at all.
 */
struct LinearProgram {
    int num_rows = 0;
    int num_cols = 0;
    // A stored by columns: (row, value) with rows ascending per column.
    std::vector<std::vector<std::pair<int, Rational>>> cols;
    std::vector<Rational> rhs;
    std::vector<Rational> cost;
    std::vector<std::optional<Rational>> upper; // empty or per-column bound

    void add_column(const Rational& c, std::vector<std::pair<int, Rational>> entries);
    void validate() const;
};

enum class LpStatus { Optimal, Infeasible, Unbounded };

struct LpSolution {
    LpStatus status = LpStatus::Infeasible;
    std::vector<Rational> values;   // primal vertex (Optimal only)
    Rational objective;
    std::vector<int> basis;         // basic column indices of the final basis
    bool is_vertex = false;
    std::vector<Rational> duals;    // optimal: multipliers with c - A^T y >= 0
                                    // infeasible: Farkas certificate y (y.b > 0, y^T A <= 0)
    std::vector<Rational> ray;      // unbounded: improving direction
    std::int64_t iterations = 0;
};

struct LpOptions {
    // Feasible starting basis (column indices, one per row). Skips phase 1.
    std::optional<std::vector<int>> initial_basis;
};

struct IlpOptions {
    std::int64_t node_budget = 200000;
};

enum class IlpStatus { Optimal, Infeasible };

struct IlpSolution {
    IlpStatus status = IlpStatus::Infeasible;
    std::vector<Integer> values;
    Rational objective;
    std::int64_t node_count = 0;    // LP relaxations solved beyond the root
    bool proven_optimal = false;
};

/// Two-phase exact primal simplex. Every Optimal result is a basic feasible
/// solution whose dual multipliers are verified against the objective before
/// returning.
LpSolution solve_lp(const LinearProgram& P, const LpOptions& options = {});

/// LP-based branch and bound over the integer points of P, branching on the
/// most fractional variable, lower branch first, depth first with best-bound
/// pruning. Requires the objective to be bounded below on the relaxation.
/// When the node budget runs out with an incumbent in hand the incumbent is
/// returned with proven_optimal = false; with no incumbent at all the run
/// throws NodeBudgetExceeded.
IlpSolution solve_ilp(const LinearProgram& P, const IlpOptions& options = {});

/// Exact test that every value of an optimal solution has denominator 1.
/// Throws NotOptimal on non-optimal solutions.
bool is_integral(const LpSolution& sol);

/// Plain-text dump, one row per line: "c: <costs>", then "<coeffs> = <rhs>"
/// per row, then "ub: <bounds>" (inf for none). For cross-checks against
/// external solvers.
void dump_lp(const LinearProgram& P, std::ostream& out);

} // namespace flatnorm

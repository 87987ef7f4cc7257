#pragma once

#include "subtrop/condition.hpp"
#include "subtrop/system.hpp"

#include <optional>
#include <vector>

namespace subtrop {

// Conjunction of rows coeffs . n >= 1 over Q^dim.
struct ConjunctionSystem {
    std::size_t dim = 0;
    std::vector<std::vector<Exponent>> rows;
};

struct RationalModel {
    std::vector<BigRational> n;
    friend bool operator==(const RationalModel&, const RationalModel&) = default;
};

// Exact Fourier-Motzkin decision. Variables are eliminated from the last to
// the first; the model is rebuilt by back-substitution, taking the midpoint of
// each variable's interval. A half-open interval gives its finite end moved by 1
// into the interval, and an unbounded one gives 0.
// Returns nullopt when infeasible.
std::optional<RationalModel> solve_conjunction(const ConjunctionSystem& sys);

// Chronological backtracking over clauses in stored order, literals in stored
// order, pruning every partial conjunction that is infeasible. Returns the
// first model reached, or nullopt when the condition is unsatisfiable.
std::optional<RationalModel> solve_cnf(const LinearCondition& cond);

// Multiplies by the least common denominator of all coordinates.
ExponentSolution scale_to_integer(const RationalModel& model);

// Greedy per-coordinate move toward 0 that keeps every clause satisfied.
// Requires n to satisfy cond; the result satisfies cond and |result_l| <= |n_l|.
ExponentSolution shrink_solution(const LinearCondition& cond, ExponentSolution n);

} // namespace subtrop

#ifndef TOBL_LINPROG_HPP
#define TOBL_LINPROG_HPP

#include "tobl/rational.hpp"

#include <variant>
#include <vector>

namespace tobl {

// Standard-form program: maximize objective . x subject to A x = b, x >= 0.
// Callers convert inequalities by adding slack columns themselves.
struct LinearProgram {
    RVector objective;
    RMatrix constraints;  // A, row major
    RVector rhs;          // b

    std::size_t num_vars() const { return objective.size(); }
    std::size_t num_rows() const { return constraints.size(); }
};

struct LpOptimal {
    Rational value;
    RVector solution;
};

// Farkas witness: certificate . A <= 0 componentwise and certificate . b > 0.
struct LpInfeasible {
    RVector certificate;
};

struct LpUnbounded {};

using LpOutcome = std::variant<LpOptimal, LpInfeasible, LpUnbounded>;

// Exact two-phase simplex with Bland's pivot rule. Deterministic: identical
// inputs give identical outcomes. Throws std::invalid_argument on dimension
// mismatches.
LpOutcome solve(const LinearProgram& lp);

struct FeasiblePoint {
    RVector point;  // A x = b, x >= 0, exactly
};

using FeasibilityOutcome = std::variant<FeasiblePoint, LpInfeasible>;

// Feasibility of A x = b, x >= 0 (phase one only).
FeasibilityOutcome feasible(const RMatrix& constraints, const RVector& rhs);

// Exact residual checks, used by tests and by the solver's own postconditions.
bool check_solution(const RMatrix& constraints, const RVector& rhs, const RVector& x);
bool check_farkas(const RMatrix& constraints, const RVector& rhs, const RVector& y);

}  // namespace tobl

#endif

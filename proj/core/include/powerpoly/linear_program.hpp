#pragma once

#include <cstddef>
#include <vector>

#include "powerpoly/errors.hpp"
#include "powerpoly/rational.hpp"

namespace powerpoly {

enum class Sense { LessEqual, GreaterEqual, Equal };

struct LinearConstraint {
    RationalVector row;
    Sense sense = Sense::LessEqual;
    Rational rhs;
};

// Exact two-phase simplex over Q. Variables are free unless marked nonnegative.
struct LinearProgram {
    std::size_t nvars = 0;
    std::vector<LinearConstraint> constraints;
    std::vector<bool> nonnegative;  // empty means all free
    RationalVector objective;       // empty means feasibility only
    bool maximize = true;

    explicit LinearProgram(std::size_t n = 0) : nvars(n) {}
    void add(RationalVector row, Sense sense, Rational rhs) {
        constraints.push_back({std::move(row), sense, std::move(rhs)});
    }
};

enum class LPStatus { Optimal, Infeasible, Unbounded };

struct LPResult {
    LPStatus status = LPStatus::Infeasible;
    Rational value;
    RationalVector x;
};

LPResult solve(const LinearProgram& lp, StepBudget* budget = nullptr);

Rational dot(const RationalVector& a, const RationalVector& b);

}  // namespace powerpoly

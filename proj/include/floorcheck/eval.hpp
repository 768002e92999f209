#pragma once

#include <string>
#include <utility>
#include <vector>

#include "floorcheck/expr.hpp"
#include "floorcheck/interval.hpp"

namespace floorcheck {

enum class EvalFault {
    DivisionByZero,
    DomainError,      // even root of negative, NaN result
    UnboundVariable,
    FloorFracInIntervalEval, // precondition violation
};

struct eval_error : std::runtime_error {
    EvalFault fault;
    eval_error(EvalFault f, const std::string& what) : std::runtime_error(what), fault(f) {}
};

using PointBindings = std::vector<std::pair<std::string, double>>;
using BoxBindings = std::vector<std::pair<std::string, Interval>>;

// Point evaluation in doubles.  Floor(v) is the greatest integer <= v,
// Frac(v) = v - Floor(v) in [0,1) for any sign of v.
double eval_point(const Expr& e, const PointBindings& env);

// Interval evaluation.  Requires a Floor/Frac-free expression (branch
// specialization removes them); propagates enclosure_error for spanning-zero
// division and domain violations so the caller can subdivide.
Interval eval_interval(const Expr& e, const BoxBindings& env);

} // namespace floorcheck

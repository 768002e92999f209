#pragma once

#include <stdexcept>
#include <vector>

#include "floorcheck/expr.hpp"
#include "floorcheck/interval.hpp"

namespace floorcheck {

struct unsupported_node : std::runtime_error {
    explicit unsupported_node(const std::string& what) : std::runtime_error(what) {}
};

// Statement specialized to the branch x in [n, n+1): floor(x) -> n,
// frac(x) -> t, x -> n + t.  The result is smooth in t; only constant
// folding is applied afterwards, so the evaluator stays the single source
// of truth.
struct BranchProblem {
    long long n = 0;
    Statement stmt_t;        // over t (plus auxiliary parameters), no Floor/Frac
    bool t_lo_open = false;  // t = 0 excluded (x = n not in the theorem's domain)
    bool singular = false;   // structurally zero denominator after substitution
    bool singular_at_t0 = false; // a denominator vanishes as t -> 0: the sliver is singular
};

// Substitutes the branch index and fold constants.  Throws unsupported_node
// if a Floor/Frac wraps anything but the bare distinguished variable.
BranchProblem specialize_branch(const Statement& stmt, long long n,
                                const std::string& var = "x");

// Branch indices covering the statement's x-domain up to n_max:
//   x > 0  -> {0, ..., n_max}
//   x > 1  -> {1, ..., n_max} (branch 1 open at t = 0)
//   x in R -> {-n_max, ..., n_max}
std::vector<long long> branch_range(const Domain& domain, int n_max,
                                    const std::string& var = "x");

// [epsilon, 1 - epsilon] intersected with the branch's t-domain.
// Requires 0 < epsilon < 1/2.
Interval effective_t_domain(const BranchProblem& bp, double epsilon);

} // namespace floorcheck

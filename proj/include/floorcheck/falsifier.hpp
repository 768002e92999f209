#pragma once

#include <optional>
#include <string>
#include <vector>

#include "floorcheck/config.hpp"
#include "floorcheck/corpus.hpp"
#include "floorcheck/eval.hpp"
#include "floorcheck/piecewise.hpp"

namespace floorcheck {

// Signed margin: lhs - rhs for >=/&gt;, rhs - lhs for <=/<.  The statement
// holds at a point iff margin >= 0 (non-strict) or > 0 (strict).
double margin_point(const Statement& st, const PointBindings& env);

// max(1, |lhs|, |rhs|) at the point; witnesses must clear -tol * scale so
// cancellation in large branches cannot fake a violation.
double margin_scale(const Statement& st, const PointBindings& env);

// Oriented margin enclosure of a floor/frac-free statement over a box.
Interval margin_interval(const Statement& st, const BoxBindings& env);

struct Counterexample {
    long long branch = 0;
    double t = 0.0;
    double x = 0.0;                 // branch + t
    PointBindings aux;              // auxiliary parameter values
    double margin = 0.0;            // negative
    bool rigorous = false;          // interval re-check passed
};

struct ScanCandidate {
    double t = 0.0;
    double margin = 0.0;
    PointBindings aux;
};

// Uniform-grid margins over the effective t-domain of branch n, auxiliary
// parameters sampled (simplex for three symmetric positives, log grid for a
// single bounded-below parameter).  Returns grid-local minima sorted by
// margin, most negative first.  Singular grid points are skipped.
std::vector<ScanCandidate> scan_branch(const Statement& stmt, long long n, int grid_size,
                                       const RunConfig& config, int* singular_skipped = nullptr);

struct RefineResult {
    double t = 0.0;
    PointBindings aux;
    double margin = 0.0;
};

// Golden-section descent on t (coordinate descent over auxiliary parameters
// when present) from a scan candidate, until the bracket is below 1e-10.
// May converge to an effective-domain endpoint; the result is that endpoint
// sample, not a limit claim.
RefineResult refine(const Statement& stmt, long long n, double t0, const PointBindings& aux0,
                    const RunConfig& config);

// Full search over one statement version: scan + refine every branch, then
// re-check violations with point-interval arithmetic.  Returns the most
// negative rigorous witness, or nothing.
std::optional<Counterexample> falsify_statement(const Statement& stmt, const RunConfig& config);

struct FalsifyResult {
    std::optional<Counterexample> as_printed;
    std::optional<Counterexample> corrected; // when the record has one
};

FalsifyResult falsify(const TheoremRecord& rec, const RunConfig& config);

// --- shared sampling helpers (also used by certifier and derivation) ---

// Auxiliary parameters = domain variables other than x/t.
std::vector<VarConstraint> aux_constraints(const Statement& st);

// Deterministic parameter samples for search: includes the certification
// slice values plus seeded random fills.
std::vector<PointBindings> aux_search_samples(const Statement& st, int count, std::uint64_t seed);

// Fixed certification slices: a single bounded-below parameter a >= L gives
// {L, L+1, 10L}; three symmetric positives give {(1,1,1), (2,1,1), (1,2,3)}.
std::vector<std::vector<std::pair<std::string, Rational>>> aux_slices(const Statement& st);

// Substitute exact rational values for parameters and fold.
Statement substitute_params(const Statement& st,
                            const std::vector<std::pair<std::string, Rational>>& values);

} // namespace floorcheck

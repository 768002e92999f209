#pragma once

#include <optional>
#include <string>
#include <vector>

#include "floorcheck/config.hpp"
#include "floorcheck/corpus.hpp"
#include "floorcheck/falsifier.hpp"

namespace floorcheck {

enum class VerdictKind { Certified, Falsified, Undecided };

inline const char* verdict_name(VerdictKind k) {
    switch (k) {
        case VerdictKind::Certified: return "certified";
        case VerdictKind::Falsified: return "falsified";
        case VerdictKind::Undecided: return "undecided";
    }
    return "?";
}

struct UnresolvedInterval {
    double lo = 0.0, hi = 0.0;
    double margin_lo = 0.0, margin_hi = 0.0;
    std::string reason; // "indeterminate", "negative", "depth", "sliver", "budget"
};

struct CertifiedLeaf {
    double lo = 0.0, hi = 0.0;
    double margin_lo = 0.0;
};

// Outcome of adaptive bisection over one branch.  Never Falsified: a branch
// that cannot be accepted is Undecided and the falsifier owns disproof.
struct BranchCertificate {
    long long n = 0;
    bool singular = false;    // structurally zero denominator; branch excluded
    bool certified = false;
    double margin_lower_bound = std::numeric_limits<double>::quiet_NaN(); // min accepted lo
    double min_point_margin = std::numeric_limits<double>::quiet_NaN();   // tightest sampled value
    double min_point_t = std::numeric_limits<double>::quiet_NaN();
    std::vector<std::pair<double, double>> certified_intervals; // merged accepted leaves
    std::vector<CertifiedLeaf> leaves;                          // capped, for spot checks
    std::vector<UnresolvedInterval> unresolved;                 // capped
    long long unresolved_count = 0;
    std::vector<std::string> exclusions; // epsilon slivers, singular notes
    long long nodes_used = 0;
};

struct IntegerProbe {
    long long x = 0;
    bool excluded = false; // evaluation raised division-by-zero / domain error
    double margin = 0.0;
};

struct SliceVerdict {
    std::vector<std::pair<std::string, Rational>> params; // empty when no parameters
    VerdictKind kind = VerdictKind::Undecided;
    std::vector<BranchCertificate> branches;
    double margin_lower_bound = std::numeric_limits<double>::quiet_NaN();
    bool tail_samples_ok = true;
    std::vector<std::string> notes;
};

// Verdict for ONE statement version (printed and corrected verdicts are kept
// separate by the caller).
struct Verdict {
    VerdictKind kind = VerdictKind::Undecided;
    bool slice_certified = false; // parameters fixed to slices, not searched
    std::vector<SliceVerdict> slices;
    std::vector<IntegerProbe> integer_probes;
    bool tail_samples_ok = true;
    double margin_lower_bound = std::numeric_limits<double>::quiet_NaN();
    std::optional<Counterexample> witness; // attached from the falsifier
    std::vector<std::string> notes;
};

// Bisect one branch of a parameter-free statement.
BranchCertificate certify_branch(const Statement& stmt, long long n, const RunConfig& config);

// Certify one statement version: all branches over branch_range, per
// parameter slice, plus integer-point probes and tail-branch sampling
// (point evaluation only, never part of the certified region).
Verdict certify_statement(const Statement& stmt, const RunConfig& config);

struct CertifyResult {
    Verdict as_printed;
    std::optional<Verdict> corrected;
};

CertifyResult certify(const TheoremRecord& rec, const RunConfig& config);

// Margins of the original statement at integer x (negative integers too for
// real-line domains); points whose evaluation divides by zero are excluded.
std::vector<IntegerProbe> probe_integer_points(const TheoremRecord& rec, int n_max);
std::vector<IntegerProbe> probe_integer_points_statement(const Statement& st, int n_max);

} // namespace floorcheck

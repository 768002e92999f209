#include "floorcheck/certifier.hpp"

#include <algorithm>
#include <cmath>
#include <queue>

namespace floorcheck {

namespace {

constexpr long long kNodeBudget = 400000; // enclosure evaluations per branch
constexpr long long kStallNodes = 6000;   // no accept/reject by then => bail
constexpr double kTightenRel = 1e-3;      // lower-bound refinement target
constexpr int kTightenBudget = 4000;
constexpr size_t kMaxStoredLeaves = 8192;
constexpr size_t kMaxStoredUnresolved = 16;
// Leaves whose whole enclosure sits this close to zero are equality cases:
// outward arithmetic can never lift their lower bound above 0, so splitting
// them further is wasted work.
constexpr double kEqualityStopMargin = 1e-11;
constexpr double kEqualityStopWidth = 1e-5;

struct Leaf {
    double lo, hi;
    double mlo, mhi;
    int depth;
    bool known; // margin enclosure computed (false => must split)
};

struct WorstFirst {
    bool operator()(const Leaf& a, const Leaf& b) const {
        double ka = a.known ? a.mlo : -std::numeric_limits<double>::infinity();
        double kb = b.known ? b.mlo : -std::numeric_limits<double>::infinity();
        if (ka != kb) return ka > kb; // priority_queue: top = smallest mlo
        return a.lo > b.lo;
    }
};

std::optional<Interval> margin_box(const Statement& st, double lo, double hi) {
    BoxBindings box;
    box.emplace_back("t", Interval(lo, hi));
    try {
        return margin_interval(st, box);
    } catch (const enclosure_error&) {
        return std::nullopt;
    } catch (const eval_error&) {
        return std::nullopt;
    }
}

void merge_intervals(std::vector<std::pair<double, double>>& xs) {
    std::sort(xs.begin(), xs.end());
    std::vector<std::pair<double, double>> out;
    for (const auto& iv : xs) {
        if (!out.empty() && iv.first <= out.back().second * (1 + 1e-15) + 1e-300)
            out.back().second = std::max(out.back().second, iv.second);
        else
            out.push_back(iv);
    }
    xs = std::move(out);
}

} // namespace

BranchCertificate certify_branch(const Statement& stmt, long long n, const RunConfig& config) {
    BranchCertificate cert;
    cert.n = n;

    BranchProblem bp = specialize_branch(stmt, n);
    if (bp.singular) {
        cert.singular = true;
        cert.exclusions.push_back("branch " + std::to_string(n) +
                                  ": singular (division by a structurally zero denominator)");
        return cert;
    }
    Interval dom = effective_t_domain(bp, config.epsilon);
    const bool strict = relation_strict(stmt.rel);
    const Statement& st = bp.stmt_t;

    cert.exclusions.push_back(
        std::string(bp.singular_at_t0 ? "singular slivers" : "boundary slivers") +
        " t in (0, eps) and (1-eps, 1), eps = " + std::to_string(config.epsilon));

    // track the tightest point evaluation seen (an upper bound for the true
    // branch minimum; also the reported "observed margin" for the branch)
    auto sample_point = [&](double t) {
        PointBindings env{{"t", t}};
        try {
            double m = margin_point(st, env);
            if (!std::isnan(m) && (std::isnan(cert.min_point_margin) || m < cert.min_point_margin)) {
                cert.min_point_margin = m;
                cert.min_point_t = t;
            }
        } catch (const eval_error&) {
        }
    };
    for (int i = 0; i <= 64; ++i) sample_point(dom.lo + (dom.hi - dom.lo) * i / 64.0);

    std::priority_queue<Leaf, std::vector<Leaf>, WorstFirst> queue;
    std::vector<Leaf> accepted;
    std::vector<UnresolvedInterval> unresolved;
    long long unresolved_total = 0;
    long long negatives = 0;
    bool budget_exhausted = false;
    bool stalled = false;

    auto record_unresolved = [&](const Leaf& f, const char* reason) {
        ++unresolved_total;
        if (unresolved.size() < kMaxStoredUnresolved)
            unresolved.push_back(UnresolvedInterval{f.lo, f.hi, f.mlo, f.mhi, reason});
    };

    // classify immediately: accepted and certainly-negative leaves never
    // enter the queue, so the queue holds only straddling work
    auto classify = [&](double lo, double hi, int depth) {
        ++cert.nodes_used;
        auto m = margin_box(st, lo, hi);
        Leaf f{lo, hi, 0.0, 0.0, depth, m.has_value()};
        if (m) {
            f.mlo = m->lo;
            f.mhi = m->hi;
            if (strict ? (f.mlo > 0.0) : (f.mlo >= 0.0)) {
                accepted.push_back(f);
                return;
            }
            if (strict ? (f.mhi <= 0.0) : (f.mhi < 0.0)) {
                // certainly violated here; disproof is the falsifier's job
                ++negatives;
                record_unresolved(f, "negative");
                return;
            }
            if (f.mhi < kEqualityStopMargin && hi - lo < kEqualityStopWidth) {
                record_unresolved(f, "equality");
                return;
            }
        }
        if (hi - lo < config.min_width) {
            record_unresolved(f, "sliver");
            return;
        }
        if (depth >= config.max_depth) {
            record_unresolved(f, "depth");
            return;
        }
        queue.push(f);
    };

    classify(dom.lo, dom.hi, 0);
    while (!queue.empty()) {
        if (cert.nodes_used >= kNodeBudget) {
            budget_exhausted = true;
            break;
        }
        if (cert.nodes_used >= kStallNodes && accepted.empty() && negatives == 0) {
            stalled = true; // enclosures straddle zero everywhere; no progress possible
            break;
        }
        Leaf f = queue.top();
        queue.pop();
        double mid = 0.5 * (f.lo + f.hi);
        sample_point(mid);
        classify(f.lo, mid, f.depth + 1);
        classify(mid, f.hi, f.depth + 1);
    }

    // whatever was still queued when we bailed is unresolved
    while (!queue.empty()) {
        record_unresolved(queue.top(), budget_exhausted ? "budget" : (stalled ? "stall" : "open"));
        queue.pop();
    }

    cert.unresolved = unresolved;
    cert.unresolved_count = unresolved_total;
    cert.certified = (unresolved_total == 0) && !accepted.empty();
    if (!cert.certified) {
        for (const auto& f : accepted) {
            if (cert.leaves.size() < kMaxStoredLeaves)
                cert.leaves.push_back(CertifiedLeaf{f.lo, f.hi, f.mlo});
            cert.certified_intervals.emplace_back(f.lo, f.hi);
        }
        merge_intervals(cert.certified_intervals);
        return cert;
    }

    // Lower-bound tightening: the acceptance pass stops at lo >= 0, which can
    // leave the reported bound far below the true branch minimum.  Keep
    // splitting the worst accepted leaf until it approaches the best point
    // sample.
    std::priority_queue<Leaf, std::vector<Leaf>, WorstFirst> tq(WorstFirst{}, accepted);
    std::vector<Leaf> done;
    int tighten_used = 0;
    while (!tq.empty() && tighten_used < kTightenBudget) {
        Leaf f = tq.top();
        double target_gap = std::max(1e-9, kTightenRel * std::fabs(cert.min_point_margin));
        if (!(cert.min_point_margin - f.mlo > target_gap)) break;
        if (f.hi - f.lo < config.min_width) break;
        tq.pop();
        ++tighten_used;
        double mid = 0.5 * (f.lo + f.hi);
        sample_point(mid);
        for (auto [lo, hi] : {std::pair{f.lo, mid}, std::pair{mid, f.hi}}) {
            auto m = margin_box(st, lo, hi);
            if (!m) { // should not happen on an accepted leaf; keep the parent bound
                tq.push(Leaf{lo, hi, f.mlo, f.mhi, f.depth + 1, true});
                continue;
            }
            tq.push(Leaf{lo, hi, m->lo, m->hi, f.depth + 1, true});
        }
    }
    while (!tq.empty()) {
        done.push_back(tq.top());
        tq.pop();
    }

    double min_lo = std::numeric_limits<double>::infinity();
    for (const auto& f : done) {
        min_lo = std::min(min_lo, f.mlo);
        if (cert.leaves.size() < kMaxStoredLeaves)
            cert.leaves.push_back(CertifiedLeaf{f.lo, f.hi, f.mlo});
        cert.certified_intervals.emplace_back(f.lo, f.hi);
    }
    merge_intervals(cert.certified_intervals);
    cert.margin_lower_bound = min_lo;
    return cert;
}

namespace {

std::vector<long long> tail_branches(const Domain& dom) {
    const VarConstraint* xc = dom.find("x");
    std::vector<long long> out = {100, 1000, 10000, 1000000};
    if (xc && xc->real_line) {
        std::vector<long long> both;
        for (long long n : out) {
            both.push_back(n);
            both.push_back(-n);
        }
        return both;
    }
    return out;
}

} // namespace

Verdict certify_statement(const Statement& stmt, const RunConfig& config) {
    Verdict v;
    auto slices = aux_slices(stmt);
    v.slice_certified = !aux_constraints(stmt).empty();

    for (const auto& slice : slices) {
        SliceVerdict sv;
        sv.params = slice;
        Statement sliced = substitute_params(stmt, slice);

        bool all_ok = true;
        bool any_certified = false;
        double min_lo = std::numeric_limits<double>::infinity();
        for (long long n : branch_range(stmt.domain, config.n_max)) {
            BranchCertificate bc = certify_branch(sliced, n, config);
            if (bc.singular) {
                sv.notes.push_back("branch " + std::to_string(n) + " singular, excluded");
            } else if (bc.certified) {
                any_certified = true;
                min_lo = std::min(min_lo, bc.margin_lower_bound);
            } else {
                all_ok = false;
            }
            sv.branches.push_back(std::move(bc));
        }
        sv.kind = (all_ok && any_certified) ? VerdictKind::Certified : VerdictKind::Undecided;
        if (any_certified) sv.margin_lower_bound = min_lo;

        // tail branches: sampled pointwise, reported but never certified
        for (long long n : tail_branches(stmt.domain)) {
            BranchProblem bp;
            try {
                bp = specialize_branch(sliced, n);
            } catch (const unsupported_node&) {
                continue;
            }
            if (bp.singular) continue;
            for (int j = 0; j < 64; ++j) {
                double t = (j + 0.5) / 64.0;
                PointBindings env{{"t", t}};
                try {
                    double m = margin_point(bp.stmt_t, env);
                    double scale = margin_scale(bp.stmt_t, env);
                    if (m < -config.tol_f * scale) {
                        sv.tail_samples_ok = false;
                        break;
                    }
                } catch (const eval_error&) {
                }
            }
            if (!sv.tail_samples_ok) break;
        }
        v.slices.push_back(std::move(sv));
    }

    bool all_slices = true;
    double min_lo = std::numeric_limits<double>::infinity();
    v.tail_samples_ok = true;
    for (const auto& sv : v.slices) {
        if (sv.kind != VerdictKind::Certified) all_slices = false;
        if (!std::isnan(sv.margin_lower_bound)) min_lo = std::min(min_lo, sv.margin_lower_bound);
        if (!sv.tail_samples_ok) v.tail_samples_ok = false;
    }
    v.kind = all_slices ? VerdictKind::Certified : VerdictKind::Undecided;
    if (std::isfinite(min_lo)) v.margin_lower_bound = min_lo;
    return v;
}

namespace {

std::vector<IntegerProbe> probe_integer_points_of(const Statement& st, int n_max) {
    std::vector<IntegerProbe> out;
    const VarConstraint* xc = st.domain.find("x");
    long long lo = 1, hi = n_max;
    if (xc && xc->real_line) lo = -n_max;
    if (xc && xc->lower) {
        Rational l = *xc->lower;
        long long first = l.floor();
        if (Rational(first) < l || xc->lower_strict) ++first;
        lo = std::max(lo, first);
    }
    auto slices = aux_slices(st);
    const auto& aux = slices.front();

    for (long long m = lo; m <= hi; ++m) {
        IntegerProbe p;
        p.x = m;
        if (xc && xc->exclude_integers) {
            p.excluded = true;
            out.push_back(p);
            continue;
        }
        PointBindings env{{"x", static_cast<double>(m)}};
        for (const auto& [name, v] : aux) env.emplace_back(name, v.to_double());
        try {
            p.margin = margin_point(st, env);
            if (std::isnan(p.margin)) p.excluded = true;
        } catch (const eval_error&) {
            p.excluded = true;
        }
        out.push_back(p);
    }
    return out;
}

} // namespace

std::vector<IntegerProbe> probe_integer_points_statement(const Statement& st, int n_max) {
    return probe_integer_points_of(st, n_max);
}

std::vector<IntegerProbe> probe_integer_points(const TheoremRecord& rec, int n_max) {
    return probe_integer_points_of(rec.as_printed, n_max);
}

CertifyResult certify(const TheoremRecord& rec, const RunConfig& config) {
    CertifyResult res;
    res.as_printed = certify_statement(rec.as_printed, config);
    res.as_printed.integer_probes = probe_integer_points_of(rec.as_printed, config.n_max);
    if (rec.corrected) {
        res.corrected = certify_statement(*rec.corrected, config);
        res.corrected->integer_probes = probe_integer_points_of(*rec.corrected, config.n_max);
    }
    return res;
}

} // namespace floorcheck

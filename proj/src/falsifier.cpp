#include "floorcheck/falsifier.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "floorcheck/rng.hpp"

namespace floorcheck {

namespace {

bool oriented_left_minus_right(Relation rel) {
    return rel == Relation::GE || rel == Relation::GT;
}

} // namespace

double margin_point(const Statement& st, const PointBindings& env) {
    double l = eval_point(st.lhs, env);
    double r = eval_point(st.rhs, env);
    return oriented_left_minus_right(st.rel) ? l - r : r - l;
}

double margin_scale(const Statement& st, const PointBindings& env) {
    double l = std::fabs(eval_point(st.lhs, env));
    double r = std::fabs(eval_point(st.rhs, env));
    return std::max(1.0, std::max(l, r));
}

Interval margin_interval(const Statement& st, const BoxBindings& env) {
    Interval l = eval_interval(st.lhs, env);
    Interval r = eval_interval(st.rhs, env);
    return oriented_left_minus_right(st.rel) ? l - r : r - l;
}

std::vector<VarConstraint> aux_constraints(const Statement& st) {
    std::vector<VarConstraint> out;
    for (const auto& vc : st.domain.vars)
        if (vc.name != "x" && vc.name != "t") out.push_back(vc);
    return out;
}

std::vector<std::vector<std::pair<std::string, Rational>>> aux_slices(const Statement& st) {
    auto aux = aux_constraints(st);
    std::vector<std::vector<std::pair<std::string, Rational>>> out;
    if (aux.empty()) {
        out.push_back({});
        return out;
    }
    if (aux.size() == 1) {
        Rational lb = aux[0].lower ? *aux[0].lower : Rational(1);
        if (aux[0].lower_strict || lb < Rational(1)) lb = Rational(1);
        out.push_back({{aux[0].name, lb}});
        out.push_back({{aux[0].name, lb + Rational(1)}});
        out.push_back({{aux[0].name, lb * Rational(10)}});
        return out;
    }
    // symmetric positive triple
    std::vector<std::vector<Rational>> presets = {
        {Rational(1), Rational(1), Rational(1)},
        {Rational(2), Rational(1), Rational(1)},
        {Rational(1), Rational(2), Rational(3)},
    };
    for (const auto& p : presets) {
        std::vector<std::pair<std::string, Rational>> slice;
        for (size_t i = 0; i < aux.size(); ++i)
            slice.emplace_back(aux[i].name, p[i % p.size()]);
        out.push_back(std::move(slice));
    }
    return out;
}

std::vector<PointBindings> aux_search_samples(const Statement& st, int count, std::uint64_t seed) {
    auto aux = aux_constraints(st);
    std::vector<PointBindings> out;
    if (aux.empty()) {
        out.push_back({});
        return out;
    }
    for (const auto& slice : aux_slices(st)) {
        PointBindings pb;
        for (const auto& [name, v] : slice) pb.emplace_back(name, v.to_double());
        out.push_back(std::move(pb));
    }
    Rng rng(seed);
    if (aux.size() == 1) {
        // log grid over [L, 64 L]
        double lo = aux[0].lower ? aux[0].lower->to_double() : 1.0;
        if (lo <= 0.0) lo = 1.0;
        int k = std::max(2, count);
        for (int i = 0; i < k; ++i) {
            double a = lo * std::pow(64.0, static_cast<double>(i) / (k - 1));
            out.push_back({{aux[0].name, a}});
        }
        return out;
    }
    // unit-simplex samples for a homogeneous symmetric triple
    for (int i = 0; i < count; ++i) {
        double e1 = -std::log(1.0 - rng.next_double());
        double e2 = -std::log(1.0 - rng.next_double());
        double e3 = -std::log(1.0 - rng.next_double());
        double s = e1 + e2 + e3;
        PointBindings pb;
        double vals[3] = {e1 / s, e2 / s, e3 / s};
        for (size_t j = 0; j < aux.size(); ++j) pb.emplace_back(aux[j].name, std::max(vals[j % 3], 1e-9));
        out.push_back(std::move(pb));
    }
    return out;
}

Statement substitute_params(const Statement& st,
                            const std::vector<std::pair<std::string, Rational>>& values) {
    if (values.empty()) return st;
    struct Subst {
        const std::vector<std::pair<std::string, Rational>>& vals;
        Expr apply(const Expr& e) const {
            if (e.kind == NodeKind::Var) {
                for (const auto& [name, v] : vals)
                    if (name == e.var) return Expr::constant(v);
                return e;
            }
            Expr out = e;
            for (auto& a : out.args) a = apply(a);
            return out;
        }
    } subst{values};
    Statement out = st;
    out.lhs = fold_constants(subst.apply(st.lhs));
    out.rhs = fold_constants(subst.apply(st.rhs));
    Domain d;
    for (const auto& vc : st.domain.vars) {
        bool replaced = false;
        for (const auto& [name, v] : values)
            if (vc.name == name) replaced = true;
        if (!replaced) d.vars.push_back(vc);
    }
    out.domain = d;
    return out;
}

namespace {

struct BranchContext {
    BranchProblem bp;
    double t_lo = 0.0;
    double t_hi = 0.0;
    bool usable = false;
};

BranchContext make_branch(const Statement& stmt, long long n, const RunConfig& config) {
    BranchContext ctx;
    ctx.bp = specialize_branch(stmt, n);
    if (ctx.bp.singular) return ctx;
    Interval dom = effective_t_domain(ctx.bp, config.epsilon);
    ctx.t_lo = dom.lo;
    ctx.t_hi = dom.hi;
    ctx.usable = true;
    return ctx;
}

std::optional<double> try_margin(const Statement& st, PointBindings& env) {
    try {
        double m = margin_point(st, env);
        if (std::isnan(m)) return std::nullopt;
        return m;
    } catch (const eval_error&) {
        return std::nullopt;
    }
}

PointBindings with_t(const PointBindings& aux, double t) {
    PointBindings env = aux;
    env.emplace_back("t", t);
    return env;
}

} // namespace

std::vector<ScanCandidate> scan_branch(const Statement& stmt, long long n, int grid_size,
                                       const RunConfig& config, int* singular_skipped) {
    if (grid_size < 16) throw std::invalid_argument("grid size must be >= 16");
    std::vector<ScanCandidate> out;
    BranchContext ctx = make_branch(stmt, n, config);
    if (singular_skipped) *singular_skipped = 0;
    if (!ctx.usable) return out;

    std::uint64_t seed = derive_seed(config.seed, "scan", n, 0);
    auto aux_sets = aux_search_samples(ctx.bp.stmt_t, 16, seed);

    for (const auto& aux : aux_sets) {
        std::vector<double> margins(grid_size, std::numeric_limits<double>::quiet_NaN());
        std::vector<double> ts(grid_size);
        for (int i = 0; i < grid_size; ++i) {
            double t = ctx.t_lo + (ctx.t_hi - ctx.t_lo) * i / (grid_size - 1);
            ts[i] = t;
            PointBindings env = with_t(aux, t);
            auto m = try_margin(ctx.bp.stmt_t, env);
            if (!m) {
                if (singular_skipped) ++*singular_skipped;
                continue;
            }
            margins[i] = *m;
        }
        for (int i = 0; i < grid_size; ++i) {
            if (std::isnan(margins[i])) continue;
            double left = (i > 0 && !std::isnan(margins[i - 1])) ? margins[i - 1]
                                                                 : std::numeric_limits<double>::infinity();
            double right = (i + 1 < grid_size && !std::isnan(margins[i + 1]))
                               ? margins[i + 1]
                               : std::numeric_limits<double>::infinity();
            if (margins[i] <= left && margins[i] <= right)
                out.push_back(ScanCandidate{ts[i], margins[i], aux});
        }
    }
    std::sort(out.begin(), out.end(), [](const ScanCandidate& a, const ScanCandidate& b) {
        if (a.margin != b.margin) return a.margin < b.margin;
        return a.t < b.t;
    });
    return out;
}

namespace {

constexpr double kGolden = 0.6180339887498949;

// Golden-section minimization of f over [lo, hi]; singular evaluations are
// treated as +infinity so the search slides away from them.
template <typename F>
double golden_section(F&& f, double lo, double hi, double width_tol) {
    double a = lo, b = hi;
    double x1 = b - kGolden * (b - a);
    double x2 = a + kGolden * (b - a);
    double f1 = f(x1), f2 = f(x2);
    while (b - a > width_tol) {
        if (f1 <= f2) {
            b = x2;
            x2 = x1;
            f2 = f1;
            x1 = b - kGolden * (b - a);
            f1 = f(x1);
        } else {
            a = x1;
            x1 = x2;
            f1 = f2;
            x2 = a + kGolden * (b - a);
            f2 = f(x2);
        }
    }
    // pick the best endpoint of the final bracket
    double best_t = a;
    double best = f(a);
    for (double cand : {x1, x2, b}) {
        double v = f(cand);
        if (v < best) {
            best = v;
            best_t = cand;
        }
    }
    return best_t;
}

} // namespace

RefineResult refine(const Statement& stmt, long long n, double t0, const PointBindings& aux0,
                    const RunConfig& config) {
    BranchContext ctx = make_branch(stmt, n, config);
    RefineResult res;
    res.t = t0;
    res.aux = aux0;
    res.margin = std::numeric_limits<double>::infinity();
    if (!ctx.usable) return res;

    auto eval_at = [&](double t, const PointBindings& aux) {
        PointBindings env = with_t(aux, t);
        auto m = try_margin(ctx.bp.stmt_t, env);
        return m ? *m : std::numeric_limits<double>::infinity();
    };

    double step = (ctx.t_hi - ctx.t_lo) / std::max(16, config.grid_size - 1);
    double t = std::clamp(t0, ctx.t_lo, ctx.t_hi);
    PointBindings aux = aux0;

    const int rounds = aux.empty() ? 1 : 3;
    for (int round = 0; round < rounds; ++round) {
        double lo = std::max(ctx.t_lo, t - 2.0 * step);
        double hi = std::min(ctx.t_hi, t + 2.0 * step);
        t = golden_section([&](double tt) { return eval_at(tt, aux); }, lo, hi, 1e-10);
        // widen once toward the domain ends in case the minimum sits at a boundary
        if (t <= lo + 4e-10 || t >= hi - 4e-10)
            t = golden_section([&](double tt) { return eval_at(tt, aux); }, ctx.t_lo, ctx.t_hi, 1e-10);

        for (auto& [name, value] : aux) {
            double plo = std::max(1e-6, value / 8.0);
            double phi = value * 8.0;
            // honor a declared lower bound on the parameter
            for (const auto& vc : aux_constraints(ctx.bp.stmt_t)) {
                if (vc.name == name && vc.lower) plo = std::max(plo, vc.lower->to_double());
            }
            PointBindings trial = aux;
            double best = golden_section(
                [&](double v) {
                    for (auto& [tn, tv] : trial)
                        if (tn == name) tv = v;
                    return eval_at(t, trial);
                },
                plo, std::max(phi, plo * (1.0 + 1e-9)), 1e-10);
            value = best;
        }
    }

    res.t = t;
    res.aux = aux;
    res.margin = eval_at(t, aux);
    return res;
}

namespace {

std::optional<Counterexample> rigorous_check(const Statement& stmt, long long n, double t,
                                             const PointBindings& aux, double margin) {
    BranchProblem bp = specialize_branch(stmt, n);
    if (bp.singular) return std::nullopt;
    BoxBindings box;
    box.emplace_back("t", Interval(t, t));
    for (const auto& [name, v] : aux) box.emplace_back(name, Interval(v, v));
    Counterexample ce;
    ce.branch = n;
    ce.t = t;
    ce.x = static_cast<double>(n) + t;
    ce.aux = aux;
    ce.margin = margin;
    try {
        Interval m = margin_interval(bp.stmt_t, box);
        bool strict = relation_strict(stmt.rel);
        ce.rigorous = strict ? (m.hi <= 0.0) : (m.hi < 0.0);
    } catch (const enclosure_error&) {
        ce.rigorous = false;
    }
    if (!ce.rigorous) return std::nullopt;
    return ce;
}

} // namespace

std::optional<Counterexample> falsify_statement(const Statement& stmt, const RunConfig& config) {
    std::optional<Counterexample> best;
    for (long long n : branch_range(stmt.domain, config.n_max)) {
        auto candidates = scan_branch(stmt, n, config.grid_size, config);
        int examined = 0;
        for (const auto& cand : candidates) {
            if (examined >= 12) break;
            if (cand.margin >= 0.0 && examined >= 4) break;
            ++examined;
            RefineResult r = refine(stmt, n, cand.t, cand.aux, config);
            double use_margin = std::min(r.margin, cand.margin);
            double use_t = r.margin <= cand.margin ? r.t : cand.t;
            const PointBindings& use_aux = r.margin <= cand.margin ? r.aux : cand.aux;
            if (!std::isfinite(use_margin)) continue;

            BranchProblem bp = specialize_branch(stmt, n);
            PointBindings env = use_aux;
            env.emplace_back("t", use_t);
            double scale;
            try {
                scale = margin_scale(bp.stmt_t, env);
            } catch (const eval_error&) {
                continue;
            }
            if (use_margin >= -config.tol_f * scale) continue;
            auto ce = rigorous_check(stmt, n, use_t, use_aux, use_margin);
            if (ce && (!best || ce->margin < best->margin)) best = ce;
        }
    }
    return best;
}

FalsifyResult falsify(const TheoremRecord& rec, const RunConfig& config) {
    FalsifyResult out;
    out.as_printed = falsify_statement(rec.as_printed, config);
    if (rec.corrected) out.corrected = falsify_statement(*rec.corrected, config);
    return out;
}

} // namespace floorcheck

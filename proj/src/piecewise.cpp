#include "floorcheck/piecewise.hpp"

#include "floorcheck/eval.hpp"

namespace floorcheck {

namespace {

Expr substitute_branch(const Expr& e, long long n, const std::string& var) {
    switch (e.kind) {
        case NodeKind::Floor:
        case NodeKind::Frac: {
            const Expr& arg = e.args[0];
            if (arg.kind != NodeKind::Var || arg.var != var)
                throw unsupported_node("floor/frac of a non-variable expression");
            if (e.kind == NodeKind::Floor) return Expr::constant(Rational(n));
            return Expr::variable("t");
        }
        case NodeKind::Var:
            if (e.var == var) {
                if (n == 0) return Expr::variable("t");
                return Expr::binary(NodeKind::Add, Expr::constant(Rational(n)), Expr::variable("t"));
            }
            return e;
        default: {
            Expr out = e;
            for (auto& a : out.args) a = substitute_branch(a, n, var);
            return out;
        }
    }
}

} // namespace

BranchProblem specialize_branch(const Statement& stmt, long long n, const std::string& var) {
    BranchProblem bp;
    bp.n = n;

    Statement st;
    st.lhs = fold_constants(substitute_branch(stmt.lhs, n, var));
    st.rhs = fold_constants(substitute_branch(stmt.rhs, n, var));
    st.rel = stmt.rel;

    const VarConstraint* xc = stmt.domain.find(var);
    bool exclude_int = xc && xc->exclude_integers;
    bool at_lower = false;
    if (xc && xc->lower && xc->lower_strict) {
        // x > L excludes x = n exactly when n equals the bound
        at_lower = (*xc->lower == Rational(n));
    }
    bp.t_lo_open = exclude_int || at_lower;

    VarConstraint tc;
    tc.name = "t";
    tc.lower = Rational(0);
    tc.lower_strict = bp.t_lo_open;
    tc.upper = Rational(1);
    tc.upper_strict = true;
    st.domain.vars.push_back(tc);
    for (const auto& vc : stmt.domain.vars)
        if (vc.name != var) st.domain.vars.push_back(vc);

    bp.stmt_t = std::move(st);
    bp.singular = has_structural_zero_denominator(bp.stmt_t.lhs) ||
                  has_structural_zero_denominator(bp.stmt_t.rhs);

    // a probe at t = 0 tells whether the left sliver is singular (e.g. a bare
    // frac(x) denominator) or merely unexplored
    if (!bp.singular) {
        PointBindings env{{"t", 0.0}};
        for (const auto& vc : bp.stmt_t.domain.vars) {
            if (vc.name == "t") continue;
            env.emplace_back(vc.name, vc.lower ? vc.lower->to_double() + 1.0 : 1.0);
        }
        for (const Expr* side : {&bp.stmt_t.lhs, &bp.stmt_t.rhs}) {
            try {
                (void)eval_point(*side, env);
            } catch (const eval_error& e) {
                if (e.fault == EvalFault::DivisionByZero) bp.singular_at_t0 = true;
            }
        }
    }
    return bp;
}

std::vector<long long> branch_range(const Domain& domain, int n_max, const std::string& var) {
    if (n_max < 1) throw std::invalid_argument("n_max must be >= 1");
    const VarConstraint* xc = domain.find(var);
    if (!xc) throw std::invalid_argument("domain does not declare '" + var + "'");
    std::vector<long long> out;
    if (xc->real_line) {
        for (long long n = -n_max; n <= n_max; ++n) out.push_back(n);
        return out;
    }
    // x > L with integral L: the branch [L, L+1) still meets the domain on
    // (L, L+1), so it stays; branches below floor(L) are empty.
    long long first = xc->lower ? xc->lower->floor() : 0;
    for (long long n = first; n <= n_max; ++n) out.push_back(n);
    return out;
}

Interval effective_t_domain(const BranchProblem& bp, double epsilon) {
    (void)bp;
    if (!(epsilon > 0.0 && epsilon < 0.5))
        throw std::invalid_argument("epsilon must lie in (0, 1/2)");
    return Interval(epsilon, 1.0 - epsilon);
}

} // namespace floorcheck

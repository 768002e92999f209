#include "floorcheck/expr.hpp"

#include <algorithm>

namespace floorcheck {

bool operator==(const Expr& a, const Expr& b) {
    if (a.kind != b.kind || a.k != b.k) return false;
    switch (a.kind) {
        case NodeKind::Const:
            if (a.value != b.value) return false;
            break;
        case NodeKind::Var:
            if (a.var != b.var) return false;
            break;
        default:
            break;
    }
    if (a.args.size() != b.args.size()) return false;
    for (size_t i = 0; i < a.args.size(); ++i)
        if (!(a.args[i] == b.args[i])) return false;
    return true;
}

namespace {

void collect_vars_into(const Expr& e, std::vector<std::string>& out) {
    if (e.kind == NodeKind::Var) {
        if (std::find(out.begin(), out.end(), e.var) == out.end()) out.push_back(e.var);
        return;
    }
    for (const auto& a : e.args) collect_vars_into(a, out);
}

bool all_const(const Expr& e) {
    for (const auto& a : e.args)
        if (a.kind != NodeKind::Const) return false;
    return true;
}

bool is_const_zero(const Expr& e) { return e.kind == NodeKind::Const && e.value.is_zero(); }
bool is_const_one(const Expr& e) { return e.kind == NodeKind::Const && e.value == Rational(1); }

// Exact k-th root of a rational if numerator and denominator are both
// perfect k-th powers of nonnegative integers (covers 0 and 1, which is what
// branch specialization actually produces).
std::optional<Rational> exact_root(const Rational& r, int k) {
    if (r.is_negative() && k % 2 == 0) return std::nullopt;
    auto iroot = [](std::int64_t v, int k) -> std::optional<std::int64_t> {
        if (v < 0) return std::nullopt;
        std::int64_t lo = 0, hi = 3037000498; // floor(sqrt(INT64_MAX))
        while (lo < hi) {
            std::int64_t mid = lo + (hi - lo + 1) / 2;
            __int128 p = 1;
            bool over = false;
            for (int i = 0; i < k; ++i) {
                p *= mid;
                if (p > INT64_MAX) {
                    over = true;
                    break;
                }
            }
            if (!over && p <= v)
                lo = mid;
            else
                hi = mid - 1;
        }
        __int128 p = 1;
        for (int i = 0; i < k; ++i) p *= lo;
        if (p == v) return lo;
        return std::nullopt;
    };
    bool neg = r.is_negative();
    std::int64_t n = neg ? -r.num() : r.num();
    auto rn = iroot(n, k);
    auto rd = iroot(r.den(), k);
    if (!rn || !rd) return std::nullopt;
    Rational out(*rn, *rd);
    return neg ? -out : out;
}

} // namespace

std::vector<std::string> collect_vars(const Expr& e) {
    std::vector<std::string> out;
    collect_vars_into(e, out);
    return out;
}

bool contains_floor_frac(const Expr& e) {
    if (e.kind == NodeKind::Floor || e.kind == NodeKind::Frac) return true;
    for (const auto& a : e.args)
        if (contains_floor_frac(a)) return true;
    return false;
}

bool has_nonvar_floor_frac(const Expr& e) {
    if (e.kind == NodeKind::Floor || e.kind == NodeKind::Frac) {
        if (e.args[0].kind != NodeKind::Var) return true;
    }
    for (const auto& a : e.args)
        if (has_nonvar_floor_frac(a)) return true;
    return false;
}

Expr fold_constants(const Expr& e) {
    Expr out = e;
    for (auto& a : out.args) a = fold_constants(a);

    auto c = [&](size_t i) { return out.args[i].value; };

    try {
        switch (out.kind) {
            case NodeKind::Const:
            case NodeKind::Var:
                return out;
            case NodeKind::Add:
                if (all_const(out)) return Expr::constant(c(0) + c(1));
                if (is_const_zero(out.args[0])) return out.args[1];
                if (is_const_zero(out.args[1])) return out.args[0];
                return out;
            case NodeKind::Sub:
                if (all_const(out)) return Expr::constant(c(0) - c(1));
                if (is_const_zero(out.args[1])) return out.args[0];
                return out;
            case NodeKind::Mul:
                if (is_const_zero(out.args[0]) || is_const_zero(out.args[1]))
                    return Expr::constant(Rational(0));
                if (all_const(out)) return Expr::constant(c(0) * c(1));
                if (is_const_one(out.args[0])) return out.args[1];
                if (is_const_one(out.args[1])) return out.args[0];
                return out;
            case NodeKind::Div:
                // never folds a zero numerator away: the denominator may
                // itself vanish somewhere, and singularity checks need it
                if (all_const(out) && !c(1).is_zero()) return Expr::constant(c(0) / c(1));
                if (is_const_one(out.args[1])) return out.args[0];
                return out;
            case NodeKind::Neg:
                if (all_const(out)) return Expr::constant(-c(0));
                return out;
            case NodeKind::Pow:
                if (out.k == 0) return Expr::constant(Rational(1));
                if (out.k == 1) return out.args[0];
                if (all_const(out)) return Expr::constant(c(0).pow(out.k));
                return out;
            case NodeKind::Root:
                if (all_const(out)) {
                    if (auto r = exact_root(c(0), out.k)) return Expr::constant(*r);
                }
                return out;
            case NodeKind::Abs: {
                if (all_const(out)) {
                    Rational v = c(0);
                    return Expr::constant(v.is_negative() ? -v : v);
                }
                return out;
            }
            case NodeKind::Floor:
                if (all_const(out)) return Expr::constant(Rational(c(0).floor()));
                return out;
            case NodeKind::Frac:
                if (all_const(out)) return Expr::constant(c(0) - Rational(c(0).floor()));
                return out;
            case NodeKind::Min:
            case NodeKind::Max: {
                if (all_const(out)) {
                    Rational best = c(0);
                    for (size_t i = 1; i < out.args.size(); ++i) {
                        if (out.kind == NodeKind::Min ? c(i) < best : c(i) > best) best = c(i);
                    }
                    return Expr::constant(best);
                }
                return out;
            }
            case NodeKind::Exp:
            case NodeKind::Sin:
            case NodeKind::Cos:
                return out; // transcendental, never folded
        }
    } catch (const rational_overflow&) {
        return out;
    }
    return out;
}

bool has_structural_zero_denominator(const Expr& e) {
    if (e.kind == NodeKind::Div && is_const_zero(e.args[1])) return true;
    for (const auto& a : e.args)
        if (has_structural_zero_denominator(a)) return true;
    return false;
}

namespace {

bool contains_kind(const Expr& e, NodeKind kind) {
    if (e.kind == kind) return true;
    for (const auto& a : e.args)
        if (contains_kind(a, kind)) return true;
    return false;
}

} // namespace

bool kind_in_denominator(const Expr& e, NodeKind kind) {
    if (e.kind == NodeKind::Div && contains_kind(e.args[1], kind)) return true;
    for (const auto& a : e.args)
        if (kind_in_denominator(a, kind)) return true;
    return false;
}

} // namespace floorcheck

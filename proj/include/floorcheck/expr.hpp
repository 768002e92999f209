#pragma once

#include <optional>
#include <string>
#include <vector>

#include "floorcheck/rational.hpp"

namespace floorcheck {

enum class NodeKind {
    Const, // exact rational
    Var,
    Add,
    Sub,
    Mul,
    Div,
    Neg,
    Pow,  // integer exponent k >= 0
    Root, // k in {2,3,4}
    Abs,
    Exp,
    Sin,
    Cos,
    Min, // n-ary, n >= 2
    Max,
    Floor,
    Frac,
};

// Immutable value-semantic expression tree.  Constants are exact rationals
// so corpus constants like 4/15 or 11/48 survive round trips bit-for-bit.
struct Expr {
    NodeKind kind = NodeKind::Const;
    Rational value;       // Const
    std::string var;      // Var
    int k = 0;            // Pow exponent / Root index
    std::vector<Expr> args;

    static Expr constant(Rational r) {
        Expr e;
        e.kind = NodeKind::Const;
        e.value = r;
        return e;
    }
    static Expr variable(std::string name) {
        Expr e;
        e.kind = NodeKind::Var;
        e.var = std::move(name);
        return e;
    }
    static Expr unary(NodeKind kind, Expr a) {
        Expr e;
        e.kind = kind;
        e.args.push_back(std::move(a));
        return e;
    }
    static Expr binary(NodeKind kind, Expr a, Expr b) {
        Expr e;
        e.kind = kind;
        e.args.push_back(std::move(a));
        e.args.push_back(std::move(b));
        return e;
    }
    static Expr nary(NodeKind kind, std::vector<Expr> xs) {
        Expr e;
        e.kind = kind;
        e.args = std::move(xs);
        return e;
    }
    static Expr power(Expr base, int k) {
        Expr e = unary(NodeKind::Pow, std::move(base));
        e.k = k;
        return e;
    }
    static Expr nth_root(Expr arg, int k) {
        Expr e = unary(NodeKind::Root, std::move(arg));
        e.k = k;
        return e;
    }
};

bool operator==(const Expr& a, const Expr& b);
inline bool operator!=(const Expr& a, const Expr& b) { return !(a == b); }

enum class Relation { GE, GT, LE, LT };

inline bool relation_strict(Relation r) { return r == Relation::GT || r == Relation::LT; }

// Per-variable domain constraint.  Either the whole real line, or a lower
// bound (open/closed) with optional upper bound; exclude_integers models
// "x notin Z".
struct VarConstraint {
    std::string name;
    bool real_line = false;
    std::optional<Rational> lower;
    bool lower_strict = false;
    std::optional<Rational> upper;
    bool upper_strict = false;
    bool exclude_integers = false;

    bool operator==(const VarConstraint&) const = default;
};

struct Domain {
    std::vector<VarConstraint> vars; // declaration order preserved

    const VarConstraint* find(const std::string& name) const {
        for (const auto& v : vars)
            if (v.name == name) return &v;
        return nullptr;
    }
    bool operator==(const Domain&) const = default;
};

struct Statement {
    Expr lhs;
    Expr rhs;
    Relation rel = Relation::GE;
    Domain domain;

    bool operator==(const Statement&) const = default;
};

// --- tree utilities ---

// All variable names appearing in the expression, each once.
std::vector<std::string> collect_vars(const Expr& e);

bool contains_floor_frac(const Expr& e);

// Floor/Frac nodes whose argument is not a bare variable (corpus statements
// forbid those; specialization cannot handle them).
bool has_nonvar_floor_frac(const Expr& e);

// Constant folding only, no algebraic rewriting: exact rational arithmetic
// on all-constant subtrees, plus the zero/one unit rules (0*e, e+0, e*1,
// e/1, e^0, e^1).  Division is never folded away from a zero numerator so
// singular denominators stay visible.
Expr fold_constants(const Expr& e);

// True if some Div node in the (folded) tree has a denominator that is the
// literal constant 0.
bool has_structural_zero_denominator(const Expr& e);

// True if `sub` occurs inside a denominator position somewhere in e.
bool kind_in_denominator(const Expr& e, NodeKind kind);

} // namespace floorcheck

#include "floorcheck/eval.hpp"

#include <cmath>
#include <limits>

namespace floorcheck {

namespace {

double check_finite_or_inf(double v) {
    if (std::isnan(v)) throw eval_error(EvalFault::DomainError, "NaN in point evaluation");
    return v;
}

} // namespace

double eval_point(const Expr& e, const PointBindings& env) {
    switch (e.kind) {
        case NodeKind::Const:
            return e.value.to_double();
        case NodeKind::Var:
            for (const auto& [name, v] : env)
                if (name == e.var) return v;
            throw eval_error(EvalFault::UnboundVariable, "unbound variable '" + e.var + "'");
        case NodeKind::Add:
            return check_finite_or_inf(eval_point(e.args[0], env) + eval_point(e.args[1], env));
        case NodeKind::Sub:
            return check_finite_or_inf(eval_point(e.args[0], env) - eval_point(e.args[1], env));
        case NodeKind::Mul:
            return check_finite_or_inf(eval_point(e.args[0], env) * eval_point(e.args[1], env));
        case NodeKind::Div: {
            double num = eval_point(e.args[0], env);
            double den = eval_point(e.args[1], env);
            if (den == 0.0) throw eval_error(EvalFault::DivisionByZero, "division by zero");
            return check_finite_or_inf(num / den);
        }
        case NodeKind::Neg:
            return -eval_point(e.args[0], env);
        case NodeKind::Pow: {
            double b = eval_point(e.args[0], env);
            double acc = 1.0;
            for (int i = 0; i < e.k; ++i) acc *= b;
            return check_finite_or_inf(acc);
        }
        case NodeKind::Root: {
            double v = eval_point(e.args[0], env);
            if (e.k == 3) return std::cbrt(v);
            if (v < 0.0) throw eval_error(EvalFault::DomainError, "even root of negative value");
            double r = std::sqrt(v);
            if (e.k == 4) r = std::sqrt(r);
            return r;
        }
        case NodeKind::Abs:
            return std::fabs(eval_point(e.args[0], env));
        case NodeKind::Exp:
            return std::exp(eval_point(e.args[0], env));
        case NodeKind::Sin:
            return std::sin(eval_point(e.args[0], env));
        case NodeKind::Cos:
            return std::cos(eval_point(e.args[0], env));
        case NodeKind::Min: {
            double best = eval_point(e.args[0], env);
            for (size_t i = 1; i < e.args.size(); ++i)
                best = std::min(best, eval_point(e.args[i], env));
            return best;
        }
        case NodeKind::Max: {
            double best = eval_point(e.args[0], env);
            for (size_t i = 1; i < e.args.size(); ++i)
                best = std::max(best, eval_point(e.args[i], env));
            return best;
        }
        case NodeKind::Floor:
            return std::floor(eval_point(e.args[0], env));
        case NodeKind::Frac: {
            double v = eval_point(e.args[0], env);
            return v - std::floor(v);
        }
    }
    throw eval_error(EvalFault::DomainError, "unreachable node kind");
}

Interval eval_interval(const Expr& e, const BoxBindings& env) {
    switch (e.kind) {
        case NodeKind::Const: {
            // exact when the rational is an integer below 2^53; otherwise the
            // conversion rounds once, covered by a 1-ulp widening
            double v = e.value.to_double();
            if (e.value.is_integer() && std::fabs(v) < 9007199254740992.0)
                return Interval(v, v);
            return Interval(std::nextafter(v, -std::numeric_limits<double>::infinity()),
                            std::nextafter(v, std::numeric_limits<double>::infinity()));
        }
        case NodeKind::Var:
            for (const auto& [name, iv] : env)
                if (name == e.var) return iv;
            throw eval_error(EvalFault::UnboundVariable, "unbound variable '" + e.var + "'");
        case NodeKind::Add:
            return eval_interval(e.args[0], env) + eval_interval(e.args[1], env);
        case NodeKind::Sub:
            return eval_interval(e.args[0], env) - eval_interval(e.args[1], env);
        case NodeKind::Mul:
            return eval_interval(e.args[0], env) * eval_interval(e.args[1], env);
        case NodeKind::Div:
            return eval_interval(e.args[0], env) / eval_interval(e.args[1], env);
        case NodeKind::Neg:
            return -eval_interval(e.args[0], env);
        case NodeKind::Pow:
            return pow(eval_interval(e.args[0], env), e.k);
        case NodeKind::Root:
            return root(eval_interval(e.args[0], env), e.k);
        case NodeKind::Abs:
            return abs(eval_interval(e.args[0], env));
        case NodeKind::Exp:
            return exp(eval_interval(e.args[0], env));
        case NodeKind::Sin:
            return sin(eval_interval(e.args[0], env));
        case NodeKind::Cos:
            return cos(eval_interval(e.args[0], env));
        case NodeKind::Min: {
            std::vector<Interval> xs;
            xs.reserve(e.args.size());
            for (const auto& a : e.args) xs.push_back(eval_interval(a, env));
            return min(std::span<const Interval>(xs));
        }
        case NodeKind::Max: {
            std::vector<Interval> xs;
            xs.reserve(e.args.size());
            for (const auto& a : e.args) xs.push_back(eval_interval(a, env));
            return max(std::span<const Interval>(xs));
        }
        case NodeKind::Floor:
        case NodeKind::Frac:
            throw eval_error(EvalFault::FloorFracInIntervalEval,
                             "interval evaluation requires a floor/frac-free expression");
    }
    throw eval_error(EvalFault::DomainError, "unreachable node kind");
}

} // namespace floorcheck

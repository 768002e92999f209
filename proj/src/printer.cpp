#include "floorcheck/printer.hpp"

#include <sstream>

namespace floorcheck {

namespace {

// Grammar precedence levels: 1 add/sub, 2 mul/div, 3 unary minus,
// 4 power, 5 atom.
int precedence(const Expr& e) {
    switch (e.kind) {
        case NodeKind::Add:
        case NodeKind::Sub:
            return 1;
        case NodeKind::Mul:
        case NodeKind::Div:
            return 2;
        case NodeKind::Neg:
            return 3;
        case NodeKind::Pow:
            return 4;
        case NodeKind::Const:
            // "4/15" re-lexes as a division, "-5" as a unary minus
            if (!e.value.is_integer()) return 2;
            if (e.value.is_negative()) return 3;
            return 5;
        default:
            return 5;
    }
}

const char* function_name(const Expr& e) {
    switch (e.kind) {
        case NodeKind::Root:
            return e.k == 2 ? "sqrt" : (e.k == 3 ? "cbrt" : "root4");
        case NodeKind::Abs: return "abs";
        case NodeKind::Exp: return "exp";
        case NodeKind::Sin: return "sin";
        case NodeKind::Cos: return "cos";
        case NodeKind::Min: return "min";
        case NodeKind::Max: return "max";
        case NodeKind::Floor: return "floor";
        case NodeKind::Frac: return "frac";
        default: return "";
    }
}

void print_rec(std::ostream& os, const Expr& e, int min_prec) {
    bool parens = precedence(e) < min_prec;
    if (parens) os << '(';
    switch (e.kind) {
        case NodeKind::Const:
            os << e.value.str();
            break;
        case NodeKind::Var:
            os << e.var;
            break;
        case NodeKind::Add:
            print_rec(os, e.args[0], 1);
            os << " + ";
            print_rec(os, e.args[1], 2);
            break;
        case NodeKind::Sub:
            print_rec(os, e.args[0], 1);
            os << " - ";
            print_rec(os, e.args[1], 2);
            break;
        case NodeKind::Mul:
            print_rec(os, e.args[0], 2);
            os << '*';
            print_rec(os, e.args[1], 3);
            break;
        case NodeKind::Div:
            print_rec(os, e.args[0], 2);
            os << '/';
            print_rec(os, e.args[1], 3);
            break;
        case NodeKind::Neg:
            os << '-';
            print_rec(os, e.args[0], 4);
            break;
        case NodeKind::Pow:
            print_rec(os, e.args[0], 5);
            os << '^' << e.k;
            break;
        default: {
            os << function_name(e) << '(';
            for (size_t i = 0; i < e.args.size(); ++i) {
                if (i) os << ", ";
                print_rec(os, e.args[i], 1);
            }
            os << ')';
            break;
        }
    }
    if (parens) os << ')';
}

} // namespace

std::string print_expr(const Expr& e) {
    std::ostringstream os;
    print_rec(os, e, 1);
    return os.str();
}

std::string print_domain(const Domain& d) {
    std::ostringstream os;
    bool first = true;
    for (const auto& vc : d.vars) {
        auto sep = [&] {
            if (!first) os << ", ";
            first = false;
        };
        if (vc.real_line) {
            sep();
            os << vc.name << " in R";
        }
        if (vc.lower) {
            sep();
            os << vc.name << (vc.lower_strict ? ">" : ">=") << vc.lower->str();
        }
        if (vc.exclude_integers) {
            sep();
            os << vc.name << " notin Z";
        }
    }
    return os.str();
}

std::string print_statement(const Statement& st) {
    std::ostringstream os;
    os << print_expr(st.lhs);
    switch (st.rel) {
        case Relation::GE: os << " >= "; break;
        case Relation::GT: os << " > "; break;
        case Relation::LE: os << " <= "; break;
        case Relation::LT: os << " < "; break;
    }
    os << print_expr(st.rhs);
    os << " on " << print_domain(st.domain);
    return os.str();
}

} // namespace floorcheck

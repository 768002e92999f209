#include "floorcheck/parser.hpp"

#include <cctype>
#include <map>

namespace floorcheck {

namespace {

enum class Tok { End, Ident, Number, Plus, Minus, Star, Slash, Caret, LParen, RParen, Comma, Ge, Le, Gt, Lt };

struct Token {
    Tok kind = Tok::End;
    std::size_t offset = 0;
    std::string text;     // Ident
    Rational number;      // Number
    bool number_is_int = false;
};

const char* tok_name(Tok t) {
    switch (t) {
        case Tok::End: return "end of input";
        case Tok::Ident: return "identifier";
        case Tok::Number: return "number";
        case Tok::Plus: return "'+'";
        case Tok::Minus: return "'-'";
        case Tok::Star: return "'*'";
        case Tok::Slash: return "'/'";
        case Tok::Caret: return "'^'";
        case Tok::LParen: return "'('";
        case Tok::RParen: return "')'";
        case Tok::Comma: return "','";
        case Tok::Ge: return "'>='";
        case Tok::Le: return "'<='";
        case Tok::Gt: return "'>'";
        case Tok::Lt: return "'<'";
    }
    return "?";
}

class Lexer {
  public:
    explicit Lexer(std::string_view s) : s_(s) { advance(); }

    const Token& cur() const { return cur_; }

    void advance() {
        while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
        cur_ = Token{};
        cur_.offset = pos_;
        if (pos_ >= s_.size()) {
            cur_.kind = Tok::End;
            return;
        }
        char c = s_[pos_];
        switch (c) {
            case '+': cur_.kind = Tok::Plus; ++pos_; return;
            case '-': cur_.kind = Tok::Minus; ++pos_; return;
            case '*': cur_.kind = Tok::Star; ++pos_; return;
            case '/': cur_.kind = Tok::Slash; ++pos_; return;
            case '^': cur_.kind = Tok::Caret; ++pos_; return;
            case '(': cur_.kind = Tok::LParen; ++pos_; return;
            case ')': cur_.kind = Tok::RParen; ++pos_; return;
            case ',': cur_.kind = Tok::Comma; ++pos_; return;
            case '>':
                ++pos_;
                if (pos_ < s_.size() && s_[pos_] == '=') { ++pos_; cur_.kind = Tok::Ge; }
                else cur_.kind = Tok::Gt;
                return;
            case '<':
                ++pos_;
                if (pos_ < s_.size() && s_[pos_] == '=') { ++pos_; cur_.kind = Tok::Le; }
                else cur_.kind = Tok::Lt;
                return;
            default: break;
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            lex_number();
            return;
        }
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            std::size_t start = pos_;
            while (pos_ < s_.size() &&
                   (std::isalnum(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '_'))
                ++pos_;
            cur_.kind = Tok::Ident;
            cur_.text = std::string(s_.substr(start, pos_ - start));
            return;
        }
        throw ParseError(pos_, std::string("unexpected character '") + c + "'");
    }

  private:
    void lex_number() {
        std::size_t start = pos_;
        while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
        bool is_decimal = false;
        std::int64_t int_part = 0, frac_part = 0;
        int frac_digits = 0;
        for (std::size_t i = start; i < pos_; ++i) int_part = int_part * 10 + (s_[i] - '0');
        if (pos_ < s_.size() && s_[pos_] == '.' && pos_ + 1 < s_.size() &&
            std::isdigit(static_cast<unsigned char>(s_[pos_ + 1]))) {
            is_decimal = true;
            ++pos_;
            while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) {
                frac_part = frac_part * 10 + (s_[pos_] - '0');
                ++frac_digits;
                ++pos_;
            }
        }
        int exponent = 0;
        if (pos_ < s_.size() && (s_[pos_] == 'e' || s_[pos_] == 'E')) {
            std::size_t save = pos_;
            ++pos_;
            int sign = 1;
            if (pos_ < s_.size() && (s_[pos_] == '+' || s_[pos_] == '-')) {
                if (s_[pos_] == '-') sign = -1;
                ++pos_;
            }
            if (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) {
                is_decimal = true;
                int ev = 0;
                while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) {
                    ev = ev * 10 + (s_[pos_] - '0');
                    ++pos_;
                }
                exponent = sign * ev;
            } else {
                pos_ = save; // not an exponent, e.g. identifier following
            }
        }
        cur_.kind = Tok::Number;
        cur_.offset = start;
        if (!is_decimal) {
            cur_.number = Rational(int_part);
            cur_.number_is_int = true;
            return;
        }
        Rational value(int_part);
        if (frac_digits > 0) {
            Rational scale(1);
            for (int i = 0; i < frac_digits; ++i) scale = scale * Rational(10);
            value = value + Rational(frac_part) / scale;
        }
        if (exponent > 0)
            for (int i = 0; i < exponent; ++i) value = value * Rational(10);
        else
            for (int i = 0; i < -exponent; ++i) value = value / Rational(10);
        cur_.number = value;
        cur_.number_is_int = false;
    }

    std::string_view s_;
    std::size_t pos_ = 0;
    Token cur_;
};

NodeKind function_kind(const std::string& name, int& k) {
    k = 0;
    if (name == "floor") return NodeKind::Floor;
    if (name == "frac") return NodeKind::Frac;
    if (name == "sqrt") { k = 2; return NodeKind::Root; }
    if (name == "cbrt") { k = 3; return NodeKind::Root; }
    if (name == "root4") { k = 4; return NodeKind::Root; }
    if (name == "abs") return NodeKind::Abs;
    if (name == "exp") return NodeKind::Exp;
    if (name == "sin") return NodeKind::Sin;
    if (name == "cos") return NodeKind::Cos;
    if (name == "min") return NodeKind::Min;
    if (name == "max") return NodeKind::Max;
    k = -1;
    return NodeKind::Var;
}

class Parser {
  public:
    explicit Parser(std::string_view text) : lex_(text) {}

    Expr parse_expr_all() {
        Expr e = expr();
        expect(Tok::End);
        return e;
    }

    Statement parse_statement_all() {
        Statement st;
        st.lhs = expr();
        switch (lex_.cur().kind) {
            case Tok::Ge: st.rel = Relation::GE; break;
            case Tok::Gt: st.rel = Relation::GT; break;
            case Tok::Le: st.rel = Relation::LE; break;
            case Tok::Lt: st.rel = Relation::LT; break;
            default:
                throw ParseError(lex_.cur().offset,
                                 std::string("expected relation '>=', '<=', '>' or '<', found ") +
                                     tok_name(lex_.cur().kind));
        }
        lex_.advance();
        st.rhs = expr();
        if (lex_.cur().kind != Tok::Ident || lex_.cur().text != "on")
            throw ParseError(lex_.cur().offset, "expected 'on' before domain");
        lex_.advance();
        st.domain = domain();
        expect(Tok::End);

        for (const auto& [name, off] : var_offsets_) {
            if (!st.domain.find(name))
                throw ParseError(off, "undeclared variable '" + name + "'");
        }
        return st;
    }

  private:
    void expect(Tok t) {
        if (lex_.cur().kind != t)
            throw ParseError(lex_.cur().offset, std::string("expected ") + tok_name(t) + ", found " +
                                                    tok_name(lex_.cur().kind));
        if (t != Tok::End) lex_.advance();
    }

    Expr expr() {
        Expr lhs = term();
        for (;;) {
            if (lex_.cur().kind == Tok::Plus) {
                lex_.advance();
                lhs = Expr::binary(NodeKind::Add, std::move(lhs), term());
            } else if (lex_.cur().kind == Tok::Minus) {
                lex_.advance();
                lhs = Expr::binary(NodeKind::Sub, std::move(lhs), term());
            } else {
                return lhs;
            }
        }
    }

    Expr term() {
        Expr lhs = unary();
        for (;;) {
            if (lex_.cur().kind == Tok::Star) {
                lex_.advance();
                lhs = Expr::binary(NodeKind::Mul, std::move(lhs), unary());
            } else if (lex_.cur().kind == Tok::Slash) {
                lex_.advance();
                Expr rhs = unary();
                // collapse rational literals: "4/15" is one constant
                if (lhs.kind == NodeKind::Const && rhs.kind == NodeKind::Const &&
                    !rhs.value.is_zero()) {
                    lhs = Expr::constant(lhs.value / rhs.value);
                } else {
                    lhs = Expr::binary(NodeKind::Div, std::move(lhs), std::move(rhs));
                }
            } else {
                return lhs;
            }
        }
    }

    Expr unary() {
        if (lex_.cur().kind == Tok::Minus) {
            lex_.advance();
            Expr f = factor();
            if (f.kind == NodeKind::Const) return Expr::constant(-f.value);
            return Expr::unary(NodeKind::Neg, std::move(f));
        }
        return factor();
    }

    Expr factor() {
        Expr a = atom();
        if (lex_.cur().kind == Tok::Caret) {
            lex_.advance();
            if (lex_.cur().kind != Tok::Number || !lex_.cur().number_is_int)
                throw ParseError(lex_.cur().offset, "expected nonnegative integer exponent");
            int k = static_cast<int>(lex_.cur().number.num());
            lex_.advance();
            return Expr::power(std::move(a), k);
        }
        return a;
    }

    Expr atom() {
        const Token& t = lex_.cur();
        if (t.kind == Tok::Number) {
            Expr e = Expr::constant(t.number);
            lex_.advance();
            return e;
        }
        if (t.kind == Tok::LParen) {
            lex_.advance();
            Expr e = expr();
            expect(Tok::RParen);
            return e;
        }
        if (t.kind == Tok::Ident) {
            std::string name = t.text;
            std::size_t off = t.offset;
            lex_.advance();
            if (lex_.cur().kind == Tok::LParen) {
                int k = 0;
                NodeKind kind = function_kind(name, k);
                if (k == -1 && kind == NodeKind::Var)
                    throw ParseError(off, "unknown function '" + name + "'");
                lex_.advance();
                std::vector<Expr> args;
                args.push_back(expr());
                while (lex_.cur().kind == Tok::Comma) {
                    lex_.advance();
                    args.push_back(expr());
                }
                expect(Tok::RParen);
                bool is_nary = (kind == NodeKind::Min || kind == NodeKind::Max);
                if (is_nary && args.size() < 2)
                    throw ParseError(off, "min/max need at least two arguments");
                if (!is_nary && args.size() != 1)
                    throw ParseError(off, "function '" + name + "' takes one argument");
                Expr e = Expr::nary(kind, std::move(args));
                e.k = k;
                return e;
            }
            var_offsets_.try_emplace(name, off);
            return Expr::variable(name);
        }
        throw ParseError(t.offset, std::string("expected number, identifier or '(', found ") +
                                       tok_name(t.kind));
    }

    Rational number_literal() {
        if (lex_.cur().kind != Tok::Number)
            throw ParseError(lex_.cur().offset, std::string("expected number, found ") +
                                                    tok_name(lex_.cur().kind));
        Rational v = lex_.cur().number;
        bool was_int = lex_.cur().number_is_int;
        lex_.advance();
        if (was_int && lex_.cur().kind == Tok::Slash) {
            lex_.advance();
            if (lex_.cur().kind != Tok::Number || !lex_.cur().number_is_int)
                throw ParseError(lex_.cur().offset, "expected integer after '/'");
            v = v / lex_.cur().number;
            lex_.advance();
        }
        return v;
    }

    Domain domain() {
        Domain d;
        for (;;) {
            if (lex_.cur().kind != Tok::Ident)
                throw ParseError(lex_.cur().offset, "expected variable name in domain");
            std::string name = lex_.cur().text;
            lex_.advance();

            VarConstraint* vc = nullptr;
            for (auto& existing : d.vars)
                if (existing.name == name) vc = &existing;
            if (!vc) {
                d.vars.push_back(VarConstraint{});
                vc = &d.vars.back();
                vc->name = name;
            }

            if (lex_.cur().kind == Tok::Gt || lex_.cur().kind == Tok::Ge) {
                bool strict = lex_.cur().kind == Tok::Gt;
                lex_.advance();
                bool neg = false;
                if (lex_.cur().kind == Tok::Minus) {
                    neg = true;
                    lex_.advance();
                }
                Rational bound = number_literal();
                if (neg) bound = -bound;
                vc->lower = bound;
                vc->lower_strict = strict;
            } else if (lex_.cur().kind == Tok::Ident && lex_.cur().text == "in") {
                lex_.advance();
                if (lex_.cur().kind != Tok::Ident || lex_.cur().text != "R")
                    throw ParseError(lex_.cur().offset, "expected 'R' after 'in'");
                lex_.advance();
                vc->real_line = true;
            } else if (lex_.cur().kind == Tok::Ident && lex_.cur().text == "notin") {
                lex_.advance();
                if (lex_.cur().kind != Tok::Ident || lex_.cur().text != "Z")
                    throw ParseError(lex_.cur().offset, "expected 'Z' after 'notin'");
                lex_.advance();
                vc->exclude_integers = true;
            } else {
                throw ParseError(lex_.cur().offset, "expected '>', '>=', 'in' or 'notin'");
            }

            if (lex_.cur().kind == Tok::Comma) {
                lex_.advance();
                continue;
            }
            return d;
        }
    }

    Lexer lex_;
    std::map<std::string, std::size_t> var_offsets_;
};

} // namespace

Statement parse_statement(std::string_view text) { return Parser(text).parse_statement_all(); }

Expr parse_expression(std::string_view text) { return Parser(text).parse_expr_all(); }

} // namespace floorcheck

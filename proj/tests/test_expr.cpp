#include <doctest.h>

#include <cmath>

#include "floorcheck/corpus.hpp"
#include "floorcheck/eval.hpp"
#include "floorcheck/parser.hpp"
#include "floorcheck/piecewise.hpp"
#include "floorcheck/printer.hpp"
#include "floorcheck/rng.hpp"

using namespace floorcheck;

TEST_CASE("statement parsing basics") {
    Statement st =
        parse_statement("floor(x)/(3*x+frac(x)) + frac(x)/(3*x+floor(x)) >= 4/15 on x>0");
    CHECK(st.rel == Relation::GE);
    CHECK(st.rhs.kind == NodeKind::Const);
    CHECK(st.rhs.value == Rational(4, 15));
    const VarConstraint* xc = st.domain.find("x");
    REQUIRE(xc != nullptr);
    CHECK(xc->lower.has_value());
    CHECK(*xc->lower == Rational(0));
    CHECK(xc->lower_strict);

    Statement id = parse_statement("x + 0 >= x on x>0");
    CHECK(id.rel == Relation::GE);
    CHECK(id.lhs.kind == NodeKind::Add);
}

TEST_CASE("syntax errors carry byte offsets") {
    try {
        parse_statement("x +* 2 >= 1 on x>0");
        FAIL("expected ParseError");
    } catch (const ParseError& e) {
        CHECK(e.offset == 3); // the '*'
    }
    CHECK_THROWS_AS(parse_statement("x + q >= 1 on x>0"), ParseError); // undeclared q
    CHECK_THROWS_AS(parse_statement("x >= 1"), ParseError);            // missing domain
    CHECK_THROWS_AS(parse_statement("foo(x) >= 1 on x>0"), ParseError); // unknown function
    CHECK_THROWS_AS(parse_statement("x^-2 >= 1 on x>0"), ParseError);   // negative exponent
}

TEST_CASE("domain grammar") {
    Statement st = parse_statement("x >= 1 on x>1, x notin Z, a>=1");
    const VarConstraint* xc = st.domain.find("x");
    REQUIRE(xc);
    CHECK(xc->exclude_integers);
    CHECK(xc->lower_strict);
    const VarConstraint* ac = st.domain.find("a");
    REQUIRE(ac);
    CHECK(!ac->lower_strict);

    Statement real = parse_statement("sin(x) >= -1 on x in R");
    CHECK(real.domain.find("x")->real_line);
}

TEST_CASE("rational literals are exact and never decimal") {
    Expr e = parse_expression("4/15");
    CHECK(e.kind == NodeKind::Const);
    CHECK(e.value == Rational(4, 15));
    CHECK(print_expr(e) == "4/15");

    Expr d = parse_expression("0.25");
    CHECK(d.kind == NodeKind::Const);
    CHECK(d.value == Rational(1, 4));
    CHECK(print_expr(d) == "1/4");

    Expr sci = parse_expression("1e-4");
    CHECK(sci.value == Rational(1, 10000));
}

TEST_CASE("min prints with fixed syntax") {
    Expr e = parse_expression("min(x + 1, 2*x)");
    CHECK(print_expr(e) == "min(x + 1, 2*x)");
}

TEST_CASE("round-trip on the whole corpus") {
    const Corpus& c = builtin_corpus();
    auto roundtrip = [](const Statement& st) {
        Statement again = parse_statement(print_statement(st));
        CHECK(again == st);
    };
    for (const auto& b : c.bases)
        if (b.statement) roundtrip(*b.statement);
    for (const auto& t : c.theorems) {
        roundtrip(t.as_printed);
        if (t.corrected) roundtrip(*t.corrected);
    }
}

namespace {

Expr random_expr(Rng& rng, int depth) {
    int pick = static_cast<int>(rng.next_u64() % (depth <= 0 ? 3 : 12));
    switch (pick) {
        case 0:
            return Expr::constant(Rational(static_cast<int>(rng.next_u64() % 12),
                                           1 + static_cast<int>(rng.next_u64() % 9)));
        case 1:
            return Expr::variable("x");
        case 2:
            return Expr::variable("a");
        case 3:
            return Expr::binary(NodeKind::Add, random_expr(rng, depth - 1), random_expr(rng, depth - 1));
        case 4:
            return Expr::binary(NodeKind::Sub, random_expr(rng, depth - 1), random_expr(rng, depth - 1));
        case 5:
            return Expr::binary(NodeKind::Mul, random_expr(rng, depth - 1), random_expr(rng, depth - 1));
        case 6:
            return Expr::binary(NodeKind::Div, random_expr(rng, depth - 1), random_expr(rng, depth - 1));
        case 7:
            return Expr::power(random_expr(rng, depth - 1), static_cast<int>(rng.next_u64() % 5));
        case 8:
            return Expr::nth_root(random_expr(rng, depth - 1), 2 + static_cast<int>(rng.next_u64() % 3));
        case 9: {
            NodeKind k = (rng.next_u64() % 2) ? NodeKind::Min : NodeKind::Max;
            std::vector<Expr> args;
            size_t n = 2 + rng.next_u64() % 2;
            for (size_t i = 0; i < n; ++i) args.push_back(random_expr(rng, depth - 1));
            return Expr::nary(k, std::move(args));
        }
        case 10: {
            NodeKind ks[] = {NodeKind::Abs, NodeKind::Exp, NodeKind::Sin, NodeKind::Cos};
            return Expr::unary(ks[rng.next_u64() % 4], random_expr(rng, depth - 1));
        }
        default: {
            NodeKind k = (rng.next_u64() % 2) ? NodeKind::Floor : NodeKind::Frac;
            return Expr::unary(k, Expr::variable("x"));
        }
    }
}

} // namespace

TEST_CASE("round-trip property on random expressions" * doctest::timeout(120)) {
    Rng rng(424242);
    int ok = 0;
    for (int i = 0; i < 100000; ++i) {
        Expr e = random_expr(rng, 4);
        // the parser folds Neg(Const) and Div(Const, Const): normalize first
        Expr normalized = parse_expression(print_expr(e));
        Expr again = parse_expression(print_expr(normalized));
        CHECK(again == normalized);
        ++ok;
    }
    CHECK(ok == 100000);
}

TEST_CASE("point evaluation: floor and frac") {
    PointBindings env{{"x", 2.75}};
    CHECK(eval_point(parse_expression("floor(x)"), env) == 2.0);
    CHECK(eval_point(parse_expression("frac(x)"), env) == doctest::Approx(0.75));

    // frac is x - floor(x) in [0,1) for negatives too
    PointBindings neg{{"x", -0.2}};
    CHECK(eval_point(parse_expression("floor(x)"), neg) == -1.0);
    CHECK(eval_point(parse_expression("frac(x)"), neg) == doctest::Approx(0.8));
}

TEST_CASE("T1 left side at 1.5 is exactly 16/55") {
    const Corpus& c = builtin_corpus();
    const TheoremRecord* t1 = c.find_theorem("T1");
    REQUIRE(t1);
    double v = eval_point(t1->as_printed.lhs, {{"x", 1.5}});
    CHECK(v == doctest::Approx(16.0 / 55.0).epsilon(1e-14));
}

TEST_CASE("evaluation errors") {
    CHECK_THROWS_AS(eval_point(parse_expression("1/frac(x)"), {{"x", 2.0}}), eval_error);
    try {
        eval_point(parse_expression("1/frac(x)"), {{"x", 2.0}});
    } catch (const eval_error& e) {
        CHECK(e.fault == EvalFault::DivisionByZero);
    }
    CHECK_THROWS_AS(eval_point(parse_expression("sqrt(x - 2)"), {{"x", 1.0}}), eval_error);
    CHECK_THROWS_AS(eval_point(parse_expression("x + y"), {{"x", 1.0}}), eval_error);
}

TEST_CASE("interval evaluation") {
    Expr e = parse_expression("x*x - x");
    BoxBindings box{{"x", Interval(1, 2)}};
    Interval r = eval_interval(e, box);
    CHECK(r.contains(Interval(0, 2)));       // true range
    CHECK(r.lo >= -1.0 - 1e-9);              // naive enclosure is [-1, 3]
    CHECK(r.hi <= 3.0 + 1e-9);

    CHECK_THROWS_AS(eval_interval(parse_expression("floor(x)"), box), eval_error);
    try {
        eval_interval(parse_expression("floor(x)"), box);
    } catch (const eval_error& err) {
        CHECK(err.fault == EvalFault::FloorFracInIntervalEval);
    }
}

TEST_CASE("point-in-interval consistency on corpus branch expressions" * doctest::timeout(120)) {
    // 1e5 random (branch expression, box, interior point) triples
    const Corpus& c = builtin_corpus();
    Rng rng(8675309);
    int done = 0;
    while (done < 100000) {
        const TheoremRecord& t = c.theorems[rng.next_u64() % c.theorems.size()];
        long long n = 1 + static_cast<long long>(rng.next_u64() % 6);
        BranchProblem bp;
        try {
            bp = specialize_branch(t.as_printed, n);
        } catch (...) {
            continue;
        }
        if (bp.singular) continue;
        double lo = rng.uniform(1e-3, 0.98);
        double hi = lo + rng.uniform(1e-6, 0.999 - lo);
        double pt = lo + (hi - lo) * rng.next_double();
        BoxBindings box{{"t", Interval(lo, hi)}};
        PointBindings env{{"t", pt}};
        // bind auxiliary parameters to 1
        for (const auto& vc : bp.stmt_t.domain.vars) {
            if (vc.name == "t") continue;
            box.emplace_back(vc.name, Interval(1.0, 1.0));
            env.emplace_back(vc.name, 1.0);
        }
        const Expr& side = (rng.next_u64() % 2) ? bp.stmt_t.lhs : bp.stmt_t.rhs;
        try {
            Interval enc = eval_interval(side, box);
            double v = eval_point(side, env);
            CHECK(enc.contains(v));
            ++done;
        } catch (const enclosure_error&) {
            continue;
        } catch (const eval_error&) {
            continue;
        }
    }
    CHECK(done == 100000);
}

TEST_CASE("floor/frac identity holds exactly" * doctest::timeout(60)) {
    Rng rng(1111);
    Expr fl = parse_expression("floor(x)");
    Expr fr = parse_expression("frac(x)");
    for (int i = 0; i < 100000; ++i) {
        double v = rng.uniform(-1e6, 1e6);
        PointBindings env{{"x", v}};
        double f = eval_point(fl, env);
        double g = eval_point(fr, env);
        CHECK(f + g == v); // exact, no tolerance
        CHECK(g >= 0.0);
        CHECK(g < 1.0);
    }
}

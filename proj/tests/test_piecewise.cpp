#include <doctest.h>

#include <cmath>

#include "floorcheck/corpus.hpp"
#include "floorcheck/eval.hpp"
#include "floorcheck/parser.hpp"
#include "floorcheck/piecewise.hpp"
#include "floorcheck/rng.hpp"

using namespace floorcheck;

TEST_CASE("T1 branch 1 matches the simplified form in value") {
    const TheoremRecord* t1 = builtin_corpus().find_theorem("T1");
    REQUIRE(t1);
    BranchProblem bp = specialize_branch(t1->as_printed, 1);
    CHECK(!bp.singular);
    CHECK(!contains_floor_frac(bp.stmt_t.lhs));
    CHECK(!contains_floor_frac(bp.stmt_t.rhs));

    Expr simplified = parse_expression("1/(4*t+3) + t/(3*t+4)");
    for (int i = 1; i < 64; ++i) {
        double t = i / 64.0;
        double a = eval_point(bp.stmt_t.lhs, {{"t", t}});
        double b = eval_point(simplified, {{"t", t}});
        CHECK(a == doctest::Approx(b).epsilon(1e-12));
    }
}

TEST_CASE("floor-zero denominators mark the branch singular") {
    const TheoremRecord* t9 = builtin_corpus().find_theorem("T9");
    REQUIRE(t9);
    BranchProblem bp = specialize_branch(t9->as_printed, 0);
    CHECK(bp.singular);

    const TheoremRecord* t5 = builtin_corpus().find_theorem("T5");
    REQUIRE(t5);
    CHECK(specialize_branch(t5->as_printed, 0).singular);
    CHECK(!specialize_branch(t5->as_printed, 1).singular);
}

TEST_CASE("negative branch keeps trig constants") {
    const TheoremRecord* t25 = builtin_corpus().find_theorem("T25");
    REQUIRE(t25);
    BranchProblem bp = specialize_branch(t25->as_printed, -1);
    CHECK(!bp.singular);
    CHECK(!contains_floor_frac(bp.stmt_t.lhs));
    // the sin(floor) term became the constant sin(-1)
    double v = eval_point(bp.stmt_t.lhs, {{"t", 0.25}});
    double expect = std::fabs(std::sin(-1.0)) + std::fabs(std::sin(0.25)) +
                    std::fabs(std::cos(-1.0 + 0.25));
    CHECK(v == doctest::Approx(expect).epsilon(1e-14));
}

TEST_CASE("floor of a non-variable argument is rejected") {
    Statement st = parse_statement("floor(2*x) >= 0 on x>0");
    CHECK_THROWS_AS((void)specialize_branch(st, 1), unsupported_node);
}

TEST_CASE("branch_range follows the domain header") {
    Domain pos = parse_statement("x >= 0 on x>0").domain;
    CHECK(branch_range(pos, 3) == std::vector<long long>{0, 1, 2, 3});

    Domain above1 = parse_statement("x >= 0 on x>1").domain;
    CHECK(branch_range(above1, 3) == std::vector<long long>{1, 2, 3});

    Domain real = parse_statement("x >= 0 on x in R").domain;
    CHECK(branch_range(real, 2) == std::vector<long long>{-2, -1, 0, 1, 2});

    CHECK_THROWS_AS(branch_range(pos, 0), std::invalid_argument);
}

TEST_CASE("branch 1 of an x>1 domain is open at t = 0") {
    Statement st = parse_statement("x >= 0 on x>1");
    CHECK(specialize_branch(st, 1).t_lo_open);
    CHECK(!specialize_branch(st, 2).t_lo_open);

    Statement excl = parse_statement("x >= 0 on x>1, x notin Z");
    CHECK(specialize_branch(excl, 2).t_lo_open); // every branch open
}

TEST_CASE("effective t-domain") {
    const TheoremRecord* t13 = builtin_corpus().find_theorem("T13");
    REQUIRE(t13);
    BranchProblem bp = specialize_branch(t13->as_printed, 2);
    CHECK(bp.singular_at_t0);
    Interval dom = effective_t_domain(bp, 1e-4);
    CHECK(dom.lo == doctest::Approx(1e-4));
    CHECK(dom.hi == doctest::Approx(1.0 - 1e-4));

    const TheoremRecord* t18 = builtin_corpus().find_theorem("T18");
    REQUIRE(t18);
    BranchProblem bp18 = specialize_branch(t18->as_printed, 2);
    CHECK(!bp18.singular_at_t0);
    Interval dom18 = effective_t_domain(bp18, 1e-4);
    CHECK(dom18.lo == doctest::Approx(1e-4));

    CHECK_THROWS_AS((void)effective_t_domain(bp, 0.6), std::invalid_argument);
}

TEST_CASE("specialized statements are structurally smooth") {
    const Corpus& c = builtin_corpus();
    for (const auto& t : c.theorems) {
        for (long long n : branch_range(t.as_printed.domain, 3)) {
            BranchProblem bp = specialize_branch(t.as_printed, n);
            CHECK(!contains_floor_frac(bp.stmt_t.lhs));
            CHECK(!contains_floor_frac(bp.stmt_t.rhs));
        }
    }
}

TEST_CASE("branch coverage tiles the domain") {
    const Corpus& c = builtin_corpus();
    for (const auto& t : c.theorems) {
        auto range = branch_range(t.as_printed.domain, 5);
        REQUIRE(!range.empty());
        for (size_t i = 1; i < range.size(); ++i) CHECK(range[i] == range[i - 1] + 1);
        // every branch owns t in [0,1): adjacent branches meet exactly at the
        // integers, which are handled by point probes
        for (long long n : range) {
            BranchProblem bp = specialize_branch(t.as_printed, n);
            const VarConstraint* tc = bp.stmt_t.domain.find("t");
            REQUIRE(tc);
            CHECK(*tc->lower == Rational(0));
            CHECK(*tc->upper == Rational(1));
            CHECK(tc->upper_strict);
        }
    }
}

TEST_CASE("branch equivalence against the original statement" * doctest::timeout(120)) {
    const Corpus& c = builtin_corpus();
    Rng rng(13579);
    int done = 0;
    while (done < 100000) {
        const TheoremRecord& t = c.theorems[rng.next_u64() % c.theorems.size()];
        auto range = branch_range(t.as_printed.domain, 8);
        long long n = range[rng.next_u64() % range.size()];
        // keep away from representability trouble at the branch ends
        double tt = rng.uniform(1.0 / 1024, 1.0 - 1.0 / 1024);
        double x = static_cast<double>(n) + tt;
        tt = x - static_cast<double>(n); // exact fractional part of the double x

        BranchProblem bp;
        try {
            bp = specialize_branch(t.as_printed, n);
        } catch (...) {
            continue;
        }
        if (bp.singular) continue;

        PointBindings envx{{"x", x}};
        PointBindings envt{{"t", tt}};
        for (const auto& vc : t.as_printed.domain.vars) {
            if (vc.name == "x") continue;
            double v = vc.lower ? vc.lower->to_double() + rng.uniform(0.0, 2.0)
                                : rng.uniform(0.5, 2.0);
            envx.emplace_back(vc.name, v);
            envt.emplace_back(vc.name, v);
        }
        for (const Expr* side : {&t.as_printed.lhs, &t.as_printed.rhs}) {
            const Expr& branch_side = (side == &t.as_printed.lhs) ? bp.stmt_t.lhs : bp.stmt_t.rhs;
            double vx, vt;
            try {
                vx = eval_point(*side, envx);
                vt = eval_point(branch_side, envt);
            } catch (const eval_error&) {
                continue;
            }
            if (std::isinf(vx) && std::isinf(vt) && vx == vt) {
                ++done;
                continue;
            }
            CHECK(std::fabs(vx - vt) <= 1e-12 * std::max(1.0, std::fabs(vx)));
            ++done;
        }
    }
    CHECK(done >= 100000);
}

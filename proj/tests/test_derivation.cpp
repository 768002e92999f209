#include <doctest.h>

#include <cmath>

#include "floorcheck/corpus.hpp"
#include "floorcheck/derivation.hpp"
#include "floorcheck/falsifier.hpp"
#include "floorcheck/parser.hpp"

using namespace floorcheck;

namespace {

RunConfig test_config() {
    RunConfig c;
    c.derivation_samples = 10000;
    return c;
}

const TheoremRecord& rec(const char* id) {
    const TheoremRecord* t = builtin_corpus().find_theorem(id);
    REQUIRE(t != nullptr);
    return *t;
}

const Statement& base_stmt(const char* id) {
    const BaseRecord* b = builtin_corpus().find_base(id);
    REQUIRE(b != nullptr);
    REQUIRE(b->statement.has_value());
    return *b->statement;
}

} // namespace

TEST_CASE("instantiate_base: B1 under the T1 substitution") {
    const TheoremRecord& t1 = rec("T1");
    Statement inst = instantiate_base(base_stmt("B1"), t1.subst, t1.as_printed.domain);
    // first term collapses to 1/3, the rest is the theorem's left side
    double v = eval_point(inst.lhs, {{"x", 1.5}});
    CHECK(v == doctest::Approx(1.0 / 3.0 + 16.0 / 55.0).epsilon(1e-13));
    // instance margin equals the theorem margin exactly for T1
    double mi = margin_point(inst, {{"x", 1.5}});
    double mt = margin_point(t1.as_printed, {{"x", 1.5}});
    CHECK(mi == doctest::Approx(mt).epsilon(1e-12));
}

TEST_CASE("instantiate_base: T27 instance margin is 2x times the theorem margin") {
    const TheoremRecord& t27 = rec("T27");
    Statement inst = instantiate_base(base_stmt("B27"), t27.subst, t27.as_printed.domain);
    for (double x : {1.5, 2.25, 7.8}) {
        double mi = margin_point(inst, {{"x", x}});
        double mt = margin_point(t27.as_printed, {{"x", x}});
        CHECK(mi == doctest::Approx(2.0 * x * mt).epsilon(1e-9));
        CHECK(mi > 0.0);
        CHECK(mt > 0.0);
    }
}

TEST_CASE("identity substitution leaves a one-variable base unchanged") {
    Statement base = parse_statement("x*x >= 0 on x>0");
    Substitution ident;
    ident.map.emplace_back("x", Expr::variable("x"));
    Statement inst = instantiate_base(base, ident, base.domain);
    CHECK(inst.lhs == base.lhs);
    CHECK(inst.rhs == base.rhs);
}

TEST_CASE("incomplete substitution is an error") {
    Substitution partial;
    partial.map.emplace_back("a", Expr::variable("x"));
    CHECK_THROWS_AS(
        (void)instantiate_base(base_stmt("B1"), partial, rec("T1").as_printed.domain),
        incomplete_substitution);
}

TEST_CASE("sign agreement: T1 is consistent over 1e4 seeded samples") {
    const TheoremRecord& t1 = rec("T1");
    Statement inst = instantiate_base(base_stmt("B1"), t1.subst, t1.as_printed.domain);
    DerivationReport rep = sign_agreement(t1.as_printed, inst, 10000, 42);
    CHECK(rep.status == DerivationStatus::Consistent);
    CHECK(rep.disagreement_count == 0);
    CHECK(rep.samples_tested >= 9000);
    CHECK_THROWS_AS((void)sign_agreement(t1.as_printed, inst, 50, 42), std::invalid_argument);
}

TEST_CASE("sign agreement: T21 as printed is discrepant") {
    const TheoremRecord& t21 = rec("T21");
    Statement inst = instantiate_base(base_stmt("B21"), t21.subst, t21.as_printed.domain);
    DerivationReport rep = sign_agreement(t21.as_printed, inst, 10000, 42);
    CHECK(rep.status == DerivationStatus::Discrepant);
    CHECK(rep.disagreement_count > 0);
    REQUIRE(!rep.disagreements.empty());
    // instance holds, theorem fails, reproducibly
    for (const auto& d : rep.disagreements) {
        double mt = margin_point(t21.as_printed, d.assignment);
        double mi = margin_point(inst, d.assignment);
        CHECK(mt < 0.0);
        CHECK(mi >= 0.0);
        CHECK(std::fabs(mt) > 1e-12);
    }
}

TEST_CASE("check_derivation on the acceptance set") {
    RunConfig cfg = test_config();
    const Corpus& c = builtin_corpus();

    for (const char* id : {"T1", "T27", "T34"}) {
        auto reps = check_derivation(rec(id), c, cfg);
        REQUIRE(!reps.empty());
        CHECK(reps[0].status == DerivationStatus::Consistent);
        CHECK(reps[0].disagreement_count == 0);
        CHECK(reps[0].samples_tested >= 9000);
    }
    for (const char* id : {"T21", "T3"}) {
        auto reps = check_derivation(rec(id), c, cfg);
        REQUIRE(reps.size() == 2); // printed + corrected
        CHECK(reps[0].version == "as_printed");
        CHECK(reps[0].status == DerivationStatus::Discrepant);
        CHECK(reps[0].disagreement_count >= 1);
        CHECK(reps[1].version == "corrected");
        CHECK(reps[1].status == DerivationStatus::Consistent);
    }
}

TEST_CASE("garbled base with a usable corrected form still runs: T39") {
    RunConfig cfg = test_config();
    auto reps = check_derivation(rec("T39"), builtin_corpus(), cfg);
    REQUIRE(reps.size() == 1);
    CHECK(reps[0].status == DerivationStatus::Consistent);
    CHECK(reps[0].note.find("garbled") != std::string::npos);
}

TEST_CASE("garbled base with no usable statement is untestable") {
    Corpus c;
    BaseRecord b;
    b.id = "B1";
    b.garbled = true;
    b.note = "unrecoverable";
    c.bases.push_back(b);
    TheoremRecord t;
    t.id = "T1";
    t.as_printed = parse_statement("x >= 0 on x>0");
    t.base_id = "B1";
    t.subst.map.emplace_back("a", Expr::variable("x"));
    t.mode = DerivationMode::Simplified;
    c.theorems.push_back(t);

    auto reps = check_derivation(c.theorems[0], c, test_config());
    REQUIRE(reps.size() == 1);
    CHECK(reps[0].status == DerivationStatus::Untestable);
}

TEST_CASE("verbatim records agree in value, not just sign") {
    RunConfig cfg = test_config();
    const Corpus& c = builtin_corpus();
    for (const auto& t : c.theorems) {
        if (t.mode != DerivationMode::Verbatim) continue;
        auto reps = check_derivation(t, c, cfg);
        REQUIRE(!reps.empty());
        CHECK(reps[0].value_mismatches == 0);
    }
}

TEST_CASE("documented printed substitution runs for T25 and T32") {
    RunConfig cfg = test_config();
    auto r25 = check_derivation(rec("T25"), builtin_corpus(), cfg);
    REQUIRE(!r25.empty());
    CHECK(r25[0].printed_subst_status.has_value());
    auto r32 = check_derivation(rec("T32"), builtin_corpus(), cfg);
    REQUIRE(!r32.empty());
    REQUIRE(r32[0].printed_subst_status.has_value());
    // the printed binding a=x, b=floor(x) does not reproduce the statement
    CHECK(*r32[0].printed_subst_status == DerivationStatus::Discrepant);
}

TEST_CASE("seeded determinism of derivation reports") {
    RunConfig cfg = test_config();
    auto a = check_derivation(rec("T13"), builtin_corpus(), cfg);
    auto b = check_derivation(rec("T13"), builtin_corpus(), cfg);
    REQUIRE(a.size() == b.size());
    CHECK(a[0].samples_tested == b[0].samples_tested);
    CHECK(a[0].disagreement_count == b[0].disagreement_count);
    CHECK(a[0].agreements == b[0].agreements);
    REQUIRE(a[0].disagreements.size() == b[0].disagreements.size());
    for (size_t i = 0; i < a[0].disagreements.size(); ++i) {
        CHECK(a[0].disagreements[i].assignment == b[0].disagreements[i].assignment);
    }
}

TEST_CASE("consistency never claims equivalence: report wording") {
    // the report never uses the word "equivalent"; status only counts signs
    RunConfig cfg = test_config();
    auto reps = check_derivation(rec("T6"), builtin_corpus(), cfg);
    REQUIRE(!reps.empty());
    CHECK(reps[0].note.find("equivalent") == std::string::npos);
    CHECK(derivation_status_name(reps[0].status) == std::string("consistent"));
}

#include <doctest.h>

#include <cmath>

#include "floorcheck/certifier.hpp"
#include "floorcheck/corpus.hpp"
#include "floorcheck/rng.hpp"

using namespace floorcheck;

namespace {

RunConfig test_config() {
    RunConfig c;
    c.n_max = 20;
    return c;
}

const TheoremRecord& rec(const char* id) {
    const TheoremRecord* t = builtin_corpus().find_theorem(id);
    REQUIRE(t != nullptr);
    return *t;
}

} // namespace

TEST_CASE("T1 branch certificates") {
    RunConfig cfg = test_config();

    BranchCertificate b1 = certify_branch(rec("T1").as_printed, 1, cfg);
    CHECK(b1.certified);
    CHECK(b1.margin_lower_bound >= 0.0185);
    CHECK(b1.margin_lower_bound <= 2.0 / 105.0 + 1e-6);

    // branch 0 reduces to the constant margin 1/3 - 4/15 = 1/15
    BranchCertificate b0 = certify_branch(rec("T1").as_printed, 0, cfg);
    CHECK(b0.certified);
    CHECK(std::fabs(b0.min_point_margin - 1.0 / 15.0) <= 1e-12);
    CHECK(b0.margin_lower_bound <= 1.0 / 15.0);
    CHECK(b0.margin_lower_bound > 0.0);
}

TEST_CASE("strict relation: T12 branch 1 certifies away from the boundary") {
    RunConfig cfg = test_config();
    BranchCertificate b = certify_branch(rec("T12").as_printed, 1, cfg);
    CHECK(b.certified);
    CHECK(b.margin_lower_bound > 0.0);
    // margin at the sliver edge t = epsilon is about 0.0070
    double m = margin_point(specialize_branch(rec("T12").as_printed, 1).stmt_t, {{"t", 1e-4}});
    CHECK(m == doctest::Approx(0.00697).epsilon(0.05));
    CHECK(b.min_point_margin <= m + 1e-12);
}

TEST_CASE("accepted leaves pass a point spot-check") {
    RunConfig cfg = test_config();
    Rng rng(5150);
    for (const char* id : {"T1", "T18"}) {
        BranchCertificate b = certify_branch(rec(id).as_printed, 1, cfg);
        REQUIRE(b.certified);
        REQUIRE(!b.leaves.empty());
        BranchProblem bp = specialize_branch(rec(id).as_printed, 1);
        int checked = 0;
        for (const auto& leaf : b.leaves) {
            for (int k = 0; k < 16; ++k) {
                double t = leaf.lo + (leaf.hi - leaf.lo) * rng.next_double();
                double m = margin_point(bp.stmt_t, {{"t", t}});
                CHECK(m >= leaf.margin_lo - 1e-12 * std::max(1.0, std::fabs(m)));
                ++checked;
            }
            if (checked >= 2048) break;
        }
    }
}

TEST_CASE("singular branch is excluded, not certified") {
    RunConfig cfg = test_config();
    BranchCertificate b = certify_branch(rec("T5").as_printed, 0, cfg);
    CHECK(b.singular);
    CHECK(!b.certified);
    REQUIRE(!b.exclusions.empty());
}

TEST_CASE("certify aggregates branches, probes and tails: T1") {
    RunConfig cfg = test_config();
    CertifyResult res = certify(rec("T1"), cfg);
    CHECK(res.as_printed.kind == VerdictKind::Certified);
    CHECK(res.as_printed.tail_samples_ok);
    CHECK(!res.as_printed.slice_certified);
    REQUIRE(res.as_printed.slices.size() == 1);
    CHECK(res.as_printed.slices[0].branches.size() == 21); // n = 0..20
    CHECK(res.as_printed.margin_lower_bound > 0.0);
}

TEST_CASE("certify T21: printed undecided, corrected certified near 1/12") {
    RunConfig cfg = test_config();
    CertifyResult res = certify(rec("T21"), cfg);
    CHECK(res.as_printed.kind == VerdictKind::Undecided); // falsifier owns the disproof
    REQUIRE(res.corrected);
    CHECK(res.corrected->kind == VerdictKind::Certified);
    const auto& branches = res.corrected->slices[0].branches;
    REQUIRE(branches.size() >= 2);
    CHECK(std::fabs(branches[1].margin_lower_bound - 1.0 / 12.0) <= 1e-3);
}

TEST_CASE("T3 corrected: slice-certified on a in {2,10}, identity slice stays open") {
    RunConfig cfg = test_config();
    REQUIRE(rec("T3").corrected);
    Verdict v = certify_statement(*rec("T3").corrected, cfg);
    CHECK(v.slice_certified);
    REQUIRE(v.slices.size() == 3);
    CHECK(v.slices[0].params[0].second == Rational(1));
    CHECK(v.slices[0].kind == VerdictKind::Undecided); // margin identically zero at a = 1
    CHECK(v.slices[1].kind == VerdictKind::Certified);
    CHECK(v.slices[2].kind == VerdictKind::Certified);
}

TEST_CASE("integer point probes") {
    RunConfig cfg = test_config();
    auto probes = probe_integer_points(rec("T18"), 20);
    REQUIRE(probes.size() == 20);
    CHECK(probes[1].x == 2);
    CHECK(!probes[1].excluded);
    CHECK(probes[1].margin == doctest::Approx(0.5));

    auto p13 = probe_integer_points(rec("T13"), 20);
    REQUIRE(!p13.empty());
    CHECK(p13[0].x == 2); // domain x > 1
    CHECK(p13[0].excluded);

    auto p24 = probe_integer_points(rec("T24"), 20);
    CHECK(p24[2].x == 3);
    CHECK(p24[2].margin == doctest::Approx(std::exp(3.0) + 1.0 - 5.0).epsilon(1e-12));

    // real-line theorems probe negative integers too
    auto p25 = probe_integer_points(rec("T25"), 5);
    CHECK(p25.front().x == -5);
    CHECK(p25.back().x == 5);
}

TEST_CASE("monotone effort: deeper runs never shrink the certified region") {
    RunConfig shallow = test_config();
    shallow.max_depth = 20;
    RunConfig deep = test_config();
    deep.max_depth = 40;

    for (const char* id : {"T1", "T18", "T24"}) {
        for (long long n : {0LL, 1LL, 2LL}) {
            BranchCertificate a = certify_branch(rec(id).as_printed, n, shallow);
            BranchCertificate b = certify_branch(rec(id).as_printed, n, deep);
            // set inclusion of merged certified intervals
            for (const auto& [lo, hi] : a.certified_intervals) {
                bool covered = false;
                for (const auto& [blo, bhi] : b.certified_intervals) {
                    if (blo <= lo + 1e-15 && hi <= bhi + 1e-15) {
                        covered = true;
                        break;
                    }
                }
                CHECK(covered);
            }
        }
    }
}

TEST_CASE("verdict and witness stay consistent") {
    RunConfig cfg = test_config();
    cfg.n_max = 8;
    for (const char* id : {"T1", "T13", "T21", "T30", "T36"}) {
        Verdict v = certify_statement(rec(id).as_printed, cfg);
        auto ce = falsify_statement(rec(id).as_printed, cfg);
        if (!ce || !ce->rigorous) continue;
        // the witness point must not lie inside any certified interval
        for (const auto& sv : v.slices) {
            for (const auto& bc : sv.branches) {
                if (bc.n != ce->branch) continue;
                for (const auto& [lo, hi] : bc.certified_intervals) {
                    CHECK(!(lo <= ce->t && ce->t <= hi));
                }
            }
        }
    }
}

TEST_CASE("undecided branches report their unresolved regions") {
    RunConfig cfg = test_config();
    BranchCertificate b = certify_branch(rec("T21").as_printed, 1, cfg);
    CHECK(!b.certified);
    CHECK(b.unresolved_count > 0);
    REQUIRE(!b.unresolved.empty());
    bool has_negative = false;
    for (const auto& u : b.unresolved)
        if (u.reason == "negative") has_negative = true;
    CHECK(has_negative);
}

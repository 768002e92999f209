#include <doctest.h>

#include <cmath>
#include <vector>

#include "floorcheck/interval.hpp"
#include "floorcheck/rng.hpp"

using namespace floorcheck;

namespace {

Interval random_interval(Rng& rng, double span = 8.0) {
    double a = rng.uniform(-span, span);
    double b = rng.uniform(-span, span);
    if (a > b) std::swap(a, b);
    return Interval(a, b);
}

double random_inside(Rng& rng, const Interval& iv) {
    if (iv.lo == iv.hi) return iv.lo;
    return iv.lo + (iv.hi - iv.lo) * rng.next_double();
}

double ipow(double x, int k) {
    double acc = 1.0;
    for (int j = 0; j < k; ++j) acc *= x;
    return acc;
}

} // namespace

TEST_CASE("interval arithmetic examples") {
    Interval r = Interval(1, 2) + Interval(3, 4);
    CHECK(r.contains(Interval(4, 6)));

    r = Interval(1, 2) - Interval(1, 2);
    CHECK(r.contains(Interval(-1, 1))); // dependency not tracked

    CHECK_THROWS_AS((void)(Interval(1, 1) / Interval(-1, 1)), enclosure_error);
    try {
        (void)(Interval(1, 1) / Interval(-1, 1));
    } catch (const enclosure_error& e) {
        CHECK(e.fault == EnclosureFault::SpanningZeroDivision);
    }
}

TEST_CASE("powers and roots") {
    CHECK(pow(Interval(-2, 1), 2).contains(Interval(0, 4)));
    CHECK(pow(Interval(-2, 1), 2).lo == 0.0);

    CHECK(root(Interval(4, 9), 2).contains(Interval(2, 3)));
    CHECK(root(Interval(-8, 27), 3).contains(Interval(-2, 3)));

    CHECK_THROWS_AS((void)root(Interval(-9, -4), 2), enclosure_error);

    // even root clamps a sign-spanning argument to [0, inf)
    Interval s = root(Interval(-1, 4), 2);
    CHECK(s.lo == 0.0);
    CHECK(s.hi >= 2.0);

    CHECK(root(Interval(16, 81), 4).contains(Interval(2, 3)));
}

TEST_CASE("transcendental enclosures") {
    Interval s = sin(Interval(0.0, kPiHi));
    CHECK(s.contains(Interval(0, 1)));
    CHECK(s.lo >= -1.0);
    CHECK(s.hi <= 1.0);

    CHECK(abs(Interval(-3, 2)).contains(Interval(0, 3)));

    Interval e = exp(Interval(0, 1));
    CHECK(e.contains(Interval(1.0, 2.718281828)));
    CHECK(e.hi >= 2.718281);

    // cos over a full period reaches both extremes
    Interval c = cos(Interval(0.0, 2.0 * kPiHi));
    CHECK(c.lo == -1.0);
    CHECK(c.hi == 1.0);
}

TEST_CASE("pi enclosure brackets pi") {
    CHECK(kPiLo < kPiHi);
    CHECK(kPiHi - kPiLo < 1e-15);
    // sin is positive just below the enclosure and negative just above it
    CHECK(std::sin(kPiLo) > 0.0);
    CHECK(std::sin(std::nextafter(kPiHi, 4.0)) < 0.0);
}

TEST_CASE("enclosure property: point images stay inside" * doctest::timeout(120)) {
    Rng rng(20250801);
    int checked = 0;
    for (int i = 0; i < 100000; ++i) {
        Interval a = random_interval(rng);
        Interval b = random_interval(rng);
        double x = random_inside(rng, a);
        double y = random_inside(rng, b);

        CHECK((a + b).contains(x + y));
        CHECK((a - b).contains(x - y));
        CHECK((a * b).contains(x * y));
        int k = 2 + static_cast<int>(rng.next_u64() % 4);
        CHECK(pow(a, k).contains(ipow(x, k)));
        if (!b.contains_zero()) CHECK((a / b).contains(x / y));
        CHECK(exp(a).contains(std::exp(x)));
        CHECK(sin(a).contains(std::sin(x)));
        CHECK(cos(a).contains(std::cos(x)));
        CHECK(abs(a).contains(std::fabs(x)));
        if (a.lo >= 0.0) {
            CHECK(root(a, 2).contains(std::sqrt(x)));
            CHECK(root(a, 4).contains(std::sqrt(std::sqrt(x))));
        }
        CHECK(root(a, 3).contains(std::cbrt(x)));
        ++checked;
    }
    CHECK(checked == 100000);
}

TEST_CASE("monotonicity of enclosure on nested intervals") {
    Rng rng(777);
    for (int i = 0; i < 20000; ++i) {
        Interval a1 = random_interval(rng);
        Interval b1 = random_interval(rng);
        double alo = random_inside(rng, a1), ahi = random_inside(rng, a1);
        if (alo > ahi) std::swap(alo, ahi);
        double blo = random_inside(rng, b1), bhi = random_inside(rng, b1);
        if (blo > bhi) std::swap(blo, bhi);
        Interval a(alo, ahi), b(blo, bhi);

        CHECK((a1 + b1).contains(a + b));
        CHECK((a1 - b1).contains(a - b));
        CHECK((a1 * b1).contains(a * b));
        if (!b1.contains_zero()) CHECK((a1 / b1).contains(a / b));
    }
}

TEST_CASE("degenerate soundness: point intervals contain point results") {
    Rng rng(31337);
    for (int i = 0; i < 20000; ++i) {
        double v = rng.uniform(-30, 30);
        Interval p(v, v);
        CHECK((p + p).contains(v + v));
        CHECK((p * p).contains(v * v));
        CHECK(exp(p).contains(std::exp(v)));
        CHECK(sin(p).contains(std::sin(v)));
        CHECK(cos(p).contains(std::cos(v)));
        CHECK(abs(p).contains(std::fabs(v)));
    }
}

TEST_CASE("sine range via dense sampling oracle") {
    // the oracle: dense point sampling of sin over the box
    Rng rng(99);
    for (int trial = 0; trial < 200; ++trial) {
        Interval a = random_interval(rng, 10.0);
        Interval enc = sin(a);
        for (int i = 0; i <= 500; ++i) {
            double x = a.lo + (a.hi - a.lo) * i / 500.0;
            CHECK(enc.contains(std::sin(x)));
        }
    }
}

TEST_CASE("min and max over lists") {
    std::vector<Interval> xs = {Interval(1, 3), Interval(2, 2.5), Interval(0, 10)};
    Interval lo = min(std::span<const Interval>(xs));
    Interval hi = max(std::span<const Interval>(xs));
    CHECK(lo.contains(1.0));
    CHECK(lo.lo == 0.0);
    CHECK(hi.hi == 10.0);
    CHECK(hi.contains(3.0));
}

TEST_CASE("overflow widens to infinity, never NaN") {
    Interval big(1e308, 1e308);
    Interval r = big * big;
    CHECK(std::isinf(r.hi));
    CHECK(!std::isnan(r.lo));
    Interval e = exp(Interval(800, 900));
    CHECK(std::isinf(e.hi));
}

TEST_CASE("exact zero survives multiplication and division") {
    Interval z(0.0, 0.0);
    Interval r = z * Interval(3, 5);
    CHECK(r.lo == 0.0);
    CHECK(r.hi == 0.0);
    r = z / Interval(2, 4);
    CHECK(r.lo == 0.0);
    CHECK(r.hi == 0.0);
}

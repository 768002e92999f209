#pragma once

#include <cmath>
#include <span>
#include <stdexcept>
#include <string>

namespace floorcheck {

// Signals raised by interval operations that cannot produce an enclosure.
// SpanningZeroDivision: divisor interval contains 0 -- caller subdivides or
// marks the sliver undecided.  DomainViolation: even root of an interval
// entirely below zero, or a NaN endpoint showed up.
enum class EnclosureFault { SpanningZeroDivision, DomainViolation };

struct enclosure_error : std::runtime_error {
    EnclosureFault fault;
    explicit enclosure_error(EnclosureFault f, const std::string& what)
        : std::runtime_error(what), fault(f) {}
};

// Closed interval [lo, hi] with enclosure semantics: every operation returns
// an interval guaranteed to contain the true range of the lifted function
// over its inputs.  Endpoints may be +/-infinity after overflow widening;
// they are never NaN.
struct Interval {
    double lo = 0.0;
    double hi = 0.0;

    Interval() = default;
    explicit Interval(double v) : lo(v), hi(v) { check(); }
    Interval(double l, double h) : lo(l), hi(h) { check(); }

    static Interval point(double v) { return Interval(v); }

    double width() const { return hi - lo; }
    double mid() const { return 0.5 * (lo + hi); }
    bool contains(double v) const { return lo <= v && v <= hi; }
    bool contains(const Interval& o) const { return lo <= o.lo && o.hi <= hi; }
    bool contains_zero() const { return lo <= 0.0 && 0.0 <= hi; }

    std::string str() const;

  private:
    void check() const {
        if (std::isnan(lo) || std::isnan(hi) || lo > hi)
            throw enclosure_error(EnclosureFault::DomainViolation, "bad interval endpoints");
    }
};

// Two-endpoint enclosure of pi, accurate to the last bit of double.
inline constexpr double kPiLo = 0x1.921fb54442d18p+1;
inline constexpr double kPiHi = 0x1.921fb54442d19p+1;

Interval operator+(const Interval& a, const Interval& b);
Interval operator-(const Interval& a, const Interval& b);
Interval operator-(const Interval& a);
Interval operator*(const Interval& a, const Interval& b);
Interval operator/(const Interval& a, const Interval& b); // throws SpanningZeroDivision

Interval pow(const Interval& a, int k);   // k >= 0
Interval root(const Interval& a, int k);  // k in {2,3,4}; even k clamps to [0,inf)
Interval exp(const Interval& a);
Interval sin(const Interval& a);
Interval cos(const Interval& a);
Interval abs(const Interval& a);
Interval min(std::span<const Interval> xs);
Interval max(std::span<const Interval> xs);

} // namespace floorcheck

#include "floorcheck/interval.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>

namespace floorcheck {

namespace {

constexpr int kArithUlps = 1; // native +,-,*,/ are correctly rounded
constexpr int kLibmUlps = 4;  // exp/sin/cos/cbrt are close to, not exactly, 0.5 ulp

double step_down(double x, int ulps) {
    for (int i = 0; i < ulps && std::isfinite(x); ++i)
        x = std::nextafter(x, -std::numeric_limits<double>::infinity());
    return x;
}

double step_up(double x, int ulps) {
    for (int i = 0; i < ulps && std::isfinite(x); ++i)
        x = std::nextafter(x, std::numeric_limits<double>::infinity());
    return x;
}

// Outward widening after an add/sub.  A sum or difference that lands exactly
// on 0 is exact (no underflow is possible there), so zero endpoints stay put.
Interval widen_addsub(double lo, double hi) {
    if (lo != 0.0) lo = step_down(lo, kArithUlps);
    if (hi != 0.0) hi = step_up(hi, kArithUlps);
    return {lo, hi};
}

// Mul/div can underflow to zero inexactly, so zeros are widened too.
Interval widen_muldiv(double lo, double hi) {
    return {step_down(lo, kArithUlps), step_up(hi, kArithUlps)};
}

Interval widen_libm(double lo, double hi) {
    return {step_down(lo, kLibmUlps), step_up(hi, kLibmUlps)};
}

void reject_nan(double v) {
    if (std::isnan(v))
        throw enclosure_error(EnclosureFault::DomainViolation, "NaN in interval operation");
}

// Product with the convention 0 * inf = 0: an infinite endpoint is an
// enclosure artifact, the true factors are finite.
double mul_guarded(double x, double y) {
    if (x == 0.0 || y == 0.0) return 0.0;
    double r = x * y;
    reject_nan(r);
    return r;
}

bool is_exact_zero(const Interval& a) { return a.lo == 0.0 && a.hi == 0.0; }

} // namespace

std::string Interval::str() const {
    char buf[64];
    std::snprintf(buf, sizeof buf, "[%.17g, %.17g]", lo, hi);
    return buf;
}

Interval operator+(const Interval& a, const Interval& b) {
    double lo = a.lo + b.lo;
    double hi = a.hi + b.hi;
    reject_nan(lo);
    reject_nan(hi);
    return widen_addsub(lo, hi);
}

Interval operator-(const Interval& a, const Interval& b) {
    double lo = a.lo - b.hi;
    double hi = a.hi - b.lo;
    reject_nan(lo);
    reject_nan(hi);
    return widen_addsub(lo, hi);
}

Interval operator-(const Interval& a) { return {-a.hi, -a.lo}; }

Interval operator*(const Interval& a, const Interval& b) {
    if (is_exact_zero(a) || is_exact_zero(b)) return {0.0, 0.0};
    double p1 = mul_guarded(a.lo, b.lo);
    double p2 = mul_guarded(a.lo, b.hi);
    double p3 = mul_guarded(a.hi, b.lo);
    double p4 = mul_guarded(a.hi, b.hi);
    double lo = std::min(std::min(p1, p2), std::min(p3, p4));
    double hi = std::max(std::max(p1, p2), std::max(p3, p4));
    return widen_muldiv(lo, hi);
}

Interval operator/(const Interval& a, const Interval& b) {
    if (b.contains_zero())
        throw enclosure_error(EnclosureFault::SpanningZeroDivision, "division by interval spanning zero");
    if (is_exact_zero(a)) return {0.0, 0.0};
    double q1 = a.lo / b.lo;
    double q2 = a.lo / b.hi;
    double q3 = a.hi / b.lo;
    double q4 = a.hi / b.hi;
    reject_nan(q1);
    reject_nan(q2);
    reject_nan(q3);
    reject_nan(q4);
    double lo = std::min(std::min(q1, q2), std::min(q3, q4));
    double hi = std::max(std::max(q1, q2), std::max(q3, q4));
    return widen_muldiv(lo, hi);
}

Interval pow(const Interval& a, int k) {
    if (k < 0) throw std::invalid_argument("pow with negative exponent");
    if (k == 0) return {1.0, 1.0};
    if (k == 1) return a;
    Interval acc = a;
    for (int i = 1; i < k; ++i) acc = acc * a;
    // Even powers of sign-spanning intervals: the product form already
    // encloses the range but may dip below 0; clamp since x^even >= 0.
    if (k % 2 == 0 && acc.lo < 0.0) acc.lo = 0.0;
    return acc;
}

Interval root(const Interval& a, int k) {
    if (k != 2 && k != 3 && k != 4) throw std::invalid_argument("root index must be 2, 3 or 4");
    if (k == 3) {
        Interval r = widen_libm(std::cbrt(a.lo), std::cbrt(a.hi));
        if (a.lo == 0.0 && r.lo < 0.0) r.lo = 0.0;
        if (a.hi == 0.0 && r.hi > 0.0) r.hi = 0.0;
        return r;
    }
    if (a.hi < 0.0)
        throw enclosure_error(EnclosureFault::DomainViolation, "even root of negative interval");
    double lo = std::max(a.lo, 0.0);
    double hi = a.hi;
    double rlo = std::sqrt(lo);
    double rhi = std::sqrt(hi);
    if (k == 4) {
        rlo = std::sqrt(rlo);
        rhi = std::sqrt(rhi);
    }
    Interval r = widen_libm(rlo, rhi);
    if (r.lo < 0.0) r.lo = 0.0;
    if (lo == 0.0) r.lo = 0.0;
    return r;
}

Interval exp(const Interval& a) {
    Interval r = widen_libm(std::exp(a.lo), std::exp(a.hi));
    if (r.lo < 0.0) r.lo = 0.0;
    return r;
}

namespace {

// True if some point pi*(2m+offset_half/2)... concretely: checks whether any
// multiple q*pi/2 with q congruent to `which` mod 4 can lie in [a.lo, a.hi],
// using the pi enclosure.  q = 1 mod 4 are maxima of sin, q = 3 mod 4 minima;
// q = 0 mod 4 maxima of cos, q = 2 mod 4 minima.
bool contains_half_pi_multiple(const Interval& a, int which) {
    if (!std::isfinite(a.lo) || !std::isfinite(a.hi)) return true;
    if (a.hi - a.lo >= 2.0 * kPiHi) return true;
    long long qlo = static_cast<long long>(std::floor(2.0 * a.lo / kPiLo)) - 2;
    long long qhi = static_cast<long long>(std::ceil(2.0 * a.hi / kPiLo)) + 2;
    for (long long q = qlo; q <= qhi; ++q) {
        long long m = ((q % 4) + 4) % 4;
        if (m != which) continue;
        double clo = (q >= 0) ? 0.5 * q * kPiLo : 0.5 * q * kPiHi;
        double chi = (q >= 0) ? 0.5 * q * kPiHi : 0.5 * q * kPiLo;
        if (q == 0) clo = chi = 0.0;
        if (chi >= a.lo && clo <= a.hi) return true;
    }
    return false;
}

} // namespace

Interval sin(const Interval& a) {
    double s1 = std::sin(a.lo);
    double s2 = std::sin(a.hi);
    Interval r = widen_libm(std::min(s1, s2), std::max(s1, s2));
    if (contains_half_pi_multiple(a, 1)) r.hi = 1.0;
    if (contains_half_pi_multiple(a, 3)) r.lo = -1.0;
    r.lo = std::max(r.lo, -1.0);
    r.hi = std::min(r.hi, 1.0);
    return r;
}

Interval cos(const Interval& a) {
    double c1 = std::cos(a.lo);
    double c2 = std::cos(a.hi);
    Interval r = widen_libm(std::min(c1, c2), std::max(c1, c2));
    if (contains_half_pi_multiple(a, 0)) r.hi = 1.0;
    if (contains_half_pi_multiple(a, 2)) r.lo = -1.0;
    r.lo = std::max(r.lo, -1.0);
    r.hi = std::min(r.hi, 1.0);
    return r;
}

Interval abs(const Interval& a) {
    if (a.lo >= 0.0) return a;
    if (a.hi <= 0.0) return {-a.hi, -a.lo};
    return {0.0, std::max(-a.lo, a.hi)};
}

Interval min(std::span<const Interval> xs) {
    if (xs.empty()) throw std::invalid_argument("min of empty list");
    Interval r = xs[0];
    for (size_t i = 1; i < xs.size(); ++i) {
        r.lo = std::min(r.lo, xs[i].lo);
        r.hi = std::min(r.hi, xs[i].hi);
    }
    return r;
}

Interval max(std::span<const Interval> xs) {
    if (xs.empty()) throw std::invalid_argument("max of empty list");
    Interval r = xs[0];
    for (size_t i = 1; i < xs.size(); ++i) {
        r.lo = std::max(r.lo, xs[i].lo);
        r.hi = std::max(r.hi, xs[i].hi);
    }
    return r;
}

} // namespace floorcheck

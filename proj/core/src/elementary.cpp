// Rigorous exp, ln, sin, cos and sqrt on intervals.
//
// Library libm results carry no containment guarantee, so each function is a
// truncated Taylor (or atanh) series evaluated in interval arithmetic plus an
// explicit Lagrange remainder term. Arguments are reduced first so that the
// series converge fast:
//   exp: x = r * 2^s with |r| <= 1/8, exp(x) = exp(r)^(2^s)
//   ln:  x = m * 2^e with m in [1/sqrt2, sqrt2), ln x = e ln2 + 2 atanh((m-1)/(m+1))
//   sin: x = r + k pi/2 with |r| <= pi/4, quadrant chosen from k mod 4

#include <cubeslice/interval.hpp>

#include <cmath>
#include <limits>

namespace cubeslice {

namespace {

using rounding::mul_up;

constexpr double kPiLo = 0x1.921fb54442d18p+1;
constexpr double kPiHi = 0x1.921fb54442d19p+1;

// Upper bound on |r|^k / k! for k >= 1.
double power_over_factorial_up(double r_mag, int k) {
    Interval acc(1.0);
    const Interval r(r_mag);
    for (int i = 1; i <= k; ++i) acc = acc * r / Interval(static_cast<double>(i));
    return acc.hi();
}

Interval symmetric(double e) { return Interval::from_ordered(-e, e); }

// ---- exp ------------------------------------------------------------------

constexpr int kExpTerms = 14;

Interval exp_point(double x) {
    if (x == 0.0) return Interval(1.0);
    if (std::isnan(x)) throw DomainError("exp of NaN");
    if (x > 709.0) throw DomainError("exp overflow");
    if (x < -744.0) return Interval::from_ordered(0.0, std::numeric_limits<double>::denorm_min());

    int s = 0;
    while (std::fabs(std::ldexp(x, -s)) > 0.125) ++s;
    const Interval r(std::ldexp(x, -s));

    // Horner on sum_{k<=K} r^k/k!, coefficients 1/k! built by division.
    Interval inv_fact[kExpTerms + 1];
    inv_fact[0] = Interval(1.0);
    for (int k = 1; k <= kExpTerms; ++k) inv_fact[k] = inv_fact[k - 1] / Interval(static_cast<double>(k));
    Interval acc = inv_fact[kExpTerms];
    for (int k = kExpTerms - 1; k >= 0; --k) acc = acc * r + inv_fact[k];

    // Lagrange remainder: e^xi r^(K+1)/(K+1)! with e^xi < 2 for |xi| <= 1/8.
    const double rem = mul_up(2.0, power_over_factorial_up(r.mag(), kExpTerms + 1));
    Interval y = acc + symmetric(rem);
    if (y.lo() < 0.0) y = Interval::from_ordered(0.0, y.hi());
    for (int i = 0; i < s; ++i) y = y * y;
    return y;
}

// ---- ln -------------------------------------------------------------------

constexpr int kAtanhTerms = 16;

// 2 atanh(z) for |z| <= 0.35 via z * sum w^j/(2j+1), w = z^2.
Interval two_atanh(const Interval& z) {
    const Interval w = sqr(z);
    Interval acc = Interval(1.0) / Interval(2.0 * kAtanhTerms - 1.0);
    for (int j = kAtanhTerms - 2; j >= 0; --j) acc = acc * w + Interval(1.0) / Interval(2.0 * j + 1.0);
    // Tail sum_{j>=J} |z|^(2j+1)/(2j+1) <= |z|^(2J+1) / ((2J+1)(1 - z^2)).
    const Interval zm(z.mag());
    const Interval tail = pow_int(zm, 2 * kAtanhTerms + 1) /
                          (Interval(2.0 * kAtanhTerms + 1.0) * (Interval(1.0) - sqr(zm)));
    return Interval(2.0) * (z * acc + symmetric(tail.hi()));
}

Interval ln_point(double x) {
    if (!(x > 0.0)) throw DomainError("ln of non-positive value");
    if (x == 1.0) return Interval(0.0);
    int e = 0;
    double m = std::frexp(x, &e); // x = m 2^e, m in [0.5, 1)
    if (m < 0.70710678118654752) {
        m *= 2.0;
        e -= 1;
    }
    const Interval mi(m);
    const Interval z = (mi - Interval(1.0)) / (mi + Interval(1.0));
    Interval r = two_atanh(z);
    if (e != 0) r = r + Interval(static_cast<double>(e)) * ln2();
    return r;
}

// ---- sin / cos ------------------------------------------------------------

constexpr int kTrigTerms = 13;

Interval half_pi() { return Interval::from_ordered(kPiLo * 0.5, kPiHi * 0.5); }

Interval sin_kernel(const Interval& r) {
    const Interval w = sqr(r);
    // c_j = 1/(2j+1)!
    Interval c[kTrigTerms];
    c[0] = Interval(1.0);
    for (int j = 1; j < kTrigTerms; ++j) c[j] = c[j - 1] / Interval((2.0 * j) * (2.0 * j + 1.0));
    Interval acc = (kTrigTerms - 1) % 2 ? -c[kTrigTerms - 1] : c[kTrigTerms - 1];
    for (int j = kTrigTerms - 2; j >= 0; --j) acc = acc * w + (j % 2 ? -c[j] : c[j]);
    const double rem = power_over_factorial_up(r.mag(), 2 * kTrigTerms + 1);
    return r * acc + symmetric(rem);
}

Interval cos_kernel(const Interval& r) {
    const Interval w = sqr(r);
    // c_j = 1/(2j)!
    Interval c[kTrigTerms];
    c[0] = Interval(1.0);
    for (int j = 1; j < kTrigTerms; ++j) c[j] = c[j - 1] / Interval((2.0 * j - 1.0) * (2.0 * j));
    Interval acc = (kTrigTerms - 1) % 2 ? -c[kTrigTerms - 1] : c[kTrigTerms - 1];
    for (int j = kTrigTerms - 2; j >= 0; --j) acc = acc * w + (j % 2 ? -c[j] : c[j]);
    const double rem = power_over_factorial_up(r.mag(), 2 * kTrigTerms);
    return acc + symmetric(rem);
}

const Interval kUnitRange = Interval::from_ordered(-1.0, 1.0);

// sin(x + shift * pi/2) at a point.
Interval shifted_sin_point(double x, int shift) {
    if (!std::isfinite(x)) throw DomainError("sin of non-finite value");
    if (std::fabs(x) > 1e8) return kUnitRange;
    const double k = std::nearbyint(x / (0.5 * kPiLo));
    const Interval r = Interval(x) - Interval(k) * half_pi();
    const long long kq = static_cast<long long>(k) + shift;
    Interval v;
    switch (((kq % 4) + 4) % 4) {
    case 0: v = sin_kernel(r); break;
    case 1: v = cos_kernel(r); break;
    case 2: v = -sin_kernel(r); break;
    default: v = -cos_kernel(r); break;
    }
    return intersect(v, kUnitRange);
}

Interval shifted_sin(const Interval& a, int shift) {
    if (a.is_point()) return shifted_sin_point(a.lo(), shift);
    if (a.width() >= 2.0 * kPiLo || a.mag() > 1e8) return kUnitRange;
    double lo = std::min(shifted_sin_point(a.lo(), shift).lo(), shifted_sin_point(a.hi(), shift).lo());
    double hi = std::max(shifted_sin_point(a.lo(), shift).hi(), shifted_sin_point(a.hi(), shift).hi());
    // Extrema of sin(x + s pi/2) sit at x = k pi/2 with k + s odd.
    const long long k0 = static_cast<long long>(std::floor(a.lo() / (0.5 * kPiHi))) - 1;
    const long long k1 = static_cast<long long>(std::ceil(a.hi() / (0.5 * kPiLo))) + 1;
    for (long long k = k0; k <= k1; ++k) {
        const long long phase = (((k + shift) % 4) + 4) % 4;
        if (phase % 2 == 0) continue;
        if (!overlaps(Interval(static_cast<double>(k)) * half_pi(), a)) continue;
        if (phase == 1) hi = 1.0;
        else lo = -1.0;
    }
    return Interval::from_ordered(lo, hi);
}

} // namespace

Interval pi() { return Interval::from_ordered(kPiLo, kPiHi); }

Interval ln2() {
    static const Interval value = two_atanh(Interval(1.0) / Interval(3.0));
    return value;
}

Interval euler_e() {
    static const Interval value = exp_point(1.0);
    return value;
}

Interval exp(const Interval& a) {
    if (a.is_point()) return exp_point(a.lo());
    return Interval::from_ordered(exp_point(a.lo()).lo(), exp_point(a.hi()).hi());
}

Interval ln(const Interval& a) {
    if (!(a.lo() > 0.0)) throw DomainError("ln of interval " + a.to_string() + " not bounded away from zero");
    if (a.is_point()) return ln_point(a.lo());
    return Interval::from_ordered(ln_point(a.lo()).lo(), ln_point(a.hi()).hi());
}

Interval sqrt(const Interval& a) {
    if (a.lo() < 0.0) throw DomainError("sqrt of interval " + a.to_string() + " with negative part");
    return Interval::from_ordered(rounding::sqrt_down(a.lo()), rounding::sqrt_up(a.hi()));
}

Interval sin(const Interval& a) { return shifted_sin(a, 0); }

Interval cos(const Interval& a) { return shifted_sin(a, 1); }

} // namespace cubeslice

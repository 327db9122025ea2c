#include <cubeslice/interval.hpp>

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>
#include <ostream>

namespace cubeslice {

namespace rounding {

namespace {

// Below this magnitude the FMA residual of a product or quotient may itself
// be rounded, so the error-free transformations are not trusted.
constexpr double kTiny = 0x1p-960;

constexpr double kInf = std::numeric_limits<double>::infinity();

bool inexact_tiny(double r) { return std::fabs(r) < kTiny; }

} // namespace

double next_down(double x) { return std::nextafter(x, -kInf); }
double next_up(double x) { return std::nextafter(x, kInf); }

// TwoSum; err is the exact difference (a + b) - s when nothing overflows.
static double two_sum_err(double a, double b, double s) {
    const double bb = s - a;
    return (a - (s - bb)) + (b - bb);
}

double add_down(double a, double b) {
    const double s = a + b;
    if (!std::isfinite(s)) return std::isnan(s) ? s : next_down(s);
    return two_sum_err(a, b, s) < 0.0 ? next_down(s) : s;
}

double add_up(double a, double b) {
    const double s = a + b;
    if (!std::isfinite(s)) return std::isnan(s) ? s : next_up(s);
    return two_sum_err(a, b, s) > 0.0 ? next_up(s) : s;
}

double sub_down(double a, double b) { return add_down(a, -b); }
double sub_up(double a, double b) { return add_up(a, -b); }

double mul_down(double a, double b) {
    if (a == 0.0 || b == 0.0) return 0.0;
    const double p = a * b;
    if (!std::isfinite(p)) return std::isnan(p) ? p : next_down(p);
    if (inexact_tiny(p)) return next_down(p);
    return std::fma(a, b, -p) < 0.0 ? next_down(p) : p;
}

double mul_up(double a, double b) {
    if (a == 0.0 || b == 0.0) return 0.0;
    const double p = a * b;
    if (!std::isfinite(p)) return std::isnan(p) ? p : next_up(p);
    if (inexact_tiny(p)) return next_up(p);
    return std::fma(a, b, -p) > 0.0 ? next_up(p) : p;
}

// Sign of the exact residual a/b - q, from r = a - q*b (exact for normal q).
static int div_residual_sign(double a, double b, double q) {
    const double r = std::fma(-q, b, a);
    if (r == 0.0) return 0;
    return ((r > 0.0) == (b > 0.0)) ? 1 : -1;
}

double div_down(double a, double b) {
    if (a == 0.0) return 0.0;
    const double q = a / b;
    if (!std::isfinite(q)) return std::isnan(q) ? q : next_down(q);
    if (inexact_tiny(q) || inexact_tiny(a)) return next_down(q);
    return div_residual_sign(a, b, q) < 0 ? next_down(q) : q;
}

double div_up(double a, double b) {
    if (a == 0.0) return 0.0;
    const double q = a / b;
    if (!std::isfinite(q)) return std::isnan(q) ? q : next_up(q);
    if (inexact_tiny(q) || inexact_tiny(a)) return next_up(q);
    return div_residual_sign(a, b, q) > 0 ? next_up(q) : q;
}

double sqrt_down(double a) {
    if (a == 0.0) return 0.0;
    const double s = std::sqrt(a);
    if (!std::isfinite(s)) return s;
    if (inexact_tiny(a)) return next_down(s);
    return std::fma(-s, s, a) < 0.0 ? next_down(s) : s;
}

double sqrt_up(double a) {
    if (a == 0.0) return 0.0;
    const double s = std::sqrt(a);
    if (!std::isfinite(s)) return s;
    if (inexact_tiny(a)) return next_up(s);
    return std::fma(-s, s, a) > 0.0 ? next_up(s) : s;
}

} // namespace rounding

using namespace rounding;

Interval::Interval(double lo, double hi) : lo_(lo), hi_(hi) {
    if (std::isnan(lo) || std::isnan(hi) || lo > hi) {
        char buf[96];
        std::snprintf(buf, sizeof buf, "invalid interval [%.17g, %.17g]", lo, hi);
        throw PreconditionError(buf);
    }
}

double Interval::mid() const noexcept {
    if (lo_ == hi_) return lo_;
    return 0.5 * lo_ + 0.5 * hi_;
}

double Interval::width() const noexcept { return sub_up(hi_, lo_); }

double Interval::mag() const noexcept { return std::max(std::fabs(lo_), std::fabs(hi_)); }

double Interval::mig() const noexcept {
    if (contains_zero()) return 0.0;
    return std::min(std::fabs(lo_), std::fabs(hi_));
}

Interval& Interval::operator+=(const Interval& o) { return *this = *this + o; }
Interval& Interval::operator-=(const Interval& o) { return *this = *this - o; }
Interval& Interval::operator*=(const Interval& o) { return *this = *this * o; }
Interval& Interval::operator/=(const Interval& o) { return *this = *this / o; }

std::string Interval::to_string() const {
    char buf[64];
    std::snprintf(buf, sizeof buf, "[%.17g, %.17g]", lo_, hi_);
    return buf;
}

std::ostream& operator<<(std::ostream& os, const Interval& x) { return os << x.to_string(); }

Interval operator+(const Interval& a, const Interval& b) {
    return Interval::from_ordered(add_down(a.lo(), b.lo()), add_up(a.hi(), b.hi()));
}

Interval operator-(const Interval& a, const Interval& b) {
    return Interval::from_ordered(sub_down(a.lo(), b.hi()), sub_up(a.hi(), b.lo()));
}

Interval operator*(const Interval& a, const Interval& b) {
    const double al = a.lo(), ah = a.hi(), bl = b.lo(), bh = b.hi();
    if (al >= 0.0) {
        if (bl >= 0.0) return Interval::from_ordered(mul_down(al, bl), mul_up(ah, bh));
        if (bh <= 0.0) return Interval::from_ordered(mul_down(ah, bl), mul_up(al, bh));
        return Interval::from_ordered(mul_down(ah, bl), mul_up(ah, bh));
    }
    if (ah <= 0.0) {
        if (bl >= 0.0) return Interval::from_ordered(mul_down(al, bh), mul_up(ah, bl));
        if (bh <= 0.0) return Interval::from_ordered(mul_down(ah, bh), mul_up(al, bl));
        return Interval::from_ordered(mul_down(al, bh), mul_up(al, bl));
    }
    // a straddles zero
    if (bl >= 0.0) return Interval::from_ordered(mul_down(al, bh), mul_up(ah, bh));
    if (bh <= 0.0) return Interval::from_ordered(mul_down(ah, bl), mul_up(al, bl));
    return Interval::from_ordered(std::min(mul_down(al, bh), mul_down(ah, bl)),
                                  std::max(mul_up(al, bl), mul_up(ah, bh)));
}

Interval operator/(const Interval& a, const Interval& b) {
    if (b.contains_zero()) {
        throw DomainError("interval division by " + b.to_string() + " which contains zero");
    }
    const double al = a.lo(), ah = a.hi(), bl = b.lo(), bh = b.hi();
    if (bl > 0.0) {
        if (al >= 0.0) return Interval::from_ordered(div_down(al, bh), div_up(ah, bl));
        if (ah <= 0.0) return Interval::from_ordered(div_down(al, bl), div_up(ah, bh));
        return Interval::from_ordered(div_down(al, bl), div_up(ah, bl));
    }
    // b strictly negative
    if (al >= 0.0) return Interval::from_ordered(div_down(ah, bh), div_up(al, bl));
    if (ah <= 0.0) return Interval::from_ordered(div_down(ah, bl), div_up(al, bh));
    return Interval::from_ordered(div_down(ah, bh), div_up(al, bh));
}

Interval sqr(const Interval& a) { return pow_int(a, 2); }

Interval abs(const Interval& a) {
    if (a.lo() >= 0.0) return a;
    if (a.hi() <= 0.0) return -a;
    return Interval::from_ordered(0.0, a.mag());
}

Interval recip(const Interval& a) { return Interval(1.0) / a; }

namespace {

// Enclosure of x^k for a scalar x and k >= 1, by binary powering.
Interval power_point(double x, int k) {
    Interval base(x);
    Interval result(1.0);
    while (k > 0) {
        if (k & 1) result = result * base;
        k >>= 1;
        if (k > 0) base = base * base;
    }
    return result;
}

} // namespace

Interval pow_int(const Interval& a, int k) {
    if (k == 0) return Interval(1.0);
    if (k < 0) {
        if (a.contains_zero()) {
            throw DomainError("negative power of interval " + a.to_string() + " containing zero");
        }
        return recip(pow_int(a, -k));
    }
    if (k == 1) return a;
    if (k % 2 == 1 || a.lo() >= 0.0) {
        return Interval::from_ordered(power_point(a.lo(), k).lo(), power_point(a.hi(), k).hi());
    }
    if (a.hi() <= 0.0) {
        return Interval::from_ordered(power_point(-a.hi(), k).lo(), power_point(-a.lo(), k).hi());
    }
    return Interval::from_ordered(0.0, power_point(a.mag(), k).hi());
}

Interval hull(const Interval& a, const Interval& b) {
    return Interval::from_ordered(std::min(a.lo(), b.lo()), std::max(a.hi(), b.hi()));
}

std::optional<Interval> try_intersect(const Interval& a, const Interval& b) {
    const double lo = std::max(a.lo(), b.lo());
    const double hi = std::min(a.hi(), b.hi());
    if (lo > hi) return std::nullopt;
    return Interval::from_ordered(lo, hi);
}

Interval intersect(const Interval& a, const Interval& b) {
    if (auto r = try_intersect(a, b)) return *r;
    throw SoundnessError("empty intersection of " + a.to_string() + " and " + b.to_string());
}

bool overlaps(const Interval& a, const Interval& b) { return try_intersect(a, b).has_value(); }

std::vector<Interval> subdivide(const Interval& a, std::size_t n) {
    if (n == 0) throw PreconditionError("subdivide: piece count must be positive");
    std::vector<Interval> pieces;
    pieces.reserve(n);
    const double span = a.hi() - a.lo();
    double left = a.lo();
    for (std::size_t i = 1; i <= n; ++i) {
        double right = (i == n) ? a.hi()
                                : a.lo() + span * (static_cast<double>(i) / static_cast<double>(n));
        right = std::clamp(right, left, a.hi());
        pieces.push_back(Interval::from_ordered(left, right));
        left = right;
    }
    return pieces;
}

} // namespace cubeslice

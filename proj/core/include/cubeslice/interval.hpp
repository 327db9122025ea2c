#ifndef CUBESLICE_INTERVAL_HPP
#define CUBESLICE_INTERVAL_HPP

#include <cubeslice/error.hpp>

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace cubeslice {

// Closed interval [lo, hi] of binary64 numbers.
//
// Rounding policy (the only place it is decided): every primitive is computed
// in round-to-nearest, and the exact rounding error is recovered with an
// error-free transformation (TwoSum / FMA residual). An endpoint is moved one
// ulp outward only when the rounded result is not exact. Results near the
// underflow threshold, where the residual is itself inexact, are nudged
// unconditionally. The FPU rounding mode is never touched, so every function
// here is re-entrant.
class Interval {
public:
    constexpr Interval() noexcept = default;
    constexpr Interval(double x) noexcept : lo_(x), hi_(x) {} // NOLINT: implicit point interval
    Interval(double lo, double hi);

    constexpr double lo() const noexcept { return lo_; }
    constexpr double hi() const noexcept { return hi_; }

    double mid() const noexcept;
    double width() const noexcept;       // rounded up
    double mag() const noexcept;         // max |x|, exact
    double mig() const noexcept;         // min |x|, exact

    bool is_point() const noexcept { return lo_ == hi_; }
    bool contains(double x) const noexcept { return lo_ <= x && x <= hi_; }
    bool contains(const Interval& o) const noexcept { return lo_ <= o.lo_ && o.hi_ <= hi_; }
    bool contains_zero() const noexcept { return lo_ <= 0.0 && 0.0 <= hi_; }
    bool strictly_positive() const noexcept { return lo_ > 0.0; }
    bool strictly_negative() const noexcept { return hi_ < 0.0; }

    Interval operator-() const noexcept { return from_ordered(-hi_, -lo_); }

    Interval& operator+=(const Interval& o);
    Interval& operator-=(const Interval& o);
    Interval& operator*=(const Interval& o);
    Interval& operator/=(const Interval& o);

    friend bool operator==(const Interval&, const Interval&) = default;

    // Skips the ordering check; callers guarantee lo <= hi.
    static constexpr Interval from_ordered(double lo, double hi) noexcept {
        Interval r;
        r.lo_ = lo;
        r.hi_ = hi;
        return r;
    }

    std::string to_string() const;

private:
    double lo_ = 0.0;
    double hi_ = 0.0;
};

std::ostream& operator<<(std::ostream& os, const Interval& x);

Interval operator+(const Interval& a, const Interval& b);
Interval operator-(const Interval& a, const Interval& b);
Interval operator*(const Interval& a, const Interval& b);
// Throws DomainError when b contains zero.
Interval operator/(const Interval& a, const Interval& b);

Interval sqr(const Interval& a);
Interval abs(const Interval& a);
Interval recip(const Interval& a);

// Integer power. Negative exponents require 0 not in a.
Interval pow_int(const Interval& a, int k);

// Elementary functions with rigorous enclosures (see elementary.cpp).
Interval exp(const Interval& a);
Interval ln(const Interval& a);    // requires a.lo() > 0
Interval sqrt(const Interval& a);  // requires a.lo() >= 0
Interval sin(const Interval& a);
Interval cos(const Interval& a);

// Stored outward enclosure of pi (the two binary64 neighbours of pi).
Interval pi();
Interval ln2();
Interval euler_e();

// Set operations.
Interval hull(const Interval& a, const Interval& b);
std::optional<Interval> try_intersect(const Interval& a, const Interval& b);
// Throws SoundnessError carrying both operands when the intersection is empty.
Interval intersect(const Interval& a, const Interval& b);
bool overlaps(const Interval& a, const Interval& b);

inline bool contains(const Interval& a, double x) { return a.contains(x); }
inline double width(const Interval& a) { return a.width(); }

// Splits a into n consecutive pieces. Consecutive pieces share an endpoint,
// the first starts at a.lo() and the last ends at a.hi().
std::vector<Interval> subdivide(const Interval& a, std::size_t n);

// Directed-rounding primitives, exposed for modules that need a one-sided
// bound on a scalar expression.
namespace rounding {
double add_down(double a, double b);
double add_up(double a, double b);
double sub_down(double a, double b);
double sub_up(double a, double b);
double mul_down(double a, double b);
double mul_up(double a, double b);
double div_down(double a, double b);
double div_up(double a, double b);
double sqrt_down(double a);
double sqrt_up(double a);
double next_down(double x);
double next_up(double x);
} // namespace rounding

} // namespace cubeslice

#endif

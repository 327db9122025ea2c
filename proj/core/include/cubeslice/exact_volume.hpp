#ifndef CUBESLICE_EXACT_VOLUME_HPP
#define CUBESLICE_EXACT_VOLUME_HPP

#include <cubeslice/interval.hpp>

#include <gmpxx.h>

#include <string>
#include <vector>

namespace cubeslice {

// Arbitrary-precision rational, always canonical (gcd 1, positive denominator).
using ExactRational = mpq_class;

// Central section of [-1/2, 1/2]^n orthogonal to (1, ..., 1) has volume
// sqrt(n) * Q(n) with
//
//   Q(n) = 1 / (2^n (n-1)!) * sum_{i=0}^{n} (-1)^i C(n,i) (n-2i)^(n-1) sign(n-2i).
//
// The i = n/2 term of even n is zero because sign(0) = 0; 0^0 never occurs.
// Throws PreconditionError for n < 1.
ExactRational q_volume(int n);

// Exact decision of I(n+1) > I(n), via (n+1) Q(n+1)^2 > n Q(n)^2.
// Requires n >= 2; throws Error if a Q value is not positive.
bool is_increasing_step(int n);

struct StepResult {
    int n = 0;
    bool increasing = false;
};

struct MonotonicityCertificate {
    int n_lo = 0;
    int n_hi = 0; // steps n_lo .. n_hi - 1 were decided
    std::vector<StepResult> steps;
    bool verdict = false; // every listed step strictly increasing
};

// Decides the steps n = n_lo, ..., n_hi - 1. Requires 2 <= n_lo < n_hi.
MonotonicityCertificate verify_range(int n_lo, int n_hi, unsigned jobs = 1);

enum class LimitStatus { Below, NotBelow, Indeterminate };

const char* to_string(LimitStatus s);

// Whether sqrt(n) Q(n) < sqrt(6/pi), decided as n Q(n)^2 < 6/pi against an
// outward enclosure of pi. Indeterminate if the enclosure is too wide to tell.
LimitStatus below_limit(int n, const Interval& pi_enclosure);

// Outward binary64 enclosure of an exact rational.
Interval enclose(const ExactRational& q);

// Enclosure of the volume sqrt(n) Q(n).
Interval volume_enclosure(int n);

// Exact decimal bounds lo <= value <= hi with `digits` fractional digits.
struct DecimalBounds {
    std::string lo;
    std::string hi;
};

DecimalBounds volume_decimal(int n, int digits);
// Bounds on I(n+1) - I(n).
DecimalBounds gap_decimal(int n, int digits);

} // namespace cubeslice

#endif

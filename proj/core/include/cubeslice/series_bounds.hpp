#ifndef CUBESLICE_SERIES_BOUNDS_HPP
#define CUBESLICE_SERIES_BOUNDS_HPP

#include <cubeslice/interval.hpp>
#include <cubeslice/taylor_series.hpp>

#include <optional>

namespace cubeslice {

// Truncation index N of the finite sum and the coefficient order m.
struct TruncationParams {
    int N = 20;
    int m = 0;
};

// Enclosures of f^(m)(t)/m! built as a finite alternating sum S(t; N, m) plus
// a symmetric remainder E(t; N, m) * [-1, 1]. The enclosure holds for every
// point of the interval argument.
//
//   f(t) = sin t / t                 t in [0, pi/2],  needs 2N >= m
//   F(t) = (sin t / t - 1) / t^2     t in [0, pi/2],  needs 2N >= m
//   g(t) = log(1 + t) / t            |t| < 1,         needs N >= m
//
// f and F share the remainder bound e^t t^(2N+2-m) / ((2N+2-m)! m!).
Interval sinc_coeff(const Interval& t, TruncationParams p);
Interval sinc_quotient_coeff(const Interval& t, TruncationParams p);
Interval log1p_over_t_coeff(const Interval& t, TruncationParams p);

// Radius of the remainder term alone, rounded up.
double sinc_remainder_bound(double t, TruncationParams p);
double log1p_over_t_remainder_bound(double t_abs, TruncationParams p);

struct RemainderWidths {
    double sinc = 0.0;                 // shared by f and F
    std::optional<double> log1p_over_t; // empty when t_max >= 1 (bound undefined)
};

RemainderWidths remainder_widths(TruncationParams p, double t_max);

// Order-K series whose coefficient m is the enclosure above, about `center`.
TaylorSeries sinc_series(const Interval& center, int N, int order);
TaylorSeries sinc_quotient_series(const Interval& center, int N, int order);
TaylorSeries log1p_over_t_series(const Interval& center, int N, int order);

} // namespace cubeslice

#endif

#ifndef CUBESLICE_XT_PIPELINE_HPP
#define CUBESLICE_XT_PIPELINE_HPP

#include <cubeslice/interval.hpp>
#include <cubeslice/taylor_series.hpp>

#include <cstddef>
#include <optional>
#include <vector>

namespace cubeslice {

// Rigorous Taylor coefficients of the change of variables
//
//   x(t) = sqrt(-6 log(sin t / t)),   t in [0, a],
//
// and of its inverse t(x). Near t = 0 neither log nor sqrt can be expanded
// directly, so x is assembled as
//
//   x = t * sqrt(h),  h = g(t^2 F) * (-6 F),  F = (sin t/t - 1)/t^2,  g(u) = log(1+u)/u
//
// where every factor is analytic and h(0) = 1.

// How [0, a] is cut into pieces no wider than subdiv_width.
enum class Subdivision {
    Bisection, // halve repeatedly: 2^k equal pieces, k minimal
    Uniform,   // ceil(a / subdiv_width) equal pieces
};

struct PipelineConfig {
    double a = 1.1;                // right end of the t range, 1 < a < pi/2
    double subdiv_width = 0.001;   // upper bound on the width of each piece of [0, a]
    Subdivision subdivision = Subdivision::Bisection;
    int N = 20;                    // truncation index for the series bounds
    int order = 7;                 // Taylor order K
    double direct_threshold = 0.1; // direct evaluation only tried for t0.lo() >= this
    bool use_direct = true;
    unsigned jobs = 0;             // 0: resolve from environment / hardware

    void validate() const;
    std::size_t piece_count() const;
};

struct CoeffRow {
    Interval center;
    std::vector<Interval> coeffs;
};

// Hull over all subintervals of each coefficient enclosure, plus the rows.
struct CoeffTable {
    std::vector<Interval> hull;
    std::vector<CoeffRow> rows;
};

struct SweepResult {
    CoeffTable x_table;
    CoeffTable t_table;
    Interval derivative_bound; // [0, K! * max |<t>_K|], upper end is R
    std::size_t direct_successes = 0;
    bool round_trip_ok = false;

    double R() const { return derivative_bound.hi(); }
};

// Thrown when one subinterval violates a requirement (x' touching zero,
// disjoint direct/scheme enclosures, domain failure). Carries the piece.
class SubintervalFailure : public Error {
public:
    SubintervalFailure(std::size_t index, Interval piece, const std::string& why);
    std::size_t index() const noexcept { return index_; }
    const Interval& piece() const noexcept { return piece_; }

private:
    std::size_t index_;
    Interval piece_;
};

// Series of x about every point of t0 via the factored scheme.
TaylorSeries x_series_scheme(const Interval& t0, const PipelineConfig& cfg);

// Series of x straight from sqrt(-6 log(sin t / t)). Empty when t0 is below
// the threshold or any kernel leaves its domain, which is expected near 0.
std::optional<TaylorSeries> x_series_direct(const Interval& t0, const PipelineConfig& cfg);

// Enclosure of the range of x over t.
Interval x_at(const Interval& t, const PipelineConfig& cfg);

// Whether compose(t_series, x_series) encloses the identity (t0, 1, 0, ..., 0).
bool round_trip_encloses_identity(const TaylorSeries& t_series, const TaylorSeries& x_series);

// Subdivide [0, a], enclose x and t coefficients on every piece, hull them,
// and extract R = K! * max |<t>_K|.
SweepResult sweep(const PipelineConfig& cfg);

} // namespace cubeslice

#endif

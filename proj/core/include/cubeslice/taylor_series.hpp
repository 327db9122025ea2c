#ifndef CUBESLICE_TAYLOR_SERIES_HPP
#define CUBESLICE_TAYLOR_SERIES_HPP

#include <cubeslice/interval.hpp>

#include <cstdint>
#include <span>
#include <vector>

namespace cubeslice {

// Enclosures of the first K+1 Taylor coefficients of a function, valid for
// every expansion point in an interval-valued center:
//
//   for all c in center():  f^(k)(c) / k!  lies in  coeff(k),  k = 0..order()
//
// This is not a Taylor model; there is no remainder term. Truncating a product
// or composition at order K is exact for the coefficients that are kept,
// because the recurrences for coefficient k only read coefficients <= k.
class TaylorSeries {
public:
    static constexpr int kDefaultOrder = 7;

    // Constant function `value` about `center`.
    static TaylorSeries constant(const Interval& center, const Interval& value, int order = kDefaultOrder);
    // The identity t -> t about `center`: coefficients (center, 1, 0, ...).
    static TaylorSeries variable(const Interval& center, int order = kDefaultOrder);

    TaylorSeries(Interval center, std::vector<Interval> coeffs);

    const Interval& center() const noexcept { return center_; }
    int order() const noexcept { return static_cast<int>(coeffs_.size()) - 1; }
    const Interval& operator[](int k) const { return coeffs_.at(static_cast<std::size_t>(k)); }
    std::span<const Interval> coeffs() const noexcept { return coeffs_; }

    // Enclosure of f^(m)(c) = m! * coeff(m).
    Interval derivative(int m) const;

private:
    Interval center_;
    std::vector<Interval> coeffs_;
};

TaylorSeries operator+(const TaylorSeries& s, const TaylorSeries& r);
TaylorSeries operator-(const TaylorSeries& s, const TaylorSeries& r);
TaylorSeries operator*(const TaylorSeries& s, const TaylorSeries& r);
TaylorSeries scale(const TaylorSeries& s, const Interval& factor);

// Quotient s / r; requires 0 not in r[0].
TaylorSeries divide(const TaylorSeries& s, const TaylorSeries& r);

// Square root by the recurrence r_k = (s_k - sum_{j=1}^{k-1} r_j r_{k-j}) / (2 r_0).
// Throws DomainError unless s[0] is bounded away from zero.
TaylorSeries sqrt(const TaylorSeries& s);

// log(s); requires s[0] > 0.
TaylorSeries log(const TaylorSeries& s);

// Coefficients of g o f about f.center() via Faa di Bruno. g must be expanded
// about an interval that contains f[0] (every value f can take at a point of
// the center), otherwise PreconditionError.
TaylorSeries compose(const TaylorSeries& g, const TaylorSeries& f);

// Inverse-function series t(x) about x0 = x[0]. The result is valid for every
// x0 in x[0]; its constant coefficient is t0 (the center the x series was
// taken at). Throws DomainError when x[1] contains zero.
TaylorSeries invert(const TaylorSeries& x, const Interval& t0);

// Horner evaluation of the truncated polynomial at deviation dx. No remainder
// is added, so this is not an enclosure of the function itself.
Interval evaluate(const TaylorSeries& s, const Interval& dx);

// Coefficientwise intersection of two enclosures of the same function.
// Throws SoundnessError if any pair is disjoint.
TaylorSeries intersect(const TaylorSeries& a, const TaylorSeries& b);

// One integer partition k = sum_i i*b_i, stored as multiplicities b_1..b_k.
struct Partition {
    std::vector<int> multiplicity; // multiplicity[i-1] = b_i
    int parts = 0;                 // m = sum b_i
    std::uint64_t multinomial = 0; // m! / (b_1! ... b_k!)
};

// All partitions of k (k >= 1), enumerated once per k and cached.
std::span<const Partition> partitions(int k);

} // namespace cubeslice

#endif

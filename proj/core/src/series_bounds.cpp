#include <cubeslice/series_bounds.hpp>

#include <gmpxx.h>

#include <cmath>
#include <limits>
#include <string>

namespace cubeslice {

namespace {

// Largest argument accepted for f and F; the pipeline needs t < pi/2.
constexpr double kSincDomainMax = 0x1.921fb54442d18p+0;

// Outward binary64 enclosure of a nonnegative integer of any size.
Interval enclose(const mpz_class& z) {
    const double d = z.get_d(); // truncates toward zero
    const int c = cmp(z, d);
    if (c == 0) return Interval(d);
    return c > 0 ? Interval::from_ordered(d, rounding::next_up(d))
                 : Interval::from_ordered(rounding::next_down(d), d);
}

mpz_class factorial(unsigned long n) {
    mpz_class f;
    mpz_fac_ui(f.get_mpz_t(), n);
    return f;
}

mpz_class binomial(unsigned long n, unsigned long k) {
    mpz_class b;
    mpz_bin_uiui(b.get_mpz_t(), n, k);
    return b;
}

void check_sinc_args(const Interval& t, TruncationParams p, const char* what) {
    if (p.m < 0 || 2 * p.N < p.m) {
        throw PreconditionError(std::string(what) + ": need m >= 0 and N >= m/2 (N=" + std::to_string(p.N) +
                                ", m=" + std::to_string(p.m) + ")");
    }
    if (t.lo() < 0.0 || t.hi() > kSincDomainMax) {
        throw PreconditionError(std::string(what) + ": argument " + t.to_string() + " outside [0, pi/2]");
    }
}

// sum_{k >= m/2}^{N} (-1)^(k+sign_shift) t^(2k-m) / ((2k-m)! * extra(k)) / m!
template <class ExtraDenominator>
Interval alternating_sinc_sum(const Interval& t, TruncationParams p, int sign_shift, ExtraDenominator extra) {
    Interval sum(0.0);
    for (int k = (p.m + 1) / 2; k <= p.N; ++k) {
        const int j = 2 * k - p.m;
        const mpz_class denom = factorial(static_cast<unsigned long>(j)) * extra(k);
        Interval term = pow_int(t, j) / enclose(denom);
        if ((k + sign_shift) % 2 != 0) term = -term;
        sum = sum + term;
    }
    return sum / enclose(factorial(static_cast<unsigned long>(p.m)));
}

Interval symmetric(double e) { return Interval::from_ordered(-e, e); }

} // namespace

double sinc_remainder_bound(double t, TruncationParams p) {
    if (t < 0.0) throw PreconditionError("sinc remainder: t must be nonnegative");
    const int j = 2 * p.N + 2 - p.m;
    if (t == 0.0) return 0.0;
    const Interval ti(t);
    const Interval e = exp(ti) * pow_int(ti, j) /
                       (enclose(factorial(static_cast<unsigned long>(j))) *
                        enclose(factorial(static_cast<unsigned long>(p.m))));
    return e.hi();
}

Interval sinc_coeff(const Interval& t, TruncationParams p) {
    check_sinc_args(t, p, "sinc_coeff");
    const Interval s = alternating_sinc_sum(t, p, 0, [](int k) -> mpz_class { return mpz_class(2 * k + 1); });
    return s + symmetric(sinc_remainder_bound(t.hi(), p));
}

Interval sinc_quotient_coeff(const Interval& t, TruncationParams p) {
    check_sinc_args(t, p, "sinc_quotient_coeff");
    const Interval s = alternating_sinc_sum(t, p, 1, [](int k) -> mpz_class {
        return mpz_class(2 * k + 1) * mpz_class(2 * k + 2) * mpz_class(2 * k + 3);
    });
    return s + symmetric(sinc_remainder_bound(t.hi(), p));
}

double log1p_over_t_remainder_bound(double t_abs, TruncationParams p) {
    if (!(t_abs >= 0.0 && t_abs < 1.0)) {
        throw DomainError("log1p_over_t remainder: |t| = " + std::to_string(t_abs) + " must be < 1");
    }
    if (t_abs == 0.0) return 0.0;
    const Interval T(t_abs);
    const Interval one_minus = Interval(1.0) - T;
    if (p.m == 0) return (pow_int(T, p.N + 1) / pow_int(one_minus, p.N + 2)).hi();
    const Interval m(static_cast<double>(p.m));
    const Interval lead = pow_int(Interval(2.0) * euler_e() / m, p.m) *
                          enclose(factorial(static_cast<unsigned long>(p.m))) *
                          enclose(binomial(static_cast<unsigned long>(p.m + p.N + 1), static_cast<unsigned long>(p.m)));
    return (lead * pow_int(T, p.N + 1) / pow_int(one_minus, p.m + p.N + 2)).hi();
}

Interval log1p_over_t_coeff(const Interval& t, TruncationParams p) {
    if (p.m < 0 || p.N < p.m) {
        throw PreconditionError("log1p_over_t_coeff: need N >= m >= 0 (N=" + std::to_string(p.N) +
                                ", m=" + std::to_string(p.m) + ")");
    }
    if (!(t.mag() < 1.0)) {
        throw DomainError("log1p_over_t_coeff: argument " + t.to_string() + " outside (-1, 1)");
    }
    Interval sum(0.0);
    for (int k = 0; k <= p.N; ++k) {
        const mpz_class c = binomial(static_cast<unsigned long>(k + p.m), static_cast<unsigned long>(p.m));
        Interval term = enclose(c) * pow_int(t, k) / Interval(static_cast<double>(k + p.m + 1));
        if ((k + p.m) % 2 != 0) term = -term;
        sum = sum + term;
    }
    return sum + symmetric(log1p_over_t_remainder_bound(t.mag(), p));
}

RemainderWidths remainder_widths(TruncationParams p, double t_max) {
    RemainderWidths w;
    w.sinc = sinc_remainder_bound(t_max, p);
    if (std::fabs(t_max) < 1.0) w.log1p_over_t = log1p_over_t_remainder_bound(std::fabs(t_max), p);
    return w;
}

namespace {

template <class Coeff>
TaylorSeries build_series(const Interval& center, int N, int order, Coeff coeff) {
    std::vector<Interval> c(static_cast<std::size_t>(order) + 1);
    for (int m = 0; m <= order; ++m) c[static_cast<std::size_t>(m)] = coeff(center, TruncationParams{N, m});
    return TaylorSeries(center, std::move(c));
}

} // namespace

TaylorSeries sinc_series(const Interval& center, int N, int order) {
    return build_series(center, N, order, sinc_coeff);
}

TaylorSeries sinc_quotient_series(const Interval& center, int N, int order) {
    return build_series(center, N, order, sinc_quotient_coeff);
}

TaylorSeries log1p_over_t_series(const Interval& center, int N, int order) {
    return build_series(center, N, order, log1p_over_t_coeff);
}

} // namespace cubeslice

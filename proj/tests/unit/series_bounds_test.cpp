#include <cubeslice/series_bounds.hpp>

#include "oracle.hpp"

#include <gtest/gtest.h>

#include <cmath>
#include <random>
#include <vector>

using cubeslice::Interval;
using cubeslice::TruncationParams;
using oracle::Real;

namespace {

// Taylor coefficients about t0 > 0, by multiplying known expansions in MPFR:
//   sin(t0 + u)   = sum sin(t0 + k pi/2) u^k / k!
//   1/(t0 + u)^p  = sum (-1)^k C(k+p-1, k) u^k / t0^(k+p)
//   log(1 + t0 + u) = log(1 + t0) + sum_{k>=1} (-1)^(k+1) u^k / (k (1+t0)^k)
std::vector<Real> sin_coeffs(const Real& t0, int K) {
    std::vector<Real> c;
    Real fact(1.0);
    for (int k = 0; k <= K; ++k) {
        if (k > 0) fact = fact * Real(static_cast<double>(k));
        const Real d = k % 4 == 0 ? oracle::sin(t0) : k % 4 == 1 ? oracle::cos(t0)
                     : k % 4 == 2 ? Real(0.0) - oracle::sin(t0) : Real(0.0) - oracle::cos(t0);
        c.push_back(d / fact);
    }
    return c;
}

std::vector<Real> inverse_power_coeffs(const Real& t0, int p, int K) {
    std::vector<Real> c;
    Real binom(1.0);
    Real power(1.0);
    for (int i = 0; i < p; ++i) power = power * t0;
    for (int k = 0; k <= K; ++k) {
        if (k > 0) {
            binom = binom * Real(static_cast<double>(k + p - 1)) / Real(static_cast<double>(k));
            power = power * t0;
        }
        const Real v = binom / power;
        c.push_back(k % 2 ? Real(0.0) - v : v);
    }
    return c;
}

std::vector<Real> log1p_coeffs(const Real& t0, int K) {
    std::vector<Real> c{oracle::log1p(t0)};
    const Real base = Real(1.0) + t0;
    Real power(1.0);
    for (int k = 1; k <= K; ++k) {
        power = power * base;
        const Real v = Real(1.0) / (Real(static_cast<double>(k)) * power);
        c.push_back(k % 2 ? v : Real(0.0) - v);
    }
    return c;
}

std::vector<Real> cauchy(const std::vector<Real>& a, const std::vector<Real>& b) {
    std::vector<Real> r(a.size());
    for (std::size_t k = 0; k < a.size(); ++k) {
        for (std::size_t i = 0; i <= k; ++i) r[k] = r[k] + a[i] * b[k - i];
    }
    return r;
}

constexpr int kOrder = 7;

std::vector<Real> sinc_reference(double t) {
    return cauchy(sin_coeffs(Real(t), kOrder), inverse_power_coeffs(Real(t), 1, kOrder));
}

std::vector<Real> sinc_quotient_reference(double t) {
    auto sinc = sinc_reference(t);
    sinc[0] = sinc[0] - Real(1.0);
    return cauchy(sinc, inverse_power_coeffs(Real(t), 2, kOrder));
}

std::vector<Real> log1p_over_t_reference(double t) {
    return cauchy(log1p_coeffs(Real(t), kOrder), inverse_power_coeffs(Real(t), 1, kOrder));
}

} // namespace

TEST(SeriesBounds, SincExamples) {
    EXPECT_TRUE(cubeslice::sinc_coeff(Interval(0.0), {20, 0}).contains(1.0));
    EXPECT_EQ(cubeslice::sinc_coeff(Interval(0.0), {20, 0}), Interval(1.0));
    const Interval v = cubeslice::sinc_coeff(Interval(1.1), {20, 0});
    EXPECT_TRUE(oracle::encloses(v, oracle::sin(Real(1.1)) / Real(1.1)));
    EXPECT_NEAR(v.mid(), 0.8101885, 1e-7);
    EXPECT_LT(v.width(), 1e-14);
    EXPECT_TRUE(oracle::encloses(cubeslice::sinc_coeff(Interval(0.0), {20, 2}), mpq_class(-1, 6)));
}

TEST(SeriesBounds, SincQuotientExamples) {
    EXPECT_TRUE(oracle::encloses(cubeslice::sinc_quotient_coeff(Interval(0.0), {20, 0}), mpq_class(-1, 6)));
    const Real t(1.1);
    const Interval v = cubeslice::sinc_quotient_coeff(Interval(1.1), {20, 0});
    EXPECT_TRUE(oracle::encloses(v, (oracle::sin(t) / t - Real(1.0)) / (t * t)));
    EXPECT_NEAR(v.mid(), -0.15687, 1e-5);
    EXPECT_TRUE(cubeslice::sinc_quotient_coeff(Interval(0.0), {20, 1}).contains(0.0));
}

TEST(SeriesBounds, Log1pOverTExamples) {
    EXPECT_TRUE(cubeslice::log1p_over_t_coeff(Interval(0.0), {20, 0}).contains(1.0));
    EXPECT_TRUE(cubeslice::log1p_over_t_coeff(Interval(0.0), {20, 1}).contains(-0.5));
    const Real t(-0.189);
    const Interval v = cubeslice::log1p_over_t_coeff(Interval(-0.189), {20, 0});
    EXPECT_TRUE(oracle::encloses(v, oracle::log1p(t) / t));
    EXPECT_NEAR(v.mid(), 1.1083980151678525, 1e-12);
}

TEST(SeriesBounds, PreconditionsAreEnforced) {
    EXPECT_THROW(cubeslice::sinc_coeff(Interval(-0.1, 0.5), {20, 0}), cubeslice::PreconditionError);
    EXPECT_THROW(cubeslice::sinc_coeff(Interval(0.0, 1.6), {20, 0}), cubeslice::PreconditionError);
    EXPECT_THROW(cubeslice::sinc_coeff(Interval(0.5), {2, 5}), cubeslice::PreconditionError);
    EXPECT_THROW(cubeslice::sinc_quotient_coeff(Interval(0.5), {2, 5}), cubeslice::PreconditionError);
    EXPECT_THROW(cubeslice::log1p_over_t_coeff(Interval(-1.0, 0.0), {20, 0}), cubeslice::DomainError);
    EXPECT_THROW(cubeslice::log1p_over_t_coeff(Interval(0.1), {3, 4}), cubeslice::PreconditionError);
}

TEST(SeriesBounds, RemainderWidths) {
    const auto w = cubeslice::remainder_widths({20, 0}, 1.1);
    const Real expected = oracle::exp(Real(1.1)) * [] {
        Real p(1.0), f(1.0);
        for (int i = 1; i <= 42; ++i) {
            p = p * Real(1.1);
            f = f * Real(static_cast<double>(i));
        }
        return p / f;
    }();
    EXPECT_FALSE(Real(w.sinc) < expected);
    EXPECT_NEAR(w.sinc / expected.to_double(), 1.0, 1e-12);
    EXPECT_FALSE(w.log1p_over_t.has_value()); // t = 1.1 is outside the g domain

    const auto zero = cubeslice::remainder_widths({20, 0}, 0.0);
    EXPECT_EQ(zero.sinc, 0.0);
    ASSERT_TRUE(zero.log1p_over_t.has_value());
    EXPECT_EQ(*zero.log1p_over_t, 0.0);

    for (int m = 0; m <= 7; ++m) {
        EXPECT_LT(cubeslice::remainder_widths({20, m}, 1.1).sinc, cubeslice::remainder_widths({10, m}, 1.1).sinc);
        EXPECT_LT(*cubeslice::remainder_widths({20, m}, 0.3).log1p_over_t,
                  *cubeslice::remainder_widths({10, m}, 0.3).log1p_over_t);
    }
}

// At N = 10 the remainder at t = 1.1 is already below binary64 rounding, so
// the comparison of whole enclosures starts from N = 4 where it still matters.
TEST(SeriesBounds, EnclosuresTightenWithN) {
    for (int m = 0; m <= 7; ++m) {
        EXPECT_LT(cubeslice::sinc_coeff(Interval(1.1), {25, m}).width(),
                  cubeslice::sinc_coeff(Interval(1.1), {4, m}).width())
            << m;
        EXPECT_LT(cubeslice::sinc_quotient_coeff(Interval(1.1), {25, m}).width(),
                  cubeslice::sinc_quotient_coeff(Interval(1.1), {4, m}).width())
            << m;
        EXPECT_LT(cubeslice::remainder_widths({25, m}, 1.1).sinc, cubeslice::remainder_widths({10, m}, 1.1).sinc);
    }
}

TEST(SeriesBounds, SincAndQuotientAreConsistent) {
    for (double t : {0.0, 0.01, 0.3, 0.77, 1.1, 1.5}) {
        const Interval ti(t);
        const Interval direct = cubeslice::sinc_coeff(ti, {20, 0});
        const Interval via_quotient = Interval(1.0) + cubeslice::sqr(ti) * cubeslice::sinc_quotient_coeff(ti, {20, 0});
        EXPECT_TRUE(cubeslice::overlaps(direct, via_quotient)) << t;
    }
}

TEST(SeriesBoundsProperty, OracleContainment) {
    std::mt19937_64 rng(1234);
    std::uniform_real_distribution<double> t_sinc(0.01, 1.1);
    std::uniform_real_distribution<double> t_log(-0.5, 0.5);
    std::uniform_int_distribution<int> order(0, kOrder);
    int violations = 0;
    for (int i = 0; i < 1000; ++i) {
        const int m = order(rng);
        const double t = t_sinc(rng);
        // A thick argument as well: the reference point must lie in both.
        const Interval thick(std::max(0.0, t - 1e-3), t);
        const auto f = sinc_reference(t);
        const auto F = sinc_quotient_reference(t);
        const auto mu = static_cast<std::size_t>(m);
        for (const Interval& arg : {Interval(t), thick}) {
            violations += !oracle::encloses(cubeslice::sinc_coeff(arg, {20, m}), f[mu]);
            violations += !oracle::encloses(cubeslice::sinc_quotient_coeff(arg, {20, m}), F[mu]);
        }
        double u = t_log(rng);
        if (std::fabs(u) < 0.01) u = 0.01;
        const auto g = log1p_over_t_reference(u);
        violations += !oracle::encloses(cubeslice::log1p_over_t_coeff(Interval(u), {20, m}), g[mu]);
        const Interval thick_u(std::min(u, u + 1e-3), std::max(u, u + 1e-3));
        violations += !oracle::encloses(cubeslice::log1p_over_t_coeff(thick_u, {20, m}), g[mu]);
    }
    EXPECT_EQ(violations, 0);
}

TEST(SeriesBounds, SeriesBuildersUseTheCoefficientEnclosures) {
    const Interval c(0.2, 0.3);
    const auto s = cubeslice::sinc_series(c, 20, 7);
    const auto q = cubeslice::sinc_quotient_series(c, 20, 7);
    const auto g = cubeslice::log1p_over_t_series(Interval(-0.1, -0.05), 20, 7);
    ASSERT_EQ(s.order(), 7);
    for (int m = 0; m <= 7; ++m) {
        EXPECT_EQ(s[m], cubeslice::sinc_coeff(c, {20, m}));
        EXPECT_EQ(q[m], cubeslice::sinc_quotient_coeff(c, {20, m}));
        EXPECT_EQ(g[m], cubeslice::log1p_over_t_coeff(Interval(-0.1, -0.05), {20, m}));
    }
}

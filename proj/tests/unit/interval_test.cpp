#include <cubeslice/interval.hpp>

#include "oracle.hpp"

#include <gtest/gtest.h>

#include <cmath>
#include <functional>
#include <random>
#include <string>

using cubeslice::Interval;
namespace rounding = cubeslice::rounding;

namespace {

class Sampler {
public:
    explicit Sampler(unsigned seed) : rng_(seed) {}

    // Magnitudes spread over many binades, both signs.
    double scalar(int max_exp = 40) {
        std::uniform_real_distribution<double> mant(1.0, 2.0);
        std::uniform_int_distribution<int> ex(-max_exp, max_exp);
        const double v = std::ldexp(mant(rng_), ex(rng_));
        return coin() ? v : -v;
    }

    Interval interval(int max_exp = 40) {
        const double a = scalar(max_exp);
        switch (pick(4)) {
        case 0: return Interval(a);
        case 1: return Interval(a, rounding::next_up(rounding::next_up(a)));
        case 2: {
            const double b = a + std::fabs(a) * uniform(0.0, 1.0);
            return Interval(a, b);
        }
        default: {
            const double b = scalar(max_exp);
            return Interval(std::min(a, b), std::max(a, b));
        }
        }
    }

    Interval positive(int max_exp = 40) {
        const Interval x = interval(max_exp);
        const double lo = std::fabs(x.lo()) == 0.0 ? 1.0 : std::min(std::fabs(x.lo()), std::fabs(x.hi()));
        const double hi = std::max(std::fabs(x.lo()), std::fabs(x.hi()));
        return Interval(std::max(lo, 1e-300), std::max(hi, std::max(lo, 1e-300)));
    }

    Interval away_from_zero(int max_exp = 40) {
        const Interval p = positive(max_exp);
        return coin() ? p : -p;
    }

    // A point of x, endpoints included with high probability.
    double point(const Interval& x) {
        switch (pick(4)) {
        case 0: return x.lo();
        case 1: return x.hi();
        default: {
            const double v = x.lo() + (x.hi() - x.lo()) * uniform(0.0, 1.0);
            return std::clamp(v, x.lo(), x.hi());
        }
        }
    }

    double uniform(double lo, double hi) { return std::uniform_real_distribution<double>(lo, hi)(rng_); }
    int pick(int n) { return std::uniform_int_distribution<int>(0, n - 1)(rng_); }
    bool coin() { return pick(2) == 1; }

private:
    std::mt19937_64 rng_;
};

std::string describe(const Interval& r, const oracle::Real& v) {
    return r.to_string() + " vs " + std::to_string(v.to_double());
}

} // namespace

TEST(Interval, ConstructorRejectsReversedOrNaN) {
    EXPECT_THROW(Interval(2.0, 1.0), cubeslice::PreconditionError);
    EXPECT_THROW(Interval(std::nan(""), 1.0), cubeslice::PreconditionError);
    EXPECT_NO_THROW(Interval(1.0, 1.0));
}

TEST(Interval, ExactEndpointArithmetic) {
    EXPECT_TRUE((Interval(1, 2) + Interval(3, 4)).contains(Interval(4, 6)));
    EXPECT_EQ(Interval(1, 2) + Interval(3, 4), Interval(4, 6));
    EXPECT_EQ(Interval(-1, 2) * Interval(3, 4), Interval(-4, 8));
    EXPECT_EQ(Interval(1) / Interval(2), Interval(0.5));
    EXPECT_EQ(Interval(1, 2) - Interval(3, 4), Interval(-3, -1));
}

TEST(Interval, SignCasesOfMultiplication) {
    EXPECT_EQ(Interval(-2, -1) * Interval(-4, -3), Interval(3, 8));
    EXPECT_EQ(Interval(-2, 3) * Interval(-4, 5), Interval(-12, 15));
    EXPECT_EQ(Interval(-2, 3) * Interval(-4, -1), Interval(-12, 8));
    EXPECT_EQ(Interval(0, 0) * Interval(-4, 5), Interval(0, 0));
}

TEST(Interval, DivisionByIntervalContainingZeroIsADomainError) {
    EXPECT_THROW(Interval(1) / Interval(-1, 1), cubeslice::DomainError);
    EXPECT_THROW(Interval(1) / Interval(0, 1), cubeslice::DomainError);
    EXPECT_THROW(cubeslice::recip(Interval(0.0)), cubeslice::DomainError);
}

TEST(Interval, ElementaryDomains) {
    EXPECT_THROW(cubeslice::ln(Interval(0.0, 1.0)), cubeslice::DomainError);
    EXPECT_THROW(cubeslice::sqrt(Interval(-1e-300, 1.0)), cubeslice::DomainError);
    EXPECT_THROW(cubeslice::pow_int(Interval(-1.0, 1.0), -2), cubeslice::DomainError);
}

TEST(Interval, ElementaryExamples) {
    EXPECT_TRUE(cubeslice::exp(Interval(0.0)).contains(1.0));
    EXPECT_TRUE(cubeslice::sqrt(Interval(4, 9)).contains(Interval(2, 3)));
    EXPECT_TRUE(oracle::encloses(cubeslice::sin(Interval(1.1)), oracle::sin(oracle::Real(1.1))));
    EXPECT_NEAR(cubeslice::sin(Interval(1.1)).mid(), 0.891207360061435, 1e-15);
    EXPECT_TRUE(cubeslice::ln(Interval(1.0)).contains(0.0));
    EXPECT_TRUE(oracle::encloses(cubeslice::pi(), oracle::pi()));
    EXPECT_TRUE(oracle::encloses(cubeslice::ln2(), oracle::log(oracle::Real(2.0))));
    EXPECT_TRUE(oracle::encloses(cubeslice::euler_e(), oracle::exp(oracle::Real(1.0))));
}

TEST(Interval, SineAndCosineReachTheirExtremes) {
    const Interval s = cubeslice::sin(Interval(1.0, 2.0));
    EXPECT_GE(s.hi(), 1.0);
    EXPECT_LE(s.hi(), rounding::next_up(1.0));
    const Interval c = cubeslice::cos(Interval(3.0, 3.5));
    EXPECT_LE(c.lo(), -1.0);
    const Interval wide = cubeslice::sin(Interval(-100.0, 100.0));
    EXPECT_TRUE(wide.contains(Interval(-1.0, 1.0)));
}

TEST(Interval, PowInt) {
    EXPECT_EQ(cubeslice::pow_int(Interval(-2, 3), 2), Interval(0, 9));
    EXPECT_EQ(cubeslice::pow_int(Interval(-2, 3), 3), Interval(-8, 27));
    EXPECT_EQ(cubeslice::pow_int(Interval(2, 4), -1), Interval(0.25, 0.5));
    EXPECT_EQ(cubeslice::pow_int(Interval(-5, 7), 0), Interval(1.0));
    EXPECT_TRUE(oracle::encloses(cubeslice::pow_int(Interval(1.1), -145), oracle::Real(1.0) / [] {
        oracle::Real r(1.0);
        for (int i = 0; i < 145; ++i) r = r * oracle::Real(1.1);
        return r;
    }()));
}

TEST(Interval, SetOperations) {
    EXPECT_EQ(cubeslice::hull(Interval(0, 1), Interval(2, 3)), Interval(0, 3));
    EXPECT_EQ(cubeslice::intersect(Interval(0, 2), Interval(1, 3)), Interval(1, 2));
    EXPECT_FALSE(cubeslice::try_intersect(Interval(0, 1), Interval(2, 3)).has_value());
    try {
        cubeslice::intersect(Interval(0, 1), Interval(2, 3));
        FAIL() << "expected a soundness alarm";
    } catch (const cubeslice::SoundnessError& e) {
        const std::string what = e.what();
        EXPECT_NE(what.find('1'), std::string::npos);
        EXPECT_NE(what.find('2'), std::string::npos);
    }
    EXPECT_TRUE(cubeslice::overlaps(Interval(0, 1), Interval(1, 2)));
    EXPECT_DOUBLE_EQ(cubeslice::width(Interval(1, 3)), 2.0);
}

TEST(Interval, SubdivideSharesEndpointsAndCoversTheInput) {
    const auto pieces = cubeslice::subdivide(Interval(0.0, 1.1), 1100);
    ASSERT_EQ(pieces.size(), 1100u);
    EXPECT_EQ(pieces.front().lo(), 0.0);
    EXPECT_EQ(pieces.back().hi(), 1.1);
    for (std::size_t i = 0; i + 1 < pieces.size(); ++i) {
        EXPECT_EQ(pieces[i].hi(), pieces[i + 1].lo());
    }
    for (const auto& p : pieces) {
        EXPECT_NEAR(p.width(), 0.001, 1e-12);
    }
    EXPECT_THROW(cubeslice::subdivide(Interval(0.0, 1.0), 0), cubeslice::PreconditionError);
}

// Every operation, at random points of random operands, against MPFR.
TEST(IntervalProperty, ContainmentFuzz) {
    Sampler s(20240611);
    constexpr int kSamples = 100000;
    int violations = 0;
    for (int i = 0; i < kSamples; ++i) {
        const int op = i % 10;
        Interval r;
        oracle::Real exact;
        if (op < 4) {
            const Interval a = s.interval();
            const Interval b = op == 3 ? s.away_from_zero() : s.interval();
            const oracle::Real x(s.point(a));
            const oracle::Real y(s.point(b));
            switch (op) {
            case 0: r = a + b; exact = x + y; break;
            case 1: r = a - b; exact = x - y; break;
            case 2: r = a * b; exact = x * y; break;
            default: r = a / b; exact = x / y; break;
            }
        } else {
            Interval a;
            switch (op) {
            case 4: a = s.positive(); break;                                       // sqrt
            case 5: a = Interval(s.uniform(-700, 0), s.uniform(0, 700)); break;    // exp
            case 6: a = s.positive(300); break;                                    // ln
            case 7: case 8: {                                                      // sin, cos
                const double lo = s.uniform(-50, 50);
                a = Interval(lo, lo + s.uniform(0, 2) * (s.coin() ? 1.0 : 1e-6));
                break;
            }
            default: a = s.away_from_zero(8); break;                               // pow_int
            }
            const oracle::Real x(s.point(a));
            switch (op) {
            case 4: r = cubeslice::sqrt(a); exact = oracle::sqrt(x); break;
            case 5: r = cubeslice::exp(a); exact = oracle::exp(x); break;
            case 6: r = cubeslice::ln(a); exact = oracle::log(x); break;
            case 7: r = cubeslice::sin(a); exact = oracle::sin(x); break;
            case 8: r = cubeslice::cos(a); exact = oracle::cos(x); break;
            default: {
                const int k = s.pick(15) - 7;
                r = cubeslice::pow_int(a, k);
                exact = oracle::Real(1.0);
                for (int j = 0; j < std::abs(k); ++j) exact = exact * x;
                if (k < 0) exact = oracle::Real(1.0) / exact;
                break;
            }
            }
        }
        if (!oracle::encloses(r, exact)) {
            if (++violations <= 5) ADD_FAILURE() << "op " << op << ": " << describe(r, exact);
        }
    }
    EXPECT_EQ(violations, 0);
}

TEST(IntervalProperty, InclusionMonotonicity) {
    Sampler s(7);
    using Unary = std::function<Interval(const Interval&)>;
    const std::vector<Unary> unary = {
        [](const Interval& a) { return cubeslice::exp(a); },
        [](const Interval& a) { return cubeslice::sin(a); },
        [](const Interval& a) { return cubeslice::cos(a); },
        [](const Interval& a) { return cubeslice::sqr(a); },
    };
    for (int i = 0; i < 5000; ++i) {
        const Interval outer = Interval(s.uniform(-20, 0), s.uniform(0, 20));
        const double p = s.point(outer);
        const double q = s.point(outer);
        const Interval inner(std::min(p, q), std::max(p, q));
        for (const auto& f : unary) EXPECT_TRUE(f(outer).contains(f(inner)));

        const Interval b_outer = Interval(s.uniform(1, 3), s.uniform(3, 9));
        const Interval b_inner(s.point(Interval(b_outer.lo(), 3.0)), s.point(Interval(3.0, b_outer.hi())));
        EXPECT_TRUE((outer + b_outer).contains(inner + b_inner));
        EXPECT_TRUE((outer - b_outer).contains(inner - b_inner));
        EXPECT_TRUE((outer * b_outer).contains(inner * b_inner));
        EXPECT_TRUE((outer / b_outer).contains(inner / b_inner));
        EXPECT_TRUE(cubeslice::sqrt(b_outer).contains(cubeslice::sqrt(b_inner)));
        EXPECT_TRUE(cubeslice::ln(b_outer).contains(cubeslice::ln(b_inner)));
    }
}

TEST(IntervalProperty, PointArithmeticIsWithinFourUlps) {
    Sampler s(99);
    for (int i = 0; i < 20000; ++i) {
        const double x = s.scalar();
        const double y = s.scalar();
        for (const Interval& r : {Interval(x) + Interval(y), Interval(x) - Interval(y), Interval(x) * Interval(y),
                                  Interval(x) / Interval(y), cubeslice::sqrt(Interval(std::fabs(x)))}) {
            if (r.lo() == 0.0 || r.hi() == 0.0 || (r.lo() < 0.0) != (r.hi() < 0.0)) continue;
            EXPECT_LE(oracle::ulp_distance(r.lo(), r.hi()), 4u) << r;
        }
    }
}

TEST(IntervalProperty, ElementaryPointResultsAreTight) {
    Sampler s(3);
    for (int i = 0; i < 5000; ++i) {
        const double x = s.uniform(0.01, 1.5);
        for (const Interval& r : {cubeslice::exp(Interval(x)), cubeslice::ln(Interval(x)), cubeslice::sin(Interval(x)),
                                  cubeslice::cos(Interval(x))}) {
            EXPECT_LE(r.width(), 1e-13 * std::max(1.0, r.mag())) << r;
        }
    }
}

TEST(IntervalProperty, DirectedRoundingBracketsTheExactResult) {
    Sampler s(11);
    for (int i = 0; i < 20000; ++i) {
        const double x = s.scalar();
        const double y = s.scalar();
        const oracle::Real sum = oracle::Real(x) + oracle::Real(y);
        EXPECT_FALSE(sum < oracle::Real(rounding::add_down(x, y)));
        EXPECT_FALSE(oracle::Real(rounding::add_up(x, y)) < sum);
        const oracle::Real prod = oracle::Real(x) * oracle::Real(y);
        EXPECT_FALSE(prod < oracle::Real(rounding::mul_down(x, y)));
        EXPECT_FALSE(oracle::Real(rounding::mul_up(x, y)) < prod);
        const oracle::Real quot = oracle::Real(x) / oracle::Real(y);
        EXPECT_FALSE(quot < oracle::Real(rounding::div_down(x, y)));
        EXPECT_FALSE(oracle::Real(rounding::div_up(x, y)) < quot);
    }
}

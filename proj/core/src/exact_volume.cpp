#include <cubeslice/exact_volume.hpp>

#include <cubeslice/parallel.hpp>

#include <cmath>
#include <string>

namespace cubeslice {

namespace {

mpz_class pow_ui(const mpz_class& base, unsigned long e) {
    mpz_class r;
    mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), e);
    return r;
}

mpz_class binomial(unsigned long n, unsigned long k) {
    mpz_class b;
    mpz_bin_uiui(b.get_mpz_t(), n, k);
    return b;
}

mpz_class factorial(unsigned long n) {
    mpz_class f;
    mpz_fac_ui(f.get_mpz_t(), n);
    return f;
}

// n Q(n)^2, the square of the volume.
ExactRational squared_volume(int n) {
    const ExactRational q = q_volume(n);
    return ExactRational(n) * q * q;
}

// floor(sqrt(v) * 10^digits) and whether that is exact.
std::pair<mpz_class, bool> scaled_sqrt_floor(const ExactRational& v, int digits) {
    const mpz_class scale = pow_ui(mpz_class(10), static_cast<unsigned long>(2 * digits));
    mpz_class num = v.get_num() * scale;
    mpz_class fl, rem;
    mpz_fdiv_qr(fl.get_mpz_t(), rem.get_mpz_t(), num.get_mpz_t(), v.get_den().get_mpz_t());
    mpz_class root, root_rem;
    mpz_sqrtrem(root.get_mpz_t(), root_rem.get_mpz_t(), fl.get_mpz_t());
    return {root, rem == 0 && root_rem == 0};
}

std::string render_fixed(const mpz_class& scaled, int digits) {
    const bool negative = scaled < 0;
    std::string s = mpz_class(abs(scaled)).get_str();
    if (digits > 0) {
        if (static_cast<int>(s.size()) <= digits) s.insert(0, static_cast<std::size_t>(digits + 1) - s.size(), '0');
        s.insert(s.size() - static_cast<std::size_t>(digits), ".");
    }
    return negative ? "-" + s : s;
}

struct ScaledBounds {
    mpz_class lo;
    mpz_class hi;
};

ScaledBounds volume_scaled(int n, int digits) {
    auto [fl, exact] = scaled_sqrt_floor(squared_volume(n), digits);
    return {fl, exact ? fl : mpz_class(fl + 1)};
}

} // namespace

ExactRational q_volume(int n) {
    if (n < 1) throw PreconditionError("q_volume: n must be >= 1, got " + std::to_string(n));
    const auto un = static_cast<unsigned long>(n);
    mpz_class sum = 0;
    for (int i = 0; i <= n; ++i) {
        const int d = n - 2 * i;
        if (d == 0) continue; // sign(0) = 0
        mpz_class term = binomial(un, static_cast<unsigned long>(i)) * pow_ui(mpz_class(d), un - 1);
        if (d < 0) term = -term;
        if (i % 2 == 1) term = -term;
        sum += term;
    }
    ExactRational q(sum, pow_ui(mpz_class(2), un) * factorial(un - 1));
    q.canonicalize();
    return q;
}

bool is_increasing_step(int n) {
    if (n < 2) throw PreconditionError("is_increasing_step: n must be >= 2");
    const ExactRational q0 = q_volume(n);
    const ExactRational q1 = q_volume(n + 1);
    if (sgn(q0) <= 0 || sgn(q1) <= 0) {
        throw Error("is_increasing_step: nonpositive Q at n = " + std::to_string(n));
    }
    return ExactRational(n + 1) * q1 * q1 > ExactRational(n) * q0 * q0;
}

MonotonicityCertificate verify_range(int n_lo, int n_hi, unsigned jobs) {
    if (n_lo < 2 || n_lo >= n_hi) {
        throw PreconditionError("verify_range: need 2 <= n_lo < n_hi, got [" + std::to_string(n_lo) + ", " +
                                std::to_string(n_hi) + ")");
    }
    const auto count = static_cast<std::size_t>(n_hi - n_lo + 1);
    // n Q(n)^2 for n_lo .. n_hi, then adjacent comparisons.
    const auto squares = parallel_map<ExactRational>(count, std::max(1u, jobs), [&](std::size_t i) {
        const int n = n_lo + static_cast<int>(i);
        const ExactRational q = q_volume(n);
        if (sgn(q) <= 0) throw Error("verify_range: nonpositive Q at n = " + std::to_string(n));
        return ExactRational(ExactRational(n) * q * q);
    });

    MonotonicityCertificate cert;
    cert.n_lo = n_lo;
    cert.n_hi = n_hi;
    cert.verdict = true;
    for (std::size_t i = 0; i + 1 < count; ++i) {
        const bool up = squares[i + 1] > squares[i];
        cert.steps.push_back({n_lo + static_cast<int>(i), up});
        cert.verdict = cert.verdict && up;
    }
    return cert;
}

const char* to_string(LimitStatus s) {
    switch (s) {
    case LimitStatus::Below: return "below";
    case LimitStatus::NotBelow: return "not_below";
    case LimitStatus::Indeterminate: return "indeterminate";
    }
    return "unknown";
}

LimitStatus below_limit(int n, const Interval& pi_enclosure) {
    if (n < 2) throw PreconditionError("below_limit: n must be >= 2");
    const Interval six_over_pi = Interval(6.0) / pi_enclosure;
    const ExactRational v = squared_volume(n);
    if (v < ExactRational(six_over_pi.lo())) return LimitStatus::Below;
    if (v >= ExactRational(six_over_pi.hi())) return LimitStatus::NotBelow;
    return LimitStatus::Indeterminate;
}

Interval enclose(const ExactRational& q) {
    if (sgn(q) == 0) return Interval(0.0);
    const bool negative = sgn(q) < 0;
    const mpz_class p = abs(q.get_num());
    const mpz_class& d = q.get_den();
    // Scale so the integer quotient carries about 64 significant bits.
    const long shift = 64 - (static_cast<long>(mpz_sizeinbase(p.get_mpz_t(), 2)) -
                             static_cast<long>(mpz_sizeinbase(d.get_mpz_t(), 2)));
    mpz_class a, rem;
    if (shift >= 0) {
        mpz_class scaled = p << static_cast<unsigned long>(shift);
        mpz_fdiv_qr(a.get_mpz_t(), rem.get_mpz_t(), scaled.get_mpz_t(), d.get_mpz_t());
    } else {
        mpz_class scaled_den = d << static_cast<unsigned long>(-shift);
        mpz_fdiv_qr(a.get_mpz_t(), rem.get_mpz_t(), p.get_mpz_t(), scaled_den.get_mpz_t());
    }
    const double trunc = a.get_d(); // toward zero, i.e. down
    const bool exact = rem == 0 && cmp(a, trunc) == 0;
    const double lo = std::ldexp(trunc, static_cast<int>(-shift));
    const double hi = exact ? lo : std::ldexp(rounding::next_up(trunc), static_cast<int>(-shift));
    return negative ? Interval::from_ordered(-hi, -lo) : Interval::from_ordered(lo, hi);
}

Interval volume_enclosure(int n) {
    return sqrt(Interval(static_cast<double>(n))) * enclose(q_volume(n));
}

DecimalBounds volume_decimal(int n, int digits) {
    const ScaledBounds b = volume_scaled(n, digits);
    return {render_fixed(b.lo, digits), render_fixed(b.hi, digits)};
}

DecimalBounds gap_decimal(int n, int digits) {
    const ScaledBounds v0 = volume_scaled(n, digits);
    const ScaledBounds v1 = volume_scaled(n + 1, digits);
    return {render_fixed(v1.lo - v0.hi, digits), render_fixed(v1.hi - v0.lo, digits)};
}

} // namespace cubeslice

#include <cubeslice/integral_oracle.hpp>

#include <cubeslice/series_bounds.hpp>

#include <cmath>
#include <string>

namespace cubeslice {

namespace {

constexpr double series_cutoff = 0.01;

Interval sinc_at(double t) {
    if (t < series_cutoff) return sinc_coeff(Interval(t), {20, 0});
    const Interval ti(t);
    return sin(ti) / ti;
}

// sin t / t is decreasing on [0, pi], so its range over a panel lies between
// the values at the two ends. Evaluating sin(P) / P on the whole panel instead
// would lose a factor of about t / width to the dependency effect.
Interval sinc_range(const Interval& panel) {
    return Interval(sinc_at(panel.hi()).lo(), sinc_at(panel.lo()).hi());
}

} // namespace

void QuadratureConfig::validate() const {
    if (panels < 1) throw PreconditionError("quadrature: panels must be >= 1");
    if (!(a > 1.0) || !(a < 1.5707963267948966)) throw PreconditionError("quadrature: need 1 < a < pi/2");
}

Interval enclose_Ia(int n, const QuadratureConfig& cfg) {
    cfg.validate();
    if (n < 2) throw PreconditionError("enclose_Ia: n must be >= 2, got " + std::to_string(n));
    Interval sum(0.0);
    for (const Interval& panel : subdivide(Interval(0.0, cfg.a), static_cast<std::size_t>(cfg.panels))) {
        // sinc > 0 on [0, a], so clip the lower end at 0 before powering.
        Interval s = sinc_range(panel);
        if (s.lo() < 0.0) s = Interval(0.0, s.hi());
        sum = sum + pow_int(s, n) * (Interval(panel.hi()) - Interval(panel.lo()));
    }
    return sum * Interval(2.0) * sqrt(Interval(static_cast<double>(n))) / pi();
}

Interval enclose_I(int n, const QuadratureConfig& cfg) {
    const Interval tail = Interval(2.0) * pow_int(Interval(cfg.a), -n);
    return enclose_Ia(n, cfg) + Interval(-tail.hi(), tail.hi());
}

} // namespace cubeslice

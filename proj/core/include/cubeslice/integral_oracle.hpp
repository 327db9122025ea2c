#ifndef CUBESLICE_INTEGRAL_ORACLE_HPP
#define CUBESLICE_INTEGRAL_ORACLE_HPP

#include <cubeslice/interval.hpp>

namespace cubeslice {

// Independent enclosure of the section volume through Polya's integral
//
//   I(n) = (2 sqrt n / pi) * int_0^inf (sin t / t)^n dt.
//
// Only [0, a] is integrated; the rest is covered by |I(n) - I_a(n)| < 2 a^-n.
struct QuadratureConfig {
    int panels = 10000;
    double a = 1.1;

    void validate() const;
};

// Rectangle enclosure of I_a(n) from the range of the integrand on each
// panel. Sound but first order: width shrinks like 1/panels. n >= 2.
Interval enclose_Ia(int n, const QuadratureConfig& cfg);

// enclose_Ia(n) widened by the tail bound. n >= 2.
Interval enclose_I(int n, const QuadratureConfig& cfg);

} // namespace cubeslice

#endif

#pragma once

#include <cmath>

#include "chebalex/rational.hpp"

namespace chebalex::detail {

// Unevaluated double-double sum (value = hi + lo, |lo| <= ulp(hi)/2).
// Monomial-basis evaluation of Chebyshev-like polynomials loses ~n bits to
// cancellation, so plain doubles are not accurate enough for the floating
// cross-check; ~106-bit compensated arithmetic is.
struct DDouble {
    double hi = 0.0;
    double lo = 0.0;
};

inline DDouble two_sum(double a, double b) {
    double s = a + b;
    double bb = s - a;
    return {s, (a - (s - bb)) + (b - bb)};
}

inline DDouble two_prod(double a, double b) {
    double p = a * b;
    return {p, std::fma(a, b, -p)};
}

inline DDouble dd_add(const DDouble& a, const DDouble& b) {
    DDouble s = two_sum(a.hi, b.hi);
    double lo = s.lo + a.lo + b.lo;
    double hi = s.hi + lo;
    return {hi, lo - (hi - s.hi)};
}

inline DDouble dd_mul(const DDouble& a, double b) {
    DDouble p = two_prod(a.hi, b);
    double lo = std::fma(a.lo, b, p.lo);
    double hi = p.hi + lo;
    return {hi, lo - (hi - p.hi)};
}

inline DDouble dd_from_rational(const Rational& r) {
    double hi = r.to_double();
    double lo = (r - Rational::from_double_exact(hi)).to_double();
    return {hi, lo};
}

}  // namespace chebalex::detail

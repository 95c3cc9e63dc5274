#pragma once

#include <chrono>
#include <numeric>
#include <stdexcept>
#include <string>

#include "chebalex/errors.hpp"
#include "chebalex/laurent.hpp"
#include "chebalex/rational.hpp"
#include "chebalex/render.hpp"
#include "chebalex/report.hpp"

namespace chebalex {

/// Torus curve parameters: T(n, l) winds n and l times around the two
/// cycles. It is a knot exactly when gcd(n, l) = 1.
struct TorusParams {
    int n = 1;
    int l = 1;
};

namespace detail {

// u^m + sign * u^{-m}
inline LaurentPoly symmetric_binomial(int m, int sign) {
    return LaurentPoly::term(Rational(1), m) + LaurentPoly::term(Rational(sign), -m);
}

inline void require_positive_index(int n) {
    if (n < 1) throw std::invalid_argument("index must be a positive integer");
}

}  // namespace detail

/// Alexander polynomial of the torus knot T(n, l) for coprime n, l:
/// the exact quotient (u^{nl} - u^{-nl})(u - u^{-1}) /
/// ((u^n - u^{-n})(u^l - u^{-l})) in u = q^{1/2}.
inline LaurentPoly torus_alexander(const TorusParams& t) {
    if (t.n < 1 || t.l < 1) throw std::invalid_argument("torus parameters must be positive");
    int g = std::gcd(t.n, t.l);
    if (g != 1) throw NonCoprime(t.n, t.l, g);
    LaurentPoly numerator =
        detail::symmetric_binomial(t.n * t.l, -1) * detail::symmetric_binomial(1, -1);
    LaurentPoly denominator =
        detail::symmetric_binomial(t.n, -1) * detail::symmetric_binomial(t.l, -1);
    return div_exact(numerator, denominator);
}

/// Torus knot T(n, 2) for odd n: (u^n + u^{-n}) / (u + u^{-1}).
inline LaurentPoly torus_knot_n2(int n) {
    detail::require_positive_index(n);
    if (n % 2 == 0) throw NotOdd(n);
    return div_exact(detail::symmetric_binomial(n, 1), detail::symmetric_binomial(1, 1));
}

/// Torus link T(n, 2) for even n: (u^n - u^{-n}) / (u + u^{-1}).
inline LaurentPoly torus_link_n2(int n) {
    detail::require_positive_index(n);
    if (n % 2 != 0) throw NotEven(n);
    return div_exact(detail::symmetric_binomial(n, -1), detail::symmetric_binomial(1, 1));
}

/// T(n, 2) invariant with knot/link dispatch on the parity of n.
inline LaurentPoly torus_n2(int n) {
    detail::require_positive_index(n);
    return n % 2 != 0 ? torus_knot_n2(n) : torus_link_n2(n);
}

/// The skein relation restricted to the T(., 2) tower, where switching a
/// crossing lowers n by two and the smoothing lowers it by one:
/// Delta_{n,2} - Delta_{n-2,2} = (u - u^{-1}) Delta_{n-1,2}.
inline VerificationReport skein_family_check(int n) {
    if (n < 3) throw std::invalid_argument("skein tower check needs n >= 3");
    auto start = std::chrono::steady_clock::now();
    VerificationReport report;
    report.identity = "skein";
    report.ranges = {{"n", n, n}};
    LaurentPoly lhs = torus_n2(n) - torus_n2(n - 2);
    LaurentPoly rhs = detail::symmetric_binomial(1, -1) * torus_n2(n - 1);
    if (lhs != rhs) {
        report.failures.push_back({{{"n", n}}, to_text(lhs), to_text(rhs)});
    }
    report.elapsed_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return report;
}

/// Symmetry of the T(n, 2) invariants under u -> 1/u: knots (odd n) are
/// fixed, links (even n) change sign.
inline VerificationReport palindromy_check(int n) {
    detail::require_positive_index(n);
    auto start = std::chrono::steady_clock::now();
    VerificationReport report;
    report.identity = "palindromy";
    report.ranges = {{"n", n, n}};
    LaurentPoly delta = torus_n2(n);
    LaurentPoly mirrored = bar(delta);
    LaurentPoly expected = n % 2 != 0 ? delta : -delta;
    if (mirrored != expected) {
        report.failures.push_back({{{"n", n}}, to_text(mirrored), to_text(expected)});
    }
    report.elapsed_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return report;
}

}  // namespace chebalex

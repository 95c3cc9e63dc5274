#pragma once

#include <chrono>
#include <cmath>
#include <stdexcept>
#include <string>
#include <vector>

#include "chebalex/detail/double_double.hpp"
#include "chebalex/errors.hpp"
#include "chebalex/polynomial.hpp"
#include "chebalex/rational.hpp"
#include "chebalex/render.hpp"
#include "chebalex/report.hpp"

namespace chebalex {

/// Selects one generalized Chebyshev polynomial T^{(k,h)}_n: kind k >= 1,
/// hyperkind h >= 1, degree index n >= 0. Kind 1 and 2 with hyperkind 1 are
/// the standard first- and second-kind polynomials; hyperkind 2 gives the
/// monic families.
struct ChebParams {
    int kind = 1;
    int hyperkind = 1;
    int degree_index = 0;
};

/// Seeds of the unified recurrence T_{n+1} = (2/h) x T_n - T_{n-1}:
/// T_0 = A and T_1 = B x.
struct SeedPair {
    Rational constant_term;      // A = (k-1) - (k-2) h
    Rational linear_coefficient; // B = (k-1)(2/h) - (k-2)
};

/// Coefficients of the sine-ratio closed form
///   T^{(k,h)}_n = alpha * sin((n+1)t)/sin t + beta * sin((n-1)t)/sin t,
/// both affine in k, with alpha + beta = k - 1.
struct EquidistantCoeffs {
    Rational alpha;  // (k-1) - (k-2) h/2
    Rational beta;   // (k-2) h/2
};

namespace detail {

inline void require_kind_hyperkind(int k, int h) {
    if (k < 1) throw std::invalid_argument("kind must be a positive integer");
    if (h < 1) throw std::invalid_argument("hyperkind must be a positive integer");
}

inline void require_valid(const ChebParams& p) {
    require_kind_hyperkind(p.kind, p.hyperkind);
    if (p.degree_index < 0) throw std::invalid_argument("degree index must be nonnegative");
}

}  // namespace detail

inline SeedPair seed_pair(int k, int h) {
    detail::require_kind_hyperkind(k, h);
    return {Rational(k - 1) - Rational(k - 2) * Rational(h),
            Rational(2LL * (k - 1), h) - Rational(k - 2)};
}

inline EquidistantCoeffs equidistant_coefficients(int k, int h) {
    detail::require_kind_hyperkind(k, h);
    Rational half_h(h, 2);
    return {Rational(k - 1) - Rational(k - 2) * half_h, Rational(k - 2) * half_h};
}

/// T^{(k,h)}_0 .. T^{(k,h)}_{n_max}, built iteratively from the seeds.
inline std::vector<Polynomial> cheb_family(int k, int h, int n_max) {
    detail::require_kind_hyperkind(k, h);
    if (n_max < 0) throw std::invalid_argument("degree index must be nonnegative");
    SeedPair seeds = seed_pair(k, h);
    std::vector<Polynomial> family;
    family.reserve(static_cast<std::size_t>(n_max) + 1);
    family.emplace_back(seeds.constant_term);
    if (n_max >= 1) family.push_back(Polynomial::monomial(1, seeds.linear_coefficient));
    const Rational step(2, h);
    const Polynomial x = Polynomial::x();
    for (int n = 2; n <= n_max; ++n) {
        family.push_back(family[n - 1] * x * step - family[n - 2]);
    }
    return family;
}

/// T^{(k,h)}_n from the unified three-term recurrence.
inline Polynomial cheb_recurrence(const ChebParams& p) {
    detail::require_valid(p);
    return cheb_family(p.kind, p.hyperkind, p.degree_index).back();
}

/// V^{(h)}_0 .. V^{(h)}_{n_max}, the second-kind basis (equal to T^{(2,h)}).
inline std::vector<Polynomial> second_kind_family(int h, int n_max) {
    return cheb_family(2, h, n_max);
}

/// V^{(h)}_n with the backward extension V_{-1} = 0, V_{-2} = -1.
inline Polynomial second_kind_basis(int h, int n) {
    detail::require_kind_hyperkind(2, h);
    if (n < -2) throw IndexOutOfRange("second-kind basis index below -2: " + std::to_string(n));
    if (n == -1) return Polynomial::zero();
    if (n == -2) return Polynomial(Rational(-1));
    return second_kind_family(h, n).back();
}

/// The equidistant closed form alpha * V^{(h)}_n + beta * V^{(h)}_{n-2};
/// agrees with cheb_recurrence identically.
inline Polynomial cheb_closed_form(const ChebParams& p) {
    detail::require_valid(p);
    EquidistantCoeffs c = equidistant_coefficients(p.kind, p.hyperkind);
    int n = p.degree_index;
    std::vector<Polynomial> basis = second_kind_family(p.hyperkind, n);
    Polynomial lower = n >= 2 ? basis[n - 2] : second_kind_basis(p.hyperkind, n - 2);
    return basis[n] * c.alpha + lower * c.beta;
}

/// (k-1) T^{(2,h)}_n - (k-2) T^{(1,h)}_n; agrees with cheb_recurrence.
inline Polynomial linear_combination_form(const ChebParams& p) {
    detail::require_valid(p);
    int n = p.degree_index, h = p.hyperkind;
    Polynomial first = cheb_family(1, h, n).back();
    Polynomial second = cheb_family(2, h, n).back();
    return second * Rational(p.kind - 1) - first * Rational(p.kind - 2);
}

/// Checks 2 T^{(1,h)}_n = h (V^{(h)}_n - V^{(h)}_{n-2}) at one point.
inline VerificationReport connection_first_second(int h, int n) {
    detail::require_kind_hyperkind(1, h);
    if (n < 0) throw std::invalid_argument("degree index must be nonnegative");
    auto start = std::chrono::steady_clock::now();
    VerificationReport report;
    report.identity = "connection";
    report.ranges = {{"h", h, h}, {"n", n, n}};
    Polynomial lhs = cheb_family(1, h, n).back() * Rational(2);
    Polynomial rhs =
        (second_kind_basis(h, n) - second_kind_basis(h, n - 2)) * Rational(h);
    if (lhs != rhs) {
        report.failures.push_back({{{"h", h}, {"n", n}}, to_text(lhs), to_text(rhs)});
    }
    report.elapsed_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return report;
}

/// T^{(k+1,h)}_n - T^{(k,h)}_n. By equidistance this difference does not
/// depend on k at fixed (h, n).
inline Polynomial equidistance_delta(int k, int h, int n) {
    detail::require_kind_hyperkind(k, h);
    if (n < 0) throw std::invalid_argument("degree index must be nonnegative");
    return cheb_family(k + 1, h, n).back() - cheb_family(k, h, n).back();
}

/// Floating-point cross-validation against the analytic sine-ratio form:
/// evaluates T^{(k,h)}_n at x = h cos(theta) over sample_count angles in
/// (0.1, pi - 0.1) and returns the maximum absolute deviation from
/// alpha sin((n+1)theta)/sin(theta) + beta sin((n-1)theta)/sin(theta).
/// The polynomial side is evaluated with compensated (double-double)
/// Horner; see detail/double_double.hpp for why doubles do not suffice.
inline double trig_crosscheck(const ChebParams& p, int sample_count) {
    detail::require_valid(p);
    if (p.degree_index < 1) throw std::invalid_argument("sine-ratio form needs n >= 1");
    if (sample_count < 1) throw std::invalid_argument("sample_count must be positive");

    const Polynomial poly = cheb_recurrence(p);
    std::vector<detail::DDouble> coeffs;
    coeffs.reserve(poly.coefficients().size());
    for (const auto& c : poly.coefficients()) coeffs.push_back(detail::dd_from_rational(c));

    EquidistantCoeffs ec = equidistant_coefficients(p.kind, p.hyperkind);
    const double alpha = ec.alpha.to_double();
    const double beta = ec.beta.to_double();
    const double h = p.hyperkind;
    const int n = p.degree_index;

    const double theta_lo = 0.1;
    const double theta_hi = std::acos(-1.0) - 0.1;
    double max_dev = 0.0;
    for (int i = 1; i <= sample_count; ++i) {
        double theta = theta_lo + (theta_hi - theta_lo) * i / (sample_count + 1);
        double x = h * std::cos(theta);
        detail::DDouble acc;
        for (std::size_t j = coeffs.size(); j-- > 0;) {
            acc = detail::dd_add(detail::dd_mul(acc, x), coeffs[j]);
        }
        double lhs = acc.hi + acc.lo;
        double s = std::sin(theta);
        double rhs = (alpha * std::sin((n + 1) * theta) + beta * std::sin((n - 1) * theta)) / s;
        max_dev = std::max(max_dev, std::abs(lhs - rhs));
    }
    return max_dev;
}

}  // namespace chebalex

#pragma once

#include <chrono>
#include <stdexcept>
#include <string>
#include <vector>

#include "chebalex/alexander.hpp"
#include "chebalex/chebyshev.hpp"
#include "chebalex/errors.hpp"
#include "chebalex/laurent.hpp"
#include "chebalex/polynomial.hpp"
#include "chebalex/render.hpp"
#include "chebalex/report.hpp"

namespace chebalex {

/// Fixes the scale of the substitution x = (h/2)(u + u^{-1}) that carries
/// x-polynomials into the Laurent ring of Alexander invariants.
struct SubstitutionContext {
    int hyperkind = 1;
};

namespace detail {

inline void require_context(const SubstitutionContext& ctx) {
    if (ctx.hyperkind < 1) throw std::invalid_argument("hyperkind must be a positive integer");
}

// (h/2)(u + u^{-1}), the Laurent image of x.
inline LaurentPoly substituted_x(int h) {
    return symmetric_binomial(1, 1) * Rational(h, 2);
}

// p(s * x): coefficient of x^i picks up a factor s^i.
inline Polynomial scale_argument(const Polynomial& p, const Rational& s) {
    std::vector<Rational> scaled = p.coefficients();
    Rational power(1);
    for (std::size_t i = 1; i < scaled.size(); ++i) {
        power *= s;
        scaled[i] *= power;
    }
    return Polynomial::from_coefficients(std::move(scaled));
}

inline void require_odd(int n) {
    require_positive_index(n);
    if (n % 2 == 0) throw NotOdd(n);
}

}  // namespace detail

/// Image of p under x -> (h/2)(u + u^{-1}), by Horner accumulation in the
/// Laurent ring. The image of any x-polynomial is invariant under u -> 1/u.
inline LaurentPoly substitute_x(const Polynomial& p, const SubstitutionContext& ctx) {
    detail::require_context(ctx);
    const LaurentPoly x_image = detail::substituted_x(ctx.hyperkind);
    LaurentPoly acc;
    const auto& cs = p.coefficients();
    for (std::size_t i = cs.size(); i-- > 0;) {
        acc = acc * x_image + LaurentPoly::constant(cs[i]);
    }
    return acc;
}

/// Checks T^{(1,h)}_n(x) = x Delta^{(K)}_{n,2}(q) under the substitution,
/// and that the quotient substitute_x(T^{(1,h)}_n) / substitute_x(x) is the
/// same Laurent polynomial for every hyperkind 1..10 (the invariant does not
/// depend on h).
inline VerificationReport verify_t1h(int n, int h) {
    detail::require_odd(n);
    detail::require_context({h});
    auto start = std::chrono::steady_clock::now();
    VerificationReport report;
    report.identity = "bridge-t1h";
    report.ranges = {{"n", n, n}, {"h", h, h}};

    LaurentPoly lhs = substitute_x(cheb_recurrence({1, h, n}), {h});
    LaurentPoly rhs = detail::substituted_x(h) * torus_knot_n2(n);
    if (lhs != rhs) {
        report.failures.push_back({{{"n", n}, {"h", h}}, to_text(lhs), to_text(rhs)});
    }

    constexpr int kHyperkindSpan = 10;
    LaurentPoly reference;
    for (int hh = 1; hh <= kHyperkindSpan; ++hh) {
        LaurentPoly image = hh == h ? lhs : substitute_x(cheb_recurrence({1, hh, n}), {hh});
        LaurentPoly quotient = div_exact(image, detail::substituted_x(hh));
        if (hh == 1) {
            reference = quotient;
        } else if (quotient != reference) {
            report.failures.push_back(
                {{{"n", n}, {"h", hh}}, to_text(quotient), to_text(reference)});
        }
    }

    report.elapsed_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return report;
}

/// Checks T^{(2,h)}_n(x) = (2x/h) Delta^{(L)}_{n+1,2}(q) / (q^{1/2} - q^{-1/2})
/// under the substitution; (2x/h) maps to u + u^{-1}, so the right side is
/// independent of h. A non-exact division is recorded as a failure.
inline VerificationReport verify_t2h(int n, int h) {
    detail::require_odd(n);
    detail::require_context({h});
    auto start = std::chrono::steady_clock::now();
    VerificationReport report;
    report.identity = "bridge-t2h";
    report.ranges = {{"n", n, n}, {"h", h, h}};

    LaurentPoly lhs = substitute_x(cheb_recurrence({2, h, n}), {h});
    try {
        LaurentPoly rhs = detail::symmetric_binomial(1, 1) *
                          div_exact(torus_link_n2(n + 1), detail::symmetric_binomial(1, -1));
        if (lhs != rhs) {
            report.failures.push_back({{{"n", n}, {"h", h}}, to_text(lhs), to_text(rhs)});
        }
    } catch (const NonExactDivision&) {
        report.failures.push_back(
            {{{"n", n}, {"h", h}}, to_text(lhs), "non-exact division in the link quotient"});
    }

    report.elapsed_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return report;
}

/// Inverts substitute_x: rewrites a bar-symmetric Laurent polynomial in the
/// basis u^j + u^{-j} and replaces each basis element by the monic
/// first-kind polynomial of degree j evaluated at 2x/h (algebraically,
/// u^j + u^{-j} = T^{(1,2)}_j(u + u^{-1})). Throws AsymmetricInput when the
/// argument is not invariant under u -> 1/u.
inline Polynomial invert_substitution(const LaurentPoly& image, const SubstitutionContext& ctx) {
    detail::require_context(ctx);
    if (bar(image) != image) throw AsymmetricInput{};

    const int top = image.max_exponent();
    const std::vector<Polynomial> monic = cheb_family(1, 2, std::max(top, 0));
    const Rational argument_scale(2, ctx.hyperkind);

    Polynomial result;
    for (int j = 0; j <= top; ++j) {
        Rational weight = j == 0 ? image.coefficient(0) / Rational(2) : image.coefficient(j);
        if (weight.is_zero()) continue;
        result += detail::scale_argument(monic[static_cast<std::size_t>(j)], argument_scale) * weight;
    }
    return result;
}

/// The inverse recipe: rebuilds T^{(1,h)}_n from the Alexander invariant by
/// forming x Delta^{(K)}_{n,2} in the Laurent ring and inverting the
/// substitution.
inline Polynomial chebyshev_from_alexander(int n, int h) {
    detail::require_odd(n);
    detail::require_context({h});
    return invert_substitution(detail::substituted_x(h) * torus_knot_n2(n), {h});
}

}  // namespace chebalex

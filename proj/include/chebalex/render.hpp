#pragma once

#include <string>

#include "chebalex/laurent.hpp"
#include "chebalex/polynomial.hpp"
#include "chebalex/rational.hpp"

namespace chebalex {

namespace detail {

// "16/81*x^5", "x^2", "-5*x", "3" ... one term of a plain-text rendering.
inline void append_text_term(std::string& out, const Rational& coeff, const std::string& power,
                             bool first) {
    bool negative = coeff.sign() < 0;
    Rational mag = negative ? -coeff : coeff;
    if (first) {
        if (negative) out += "-";
    } else {
        out += negative ? " - " : " + ";
    }
    if (power.empty()) {
        out += mag.str();
        return;
    }
    if (mag == Rational(1)) {
        out += power;
    } else {
        out += mag.str() + "*" + power;
    }
}

inline void append_latex_term(std::string& out, const Rational& coeff, const std::string& power,
                              bool first) {
    bool negative = coeff.sign() < 0;
    Rational mag = negative ? -coeff : coeff;
    if (first) {
        if (negative) out += "-";
    } else {
        out += negative ? "-" : "+";
    }
    std::string c;
    if (mag.is_integer()) {
        c = mag.numerator().str();
    } else {
        c = "{" + mag.numerator().str() + "\\over " + mag.denominator().str() + "}";
    }
    if (power.empty()) {
        out += c;
    } else if (mag == Rational(1)) {
        out += power;
    } else {
        out += c + power;
    }
}

}  // namespace detail

/// Descending powers with explicit rational coefficients,
/// e.g. "16/81*x^5 - 20/9*x^3 + 5*x". The zero polynomial renders as "0".
inline std::string to_text(const Polynomial& p, const std::string& var = "x") {
    if (p.is_zero()) return "0";
    std::string out;
    const auto& cs = p.coefficients();
    for (std::size_t i = cs.size(); i-- > 0;) {
        if (cs[i].is_zero()) continue;
        std::string power;
        if (i == 1) {
            power = var;
        } else if (i > 1) {
            power = var + "^" + std::to_string(i);
        }
        detail::append_text_term(out, cs[i], power, out.empty());
    }
    return out;
}

/// Descending powers of q, with exponents written as integers when the
/// u-exponent is even and as halves otherwise:
/// "q^2 - q + 1 - q^-1 + q^-2", "q^{3/2} - q^{1/2} + q^{-1/2} - q^{-3/2}".
inline std::string to_text(const LaurentPoly& p) {
    if (p.is_zero()) return "0";
    std::string out;
    for (int e = p.max_exponent(); e >= p.min_exponent(); --e) {
        Rational c = p.coefficient(e);
        if (c.is_zero()) continue;
        std::string power;
        if (e != 0) {
            if (e % 2 == 0) {
                int q = e / 2;
                power = q == 1 ? "q" : "q^" + std::to_string(q);
            } else {
                power = "q^{" + std::to_string(e) + "/2}";
            }
        }
        detail::append_text_term(out, c, power, out.empty());
    }
    return out;
}

/// Journal-style LaTeX: "{16\over 81}x^{5}-{20\over 9}x^{3}+5x".
inline std::string to_latex(const Polynomial& p, const std::string& var = "x") {
    if (p.is_zero()) return "0";
    std::string out;
    const auto& cs = p.coefficients();
    for (std::size_t i = cs.size(); i-- > 0;) {
        if (cs[i].is_zero()) continue;
        std::string power;
        if (i == 1) {
            power = var;
        } else if (i > 1) {
            power = var + "^{" + std::to_string(i) + "}";
        }
        detail::append_latex_term(out, cs[i], power, out.empty());
    }
    return out;
}

/// Journal-style LaTeX in q: "q^{2}-q+1-q^{-1}+q^{-2}",
/// "q^{3\over 2}-q^{1\over 2}+q^{-{1\over 2}}-q^{-{3\over 2}}".
inline std::string to_latex(const LaurentPoly& p) {
    if (p.is_zero()) return "0";
    std::string out;
    for (int e = p.max_exponent(); e >= p.min_exponent(); --e) {
        Rational c = p.coefficient(e);
        if (c.is_zero()) continue;
        std::string power;
        if (e != 0) {
            if (e % 2 == 0) {
                int q = e / 2;
                power = q == 1 ? "q" : "q^{" + std::to_string(q) + "}";
            } else {
                std::string half = std::to_string(e < 0 ? -e : e) + "\\over 2";
                power = e < 0 ? "q^{-{" + half + "}}" : "q^{" + half + "}";
            }
        }
        detail::append_latex_term(out, c, power, out.empty());
    }
    return out;
}

}  // namespace chebalex

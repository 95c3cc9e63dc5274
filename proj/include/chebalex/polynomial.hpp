#pragma once

#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

#include "chebalex/rational.hpp"

namespace chebalex {

/// Dense univariate polynomial in x over Rational, coefficients stored in
/// ascending order of the exponent. Canonical form: the highest stored
/// coefficient is nonzero; the zero polynomial is the empty sequence, and its
/// degree is reported as an empty optional rather than any integer.
class Polynomial {
  public:
    Polynomial() = default;
    Polynomial(const Rational& constant) {  // NOLINT(google-explicit-constructor)
        if (!constant.is_zero()) coeffs_.push_back(constant);
    }

    static Polynomial zero() { return {}; }

    static Polynomial monomial(std::size_t degree, const Rational& coeff = Rational(1)) {
        Polynomial p;
        if (!coeff.is_zero()) {
            p.coeffs_.assign(degree + 1, Rational(0));
            p.coeffs_[degree] = coeff;
        }
        return p;
    }

    /// x itself.
    static Polynomial x() { return monomial(1); }

    static Polynomial from_coefficients(std::vector<Rational> ascending) {
        Polynomial p;
        p.coeffs_ = std::move(ascending);
        p.prune();
        return p;
    }

    const std::vector<Rational>& coefficients() const { return coeffs_; }

    bool is_zero() const { return coeffs_.empty(); }

    std::optional<std::size_t> degree() const {
        if (coeffs_.empty()) return std::nullopt;
        return coeffs_.size() - 1;
    }

    /// Coefficient of x^i; zero outside the stored range.
    Rational coefficient(std::size_t i) const {
        return i < coeffs_.size() ? coeffs_[i] : Rational(0);
    }

    Rational leading_coefficient() const {
        return coeffs_.empty() ? Rational(0) : coeffs_.back();
    }

    /// Exact evaluation by Horner's scheme.
    Rational operator()(const Rational& x0) const {
        Rational acc(0);
        for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
            acc = acc * x0 + *it;
        }
        return acc;
    }

    Polynomial& operator+=(const Polynomial& o) {
        if (coeffs_.size() < o.coeffs_.size()) coeffs_.resize(o.coeffs_.size(), Rational(0));
        for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
        prune();
        return *this;
    }

    Polynomial& operator-=(const Polynomial& o) {
        if (coeffs_.size() < o.coeffs_.size()) coeffs_.resize(o.coeffs_.size(), Rational(0));
        for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] -= o.coeffs_[i];
        prune();
        return *this;
    }

    Polynomial& operator*=(const Rational& c) {
        if (c.is_zero()) {
            coeffs_.clear();
        } else {
            for (auto& a : coeffs_) a *= c;
        }
        return *this;
    }

    friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
    friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
    friend Polynomial operator*(Polynomial a, const Rational& c) { return a *= c; }
    friend Polynomial operator*(const Rational& c, Polynomial a) { return a *= c; }

    friend Polynomial operator*(const Polynomial& a, const Polynomial& b) {
        if (a.is_zero() || b.is_zero()) return {};
        Polynomial p;
        p.coeffs_.assign(a.coeffs_.size() + b.coeffs_.size() - 1, Rational(0));
        for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
            if (a.coeffs_[i].is_zero()) continue;
            for (std::size_t j = 0; j < b.coeffs_.size(); ++j) {
                p.coeffs_[i + j] += a.coeffs_[i] * b.coeffs_[j];
            }
        }
        p.prune();
        return p;
    }

    Polynomial operator-() const {
        Polynomial p(*this);
        for (auto& a : p.coeffs_) a = -a;
        return p;
    }

    friend bool operator==(const Polynomial& a, const Polynomial& b) {
        return a.coeffs_ == b.coeffs_;
    }
    friend bool operator!=(const Polynomial& a, const Polynomial& b) { return !(a == b); }

  private:
    std::vector<Rational> coeffs_;

    void prune() {
        while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
    }
};

}  // namespace chebalex

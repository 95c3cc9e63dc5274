#pragma once

#include <cstddef>
#include <utility>
#include <vector>

#include "chebalex/errors.hpp"
#include "chebalex/rational.hpp"

namespace chebalex {

/// Laurent polynomial in u = q^{1/2} over Rational: a finitely supported
/// sequence of coefficients for u^{min_exponent} .. u^{max_exponent}.
/// Canonical form: the first and last stored coefficients are nonzero; the
/// zero value is the empty sequence with min_exponent fixed at 0.
class LaurentPoly {
  public:
    LaurentPoly() = default;

    static LaurentPoly zero() { return {}; }

    static LaurentPoly constant(const Rational& c) { return term(c, 0); }

    /// c * u^exp
    static LaurentPoly term(const Rational& c, int exp) {
        LaurentPoly p;
        if (!c.is_zero()) {
            p.min_exp_ = exp;
            p.coeffs_.push_back(c);
        }
        return p;
    }

    static LaurentPoly from_coefficients(int min_exp, std::vector<Rational> ascending) {
        LaurentPoly p;
        p.min_exp_ = min_exp;
        p.coeffs_ = std::move(ascending);
        p.prune();
        return p;
    }

    bool is_zero() const { return coeffs_.empty(); }

    /// Exponent of the lowest-order term (0 for the zero value).
    int min_exponent() const { return min_exp_; }
    int max_exponent() const {
        return coeffs_.empty() ? 0 : min_exp_ + static_cast<int>(coeffs_.size()) - 1;
    }

    const std::vector<Rational>& coefficients() const { return coeffs_; }

    Rational coefficient(int exp) const {
        if (coeffs_.empty() || exp < min_exp_ || exp > max_exponent()) return Rational(0);
        return coeffs_[static_cast<std::size_t>(exp - min_exp_)];
    }

    /// Exact evaluation at a nonzero rational point.
    Rational operator()(const Rational& u0) const {
        if (u0.is_zero()) throw DivisionByZero{};
        Rational acc(0);
        for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * u0 + *it;
        // acc now holds the value of the shifted ordinary polynomial; undo the shift.
        Rational shift(1);
        int e = min_exp_;
        Rational base = e < 0 ? Rational(1) / u0 : u0;
        for (int i = 0; i < (e < 0 ? -e : e); ++i) shift *= base;
        return acc * shift;
    }

    LaurentPoly& operator+=(const LaurentPoly& o) { return *this = add(*this, o, false); }
    LaurentPoly& operator-=(const LaurentPoly& o) { return *this = add(*this, o, true); }

    LaurentPoly& operator*=(const Rational& c) {
        if (c.is_zero()) {
            coeffs_.clear();
            min_exp_ = 0;
        } else {
            for (auto& a : coeffs_) a *= c;
        }
        return *this;
    }

    friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
    friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) { return a -= b; }
    friend LaurentPoly operator*(LaurentPoly a, const Rational& c) { return a *= c; }
    friend LaurentPoly operator*(const Rational& c, LaurentPoly a) { return a *= c; }

    friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
        if (a.is_zero() || b.is_zero()) return {};
        LaurentPoly p;
        p.min_exp_ = a.min_exp_ + b.min_exp_;
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

    LaurentPoly operator-() const {
        LaurentPoly p(*this);
        for (auto& a : p.coeffs_) a = -a;
        return p;
    }

    friend bool operator==(const LaurentPoly& a, const LaurentPoly& b) {
        return a.min_exp_ == b.min_exp_ && a.coeffs_ == b.coeffs_;
    }
    friend bool operator!=(const LaurentPoly& a, const LaurentPoly& b) { return !(a == b); }

    /// The involution u -> 1/u (exponent negation).
    friend LaurentPoly bar(const LaurentPoly& a) {
        if (a.is_zero()) return {};
        LaurentPoly p;
        p.min_exp_ = -a.max_exponent();
        p.coeffs_.assign(a.coeffs_.rbegin(), a.coeffs_.rend());
        return p;
    }

    /// Exact quotient a / b. Both operands are shifted to ordinary
    /// polynomials (multiplied by u^{-min_exponent}), divided by classical
    /// long division, and the exponent shift is restored on the quotient.
    /// Throws DivisionByZero when b = 0 and NonExactDivision when the
    /// remainder is nonzero.
    friend LaurentPoly div_exact(const LaurentPoly& a, const LaurentPoly& b) {
        if (b.is_zero()) throw DivisionByZero{};
        if (a.is_zero()) return {};

        std::vector<Rational> rem = a.coeffs_;
        const std::vector<Rational>& div = b.coeffs_;
        if (rem.size() < div.size()) throw NonExactDivision{};

        std::vector<Rational> quot(rem.size() - div.size() + 1, Rational(0));
        const Rational& lead = div.back();
        for (std::size_t k = quot.size(); k-- > 0;) {
            Rational t = rem[k + div.size() - 1] / lead;
            quot[k] = t;
            if (t.is_zero()) continue;
            for (std::size_t j = 0; j < div.size(); ++j) rem[k + j] -= t * div[j];
        }
        for (const auto& r : rem) {
            if (!r.is_zero()) throw NonExactDivision{};
        }
        return from_coefficients(a.min_exp_ - b.min_exp_, std::move(quot));
    }

  private:
    int min_exp_ = 0;
    std::vector<Rational> coeffs_;  // ascending from min_exp_

    void prune() {
        std::size_t lo = 0;
        while (lo < coeffs_.size() && coeffs_[lo].is_zero()) ++lo;
        if (lo == coeffs_.size()) {
            coeffs_.clear();
            min_exp_ = 0;
            return;
        }
        std::size_t hi = coeffs_.size();
        while (coeffs_[hi - 1].is_zero()) --hi;
        if (lo > 0) {
            min_exp_ += static_cast<int>(lo);
            coeffs_.erase(coeffs_.begin(), coeffs_.begin() + static_cast<std::ptrdiff_t>(lo));
            hi -= lo;
        }
        coeffs_.resize(hi);
    }

    static LaurentPoly add(const LaurentPoly& a, const LaurentPoly& b, bool negate_b) {
        if (b.is_zero()) return a;
        if (a.is_zero()) return negate_b ? -b : b;
        LaurentPoly p;
        p.min_exp_ = std::min(a.min_exp_, b.min_exp_);
        int top = std::max(a.max_exponent(), b.max_exponent());
        p.coeffs_.assign(static_cast<std::size_t>(top - p.min_exp_) + 1, Rational(0));
        for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
            p.coeffs_[static_cast<std::size_t>(a.min_exp_ - p.min_exp_) + i] += a.coeffs_[i];
        }
        for (std::size_t i = 0; i < b.coeffs_.size(); ++i) {
            auto& slot = p.coeffs_[static_cast<std::size_t>(b.min_exp_ - p.min_exp_) + i];
            if (negate_b) {
                slot -= b.coeffs_[i];
            } else {
                slot += b.coeffs_[i];
            }
        }
        p.prune();
        return p;
    }
};

}  // namespace chebalex

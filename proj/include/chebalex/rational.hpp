#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <compare>
#include <string>
#include <utility>

#include "chebalex/errors.hpp"

namespace chebalex {

using BigInt = boost::multiprecision::cpp_int;

/// Arbitrary-precision rational number in canonical form: the denominator is
/// always positive, gcd(|numerator|, denominator) = 1, and zero is stored as
/// 0/1. All operations return canonical values; there is no non-canonical
/// state to observe.
class Rational {
  public:
    Rational() : v_(0) {}
    Rational(int n) : v_(n) {}                // NOLINT(google-explicit-constructor)
    Rational(long long n) : v_(n) {}          // NOLINT(google-explicit-constructor)
    Rational(const BigInt& n) : v_(n) {}      // NOLINT(google-explicit-constructor)
    Rational(long long num, long long den) : Rational(BigInt(num), BigInt(den)) {}

    Rational(const BigInt& num, const BigInt& den) {
        if (den == 0) throw DivisionByZero{};
        v_ = backend(num);
        v_ /= backend(den);
    }

    /// The exact value of a double (every finite double is a dyadic rational).
    static Rational from_double_exact(double x) {
        Rational r;
        r.v_ = backend(x);
        return r;
    }

    BigInt numerator() const { return boost::multiprecision::numerator(v_); }
    BigInt denominator() const { return boost::multiprecision::denominator(v_); }

    bool is_zero() const { return v_.is_zero(); }
    bool is_integer() const { return denominator() == 1; }
    int sign() const { return v_.sign(); }

    double to_double() const { return v_.convert_to<double>(); }

    /// "num/den", or just "num" when the value is an integer.
    std::string str() const {
        std::string s = numerator().str();
        if (!is_integer()) s += "/" + denominator().str();
        return s;
    }

    Rational& operator+=(const Rational& o) { v_ += o.v_; return *this; }
    Rational& operator-=(const Rational& o) { v_ -= o.v_; return *this; }
    Rational& operator*=(const Rational& o) { v_ *= o.v_; return *this; }
    Rational& operator/=(const Rational& o) {
        if (o.is_zero()) throw DivisionByZero{};
        v_ /= o.v_;
        return *this;
    }

    friend Rational operator+(Rational a, const Rational& b) { return a += b; }
    friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
    friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
    friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

    Rational operator-() const {
        Rational r(*this);
        r.v_ = -r.v_;
        return r;
    }

    friend bool operator==(const Rational& a, const Rational& b) { return a.v_ == b.v_; }
    friend bool operator!=(const Rational& a, const Rational& b) { return a.v_ != b.v_; }
    friend bool operator<(const Rational& a, const Rational& b) { return a.v_ < b.v_; }
    friend bool operator<=(const Rational& a, const Rational& b) { return a.v_ <= b.v_; }
    friend bool operator>(const Rational& a, const Rational& b) { return a.v_ > b.v_; }
    friend bool operator>=(const Rational& a, const Rational& b) { return a.v_ >= b.v_; }

  private:
    using backend = boost::multiprecision::cpp_rational;
    backend v_;
};

inline Rational abs(const Rational& r) { return r.sign() < 0 ? -r : r; }

}  // namespace chebalex

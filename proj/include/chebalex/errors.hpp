#pragma once

#include <stdexcept>
#include <string>

namespace chebalex {

/// Division by a zero rational or a zero Laurent polynomial.
struct DivisionByZero : std::domain_error {
    DivisionByZero() : std::domain_error("division by zero") {}
};

/// Exact division was requested but the remainder is nonzero.
struct NonExactDivision : std::domain_error {
    NonExactDivision() : std::domain_error("division leaves a nonzero remainder") {}
};

/// The torus parameters (n, l) are not coprime; carries the offending gcd.
struct NonCoprime : std::domain_error {
    NonCoprime(int n, int l, int g)
        : std::domain_error("torus parameters (" + std::to_string(n) + ", " + std::to_string(l) +
                            ") are not coprime: gcd = " + std::to_string(g)),
          gcd(g) {}
    int gcd;
};

struct NotOdd : std::domain_error {
    explicit NotOdd(int n) : std::domain_error("expected an odd index, got " + std::to_string(n)) {}
};

struct NotEven : std::domain_error {
    explicit NotEven(int n) : std::domain_error("expected an even index, got " + std::to_string(n)) {}
};

struct IndexOutOfRange : std::out_of_range {
    explicit IndexOutOfRange(const std::string& what) : std::out_of_range(what) {}
};

/// The intermediate Laurent polynomial was expected to be invariant under
/// u -> 1/u but is not.
struct AsymmetricInput : std::domain_error {
    AsymmetricInput() : std::domain_error("Laurent polynomial is not symmetric under u -> 1/u") {}
};

}  // namespace chebalex

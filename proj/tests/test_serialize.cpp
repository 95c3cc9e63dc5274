#include <catch2/catch_amalgamated.hpp>

#include <random>
#include <string>
#include <vector>

#include "chebalex/alexander.hpp"
#include "chebalex/chebyshev.hpp"
#include "chebalex/render.hpp"
#include "chebalex/serialize.hpp"

using namespace chebalex;

namespace {

Polynomial random_polynomial(std::mt19937& rng) {
    std::uniform_int_distribution<int> deg(0, 9);
    std::uniform_int_distribution<long long> num(-99, 99);
    std::uniform_int_distribution<long long> den(1, 50);
    std::vector<Rational> cs;
    int d = deg(rng);
    for (int i = 0; i <= d; ++i) cs.emplace_back(num(rng), den(rng));
    return Polynomial::from_coefficients(std::move(cs));
}

LaurentPoly random_laurent(std::mt19937& rng) {
    std::uniform_int_distribution<int> exp(-6, 6);
    std::uniform_int_distribution<int> len(1, 8);
    std::uniform_int_distribution<long long> num(-99, 99);
    std::uniform_int_distribution<long long> den(1, 50);
    std::vector<Rational> cs;
    int l = len(rng);
    for (int i = 0; i < l; ++i) cs.emplace_back(num(rng), den(rng));
    return LaurentPoly::from_coefficients(exp(rng), std::move(cs));
}

}  // namespace

TEST_CASE("polynomial text rendering") {
    CHECK(to_text(cheb_recurrence({1, 1, 5})) == "16*x^5 - 20*x^3 + 5*x");
    CHECK(to_text(cheb_recurrence({1, 3, 5})) == "16/81*x^5 - 20/9*x^3 + 5*x");
    CHECK(to_text(cheb_recurrence({3, 2, 2})) == "x^2");
    CHECK(to_text(cheb_recurrence({1, 2, 2})) == "x^2 - 2");
    CHECK(to_text(cheb_recurrence({1, 1, 0})) == "1");
    CHECK(to_text(Polynomial::zero()) == "0");
    CHECK(to_text(Polynomial::from_coefficients({Rational(0), Rational(-1)})) == "-x");
    CHECK(to_text(cheb_recurrence({4, 2, 0})) == "-1");
}

TEST_CASE("laurent text rendering") {
    CHECK(to_text(torus_knot_n2(5)) == "q^2 - q + 1 - q^-1 + q^-2");
    CHECK(to_text(torus_link_n2(4)) == "q^{3/2} - q^{1/2} + q^{-1/2} - q^{-3/2}");
    CHECK(to_text(torus_knot_n2(3)) == "q - 1 + q^-1");
    CHECK(to_text(torus_link_n2(2)) == "q^{1/2} - q^{-1/2}");
    CHECK(to_text(torus_knot_n2(1)) == "1");
    CHECK(to_text(LaurentPoly::zero()) == "0");
    CHECK(to_text(LaurentPoly::term(Rational(5, 2), 1)) == "5/2*q^{1/2}");
}

TEST_CASE("latex rendering mirrors the typeset tables") {
    CHECK(to_latex(cheb_recurrence({1, 3, 5})) == "{16\\over 81}x^{5}-{20\\over 9}x^{3}+5x");
    CHECK(to_latex(cheb_recurrence({1, 1, 5})) == "16x^{5}-20x^{3}+5x");
    CHECK(to_latex(cheb_recurrence({1, 1, 2})) == "2x^{2}-1");
    CHECK(to_latex(torus_knot_n2(3)) == "q-1+q^{-1}");
    CHECK(to_latex(torus_link_n2(4)) ==
          "q^{3\\over 2}-q^{1\\over 2}+q^{-{1\\over 2}}-q^{-{3\\over 2}}");
    CHECK(to_latex(Polynomial::zero()) == "0");
}

TEST_CASE("text rendering never emits floating-point literals") {
    std::mt19937 rng(3);
    auto scan = [](const std::string& s) {
        CHECK(s.find('.') == std::string::npos);
        CHECK(s.find('e') == std::string::npos);
        CHECK(s.find('E') == std::string::npos);
    };
    for (int i = 0; i < 200; ++i) {
        scan(to_text(random_polynomial(rng)));
        scan(to_text(random_laurent(rng)));
    }
    for (int k = 1; k <= 4; ++k) {
        for (int h = 1; h <= 4; ++h) scan(to_text(cheb_recurrence({k, h, 9})));
    }
}

TEST_CASE("polynomial json schema and round trip") {
    nlohmann::json j = to_json(cheb_recurrence({1, 3, 2}));
    CHECK(j["var"] == "x");
    REQUIRE(j["coeffs"].size() == 3);
    CHECK(j["coeffs"][0][0] == "-3");
    CHECK(j["coeffs"][0][1] == "1");
    CHECK(j["coeffs"][2][0] == "2");
    CHECK(j["coeffs"][2][1] == "3");

    std::mt19937 rng(8);
    for (int i = 0; i < 200; ++i) {
        Polynomial p = random_polynomial(rng);
        REQUIRE(polynomial_from_json(nlohmann::json::parse(to_json(p).dump())) == p);
    }
}

TEST_CASE("laurent json schema and round trip") {
    nlohmann::json j = to_json(torus_link_n2(2));
    CHECK(j["var"] == "u");
    CHECK(j["min_exp"] == -1);
    REQUIRE(j["coeffs"].size() == 3);
    CHECK(j["coeffs"][0][0] == "-1");

    std::mt19937 rng(9);
    for (int i = 0; i < 200; ++i) {
        LaurentPoly p = random_laurent(rng);
        REQUIRE(laurent_from_json(nlohmann::json::parse(to_json(p).dump())) == p);
    }
}

TEST_CASE("csv round trip") {
    std::mt19937 rng(10);
    for (int i = 0; i < 200; ++i) {
        Polynomial p = random_polynomial(rng);
        REQUIRE(polynomial_from_csv(split_csv(csv_fields(p))) == p);
        LaurentPoly l = random_laurent(rng);
        REQUIRE(laurent_from_csv(split_csv(csv_fields(l))) == l);
    }
    // zero polynomial has no coefficient fields
    CHECK(csv_fields(Polynomial::zero()).empty());
    CHECK(polynomial_from_csv({}) == Polynomial::zero());
}

TEST_CASE("report json carries the pass flag and failure data") {
    VerificationReport r;
    r.identity = "demo";
    r.ranges = {{"n", 1, 9}};
    nlohmann::json passing = to_json(r);
    CHECK(passing["passed"] == true);
    CHECK(passing["failures"].empty());
    CHECK(passing["identity"] == "demo");

    r.failures.push_back({{{"n", 3}}, "a", "b"});
    nlohmann::json failing = to_json(r);
    CHECK(failing["passed"] == false);
    REQUIRE(failing["failures"].size() == 1);
    CHECK(failing["failures"][0]["params"]["n"] == 3);
    CHECK(failing["failures"][0]["lhs"] == "a");
}

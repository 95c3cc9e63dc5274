#pragma once

#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "json.hpp"

#include "chebalex/laurent.hpp"
#include "chebalex/polynomial.hpp"
#include "chebalex/rational.hpp"
#include "chebalex/report.hpp"

// JSON and CSV serialization. Numerators and denominators travel as decimal
// strings so arbitrary-precision values survive any consumer.

namespace chebalex {

namespace detail {

inline nlohmann::json coeff_pair(const Rational& r) {
    return nlohmann::json::array({r.numerator().str(), r.denominator().str()});
}

inline Rational coeff_from_pair(const nlohmann::json& j) {
    if (!j.is_array() || j.size() != 2) {
        throw std::invalid_argument("coefficient must be a [numerator, denominator] pair");
    }
    return Rational(BigInt(j[0].get<std::string>()), BigInt(j[1].get<std::string>()));
}

// "num/den" or "num"
inline Rational rational_from_string(const std::string& s) {
    auto slash = s.find('/');
    if (slash == std::string::npos) return Rational(BigInt(s));
    return Rational(BigInt(s.substr(0, slash)), BigInt(s.substr(slash + 1)));
}

}  // namespace detail

inline nlohmann::json to_json(const Polynomial& p) {
    nlohmann::json coeffs = nlohmann::json::array();
    for (const auto& c : p.coefficients()) coeffs.push_back(detail::coeff_pair(c));
    return nlohmann::json{{"var", "x"}, {"coeffs", coeffs}};
}

inline Polynomial polynomial_from_json(const nlohmann::json& j) {
    std::vector<Rational> coeffs;
    for (const auto& c : j.at("coeffs")) coeffs.push_back(detail::coeff_from_pair(c));
    return Polynomial::from_coefficients(std::move(coeffs));
}

inline nlohmann::json to_json(const LaurentPoly& p) {
    nlohmann::json coeffs = nlohmann::json::array();
    for (const auto& c : p.coefficients()) coeffs.push_back(detail::coeff_pair(c));
    return nlohmann::json{{"var", "u"}, {"min_exp", p.min_exponent()}, {"coeffs", coeffs}};
}

inline LaurentPoly laurent_from_json(const nlohmann::json& j) {
    std::vector<Rational> coeffs;
    for (const auto& c : j.at("coeffs")) coeffs.push_back(detail::coeff_from_pair(c));
    return LaurentPoly::from_coefficients(j.at("min_exp").get<int>(), std::move(coeffs));
}

inline nlohmann::json to_json(const VerificationReport& r) {
    nlohmann::json ranges = nlohmann::json::array();
    for (const auto& pr : r.ranges) {
        ranges.push_back({{"name", pr.name}, {"lo", pr.lo}, {"hi", pr.hi}});
    }
    auto entries = [](const std::vector<CheckFailure>& list) {
        nlohmann::json out = nlohmann::json::array();
        for (const auto& f : list) {
            nlohmann::json params = nlohmann::json::object();
            for (const auto& [name, value] : f.params) params[name] = value;
            out.push_back({{"params", params}, {"lhs", f.lhs}, {"rhs", f.rhs}});
        }
        return out;
    };
    nlohmann::json j{{"identity", r.identity},
                     {"ranges", ranges},
                     {"passed", r.passed()},
                     {"failures", entries(r.failures)},
                     {"elapsed_seconds", r.elapsed_seconds}};
    if (!r.informational.empty()) j["informational"] = entries(r.informational);
    return j;
}

/// Ascending coefficients as num/den fields: "1/1,0/1,-20/9".
inline std::string csv_fields(const Polynomial& p) {
    std::string out;
    const auto& cs = p.coefficients();
    for (std::size_t i = 0; i < cs.size(); ++i) {
        if (i > 0) out += ",";
        out += cs[i].numerator().str() + "/" + cs[i].denominator().str();
    }
    return out;
}

/// "min_exp" then ascending coefficients as num/den fields.
inline std::string csv_fields(const LaurentPoly& p) {
    std::string out = std::to_string(p.min_exponent());
    for (const auto& c : p.coefficients()) {
        out += "," + c.numerator().str() + "/" + c.denominator().str();
    }
    return out;
}

inline std::vector<std::string> split_csv(const std::string& line) {
    std::vector<std::string> fields;
    std::stringstream ss(line);
    std::string field;
    while (std::getline(ss, field, ',')) fields.push_back(field);
    return fields;
}

/// Parses the coefficient fields of a csv row (everything after any leading
/// parameter columns the caller has already consumed).
inline Polynomial polynomial_from_csv(const std::vector<std::string>& fields, std::size_t offset = 0) {
    std::vector<Rational> coeffs;
    for (std::size_t i = offset; i < fields.size(); ++i) {
        coeffs.push_back(detail::rational_from_string(fields[i]));
    }
    return Polynomial::from_coefficients(std::move(coeffs));
}

inline LaurentPoly laurent_from_csv(const std::vector<std::string>& fields, std::size_t offset = 0) {
    if (fields.size() <= offset) throw std::invalid_argument("csv row is missing min_exp");
    int min_exp = std::stoi(fields[offset]);
    std::vector<Rational> coeffs;
    for (std::size_t i = offset + 1; i < fields.size(); ++i) {
        coeffs.push_back(detail::rational_from_string(fields[i]));
    }
    return LaurentPoly::from_coefficients(min_exp, std::move(coeffs));
}

}  // namespace chebalex

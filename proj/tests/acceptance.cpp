// Acceptance suite: every criterion is checked exactly (coefficient-level
// equality; the floating cross-check at its fixed tolerance) and against its
// runtime budget. One line is printed per criterion; the exit code is the
// number of failed criteria.

#include <chrono>
#include <cstdio>
#include <functional>
#include <string>
#include <vector>

#include "chebalex/alexander.hpp"
#include "chebalex/bridge.hpp"
#include "chebalex/chebyshev.hpp"
#include "chebalex/verify.hpp"

using namespace chebalex;

namespace {

Polynomial P(std::initializer_list<Rational> ascending) {
    return Polynomial::from_coefficients(std::vector<Rational>(ascending));
}

LaurentPoly L(int min_exp, std::initializer_list<Rational> ascending) {
    return LaurentPoly::from_coefficients(min_exp, std::vector<Rational>(ascending));
}

Rational R(long long n, long long d = 1) { return Rational(n, d); }

struct Outcome {
    bool pass = true;
    std::string detail;
};

bool check_block(Outcome& out, int k, int h, const std::vector<Polynomial>& expected) {
    auto family = cheb_family(k, h, static_cast<int>(expected.size()) - 1);
    for (std::size_t n = 0; n < expected.size(); ++n) {
        if (family[n] != expected[n]) {
            out.pass = false;
            out.detail = "mismatch at k=" + std::to_string(k) + " h=" + std::to_string(h) +
                         " n=" + std::to_string(n);
            return false;
        }
    }
    return true;
}

// --- criterion 1: every polynomial block listed in the tables ---

Outcome golden_tables() {
    Outcome out;

    // standard first kind (k=1, h=1)
    check_block(out, 1, 1,
                {P({1}), P({0, 1}), P({-1, 0, 2}), P({0, -3, 0, 4}), P({1, 0, -8, 0, 8}),
                 P({0, 5, 0, -20, 0, 16})});
    // standard second kind (k=2, h=1)
    check_block(out, 2, 1,
                {P({1}), P({0, 2}), P({-1, 0, 4}), P({0, -4, 0, 8}), P({1, 0, -12, 0, 16}),
                 P({0, 6, 0, -32, 0, 32})});
    // monic first kind (k=1, h=2)
    check_block(out, 1, 2,
                {P({2}), P({0, 1}), P({-2, 0, 1}), P({0, -3, 0, 1}), P({2, 0, -4, 0, 1}),
                 P({0, 5, 0, -5, 0, 1})});
    // monic second kind (k=2, h=2)
    check_block(out, 2, 2,
                {P({1}), P({0, 1}), P({-1, 0, 1}), P({0, -2, 0, 1}), P({1, 0, -3, 0, 1}),
                 P({0, 3, 0, -4, 0, 1})});
    // hyperkind 3, first kind
    check_block(out, 1, 3,
                {P({3}), P({0, 1}), P({-3, 0, R(2, 3)}), P({0, -3, 0, R(4, 9)}),
                 P({3, 0, R(-8, 3), 0, R(8, 27)}), P({0, 5, 0, R(-20, 9), 0, R(16, 81)})});
    // hyperkind 3, second kind
    check_block(out, 2, 3,
                {P({1}), P({0, R(2, 3)}), P({-1, 0, R(4, 9)}), P({0, R(-4, 3), 0, R(8, 27)}),
                 P({1, 0, R(-4, 3), 0, R(16, 81)}), P({0, 2, 0, R(-32, 27), 0, R(32, 243)})});
    // third kind, hyperkinds 1 and 2
    check_block(out, 3, 1,
                {P({1}), P({0, 3}), P({-1, 0, 6}), P({0, -5, 0, 12}), P({1, 0, -16, 0, 24}),
                 P({0, 7, 0, -44, 0, 48})});
    check_block(out, 3, 2,
                {Polynomial::zero(), P({0, 1}), P({0, 0, 1}), P({0, -1, 0, 1}),
                 P({0, 0, -2, 0, 1}), P({0, 1, 0, -3, 0, 1})});
    // parametric standard block instantiated at k = 1..5
    for (long long k = 1; k <= 5; ++k) {
        if (!check_block(out, static_cast<int>(k), 1,
                         {P({1}), P({0, R(k)}), P({-1, 0, R(2 * k)}),
                          P({0, R(-(k + 2)), 0, R(4 * k)}),
                          P({1, 0, R(-4 * (k + 1)), 0, R(8 * k)}),
                          P({0, R(k + 4), 0, R(-4 * (3 * k + 2)), 0, R(16 * k)})})) {
            break;
        }
    }
    // parametric monic block instantiated at k = 1..5
    for (long long k = 1; k <= 5; ++k) {
        if (!check_block(out, static_cast<int>(k), 2,
                         {P({R(3 - k)}), P({0, 1}), P({R(k - 3), 0, 1}),
                          P({0, R(k - 4), 0, 1}), P({R(3 - k), 0, R(k - 5), 0, 1}),
                          P({0, R(7 - 2 * k), 0, R(k - 6), 0, 1})})) {
            break;
        }
    }
    return out;
}

// --- criterion 2: the general (k, h) block with the corrected final term ---

Outcome general_table() {
    Outcome out;
    for (int k = 1; k <= 5 && out.pass; ++k) {
        for (int h = 1; h <= 5 && out.pass; ++h) {
            SeedPair s = seed_pair(k, h);
            const Rational& A = s.constant_term;
            const Rational& B = s.linear_coefficient;
            Rational ih(1, h);
            Rational ih2 = ih * ih, ih3 = ih2 * ih, ih4 = ih3 * ih;
            // final term of T5 is (4A/h + B) x, not (4A/h + B) h
            check_block(
                out, k, h,
                {P({A}), P({0, B}), P({-A, 0, R(2) * ih * B}),
                 P({0, -(R(2) * ih * A + B), 0, R(4) * ih2 * B}),
                 P({A, 0, -(R(4) * ih2 * A + R(4) * ih * B), 0, R(8) * ih3 * B}),
                 P({0, R(4) * ih * A + B, 0, -(R(8) * ih3 * A + R(12) * ih2 * B), 0,
                    R(16) * ih4 * B})});
        }
    }
    return out;
}

Outcome from_report(const VerificationReport& report) {
    Outcome out;
    out.pass = report.passed();
    if (!out.pass) {
        out.detail = std::to_string(report.failures.size()) + " failing point(s) in " +
                     report.identity;
    }
    return out;
}

// --- criterion 6: the invariant examples and their normalizations ---

Outcome alexander_examples() {
    Outcome out;
    struct Golden {
        int n;
        LaurentPoly expected;
    };
    const std::vector<Golden> goldens = {
        {1, L(0, {R(1)})},
        {2, L(-1, {R(-1), R(0), R(1)})},
        {3, L(-2, {R(1), R(0), R(-1), R(0), R(1)})},
        {4, L(-3, {R(-1), R(0), R(1), R(0), R(-1), R(0), R(1)})},
        {5, L(-4, {R(1), R(0), R(-1), R(0), R(1), R(0), R(-1), R(0), R(1)})},
    };
    for (const auto& g : goldens) {
        if (torus_n2(g.n) != g.expected) {
            out.pass = false;
            out.detail = "invariant example mismatch at n=" + std::to_string(g.n);
            return out;
        }
    }
    for (int n = 1; n <= 99; n += 2) {
        if (torus_knot_n2(n)(R(1)) != R(1)) {
            out.pass = false;
            out.detail = "knot normalization Delta(1) != 1 at n=" + std::to_string(n);
            return out;
        }
    }
    for (int n = 2; n <= 98; n += 2) {
        LaurentPoly delta = torus_link_n2(n);
        if (bar(delta) != -delta) {
            out.pass = false;
            out.detail = "link antisymmetry fails at n=" + std::to_string(n);
            return out;
        }
    }
    return out;
}

// --- criterion 10: floating cross-check at the pinned tolerance ---

Outcome trig_criterion() {
    return from_report(trig_scan(5, 5, 30, 1000, 1e-9));
}

struct Criterion {
    std::string name;
    double budget_seconds;
    std::function<Outcome()> check;
};

}  // namespace

int main() {
    const std::vector<Criterion> criteria = {
        {"golden tables (all listed blocks)", 1.0, golden_tables},
        {"general (k,h) table, corrected final term", 1.0, general_table},
        {"triple construction equivalence k,h<=10 n<=50", 10.0,
         [] { return from_report(triple_equivalence_scan(10, 10, 50)); }},
        {"equidistance in k over the same ranges", 10.0,
         [] { return from_report(equidistance_scan(10, 10, 50)); }},
        {"connection formula h<=10 n<=50", 5.0,
         [] { return from_report(connection_scan(10, 50)); }},
        {"alexander examples and normalizations", 1.0, alexander_examples},
        {"skein tower 3<=n<=99", 2.0, [] { return from_report(skein_scan(99)); }},
        {"bridge identities t1h and t2h, odd n<=99 h<=10", 10.0,
         [] {
             Outcome a = from_report(bridge_t1h_scan(99, 10));
             if (!a.pass) return a;
             return from_report(bridge_t2h_scan(99, 10));
         }},
        {"inverse recipe round trip, odd n<=99 h<=5", 10.0,
         [] { return from_report(inverse_recipe_scan(99, 5)); }},
        {"trig cross-check < 1e-9, k,h<=5 n<=30", 5.0, trig_criterion},
    };

    int failed = 0;
    for (std::size_t i = 0; i < criteria.size(); ++i) {
        const auto& c = criteria[i];
        auto start = std::chrono::steady_clock::now();
        Outcome out = c.check();
        double elapsed =
            std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        bool in_budget = elapsed < c.budget_seconds;
        bool pass = out.pass && in_budget;
        std::printf("[%2zu/10] %-48s %s  %7.3f s (budget %g s)\n", i + 1, c.name.c_str(),
                    pass ? "PASS" : "FAIL", elapsed, c.budget_seconds);
        if (!out.pass) std::printf("        %s\n", out.detail.c_str());
        if (out.pass && !in_budget) std::printf("        over budget\n");
        failed += pass ? 0 : 1;
    }
    if (failed > 0) std::printf("%d criterion(s) failed\n", failed);
    return failed;
}

// Command-line front end: generates generalized Chebyshev polynomials and
// Alexander torus invariants, emits tables, and runs the verification
// suites.
//
// Exit codes: 0 success, 1 verification failure, 2 argument error,
// 3 domain error (e.g. non-coprime torus parameters).

#include <cstdio>
#include <iostream>
#include <stdexcept>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "chebalex/alexander.hpp"
#include "chebalex/bridge.hpp"
#include "chebalex/chebyshev.hpp"
#include "chebalex/render.hpp"
#include "chebalex/serialize.hpp"
#include "chebalex/verify.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitVerificationFailure = 1;
constexpr int kExitArgumentError = 2;
constexpr int kExitDomainError = 3;

struct ArgumentError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct IntRange {
    int lo = 1;
    int hi = 1;
};

// "3" or "1..5"
IntRange parse_range(const std::string& text) {
    try {
        auto dots = text.find("..");
        if (dots == std::string::npos) {
            int v = std::stoi(text);
            return {v, v};
        }
        return {std::stoi(text.substr(0, dots)), std::stoi(text.substr(dots + 2))};
    } catch (const std::exception&) {
        throw ArgumentError("cannot parse range '" + text + "' (expected N or LO..HI)");
    }
}

void require_range(const IntRange& r, const std::string& name) {
    if (r.lo < 1 || r.hi < r.lo) {
        throw ArgumentError("range for " + name + " must satisfy 1 <= lo <= hi");
    }
}

std::string format_polynomial(const chebalex::Polynomial& p, const std::string& format,
                              int k, int h, int n) {
    if (format == "text") return chebalex::to_text(p);
    if (format == "latex") return chebalex::to_latex(p);
    if (format == "json") return chebalex::to_json(p).dump();
    if (format == "csv") {
        return std::to_string(k) + "," + std::to_string(h) + "," + std::to_string(n) + "," +
               chebalex::csv_fields(p);
    }
    throw ArgumentError("unknown format '" + format + "'");
}

std::string format_laurent(const chebalex::LaurentPoly& p, const std::string& format,
                           int n, int l) {
    if (format == "text") return chebalex::to_text(p);
    if (format == "latex") return chebalex::to_latex(p);
    if (format == "json") return chebalex::to_json(p).dump();
    if (format == "csv") {
        return std::to_string(n) + "," + std::to_string(l) + "," + chebalex::csv_fields(p);
    }
    throw ArgumentError("unknown format '" + format + "'");
}

int run_gen(int k, int h, int n, const std::string& format) {
    if (k < 1 || h < 1 || n < 0) {
        throw ArgumentError("gen needs --k >= 1, --h >= 1, --n >= 0");
    }
    chebalex::Polynomial p = chebalex::cheb_recurrence({k, h, n});
    std::cout << format_polynomial(p, format, k, h, n) << "\n";
    return kExitOk;
}

int run_table(const IntRange& ks, const IntRange& hs, int n_max, const std::string& format) {
    require_range(ks, "--k");
    require_range(hs, "--h");
    if (n_max < 0) throw ArgumentError("table needs --n-max >= 0");

    nlohmann::json rows = nlohmann::json::array();
    for (int k = ks.lo; k <= ks.hi; ++k) {
        for (int h = hs.lo; h <= hs.hi; ++h) {
            const auto family = chebalex::cheb_family(k, h, n_max);
            for (int n = 0; n <= n_max; ++n) {
                const auto& p = family[n];
                if (format == "text") {
                    std::cout << "T(" << k << "," << h << "," << n << ") = "
                              << chebalex::to_text(p) << "\n";
                } else if (format == "latex") {
                    std::cout << "T^{(" << k << "," << h << ")}_{" << n << "} = "
                              << chebalex::to_latex(p) << "\n";
                } else if (format == "csv") {
                    std::cout << format_polynomial(p, "csv", k, h, n) << "\n";
                } else if (format == "json") {
                    rows.push_back({{"k", k}, {"h", h}, {"n", n}, {"poly", chebalex::to_json(p)}});
                } else {
                    throw ArgumentError("unknown format '" + format + "'");
                }
            }
        }
    }
    if (format == "json") std::cout << rows.dump() << "\n";
    return kExitOk;
}

int run_alexander(int n, int l, bool l_given, const std::string& format) {
    if (n < 1 || (l_given && l < 1)) {
        throw ArgumentError("alexander needs --n >= 1 (and --l >= 1 when given)");
    }
    chebalex::LaurentPoly delta = l_given ? chebalex::torus_alexander({n, l})
                                          : chebalex::torus_n2(n);
    std::cout << format_laurent(delta, format, n, l_given ? l : 2) << "\n";
    return kExitOk;
}

void print_report_text(const chebalex::VerificationReport& report) {
    std::cout << report.identity << ": " << (report.passed() ? "PASS" : "FAIL");
    std::cout << " (";
    for (std::size_t i = 0; i < report.ranges.size(); ++i) {
        if (i > 0) std::cout << ", ";
        std::cout << report.ranges[i].name << "=" << report.ranges[i].lo << ".."
                  << report.ranges[i].hi;
    }
    char elapsed[32];
    std::snprintf(elapsed, sizeof elapsed, "%.3f", report.elapsed_seconds);
    std::cout << "; " << elapsed << " s)\n";

    constexpr std::size_t kMaxPrinted = 20;
    for (std::size_t i = 0; i < report.failures.size() && i < kMaxPrinted; ++i) {
        const auto& f = report.failures[i];
        std::cout << "  mismatch at";
        for (const auto& [name, value] : f.params) std::cout << " " << name << "=" << value;
        std::cout << ":\n    lhs = " << f.lhs << "\n    rhs = " << f.rhs << "\n";
    }
    if (report.failures.size() > kMaxPrinted) {
        std::cout << "  ... " << (report.failures.size() - kMaxPrinted) << " more failures\n";
    }
}

int run_verify(const std::string& suite, int k_max, int h_max, int n_max,
               const std::string& format, bool seed_check) {
    if (k_max < 1 || h_max < 1 || n_max < 0) {
        throw ArgumentError("verify needs --k-max >= 1, --h-max >= 1, --n-max >= 0");
    }
    if (format != "text" && format != "json") {
        throw ArgumentError("verify supports --format text or json");
    }

    constexpr int kTrigSamples = 1000;
    constexpr double kTrigTolerance = 1e-9;

    // (k, h) pairs whose recurrence seeds each suite exercises.
    auto seed_pairs_for = [&](const std::string& s) {
        std::vector<std::pair<int, int>> pairs;
        auto full_grid = s == "recurrence-vs-closed" || s == "equidistance" || s == "trig";
        for (int h = 1; h <= h_max; ++h) {
            if (full_grid) {
                for (int k = 1; k <= k_max; ++k) pairs.emplace_back(k, h);
            } else if (s == "connection") {
                pairs.emplace_back(1, h);
                pairs.emplace_back(2, h);
            } else if (s == "bridge-t1h") {
                pairs.emplace_back(1, h);
            } else if (s == "bridge-t2h") {
                pairs.emplace_back(2, h);
            }
        }
        return pairs;
    };

    std::vector<std::string> suites;
    if (suite == "all") {
        suites = {"recurrence-vs-closed", "equidistance", "connection",
                  "skein",                "bridge-t1h",   "bridge-t2h", "trig"};
    } else {
        suites = {suite};
    }

    if (seed_check) {
        for (const auto& s : suites) {
            for (auto [k, h] : seed_pairs_for(s)) {
                chebalex::SeedPair seeds = chebalex::seed_pair(k, h);
                std::cout << "seed(k=" << k << ",h=" << h << "): A = "
                          << seeds.constant_term.str() << ", B = "
                          << seeds.linear_coefficient.str() << "\n";
            }
        }
    }

    std::vector<chebalex::VerificationReport> reports;
    for (const auto& s : suites) {
        if (s == "recurrence-vs-closed") {
            reports.push_back(chebalex::triple_equivalence_scan(k_max, h_max, n_max));
        } else if (s == "equidistance") {
            reports.push_back(chebalex::equidistance_scan(k_max, h_max, n_max));
        } else if (s == "connection") {
            reports.push_back(chebalex::connection_scan(h_max, n_max));
        } else if (s == "skein") {
            if (n_max < 3) throw ArgumentError("skein suite needs --n-max >= 3");
            reports.push_back(chebalex::skein_scan(n_max));
        } else if (s == "bridge-t1h") {
            reports.push_back(chebalex::bridge_t1h_scan(n_max, h_max));
        } else if (s == "bridge-t2h") {
            reports.push_back(chebalex::bridge_t2h_scan(n_max, h_max));
        } else if (s == "trig") {
            reports.push_back(
                chebalex::trig_scan(k_max, h_max, n_max, kTrigSamples, kTrigTolerance));
        } else {
            throw ArgumentError("unknown suite '" + s + "'");
        }
    }

    bool all_passed = true;
    if (format == "json") {
        nlohmann::json out = nlohmann::json::array();
        for (const auto& r : reports) {
            out.push_back(chebalex::to_json(r));
            all_passed = all_passed && r.passed();
        }
        std::cout << out.dump(2) << "\n";
    } else {
        for (const auto& r : reports) {
            print_report_text(r);
            all_passed = all_passed && r.passed();
        }
    }
    return all_passed ? kExitOk : kExitVerificationFailure;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Generalized equidistant Chebyshev polynomials and Alexander torus invariants"};
    app.set_help_flag("--help", "Print help and exit");
    app.require_subcommand(1);

    const std::string format_help = "Output format: text, json, csv or latex (default text)";

    auto* gen = app.add_subcommand("gen", "Print one generalized Chebyshev polynomial T^(k,h)_n");
    int gen_k = 1, gen_h = 1, gen_n = 0;
    std::string gen_format = "text";
    gen->add_option("--k", gen_k, "Kind (default 1)");
    gen->add_option("--h", gen_h, "Hyperkind (default 1)");
    gen->add_option("--n", gen_n, "Degree index")->required();
    gen->add_option("--format", gen_format, format_help);

    auto* table = app.add_subcommand("table", "Print a block of polynomials over (k, h, n) ranges");
    std::string table_k = "1", table_h = "1";
    int table_n_max = -1;
    std::string table_format = "text";
    table->add_option("--k", table_k, "Kind or kind range, e.g. 3 or 1..5 (default 1)");
    table->add_option("--h", table_h, "Hyperkind or hyperkind range (default 1)");
    table->add_option("--n-max", table_n_max, "Largest degree index")->required();
    table->add_option("--format", table_format, format_help);

    auto* alex = app.add_subcommand("alexander", "Print the Alexander invariant of a torus knot/link");
    int alex_n = 0, alex_l = 0;
    std::string alex_format = "text";
    alex->add_option("--n", alex_n, "First torus parameter")->required();
    auto* l_opt = alex->add_option("--l", alex_l, "Second torus parameter (default 2 with knot/link dispatch)");
    alex->add_option("--format", alex_format, format_help);

    auto* verify = app.add_subcommand("verify", "Run identity verification suites");
    std::string verify_suite;
    int verify_k_max = 10, verify_h_max = 10, verify_n_max = 50;
    std::string verify_format = "text";
    bool verify_seed_check = false;
    verify->add_option("--suite", verify_suite,
                       "One of: recurrence-vs-closed, equidistance, connection, skein, "
                       "bridge-t1h, bridge-t2h, trig, all")
        ->required();
    verify->add_option("--k-max", verify_k_max, "Largest kind to scan (default 10)");
    verify->add_option("--h-max", verify_h_max, "Largest hyperkind to scan (default 10)");
    verify->add_option("--n-max", verify_n_max, "Largest degree index to scan (default 50)");
    verify->add_option("--format", verify_format, "Report format: text or json (default text)");
    verify->add_flag("--seed-check", verify_seed_check,
                     "Print the (A, B) recurrence seeds for each scanned (k, h) before scanning");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitArgumentError;
    }

    try {
        if (gen->parsed()) return run_gen(gen_k, gen_h, gen_n, gen_format);
        if (table->parsed()) {
            return run_table(parse_range(table_k), parse_range(table_h), table_n_max, table_format);
        }
        if (alex->parsed()) return run_alexander(alex_n, alex_l, l_opt->count() > 0, alex_format);
        if (verify->parsed()) {
            return run_verify(verify_suite, verify_k_max, verify_h_max, verify_n_max,
                              verify_format, verify_seed_check);
        }
    } catch (const ArgumentError& e) {
        std::cerr << "error: " << e.what() << "\n";
        std::cerr << app.help() << "\n";
        return kExitArgumentError;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitArgumentError;
    } catch (const chebalex::IndexOutOfRange& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitArgumentError;
    } catch (const std::domain_error& e) {
        // NonCoprime, NotOdd, NotEven, DivisionByZero, NonExactDivision, AsymmetricInput
        std::cerr << "error: " << e.what() << "\n";
        return kExitDomainError;
    }
    return kExitArgumentError;
}

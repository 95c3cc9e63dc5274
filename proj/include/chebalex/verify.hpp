#pragma once

#include <chrono>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "chebalex/alexander.hpp"
#include "chebalex/bridge.hpp"
#include "chebalex/chebyshev.hpp"
#include "chebalex/render.hpp"
#include "chebalex/report.hpp"

// Range scans over the per-point checks. Each scan shares intermediate
// families across the range instead of rebuilding them per parameter point,
// which is what keeps full-range verification interactive.

namespace chebalex {

namespace detail {

class ScanTimer {
  public:
    explicit ScanTimer(VerificationReport& report)
        : report_(report), start_(std::chrono::steady_clock::now()) {}
    ~ScanTimer() {
        report_.elapsed_seconds =
            std::chrono::duration<double>(std::chrono::steady_clock::now() - start_).count();
    }

  private:
    VerificationReport& report_;
    std::chrono::steady_clock::time_point start_;
};

inline void require_scan_ranges(int k_max, int h_max, int n_max) {
    if (k_max < 1 || h_max < 1 || n_max < 0) {
        throw std::invalid_argument("scan ranges must satisfy k >= 1, h >= 1, n >= 0");
    }
}

}  // namespace detail

/// cheb_recurrence = cheb_closed_form = linear_combination_form over
/// 1 <= k <= k_max, 1 <= h <= h_max, 0 <= n <= n_max.
inline VerificationReport triple_equivalence_scan(int k_max, int h_max, int n_max) {
    detail::require_scan_ranges(k_max, h_max, n_max);
    VerificationReport report;
    detail::ScanTimer timer(report);
    report.identity = "recurrence-vs-closed";
    report.ranges = {{"k", 1, k_max}, {"h", 1, h_max}, {"n", 0, n_max}};
    for (int h = 1; h <= h_max; ++h) {
        const auto first = cheb_family(1, h, n_max);
        const auto second = cheb_family(2, h, n_max);
        for (int k = 1; k <= k_max; ++k) {
            const auto recurrence = cheb_family(k, h, n_max);
            const EquidistantCoeffs c = equidistant_coefficients(k, h);
            for (int n = 0; n <= n_max; ++n) {
                Polynomial lower = n >= 2 ? second[n - 2] : second_kind_basis(h, n - 2);
                Polynomial closed = second[n] * c.alpha + lower * c.beta;
                Polynomial linear = second[n] * Rational(k - 1) - first[n] * Rational(k - 2);
                if (closed != recurrence[n]) {
                    report.failures.push_back(
                        {{{"k", k}, {"h", h}, {"n", n}}, to_text(recurrence[n]), to_text(closed)});
                }
                if (linear != recurrence[n]) {
                    report.failures.push_back(
                        {{{"k", k}, {"h", h}, {"n", n}}, to_text(recurrence[n]), to_text(linear)});
                }
            }
        }
    }
    return report;
}

/// T^{(k+1,h)}_n - T^{(k,h)}_n is the same polynomial for every k.
inline VerificationReport equidistance_scan(int k_max, int h_max, int n_max) {
    detail::require_scan_ranges(k_max, h_max, n_max);
    VerificationReport report;
    detail::ScanTimer timer(report);
    report.identity = "equidistance";
    report.ranges = {{"k", 1, k_max}, {"h", 1, h_max}, {"n", 0, n_max}};
    for (int h = 1; h <= h_max; ++h) {
        std::vector<std::vector<Polynomial>> families;
        families.reserve(static_cast<std::size_t>(k_max) + 1);
        for (int k = 1; k <= k_max + 1; ++k) families.push_back(cheb_family(k, h, n_max));
        for (int n = 0; n <= n_max; ++n) {
            const Polynomial reference = families[1][n] - families[0][n];
            for (int k = 2; k <= k_max; ++k) {
                Polynomial delta = families[k][n] - families[k - 1][n];
                if (delta != reference) {
                    report.failures.push_back(
                        {{{"k", k}, {"h", h}, {"n", n}}, to_text(delta), to_text(reference)});
                }
            }
        }
    }
    return report;
}

/// 2 T^{(1,h)}_n = h (V^{(h)}_n - V^{(h)}_{n-2}) over the full range.
inline VerificationReport connection_scan(int h_max, int n_max) {
    detail::require_scan_ranges(1, h_max, n_max);
    VerificationReport report;
    detail::ScanTimer timer(report);
    report.identity = "connection";
    report.ranges = {{"h", 1, h_max}, {"n", 0, n_max}};
    for (int h = 1; h <= h_max; ++h) {
        const auto first = cheb_family(1, h, n_max);
        const auto basis = second_kind_family(h, n_max);
        for (int n = 0; n <= n_max; ++n) {
            Polynomial lhs = first[n] * Rational(2);
            Polynomial lower = n >= 2 ? basis[n - 2] : second_kind_basis(h, n - 2);
            Polynomial rhs = (basis[n] - lower) * Rational(h);
            if (lhs != rhs) {
                report.failures.push_back({{{"h", h}, {"n", n}}, to_text(lhs), to_text(rhs)});
            }
        }
    }
    return report;
}

/// Delta_{n,2} - Delta_{n-2,2} = (u - u^{-1}) Delta_{n-1,2} for 3 <= n <= n_max.
inline VerificationReport skein_scan(int n_max) {
    if (n_max < 3) throw std::invalid_argument("skein tower scan needs n_max >= 3");
    VerificationReport report;
    detail::ScanTimer timer(report);
    report.identity = "skein";
    report.ranges = {{"n", 3, n_max}};
    const LaurentPoly smoothing_factor = detail::symmetric_binomial(1, -1);
    std::vector<LaurentPoly> tower;
    tower.reserve(static_cast<std::size_t>(n_max) + 1);
    tower.push_back(LaurentPoly::zero());  // unused slot for n = 0
    for (int n = 1; n <= n_max; ++n) tower.push_back(torus_n2(n));
    for (int n = 3; n <= n_max; ++n) {
        LaurentPoly lhs = tower[n] - tower[n - 2];
        LaurentPoly rhs = smoothing_factor * tower[n - 1];
        if (lhs != rhs) {
            report.failures.push_back({{{"n", n}}, to_text(lhs), to_text(rhs)});
        }
    }
    return report;
}

/// Knot invariants are fixed by u -> 1/u, link invariants change sign.
inline VerificationReport palindromy_scan(int n_max) {
    detail::require_scan_ranges(1, 1, n_max);
    VerificationReport report;
    detail::ScanTimer timer(report);
    report.identity = "palindromy";
    report.ranges = {{"n", 1, n_max}};
    for (int n = 1; n <= n_max; ++n) {
        VerificationReport point = palindromy_check(n);
        for (auto& f : point.failures) report.failures.push_back(std::move(f));
    }
    return report;
}

/// Eq-style bridge check for the first kind, with the h-invariance of the
/// quotient asserted across the scanned hyperkinds. Even n are recorded as
/// informational data (both sides rendered) without asserting equality.
inline VerificationReport bridge_t1h_scan(int n_max, int h_max) {
    detail::require_scan_ranges(1, h_max, n_max);
    VerificationReport report;
    detail::ScanTimer timer(report);
    report.identity = "bridge-t1h";
    report.ranges = {{"n", 1, n_max}, {"h", 1, h_max}};

    std::vector<LaurentPoly> knots(static_cast<std::size_t>(n_max) + 1);
    for (int n = 1; n <= n_max; n += 2) knots[n] = torus_knot_n2(n);

    std::vector<LaurentPoly> quotient_reference(static_cast<std::size_t>(n_max) + 1);
    for (int h = 1; h <= h_max; ++h) {
        const auto family = cheb_family(1, h, n_max);
        const LaurentPoly x_image = detail::substituted_x(h);
        for (int n = 1; n <= n_max; ++n) {
            if (n % 2 == 0) {
                if (h == 1) {
                    report.informational.push_back({{{"n", n}, {"h", h}},
                                                    to_text(substitute_x(family[n], {h})),
                                                    to_text(x_image * torus_link_n2(n))});
                }
                continue;
            }
            LaurentPoly lhs = substitute_x(family[n], {h});
            LaurentPoly rhs = x_image * knots[n];
            if (lhs != rhs) {
                report.failures.push_back({{{"n", n}, {"h", h}}, to_text(lhs), to_text(rhs)});
            }
            LaurentPoly quotient = div_exact(lhs, x_image);
            if (h == 1) {
                quotient_reference[n] = quotient;
            } else if (quotient != quotient_reference[n]) {
                report.failures.push_back(
                    {{{"n", n}, {"h", h}}, to_text(quotient), to_text(quotient_reference[n])});
            }
        }
    }
    return report;
}

/// Bridge check for the second kind; the right side does not depend on h.
inline VerificationReport bridge_t2h_scan(int n_max, int h_max) {
    detail::require_scan_ranges(1, h_max, n_max);
    VerificationReport report;
    detail::ScanTimer timer(report);
    report.identity = "bridge-t2h";
    report.ranges = {{"n", 1, n_max}, {"h", 1, h_max}};

    std::vector<LaurentPoly> rhs_by_n(static_cast<std::size_t>(n_max) + 1);
    const LaurentPoly crossing_factor = detail::symmetric_binomial(1, -1);
    for (int n = 1; n <= n_max; n += 2) {
        rhs_by_n[n] =
            detail::symmetric_binomial(1, 1) * div_exact(torus_link_n2(n + 1), crossing_factor);
    }

    for (int h = 1; h <= h_max; ++h) {
        const auto family = cheb_family(2, h, n_max);
        for (int n = 1; n <= n_max; n += 2) {
            LaurentPoly lhs = substitute_x(family[n], {h});
            if (lhs != rhs_by_n[n]) {
                report.failures.push_back(
                    {{{"n", n}, {"h", h}}, to_text(lhs), to_text(rhs_by_n[n])});
            }
        }
    }
    return report;
}

/// Round trip through the Alexander side: the rebuilt polynomial must match
/// the recurrence for every odd n and every scanned hyperkind.
inline VerificationReport inverse_recipe_scan(int n_max, int h_max) {
    detail::require_scan_ranges(1, h_max, n_max);
    VerificationReport report;
    detail::ScanTimer timer(report);
    report.identity = "inverse-recipe";
    report.ranges = {{"n", 1, n_max}, {"h", 1, h_max}};
    for (int h = 1; h <= h_max; ++h) {
        const auto family = cheb_family(1, h, n_max);
        for (int n = 1; n <= n_max; n += 2) {
            Polynomial rebuilt = chebyshev_from_alexander(n, h);
            if (rebuilt != family[n]) {
                report.failures.push_back(
                    {{{"n", n}, {"h", h}}, to_text(rebuilt), to_text(family[n])});
            }
        }
    }
    return report;
}

/// Maximum trig_crosscheck deviation over the range must stay below tol.
inline VerificationReport trig_scan(int k_max, int h_max, int n_max, int samples, double tol) {
    detail::require_scan_ranges(k_max, h_max, n_max);
    VerificationReport report;
    detail::ScanTimer timer(report);
    report.identity = "trig";
    report.ranges = {{"k", 1, k_max}, {"h", 1, h_max}, {"n", 1, n_max}};
    for (int k = 1; k <= k_max; ++k) {
        for (int h = 1; h <= h_max; ++h) {
            for (int n = 1; n <= n_max; ++n) {
                double dev = trig_crosscheck({k, h, n}, samples);
                if (!(dev < tol)) {
                    std::ostringstream lhs, rhs;
                    lhs << "max deviation " << dev;
                    rhs << "tolerance " << tol;
                    report.failures.push_back({{{"k", k}, {"h", h}, {"n", n}}, lhs.str(), rhs.str()});
                }
            }
        }
    }
    return report;
}

}  // namespace chebalex

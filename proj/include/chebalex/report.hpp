#pragma once

#include <string>
#include <utility>
#include <vector>

namespace chebalex {

struct ParamRange {
    std::string name;
    long lo = 0;
    long hi = 0;
};

/// One failing parameter point, with both sides of the identity rendered.
struct CheckFailure {
    std::vector<std::pair<std::string, long>> params;
    std::string lhs;
    std::string rhs;
};

/// Outcome of checking one identity over a parameter range. A report passes
/// exactly when it has no failures; informational entries carry recorded
/// data (not assertions) and never affect the outcome.
struct VerificationReport {
    std::string identity;
    std::vector<ParamRange> ranges;
    std::vector<CheckFailure> failures;
    std::vector<CheckFailure> informational;
    double elapsed_seconds = 0.0;

    bool passed() const { return failures.empty(); }
};

}  // namespace chebalex

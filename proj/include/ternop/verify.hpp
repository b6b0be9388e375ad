#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "ternop/json_io.hpp"

namespace ternop {

struct VerifyOptions {
    /// Upper bound for n-ranged checks; each suite has its own default.
    std::optional<std::size_t> max_n;
    std::uint64_t seed = 1;
    /// Random sample count override.
    std::optional<std::size_t> samples;
    /// Truncation degree override for the symmetric-function suites.
    std::optional<int> degree;
    /// Record wall-clock durations in the report (makes it nondeterministic).
    bool timing = false;
};

struct CheckResult {
    std::string suite;
    std::string name;
    bool passed = false;
    /// Failure witness, or supporting data worth showing on success.
    Json details;
};

struct VerificationReport {
    std::string suite;
    Json parameters;
    std::vector<CheckResult> checks;
    std::optional<double> seconds;

    bool passed() const;
    std::size_t failures() const;
    Json to_json() const;
    std::string to_text() const;
};

/// Suite names accepted by run_suite, "all" last.
const std::vector<std::string> &suite_names();

/// Runs a suite; "all" runs every suite in order. Throws std::invalid_argument
/// for an unknown name. Exceptions inside a check are recorded as failures,
/// except ResourceLimitError, which propagates.
VerificationReport run_suite(const std::string &suite, const VerifyOptions &options);

} // namespace ternop

#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace qgordon {

/// One failing grid cell, self-contained: the parameters plus both sides in
/// canonical text and as (exponent, decimal coefficient) pairs so the failure
/// can be reproduced from the report alone.
struct Counterexample {
    std::string params;
    std::string lhs;
    std::string rhs;
    std::vector<std::pair<std::int64_t, std::string>> lhs_terms;
    std::vector<std::pair<std::int64_t, std::string>> rhs_terms;
};

/// Exponent window [lo, hi) on which a truncated-series identity was compared.
struct SeriesWindow {
    std::int64_t lo = 0;
    std::int64_t hi = 0;
};

/// Outcome of one identity check over a parameter grid. status is "fail"
/// exactly when counterexamples is nonempty.
struct VerificationReport {
    std::string identity_id;  // e.g. "eq-3.19"
    std::string grid;         // e.g. "nu=2; 0<=M<=L<=10; 0<=s,b<=2"
    bool pass = true;
    std::vector<Counterexample> counterexamples;
    std::int64_t elapsed_ms = 0;
    std::optional<SeriesWindow> window;
    std::string note;  // optional free-form remark (weak windows, skipped cells)

    std::string to_json_line() const;
    static VerificationReport from_json_line(const std::string& line);
    /// Fixed-width single line for the text summary table.
    std::string to_text_row() const;
};

}  // namespace qgordon

#pragma once

#include <chrono>
#include <string>

#include "qgordon/laurent_poly.hpp"
#include "qgordon/rational_q.hpp"
#include "qgordon/report.hpp"

namespace qgordon::detail {

/// Collects exact-equality checks over a grid into one VerificationReport.
class GridChecker {
public:
    GridChecker(std::string identity_id, std::string grid)
        : start_(std::chrono::steady_clock::now()) {
        report_.identity_id = std::move(identity_id);
        report_.grid = std::move(grid);
    }

    void check(const std::string& params, const LaurentPoly& lhs, const LaurentPoly& rhs) {
        if (lhs == rhs) return;
        Counterexample cx;
        cx.params = params;
        cx.lhs = lhs.to_string();
        cx.rhs = rhs.to_string();
        cx.lhs_terms = lhs.term_list();
        cx.rhs_terms = rhs.term_list();
        report_.counterexamples.push_back(std::move(cx));
        report_.pass = false;
    }

    void check(const std::string& params, const RationalQ& lhs, const RationalQ& rhs) {
        if (lhs == rhs) return;
        Counterexample cx;
        cx.params = params;
        cx.lhs = lhs.to_string();
        cx.rhs = rhs.to_string();
        report_.counterexamples.push_back(std::move(cx));
        report_.pass = false;
    }

    void check(const std::string& params, const mpz_class& lhs, const mpz_class& rhs) {
        if (lhs == rhs) return;
        Counterexample cx;
        cx.params = params;
        cx.lhs = lhs.get_str();
        cx.rhs = rhs.get_str();
        report_.counterexamples.push_back(std::move(cx));
        report_.pass = false;
    }

    void fail(const std::string& params, std::string lhs, std::string rhs) {
        Counterexample cx;
        cx.params = params;
        cx.lhs = std::move(lhs);
        cx.rhs = std::move(rhs);
        report_.counterexamples.push_back(std::move(cx));
        report_.pass = false;
    }

    void set_window(std::int64_t lo, std::int64_t hi) { report_.window = SeriesWindow{lo, hi}; }
    void set_note(std::string note) { report_.note = std::move(note); }
    void append_note(const std::string& note) {
        if (!report_.note.empty()) report_.note += "; ";
        report_.note += note;
    }

    VerificationReport finish() {
        report_.elapsed_ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                                 std::chrono::steady_clock::now() - start_)
                                 .count();
        return report_;
    }

private:
    VerificationReport report_;
    std::chrono::steady_clock::time_point start_;
};

}  // namespace qgordon::detail

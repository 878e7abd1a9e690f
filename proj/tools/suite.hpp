#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "qgordon/report.hpp"

namespace qgordon::cli {

/// Grid bounds for the verification families. Defaults keep the full `verify
/// all` run under five minutes on one core.
struct SuiteOptions {
    std::int64_t rr_L_max = 30;
    std::int64_t gis_m_max = 10;
    std::int64_t splitting_L_max = 12;
    std::int64_t paths_L_max = 16;
    std::vector<int> nus = {1, 2};
    std::int64_t ag_L_max = 10;
    std::vector<std::int64_t> ag_M_values = {0, 1, 2, 5};
    std::int64_t conn_M_max = 8;
    bool include_nu3 = false;
    std::int64_t nu3_L_max = 8;
    std::vector<int> appendix_nus = {2, 3};
    std::int64_t appendix_L_max = 8;
    std::vector<std::int64_t> appendix_M_values = {0, 2};
    std::int64_t santos_L_max = 16;
    std::int64_t santos_m_max = 6;
    std::int64_t santos_M_lo = -6;
    std::int64_t santos_M_hi = 8;
    std::int64_t cutoff = 50;
    std::int64_t series_m_max = 6;
    std::int64_t series_M_max = 6;
    std::int64_t variant_M_max = 4;
    std::int64_t stab_L_max = 20;
};

/// One independently runnable verification producing its reports.
struct SuiteTask {
    std::string name;
    std::function<std::vector<VerificationReport>()> run;
};

/// Tasks for one family: rr, paths, ag, gis, santos, series, or all.
/// Throws std::invalid_argument for unknown family names.
std::vector<SuiteTask> build_suite(const std::string& family, const SuiteOptions& options);

/// Runs tasks (jobs > 1 shards across threads) and hands reports to the sink
/// in deterministic task order regardless of completion order.
void run_tasks(const std::vector<SuiteTask>& tasks, int jobs,
               const std::function<void(const VerificationReport&)>& sink);

}  // namespace qgordon::cli

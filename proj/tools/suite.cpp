#include "suite.hpp"

#include <future>
#include <semaphore>
#include <stdexcept>

#include "qgordon/agcore.hpp"
#include "qgordon/paths.hpp"
#include "qgordon/rrpoly.hpp"
#include "qgordon/santos.hpp"
#include "qgordon/series_checks.hpp"

namespace qgordon::cli {

namespace {

std::vector<SuiteTask> rr_tasks(const SuiteOptions& o) {
    return {
        {"rr representations", [o] { return verify_rr_representations(o.rr_L_max); }},
        {"rr recurrence", [o] { return std::vector{verify_rr_recurrence(-10, o.rr_L_max)}; }},
        {"gis finite", [o] { return verify_gis_finite(o.rr_L_max, o.gis_m_max); }},
        {"splitting", [o] { return std::vector{verify_splitting_grid(o.splitting_L_max)}; }},
        {"fibonacci", [o] { return fibonacci_checks(o.rr_L_max); }},
    };
}

std::vector<SuiteTask> paths_tasks(const SuiteOptions& o) {
    return {
        {"path lemma", [o] { return verify_path_lemma(o.paths_L_max); }},
        {"path decompositions", [o] { return verify_decompositions(o.paths_L_max); }},
    };
}

std::vector<SuiteTask> ag_tasks(const SuiteOptions& o) {
    std::vector<SuiteTask> tasks;
    for (int nu : o.nus) {
        const std::string tag = " (nu=" + std::to_string(nu) + ")";
        tasks.push_back({"ag polynomial" + tag,
                         [o, nu] { return std::vector{verify_ag_polynomial(nu, o.ag_L_max)}; }});
        tasks.push_back({"ag recurrences" + tag,
                         [o, nu] { return verify_recurrences(nu, o.ag_L_max, o.ag_M_values); }});
        tasks.push_back({"ag connection" + tag,
                         [o, nu] { return verify_connection_laws(nu, o.conn_M_max); }});
        tasks.push_back({"ag main theorem" + tag,
                         [o, nu] { return verify_main_theorem(nu, o.ag_L_max); }});
    }
    if (o.include_nu3) {
        tasks.push_back({"ag polynomial (nu=3)",
                         [o] { return std::vector{verify_ag_polynomial(3, o.nu3_L_max)}; }});
    }
    tasks.push_back({"appendix audit", [o] {
                         return verify_appendix(o.appendix_nus, o.appendix_L_max,
                                                o.appendix_M_values);
                     }});
    return tasks;
}

std::vector<SuiteTask> gis_tasks(const SuiteOptions& o) {
    return {
        {"gis series",
         [o] { return gis_series_check(o.series_m_max, o.series_M_max, o.cutoff); }},
    };
}

std::vector<SuiteTask> santos_tasks(const SuiteOptions& o) {
    return {
        {"santos p1", [o] { return std::vector{verify_p1(o.santos_L_max, o.santos_m_max)}; }},
        {"santos p2", [o] {
             return std::vector{verify_p2(o.santos_L_max, o.santos_M_lo, o.santos_M_hi)};
         }},
    };
}

std::vector<SuiteTask> series_tasks(const SuiteOptions& o) {
    std::vector<SuiteTask> tasks;
    tasks.push_back({"rr series (a=0)", [o] { return std::vector{rr_series_check(0, o.cutoff)}; }});
    tasks.push_back({"rr series (a=1)", [o] { return std::vector{rr_series_check(1, o.cutoff)}; }});
    for (int nu : o.nus) {
        tasks.push_back({"ag series (nu=" + std::to_string(nu) + ")",
                         [o, nu] { return std::vector{ag_series_check(nu, o.cutoff)}; }});
        for (int s = 1; s <= nu + 1; ++s) {
            tasks.push_back({"ag variant series (nu=" + std::to_string(nu) +
                                 ", s=" + std::to_string(s) + ")",
                             [o, nu, s] {
                                 return ag_variant_series_check(nu, s, o.variant_M_max, o.cutoff,
                                                                o.stab_L_max);
                             }});
        }
    }
    return tasks;
}

void append(std::vector<SuiteTask>& out, std::vector<SuiteTask> tasks) {
    for (auto& t : tasks) out.push_back(std::move(t));
}

}  // namespace

std::vector<SuiteTask> build_suite(const std::string& family, const SuiteOptions& options) {
    std::vector<SuiteTask> tasks;
    if (family == "rr") return rr_tasks(options);
    if (family == "paths") return paths_tasks(options);
    if (family == "ag") return ag_tasks(options);
    if (family == "gis") return gis_tasks(options);
    if (family == "santos") return santos_tasks(options);
    if (family == "series") return series_tasks(options);
    if (family == "all") {
        append(tasks, rr_tasks(options));
        append(tasks, paths_tasks(options));
        append(tasks, ag_tasks(options));
        append(tasks, gis_tasks(options));
        append(tasks, santos_tasks(options));
        append(tasks, series_tasks(options));
        return tasks;
    }
    throw std::invalid_argument("unknown verify family: " + family);
}

void run_tasks(const std::vector<SuiteTask>& tasks, int jobs,
               const std::function<void(const VerificationReport&)>& sink) {
    if (jobs <= 1) {
        for (const SuiteTask& task : tasks) {
            for (const VerificationReport& report : task.run()) sink(report);
        }
        return;
    }
    std::counting_semaphore<> gate(jobs);
    std::vector<std::future<std::vector<VerificationReport>>> futures;
    futures.reserve(tasks.size());
    for (const SuiteTask& task : tasks) {
        futures.push_back(std::async(std::launch::async, [&gate, &task] {
            gate.acquire();
            auto reports = task.run();
            gate.release();
            return reports;
        }));
    }
    for (auto& future : futures) {
        for (const VerificationReport& report : future.get()) sink(report);
    }
}

}  // namespace qgordon::cli

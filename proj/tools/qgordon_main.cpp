#include <CLI11.hpp>

#include <cstdint>
#include <fstream>
#include <iostream>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "qgordon/agcore.hpp"
#include "qgordon/paths.hpp"
#include "qgordon/qalgebra.hpp"
#include "qgordon/rrpoly.hpp"
#include "qgordon/santos.hpp"
#include "suite.hpp"

namespace {

using namespace qgordon;

struct RangeSpec {
    std::int64_t lo = 0;
    std::int64_t hi = 0;  // exclusive
};

struct UsageError {
    std::string message;
};

// "a..b" means the half-open range [a, b).
RangeSpec parse_range(const std::string& text) {
    const auto pos = text.find("..");
    if (pos == std::string::npos) throw UsageError{"--range: expected a..b"};
    RangeSpec r;
    try {
        r.lo = std::stoll(text.substr(0, pos));
        r.hi = std::stoll(text.substr(pos + 2));
    } catch (const std::exception&) {
        throw UsageError{"--range: expected integer endpoints in a..b"};
    }
    if (r.hi < r.lo) throw UsageError{"--range: range end below start"};
    return r;
}

std::string json_escape(const std::string& s) {
    std::string out;
    for (char c : s) {
        if (c == '"' || c == '\\') out.push_back('\\');
        out.push_back(c);
    }
    return out;
}

std::string terms_json(const std::vector<std::pair<std::int64_t, std::string>>& terms) {
    std::ostringstream out;
    out << "[";
    for (std::size_t i = 0; i < terms.size(); ++i) {
        if (i) out << ",";
        out << "[" << terms[i].first << ",\"" << terms[i].second << "\"]";
    }
    out << "]";
    return out.str();
}

void emit_table_line(const std::string& family, const std::string& label, std::int64_t index,
                     const LaurentPoly& value, bool json) {
    if (json) {
        std::cout << "{\"family\":\"" << family << "\",\"index\":" << index << ",\"value\":\""
                  << json_escape(value.to_string()) << "\",\"terms\":" << terms_json(value.term_list())
                  << "}\n";
    } else {
        std::cout << label << " = " << value.to_string() << "\n";
    }
}

int run_verify(const std::string& family, const cli::SuiteOptions& options, int jobs,
               const std::string& format) {
    const auto tasks = cli::build_suite(family, options);
    std::int64_t total = 0, failed = 0;
    cli::run_tasks(tasks, jobs, [&](const VerificationReport& report) {
        ++total;
        if (!report.pass) ++failed;
        if (format == "json") {
            std::cout << report.to_json_line() << "\n";
        } else {
            std::cout << report.to_text_row() << "\n";
        }
    });
    if (format != "json") {
        std::cout << total << " identities checked, " << (total - failed) << " passed, " << failed
                  << " failed\n";
    }
    return failed == 0 ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"qgordon: exact verification of Rogers-Ramanujan and Andrews-Gordon "
                 "polynomial and series identities"};
    app.require_subcommand(1);

    // -- verify ------------------------------------------------------------
    auto* verify = app.add_subcommand("verify", "run a verification family");
    std::string family, config_path;
    verify->add_option("family", family, "rr | paths | ag | gis | santos | series | all")
        ->required()
        ->check(CLI::IsMember({"rr", "paths", "ag", "gis", "santos", "series", "all"}));
    std::int64_t L_max = -1, M_max = -1, cutoff = 50;
    int nu = 0, jobs = 1;
    bool nu3 = false;
    std::string format = "text";
    auto* opt_L = verify->add_option("--L-max", L_max, "override the family's primary L bound");
    auto* opt_M = verify->add_option("--M-max", M_max, "override the family's primary M bound");
    auto* opt_nu = verify->add_option("--nu", nu, "restrict multisum families to one nu");
    auto* opt_cutoff =
        verify->add_option("--cutoff", cutoff, "series truncation order (default 50)");
    auto* opt_jobs =
        verify->add_option("--jobs", jobs, "shard grid families across N worker threads");
    auto* opt_nu3 =
        verify->add_flag("--nu3", nu3, "also run the nu=3 polynomial identity slice (L<=8)");
    auto* opt_format = verify->add_option("--format", format, "text | json")
                           ->check(CLI::IsMember({"text", "json"}));
    verify->add_option("--config", config_path,
                       "key=value file mirroring the long flags; flags win");

    // -- table -------------------------------------------------------------
    auto* table = app.add_subcommand("table", "print a family of polynomials");
    std::string table_name;
    std::string range_text;
    std::int64_t table_M = 0;
    int table_nu = 1, table_s = 0, table_b = 0;
    bool table_json = false;
    table->add_option("name", table_name, "e | d | ftilde | bigf | B | S | T")->required();
    table->add_option("--range", range_text, "half-open index range a..b")->required();
    table->add_option("--nu", table_nu, "nu for ftilde/bigf/B (default 1)");
    table->add_option("--s", table_s, "s index for ftilde/bigf (0-based) or B (1-based)");
    table->add_option("--b", table_b, "b index for ftilde/bigf (0-based) or B (1-based)");
    table->add_option("--M", table_M, "shift parameter for bigf");
    table->add_flag("--json", table_json, "emit JSON lines instead of text");

    // -- path --------------------------------------------------------------
    auto* path = app.add_subcommand("path", "draw an admissible lattice path");
    std::int64_t path_L = 0, path_M = 0;
    std::vector<std::int64_t> path_peaks;
    bool svg = false;
    path->add_option("--L", path_L, "interval length; the path runs on [-M, L-M]")->required();
    path->add_option("--M", path_M, "left shift (default 0)");
    path->add_option("--peaks", path_peaks, "comma-separated peak coordinates")->delimiter(',');
    path->add_flag("--svg", svg,
                   "emit SVG instead of ASCII; fixed 1-unit grid, vertex j at "
                   "x = 10 + 20*(j - i), y = 30 - 20*sigma_j");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e);  // --help / --version
        app.exit(e);
        return 2;
    }

    try {
        if (*verify) {
            if (!config_path.empty()) {
                std::ifstream file(config_path);
                if (!file) {
                    std::cerr << "cannot open config file: " << config_path << "\n";
                    return 2;
                }
                std::string line;
                int lineno = 0;
                while (std::getline(file, line)) {
                    ++lineno;
                    if (line.empty() || line[0] == '#') continue;
                    const auto eq = line.find('=');
                    if (eq == std::string::npos) {
                        std::cerr << "config line " << lineno << ": expected key=value\n";
                        return 2;
                    }
                    const std::string key = line.substr(0, eq), value = line.substr(eq + 1);
                    const auto set_int = [&](CLI::Option* opt, auto& var) {
                        if (opt->count() == 0) var = std::stoll(value);
                    };
                    try {
                        if (key == "L-max") set_int(opt_L, L_max);
                        else if (key == "M-max") set_int(opt_M, M_max);
                        else if (key == "nu") set_int(opt_nu, nu);
                        else if (key == "cutoff") set_int(opt_cutoff, cutoff);
                        else if (key == "jobs") set_int(opt_jobs, jobs);
                        else if (key == "nu3") {
                            if (opt_nu3->count() == 0) nu3 = (value == "true" || value == "1");
                        } else if (key == "format") {
                            if (opt_format->count() == 0) {
                                if (value != "text" && value != "json") {
                                    std::cerr << "config: format must be text or json\n";
                                    return 2;
                                }
                                format = value;
                            }
                        } else {
                            std::cerr << "config line " << lineno << ": unknown key " << key << "\n";
                            return 2;
                        }
                    } catch (const std::exception&) {
                        std::cerr << "config line " << lineno << ": bad value for " << key << "\n";
                        return 2;
                    }
                }
            }
            cli::SuiteOptions options;
            if (nu3) options.include_nu3 = true;
            if (nu > 0) options.nus = {nu};
            options.cutoff = cutoff;
            if (L_max >= 0) {
                options.rr_L_max = L_max;
                options.splitting_L_max = std::min<std::int64_t>(L_max, 14);
                options.paths_L_max = L_max;
                options.ag_L_max = L_max;
                options.appendix_L_max = std::min<std::int64_t>(L_max, 8);
                options.santos_L_max = L_max;
                options.stab_L_max = L_max;
            }
            if (M_max >= 0) {
                options.gis_m_max = M_max;
                options.conn_M_max = M_max;
                options.santos_M_hi = M_max;
                options.series_m_max = M_max;
                options.series_M_max = M_max;
                options.variant_M_max = M_max;
            }
            return run_verify(family, options, jobs, format);
        }
        if (*table) {
            static const std::set<std::string> known = {"e", "d", "ftilde", "bigf", "B", "S", "T"};
            if (!known.count(table_name)) {
                std::cerr << "unknown table family: " << table_name << "\n";
                return 2;
            }
            const RangeSpec range = parse_range(range_text);
            for (std::int64_t k = range.lo; k < range.hi; ++k) {
                const std::string idx = std::to_string(k);
                if (table_name == "e") {
                    emit_table_line("e", "e_" + idx, k, rr_fermionic(RRKind::E, k), table_json);
                } else if (table_name == "d") {
                    emit_table_line("d", "d_" + idx, k, rr_fermionic(RRKind::D, k), table_json);
                } else if (table_name == "ftilde") {
                    emit_table_line("ftilde",
                                    "F~_{" + std::to_string(table_s) + "," + std::to_string(table_b) +
                                        "}(" + idx + ")",
                                    k, f_tilde(table_nu, table_s, table_b, k), table_json);
                } else if (table_name == "bigf") {
                    emit_table_line("bigf",
                                    "F_{" + std::to_string(table_s) + "," + std::to_string(table_b) +
                                        "}(" + idx + "," + std::to_string(table_M) + ")",
                                    k, big_f(table_nu, table_s, table_b, k, table_M), table_json);
                } else if (table_name == "B") {
                    // Only the parity-admissible L exist for the bosonic family.
                    if ((k + table_s + table_b) % 2 != 0) continue;
                    emit_table_line("B",
                                    "B_{" + std::to_string(table_s) + "," + std::to_string(table_b) +
                                        "}(" + idx + ")",
                                    k, b_bosonic(table_nu, table_s, table_b, k), table_json);
                } else if (table_name == "S") {
                    const RationalQ v = santos_S(k);
                    if (table_json) {
                        std::cout << "{\"family\":\"S\",\"index\":" << k << ",\"value\":\""
                                  << json_escape(v.to_string()) << "\"}\n";
                    } else {
                        std::cout << "S_" << k << " = " << v.to_string() << "\n";
                    }
                } else if (table_name == "T") {
                    const RationalQ v = santos_T(k);
                    if (table_json) {
                        std::cout << "{\"family\":\"T\",\"index\":" << k << ",\"value\":\""
                                  << json_escape(v.to_string()) << "\"}\n";
                    } else {
                        std::cout << "T_" << k << " = " << v.to_string() << "\n";
                    }
                }
            }
            return 0;
        }
        if (*path) {
            AdmissiblePath p = [&] {
                try {
                    return AdmissiblePath::from_peaks(-path_M, path_L - path_M, 0, 0, path_peaks);
                } catch (const std::invalid_argument& e) {
                    std::cerr << "inadmissible path: " << e.what() << "\n";
                    std::exit(2);
                }
            }();
            std::cout << (svg ? render_path_svg(p) : render_path(p));
            return 0;
        }
    } catch (const UsageError& e) {
        std::cerr << e.message << "\n";
        return 2;
    } catch (const std::domain_error& e) {
        std::cerr << "arithmetic domain error: " << e.what() << "\n";
        return 3;
    } catch (const std::invalid_argument& e) {
        std::cerr << "invalid argument: " << e.what() << "\n";
        return 3;
    }
    return 2;
}

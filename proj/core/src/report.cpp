#include "qgordon/report.hpp"

#include <json.hpp>

#include <iomanip>
#include <sstream>

namespace qgordon {

namespace {

using nlohmann::json;

json terms_to_json(const std::vector<std::pair<std::int64_t, std::string>>& terms) {
    json arr = json::array();
    for (const auto& [exp, coeff] : terms) arr.push_back(json::array({exp, coeff}));
    return arr;
}

std::vector<std::pair<std::int64_t, std::string>> terms_from_json(const json& arr) {
    std::vector<std::pair<std::int64_t, std::string>> terms;
    for (const auto& item : arr) {
        terms.emplace_back(item.at(0).get<std::int64_t>(), item.at(1).get<std::string>());
    }
    return terms;
}

}  // namespace

std::string VerificationReport::to_json_line() const {
    json j;
    j["identity"] = identity_id;
    j["grid"] = grid;
    j["status"] = pass ? "pass" : "fail";
    j["elapsed_ms"] = elapsed_ms;
    json cxs = json::array();
    for (const auto& cx : counterexamples) {
        json c;
        c["params"] = cx.params;
        c["lhs"] = cx.lhs;
        c["rhs"] = cx.rhs;
        c["lhs_terms"] = terms_to_json(cx.lhs_terms);
        c["rhs_terms"] = terms_to_json(cx.rhs_terms);
        cxs.push_back(c);
    }
    j["counterexamples"] = cxs;
    if (window) j["window"] = json{{"lo", window->lo}, {"hi", window->hi}};
    if (!note.empty()) j["note"] = note;
    return j.dump();
}

VerificationReport VerificationReport::from_json_line(const std::string& line) {
    const json j = json::parse(line);
    VerificationReport r;
    r.identity_id = j.at("identity").get<std::string>();
    r.grid = j.at("grid").get<std::string>();
    r.pass = j.at("status").get<std::string>() == "pass";
    r.elapsed_ms = j.at("elapsed_ms").get<std::int64_t>();
    for (const auto& c : j.at("counterexamples")) {
        Counterexample cx;
        cx.params = c.at("params").get<std::string>();
        cx.lhs = c.at("lhs").get<std::string>();
        cx.rhs = c.at("rhs").get<std::string>();
        cx.lhs_terms = terms_from_json(c.at("lhs_terms"));
        cx.rhs_terms = terms_from_json(c.at("rhs_terms"));
        r.counterexamples.push_back(std::move(cx));
    }
    if (j.contains("window")) {
        r.window = SeriesWindow{j.at("window").at("lo").get<std::int64_t>(),
                                j.at("window").at("hi").get<std::int64_t>()};
    }
    if (j.contains("note")) r.note = j.at("note").get<std::string>();
    return r;
}

std::string VerificationReport::to_text_row() const {
    std::ostringstream out;
    out << (pass ? "PASS " : "FAIL ") << std::left << std::setw(12) << identity_id << " "
        << std::setw(6) << (std::to_string(elapsed_ms) + "ms") << " " << grid;
    if (window) out << "  [window " << window->lo << ".." << window->hi << ")";
    if (!counterexamples.empty()) {
        out << "  (" << counterexamples.size() << " counterexample"
            << (counterexamples.size() == 1 ? "" : "s") << ", first: "
            << counterexamples.front().params << ")";
    }
    if (!note.empty()) out << "  -- " << note;
    return out.str();
}

}  // namespace qgordon

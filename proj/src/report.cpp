#include "itnlab/limits_lab.hpp"

#include <json.hpp>

namespace itnlab {

std::string regime_report_to_json(const RegimeReport& report) {
    nlohmann::ordered_json j;
    j["regime"] = report.regime;
    j["seed"] = report.seed;
    j["n_paths"] = report.n_paths;
    if (!report.note.empty()) j["note"] = report.note;
    nlohmann::ordered_json cfg;
    for (const auto& [key, value] : report.config) cfg[key] = value;
    j["config"] = cfg;
    nlohmann::ordered_json tests = nlohmann::ordered_json::array();
    for (const TestOutcome& t : report.tests) {
        nlohmann::ordered_json jt;
        jt["name"] = t.name;
        jt["t"] = t.t;
        jt["statistic"] = t.statistic;
        if (t.p_value >= 0.0) jt["p_value"] = t.p_value;
        jt["threshold"] = t.threshold;
        if (t.observed != 0.0 || t.expected != 0.0) {
            jt["observed"] = t.observed;
            jt["expected"] = t.expected;
        }
        jt["reference"] = t.reference;
        jt["pass"] = t.pass;
        tests.push_back(jt);
    }
    j["tests"] = tests;
    j["pass"] = report.pass();
    return j.dump(2);
}

} // namespace itnlab

#include "cbt/report.hpp"

#include <json.hpp>

namespace cbt::report {

std::string format_double(double v, int precision) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.*g", precision, v);
    return buf;
}

void RunReport::add_check(const std::string& name, const std::string& anchor, double v, bool ok) {
    results.push_back({name, format_double(v), 17, anchor, ok ? Status::pass : Status::fail});
}

void RunReport::add_value(const std::string& name, const std::string& anchor, double v) {
    results.push_back({name, format_double(v), 17, anchor, Status::value});
}

void RunReport::add_text(const std::string& name, const std::string& anchor, const std::string& v) {
    results.push_back({name, v, 17, anchor, Status::value});
}

bool RunReport::failed() const {
    for (const auto& r : results)
        if (r.status == Status::fail) return true;
    return false;
}

bool RunReport::has_checks() const {
    for (const auto& r : results)
        if (r.status != Status::value) return true;
    return false;
}

std::string RunReport::status_string() const {
    if (failed()) return "fail";
    return has_checks() ? "pass" : "partial";
}

std::string RunReport::to_json() const {
    nlohmann::json j;
    j["command"] = command;
    j["inputs"] = inputs;
    j["results"] = nlohmann::json::array();
    for (const auto& r : results) {
        nlohmann::json e;
        e["name"] = r.name;
        e["value"] = r.value;
        e["precision"] = r.precision;
        e["anchor"] = r.anchor;
        e["status"] = r.status == Status::pass ? "pass" : r.status == Status::fail ? "fail" : "value";
        j["results"].push_back(e);
    }
    j["status"] = status_string();
    return j.dump(2);
}

void RunReport::print(std::FILE* out) const {
    std::fprintf(out, "== %s ==\n", command.c_str());
    for (const auto& [k, v] : inputs)
        std::fprintf(out, "  input %-10s %s\n", k.c_str(), v.c_str());
    for (const auto& r : results) {
        const char* tag = r.status == Status::pass ? "PASS" : r.status == Status::fail ? "FAIL" : "    ";
        std::fprintf(out, "  [%s] %-44s %s\n", tag, r.name.c_str(), r.value.c_str());
    }
    std::fprintf(out, "status: %s\n", status_string().c_str());
}

} // namespace cbt::report

#pragma once

#include <cstdio>
#include <map>
#include <string>
#include <vector>

namespace cbt::report {

enum class Status { pass, fail, value };

struct ResultEntry {
    std::string name;
    std::string value;  // decimal string
    int precision = 17;
    std::string anchor; // stable identifier of the quantity or inequality
    Status status = Status::value;
};

// Machine-readable run record: echoed inputs plus one entry per checked or
// reported quantity.  Overall status is fail iff any check failed, pass if
// every entry with pass/fail semantics passed, partial for value-only runs.
struct RunReport {
    std::string command;
    std::map<std::string, std::string> inputs;
    std::vector<ResultEntry> results;

    void add_check(const std::string& name, const std::string& anchor, double v, bool ok);
    void add_value(const std::string& name, const std::string& anchor, double v);
    void add_text(const std::string& name, const std::string& anchor, const std::string& v);

    bool failed() const;
    bool has_checks() const;
    std::string status_string() const;

    std::string to_json() const;
    void print(std::FILE* out) const;
};

std::string format_double(double v, int precision = 17);

} // namespace cbt::report

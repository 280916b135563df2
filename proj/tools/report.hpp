#pragma once

#include "json.hpp"

#include <chrono>
#include <string>
#include <string_view>
#include <vector>

namespace bmh::cli {

using nlohmann::json;

enum class Status { pass, fail, skipped };

std::string to_string(Status s);
Status parse_status(std::string_view s);

struct CheckRecord {
    std::string name;
    Status status = Status::pass;
    json details = json::object();
    std::string witness;  // set for every failure
    double seconds = 0;

    friend bool operator==(const CheckRecord&, const CheckRecord&) = default;
};

struct Report {
    std::string version;
    json config = json::object();
    std::vector<CheckRecord> checks;

    bool passed() const;
    friend bool operator==(const Report&, const Report&) = default;
};

json to_json(const Report& r);
Report report_from_json(const json& j);

/// to_json with every "seconds" field removed; the result is deterministic for
/// a fixed configuration.
json without_timing(const Report& r);

std::string render_text(const Report& r);

/// Runs fn(record) under a timer and appends the record. An exception thrown by
/// fn turns the record into a failure whose witness is the exception message.
template <class Fn>
CheckRecord& run_check(Report& report, std::string name, Fn&& fn) {
    CheckRecord rec;
    rec.name = std::move(name);
    const auto start = std::chrono::steady_clock::now();
    try {
        fn(rec);
    } catch (const std::exception& e) {
        rec.status = Status::fail;
        rec.witness = e.what();
    }
    rec.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (rec.status == Status::fail && rec.witness.empty()) rec.witness = "(no witness recorded)";
    report.checks.push_back(std::move(rec));
    return report.checks.back();
}

}  // namespace bmh::cli

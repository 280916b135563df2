#include "report.hpp"

#include <iomanip>
#include <sstream>
#include <stdexcept>

namespace bmh::cli {

std::string to_string(Status s) {
    switch (s) {
        case Status::pass: return "pass";
        case Status::fail: return "fail";
        case Status::skipped: return "skipped";
    }
    return "?";
}

Status parse_status(std::string_view s) {
    if (s == "pass") return Status::pass;
    if (s == "fail") return Status::fail;
    if (s == "skipped") return Status::skipped;
    throw std::invalid_argument("unknown status '" + std::string(s) + "'");
}

bool Report::passed() const {
    for (const auto& c : checks)
        if (c.status == Status::fail) return false;
    return true;
}

json to_json(const Report& r) {
    json checks = json::array();
    for (const auto& c : r.checks) {
        json jc{{"name", c.name}, {"status", to_string(c.status)}, {"details", c.details}, {"seconds", c.seconds}};
        if (!c.witness.empty()) jc["witness"] = c.witness;
        checks.push_back(std::move(jc));
    }
    return {{"tool", "bmh"}, {"version", r.version}, {"config", r.config}, {"checks", checks}, {"passed", r.passed()}};
}

Report report_from_json(const json& j) {
    Report r;
    r.version = j.at("version").get<std::string>();
    r.config = j.at("config");
    for (const auto& jc : j.at("checks")) {
        CheckRecord c;
        c.name = jc.at("name").get<std::string>();
        c.status = parse_status(jc.at("status").get<std::string>());
        c.details = jc.value("details", json::object());
        c.witness = jc.value("witness", std::string());
        c.seconds = jc.value("seconds", 0.0);
        r.checks.push_back(std::move(c));
    }
    if (j.contains("passed") && j.at("passed").get<bool>() != r.passed())
        throw std::invalid_argument("report: 'passed' disagrees with the check statuses");
    return r;
}

json without_timing(const Report& r) {
    json j = to_json(r);
    for (auto& c : j["checks"]) c.erase("seconds");
    return j;
}

namespace {

void render_details(std::ostringstream& out, const json& d, const std::string& indent) {
    for (auto it = d.begin(); it != d.end(); ++it) {
        out << indent << it.key() << ": ";
        if (it->is_string())
            out << it->get<std::string>();
        else
            out << it->dump();
        out << '\n';
    }
}

}  // namespace

std::string render_text(const Report& r) {
    std::ostringstream out;
    out << "bmh " << r.version << "  " << r.config.value("command", std::string()) << '\n';
    std::size_t failed = 0, skipped = 0;
    for (const auto& c : r.checks) {
        std::string tag = to_string(c.status);
        for (auto& ch : tag) ch = static_cast<char>(std::toupper(static_cast<unsigned char>(ch)));
        out << std::left << std::setw(8) << tag << c.name << "  (" << std::fixed << std::setprecision(3) << c.seconds
            << " s)\n";
        render_details(out, c.details, "        ");
        if (!c.witness.empty()) out << "        witness: " << c.witness << '\n';
        failed += c.status == Status::fail;
        skipped += c.status == Status::skipped;
    }
    out << (r.passed() ? "all checks passed" : "FAILED") << " (" << r.checks.size() << " checks, " << failed
        << " failed, " << skipped << " skipped)\n";
    return out.str();
}

}  // namespace bmh::cli

#include "doctest.h"

#include "commands.hpp"

#include <cstdlib>
#include <filesystem>
#include <fstream>

using namespace bmh;
using namespace bmh::cli;

namespace {

RunConfig config(std::string command) {
    RunConfig c;
    c.command = std::move(command);
    return c;
}

RunConfig at(std::string command, long q, long m) {
    RunConfig c = config(std::move(command));
    c.q = q;
    c.m = m;
    return c;
}

const CheckRecord* find(const Report& r, std::string_view prefix) {
    for (const auto& c : r.checks)
        if (c.name.starts_with(prefix)) return &c;
    return nullptr;
}

bool every_failure_has_witness(const Report& r) {
    for (const auto& c : r.checks)
        if (c.status == Status::fail && c.witness.empty()) return false;
    return true;
}

std::filesystem::path temp_file(const std::string& name, const std::string& text) {
    const auto path = std::filesystem::temp_directory_path() / name;
    std::ofstream(path) << text;
    return path;
}

}  // namespace

TEST_CASE("params: symbolic run passes, q = 3 is rejected") {
    const Report r = run(config("params"));
    CHECK(r.passed());
    CHECK(find(r, "intersection-tensor-golden")->status == Status::pass);
    CHECK(find(r, "integrality-grid")->status == Status::pass);
    CHECK_THROWS_AS(run(at("params", 3, 2)), UsageError);
    CHECK_THROWS_AS(run(at("params", 4, 1)), UsageError);

    const Report p = run(at("params", 4, 2));
    CHECK(p.passed());
    const auto& d = find(p, "integrality")->details;
    CHECK(d["n"] == 255);
    CHECK(d["p"][1][1][0] == d["valencies"][1]);
}

TEST_CASE("params: a perturbed tensor entry fails with a witness") {
    RunConfig c = config("params");
    c.fault = Fault::tensor;
    const Report r = run(c);
    CHECK_FALSE(r.passed());
    const CheckRecord* g = find(r, "intersection-tensor-golden");
    CHECK(g->status == Status::fail);
    CHECK(g->witness.find("p[1][1][1]") != std::string::npos);
}

TEST_CASE("hadamard: exact family I at (4,2) gives S = (255,0,0,0,0)") {
    RunConfig c = at("hadamard", 4, 2);
    c.family = Family::I;
    c.numeric = false;
    const Report r = run(c);
    CHECK(r.passed());
    const json& s = find(r, "gram-exact")->details["S"];
    CHECK(s[0] == "255");
    for (int k = 1; k < 5; ++k) CHECK(s[k] == "0");
    CHECK(find(r, "gram-numeric") == nullptr);
}

TEST_CASE("hadamard: symbolic family II and negated w2") {
    RunConfig c = config("hadamard");
    c.family = Family::II;
    c.symbolic = true;
    CHECK(run(c).passed());

    RunConfig bad = at("hadamard", 8, 3);
    bad.family = Family::II;
    bad.fault = Fault::w2;
    const Report r = run(bad);
    CHECK_FALSE(r.passed());
    CHECK(find(r, "gram-exact")->status == Status::fail);
    CHECK(find(r, "gram-numeric")->status == Status::fail);
    CHECK(every_failure_has_witness(r));
}

TEST_CASE("hadamard: family VI only at (4,2), all four sign pairings reported") {
    RunConfig c = at("hadamard", 4, 2);
    c.family = Family::VI;
    const Report r = run(c);
    CHECK(r.passed());
    CHECK(r.checks.size() == 4);
    int coupled = 0, mixed = 0;
    for (const auto& ch : r.checks) {
        coupled += ch.name.starts_with("gram-numeric[VI");
        mixed += ch.name.starts_with("uncoupled-signs-rejected[VI");
    }
    CHECK(coupled == 2);
    CHECK(mixed == 2);

    RunConfig far = at("hadamard", 8, 2);
    far.family = Family::VI;
    CHECK_THROWS_AS(run(far), UsageError);
}

TEST_CASE("hadamard: tolerance parsing") {
    CHECK(parse_tolerance("2^-80") == Rational(1) / Rational(2).pow(80));
    CHECK(parse_tolerance("1e-30") == Rational(1) / Rational(10).pow(30));
    CHECK(parse_tolerance("2.5e-3") == Rational(1, 400));
    CHECK(parse_tolerance("3/4") == Rational(3, 4));
    CHECK(parse_tolerance("0") == Rational(0));
    CHECK_THROWS_AS(parse_tolerance("-1"), UsageError);
    CHECK_THROWS_AS(parse_tolerance("abc"), UsageError);
}

TEST_CASE("nomura: grid run passes, corrupt tensor fails with a witness") {
    RunConfig c = config("nomura");
    c.grid = true;
    const Report r = run(c);
    CHECK(r.passed());
    CHECK(r.checks.size() == 8 * 2 * 5 + 1);

    RunConfig s = config("nomura");
    s.symbolic = true;
    s.family = Family::I;
    const Report sym = run(s);
    CHECK(sym.passed());
    CHECK(sym.checks.size() == 1);

    RunConfig bad = at("nomura", 4, 2);
    bad.fault = Fault::tensor;
    const Report f = run(bad);
    CHECK_FALSE(f.passed());
    CHECK(find(f, "cijk-marginals")->status == Status::fail);
    CHECK(every_failure_has_witness(f));
}

TEST_CASE("sturm: examples and errors") {
    RunConfig p9 = config("sturm");
    p9.p9 = true;
    const Report r = run(p9);
    CHECK(r.passed());
    CHECK(r.checks[0].details["count"] == 1);

    RunConfig c = config("sturm");
    c.coeffs = {"1", "0", "-1"};
    c.lo = "-2";
    c.hi = "2";
    c.expect = 2;
    CHECK(run(c).passed());
    c.expect = 1;
    CHECK_FALSE(run(c).passed());

    RunConfig z = config("sturm");
    z.coeffs = {"0"};
    CHECK_THROWS_AS(run(z), UsageError);
    RunConfig bad = config("sturm");
    bad.poly = "x^2-1";
    bad.lo = "1";
    bad.hi = "1";
    CHECK_THROWS_AS(run(bad), UsageError);
}

TEST_CASE("dense: missing, truncated and mismatched scheme files") {
    RunConfig none = config("dense");
    CHECK_THROWS_AS(run(none), UsageError);

    RunConfig c = config("dense");
    c.scheme = temp_file("bmh_truncated.txt", "4 4\n0 1 2 3\n1 0 3 2\n").string();
    Report r = run(c);
    CHECK_FALSE(r.passed());
    CHECK(find(r, "load")->status == Status::fail);
    CHECK_FALSE(find(r, "load")->witness.empty());

    std::ostringstream h;
    hamming_instance(2).write(h);
    c.scheme = temp_file("bmh_h42.txt", h.str()).string();
    r = run(c);
    CHECK_FALSE(r.passed());
    CHECK(find(r, "load")->witness.find("255") != std::string::npos);
}

TEST_CASE("reports round-trip through JSON") {
    RunConfig c = at("hadamard", 4, 2);
    c.family = Family::II;
    c.fault = Fault::w2;
    const Report r = run(c);
    const json j = to_json(r);
    CHECK(report_from_json(j) == r);
    CHECK(report_from_json(json::parse(j.dump())) == r);
    CHECK(j["passed"] == false);

    json tampered = j;
    tampered["passed"] = true;
    CHECK_THROWS(report_from_json(tampered));
}

TEST_CASE("identical configurations give identical reports apart from timing") {
    for (std::string cmd : {"params", "nomura", "hadamard"}) {
        RunConfig c = at(cmd, 8, 2);
        if (cmd == "hadamard") c.family = Family::I;
        c.format = Format::json;
        CHECK(without_timing(run(c)).dump() == without_timing(run(c)).dump());
    }
}

TEST_CASE("precision comes from the environment when not given") {
    ::setenv("BMH_PRECISION", "320", 1);
    CHECK(default_precision() == 320);
    ::setenv("BMH_PRECISION", "64", 1);
    CHECK_THROWS_AS(default_precision(), UsageError);
    ::setenv("BMH_PRECISION", "abc", 1);
    CHECK_THROWS_AS(default_precision(), UsageError);
    ::unsetenv("BMH_PRECISION");
    CHECK(default_precision() == 256);

    RunConfig c = config("params");
    c.precision = 64;
    CHECK_THROWS_AS(run(c), UsageError);
}

TEST_CASE("text rendering lists every check") {
    RunConfig c = at("nomura", 4, 2);
    c.family = Family::I;
    const Report r = run(c);
    const std::string text = render_text(r);
    for (const auto& ch : r.checks) CHECK(text.find(ch.name) != std::string::npos);
    CHECK(text.find("all checks passed") != std::string::npos);
}

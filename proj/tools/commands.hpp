#pragma once

#include "report.hpp"

#include "bmh/hadamard.hpp"

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace bmh::cli {

/// Bad flags or parameters; the driver exits with status 2.
struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

enum class Format { text, json };
enum class Fault { none, tensor, w2, instance };

std::string to_string(Fault f);
Fault parse_fault(std::string_view s);

struct RunConfig {
    std::string command;  // params | hadamard | nomura | dense | sturm
    std::optional<long> q, m;
    bool grid = false;
    bool symbolic = false;
    std::optional<Family> family;
    std::optional<int> branch;
    unsigned precision = kDefaultPrecisionBits;
    std::optional<std::string> tolerance;
    std::optional<std::string> scheme;
    Format format = Format::text;
    std::uint64_t seed = 1;
    Fault fault = Fault::none;
    bool exact = true;
    bool numeric = true;
    bool exhaustive = false;
    // sturm
    std::vector<std::string> coeffs;  // highest degree first
    std::optional<std::string> poly;  // expression in x
    std::string lo = "-inf";
    std::string hi = "inf";
    bool p9 = false;
    std::optional<long> expect;

    json to_json() const;
};

/// BMH_PRECISION if set (must be an integer >= 128), otherwise 256.
unsigned default_precision();

/// Accepts "a", "a/b", decimals, "1e-30" and "2^-80"; the value must be >= 0.
Rational parse_tolerance(std::string_view s);

/// (q, m) pairs {4, 8, 16, 32} x {2, 3}.
const std::vector<std::pair<long, long>>& default_grid();

/// Runs one command. Throws UsageError for invalid configurations.
Report run(const RunConfig& cfg);

std::string version();

}  // namespace bmh::cli

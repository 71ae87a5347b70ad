#pragma once

// The verification table: every check the command-line tool runs, in the
// canonical order, with labels that mirror the published check listing.

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "twist/dataset.hpp"

namespace twist {

enum class Status { ok, fail, skipped };

/// "OK", "FAIL", "SKIPPED(data-axiom)".
std::string to_string(Status status);
/// Inverse of to_string; throws std::invalid_argument.
Status parse_status(const std::string& text);

struct CheckRecord {
    std::string id;
    std::string section;
    std::string label;
    Status status = Status::fail;
    std::string detail;

    friend bool operator==(const CheckRecord&, const CheckRecord&) = default;
};

struct CheckOutcome {
    Status status;
    std::string detail;
};

struct CheckEntry {
    std::string id;
    std::string section;
    std::string label;
    std::function<CheckOutcome(const Dataset&)> run;
};

/// dictionary, bitangents, galois, fixed, torsor, brauer, quadratic, theorems.
const std::vector<std::string>& section_names();

/// Group title printed above a run of checks, e.g. "Action of sigma_3".
std::string section_header(const std::string& section, const std::string& id);

/// All checks in canonical order. Labels derived from printed data are built
/// from the dataset passed in.
std::vector<CheckEntry> check_registry(const Dataset& ds);

struct RunOptions {
    std::optional<std::string> section;
    std::optional<std::string> check_id;
    unsigned threads = 0;  ///< 0: hardware concurrency
};

/// Runs the selected checks concurrently and returns them in registry order.
/// A check that throws is recorded as FAIL with the message as detail.
/// Throws std::invalid_argument for an unknown section or check id.
std::vector<CheckRecord> run_checks(const Dataset& ds, const RunOptions& options = {});

}  // namespace twist

#pragma once

// Rendering of a verification run as text or JSON, and reading JSON back.

#include <string>
#include <vector>

#include "twist/checks.hpp"

namespace twist {

struct Summary {
    std::size_t ok = 0;
    std::size_t fail = 0;
    std::size_t skipped = 0;

    friend bool operator==(const Summary&, const Summary&) = default;
};

struct Report {
    std::vector<CheckRecord> records;

    Summary summary() const;
    /// 0 when nothing failed, 1 otherwise.
    int exit_code() const;

    friend bool operator==(const Report&, const Report&) = default;
};

/// Group headers, one "label : STATUS" line per check, and a closing tally.
std::string render_text(const Report& report);

/// {"checks": [{id, section, label, status, detail}], "summary": {ok, fail, skipped}}.
std::string render_json(const Report& report);

/// Inverse of render_json. Throws std::invalid_argument on malformed input or
/// when the summary disagrees with the records.
Report parse_json(const std::string& text);

}  // namespace twist

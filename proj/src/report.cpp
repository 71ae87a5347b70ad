#include "twist/report.hpp"

#include <sstream>
#include <stdexcept>

#include "json.hpp"

namespace twist {

Summary Report::summary() const {
    Summary s;
    for (const auto& r : records) {
        switch (r.status) {
            case Status::ok:
                ++s.ok;
                break;
            case Status::fail:
                ++s.fail;
                break;
            case Status::skipped:
                ++s.skipped;
                break;
        }
    }
    return s;
}

int Report::exit_code() const { return summary().fail == 0 ? 0 : 1; }

std::string render_text(const Report& report) {
    std::ostringstream os;
    std::string header;
    for (const auto& r : report.records) {
        const std::string h = section_header(r.section, r.id);
        if (h != header) {
            if (!header.empty()) {
                os << '\n';
            }
            os << h << '\n';
            header = h;
        }
        os << r.label << " : " << to_string(r.status) << '\n';
    }
    const Summary s = report.summary();
    if (!report.records.empty()) {
        os << '\n';
    }
    os << report.records.size() << " checks: " << s.ok << " OK, " << s.fail << " FAIL, "
       << s.skipped << " SKIPPED\n";
    return os.str();
}

std::string render_json(const Report& report) {
    nlohmann::ordered_json checks = nlohmann::ordered_json::array();
    for (const auto& r : report.records) {
        checks.push_back({{"id", r.id},
                          {"section", r.section},
                          {"label", r.label},
                          {"status", to_string(r.status)},
                          {"detail", r.detail}});
    }
    const Summary s = report.summary();
    nlohmann::ordered_json doc;
    doc["checks"] = std::move(checks);
    doc["summary"] = {{"ok", s.ok}, {"fail", s.fail}, {"skipped", s.skipped}};
    return doc.dump(2) + "\n";
}

Report parse_json(const std::string& text) {
    Report out;
    try {
        const auto doc = nlohmann::json::parse(text);
        for (const auto& c : doc.at("checks")) {
            out.records.push_back({c.at("id").get<std::string>(),
                                   c.at("section").get<std::string>(),
                                   c.at("label").get<std::string>(),
                                   parse_status(c.at("status").get<std::string>()),
                                   c.at("detail").get<std::string>()});
        }
        const auto& s = doc.at("summary");
        const Summary stated{s.at("ok").get<std::size_t>(), s.at("fail").get<std::size_t>(),
                             s.at("skipped").get<std::size_t>()};
        if (!(stated == out.summary())) {
            throw std::invalid_argument("summary does not match the check records");
        }
    } catch (const nlohmann::json::exception& e) {
        throw std::invalid_argument(std::string("malformed report: ") + e.what());
    }
    return out;
}

}  // namespace twist

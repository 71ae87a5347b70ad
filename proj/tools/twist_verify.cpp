// twist-verify: runs the verification table for X^4 + Y^4 + Z^4 = 0.

#include <iostream>
#include <optional>
#include <string>

#include "CLI11.hpp"
#include "twist/checks.hpp"
#include "twist/mutation.hpp"
#include "twist/report.hpp"

int main(int argc, char** argv) {
    CLI::App app{"Verify divisor, Galois and Brauer computations on X^4 + Y^4 + Z^4 = 0"};
    std::optional<std::string> section;
    std::optional<std::string> check;
    std::optional<std::string> mutate;
    std::string format = "text";
    bool list = false;
    unsigned threads = 0;

    app.add_option("--section", section, "run one section")
        ->check(CLI::IsMember(twist::section_names()));
    app.add_option("--format", format, "output format")->check(CLI::IsMember({"text", "json"}));
    app.add_flag("--list", list, "print check ids and exit");
    app.add_option("--check", check, "run a single check by id");
    app.add_option("--mutate", mutate, "JSON file describing one corrupted value")
        ->check(CLI::ExistingFile);
    app.add_option("--threads", threads, "worker threads (0: hardware concurrency)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        twist::Dataset ds = twist::Dataset::standard();
        if (mutate) {
            ds = twist::apply_mutation_file(ds, *mutate);
        }
        if (list) {
            for (const auto& entry : twist::check_registry(ds)) {
                if (!section || entry.section == *section) {
                    std::cout << entry.id << '\n';
                }
            }
            return 0;
        }
        const twist::Report report{twist::run_checks(ds, {section, check, threads})};
        std::cout << (format == "json" ? twist::render_json(report) : twist::render_text(report));
        return report.exit_code();
    } catch (const std::invalid_argument& e) {
        std::cerr << "twist-verify: " << e.what() << '\n';
        return 2;
    }
}

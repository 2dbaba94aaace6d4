#include <fstream>
#include <iostream>

#include <CLI11.hpp>

#include "edc/scenarios.hpp"

namespace {

int write_output(const std::string& payload, const std::string& out_path) {
    if (out_path.empty()) {
        std::cout << payload << "\n";
        return 0;
    }
    std::ofstream out(out_path);
    if (!out) {
        std::cerr << "edcheck: cannot write " << out_path << "\n";
        return 2;
    }
    out << payload << "\n";
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"edcheck: exact verification of the group-theoretic computations behind "
                 "essential-dimension bounds for SL2(F8), PSp4(F3) and PSL2(F11)"};
    app.require_subcommand(1);

    auto* list_cmd = app.add_subcommand("list", "enumerate scenarios with the claims they verify");

    std::string name, cache_dir, out_path, format = "text";
    auto* run_cmd = app.add_subcommand("run", "run a verification scenario");
    run_cmd->add_option("scenario", name, "scenario name or 'all'")->required();
    run_cmd->add_option("--cache", cache_dir, "directory for cached group element lists");
    run_cmd->add_option("--out", out_path, "write the report to a file instead of stdout");
    run_cmd->add_option("--format", format, "report format")
        ->check(CLI::IsMember({"json", "text"}));

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    if (*list_cmd) {
        for (const auto& info : edc::list_scenarios()) {
            std::cout << info.name << "\n    " << info.description << "\n    claim: "
                      << info.citation << "\n";
        }
        std::cout << "all\n    run every scenario above\n";
        return 0;
    }

    if (!edc::scenario_exists(name)) {
        std::cerr << "edcheck: unknown scenario '" << name << "' (see 'edcheck list')\n";
        return 2;
    }

    edc::Workspace ws(cache_dir);
    std::vector<edc::ScenarioReport> reports;
    try {
        if (name == "all") {
            for (const auto& info : edc::list_scenarios())
                reports.push_back(edc::run_scenario(info.name, ws));
        } else {
            reports.push_back(edc::run_scenario(name, ws));
        }
    } catch (const std::exception& e) {
        std::cerr << "edcheck: " << e.what() << "\n";
        return 2;
    }

    std::string payload;
    if (format == "json") {
        payload = reports.size() == 1 ? edc::report_to_json(reports[0])
                                      : edc::reports_to_json(reports);
    } else {
        for (const auto& r : reports) payload += edc::report_to_text(r);
        if (!payload.empty() && payload.back() == '\n') payload.pop_back();
    }
    int rc = write_output(payload, out_path);
    if (rc != 0) return rc;

    bool all_pass = true;
    for (const auto& r : reports) all_pass = all_pass && r.status == "pass";
    return all_pass ? 0 : 1;
}

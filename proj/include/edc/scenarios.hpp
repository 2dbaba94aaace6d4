#pragma once

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "edc/obstruction.hpp"
#include "edc/principal_series.hpp"
#include "edc/weil.hpp"

namespace edc {

struct Check {
    std::string label;
    std::string expected;
    std::string computed;
    std::string citation; // the mathematical claim being verified
    bool ok = false;
};

struct ScenarioReport {
    std::string scenario;
    std::string status; // "pass" | "fail" | "error"
    std::vector<Check> checks;
    std::vector<std::string> witnesses;
    std::string error_message;
    double elapsed_ms = 0.0;
};

struct ScenarioInfo {
    std::string name;
    std::string description;
    std::string citation;
};

/// Shared lazily-built artifacts: enumerated groups (optionally disk-cached)
/// and certified representations, reused across scenarios in one process.
class Workspace {
  public:
    explicit Workspace(std::string cache_dir = "");

    /// name in {sl2_f3, psl2_f3, sl2_f8, sl2_f11, psl2_f11, sp4_f3, psp4_f3}
    const MatrixGroup& group(const std::string& name);

    const WeilSplit& weil_sp4();
    const WeilSplit& weil_sl2_11();
    const WeilSplit& weil_sl2_3();
    const PrincipalSeries& principal_series_u();
    const Character& principal_character();
    const GramForm& principal_gram();
    const Subgroup& sl28_unipotent();
    const std::vector<AbelianClass>& psl211_census();
    const CubicForm& psl211_invariant_cubic();
    const Subgroup& psl211_two_sylow();

    const std::string& cache_dir() const { return cache_dir_; }
    const std::vector<std::string>& warnings() const { return warnings_; }

  private:
    MatrixGroup build_group(const std::string& name);

    std::string cache_dir_;
    std::vector<std::string> warnings_;
    std::map<std::string, std::unique_ptr<MatrixGroup>> groups_;
    std::optional<WeilSplit> weil_sp4_;
    std::optional<WeilSplit> weil_sl2_11_;
    std::optional<WeilSplit> weil_sl2_3_;
    std::optional<PrincipalSeries> principal_;
    std::optional<Character> principal_chi_;
    std::optional<GramForm> principal_gram_;
    std::optional<Subgroup> sl28_n_;
    std::optional<std::vector<AbelianClass>> census_;
    std::optional<CubicForm> cubic_;
    std::optional<Subgroup> two_sylow_;
};

std::vector<ScenarioInfo> list_scenarios();
bool scenario_exists(const std::string& name);

/// Runs one named scenario (or "all") against the workspace.
ScenarioReport run_scenario(const std::string& name, Workspace& ws);

std::string report_to_json(const ScenarioReport& report, bool with_timing = true);
std::string reports_to_json(const std::vector<ScenarioReport>& reports, bool with_timing = true);
std::string report_to_text(const ScenarioReport& report);

} // namespace edc

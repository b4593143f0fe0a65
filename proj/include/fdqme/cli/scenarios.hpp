// scenarios.hpp - scenario dispatch and CSV emission

#pragma once

#include <filesystem>
#include <string>
#include <vector>

#include "fdqme/cli/config.hpp"
#include "fdqme/measures.hpp"

namespace fdqme::cli {

struct RunOptions {
    std::filesystem::path out_dir{"."};
    measures::GapDefinition gap{measures::GapDefinition::eigen};
    bool include_sum_frequency{false};
};

struct Column {
    std::string name; // e.g. "delta [g]"
    std::vector<double> values;
};

// CSV with '#'-prefixed metadata lines, one header row and %.17g values.
void write_csv(const std::filesystem::path& path, const std::vector<std::string>& metadata,
               const std::vector<Column>& columns);

// Runs the scenario and returns the files written. Errors carry the scenario name.
std::vector<std::filesystem::path> run_scenario(const ScenarioConfig& cfg, const RunOptions& opts);

} // namespace fdqme::cli

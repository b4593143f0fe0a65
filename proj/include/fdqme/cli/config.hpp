// config.hpp - strict line-oriented scenario configuration

#pragma once

#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace fdqme::cli {

struct GridSpec {
    double min{0.0};
    double max{0.0};
    std::size_t points{0};    // ignored for adaptive frequency grids
    std::string spacing{"uniform"}; // uniform | log | adaptive
    std::string parameter;    // sweep grids only

    std::vector<double> values() const;
};

struct ScenarioConfig {
    std::string scenario;
    std::map<std::string, double> params;
    std::map<std::string, std::string> options; // string-valued [params] keys, e.g. bath
    std::map<std::string, GridSpec> grids;      // keyed by "frequency", "time", "sweep"
    std::string output_prefix;
    std::string output_format{"csv"};

    double param(const std::string& key) const;
    double param_or(const std::string& key, double fallback) const;
    bool has(const std::string& key) const { return params.count(key) != 0; }
    std::string option_or(const std::string& key, const std::string& fallback) const;
};

struct ParseResult {
    std::optional<ScenarioConfig> config;
    std::vector<std::string> errors; // every problem found, in file order
};

struct ScenarioInfo {
    std::string name;
    std::string summary;
};

const std::vector<ScenarioInfo>& scenario_registry();

// `scenario` overrides or supplies the top-level `scenario = ...` key.
ParseResult parse_config(std::string_view text, std::string_view scenario = {});

// Canonical text form; parse_config(echo_config(c)) reproduces c.
std::string echo_config(const ScenarioConfig& cfg);

} // namespace fdqme::cli

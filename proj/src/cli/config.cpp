// config.cpp - strict scenario configuration parser

#include "fdqme/cli/config.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <set>
#include <sstream>
#include <stdexcept>

#include "fdqme/grid.hpp"

namespace fdqme::cli {

std::vector<double> GridSpec::values() const
{
    if (spacing == "log") {
        return grid::logspace(min, max, points);
    }
    return grid::uniform(min, max, points);
}

double ScenarioConfig::param(const std::string& key) const
{
    const auto it = params.find(key);
    if (it == params.end()) {
        throw std::invalid_argument("missing parameter '" + key + "'");
    }
    return it->second;
}

double ScenarioConfig::param_or(const std::string& key, double fallback) const
{
    const auto it = params.find(key);
    return it == params.end() ? fallback : it->second;
}

std::string ScenarioConfig::option_or(const std::string& key, const std::string& fallback) const
{
    const auto it = options.find(key);
    return it == options.end() ? fallback : it->second;
}

const std::vector<ScenarioInfo>& scenario_registry()
{
    static const std::vector<ScenarioInfo> registry{
        {"thermal-spectrum", "FD-QME, Markovian and Born-Redfield spectra for a thermal cavity bath"},
        {"squeezed-spectrum", "FD-QME and Markovian spectra for a squeezed cavity bath"},
        {"waveguide-spectrum", "conditional emission spectrum of two emitters with delayed feedback"},
        {"measure-sweep", "spectral measure N_S over one swept parameter (thermal, squeezed or waveguide)"},
        {"blp-compare", "Born-Redfield BLP measure and N_S over a detuning sweep (thermal)"},
        {"positivity", "purity of Born-Redfield and FD-QME trajectories for a squeezed bath"},
        {"oracle-compare", "FD-QME spectrum against the exact qubit-cavity model (thermal)"},
    };
    return registry;
}

namespace {

struct Schema {
    std::set<std::string> required;
    std::set<std::string> optional;
    std::set<std::string> any_one_of; // exactly one must be present when non-empty
    std::set<std::string> string_keys;
    std::set<std::string> required_grids;
    std::set<std::string> optional_grids;
};

const std::set<std::string> kGridKinds{"frequency", "time", "sweep"};
const std::set<std::string> kGridKeys{"min", "max", "points", "spacing", "parameter"};

std::string trim(std::string_view s)
{
    const auto b = s.find_first_not_of(" \t\r");
    if (b == std::string_view::npos) {
        return {};
    }
    const auto e = s.find_last_not_of(" \t\r");
    return std::string(s.substr(b, e - b + 1));
}

bool parse_number(const std::string& text, double& out)
{
    const char* first = text.data();
    const char* last = text.data() + text.size();
    const auto res = std::from_chars(first, last, out);
    return res.ec == std::errc() && res.ptr == last && std::isfinite(out);
}

bool valid_key(const std::string& k)
{
    return !k.empty() && std::all_of(k.begin(), k.end(), [](char c) {
        return (c >= 'a' && c <= 'z') || (c >= '0' && c <= '9') || c == '_';
    });
}

Schema schema_for(const std::string& scenario, const std::map<std::string, std::string>& options,
                  const std::string& sweep_parameter, std::vector<std::string>& errors)
{
    Schema s;
    const std::set<std::string> thermal{"omega_q", "delta", "kappa", "nbar"};
    const std::set<std::string> squeezed{"delta_q", "delta_c", "r", "kappa"};
    if (scenario == "thermal-spectrum") {
        s.required = thermal;
        s.optional = {"g"};
        s.optional_grids = {"frequency"};
    } else if (scenario == "squeezed-spectrum") {
        s.required = squeezed;
        s.optional = {"g"};
        s.optional_grids = {"frequency"};
    } else if (scenario == "waveguide-spectrum") {
        s.required = {"omega0", "beta", "eta"};
        s.optional = {"gamma"};
        s.optional_grids = {"frequency"};
    } else if (scenario == "oracle-compare") {
        s.required = thermal;
        s.required.insert("n_fock");
        s.optional = {"g"};
        s.optional_grids = {"frequency"};
    } else if (scenario == "blp-compare") {
        s.required = {"omega_q", "kappa", "nbar"};
        s.optional = {"g"};
        s.required_grids = {"sweep", "time"};
        if (!sweep_parameter.empty() && sweep_parameter != "delta") {
            errors.push_back("grid.sweep: blp-compare sweeps 'delta' only, got '" + sweep_parameter + "'");
        }
    } else if (scenario == "positivity") {
        s.required = {"delta_q", "delta_c", "kappa"};
        s.any_one_of = {"r", "delta_c_eff"};
        s.optional = {"g"};
        s.required_grids = {"time"};
    } else if (scenario == "measure-sweep") {
        s.string_keys = {"bath"};
        s.required_grids = {"sweep"};
        const auto it = options.find("bath");
        const std::string bath = it == options.end() ? "" : it->second;
        std::set<std::string> sweepable;
        if (bath == "thermal") {
            s.required = thermal;
            s.optional = {"g"};
            sweepable = {"delta", "kappa", "nbar"};
        } else if (bath == "squeezed") {
            s.required = squeezed;
            s.optional = {"g"};
            sweepable = {"r", "delta_tilde", "delta_bare"};
            if (sweep_parameter == "delta_tilde") {
                s.required.erase("r");
            } else if (sweep_parameter == "delta_bare") {
                s.required.erase("r");
                s.required.erase("delta_c");
            }
        } else if (bath == "waveguide") {
            s.required = {"omega0", "beta"};
            s.optional = {"gamma"};
            sweepable = {"n", "eta"};
        } else {
            errors.push_back("params.bath: must be one of thermal, squeezed, waveguide");
        }
        if (!sweep_parameter.empty() && !sweepable.empty()) {
            if (!sweepable.count(sweep_parameter)) {
                std::string list;
                for (const auto& p : sweepable) {
                    list += (list.empty() ? "" : ", ") + p;
                }
                errors.push_back("grid.sweep: parameter '" + sweep_parameter + "' cannot be swept for bath '"
                                 + bath + "' (allowed: " + list + ")");
            }
            s.required.erase(sweep_parameter);
        }
    }
    return s;
}

void check_constraints(const ScenarioConfig& c, std::vector<std::string>& errors)
{
    auto positive = [&](const char* key) {
        if (c.has(key) && !(c.param(key) > 0.0)) {
            errors.push_back(std::string("params.") + key + ": must be > 0");
        }
    };
    positive("g");
    positive("kappa");
    positive("gamma");
    positive("omega0");
    if (c.has("nbar") && c.param("nbar") < 0.0) {
        errors.push_back("params.nbar: must be >= 0");
    }
    if (c.has("beta") && (c.param("beta") < 0.0 || c.param("beta") > 1.0)) {
        errors.push_back("params.beta: must lie in [0, 1]");
    }
    if (c.has("eta") && c.param("eta") < 0.0) {
        errors.push_back("params.eta: must be >= 0");
    }
    if (c.has("r") && c.param("r") < 0.0) {
        errors.push_back("params.r: must be >= 0");
    }
    if (c.has("r") && c.has("delta_c") && !(c.param("r") < std::abs(c.param("delta_c")))) {
        errors.push_back("params.r: squeezing requires r < |delta_c|");
    }
    if (c.has("delta_c_eff") && c.has("delta_c")
        && !(c.param("delta_c_eff") > 0.0 && c.param("delta_c_eff") <= std::abs(c.param("delta_c")))) {
        errors.push_back("params.delta_c_eff: must satisfy 0 < delta_c_eff <= |delta_c|");
    }
    if (c.has("n_fock")) {
        const double n = c.param("n_fock");
        if (n != std::floor(n) || n < 4.0) {
            errors.push_back("params.n_fock: must be an integer >= 4");
        }
    }
    for (const auto& [kind, g] : c.grids) {
        const std::string where = "grid." + kind;
        if (g.spacing != "uniform" && g.spacing != "log" && g.spacing != "adaptive") {
            errors.push_back(where + ".spacing: must be uniform, log or adaptive");
        }
        if (g.spacing == "adaptive" && kind != "frequency") {
            errors.push_back(where + ".spacing: adaptive spacing applies to frequency grids only");
        }
        if (!(g.max > g.min)) {
            errors.push_back(where + ": max must exceed min");
        }
        if (g.spacing != "adaptive" && g.points < 2) {
            errors.push_back(where + ".points: need at least 2 points");
        }
        if (g.spacing == "log" && !(g.min > 0.0)) {
            errors.push_back(where + ": log spacing needs min > 0");
        }
        if (kind == "sweep" && g.parameter.empty()) {
            errors.push_back(where + ".parameter: missing");
        }
        if (kind != "sweep" && !g.parameter.empty()) {
            errors.push_back(where + ".parameter: only sweep grids name a parameter");
        }
    }
}

std::string format_number(double v)
{
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

} // namespace

ParseResult parse_config(std::string_view text, std::string_view scenario)
{
    ParseResult out;
    auto& errors = out.errors;
    ScenarioConfig cfg;
    std::string file_scenario;

    std::string section;
    std::set<std::string> seen_sections;
    std::set<std::string> seen_keys;
    std::map<std::string, std::map<std::string, std::string>> grid_raw;
    std::map<std::string, int> grid_line;
    std::map<std::string, int> param_line;

    std::istringstream in{std::string(text)};
    std::string raw;
    int line_no = 0;
    while (std::getline(in, raw)) {
        ++line_no;
        const std::string where = "line " + std::to_string(line_no);
        std::string line = raw;
        const auto hash = line.find_first_of("#;");
        if (hash != std::string::npos) {
            line.erase(hash);
        }
        line = trim(line);
        if (line.empty()) {
            continue;
        }
        if (line.front() == '[') {
            if (line.back() != ']') {
                errors.push_back(where + ": malformed section header");
                continue;
            }
            section = trim(std::string_view(line).substr(1, line.size() - 2));
            const bool known = section == "params" || section == "output"
                || (section.rfind("grid.", 0) == 0 && kGridKinds.count(section.substr(5)));
            if (!known) {
                errors.push_back(where + ": unknown section [" + section + "]");
            } else if (!seen_sections.insert(section).second) {
                errors.push_back(where + ": duplicate section [" + section + "]");
            }
            if (section.rfind("grid.", 0) == 0) {
                grid_line.emplace(section.substr(5), line_no);
            }
            continue;
        }
        const auto eq = line.find('=');
        if (eq == std::string::npos) {
            errors.push_back(where + ": expected 'key = value'");
            continue;
        }
        const std::string key = trim(std::string_view(line).substr(0, eq));
        const std::string value = trim(std::string_view(line).substr(eq + 1));
        if (!valid_key(key)) {
            errors.push_back(where + ": key '" + key + "' must be lowercase snake_case");
            continue;
        }
        if (value.empty()) {
            errors.push_back(where + ": empty value for '" + key + "'");
            continue;
        }
        const std::string full = (section.empty() ? "" : section + ".") + key;
        if (!seen_keys.insert(full).second) {
            errors.push_back(where + ": duplicate key '" + full + "'");
            continue;
        }
        if (section.empty()) {
            if (key == "scenario") {
                file_scenario = value;
            } else {
                errors.push_back(where + ": unknown top-level key '" + key + "'");
            }
        } else if (section == "params") {
            double v = 0.0;
            if (key == "bath") {
                cfg.options[key] = value;
            } else if (parse_number(value, v)) {
                cfg.params[key] = v;
                param_line[key] = line_no;
            } else {
                errors.push_back(where + ": value of '" + full + "' is not a number: '" + value + "'");
            }
        } else if (section == "output") {
            if (key == "prefix") {
                cfg.output_prefix = value;
            } else if (key == "format") {
                if (value != "csv") {
                    errors.push_back(where + ": output.format must be csv");
                }
                cfg.output_format = value;
            } else {
                errors.push_back(where + ": unknown key '" + full + "'");
            }
        } else if (section.rfind("grid.", 0) == 0) {
            if (!kGridKeys.count(key)) {
                errors.push_back(where + ": unknown key '" + full + "'");
            } else {
                grid_raw[section.substr(5)][key] = value;
            }
        }
    }

    // Scenario tag.
    if (!scenario.empty() && !file_scenario.empty() && file_scenario != scenario) {
        errors.push_back("scenario: config names '" + file_scenario + "' but '" + std::string(scenario)
                         + "' was requested");
    }
    cfg.scenario = scenario.empty() ? file_scenario : std::string(scenario);
    const auto& reg = scenario_registry();
    const bool known = std::any_of(reg.begin(), reg.end(), [&](const auto& s) { return s.name == cfg.scenario; });
    if (cfg.scenario.empty()) {
        errors.push_back("scenario: not specified");
    } else if (!known) {
        errors.push_back("scenario: unknown scenario '" + cfg.scenario + "'");
    }

    // Grids.
    for (const auto& [kind, kv] : grid_raw) {
        GridSpec g;
        const std::string where = "grid." + kind;
        for (const auto& [key, value] : kv) {
            if (key == "spacing") {
                g.spacing = value;
            } else if (key == "parameter") {
                g.parameter = value;
            } else {
                double v = 0.0;
                if (!parse_number(value, v)) {
                    errors.push_back(where + "." + key + ": not a number: '" + value + "'");
                    continue;
                }
                if (key == "min") {
                    g.min = v;
                } else if (key == "max") {
                    g.max = v;
                } else if (key == "points") {
                    if (v != std::floor(v) || v < 0.0) {
                        errors.push_back(where + ".points: must be a non-negative integer");
                    } else {
                        g.points = static_cast<std::size_t>(v);
                    }
                }
            }
        }
        for (const char* need : {"min", "max"}) {
            if (!kv.count(need)) {
                errors.push_back(where + ": missing key '" + std::string(need) + "'");
            }
        }
        if (!kv.count("points") && g.spacing != "adaptive") {
            errors.push_back(where + ": missing key 'points'");
        }
        cfg.grids[kind] = g;
    }
    for (const auto& entry : grid_line) {
        const std::string& kind = entry.first;
        if (!grid_raw.count(kind)) {
            errors.push_back("grid." + kind + ": section is empty");
        }
    }

    // Scenario schema.
    if (known) {
        const std::string sweep = cfg.grids.count("sweep") ? cfg.grids.at("sweep").parameter : "";
        const Schema schema = schema_for(cfg.scenario, cfg.options, sweep, errors);
        for (const auto& key : schema.required) {
            if (!cfg.params.count(key)) {
                errors.push_back("params." + key + ": missing (required by " + cfg.scenario + ")");
            }
        }
        if (!schema.any_one_of.empty()) {
            std::size_t present = 0;
            std::string names;
            for (const auto& key : schema.any_one_of) {
                present += cfg.params.count(key);
                names += (names.empty() ? "" : " or ") + key;
            }
            if (present != 1) {
                errors.push_back("params: exactly one of " + names + " is required");
            }
        }
        for (const auto& [key, v] : cfg.params) {
            if (!schema.required.count(key) && !schema.optional.count(key) && !schema.any_one_of.count(key)) {
                errors.push_back("line " + std::to_string(param_line[key]) + ": unknown key 'params." + key
                                 + "' for " + cfg.scenario);
            }
        }
        for (const auto& [key, v] : cfg.options) {
            if (!schema.string_keys.count(key)) {
                errors.push_back("params." + key + ": not used by " + cfg.scenario);
            }
        }
        for (const auto& kind : schema.required_grids) {
            if (!cfg.grids.count(kind)) {
                errors.push_back("grid." + kind + ": section required by " + cfg.scenario);
            }
        }
        for (const auto& [kind, g] : cfg.grids) {
            if (!schema.required_grids.count(kind) && !schema.optional_grids.count(kind)) {
                errors.push_back("grid." + kind + ": not used by " + cfg.scenario);
            }
        }
    }
    check_constraints(cfg, errors);

    if (errors.empty()) {
        out.config = std::move(cfg);
    }
    return out;
}

std::string echo_config(const ScenarioConfig& cfg)
{
    std::ostringstream os;
    os << "scenario = " << cfg.scenario << "\n\n[params]\n";
    for (const auto& [k, v] : cfg.options) {
        os << k << " = " << v << "\n";
    }
    for (const auto& [k, v] : cfg.params) {
        os << k << " = " << format_number(v) << "\n";
    }
    for (const auto& [kind, g] : cfg.grids) {
        os << "\n[grid." << kind << "]\n";
        if (!g.parameter.empty()) {
            os << "parameter = " << g.parameter << "\n";
        }
        os << "min = " << format_number(g.min) << "\nmax = " << format_number(g.max) << "\n";
        if (g.spacing != "adaptive") {
            os << "points = " << g.points << "\n";
        }
        os << "spacing = " << g.spacing << "\n";
    }
    if (!cfg.output_prefix.empty() || cfg.output_format != "csv") {
        os << "\n[output]\n";
        if (!cfg.output_prefix.empty()) {
            os << "prefix = " << cfg.output_prefix << "\n";
        }
        os << "format = " << cfg.output_format << "\n";
    }
    return os.str();
}

} // namespace fdqme::cli

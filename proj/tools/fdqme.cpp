// fdqme.cpp - command-line scenario runner

#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "fdqme/cli/config.hpp"
#include "fdqme/cli/scenarios.hpp"
#include "fdqme/parallel.hpp"

int main(int argc, char** argv)
{
    using namespace fdqme::cli;

    CLI::App app{"Frequency-domain master equation scenario runner"};
    std::string scenario;
    std::string config_path;
    std::string out_dir = ".";
    std::string gap = "eigen";
    bool include_sum = false;
    bool list = false;
    unsigned threads = 0;

    app.add_option("scenario", scenario, "scenario tag (see --list-scenarios)");
    app.add_option("--config", config_path, "scenario configuration file");
    app.add_option("--out", out_dir, "output directory");
    app.add_option("--gap", gap, "Markovian bandwidth definition")->check(CLI::IsMember({"eigen", "fwhm"}));
    app.add_flag("--include-sum-frequency", include_sum, "keep sum-frequency terms in Born-Redfield rates");
    app.add_option("--threads", threads, "worker threads (0 = hardware concurrency)");
    app.add_flag("--list-scenarios", list, "print the scenario registry and exit");
    CLI11_PARSE(app, argc, argv);

    if (list) {
        for (const auto& s : scenario_registry()) {
            std::cout << s.name << "\t" << s.summary << "\n";
        }
        return 0;
    }
    if (scenario.empty() || config_path.empty()) {
        std::cerr << "usage: fdqme <scenario> --config <path> [--out <dir>] [--gap eigen|fwhm] "
                     "[--include-sum-frequency] [--threads N]\n";
        return 2;
    }

    std::ifstream in(config_path, std::ios::binary);
    if (!in) {
        std::cerr << "error: cannot read " << config_path << "\n";
        return 2;
    }
    std::ostringstream text;
    text << in.rdbuf();

    const auto parsed = parse_config(text.str(), scenario);
    if (!parsed.config) {
        for (const auto& e : parsed.errors) {
            std::cerr << config_path << ": " << e << "\n";
        }
        return 2;
    }

    fdqme::set_thread_count(threads);
    RunOptions opts;
    opts.out_dir = out_dir;
    opts.gap = gap == "fwhm" ? fdqme::measures::GapDefinition::fwhm : fdqme::measures::GapDefinition::eigen;
    opts.include_sum_frequency = include_sum;
    try {
        for (const auto& f : run_scenario(*parsed.config, opts)) {
            std::cout << f.string() << "\n";
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}

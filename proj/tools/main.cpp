// SPDX-License-Identifier: Apache-2.0
//
// sixdma: pose optimization for six-dimensional movable antenna (6DMA) sensing arrays
// Copyright (C) 2026 sixdma contributors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
// http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
// ------------------------------------------------------------------------

#include <algorithm>
#include <cstdint>
#include <filesystem>
#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "sixdma/config.hpp"
#include "sixdma/layout_io.hpp"
#include "sixdma/plot.hpp"
#include "sixdma/records.hpp"
#include "sixdma/runner.hpp"
#include "sixdma/schemes.hpp"

namespace {

namespace fs = std::filesystem;
using namespace sixdma;

std::string layout_filename(SchemeKind scheme, const std::string& pattern,
                            std::uint64_t seed) {
    return "layout_" + to_string(scheme) + "_" + pattern + "_seed" + std::to_string(seed) +
           ".txt";
}

void save_cell_layouts(const std::vector<RunRecord>& records, const std::string& out_dir) {
    std::vector<std::string> written;
    for (const RunRecord& record : records) {
        const std::string name = layout_filename(record.scheme, record.pattern, record.seed);
        if (std::find(written.begin(), written.end(), name) != written.end()) continue;
        save_layout(record.layout, out_dir + "/" + name);
        written.push_back(name);
    }
}

void print_summary(const std::vector<RunRecord>& records) {
    for (const RunRecord& record : records) {
        std::cout << to_string(record.scheme) << "/" << record.pattern << " seed "
                  << record.seed << " power " << record.power_dbm
                  << " dBm: crb_total = " << record.report.total << " rad^2"
                  << (record.feasible ? "" : " (infeasible)") << "\n";
    }
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Pose optimization and DoA estimation bounds for movable antenna surfaces"};
    app.require_subcommand(1);

    std::string opt_config, opt_scheme = "6dma", opt_pattern = "directive", opt_out;
    std::uint64_t opt_seed = 1;
    CLI::App* optimize =
        app.add_subcommand("optimize", "Optimize one scheme, write records and the layout");
    optimize->add_option("--config", opt_config, "config file (JSON)")->required();
    optimize->add_option("--scheme", opt_scheme, "6dma | fpa | fa-ma");
    optimize->add_option("--pattern", opt_pattern, "directive | isotropic");
    optimize->add_option("--seed", opt_seed, "run seed");
    optimize->add_option("--out", opt_out, "output directory")->required();

    std::string sweep_config, sweep_out;
    std::vector<std::string> sweep_patterns;
    CLI::App* sweep = app.add_subcommand(
        "sweep", "Run every configured scheme, pattern, and seed across the power sweep");
    sweep->add_option("--config", sweep_config, "config file (JSON)")->required();
    sweep->add_option("--out", sweep_out, "output directory")->required();
    sweep->add_option("--pattern", sweep_patterns,
                      "restrict to these patterns (default: config list)");

    std::string plot_in, plot_out;
    CLI::App* plot = app.add_subcommand("plot", "Render records.csv from a sweep as an SVG");
    plot->add_option("--in", plot_in, "directory containing records.csv")->required();
    plot->add_option("--out", plot_out, "output SVG file")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (optimize->parsed()) {
            const ExperimentConfig config = load_config(opt_config);
            const auto scheme = parse_scheme(opt_scheme);
            if (!scheme) throw ConfigError("unknown scheme '" + opt_scheme + "'");
            make_pattern(opt_pattern);
            fs::create_directories(opt_out);
            const std::vector<RunRecord> records =
                run_cell(config, *scheme, opt_pattern, opt_seed);
            write_csv(records, opt_out + "/records.csv");
            save_cell_layouts(records, opt_out);
            print_summary(records);
        } else if (sweep->parsed()) {
            ExperimentConfig config = load_config(sweep_config);
            if (!sweep_patterns.empty()) {
                for (const std::string& p : sweep_patterns) make_pattern(p);
                config.patterns = sweep_patterns;
            }
            fs::create_directories(sweep_out);
            const std::vector<RunRecord> records = run_experiment(config);
            write_csv(records, sweep_out + "/records.csv");
            save_cell_layouts(records, sweep_out);
            print_summary(records);
        } else if (plot->parsed()) {
            const CsvContent content = read_csv(plot_in + "/records.csv");
            write_plot(content.rows, plot_out);
            std::cout << "wrote " << plot_out << " (" << content.rows.size() << " rows)\n";
        }
        return 0;
    } catch (const ConfigError& e) {
        std::cerr << "config error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    }
}

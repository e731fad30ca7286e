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

#include "sixdma/runner.hpp"

#include <atomic>
#include <chrono>
#include <cstdlib>
#include <exception>
#include <mutex>
#include <thread>

namespace sixdma {

namespace {

// Decorrelates the probe draw from the swarm seed without hiding the run
// seed's influence.
std::uint64_t probe_seed(std::uint64_t seed) {
    return (seed + 0x9e3779b97f4a7c15ULL) * 1099511628211ULL;
}

ProbeSignal build_probe(const ExperimentConfig& config, double power_w,
                        std::uint64_t seed) {
    const int dims = config.array.total_antennas();
    if (config.probe_mode == ProbeMode::Ideal) {
        return make_probe_ideal(power_w, config.snapshots, dims);
    }
    return make_probe_gaussian(power_w, config.snapshots, dims, probe_seed(seed));
}

CrbReport evaluate_report(const ArrayLayout& layout, const PatternKind& kind,
                          const SensingScenario& scenario, const ProbeSignal& probe,
                          Wavelength lambda) {
    const auto K = static_cast<Eigen::Index>(scenario.targets.size());
    try {
        return crb_report(layout, kind, scenario.targets, probe, scenario.noise_var, lambda);
    } catch (const SingularFimError&) {
        CrbReport report;
        report.total = kUnidentifiableCrb;
        report.per_target = Eigen::VectorXd::Constant(K, kUnidentifiableCrb);
        const GainDecomposition gains =
            gain_decomposition(layout, kind, scenario.targets, probe, lambda);
        report.power_gain = gains.power_gain;
        report.geometric_gain = gains.geometric_gain;
        return report;
    }
}

}  // namespace

int worker_count() {
    const char* env = std::getenv("SIXDMA_WORKERS");
    if (env == nullptr) return 1;
    const int value = std::atoi(env);
    return value >= 1 ? value : 1;
}

std::vector<RunRecord> run_cell(const ExperimentConfig& config, SchemeKind scheme,
                                const std::string& pattern, std::uint64_t seed) {
    const auto start = std::chrono::steady_clock::now();
    const auto elapsed = [&start]() {
        return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    };

    const PatternKind kind = make_pattern(pattern);
    const std::uint64_t hash = config_hash(config);
    const Wavelength lambda = config.array.lambda;

    std::vector<RunRecord> records;
    if (config.reoptimize_per_power) {
        for (double power : config.power_dbm) {
            const double power_w = dbm_to_watts(power);
            const SensingScenario scenario = build_scenario(config, power_w);
            const ProbeSignal probe = build_probe(config, power_w, seed);
            const SchemeRunResult run =
                run_scheme(scheme, scenario, config.array, kind, probe, config.pso, seed);
            RunRecord record;
            record.config_hash = hash;
            record.scheme = scheme;
            record.pattern = pattern;
            record.seed = seed;
            record.power_dbm = power;
            record.report = evaluate_report(run.layout, kind, scenario, probe, lambda);
            record.layout = run.layout;
            record.history = run.history;
            record.iterations = static_cast<int>(run.history.size()) - 1;
            record.feasible = run.feasible;
            record.wallclock_s = elapsed();
            records.push_back(std::move(record));
        }
        return records;
    }

    const double reference_w = dbm_to_watts(config.reference_power_dbm);
    const SensingScenario reference = build_scenario(config, reference_w);
    const ProbeSignal reference_probe = build_probe(config, reference_w, seed);
    const SchemeRunResult run =
        run_scheme(scheme, reference, config.array, kind, reference_probe, config.pso, seed);

    for (double power : config.power_dbm) {
        const double power_w = dbm_to_watts(power);
        const SensingScenario scenario = build_scenario(config, power_w);
        const ProbeSignal probe = build_probe(config, power_w, seed);
        RunRecord record;
        record.config_hash = hash;
        record.scheme = scheme;
        record.pattern = pattern;
        record.seed = seed;
        record.power_dbm = power;
        record.report = evaluate_report(run.layout, kind, scenario, probe, lambda);
        record.layout = run.layout;
        record.history = run.history;
        record.iterations = static_cast<int>(run.history.size()) - 1;
        record.feasible = run.feasible;
        record.wallclock_s = elapsed();
        records.push_back(std::move(record));
    }
    return records;
}

std::vector<RunRecord> run_experiment(const ExperimentConfig& config) {
    struct Task {
        SchemeKind scheme;
        std::string pattern;
        std::uint64_t seed;
    };
    std::vector<Task> tasks;
    for (const std::string& pattern : config.patterns) {
        for (SchemeKind scheme : config.schemes) {
            for (std::uint64_t seed : config.seeds) {
                tasks.push_back({scheme, pattern, seed});
            }
        }
    }
    if (tasks.empty()) return {};

    std::vector<std::vector<RunRecord>> slots(tasks.size());
    std::atomic<std::size_t> next{0};
    std::exception_ptr first_error;
    std::mutex error_mutex;

    const auto work = [&]() {
        while (true) {
            const std::size_t index = next.fetch_add(1);
            if (index >= tasks.size()) return;
            try {
                const Task& task = tasks[index];
                slots[index] = run_cell(config, task.scheme, task.pattern, task.seed);
            } catch (...) {
                std::lock_guard<std::mutex> lock(error_mutex);
                if (!first_error) first_error = std::current_exception();
            }
        }
    };

    const int workers = std::min<int>(worker_count(), static_cast<int>(tasks.size()));
    if (workers <= 1) {
        work();
    } else {
        std::vector<std::thread> pool;
        pool.reserve(static_cast<std::size_t>(workers));
        for (int w = 0; w < workers; ++w) pool.emplace_back(work);
        for (std::thread& t : pool) t.join();
    }
    if (first_error) std::rethrow_exception(first_error);

    std::vector<RunRecord> records;
    for (std::vector<RunRecord>& slot : slots) {
        for (RunRecord& record : slot) records.push_back(std::move(record));
    }
    return records;
}

}  // namespace sixdma

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

#ifndef SIXDMA_CONFIG_HPP
#define SIXDMA_CONFIG_HPP

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "sixdma/pattern.hpp"
#include "sixdma/pso.hpp"
#include "sixdma/scenario.hpp"
#include "sixdma/schemes.hpp"

namespace sixdma {

/// Configuration ingestion failure; maps to CLI exit code 2.
class ConfigError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

enum class ProbeMode { Ideal, Gaussian };

/// Region placement relative to the station: bearing plus range instead of
/// absolute coordinates, which keeps configs rotation-friendly.
struct RegionSpec {
    double bearing_deg = 0.0;
    double range_m = 0.0;
    double radius_m = 0.0;
    int subregions = 1;
};

struct ExperimentConfig {
    std::string name;
    double frequency_hz = 2.4e9;
    double noise_var = 1e-12;  // W
    double rcs_m2 = 1.0;
    int snapshots = 128;
    ArraySpec array;
    std::vector<RegionSpec> regions;
    std::vector<double> power_dbm;
    double reference_power_dbm = 0.0;
    PsoParams pso;
    std::vector<SchemeKind> schemes;
    std::vector<std::string> patterns;  // "directive" / "isotropic"
    std::vector<std::uint64_t> seeds;
    ProbeMode probe_mode = ProbeMode::Ideal;
    bool reoptimize_per_power = false;
};

/// Parses and validates a JSON config. Unknown keys, type mismatches, and
/// out-of-range values all raise ConfigError with the offending key named.
ExperimentConfig parse_config(const std::string& text);

ExperimentConfig load_config(const std::string& path);

/// Normalized JSON dump of a resolved config; identical configs produce
/// identical bytes.
std::string canonical_config(const ExperimentConfig& config);

/// FNV-1a 64-bit hash of canonical_config, recorded in every artifact.
std::uint64_t config_hash(const ExperimentConfig& config);

/// Maps "directive" / "isotropic" to a pattern; throws ConfigError otherwise.
PatternKind make_pattern(const std::string& name);

double dbm_to_watts(double dbm);

/// Regions, targets, and noise/probe scalars for one transmit power.
SensingScenario build_scenario(const ExperimentConfig& config, double power_w);

}  // namespace sixdma

#endif  // SIXDMA_CONFIG_HPP

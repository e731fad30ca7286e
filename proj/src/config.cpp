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

#include "sixdma/config.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <set>
#include <sstream>

#include "json.hpp"

namespace sixdma {

namespace {

constexpr double kPi = 3.14159265358979323846;

using nlohmann::json;

void require_keys(const json& object, const std::string& scope,
                  const std::set<std::string>& allowed) {
    for (const auto& item : object.items()) {
        if (allowed.find(item.key()) == allowed.end()) {
            throw ConfigError("unknown key '" + item.key() + "' in " + scope);
        }
    }
}

const json& require(const json& object, const std::string& scope, const std::string& key) {
    auto it = object.find(key);
    if (it == object.end()) {
        throw ConfigError("missing key '" + key + "' in " + scope);
    }
    return *it;
}

double get_number(const json& object, const std::string& scope, const std::string& key) {
    const json& value = require(object, scope, key);
    if (!value.is_number()) {
        throw ConfigError("key '" + key + "' in " + scope + " must be a number");
    }
    return value.get<double>();
}

double get_number_or(const json& object, const std::string& scope, const std::string& key,
                     double fallback) {
    if (object.find(key) == object.end()) return fallback;
    return get_number(object, scope, key);
}

int get_int(const json& object, const std::string& scope, const std::string& key) {
    const json& value = require(object, scope, key);
    if (!value.is_number_integer()) {
        throw ConfigError("key '" + key + "' in " + scope + " must be an integer");
    }
    return value.get<int>();
}

void check_positive(double value, const std::string& what) {
    if (!(value > 0.0)) {
        throw ConfigError(what + " must be positive");
    }
}

}  // namespace

ExperimentConfig parse_config(const std::string& text) {
    json root;
    try {
        root = json::parse(text);
    } catch (const json::exception& e) {
        throw ConfigError(std::string("config is not valid JSON: ") + e.what());
    }
    if (!root.is_object()) {
        throw ConfigError("config root must be an object");
    }
    require_keys(root, "config",
                 {"name", "frequency_hz", "noise_var_w", "rcs_m2", "snapshots", "array",
                  "regions", "power_dbm", "reference_power_dbm", "pso", "schemes",
                  "patterns", "seeds", "probe", "reoptimize_per_power"});

    ExperimentConfig config;
    try {
        config.name = root.value("name", std::string{});
        config.frequency_hz = get_number_or(root, "config", "frequency_hz", 2.4e9);
        config.noise_var = get_number_or(root, "config", "noise_var_w", 1e-12);
        config.rcs_m2 = get_number_or(root, "config", "rcs_m2", 1.0);
        config.snapshots =
            root.contains("snapshots") ? get_int(root, "config", "snapshots") : 128;
    } catch (const json::exception& e) {
        throw ConfigError(std::string("config field type error: ") + e.what());
    }
    check_positive(config.frequency_hz, "frequency_hz");
    check_positive(config.noise_var, "noise_var_w");
    check_positive(config.rcs_m2, "rcs_m2");

    const json& array = require(root, "config", "array");
    if (!array.is_object()) throw ConfigError("'array' must be an object");
    require_keys(array, "array",
                 {"surfaces", "antennas_per_surface", "site_side_m", "min_spacing_m",
                  "sector_panel_lambda"});
    config.array.surfaces = get_int(array, "array", "surfaces");
    config.array.antennas_per = get_int(array, "array", "antennas_per_surface");
    config.array.site.side = get_number(array, "array", "site_side_m");
    if (config.array.surfaces < 1) throw ConfigError("array.surfaces must be at least 1");
    if (config.array.antennas_per < 1) {
        throw ConfigError("array.antennas_per_surface must be at least 1");
    }
    check_positive(config.array.site.side, "array.site_side_m");

    config.array.lambda = Wavelength::from_frequency(config.frequency_hz);
    const double lambda_m = config.array.lambda.meters;
    const double default_spacing = (std::sqrt(2.0) / 2.0 + 0.5) * lambda_m;
    config.array.cons.min_spacing =
        get_number_or(array, "array", "min_spacing_m", default_spacing);
    check_positive(config.array.cons.min_spacing, "array.min_spacing_m");
    const double panel_lambda =
        get_number_or(array, "array", "sector_panel_lambda", 8.0);
    check_positive(panel_lambda, "array.sector_panel_lambda");
    config.array.sector_panel = panel_lambda * lambda_m;

    if (config.snapshots <= config.array.total_antennas()) {
        throw ConfigError("snapshots must exceed the total antenna count");
    }

    const json& regions = require(root, "config", "regions");
    if (!regions.is_array() || regions.empty()) {
        throw ConfigError("'regions' must be a non-empty array");
    }
    for (std::size_t i = 0; i < regions.size(); ++i) {
        const json& r = regions[i];
        const std::string scope = "regions[" + std::to_string(i) + "]";
        if (!r.is_object()) throw ConfigError(scope + " must be an object");
        require_keys(r, scope, {"bearing_deg", "range_m", "radius_m", "subregions"});
        RegionSpec spec;
        spec.bearing_deg = get_number(r, scope, "bearing_deg");
        spec.range_m = get_number(r, scope, "range_m");
        spec.radius_m = get_number(r, scope, "radius_m");
        spec.subregions = get_int(r, scope, "subregions");
        check_positive(spec.range_m, scope + ".range_m");
        check_positive(spec.radius_m, scope + ".radius_m");
        if (spec.subregions < 1) throw ConfigError(scope + ".subregions must be at least 1");
        config.regions.push_back(spec);
    }

    const json& powers = require(root, "config", "power_dbm");
    if (!powers.is_array() || powers.empty()) {
        throw ConfigError("'power_dbm' must be a non-empty array");
    }
    for (const json& p : powers) {
        if (!p.is_number()) throw ConfigError("'power_dbm' entries must be numbers");
        config.power_dbm.push_back(p.get<double>());
    }
    config.reference_power_dbm =
        get_number_or(root, "config", "reference_power_dbm",
                      config.power_dbm[config.power_dbm.size() / 2]);

    const json& pso = require(root, "config", "pso");
    if (!pso.is_object()) throw ConfigError("'pso' must be an object");
    require_keys(pso, "pso",
                 {"particles", "iterations", "inertia", "cognitive", "social", "penalty",
                  "use_updated_velocity"});
    config.pso.particles = get_int(pso, "pso", "particles");
    config.pso.iterations = get_int(pso, "pso", "iterations");
    config.pso.inertia = get_number_or(pso, "pso", "inertia", config.pso.inertia);
    config.pso.cognitive = get_number_or(pso, "pso", "cognitive", config.pso.cognitive);
    config.pso.social = get_number_or(pso, "pso", "social", config.pso.social);
    if (pso.contains("penalty")) {
        config.pso.penalty = get_number(pso, "pso", "penalty");
    }
    if (pso.contains("use_updated_velocity")) {
        const json& v = pso.at("use_updated_velocity");
        if (!v.is_boolean()) throw ConfigError("pso.use_updated_velocity must be a boolean");
        config.pso.use_updated_velocity = v.get<bool>();
    }
    try {
        config.pso.validate();
    } catch (const std::invalid_argument& e) {
        throw ConfigError(std::string("pso: ") + e.what());
    }

    const json& schemes = require(root, "config", "schemes");
    if (!schemes.is_array()) throw ConfigError("'schemes' must be an array");
    for (const json& s : schemes) {
        if (!s.is_string()) throw ConfigError("'schemes' entries must be strings");
        const auto kind = parse_scheme(s.get<std::string>());
        if (!kind) throw ConfigError("unknown scheme '" + s.get<std::string>() + "'");
        config.schemes.push_back(*kind);
    }

    const json& patterns = require(root, "config", "patterns");
    if (!patterns.is_array()) throw ConfigError("'patterns' must be an array");
    for (const json& p : patterns) {
        if (!p.is_string()) throw ConfigError("'patterns' entries must be strings");
        make_pattern(p.get<std::string>());  // name check only
        config.patterns.push_back(p.get<std::string>());
    }

    const json& seeds = require(root, "config", "seeds");
    if (!seeds.is_array()) throw ConfigError("'seeds' must be an array");
    for (const json& s : seeds) {
        if (!s.is_number_integer() || s.get<std::int64_t>() < 0) {
            throw ConfigError("'seeds' entries must be nonnegative integers");
        }
        config.seeds.push_back(s.get<std::uint64_t>());
    }

    std::string probe = "ideal";
    if (root.contains("probe")) {
        const json& v = root.at("probe");
        if (!v.is_string()) throw ConfigError("'probe' must be a string");
        probe = v.get<std::string>();
    }
    if (probe == "ideal") {
        config.probe_mode = ProbeMode::Ideal;
    } else if (probe == "gaussian") {
        config.probe_mode = ProbeMode::Gaussian;
    } else {
        throw ConfigError("'probe' must be 'ideal' or 'gaussian'");
    }

    if (root.contains("reoptimize_per_power")) {
        const json& v = root.at("reoptimize_per_power");
        if (!v.is_boolean()) throw ConfigError("'reoptimize_per_power' must be a boolean");
        config.reoptimize_per_power = v.get<bool>();
    }

    // A sector line array must fit its movement panel, otherwise the
    // position-only scheme has no valid start.
    const bool wants_fa_ma =
        std::find(config.schemes.begin(), config.schemes.end(), SchemeKind::FaMa) !=
        config.schemes.end();
    if (wants_fa_ma) {
        const int head = (config.array.total_antennas() + 2) / 3;
        const double span = (head - 1) * lambda_m / 2.0;
        if (span > config.array.sector_panel) {
            throw ConfigError("array.sector_panel_lambda too small for the sector line array");
        }
    }
    return config;
}

ExperimentConfig load_config(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw ConfigError("cannot open config file: " + path);
    }
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return parse_config(buffer.str());
}

std::string canonical_config(const ExperimentConfig& config) {
    json root;
    root["name"] = config.name;
    root["frequency_hz"] = config.frequency_hz;
    root["noise_var_w"] = config.noise_var;
    root["rcs_m2"] = config.rcs_m2;
    root["snapshots"] = config.snapshots;
    root["array"] = {{"surfaces", config.array.surfaces},
                     {"antennas_per_surface", config.array.antennas_per},
                     {"site_side_m", config.array.site.side},
                     {"min_spacing_m", config.array.cons.min_spacing},
                     {"sector_panel_m", config.array.sector_panel}};
    root["regions"] = json::array();
    for (const RegionSpec& r : config.regions) {
        root["regions"].push_back({{"bearing_deg", r.bearing_deg},
                                   {"range_m", r.range_m},
                                   {"radius_m", r.radius_m},
                                   {"subregions", r.subregions}});
    }
    root["power_dbm"] = config.power_dbm;
    root["reference_power_dbm"] = config.reference_power_dbm;
    root["pso"] = {{"particles", config.pso.particles},
                   {"iterations", config.pso.iterations},
                   {"inertia", config.pso.inertia},
                   {"cognitive", config.pso.cognitive},
                   {"social", config.pso.social},
                   {"use_updated_velocity", config.pso.use_updated_velocity}};
    if (config.pso.penalty) {
        root["pso"]["penalty"] = *config.pso.penalty;
    }
    root["schemes"] = json::array();
    for (SchemeKind s : config.schemes) root["schemes"].push_back(to_string(s));
    root["patterns"] = config.patterns;
    root["seeds"] = config.seeds;
    root["probe"] = config.probe_mode == ProbeMode::Ideal ? "ideal" : "gaussian";
    root["reoptimize_per_power"] = config.reoptimize_per_power;
    return root.dump();
}

std::uint64_t config_hash(const ExperimentConfig& config) {
    const std::string canon = canonical_config(config);
    std::uint64_t hash = 14695981039346656037ULL;
    for (unsigned char c : canon) {
        hash ^= static_cast<std::uint64_t>(c);
        hash *= 1099511628211ULL;
    }
    return hash;
}

PatternKind make_pattern(const std::string& name) {
    if (name == "directive") return DirectivePatternParams{};
    if (name == "isotropic") return HalfSpaceIsotropic{};
    throw ConfigError("unknown pattern '" + name + "'");
}

double dbm_to_watts(double dbm) {
    return std::pow(10.0, (dbm - 30.0) / 10.0);
}

SensingScenario build_scenario(const ExperimentConfig& config, double power_w) {
    SensingScenario scenario;
    for (const RegionSpec& spec : config.regions) {
        SensingRegion region;
        const double bearing = spec.bearing_deg * kPi / 180.0;
        region.center = spec.range_m * Eigen::Vector2d(std::cos(bearing), std::sin(bearing));
        region.radius = spec.radius_m;
        region.subregions = spec.subregions;
        scenario.regions.push_back(region);
    }
    scenario.targets = build_targets(scenario.regions, Eigen::Vector2d::Zero(),
                                     config.rcs_m2, config.array.lambda);
    scenario.noise_var = config.noise_var;
    scenario.probe_power = power_w;
    scenario.snapshots = config.snapshots;
    return scenario;
}

}  // namespace sixdma

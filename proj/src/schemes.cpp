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

#include "sixdma/schemes.hpp"

#include <algorithm>
#include <cmath>
#include <optional>
#include <stdexcept>

namespace sixdma {

namespace {

constexpr double kPi = 3.14159265358979323846;
constexpr double kTwoPi = 2.0 * kPi;

double bare_bound(const ArrayLayout& layout, const PatternKind& kind,
                  const std::vector<Target>& targets, const ProbeSignal& probe,
                  double noise_var, Wavelength lambda) {
    try {
        return crb_total(
            fisher_information(layout, kind, targets, probe, noise_var, lambda));
    } catch (const SingularFimError&) {
        return kUnidentifiableCrb;
    }
}

double median_of(std::vector<double> values) {
    std::sort(values.begin(), values.end());
    const std::size_t n = values.size();
    if (n % 2 == 1) return values[n / 2];
    return 0.5 * (values[n / 2 - 1] + values[n / 2]);
}

// In-plane antenna coordinates for the position-only scheme, surface-major:
// two entries (x, y) per antenna.
std::vector<LocalArray> decode_sector_offsets(const Eigen::VectorXd& s,
                                              const ArrayLayout& base) {
    std::vector<LocalArray> locals = base.locals;
    Eigen::Index d = 0;
    for (LocalArray& local : locals) {
        for (Eigen::Vector3d& offset : local.offsets) {
            offset = Eigen::Vector3d(s(d), s(d + 1), 0.0);
            d += 2;
        }
    }
    return locals;
}

int count_sector_spacing_violations(const std::vector<LocalArray>& locals,
                                    double min_spacing) {
    int count = 0;
    for (const LocalArray& local : locals) {
        const auto n = local.offsets.size();
        for (std::size_t i = 0; i < n; ++i) {
            for (std::size_t j = i + 1; j < n; ++j) {
                if ((local.offsets[i] - local.offsets[j]).norm() < min_spacing) ++count;
            }
        }
    }
    return count;
}

// Feasible incumbent for the pose swarm: surfaces on stacked horizontal
// rings inside the site, boresights radially outward. Empty when the site
// cannot hold the surfaces at the required spacing.
std::optional<Eigen::VectorXd> ring_template(const ArraySpec& spec) {
    if (spec.surfaces < 1) return std::nullopt;
    const double half = spec.site.half();
    const double radius = 0.8 * half;
    const double d = spec.cons.min_spacing;
    if (!(radius > 0.0) || !(d > 0.0)) return std::nullopt;

    long capacity = 1;
    if (d < 2.0 * radius) {
        capacity = std::max(
            1L, static_cast<long>(std::floor(kPi / std::asin(d / (2.0 * radius)))));
    }
    const long total = spec.surfaces;
    const long rings = (total + capacity - 1) / capacity;
    if (static_cast<double>(rings - 1) * d > spec.site.side) return std::nullopt;

    ArrayLayout layout;
    long placed = 0;
    for (long k = 0; k < rings; ++k) {
        const long count = std::min(capacity, total - placed);
        const double z = (static_cast<double>(k) - 0.5 * static_cast<double>(rings - 1)) * d;
        const double stagger = kPi * static_cast<double>(k) / static_cast<double>(capacity);
        for (long j = 0; j < count; ++j, ++placed) {
            const double psi =
                stagger + kTwoPi * static_cast<double>(j) / static_cast<double>(count);
            SurfacePose pose;
            pose.position =
                Eigen::Vector3d(radius * std::cos(psi), radius * std::sin(psi), z);
            pose.rotation =
                Eigen::Vector3d(canonicalize_angle(psi - kPi / 2.0), kPi / 2.0, 0.0);
            layout.poses.push_back(pose);
            layout.locals.push_back(make_ula(spec.antennas_per, spec.lambda.meters / 2.0));
        }
    }
    Eigen::VectorXd encoded = encode_poses(layout);
    if (!penalty_set(encoded, layout.locals, spec.cons).empty()) return std::nullopt;
    return encoded;
}

}  // namespace

std::string to_string(SchemeKind kind) {
    switch (kind) {
        case SchemeKind::SixDma: return "6dma";
        case SchemeKind::Fpa: return "fpa";
        case SchemeKind::FaMa: return "fa-ma";
    }
    return "unknown";
}

std::optional<SchemeKind> parse_scheme(std::string_view name) {
    if (name == "6dma") return SchemeKind::SixDma;
    if (name == "fpa") return SchemeKind::Fpa;
    if (name == "fa-ma") return SchemeKind::FaMa;
    return std::nullopt;
}

ArrayLayout build_fpa(int total_antennas, Wavelength lambda, const SiteSpace& site) {
    if (total_antennas < 3) {
        throw std::invalid_argument("build_fpa: need at least three antennas");
    }
    if (!(lambda.meters > 0.0) || !(site.side > 0.0)) {
        throw std::invalid_argument("build_fpa: wavelength and site side must be positive");
    }
    const int head = (total_antennas + 2) / 3;
    const int counts[3] = {head, head, total_antennas - 2 * head};
    if (counts[2] < 1) {
        throw std::invalid_argument("build_fpa: antenna count cannot fill three sectors");
    }

    const double azimuths[3] = {kPi / 2.0, 7.0 * kPi / 6.0, 11.0 * kPi / 6.0};
    const double radius = site.side / 4.0;

    ArrayLayout layout;
    for (int s = 0; s < 3; ++s) {
        const double psi = azimuths[s];
        SurfacePose pose;
        pose.position =
            radius * Eigen::Vector3d(std::cos(psi), std::sin(psi), 0.0);
        // Rotation (psi - pi/2, pi/2, 0) turns the local normal radially
        // outward and keeps the element line horizontal.
        pose.rotation =
            Eigen::Vector3d(canonicalize_angle(psi - kPi / 2.0), kPi / 2.0, 0.0);
        layout.poses.push_back(pose);
        layout.locals.push_back(make_ula(counts[s], lambda.meters / 2.0));
    }
    return layout;
}

SchemeRunResult optimize_6dma(const SensingScenario& scenario, const ArraySpec& spec,
                              const PatternKind& kind, const ProbeSignal& probe,
                              const PsoParams& params, std::uint64_t seed) {
    PoseProblem problem;
    problem.locals.assign(static_cast<std::size_t>(spec.surfaces),
                          make_ula(spec.antennas_per, spec.lambda.meters / 2.0));
    problem.site = spec.site;
    problem.cons = spec.cons;
    problem.kind = kind;
    problem.targets = scenario.targets;
    problem.probe = probe;
    problem.noise_var = scenario.noise_var;
    problem.lambda = spec.lambda;

    std::vector<Eigen::VectorXd> seeded;
    if (const std::optional<Eigen::VectorXd> incumbent = ring_template(spec)) {
        seeded.push_back(*incumbent);
    }
    const PoseOptimizeResult res = optimize_poses(problem, params, seed, seeded);
    return {res.layout, res.fitness, res.history, res.feasible, res.penalty_used};
}

SchemeRunResult evaluate_fpa(const SensingScenario& scenario, const ArraySpec& spec,
                             const PatternKind& kind, const ProbeSignal& probe) {
    SchemeRunResult result;
    result.layout = build_fpa(spec.total_antennas(), spec.lambda, spec.site);
    result.fitness = bare_bound(result.layout, kind, scenario.targets, probe,
                                scenario.noise_var, spec.lambda);
    result.history = {result.fitness};
    result.feasible =
        check_constraints(result.layout, spec.site, spec.cons).feasible();
    return result;
}

SchemeRunResult optimize_fa_ma(const SensingScenario& scenario, const ArraySpec& spec,
                               const PatternKind& kind, const ProbeSignal& probe,
                               const PsoParams& params, std::uint64_t seed) {
    const ArrayLayout base = build_fpa(spec.total_antennas(), spec.lambda, spec.site);
    const double panel_half = spec.sector_panel / 2.0;
    for (const LocalArray& local : base.locals) {
        for (const Eigen::Vector3d& offset : local.offsets) {
            if (std::abs(offset.x()) > panel_half || std::abs(offset.y()) > panel_half) {
                throw std::invalid_argument(
                    "optimize_fa_ma: sector panel too small for its line array");
            }
        }
    }

    if (params.iterations <= 0) {
        SchemeRunResult result;
        result.layout = base;
        result.fitness = bare_bound(base, kind, scenario.targets, probe,
                                    scenario.noise_var, spec.lambda);
        result.history = {result.fitness};
        result.feasible = true;
        return result;
    }
    params.validate();

    const double min_spacing = spec.lambda.meters / 2.0;
    const auto total = static_cast<std::size_t>(spec.total_antennas());
    std::vector<DimensionBounds> bounds(
        2 * total, DimensionBounds{-panel_half, panel_half, false, spec.sector_panel / 10.0});

    Eigen::VectorXd base_coords(static_cast<Eigen::Index>(2 * total));
    Eigen::Index d = 0;
    for (const LocalArray& local : base.locals) {
        for (const Eigen::Vector3d& offset : local.offsets) {
            base_coords(d) = offset.x();
            base_coords(d + 1) = offset.y();
            d += 2;
        }
    }

    const auto base_and_count = [&](const Eigen::VectorXd& s) -> std::pair<double, int> {
        ArrayLayout layout;
        layout.poses = base.poses;
        layout.locals = decode_sector_offsets(s, base);
        const double bound = bare_bound(layout, kind, scenario.targets, probe,
                                        scenario.noise_var, spec.lambda);
        return {bound, count_sector_spacing_violations(layout.locals, min_spacing)};
    };

    SwarmState state = init_swarm(bounds, params, seed, {base_coords});
    double tau = 0.0;
    if (params.penalty) {
        tau = *params.penalty;
    } else {
        std::vector<double> identifiable;
        for (const Particle& p : state.particles) {
            const auto [bound, count] = base_and_count(p.position);
            if (bound < kUnidentifiableCrb) identifiable.push_back(bound);
        }
        tau = identifiable.empty() ? 1.0e3 : 1.0e3 * median_of(std::move(identifiable));
    }

    const Objective objective = [&base_and_count, tau](const Eigen::VectorXd& s) {
        const auto [bound, count] = base_and_count(s);
        return bound + tau * static_cast<double>(count);
    };

    const SwarmResult best = drive_swarm(state, objective, bounds, params);

    SchemeRunResult result;
    result.layout.poses = base.poses;
    result.layout.locals = decode_sector_offsets(best.best_position, base);
    result.fitness = best.best_fitness;
    result.history = best.history;
    result.feasible =
        count_sector_spacing_violations(result.layout.locals, min_spacing) == 0;
    result.penalty_used = tau;
    return result;
}

SchemeRunResult run_scheme(SchemeKind scheme, const SensingScenario& scenario,
                           const ArraySpec& spec, const PatternKind& kind,
                           const ProbeSignal& probe, const PsoParams& params,
                           std::uint64_t seed) {
    switch (scheme) {
        case SchemeKind::SixDma:
            return optimize_6dma(scenario, spec, kind, probe, params, seed);
        case SchemeKind::Fpa:
            return evaluate_fpa(scenario, spec, kind, probe);
        case SchemeKind::FaMa:
            return optimize_fa_ma(scenario, spec, kind, probe, params, seed);
    }
    throw std::logic_error("run_scheme: unhandled scheme");
}

}  // namespace sixdma

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

#ifndef SIXDMA_PSO_HPP
#define SIXDMA_PSO_HPP

#include <cstdint>
#include <functional>
#include <optional>
#include <random>
#include <utility>
#include <vector>

#include <Eigen/Dense>

#include "sixdma/estimation.hpp"
#include "sixdma/geometry.hpp"
#include "sixdma/pattern.hpp"
#include "sixdma/scenario.hpp"

namespace sixdma {

struct PsoParams {
    int particles = 40;
    int iterations = 60;
    double inertia = 0.729;     // constriction defaults
    double cognitive = 1.49445;
    double social = 1.49445;
    /// Penalty weight per violating pair (rad^2). Absent means auto-calibrate
    /// to 1e3 times the median identifiable fitness of the initial swarm.
    std::optional<double> penalty;
    /// Position update uses the freshly computed velocity; switchable for
    /// ablation against the v^(t) ordering.
    bool use_updated_velocity = true;

    void validate() const;
};

/// Per-dimension search box. Wrapped dimensions fold modulo (hi - lo)
/// instead of clamping.
struct DimensionBounds {
    double lo = 0.0;
    double hi = 0.0;
    bool wrap = false;
    double velocity_init = 0.0;  // |v0| bound
};

struct Particle {
    Eigen::VectorXd position;
    Eigen::VectorXd velocity;
    Eigen::VectorXd best_position;
    double best_fitness = 0.0;
};

struct SwarmState {
    std::vector<Particle> particles;
    Eigen::VectorXd best_position;
    double best_fitness = 0.0;
    int iteration = 0;
    std::mt19937_64 rng;
};

using Objective = std::function<double(const Eigen::VectorXd&)>;

/// Clamp non-wrapped components to their box, fold wrapped components into
/// [lo, hi).
Eigen::VectorXd project_position(const Eigen::VectorXd& s,
                                 const std::vector<DimensionBounds>& bounds);

/// Draw positions and velocities for all particles. The first
/// `seeded_positions.size()` particles take the given positions (projected)
/// instead of random ones. Fitness fields are left unset.
SwarmState init_swarm(const std::vector<DimensionBounds>& bounds, const PsoParams& params,
                      std::uint64_t seed,
                      const std::vector<Eigen::VectorXd>& seeded_positions = {});

/// One synchronous iteration: velocity and position updates against the
/// iteration-start global best, then fitness evaluation, then best-update
/// reduction in particle-index order.
void step_swarm(SwarmState& state, const Objective& objective,
                const std::vector<DimensionBounds>& bounds, const PsoParams& params);

struct SwarmResult {
    Eigen::VectorXd best_position;
    double best_fitness = 0.0;
    std::vector<double> history;  // iterations + 1 entries, non-increasing
};

/// Evaluate the initial swarm of a prepared state, then run
/// `params.iterations` steps.
SwarmResult drive_swarm(SwarmState& state, const Objective& objective,
                        const std::vector<DimensionBounds>& bounds,
                        const PsoParams& params);

/// Initialize, evaluate, and run `params.iterations` steps.
SwarmResult run_swarm(const Objective& objective, const std::vector<DimensionBounds>& bounds,
                      const PsoParams& params, std::uint64_t seed,
                      const std::vector<Eigen::VectorXd>& seeded_positions = {});

/// Everything a pose-vector fitness evaluation needs.
struct PoseProblem {
    std::vector<LocalArray> locals;  // per-surface element geometry, fixed
    SiteSpace site;
    MovementConstraints cons;
    PatternKind kind;
    std::vector<Target> targets;
    ProbeSignal probe;
    double noise_var = 0.0;
    Wavelength lambda;
};

/// Pose vector layout: positions of all surfaces first (3B entries), then
/// rotations (3B entries).
Eigen::VectorXd encode_poses(const ArrayLayout& layout);

/// Inverse of encode_poses over the given per-surface element geometry;
/// rotation entries are canonicalized to [0, 2pi).
ArrayLayout decode_poses(const Eigen::VectorXd& s, const std::vector<LocalArray>& locals);

/// Violating pairs of the movement constraints for a pose vector: mutual
/// reflection, rearward blockage, and minimum surface spacing. The box is
/// excluded (projection keeps it satisfied).
std::vector<ConstraintViolation> penalty_set(const Eigen::VectorXd& s,
                                             const std::vector<LocalArray>& locals,
                                             const MovementConstraints& cons);

/// (bound, violation count): total DoA bound, or the unidentifiable sentinel
/// when the Fisher matrix is singular, plus the penalty_set cardinality.
std::pair<double, int> pose_base_and_count(const PoseProblem& problem,
                                           const Eigen::VectorXd& s);

/// bound + penalty * count.
double pose_fitness(const PoseProblem& problem, const Eigen::VectorXd& s, double penalty);

/// Search box for a pose vector over B surfaces: positions in the site cube,
/// rotations wrapped on [0, 2pi).
std::vector<DimensionBounds> pose_bounds(std::size_t surfaces, const SiteSpace& site);

struct PoseOptimizeResult {
    ArrayLayout layout;
    double fitness = 0.0;
    std::vector<double> history;
    bool feasible = false;
    double penalty_used = 0.0;
};

/// Penalty-method swarm search over surface poses. Auto-calibrates the
/// penalty weight from the initial swarm unless params.penalty is set.
PoseOptimizeResult optimize_poses(const PoseProblem& problem, const PsoParams& params,
                                  std::uint64_t seed,
                                  const std::vector<Eigen::VectorXd>& seeded_positions = {});

}  // namespace sixdma

#endif  // SIXDMA_PSO_HPP

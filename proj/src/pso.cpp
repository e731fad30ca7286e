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

#include "sixdma/pso.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace sixdma {

namespace {

constexpr double kPi = 3.14159265358979323846;
constexpr double kTwoPi = 2.0 * kPi;

double draw_uniform(std::mt19937_64& rng, double lo, double hi) {
    if (!(hi > lo)) return lo;
    std::uniform_real_distribution<double> dist(lo, hi);
    return dist(rng);
}

double median_of(std::vector<double> values) {
    std::sort(values.begin(), values.end());
    const std::size_t n = values.size();
    if (n % 2 == 1) return values[n / 2];
    return 0.5 * (values[n / 2 - 1] + values[n / 2]);
}

}  // namespace

SwarmResult drive_swarm(SwarmState& state, const Objective& objective,
                        const std::vector<DimensionBounds>& bounds,
                        const PsoParams& params) {
    for (Particle& p : state.particles) {
        p.best_fitness = objective(p.position);
        p.best_position = p.position;
    }
    state.best_fitness = std::numeric_limits<double>::infinity();
    for (const Particle& p : state.particles) {
        if (p.best_fitness < state.best_fitness) {
            state.best_fitness = p.best_fitness;
            state.best_position = p.best_position;
        }
    }

    SwarmResult result;
    result.history.reserve(static_cast<std::size_t>(params.iterations) + 1);
    result.history.push_back(state.best_fitness);
    for (int t = 0; t < params.iterations; ++t) {
        step_swarm(state, objective, bounds, params);
        result.history.push_back(state.best_fitness);
    }
    result.best_position = state.best_position;
    result.best_fitness = state.best_fitness;
    return result;
}

void PsoParams::validate() const {
    if (particles < 1) throw std::invalid_argument("PsoParams: need at least one particle");
    if (iterations < 1) throw std::invalid_argument("PsoParams: need at least one iteration");
    if (!(inertia > 0.0 && inertia <= 1.0)) {
        throw std::invalid_argument("PsoParams: inertia must lie in (0, 1]");
    }
    if (!(cognitive > 0.0) || !(social > 0.0)) {
        throw std::invalid_argument("PsoParams: acceleration coefficients must be positive");
    }
    if (penalty && !(*penalty > 0.0)) {
        throw std::invalid_argument("PsoParams: penalty weight must be positive");
    }
}

Eigen::VectorXd project_position(const Eigen::VectorXd& s,
                                 const std::vector<DimensionBounds>& bounds) {
    if (static_cast<std::size_t>(s.size()) != bounds.size()) {
        throw std::invalid_argument("project_position: dimension mismatch");
    }
    Eigen::VectorXd out(s.size());
    for (Eigen::Index d = 0; d < s.size(); ++d) {
        const DimensionBounds& b = bounds[static_cast<std::size_t>(d)];
        if (b.wrap) {
            const double width = b.hi - b.lo;
            double x = s(d) - b.lo;
            x -= width * std::floor(x / width);
            if (x >= width || x < 0.0) x = 0.0;  // folds exact multiples
            out(d) = b.lo + x;
        } else {
            out(d) = std::clamp(s(d), b.lo, b.hi);
        }
    }
    return out;
}

SwarmState init_swarm(const std::vector<DimensionBounds>& bounds, const PsoParams& params,
                      std::uint64_t seed,
                      const std::vector<Eigen::VectorXd>& seeded_positions) {
    params.validate();
    if (bounds.empty()) throw std::invalid_argument("init_swarm: empty search space");
    if (seeded_positions.size() > static_cast<std::size_t>(params.particles)) {
        throw std::invalid_argument("init_swarm: more seeded positions than particles");
    }
    const auto dims = static_cast<Eigen::Index>(bounds.size());
    for (const Eigen::VectorXd& s : seeded_positions) {
        if (s.size() != dims) {
            throw std::invalid_argument("init_swarm: seeded position dimension mismatch");
        }
    }

    SwarmState state;
    state.rng.seed(seed);
    state.iteration = 0;
    state.particles.resize(static_cast<std::size_t>(params.particles));
    for (std::size_t p = 0; p < state.particles.size(); ++p) {
        Particle& particle = state.particles[p];
        particle.position.resize(dims);
        particle.velocity.resize(dims);
        if (p < seeded_positions.size()) {
            particle.position = project_position(seeded_positions[p], bounds);
        } else {
            for (Eigen::Index d = 0; d < dims; ++d) {
                const DimensionBounds& b = bounds[static_cast<std::size_t>(d)];
                particle.position(d) = draw_uniform(state.rng, b.lo, b.hi);
            }
        }
        for (Eigen::Index d = 0; d < dims; ++d) {
            const DimensionBounds& b = bounds[static_cast<std::size_t>(d)];
            particle.velocity(d) =
                b.velocity_init > 0.0
                    ? draw_uniform(state.rng, -b.velocity_init, b.velocity_init)
                    : 0.0;
        }
        particle.best_position = particle.position;
        particle.best_fitness = std::numeric_limits<double>::infinity();
    }
    state.best_position = state.particles.front().position;
    state.best_fitness = std::numeric_limits<double>::infinity();
    return state;
}

void step_swarm(SwarmState& state, const Objective& objective,
                const std::vector<DimensionBounds>& bounds, const PsoParams& params) {
    const std::size_t count = state.particles.size();
    // All stochastic draws happen up front in particle-index order, so the
    // stream is identical no matter how evaluations are scheduled.
    std::vector<double> tau1(count), tau2(count);
    for (std::size_t p = 0; p < count; ++p) {
        tau1[p] = draw_uniform(state.rng, 0.0, 1.0);
        tau2[p] = draw_uniform(state.rng, 0.0, 1.0);
    }

    const Eigen::VectorXd gbest = state.best_position;
    for (std::size_t p = 0; p < count; ++p) {
        Particle& particle = state.particles[p];
        const Eigen::VectorXd next_velocity =
            params.inertia * particle.velocity +
            params.cognitive * tau1[p] * (particle.best_position - particle.position) +
            params.social * tau2[p] * (gbest - particle.position);
        const Eigen::VectorXd& move =
            params.use_updated_velocity ? next_velocity : particle.velocity;
        particle.position = project_position(particle.position + move, bounds);
        particle.velocity = next_velocity;
    }

    std::vector<double> fitness(count);
    for (std::size_t p = 0; p < count; ++p) {
        fitness[p] = objective(state.particles[p].position);
    }

    for (std::size_t p = 0; p < count; ++p) {
        Particle& particle = state.particles[p];
        if (fitness[p] < particle.best_fitness) {
            particle.best_fitness = fitness[p];
            particle.best_position = particle.position;
        }
        if (particle.best_fitness < state.best_fitness) {
            state.best_fitness = particle.best_fitness;
            state.best_position = particle.best_position;
        }
    }
    ++state.iteration;
}

SwarmResult run_swarm(const Objective& objective, const std::vector<DimensionBounds>& bounds,
                      const PsoParams& params, std::uint64_t seed,
                      const std::vector<Eigen::VectorXd>& seeded_positions) {
    SwarmState state = init_swarm(bounds, params, seed, seeded_positions);
    return drive_swarm(state, objective, bounds, params);
}

Eigen::VectorXd encode_poses(const ArrayLayout& layout) {
    const auto b = static_cast<Eigen::Index>(layout.surface_count());
    Eigen::VectorXd s(6 * b);
    for (Eigen::Index i = 0; i < b; ++i) {
        s.segment<3>(3 * i) = layout.poses[static_cast<std::size_t>(i)].position;
        s.segment<3>(3 * b + 3 * i) = layout.poses[static_cast<std::size_t>(i)].rotation;
    }
    return s;
}

ArrayLayout decode_poses(const Eigen::VectorXd& s, const std::vector<LocalArray>& locals) {
    const auto b = static_cast<Eigen::Index>(locals.size());
    if (b < 1 || s.size() != 6 * b) {
        throw std::invalid_argument("decode_poses: pose vector size does not match surface count");
    }
    ArrayLayout layout;
    layout.locals = locals;
    layout.poses.resize(static_cast<std::size_t>(b));
    for (Eigen::Index i = 0; i < b; ++i) {
        SurfacePose& pose = layout.poses[static_cast<std::size_t>(i)];
        pose.position = s.segment<3>(3 * i);
        const Eigen::Vector3d u = s.segment<3>(3 * b + 3 * i);
        pose.rotation =
            Eigen::Vector3d(canonicalize_angle(u.x()), canonicalize_angle(u.y()),
                            canonicalize_angle(u.z()));
    }
    return layout;
}

std::vector<ConstraintViolation> penalty_set(const Eigen::VectorXd& s,
                                             const std::vector<LocalArray>& locals,
                                             const MovementConstraints& cons) {
    const auto b = static_cast<Eigen::Index>(locals.size());
    if (b < 1 || s.size() != 6 * b) {
        throw std::invalid_argument("penalty_set: pose vector size does not match surface count");
    }
    std::vector<Eigen::Vector3d> centers(static_cast<std::size_t>(b));
    std::vector<Eigen::Vector3d> normals(static_cast<std::size_t>(b));
    for (Eigen::Index i = 0; i < b; ++i) {
        centers[static_cast<std::size_t>(i)] = s.segment<3>(3 * i);
        normals[static_cast<std::size_t>(i)] =
            rotation_matrix(s.segment<3>(3 * b + 3 * i)) *
            locals[static_cast<std::size_t>(i)].normal;
    }

    std::vector<ConstraintViolation> out;
    for (int i = 0; i < b; ++i) {
        const Eigen::Vector3d& qi = centers[static_cast<std::size_t>(i)];
        const Eigen::Vector3d& ni = normals[static_cast<std::size_t>(i)];
        const double front = ni.dot(qi);
        if (front < 0.0) out.push_back({ConstraintKind::Blockage, i, -1, -front});
        for (int j = 0; j < b; ++j) {
            if (j == i) continue;
            const Eigen::Vector3d& qj = centers[static_cast<std::size_t>(j)];
            const double ahead = ni.dot(qj - qi);
            if (ahead > 0.0) out.push_back({ConstraintKind::Reflection, i, j, ahead});
            if (j > i) {
                const double dist = (qi - qj).norm();
                if (dist < cons.min_spacing) {
                    out.push_back({ConstraintKind::MinSpacing, i, j, cons.min_spacing - dist});
                }
            }
        }
    }
    return out;
}

std::pair<double, int> pose_base_and_count(const PoseProblem& problem,
                                           const Eigen::VectorXd& s) {
    const ArrayLayout layout = decode_poses(s, problem.locals);
    const std::vector<ConstraintViolation> violations =
        penalty_set(s, problem.locals, problem.cons);
    double base = kUnidentifiableCrb;
    try {
        const Eigen::MatrixXd fim = fisher_information(
            layout, problem.kind, problem.targets, problem.probe, problem.noise_var,
            problem.lambda);
        base = crb_total(fim);
    } catch (const SingularFimError&) {
        base = kUnidentifiableCrb;
    }
    return {base, static_cast<int>(violations.size())};
}

double pose_fitness(const PoseProblem& problem, const Eigen::VectorXd& s, double penalty) {
    const auto [base, count] = pose_base_and_count(problem, s);
    return base + penalty * static_cast<double>(count);
}

std::vector<DimensionBounds> pose_bounds(std::size_t surfaces, const SiteSpace& site) {
    if (surfaces < 1) throw std::invalid_argument("pose_bounds: need at least one surface");
    std::vector<DimensionBounds> bounds;
    bounds.reserve(6 * surfaces);
    for (std::size_t i = 0; i < 3 * surfaces; ++i) {
        bounds.push_back({-site.half(), site.half(), false, site.side / 10.0});
    }
    for (std::size_t i = 0; i < 3 * surfaces; ++i) {
        bounds.push_back({0.0, kTwoPi, true, kPi / 10.0});
    }
    return bounds;
}

PoseOptimizeResult optimize_poses(const PoseProblem& problem, const PsoParams& params,
                                  std::uint64_t seed,
                                  const std::vector<Eigen::VectorXd>& seeded_positions) {
    params.validate();
    const std::vector<DimensionBounds> bounds = pose_bounds(problem.locals.size(), problem.site);
    SwarmState state = init_swarm(bounds, params, seed, seeded_positions);

    double tau = 0.0;
    if (params.penalty) {
        tau = *params.penalty;
    } else {
        // Scale the per-violation weight off the identifiable part of the
        // initial swarm so penalties dominate any reachable bound.
        std::vector<double> identifiable;
        for (const Particle& p : state.particles) {
            const auto [base, count] = pose_base_and_count(problem, p.position);
            if (base < kUnidentifiableCrb) identifiable.push_back(base);
        }
        tau = identifiable.empty() ? 1.0e3 : 1.0e3 * median_of(std::move(identifiable));
    }

    const Objective objective = [&problem, tau](const Eigen::VectorXd& s) {
        return pose_fitness(problem, s, tau);
    };
    const SwarmResult swarm = drive_swarm(state, objective, bounds, params);

    PoseOptimizeResult result;
    result.layout = decode_poses(swarm.best_position, problem.locals);
    result.fitness = swarm.best_fitness;
    result.history = swarm.history;
    result.feasible =
        penalty_set(swarm.best_position, problem.locals, problem.cons).empty();
    result.penalty_used = tau;
    return result;
}

}  // namespace sixdma

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
#include <cmath>
#include <limits>
#include <random>
#include <set>
#include <tuple>
#include <vector>

#include "doctest.h"
#include "sixdma/pso.hpp"

namespace {

constexpr double kPi = 3.14159265358979323846;
const sixdma::Wavelength kLambda{0.125};

std::vector<sixdma::DimensionBounds> box_bounds(int dims, double half, double vinit) {
    return std::vector<sixdma::DimensionBounds>(
        static_cast<std::size_t>(dims),
        sixdma::DimensionBounds{-half, half, false, vinit});
}

double sphere(const Eigen::VectorXd& s) { return s.squaredNorm(); }

// One-surface, one-target problem small enough for fast swarm tests.
sixdma::PoseProblem tiny_problem() {
    sixdma::PoseProblem problem;
    problem.locals = {sixdma::make_ula(2, kLambda.meters / 2.0)};
    problem.site = sixdma::SiteSpace{0.6};
    problem.cons = sixdma::MovementConstraints{0.15088834764831845};
    problem.kind = sixdma::HalfSpaceIsotropic{};
    problem.targets = {sixdma::Target::make(0.3, 25.0, {1e-4, 0.0})};
    problem.probe = sixdma::make_probe_ideal(1.0, 8, 2);
    problem.noise_var = 1e-9;
    problem.lambda = kLambda;
    return problem;
}

// Pose with the element line horizontal, normal up, bearing 0.3 in view.
Eigen::VectorXd identifiable_pose() {
    Eigen::VectorXd s(6);
    s << 0.1, 0.0, 0.0, 0.0, 0.0, 0.0;
    return s;
}

using ViolationKey = std::tuple<int, int, int>;

std::set<ViolationKey> keys_of(const std::vector<sixdma::ConstraintViolation>& vs,
                               bool drop_box) {
    std::set<ViolationKey> keys;
    for (const auto& v : vs) {
        if (drop_box && v.kind == sixdma::ConstraintKind::Box) continue;
        keys.insert({static_cast<int>(v.kind), v.i, v.j});
    }
    return keys;
}

}  // namespace

TEST_SUITE("pso") {

TEST_CASE("parameter validation rejects degenerate settings") {
    sixdma::PsoParams params;
    CHECK_NOTHROW(params.validate());

    sixdma::PsoParams bad = params;
    bad.particles = 0;
    CHECK_THROWS_AS(bad.validate(), std::invalid_argument);

    bad = params;
    bad.iterations = 0;
    CHECK_THROWS_AS(bad.validate(), std::invalid_argument);

    bad = params;
    bad.inertia = 0.0;
    CHECK_THROWS_AS(bad.validate(), std::invalid_argument);
    bad.inertia = 1.5;
    CHECK_THROWS_AS(bad.validate(), std::invalid_argument);

    bad = params;
    bad.cognitive = 0.0;
    CHECK_THROWS_AS(bad.validate(), std::invalid_argument);

    bad = params;
    bad.social = -1.0;
    CHECK_THROWS_AS(bad.validate(), std::invalid_argument);

    bad = params;
    bad.penalty = 0.0;
    CHECK_THROWS_AS(bad.validate(), std::invalid_argument);
}

TEST_CASE("projection clamps boxed dimensions and folds wrapped ones") {
    std::vector<sixdma::DimensionBounds> bounds = {
        {-0.3, 0.3, false, 0.0},
        {0.0, 2.0 * kPi, true, 0.0},
    };
    Eigen::VectorXd s(2);

    s << 0.4, 0.5;
    Eigen::VectorXd p = sixdma::project_position(s, bounds);
    CHECK(p(0) == 0.3);
    CHECK(p(1) == 0.5);

    s << -0.31, 2.0 * kPi + 0.1;
    p = sixdma::project_position(s, bounds);
    CHECK(p(0) == -0.3);
    CHECK(p(1) == doctest::Approx(0.1).epsilon(1e-12));

    s << 0.0, -0.1;
    p = sixdma::project_position(s, bounds);
    CHECK(p(1) == doctest::Approx(2.0 * kPi - 0.1).epsilon(1e-12));

    s << 0.0, 2.0 * kPi;
    p = sixdma::project_position(s, bounds);
    CHECK(p(1) == 0.0);

    Eigen::VectorXd wrong(3);
    wrong.setZero();
    CHECK_THROWS_AS(sixdma::project_position(wrong, bounds), std::invalid_argument);
}

TEST_CASE("zero acceleration gives ballistic motion") {
    // step_swarm applies the parameters as-is, so the textbook kappa=1,
    // c1=c2=0 sanity case is observable directly.
    std::vector<sixdma::DimensionBounds> bounds = {{-10.0, 10.0, false, 0.0}};
    sixdma::PsoParams params;
    params.particles = 1;
    params.inertia = 1.0;
    params.cognitive = 0.0;
    params.social = 0.0;

    sixdma::SwarmState state;
    state.rng.seed(1);
    state.particles.resize(1);
    state.particles[0].position = Eigen::VectorXd::Zero(1);
    state.particles[0].velocity = Eigen::VectorXd::Ones(1);
    state.particles[0].best_position = Eigen::VectorXd::Zero(1);
    state.particles[0].best_fitness = std::numeric_limits<double>::infinity();
    state.best_position = Eigen::VectorXd::Zero(1);
    state.best_fitness = std::numeric_limits<double>::infinity();

    for (int t = 1; t <= 3; ++t) {
        sixdma::step_swarm(state, sphere, bounds, params);
        CHECK(state.particles[0].position(0) == doctest::Approx(double(t)).epsilon(1e-15));
        CHECK(state.particles[0].velocity(0) == 1.0);
    }
    CHECK(state.iteration == 3);
}

TEST_CASE("a converged particle is a fixed point of the update") {
    std::vector<sixdma::DimensionBounds> bounds = {{-10.0, 10.0, false, 0.0}};
    sixdma::PsoParams params;
    params.particles = 1;

    sixdma::SwarmState state;
    state.rng.seed(2);
    state.particles.resize(1);
    Eigen::VectorXd at(1);
    at << 1.5;
    state.particles[0].position = at;
    state.particles[0].velocity = Eigen::VectorXd::Zero(1);
    state.particles[0].best_position = at;
    state.particles[0].best_fitness = sphere(at);
    state.best_position = at;
    state.best_fitness = sphere(at);

    sixdma::step_swarm(state, sphere, bounds, params);
    CHECK(state.particles[0].position(0) == 1.5);
    CHECK(state.particles[0].velocity(0) == 0.0);
}

TEST_CASE("best-fitness history never increases") {
    const auto bounds = box_bounds(4, 5.0, 0.5);
    sixdma::PsoParams params;
    params.particles = 12;
    params.iterations = 25;
    for (std::uint64_t seed = 1; seed <= 20; ++seed) {
        const sixdma::SwarmResult res = sixdma::run_swarm(sphere, bounds, params, seed);
        REQUIRE(res.history.size() == 26);
        for (std::size_t t = 1; t < res.history.size(); ++t) {
            CHECK(res.history[t] <= res.history[t - 1]);
        }
        CHECK(res.best_fitness == res.history.back());
        CHECK(res.best_fitness == doctest::Approx(sphere(res.best_position)).epsilon(1e-12));
        CHECK(res.best_fitness < res.history.front());  // sphere always improves
    }
}

TEST_CASE("positions respect the search box after every step") {
    std::vector<sixdma::DimensionBounds> bounds = {
        {-1.0, 1.0, false, 0.5},
        {-2.0, 0.5, false, 0.5},
        {0.0, 2.0 * kPi, true, 0.3},
    };
    sixdma::PsoParams params;
    params.particles = 8;
    sixdma::SwarmState state = sixdma::init_swarm(bounds, params, 33);
    for (const auto& p : state.particles) {
        CHECK(p.position(0) >= -1.0);
        CHECK(p.position(0) <= 1.0);
        CHECK(p.position(2) >= 0.0);
        CHECK(p.position(2) < 2.0 * kPi);
        CHECK(std::abs(p.velocity(0)) <= 0.5);
        CHECK(std::abs(p.velocity(2)) <= 0.3);
    }
    while (state.iteration < 15) {
        sixdma::step_swarm(state, sphere, bounds, params);
        for (const auto& p : state.particles) {
            CHECK(p.position(0) >= -1.0);
            CHECK(p.position(0) <= 1.0);
            CHECK(p.position(1) >= -2.0);
            CHECK(p.position(1) <= 0.5);
            CHECK(p.position(2) >= 0.0);
            CHECK(p.position(2) < 2.0 * kPi);
        }
    }
}

TEST_CASE("runs are bit-reproducible for a fixed seed") {
    const auto bounds = box_bounds(3, 2.0, 0.2);
    sixdma::PsoParams params;
    params.particles = 10;
    params.iterations = 12;
    const auto a = sixdma::run_swarm(sphere, bounds, params, 77);
    const auto b = sixdma::run_swarm(sphere, bounds, params, 77);
    const auto c = sixdma::run_swarm(sphere, bounds, params, 78);
    CHECK((a.best_position - b.best_position).norm() == 0.0);
    CHECK(a.best_fitness == b.best_fitness);
    CHECK(a.history == b.history);
    CHECK((a.best_position - c.best_position).norm() > 0.0);
}

TEST_CASE("seeded positions occupy the first particles verbatim") {
    const auto bounds = box_bounds(2, 1.0, 0.1);
    sixdma::PsoParams params;
    params.particles = 5;
    Eigen::VectorXd inside(2), outside(2);
    inside << 0.25, -0.5;
    outside << 3.0, 0.0;  // projected onto the box
    const sixdma::SwarmState state =
        sixdma::init_swarm(bounds, params, 9, {inside, outside});
    CHECK((state.particles[0].position - inside).norm() == 0.0);
    CHECK(state.particles[1].position(0) == 1.0);
    CHECK(state.particles[1].position(1) == 0.0);

    CHECK_THROWS_AS(
        sixdma::init_swarm(bounds, params, 9,
                           {inside, inside, inside, inside, inside, inside}),
        std::invalid_argument);
    Eigen::VectorXd wrong(3);
    wrong.setZero();
    CHECK_THROWS_AS(sixdma::init_swarm(bounds, params, 9, {wrong}),
                    std::invalid_argument);
}

TEST_CASE("pose vector round trip preserves poses and canonicalizes angles") {
    sixdma::ArrayLayout layout;
    sixdma::SurfacePose a, b;
    a.position = Eigen::Vector3d(0.1, -0.2, 0.25);
    a.rotation = Eigen::Vector3d(7.0, -0.3, 0.5);  // out-of-range angles
    b.position = Eigen::Vector3d(-0.05, 0.0, 0.1);
    b.rotation = Eigen::Vector3d(0.0, kPi, 1.0);
    layout.poses = {a, b};
    layout.locals = {sixdma::make_ula(2, 0.0625), sixdma::make_ula(2, 0.0625)};

    const Eigen::VectorXd s = sixdma::encode_poses(layout);
    REQUIRE(s.size() == 12);
    CHECK(s(0) == 0.1);
    CHECK(s(6) == 7.0);  // encoding does not canonicalize

    const sixdma::ArrayLayout back = sixdma::decode_poses(s, layout.locals);
    CHECK((back.poses[0].position - a.position).norm() == 0.0);
    CHECK(back.poses[0].rotation.x() == doctest::Approx(7.0 - 2.0 * kPi).epsilon(1e-12));
    CHECK(back.poses[0].rotation.y() == doctest::Approx(2.0 * kPi - 0.3).epsilon(1e-12));
    CHECK(back.poses[1].rotation.y() == kPi);

    // Canonical layouts encode/decode as a fixed point.
    const Eigen::VectorXd s2 = sixdma::encode_poses(back);
    const sixdma::ArrayLayout twice = sixdma::decode_poses(s2, layout.locals);
    CHECK((sixdma::encode_poses(twice) - s2).norm() == 0.0);

    CHECK_THROWS_AS(sixdma::decode_poses(s, {sixdma::make_ula(2, 0.0625)}),
                    std::invalid_argument);
}

TEST_CASE("penalty set matches the full checker away from the box rule") {
    std::mt19937_64 rng(55);
    std::uniform_real_distribution<double> pos(-0.4, 0.4);
    std::uniform_real_distribution<double> ang(0.0, 2.0 * kPi);
    const sixdma::MovementConstraints cons{0.15088834764831845};
    const sixdma::SiteSpace site{0.6};

    for (int t = 0; t < 100; ++t) {
        const int b = 2 + static_cast<int>(t % 4);
        std::vector<sixdma::LocalArray> locals(
            static_cast<std::size_t>(b), sixdma::make_ula(2, kLambda.meters / 2.0));
        Eigen::VectorXd s(6 * b);
        for (int i = 0; i < 3 * b; ++i) s(i) = pos(rng);
        for (int i = 3 * b; i < 6 * b; ++i) s(i) = ang(rng);

        const auto from_penalty = sixdma::penalty_set(s, locals, cons);
        const auto full =
            sixdma::check_constraints(sixdma::decode_poses(s, locals), site, cons);
        CHECK(keys_of(from_penalty, false) == keys_of(full.violations, true));
        for (const auto& v : from_penalty) {
            CHECK(v.kind != sixdma::ConstraintKind::Box);
            CHECK(v.margin > 0.0);
        }
    }
}

TEST_CASE("pose fitness is the bare bound plus penalty times violations") {
    const sixdma::PoseProblem problem = tiny_problem();
    const Eigen::VectorXd good = identifiable_pose();

    const auto [base, count] = sixdma::pose_base_and_count(problem, good);
    CHECK(count == 0);
    CHECK(base < sixdma::kUnidentifiableCrb);
    const sixdma::ArrayLayout layout = sixdma::decode_poses(good, problem.locals);
    const double direct = sixdma::crb_total(sixdma::fisher_information(
        layout, problem.kind, problem.targets, problem.probe, problem.noise_var,
        problem.lambda));
    CHECK(base == direct);
    CHECK(sixdma::pose_fitness(problem, good, 123.0) == base);

    // Two coincident surfaces: spacing violation feeds the penalty term.
    sixdma::PoseProblem pair_problem = problem;
    pair_problem.locals.push_back(problem.locals[0]);
    pair_problem.probe = sixdma::make_probe_ideal(1.0, 8, 4);
    Eigen::VectorXd stacked(12);
    stacked << 0.1, 0.0, 0.0, 0.1, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0;
    const auto [base2, count2] = sixdma::pose_base_and_count(pair_problem, stacked);
    CHECK(count2 >= 1);
    CHECK(sixdma::pose_fitness(pair_problem, stacked, 0.0) == base2);
    CHECK(sixdma::pose_fitness(pair_problem, stacked, 10.0) ==
          doctest::Approx(base2 + 10.0 * count2).epsilon(1e-12));
}

TEST_CASE("unidentifiable poses earn the sentinel bound") {
    sixdma::PoseProblem problem = tiny_problem();
    // Surface turned away from the only target: zero channel, singular FIM.
    Eigen::VectorXd dark(6);
    dark << 0.0, 0.0, 0.0, 0.0, 0.0, kPi;
    const auto [base, count] = sixdma::pose_base_and_count(problem, dark);
    CHECK(base == sixdma::kUnidentifiableCrb);
    CHECK(sixdma::pose_fitness(problem, dark, 5.0) >= sixdma::kUnidentifiableCrb);
}

TEST_CASE("pose bounds cover positions then wrapped rotations") {
    const auto bounds = sixdma::pose_bounds(2, sixdma::SiteSpace{0.6});
    REQUIRE(bounds.size() == 12);
    for (std::size_t d = 0; d < 6; ++d) {
        CHECK(bounds[d].lo == -0.3);
        CHECK(bounds[d].hi == 0.3);
        CHECK(!bounds[d].wrap);
        CHECK(bounds[d].velocity_init == doctest::Approx(0.06));
    }
    for (std::size_t d = 6; d < 12; ++d) {
        CHECK(bounds[d].lo == 0.0);
        CHECK(bounds[d].hi == doctest::Approx(2.0 * kPi));
        CHECK(bounds[d].wrap);
        CHECK(bounds[d].velocity_init == doctest::Approx(kPi / 10.0));
    }
}

TEST_CASE("pose optimization improves on any seeded start") {
    const sixdma::PoseProblem problem = tiny_problem();
    sixdma::PsoParams params;
    params.particles = 10;
    params.iterations = 15;

    for (std::uint64_t seed = 1; seed <= 10; ++seed) {
        const Eigen::VectorXd start = identifiable_pose();
        const sixdma::PoseOptimizeResult res =
            sixdma::optimize_poses(problem, params, seed, {start});
        REQUIRE(res.history.size() == 16);
        for (std::size_t t = 1; t < res.history.size(); ++t) {
            CHECK(res.history[t] <= res.history[t - 1]);
        }
        const double start_fitness =
            sixdma::pose_fitness(problem, start, res.penalty_used);
        CHECK(res.fitness <= start_fitness);
        CHECK(res.fitness == res.history.back());

        const bool clean =
            sixdma::penalty_set(sixdma::encode_poses(res.layout), problem.locals,
                                problem.cons)
                .empty();
        CHECK(res.feasible == clean);
    }
}

TEST_CASE("pose optimization is reproducible and honors a fixed penalty") {
    const sixdma::PoseProblem problem = tiny_problem();
    sixdma::PsoParams params;
    params.particles = 8;
    params.iterations = 10;
    params.penalty = 42.0;

    const auto a = sixdma::optimize_poses(problem, params, 5);
    const auto b = sixdma::optimize_poses(problem, params, 5);
    CHECK(a.penalty_used == 42.0);
    CHECK((sixdma::encode_poses(a.layout) - sixdma::encode_poses(b.layout)).norm() ==
          0.0);
    CHECK(a.fitness == b.fitness);
    CHECK(a.history == b.history);
}

TEST_CASE("penalty auto-calibration follows the initial swarm median") {
    const sixdma::PoseProblem problem = tiny_problem();
    sixdma::PsoParams params;
    params.particles = 8;
    params.iterations = 2;

    const sixdma::PoseOptimizeResult res = sixdma::optimize_poses(problem, params, 13);

    const auto bounds = sixdma::pose_bounds(problem.locals.size(), problem.site);
    sixdma::SwarmState state = sixdma::init_swarm(bounds, params, 13);
    std::vector<double> identifiable;
    for (const auto& p : state.particles) {
        const auto [base, count] = sixdma::pose_base_and_count(problem, p.position);
        if (base < sixdma::kUnidentifiableCrb) identifiable.push_back(base);
    }
    REQUIRE(!identifiable.empty());
    std::sort(identifiable.begin(), identifiable.end());
    const std::size_t n = identifiable.size();
    const double median = n % 2 == 1
                              ? identifiable[n / 2]
                              : 0.5 * (identifiable[n / 2 - 1] + identifiable[n / 2]);
    CHECK(res.penalty_used == 1e3 * median);
}

}  // TEST_SUITE

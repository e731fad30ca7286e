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

#include <cmath>
#include <random>
#include <set>
#include <tuple>

#include "doctest.h"
#include "sixdma/geometry.hpp"

namespace {

constexpr double kPi = 3.14159265358979323846;

using sixdma::ArrayLayout;
using sixdma::ConstraintKind;
using sixdma::LocalArray;
using sixdma::MovementConstraints;
using sixdma::SiteSpace;
using sixdma::SurfacePose;

using ViolationKey = std::tuple<int, int, int>;  // kind, i, j

std::set<ViolationKey> violation_keys(const std::vector<sixdma::ConstraintViolation>& vs) {
    std::set<ViolationKey> keys;
    for (const auto& v : vs) keys.insert({static_cast<int>(v.kind), v.i, v.j});
    return keys;
}

ArrayLayout random_layout(std::mt19937_64& rng, int surfaces) {
    std::uniform_real_distribution<double> pos(-0.4, 0.4);
    std::uniform_real_distribution<double> ang(0.0, 2.0 * kPi);
    ArrayLayout layout;
    for (int i = 0; i < surfaces; ++i) {
        SurfacePose pose;
        pose.position = Eigen::Vector3d(pos(rng), pos(rng), pos(rng));
        pose.rotation = Eigen::Vector3d(ang(rng), ang(rng), ang(rng));
        layout.poses.push_back(pose);
        layout.locals.push_back(sixdma::make_ula(2, 0.0625));
    }
    return layout;
}

// Straight transcription of the placement rules, kept free of the library's
// loop structure.
std::set<ViolationKey> brute_force_keys(const ArrayLayout& layout, const SiteSpace& site,
                                        const MovementConstraints& cons) {
    std::set<ViolationKey> keys;
    const int b = layout.surface_count();
    for (int i = 0; i < b; ++i) {
        const Eigen::Matrix3d ri = sixdma::rotation_matrix(layout.poses[i].rotation);
        const Eigen::Vector3d ni = ri * layout.locals[i].normal;
        const Eigen::Vector3d qi = layout.poses[i].position;
        if (ni.dot(qi) < 0.0) keys.insert({static_cast<int>(ConstraintKind::Blockage), i, -1});
        if (std::abs(qi.x()) > site.half() || std::abs(qi.y()) > site.half() ||
            std::abs(qi.z()) > site.half()) {
            keys.insert({static_cast<int>(ConstraintKind::Box), i, -1});
        }
        for (int j = 0; j < b; ++j) {
            if (i == j) continue;
            const Eigen::Vector3d qj = layout.poses[j].position;
            if (ni.dot(qj - qi) > 0.0) {
                keys.insert({static_cast<int>(ConstraintKind::Reflection), i, j});
            }
            if (j > i && (qi - qj).norm() < cons.min_spacing) {
                keys.insert({static_cast<int>(ConstraintKind::MinSpacing), i, j});
            }
        }
    }
    return keys;
}

}  // namespace

TEST_SUITE("geometry") {

TEST_CASE("rotation at zero angles is the identity") {
    const Eigen::Matrix3d r = sixdma::rotation_matrix(Eigen::Vector3d::Zero());
    CHECK((r - Eigen::Matrix3d::Identity()).norm() == doctest::Approx(0.0));
}

TEST_CASE("rotation about z by a quarter turn") {
    const Eigen::Matrix3d r = sixdma::rotation_matrix({0.0, 0.0, kPi / 2.0});
    Eigen::Matrix3d want;
    want << 0, 1, 0, -1, 0, 0, 0, 0, 1;
    CHECK((r - want).norm() < 1e-15);
}

TEST_CASE("random rotations are proper") {
    std::mt19937_64 rng(11);
    std::uniform_real_distribution<double> ang(0.0, 2.0 * kPi);
    double worst_orth = 0.0, worst_det = 0.0;
    for (int t = 0; t < 1000; ++t) {
        const Eigen::Matrix3d r =
            sixdma::rotation_matrix({ang(rng), ang(rng), ang(rng)});
        worst_orth = std::max(
            worst_orth, (r.transpose() * r - Eigen::Matrix3d::Identity()).norm());
        worst_det = std::max(worst_det, std::abs(r.determinant() - 1.0));
    }
    CHECK(worst_orth < 1e-12);
    CHECK(worst_det < 1e-12);
}

TEST_CASE("canonicalize_angle wraps into [0, 2pi)") {
    CHECK(sixdma::canonicalize_angle(0.0) == 0.0);
    CHECK(sixdma::canonicalize_angle(2.0 * kPi) == 0.0);
    CHECK(sixdma::canonicalize_angle(2.0 * kPi + 0.1) == doctest::Approx(0.1));
    CHECK(sixdma::canonicalize_angle(-0.1) == doctest::Approx(2.0 * kPi - 0.1));
    CHECK(sixdma::canonicalize_angle(7.0) == doctest::Approx(7.0 - 2.0 * kPi));
}

TEST_CASE("make_ula centers the element line") {
    const LocalArray two = sixdma::make_ula(2, 0.0625);
    REQUIRE(two.antenna_count() == 2);
    CHECK(two.offsets[0].x() == doctest::Approx(-0.03125));
    CHECK(two.offsets[1].x() == doctest::Approx(0.03125));
    CHECK(two.offsets[0].y() == 0.0);
    CHECK(two.normal == Eigen::Vector3d::UnitZ());

    const LocalArray one = sixdma::make_ula(1, 0.0625);
    CHECK(one.offsets[0].norm() == 0.0);

    const LocalArray three = sixdma::make_ula(3, 0.1);
    CHECK(three.offsets[0].x() == doctest::Approx(-0.1));
    CHECK(three.offsets[1].x() == doctest::Approx(0.0));
    CHECK(three.offsets[2].x() == doctest::Approx(0.1));
}

TEST_CASE("global antenna positions compose pose and offsets") {
    SurfacePose pose;
    pose.position = Eigen::Vector3d(0.1, -0.2, 0.05);
    pose.rotation = Eigen::Vector3d(0.3, 1.1, 5.2);
    const LocalArray local = sixdma::make_ula(2, 0.0625);
    const auto points = sixdma::global_antenna_positions(pose, local);
    REQUIRE(points.size() == 2);
    const Eigen::Matrix3d r = sixdma::rotation_matrix(pose.rotation);
    for (int n = 0; n < 2; ++n) {
        const Eigen::Vector3d want = pose.position + r * local.offsets[n];
        CHECK((points[n] - want).norm() < 1e-15);
    }
}

TEST_CASE("sector-style rotation points the normal outward") {
    // (psi - pi/2, pi/2, 0) should rotate the local z-normal to the radial
    // direction psi.
    for (double psi : {kPi / 2.0, 7.0 * kPi / 6.0, 11.0 * kPi / 6.0}) {
        SurfacePose pose;
        pose.rotation =
            Eigen::Vector3d(sixdma::canonicalize_angle(psi - kPi / 2.0), kPi / 2.0, 0.0);
        const Eigen::Vector3d n = sixdma::surface_normal(pose, sixdma::make_ula(2, 0.0625));
        const Eigen::Vector3d want(std::cos(psi), std::sin(psi), 0.0);
        CHECK((n - want).norm() < 1e-14);
    }
}

TEST_CASE("single outward surface is feasible") {
    ArrayLayout layout;
    SurfacePose pose;
    pose.position = Eigen::Vector3d(0.1, 0.0, 0.0);
    pose.rotation = Eigen::Vector3d(sixdma::canonicalize_angle(-kPi / 2.0), kPi / 2.0, 0.0);
    layout.poses.push_back(pose);
    layout.locals.push_back(sixdma::make_ula(2, 0.0625));
    const auto report =
        sixdma::check_constraints(layout, SiteSpace{0.6}, MovementConstraints{0.15});
    CHECK(report.feasible());
}

TEST_CASE("inward surface triggers the blockage rule") {
    ArrayLayout layout;
    SurfacePose pose;
    pose.position = Eigen::Vector3d(0.1, 0.0, 0.0);
    pose.rotation = Eigen::Vector3d(kPi / 2.0, kPi / 2.0, 0.0);  // normal -x
    layout.poses.push_back(pose);
    layout.locals.push_back(sixdma::make_ula(2, 0.0625));
    const auto report =
        sixdma::check_constraints(layout, SiteSpace{0.6}, MovementConstraints{0.15});
    REQUIRE(report.violations.size() == 1);
    CHECK(report.violations[0].kind == ConstraintKind::Blockage);
    CHECK(report.violations[0].margin == doctest::Approx(0.1));
}

TEST_CASE("facing surfaces violate mutual reflection both ways") {
    ArrayLayout layout;
    SurfacePose a, b;
    a.position = Eigen::Vector3d(-0.2, 0.0, 0.0);
    a.rotation = Eigen::Vector3d(sixdma::canonicalize_angle(-kPi / 2.0), kPi / 2.0, 0.0);
    b.position = Eigen::Vector3d(0.2, 0.0, 0.0);
    b.rotation = Eigen::Vector3d(kPi / 2.0, kPi / 2.0, 0.0);
    layout.poses = {a, b};
    layout.locals = {sixdma::make_ula(2, 0.0625), sixdma::make_ula(2, 0.0625)};
    const auto report =
        sixdma::check_constraints(layout, SiteSpace{0.6}, MovementConstraints{0.15});
    CHECK(report.count(ConstraintKind::Reflection) == 2);
    CHECK(report.count(ConstraintKind::MinSpacing) == 0);
}

TEST_CASE("coincident centers violate spacing but not reflection") {
    ArrayLayout layout;
    SurfacePose a;
    a.position = Eigen::Vector3d(0.05, 0.05, 0.0);
    a.rotation = Eigen::Vector3d(0.0, 0.0, 0.0);
    layout.poses = {a, a};
    layout.locals = {sixdma::make_ula(2, 0.0625), sixdma::make_ula(2, 0.0625)};
    const auto report =
        sixdma::check_constraints(layout, SiteSpace{0.6}, MovementConstraints{0.15});
    CHECK(report.count(ConstraintKind::MinSpacing) == 1);
    CHECK(report.count(ConstraintKind::Reflection) == 0);
}

TEST_CASE("centers outside the site volume are reported") {
    ArrayLayout layout;
    SurfacePose pose;
    pose.position = Eigen::Vector3d(0.31, 0.0, 0.0);
    pose.rotation = Eigen::Vector3d(sixdma::canonicalize_angle(-kPi / 2.0), kPi / 2.0, 0.0);
    layout.poses.push_back(pose);
    layout.locals.push_back(sixdma::make_ula(2, 0.0625));
    const auto report =
        sixdma::check_constraints(layout, SiteSpace{0.6}, MovementConstraints{0.15});
    REQUIRE(report.count(ConstraintKind::Box) == 1);
    for (const auto& v : report.violations) {
        if (v.kind == ConstraintKind::Box) CHECK(v.margin == doctest::Approx(0.01));
    }
}

TEST_CASE("checker matches a brute-force transcription on random layouts") {
    std::mt19937_64 rng(23);
    const SiteSpace site{0.6};
    const MovementConstraints cons{0.15088834764831845};
    for (int t = 0; t < 100; ++t) {
        const ArrayLayout layout = random_layout(rng, 2 + static_cast<int>(t % 5));
        const auto report = sixdma::check_constraints(layout, site, cons);
        CHECK(violation_keys(report.violations) == brute_force_keys(layout, site, cons));
    }
}

TEST_CASE("empty layout is rejected") {
    ArrayLayout layout;
    CHECK_THROWS_AS(
        sixdma::check_constraints(layout, SiteSpace{0.6}, MovementConstraints{0.15}),
        std::invalid_argument);
}

TEST_CASE("site membership check") {
    const SiteSpace site{0.6};
    CHECK(site.contains({0.3, -0.3, 0.0}));
    CHECK(!site.contains({0.300001, 0.0, 0.0}));
}

}  // TEST_SUITE

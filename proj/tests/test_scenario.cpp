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
#include <utility>
#include <vector>

#include "doctest.h"
#include "sixdma/geometry.hpp"
#include "sixdma/scenario.hpp"

namespace {

constexpr double kPi = 3.14159265358979323846;
const sixdma::Wavelength kLambda{0.125};

}  // namespace

TEST_SUITE("scenario") {

TEST_CASE("single subregion is the whole disk with a central target") {
    const auto cells = sixdma::partition_region_cells(2.0, 1);
    REQUIRE(cells.size() == 1);
    CHECK(cells[0].area == doctest::Approx(kPi * 4.0).epsilon(1e-12));
    CHECK(cells[0].centroid.norm() == 0.0);
    CHECK(cells[0].r0 == 0.0);
    CHECK(cells[0].r1 == 2.0);
}

TEST_CASE("five subregions split one ring into equal sectors") {
    const auto cells = sixdma::partition_region_cells(2.0, 5);
    REQUIRE(cells.size() == 5);
    for (const auto& cell : cells) {
        CHECK(cell.area == doctest::Approx(kPi * 4.0 / 5.0).epsilon(1e-9));
        CHECK(cell.r0 == 0.0);
        CHECK(cell.r1 == doctest::Approx(2.0));
    }
}

TEST_CASE("cells tile the disk with equal areas and interior centroids") {
    const double radius = 3.0;
    for (int k = 1; k <= 30; ++k) {
        CAPTURE(k);
        const auto cells = sixdma::partition_region_cells(radius, k);
        REQUIRE(static_cast<int>(cells.size()) == k);

        double total = 0.0;
        const double want = kPi * radius * radius / static_cast<double>(k);
        for (const auto& cell : cells) {
            total += cell.area;
            CHECK(cell.area == doctest::Approx(want).epsilon(1e-9));
            CHECK(cell.r0 >= 0.0);
            CHECK(cell.r1 <= radius + 1e-12);
            CHECK(cell.theta0 >= 0.0);
            CHECK(cell.theta1 <= 2.0 * kPi + 1e-12);

            if (k == 1) continue;  // full-disk cell centers on the origin
            const double rho = cell.centroid.norm();
            CHECK(rho >= cell.r0 - 1e-12);
            CHECK(rho <= cell.r1 + 1e-12);
            const double mid = 0.5 * (cell.theta0 + cell.theta1);
            const double angle = sixdma::canonicalize_angle(
                std::atan2(cell.centroid.y(), cell.centroid.x()));
            CHECK(angle == doctest::Approx(mid).epsilon(1e-9));
        }
        CHECK(total == doctest::Approx(kPi * radius * radius).epsilon(1e-9));
    }
}

TEST_CASE("ring populations never shrink toward the rim") {
    for (int k : {13, 20, 30, 50, 100}) {
        CAPTURE(k);
        const auto cells = sixdma::partition_region_cells(1.0, k);
        std::vector<std::pair<double, int>> rings;  // r0 -> cell count
        for (const auto& cell : cells) {
            if (rings.empty() || rings.back().first != cell.r0) {
                rings.push_back({cell.r0, 0});
            }
            rings.back().second += 1;
        }
        for (std::size_t j = 0; j + 1 < rings.size(); ++j) {
            CHECK(rings[j].first < rings[j + 1].first);
            CHECK(rings[j].second <= rings[j + 1].second);
        }
    }
}

TEST_CASE("the full-scale radii keep per-cell areas equal across regions") {
    // Radii 2, 2*sqrt(2), 2*sqrt(3) with 5/10/15 cells: areas scale 1:2:3 so
    // each cell covers the same ground.
    const double unit = kPi * 4.0 / 5.0;
    const auto a = sixdma::partition_region_cells(2.0, 5);
    const auto b = sixdma::partition_region_cells(2.0 * std::sqrt(2.0), 10);
    const auto c = sixdma::partition_region_cells(2.0 * std::sqrt(3.0), 15);
    for (const auto& cell : a) CHECK(cell.area == doctest::Approx(unit).epsilon(1e-9));
    for (const auto& cell : b) CHECK(cell.area == doctest::Approx(unit).epsilon(1e-9));
    for (const auto& cell : c) CHECK(cell.area == doctest::Approx(unit).epsilon(1e-9));
}

TEST_CASE("invalid partition arguments are rejected") {
    CHECK_THROWS_AS(sixdma::partition_region_cells(0.0, 4), std::invalid_argument);
    CHECK_THROWS_AS(sixdma::partition_region_cells(-1.0, 4), std::invalid_argument);
    CHECK_THROWS_AS(sixdma::partition_region_cells(2.0, 0), std::invalid_argument);
}

TEST_CASE("partition_region offsets the centroids by the region center") {
    sixdma::SensingRegion region;
    region.center = Eigen::Vector2d(10.0, -5.0);
    region.radius = 2.0;
    region.subregions = 4;
    const auto points = sixdma::partition_region(region);
    const auto cells = sixdma::partition_region_cells(2.0, 4);
    REQUIRE(points.size() == 4);
    for (std::size_t i = 0; i < points.size(); ++i) {
        const Eigen::Vector2d expected = region.center + cells[i].centroid;
        CHECK(points[i] == expected);
    }
}

TEST_CASE("targets carry the free-space two-way amplitude") {
    sixdma::SensingRegion region;
    region.center = Eigen::Vector2d(20.0, 0.0);
    region.radius = 2.0;
    region.subregions = 1;
    const auto targets =
        sixdma::build_targets({region}, Eigen::Vector2d::Zero(), 1.0, kLambda);
    REQUIRE(targets.size() == 1);
    CHECK(targets[0].phi == doctest::Approx(0.0));
    CHECK(targets[0].range == doctest::Approx(20.0));

    const double d = 20.0;
    const double want = std::sqrt(kLambda.meters * kLambda.meters /
                                  (std::pow(4.0 * kPi, 3.0) * std::pow(d, 4.0)));
    CHECK(std::abs(targets[0].rho) == doctest::Approx(want).epsilon(1e-12));
    CHECK(targets[0].rho.imag() == 0.0);
}

TEST_CASE("doubling the range quarters the reflection amplitude") {
    sixdma::SensingRegion near_region, far_region;
    near_region.center = Eigen::Vector2d(0.0, 20.0);
    near_region.radius = 1.0;
    near_region.subregions = 1;
    far_region = near_region;
    far_region.center = Eigen::Vector2d(0.0, 40.0);

    const auto near_t =
        sixdma::build_targets({near_region}, Eigen::Vector2d::Zero(), 1.0, kLambda);
    const auto far_t =
        sixdma::build_targets({far_region}, Eigen::Vector2d::Zero(), 1.0, kLambda);
    CHECK(std::abs(near_t[0].rho) ==
          doctest::Approx(4.0 * std::abs(far_t[0].rho)).epsilon(1e-12));
    CHECK(near_t[0].phi == doctest::Approx(kPi / 2.0));
}

TEST_CASE("degenerate target setups are rejected") {
    sixdma::SensingRegion at_origin;
    at_origin.center = Eigen::Vector2d::Zero();
    at_origin.radius = 1.0;
    at_origin.subregions = 1;
    CHECK_THROWS_AS(
        sixdma::build_targets({at_origin}, Eigen::Vector2d::Zero(), 1.0, kLambda),
        std::invalid_argument);

    sixdma::SensingRegion fine;
    fine.center = Eigen::Vector2d(20.0, 0.0);
    fine.radius = 1.0;
    fine.subregions = 1;
    CHECK_THROWS_AS(sixdma::build_targets({fine}, Eigen::Vector2d::Zero(), 0.0, kLambda),
                    std::invalid_argument);  // zero RCS leaves no echo
    CHECK_THROWS_AS(sixdma::build_targets({}, Eigen::Vector2d::Zero(), 1.0, kLambda),
                    std::invalid_argument);
}

TEST_CASE("region targets cover every cell with consistent bearings") {
    sixdma::SensingRegion region;
    region.center = Eigen::Vector2d(30.0, 30.0);
    region.radius = 2.0;
    region.subregions = 6;
    const auto targets =
        sixdma::build_targets({region}, Eigen::Vector2d::Zero(), 1.0, kLambda);
    REQUIRE(targets.size() == 6);
    for (const auto& t : targets) {
        CHECK(t.range > 30.0 * std::sqrt(2.0) - 2.0);
        CHECK(t.range < 30.0 * std::sqrt(2.0) + 2.0);
        CHECK(t.phi > kPi / 4.0 - 0.1);
        CHECK(t.phi < kPi / 4.0 + 0.1);
    }
}

TEST_CASE("ideal probe carries a uniform diagonal covariance") {
    const auto probe = sixdma::make_probe_ideal(1.0, 16, 4);
    CHECK(probe.ideal);
    CHECK(!probe.has_realized());
    CHECK(probe.snapshots == 16);
    CHECK(probe.power == 1.0);
    CHECK(probe.covariance.rows() == 4);
    CHECK(std::real(probe.covariance.trace()) == 1.0);
    CHECK((probe.covariance -
           0.25 * Eigen::MatrixXcd::Identity(4, 4)).norm() == 0.0);
}

TEST_CASE("probe construction validates power and frame length") {
    CHECK_THROWS_AS(sixdma::make_probe_ideal(0.0, 16, 4), std::invalid_argument);
    CHECK_THROWS_AS(sixdma::make_probe_ideal(1.0, 4, 4), std::invalid_argument);
    CHECK_THROWS_AS(sixdma::make_probe_ideal(1.0, 3, 4), std::invalid_argument);
    CHECK_THROWS_AS(sixdma::make_probe_ideal(1.0, 16, 0), std::invalid_argument);
    CHECK_THROWS_AS(sixdma::make_probe_gaussian(1.0, 4, 4, 1), std::invalid_argument);
}

TEST_CASE("gaussian probe is seeded, Hermitian, and near the target power") {
    const auto a = sixdma::make_probe_gaussian(1.0, 40, 4, 5);
    const auto b = sixdma::make_probe_gaussian(1.0, 40, 4, 5);
    const auto c = sixdma::make_probe_gaussian(1.0, 40, 4, 6);
    CHECK((a.matrix - b.matrix).norm() == 0.0);
    CHECK((a.matrix - c.matrix).norm() > 0.0);
    CHECK(a.has_realized());
    CHECK(!a.ideal);

    CHECK((a.covariance - a.covariance.adjoint()).norm() <
          1e-14 * a.covariance.norm());
    CHECK(std::real(a.covariance.trace()) == doctest::Approx(1.0).epsilon(0.3));

    const auto big = sixdma::make_probe_gaussian(1.0, 4000, 4, 5);
    CHECK(std::real(big.covariance.trace()) == doctest::Approx(1.0).epsilon(0.03));
}

TEST_CASE("scenario aggregates targets across regions") {
    sixdma::SensingScenario scenario;
    sixdma::SensingRegion r1, r2;
    r1.center = Eigen::Vector2d(20.0, 0.0);
    r1.radius = 2.0;
    r1.subregions = 2;
    r2.center = Eigen::Vector2d(0.0, 40.0);
    r2.radius = 2.0;
    r2.subregions = 4;
    scenario.regions = {r1, r2};
    scenario.targets =
        sixdma::build_targets(scenario.regions, Eigen::Vector2d::Zero(), 1.0, kLambda);
    scenario.noise_var = 1e-12;
    scenario.probe_power = 1.0;
    scenario.snapshots = 128;
    CHECK(scenario.target_count() == 6);
}

}  // TEST_SUITE

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

#include "sixdma/scenario.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <random>
#include <stdexcept>

namespace sixdma {

namespace {

constexpr double kPi = 3.14159265358979323846;

// Cells per ring, proportional to ring area (2j - 1), summing to the total.
std::vector<long> plan_rings(int subregions) {
    const long J = std::max(1L, std::lround(std::sqrt(subregions / kPi)));
    std::vector<long> counts(J);
    const double weight_sum = static_cast<double>(J) * static_cast<double>(J);
    for (long j = 0; j < J; ++j) {
        const double raw = subregions * (2.0 * (j + 1) - 1.0) / weight_sum;
        counts[j] = std::max(1L, std::lround(raw));
    }
    long drift = subregions - std::accumulate(counts.begin(), counts.end(), 0L);
    counts.back() += drift;
    while (counts.back() < 1) {
        // Rounding pushed the outer ring negative; borrow from the largest
        // inner ring.
        auto it = std::max_element(counts.begin(), counts.end() - 1);
        --*it;
        ++counts.back();
    }
    for (std::size_t j = 0; j + 1 < counts.size(); ++j) {
        if (counts[j] > counts[j + 1]) std::swap(counts[j], counts[j + 1]);
    }
    return counts;
}

}  // namespace

std::vector<DiskCell> partition_region_cells(double radius, int subregions) {
    if (!(radius > 0.0)) {
        throw std::invalid_argument("partition_region_cells: radius must be positive");
    }
    if (subregions < 1) {
        throw std::invalid_argument("partition_region_cells: need at least one subregion");
    }
    const std::vector<long> counts = plan_rings(subregions);
    const double total = static_cast<double>(subregions);

    std::vector<DiskCell> cells;
    cells.reserve(static_cast<std::size_t>(subregions));
    long cumulative = 0;
    for (std::size_t j = 0; j < counts.size(); ++j) {
        const double r0 = radius * std::sqrt(static_cast<double>(cumulative) / total);
        cumulative += counts[j];
        const double r1 = radius * std::sqrt(static_cast<double>(cumulative) / total);
        const long kj = counts[j];
        for (long s = 0; s < kj; ++s) {
            DiskCell cell;
            cell.r0 = r0;
            cell.r1 = r1;
            cell.theta0 = 2.0 * kPi * static_cast<double>(s) / static_cast<double>(kj);
            cell.theta1 = 2.0 * kPi * static_cast<double>(s + 1) / static_cast<double>(kj);
            cell.area = 0.5 * (cell.theta1 - cell.theta0) * (r1 * r1 - r0 * r0);
            if (kj == 1 && r0 == 0.0) {
                cell.centroid.setZero();
            } else {
                const double f =
                    (r1 * r1 * r1 - r0 * r0 * r0) / (3.0 * cell.area);
                cell.centroid = f * Eigen::Vector2d(std::sin(cell.theta1) - std::sin(cell.theta0),
                                                    std::cos(cell.theta0) - std::cos(cell.theta1));
            }
            cells.push_back(cell);
        }
    }
    return cells;
}

std::vector<Eigen::Vector2d> partition_region(const SensingRegion& region) {
    const std::vector<DiskCell> cells = partition_region_cells(region.radius, region.subregions);
    std::vector<Eigen::Vector2d> points;
    points.reserve(cells.size());
    for (const DiskCell& cell : cells) {
        points.push_back(region.center + cell.centroid);
    }
    return points;
}

std::vector<Target> build_targets(const std::vector<SensingRegion>& regions,
                                  const Eigen::Vector2d& bs_origin, double rcs_m2,
                                  Wavelength lambda) {
    if (regions.empty()) {
        throw std::invalid_argument("build_targets: need at least one region");
    }
    if (!(rcs_m2 >= 0.0)) {
        throw std::invalid_argument("build_targets: RCS must be nonnegative");
    }
    if (!(lambda.meters > 0.0)) {
        throw std::invalid_argument("build_targets: wavelength must be positive");
    }
    std::vector<Target> targets;
    for (const SensingRegion& region : regions) {
        for (const Eigen::Vector2d& point : partition_region(region)) {
            const Eigen::Vector2d delta = point - bs_origin;
            const double range = delta.norm();
            if (range < 1e-12) {
                throw std::invalid_argument("build_targets: typical point coincides with the BS origin");
            }
            const double phi = std::atan2(delta.y(), delta.x());
            const double four_pi = 4.0 * kPi;
            const double amp2 = rcs_m2 * lambda.meters * lambda.meters /
                                (four_pi * four_pi * four_pi * range * range * range * range);
            targets.push_back(Target::make(phi, range, std::sqrt(amp2)));
        }
    }
    return targets;
}

namespace {

ProbeSignal probe_common(double power, int snapshots, int dims) {
    if (!(power > 0.0)) {
        throw std::invalid_argument("make_probe: power must be positive");
    }
    if (dims < 1) {
        throw std::invalid_argument("make_probe: need at least one antenna");
    }
    if (snapshots <= dims) {
        throw std::invalid_argument("make_probe: snapshots must exceed the antenna count");
    }
    ProbeSignal probe;
    probe.snapshots = snapshots;
    probe.power = power;
    return probe;
}

}  // namespace

ProbeSignal make_probe_ideal(double power, int snapshots, int dims) {
    ProbeSignal probe = probe_common(power, snapshots, dims);
    probe.ideal = true;
    probe.covariance =
        (power / dims) * Eigen::MatrixXcd::Identity(dims, dims);
    return probe;
}

ProbeSignal make_probe_gaussian(double power, int snapshots, int dims,
                                std::uint64_t seed) {
    ProbeSignal probe = probe_common(power, snapshots, dims);
    std::mt19937_64 rng(seed);
    std::normal_distribution<double> normal(0.0, 1.0);
    const double scale = std::sqrt(power / (2.0 * dims));
    probe.matrix.resize(dims, snapshots);
    for (int c = 0; c < snapshots; ++c) {
        for (int r = 0; r < dims; ++r) {
            const double re = normal(rng);
            const double im = normal(rng);
            probe.matrix(r, c) = std::complex<double>(scale * re, scale * im);
        }
    }
    probe.covariance =
        probe.matrix * probe.matrix.adjoint() / static_cast<double>(snapshots);
    return probe;
}

}  // namespace sixdma

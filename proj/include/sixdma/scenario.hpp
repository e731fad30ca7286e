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

#ifndef SIXDMA_SCENARIO_HPP
#define SIXDMA_SCENARIO_HPP

#include <cstdint>
#include <vector>

#include <Eigen/Dense>

#include "sixdma/channel.hpp"
#include "sixdma/estimation.hpp"

namespace sixdma {

/// Circular sensing region in the horizontal plane, split into `subregions`
/// equal-area cells whose centroids serve as typical target locations.
struct SensingRegion {
    Eigen::Vector2d center = Eigen::Vector2d::Zero();  // meters
    double radius = 0.0;                               // meters
    int subregions = 1;                                // K_m
};

/// One cell of the concentric equal-area polar grid, centered on the disk.
struct DiskCell {
    double r0 = 0.0;
    double r1 = 0.0;
    double theta0 = 0.0;
    double theta1 = 0.0;
    Eigen::Vector2d centroid = Eigen::Vector2d::Zero();  // relative to disk center
    double area = 0.0;
};

/// Equal-area cells of a disk of the given radius. Ring count ~ sqrt(K/pi)
/// and per-ring cell counts grow with ring area, keeping cell aspect ratios
/// near one.
std::vector<DiskCell> partition_region_cells(double radius, int subregions);

/// World-frame typical target points: region center plus each cell centroid.
std::vector<Eigen::Vector2d> partition_region(const SensingRegion& region);

/// Targets for all regions' typical points: bearing and range from
/// `bs_origin`, two-way free-space reflection amplitude
/// sqrt(rcs * lambda^2 / ((4 pi)^3 d^4)) with unit phase.
std::vector<Target> build_targets(const std::vector<SensingRegion>& regions,
                                  const Eigen::Vector2d& bs_origin, double rcs_m2,
                                  Wavelength lambda);

/// Probe with covariance (power / dims) I and no realized snapshot matrix.
ProbeSignal make_probe_ideal(double power, int snapshots, int dims);

/// Probe with i.i.d. circularly symmetric Gaussian columns of covariance
/// (power / dims) I; covariance field holds the sample covariance X X^H / L.
ProbeSignal make_probe_gaussian(double power, int snapshots, int dims,
                                std::uint64_t seed);

struct SensingScenario {
    std::vector<SensingRegion> regions;
    std::vector<Target> targets;  // flattened over regions
    double noise_var = 0.0;       // watts
    double probe_power = 0.0;     // watts
    int snapshots = 0;            // L

    std::size_t target_count() const { return targets.size(); }
};

}  // namespace sixdma

#endif  // SIXDMA_SCENARIO_HPP

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

#include "sixdma/pattern.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>

#include "sixdma/geometry.hpp"

namespace sixdma {

namespace {

double clamp_unit(double x) { return std::clamp(x, -1.0, 1.0); }

}  // namespace

LocalAngles local_direction_angles(const Eigen::Vector3d& rotation,
                                   const Eigen::Vector3d& pointing) {
    const Eigen::Vector3d local = rotation_matrix(rotation).transpose() * pointing;
    LocalAngles angles;
    angles.theta = 0.5 * std::numbers::pi - std::acos(clamp_unit(local.z()));
    const double planar_sq = local.x() * local.x() + local.y() * local.y();
    if (planar_sq < 1e-12) {
        angles.phi = 0.0;  // direction along the local z-axis, azimuth undefined
    } else {
        const double eta = local.y() >= 0.0 ? 1.0 : -1.0;
        angles.phi = std::acos(clamp_unit(local.x() / std::sqrt(planar_sq))) * eta;
    }
    return angles;
}

double gain_dbi(const PatternKind& kind, double theta, double phi) {
    if (std::holds_alternative<HalfSpaceIsotropic>(kind)) {
        if (std::abs(phi) <= 0.5 * std::numbers::pi) return 10.0 * std::log10(2.0);
        return -std::numeric_limits<double>::infinity();
    }
    const auto& p = std::get<DirectivePatternParams>(kind);
    const double ah = -std::min(12.0 * (phi / p.phi_3db) * (phi / p.phi_3db), p.g_s_db);
    const double av = -std::min(12.0 * (theta / p.theta_3db) * (theta / p.theta_3db), p.g_v_db);
    return p.g_max_dbi - std::min(-(ah + av), p.g_s_db);
}

double gain_linear(const PatternKind& kind, const Eigen::Vector3d& rotation,
                   const Eigen::Vector3d& pointing) {
    const LocalAngles angles = local_direction_angles(rotation, pointing);
    const double dbi = gain_dbi(kind, angles.theta, angles.phi);
    if (dbi == -std::numeric_limits<double>::infinity()) return 0.0;
    return std::pow(10.0, dbi / 10.0);
}

}  // namespace sixdma

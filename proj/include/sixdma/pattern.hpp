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

#ifndef SIXDMA_PATTERN_HPP
#define SIXDMA_PATTERN_HPP

#include <variant>

#include <Eigen/Dense>

namespace sixdma {

/// 3GPP-style sector element pattern. Angles in radians, clamps in dB.
struct DirectivePatternParams {
    double g_max_dbi = 8.0;
    double g_s_db = 25.0;     // horizontal / total attenuation clamp
    double g_v_db = 25.0;     // vertical attenuation clamp
    double phi_3db = 1.1344640137963142;    // 65 degrees
    double theta_3db = 1.1344640137963142;  // 65 degrees
};

/// Gain 10*log10(2) dBi over the front half-space, nothing behind.
struct HalfSpaceIsotropic {};

using PatternKind = std::variant<DirectivePatternParams, HalfSpaceIsotropic>;

/// Elevation/azimuth of a global direction seen from a surface's local frame.
struct LocalAngles {
    double theta = 0.0;
    double phi = 0.0;
};

/// Rotates a global unit pointing vector into the surface frame and extracts
/// the local elevation theta = pi/2 - arccos(z) and signed azimuth
/// phi = arccos(x / sqrt(x^2 + y^2)) * sign(y). A direction along the local
/// z-axis has undefined azimuth and maps to phi = 0.
LocalAngles local_direction_angles(const Eigen::Vector3d& rotation,
                                   const Eigen::Vector3d& pointing);

/// Element gain in dBi at the given local angles. The isotropic back
/// half-space yields -infinity.
double gain_dbi(const PatternKind& kind, double theta, double phi);

/// Linear-scale gain of a surface toward a global direction; the isotropic
/// back half-space maps to exactly 0.
double gain_linear(const PatternKind& kind, const Eigen::Vector3d& rotation,
                   const Eigen::Vector3d& pointing);

}  // namespace sixdma

#endif  // SIXDMA_PATTERN_HPP

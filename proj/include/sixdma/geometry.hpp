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

#ifndef SIXDMA_GEOMETRY_HPP
#define SIXDMA_GEOMETRY_HPP

#include <vector>

#include <Eigen/Dense>

namespace sixdma {

/// Pose of one antenna surface: center position in the global frame and the
/// three rotation angles (about the x-, y-, and z-axis) in radians.
struct SurfacePose {
    Eigen::Vector3d position = Eigen::Vector3d::Zero();
    Eigen::Vector3d rotation = Eigen::Vector3d::Zero();
};

/// Antenna offsets and surface normal expressed in the surface's local frame.
struct LocalArray {
    std::vector<Eigen::Vector3d> offsets;
    Eigen::Vector3d normal = Eigen::Vector3d::UnitZ();

    int antenna_count() const { return static_cast<int>(offsets.size()); }
};

/// Centered uniform linear array along the local x-axis, normal along local z.
LocalArray make_ula(int antennas, double spacing_m);

/// Cubic site volume [-side/2, side/2]^3 centered at the station reference point.
struct SiteSpace {
    double side = 0.0;

    double half() const { return 0.5 * side; }
    bool contains(const Eigen::Vector3d& p) const;
};

/// Placement limits between surfaces.
struct MovementConstraints {
    double min_spacing = 0.0;  // minimum center-to-center distance, meters
};

/// All surface poses plus their local arrays. poses and locals run in parallel.
struct ArrayLayout {
    std::vector<SurfacePose> poses;
    std::vector<LocalArray> locals;

    int surface_count() const { return static_cast<int>(poses.size()); }
    int total_antennas() const;
};

/// Maps an angle to the canonical interval [0, 2*pi).
double canonicalize_angle(double radians);

/// Rotation matrix for the given (alpha, beta, gamma) angles. Always a proper
/// rotation: R^T R = I, det R = +1.
Eigen::Matrix3d rotation_matrix(const Eigen::Vector3d& rotation);

/// Global coordinates of every antenna of a surface: q + R(u) * offset.
std::vector<Eigen::Vector3d> global_antenna_positions(const SurfacePose& pose,
                                                      const LocalArray& local);

/// Surface normal rotated into the global frame.
Eigen::Vector3d surface_normal(const SurfacePose& pose, const LocalArray& local);

enum class ConstraintKind {
    Reflection,  // other surface center must not lie in front of this surface
    Blockage,    // station reference point must not lie in front of the surface
    MinSpacing,  // center-to-center distance below the minimum
    Box,         // surface center outside the site volume
};

const char* to_string(ConstraintKind kind);

/// One violated constraint. `j` is -1 for the unary constraints
/// (Blockage, Box). `margin` is the positive amount by which the
/// constraint is missed.
struct ConstraintViolation {
    ConstraintKind kind;
    int i = -1;
    int j = -1;
    double margin = 0.0;
};

struct ViolationReport {
    std::vector<ConstraintViolation> violations;

    bool feasible() const { return violations.empty(); }
    int count(ConstraintKind kind) const;
};

/// Evaluates the reflection, blockage, spacing and box constraints for every
/// surface (pair) and reports each violation.
ViolationReport check_constraints(const ArrayLayout& layout, const SiteSpace& site,
                                  const MovementConstraints& cons);

}  // namespace sixdma

#endif  // SIXDMA_GEOMETRY_HPP

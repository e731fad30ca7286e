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

#include "sixdma/geometry.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace sixdma {

LocalArray make_ula(int antennas, double spacing_m) {
    if (antennas < 1) throw std::invalid_argument("make_ula: antennas must be >= 1");
    if (spacing_m <= 0.0) throw std::invalid_argument("make_ula: spacing must be positive");
    LocalArray local;
    local.offsets.reserve(static_cast<std::size_t>(antennas));
    const double mid = 0.5 * static_cast<double>(antennas - 1);
    for (int n = 0; n < antennas; ++n) {
        local.offsets.emplace_back((static_cast<double>(n) - mid) * spacing_m, 0.0, 0.0);
    }
    local.normal = Eigen::Vector3d::UnitZ();
    return local;
}

bool SiteSpace::contains(const Eigen::Vector3d& p) const {
    const double h = half();
    return p.cwiseAbs().maxCoeff() <= h;
}

int ArrayLayout::total_antennas() const {
    int n = 0;
    for (const auto& local : locals) n += local.antenna_count();
    return n;
}

double canonicalize_angle(double radians) {
    constexpr double two_pi = 2.0 * std::numbers::pi;
    double r = radians - two_pi * std::floor(radians / two_pi);
    if (r >= two_pi) r -= two_pi;  // floor rounding can land exactly on 2*pi
    if (r < 0.0) r += two_pi;
    return r;
}

Eigen::Matrix3d rotation_matrix(const Eigen::Vector3d& rotation) {
    const double ca = std::cos(rotation.x()), sa = std::sin(rotation.x());
    const double cb = std::cos(rotation.y()), sb = std::sin(rotation.y());
    const double cg = std::cos(rotation.z()), sg = std::sin(rotation.z());
    Eigen::Matrix3d r;
    r << ca * cg,                 ca * sg,                 -sa,
         sb * sa * cg - cb * sg,  sb * sa * sg + cb * cg,  ca * sb,
         cb * sa * cg + sb * sg,  cb * sa * sg - sb * cg,  ca * cb;
    return r;
}

std::vector<Eigen::Vector3d> global_antenna_positions(const SurfacePose& pose,
                                                      const LocalArray& local) {
    const Eigen::Matrix3d r = rotation_matrix(pose.rotation);
    std::vector<Eigen::Vector3d> out;
    out.reserve(local.offsets.size());
    for (const auto& offset : local.offsets) {
        out.emplace_back(pose.position + r * offset);
    }
    return out;
}

Eigen::Vector3d surface_normal(const SurfacePose& pose, const LocalArray& local) {
    return rotation_matrix(pose.rotation) * local.normal;
}

const char* to_string(ConstraintKind kind) {
    switch (kind) {
        case ConstraintKind::Reflection: return "reflection";
        case ConstraintKind::Blockage: return "blockage";
        case ConstraintKind::MinSpacing: return "min-spacing";
        case ConstraintKind::Box: return "box";
    }
    return "unknown";
}

int ViolationReport::count(ConstraintKind kind) const {
    int n = 0;
    for (const auto& v : violations)
        if (v.kind == kind) ++n;
    return n;
}

ViolationReport check_constraints(const ArrayLayout& layout, const SiteSpace& site,
                                  const MovementConstraints& cons) {
    if (layout.surface_count() < 1)
        throw std::invalid_argument("check_constraints: layout needs at least one surface");
    if (layout.poses.size() != layout.locals.size())
        throw std::invalid_argument("check_constraints: poses/locals size mismatch");

    const int b = layout.surface_count();
    std::vector<Eigen::Vector3d> normals(static_cast<std::size_t>(b));
    for (int i = 0; i < b; ++i)
        normals[static_cast<std::size_t>(i)] =
            surface_normal(layout.poses[static_cast<std::size_t>(i)],
                           layout.locals[static_cast<std::size_t>(i)]);

    ViolationReport report;
    for (int i = 0; i < b; ++i) {
        const auto& qi = layout.poses[static_cast<std::size_t>(i)].position;
        const auto& ni = normals[static_cast<std::size_t>(i)];

        // blockage: the station reference point must stay behind the surface plane
        const double front = ni.dot(qi);
        if (front < 0.0)
            report.violations.push_back({ConstraintKind::Blockage, i, -1, -front});

        // box on surface centers
        const double excess = qi.cwiseAbs().maxCoeff() - site.half();
        if (excess > 0.0)
            report.violations.push_back({ConstraintKind::Box, i, -1, excess});

        for (int j = 0; j < b; ++j) {
            if (j == i) continue;
            const auto& qj = layout.poses[static_cast<std::size_t>(j)].position;

            // reflection: surface j's center may not lie in front of surface i
            const double ahead = ni.dot(qj - qi);
            if (ahead > 0.0)
                report.violations.push_back({ConstraintKind::Reflection, i, j, ahead});

            // spacing once per unordered pair
            if (j > i) {
                const double dist = (qi - qj).norm();
                if (dist < cons.min_spacing)
                    report.violations.push_back(
                        {ConstraintKind::MinSpacing, i, j, cons.min_spacing - dist});
            }
        }
    }
    return report;
}

}  // namespace sixdma

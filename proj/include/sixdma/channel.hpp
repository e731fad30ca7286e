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

#ifndef SIXDMA_CHANNEL_HPP
#define SIXDMA_CHANNEL_HPP

#include <complex>
#include <cstdint>
#include <vector>

#include <Eigen/Dense>

#include "sixdma/geometry.hpp"
#include "sixdma/pattern.hpp"

namespace sixdma {

/// Speed of light used throughout, m/s (radio-engineering convention).
inline constexpr double kSpeedOfLight = 3.0e8;

struct Wavelength {
    double meters = 0.0;

    static Wavelength from_frequency(double hertz);
};

/// One point scatterer: horizontal bearing from the station reference point,
/// range, and two-way channel coefficient.
struct Target {
    double phi = 0.0;                       // radians, in [-pi, pi]
    double range = 0.0;                     // meters
    std::complex<double> rho = {0.0, 0.0};  // reflection coefficient

    /// Validates the bearing range and |rho| > 0.
    static Target make(double phi, double range, std::complex<double> rho);
};

/// Unit vector toward a horizontal bearing: [cos phi, sin phi, 0].
Eigen::Vector3d pointing_vector(double phi);

/// d/dphi of the pointing vector: [-sin phi, cos phi, 0].
Eigen::Vector3d pointing_derivative(double phi);

/// Plane-wave steering vector of one surface; every entry has unit modulus.
Eigen::VectorXcd steering_vector(const SurfacePose& pose, const LocalArray& local,
                                 double phi, Wavelength lambda);

/// Stacked channel vector over all surfaces: sqrt(gain) times the steering
/// vector of each surface, concatenated.
Eigen::VectorXcd channel_vector(const ArrayLayout& layout, const PatternKind& kind,
                                double phi, Wavelength lambda);

struct DerivativeOptions {
    /// Include the bearing dependence of the amplitude sqrt(gain) via a
    /// central finite difference. The phase term is always analytic.
    bool include_gain_slope = true;
    double gain_step = 1e-5;  // radians
};

/// Entrywise derivative of the channel vector with respect to the bearing.
Eigen::VectorXcd channel_derivative(const ArrayLayout& layout, const PatternKind& kind,
                                    double phi, Wavelength lambda,
                                    const DerivativeOptions& options = {});

/// Monostatic echo of a probe matrix from the given targets plus seeded
/// circularly-symmetric Gaussian noise of the given per-entry variance.
Eigen::MatrixXcd simulate_echo(const ArrayLayout& layout, const PatternKind& kind,
                               const std::vector<Target>& targets,
                               const Eigen::MatrixXcd& probe, double noise_var,
                               std::uint64_t seed, Wavelength lambda);

}  // namespace sixdma

#endif  // SIXDMA_CHANNEL_HPP

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

#include "sixdma/channel.hpp"

#include <cmath>
#include <random>
#include <stdexcept>

namespace sixdma {

namespace {

constexpr double kPi = 3.14159265358979323846;

using cd = std::complex<double>;

// sqrt of the linear gain of one surface toward bearing phi.
double amplitude(const SurfacePose& pose, const PatternKind& kind, double phi) {
    return std::sqrt(gain_linear(kind, pose.rotation, pointing_vector(phi)));
}

}  // namespace

Wavelength Wavelength::from_frequency(double hertz) {
    if (!(hertz > 0.0)) {
        throw std::invalid_argument("Wavelength::from_frequency: frequency must be positive");
    }
    return Wavelength{kSpeedOfLight / hertz};
}

Target Target::make(double phi, double range, std::complex<double> rho) {
    if (!(phi >= -kPi && phi <= kPi)) {
        throw std::invalid_argument("Target::make: bearing outside [-pi, pi]");
    }
    if (!(range > 0.0)) {
        throw std::invalid_argument("Target::make: range must be positive");
    }
    if (!(std::abs(rho) > 0.0)) {
        throw std::invalid_argument("Target::make: reflection coefficient must be nonzero");
    }
    return Target{phi, range, rho};
}

Eigen::Vector3d pointing_vector(double phi) {
    return Eigen::Vector3d(std::cos(phi), std::sin(phi), 0.0);
}

Eigen::Vector3d pointing_derivative(double phi) {
    return Eigen::Vector3d(-std::sin(phi), std::cos(phi), 0.0);
}

Eigen::VectorXcd steering_vector(const SurfacePose& pose, const LocalArray& local,
                                 double phi, Wavelength lambda) {
    if (!(lambda.meters > 0.0)) {
        throw std::invalid_argument("steering_vector: wavelength must be positive");
    }
    const std::vector<Eigen::Vector3d> positions = global_antenna_positions(pose, local);
    const Eigen::Vector3d f = pointing_vector(phi);
    const double wavenumber = 2.0 * kPi / lambda.meters;
    Eigen::VectorXcd a(static_cast<Eigen::Index>(positions.size()));
    for (std::size_t n = 0; n < positions.size(); ++n) {
        const double phase = -wavenumber * f.dot(positions[n]);
        a(static_cast<Eigen::Index>(n)) = cd(std::cos(phase), std::sin(phase));
    }
    return a;
}

Eigen::VectorXcd channel_vector(const ArrayLayout& layout, const PatternKind& kind,
                                double phi, Wavelength lambda) {
    const std::size_t count = layout.surface_count();
    Eigen::VectorXcd h(static_cast<Eigen::Index>(layout.total_antennas()));
    Eigen::Index row = 0;
    for (std::size_t b = 0; b < count; ++b) {
        const double amp = amplitude(layout.poses[b], kind, phi);
        const Eigen::VectorXcd a =
            steering_vector(layout.poses[b], layout.locals[b], phi, lambda);
        h.segment(row, a.size()) = amp * a;
        row += a.size();
    }
    return h;
}

Eigen::VectorXcd channel_derivative(const ArrayLayout& layout, const PatternKind& kind,
                                    double phi, Wavelength lambda,
                                    const DerivativeOptions& options) {
    if (!(lambda.meters > 0.0)) {
        throw std::invalid_argument("channel_derivative: wavelength must be positive");
    }
    if (options.include_gain_slope && !(options.gain_step > 0.0)) {
        throw std::invalid_argument("channel_derivative: gain_step must be positive");
    }
    const double wavenumber = 2.0 * kPi / lambda.meters;
    const Eigen::Vector3d fdot = pointing_derivative(phi);
    const double h = options.gain_step;

    Eigen::VectorXcd dh(static_cast<Eigen::Index>(layout.total_antennas()));
    Eigen::Index row = 0;
    for (std::size_t b = 0; b < layout.surface_count(); ++b) {
        const SurfacePose& pose = layout.poses[b];
        const LocalArray& local = layout.locals[b];
        const double amp = amplitude(pose, kind, phi);
        const Eigen::VectorXcd a = steering_vector(pose, local, phi, lambda);
        const std::vector<Eigen::Vector3d> positions = global_antenna_positions(pose, local);

        double slope = 0.0;
        if (options.include_gain_slope && amp > 0.0) {
            const double fwd = amplitude(pose, kind, phi + h);
            const double bwd = amplitude(pose, kind, phi - h);
            if (fwd > 0.0 && bwd > 0.0) {
                slope = (fwd - bwd) / (2.0 * h);
            } else if (fwd > 0.0) {
                // Stepped past the visibility edge on one side; difference
                // toward the lit side only.
                slope = (fwd - amp) / h;
            } else if (bwd > 0.0) {
                slope = (amp - bwd) / h;
            }
        }

        for (Eigen::Index n = 0; n < a.size(); ++n) {
            const double phase_rate =
                -wavenumber * fdot.dot(positions[static_cast<std::size_t>(n)]);
            dh(row + n) = amp * a(n) * cd(0.0, phase_rate) + slope * a(n);
        }
        row += a.size();
    }
    return dh;
}

Eigen::MatrixXcd simulate_echo(const ArrayLayout& layout, const PatternKind& kind,
                               const std::vector<Target>& targets,
                               const Eigen::MatrixXcd& probe, double noise_var,
                               std::uint64_t seed, Wavelength lambda) {
    const auto dims = static_cast<Eigen::Index>(layout.total_antennas());
    if (probe.rows() != dims) {
        throw std::invalid_argument("simulate_echo: probe row count does not match antenna count");
    }
    if (!(noise_var >= 0.0)) {
        throw std::invalid_argument("simulate_echo: noise variance must be nonnegative");
    }

    Eigen::MatrixXcd echo = Eigen::MatrixXcd::Zero(dims, probe.cols());
    for (const Target& t : targets) {
        const Eigen::VectorXcd h = channel_vector(layout, kind, t.phi, lambda);
        echo.noalias() += (t.rho * h) * (h.adjoint() * probe);
    }

    if (noise_var > 0.0) {
        std::mt19937_64 rng(seed);
        std::normal_distribution<double> normal(0.0, 1.0);
        const double scale = std::sqrt(noise_var / 2.0);
        for (Eigen::Index c = 0; c < echo.cols(); ++c) {
            for (Eigen::Index r = 0; r < echo.rows(); ++r) {
                const double re = normal(rng);
                const double im = normal(rng);
                echo(r, c) += cd(scale * re, scale * im);
            }
        }
    }
    return echo;
}

}  // namespace sixdma

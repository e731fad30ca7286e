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

#ifndef SIXDMA_ESTIMATION_HPP
#define SIXDMA_ESTIMATION_HPP

#include <stdexcept>
#include <vector>

#include <Eigen/Dense>

#include "sixdma/channel.hpp"
#include "sixdma/geometry.hpp"
#include "sixdma/pattern.hpp"

namespace sixdma {

/// Condition-number ceiling above which a Fisher matrix is treated as
/// unidentifiable.
inline constexpr double kMaxFimCondition = 1e12;

/// Sentinel bound (rad^2) reported for unidentifiable geometries so that
/// optimizer fitness stays total.
inline constexpr double kUnidentifiableCrb = 1e12;

/// Probe signal over one sensing frame. `matrix` holds the realized
/// snapshots and is empty in ideal mode, where the covariance is set to
/// (power / NB) I directly.
struct ProbeSignal {
    Eigen::MatrixXcd matrix;      // NB x L, empty when ideal
    int snapshots = 0;            // L
    double power = 0.0;           // total transmit power, W
    Eigen::MatrixXcd covariance;  // NB x NB Hermitian sample covariance
    bool ideal = false;

    bool has_realized() const { return matrix.size() > 0; }
};

/// Thrown when the Fisher matrix cannot be inverted reliably.
class SingularFimError : public std::runtime_error {
public:
    explicit SingularFimError(double condition);

    double condition() const { return condition_; }

private:
    double condition_;
};

struct CrbReport {
    double total = 0.0;                   // tr(F^-1), rad^2
    Eigen::VectorXd per_target;           // diag(F^-1), rad^2
    Eigen::VectorXd power_gain;           // ||h_k^H X||_2^2 per target
    Eigen::VectorXd geometric_gain;       // ||dh_k/dphi||_2 per target
};

/// Fisher information for the DoA vector under the deterministic
/// Gaussian-mean model: F_ij = (2L/sigma^2) Re tr(Gdot_i^H Gdot_j S_X) with
/// Gdot_k = rho_k (dh_k h_k^H + h_k dh_k^H). Exactly symmetric by
/// construction.
Eigen::MatrixXd fisher_information(const ArrayLayout& layout, const PatternKind& kind,
                                   const std::vector<Target>& targets,
                                   const ProbeSignal& probe, double noise_var,
                                   Wavelength lambda);

/// tr(F^-1). Throws SingularFimError when F has a nonpositive eigenvalue or
/// condition number above kMaxFimCondition.
double crb_total(const Eigen::MatrixXd& fim);

/// diag(F^-1); error behavior as crb_total.
Eigen::VectorXd crb_per_target(const Eigen::MatrixXd& fim);

/// Single-surface single-target bound from the rank-one echo structure, as a
/// cross-check against crb_total. Requires one surface centered at the
/// origin.
double crb_closed_form_single(const ArrayLayout& layout, const PatternKind& kind,
                              const Target& target, const ProbeSignal& probe,
                              double noise_var, Wavelength lambda);

struct GainDecomposition {
    Eigen::VectorXd power_gain;
    Eigen::VectorXd geometric_gain;
};

/// Per-target probing power ||h_k^H X||_2^2 and derivative arc-length rate
/// ||dh_k||_2.
GainDecomposition gain_decomposition(const ArrayLayout& layout, const PatternKind& kind,
                                     const std::vector<Target>& targets,
                                     const ProbeSignal& probe, Wavelength lambda);

/// Full report: total and per-target bounds plus the gain decomposition.
CrbReport crb_report(const ArrayLayout& layout, const PatternKind& kind,
                     const std::vector<Target>& targets, const ProbeSignal& probe,
                     double noise_var, Wavelength lambda);

}  // namespace sixdma

#endif  // SIXDMA_ESTIMATION_HPP

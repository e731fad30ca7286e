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

#include "sixdma/estimation.hpp"

#include <cmath>
#include <complex>
#include <limits>
#include <string>

namespace sixdma {

namespace {

using cd = std::complex<double>;

void validate_probe(const ProbeSignal& probe, Eigen::Index dims) {
    if (probe.covariance.rows() != dims || probe.covariance.cols() != dims) {
        throw std::invalid_argument("probe covariance does not match antenna count");
    }
    if (probe.snapshots <= 0) {
        throw std::invalid_argument("probe snapshot count must be positive");
    }
    if (probe.has_realized() && probe.matrix.rows() != dims) {
        throw std::invalid_argument("probe matrix does not match antenna count");
    }
}

// Eigendecomposition-backed inverse shared by crb_total / crb_per_target.
// Throws when the matrix is not safely positive definite.
Eigen::MatrixXd checked_inverse(const Eigen::MatrixXd& fim) {
    if (fim.rows() != fim.cols() || fim.rows() < 1) {
        throw std::invalid_argument("Fisher matrix must be square and nonempty");
    }
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(fim);
    if (es.info() != Eigen::Success) {
        throw SingularFimError(std::numeric_limits<double>::infinity());
    }
    const Eigen::VectorXd& ev = es.eigenvalues();
    const double lo = ev(0);
    const double hi = ev(ev.size() - 1);
    if (!(lo > 0.0)) {
        throw SingularFimError(std::numeric_limits<double>::infinity());
    }
    const double condition = hi / lo;
    if (condition > kMaxFimCondition) {
        throw SingularFimError(condition);
    }
    return es.eigenvectors() * ev.cwiseInverse().asDiagonal() *
           es.eigenvectors().transpose();
}

}  // namespace

SingularFimError::SingularFimError(double condition)
    : std::runtime_error("Fisher matrix unidentifiable, condition estimate " +
                         std::to_string(condition)),
      condition_(condition) {}

Eigen::MatrixXd fisher_information(const ArrayLayout& layout, const PatternKind& kind,
                                   const std::vector<Target>& targets,
                                   const ProbeSignal& probe, double noise_var,
                                   Wavelength lambda) {
    const auto K = static_cast<Eigen::Index>(targets.size());
    if (K < 1) {
        throw std::invalid_argument("fisher_information: need at least one target");
    }
    if (!(noise_var > 0.0)) {
        throw std::invalid_argument("fisher_information: noise variance must be positive");
    }
    const auto dims = static_cast<Eigen::Index>(layout.total_antennas());
    validate_probe(probe, dims);

    Eigen::MatrixXcd H(dims, K);
    Eigen::MatrixXcd D(dims, K);
    Eigen::VectorXcd rho(K);
    for (Eigen::Index k = 0; k < K; ++k) {
        H.col(k) = channel_vector(layout, kind, targets[k].phi, lambda);
        D.col(k) = channel_derivative(layout, kind, targets[k].phi, lambda);
        rho(k) = targets[k].rho;
    }

    // Rank-two structure of each Gdot_k collapses the trace to K x K grams.
    const Eigen::MatrixXcd HH = H.adjoint() * H;
    const Eigen::MatrixXcd HD = H.adjoint() * D;
    const Eigen::MatrixXcd DD = D.adjoint() * D;
    Eigen::MatrixXcd HSH, HSD, DSH, DSD;
    if (probe.ideal) {
        const double scale = probe.power / static_cast<double>(dims);
        HSH = scale * HH;
        HSD = scale * HD;
        DSH = scale * HD.adjoint();
        DSD = scale * DD;
    } else {
        const Eigen::MatrixXcd SH = probe.covariance * H;
        const Eigen::MatrixXcd SD = probe.covariance * D;
        HSH = H.adjoint() * SH;
        HSD = H.adjoint() * SD;
        DSH = D.adjoint() * SH;
        DSD = D.adjoint() * SD;
    }

    const double front = 2.0 * static_cast<double>(probe.snapshots) / noise_var;
    Eigen::MatrixXd fim(K, K);
    for (Eigen::Index i = 0; i < K; ++i) {
        for (Eigen::Index j = i; j < K; ++j) {
            const cd t = DD(i, j) * HSH(j, i) + std::conj(HD(j, i)) * DSH(j, i) +
                         HD(i, j) * HSD(j, i) + HH(i, j) * DSD(j, i);
            const double value = front * std::real(std::conj(rho(i)) * rho(j) * t);
            fim(i, j) = value;
            fim(j, i) = value;
        }
    }
    return fim;
}

double crb_total(const Eigen::MatrixXd& fim) {
    return checked_inverse(fim).trace();
}

Eigen::VectorXd crb_per_target(const Eigen::MatrixXd& fim) {
    return checked_inverse(fim).diagonal();
}

double crb_closed_form_single(const ArrayLayout& layout, const PatternKind& kind,
                              const Target& target, const ProbeSignal& probe,
                              double noise_var, Wavelength lambda) {
    if (layout.surface_count() != 1) {
        throw std::invalid_argument("crb_closed_form_single: exactly one surface required");
    }
    if (layout.poses[0].position.norm() > 1e-12) {
        throw std::invalid_argument("crb_closed_form_single: surface must be centered at the origin");
    }
    if (!(noise_var > 0.0)) {
        throw std::invalid_argument("crb_closed_form_single: noise variance must be positive");
    }
    const auto dims = static_cast<Eigen::Index>(layout.total_antennas());
    validate_probe(probe, dims);

    const Eigen::VectorXcd h = channel_vector(layout, kind, target.phi, lambda);
    const Eigen::VectorXcd d = channel_derivative(layout, kind, target.phi, lambda);
    const Eigen::MatrixXcd& S = probe.covariance;

    // Contractions of tr(A^H A S), tr(Adot^H A S), tr(Adot^H Adot S) with
    // A = h h^H and Adot = d h^H + h d^H.
    const cd hh = h.squaredNorm();
    const cd dd = d.squaredNorm();
    const cd hd = h.dot(d);            // h^H d
    const cd hSh = h.dot(S * h);
    const cd hSd = h.dot(S * d);
    const cd dSh = d.dot(S * h);
    const cd dSd = d.dot(S * d);

    const cd t1 = hh * hSh;
    const cd t2 = hh * hSd + std::conj(hd) * hSh;
    const cd t3 = hd * hSd + hh * dSd + dd * hSh + std::conj(hd) * dSh;

    const double L = static_cast<double>(probe.snapshots);
    const double rho2 = std::norm(target.rho);
    const double denom = 2.0 * rho2 * L * (std::real(t3 * t1) - std::norm(t2));
    if (!(denom > 0.0)) {
        throw SingularFimError(std::numeric_limits<double>::infinity());
    }
    return noise_var * std::real(t1) / denom;
}

GainDecomposition gain_decomposition(const ArrayLayout& layout, const PatternKind& kind,
                                     const std::vector<Target>& targets,
                                     const ProbeSignal& probe, Wavelength lambda) {
    const auto K = static_cast<Eigen::Index>(targets.size());
    const auto dims = static_cast<Eigen::Index>(layout.total_antennas());
    validate_probe(probe, dims);

    GainDecomposition out;
    out.power_gain.resize(K);
    out.geometric_gain.resize(K);
    for (Eigen::Index k = 0; k < K; ++k) {
        const Eigen::VectorXcd h = channel_vector(layout, kind, targets[k].phi, lambda);
        const Eigen::VectorXcd d = channel_derivative(layout, kind, targets[k].phi, lambda);
        if (probe.has_realized()) {
            out.power_gain(k) = (probe.matrix.adjoint() * h).squaredNorm();
        } else {
            // ||h^H X||^2 = L h^H S_X h for S_X formed from X; use the
            // covariance directly in ideal mode.
            out.power_gain(k) =
                static_cast<double>(probe.snapshots) * std::real(h.dot(probe.covariance * h));
        }
        out.geometric_gain(k) = d.norm();
    }
    return out;
}

CrbReport crb_report(const ArrayLayout& layout, const PatternKind& kind,
                     const std::vector<Target>& targets, const ProbeSignal& probe,
                     double noise_var, Wavelength lambda) {
    const Eigen::MatrixXd fim =
        fisher_information(layout, kind, targets, probe, noise_var, lambda);
    CrbReport report;
    report.per_target = crb_per_target(fim);
    report.total = report.per_target.sum();
    const GainDecomposition gains = gain_decomposition(layout, kind, targets, probe, lambda);
    report.power_gain = gains.power_gain;
    report.geometric_gain = gains.geometric_gain;
    return report;
}

}  // namespace sixdma

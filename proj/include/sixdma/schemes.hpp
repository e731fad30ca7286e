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

#ifndef SIXDMA_SCHEMES_HPP
#define SIXDMA_SCHEMES_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "sixdma/channel.hpp"
#include "sixdma/geometry.hpp"
#include "sixdma/pattern.hpp"
#include "sixdma/pso.hpp"
#include "sixdma/scenario.hpp"

namespace sixdma {

enum class SchemeKind { SixDma, Fpa, FaMa };

std::string to_string(SchemeKind kind);
std::optional<SchemeKind> parse_scheme(std::string_view name);  // 6dma | fpa | fa-ma

/// Station-side array description shared by all schemes.
struct ArraySpec {
    int surfaces = 8;            // B
    int antennas_per = 2;        // N per surface
    SiteSpace site{0.6};         // side A, meters
    MovementConstraints cons{};  // d_min, meters
    Wavelength lambda{};
    /// Side of the square aperture each fixed sector offers to in-plane
    /// antenna movement, meters.
    double sector_panel = 1.0;

    int total_antennas() const { return surfaces * antennas_per; }
};

/// Fixed three-sector layout: sector centers on a horizontal circle of
/// radius side/4 at azimuths 90, 210, 330 degrees, outward normals,
/// half-wavelength line arrays. The first two sectors take ceil(NB/3)
/// antennas, the last the remainder.
ArrayLayout build_fpa(int total_antennas, Wavelength lambda, const SiteSpace& site);

struct SchemeRunResult {
    ArrayLayout layout;
    double fitness = 0.0;            // total DoA bound plus any penalties
    std::vector<double> history;     // best-fitness trace, length iterations + 1
    bool feasible = false;
    double penalty_used = 0.0;
};

/// Full pose search over all surfaces.
SchemeRunResult optimize_6dma(const SensingScenario& scenario, const ArraySpec& spec,
                              const PatternKind& kind, const ProbeSignal& probe,
                              const PsoParams& params, std::uint64_t seed);

/// Position-only search: sector poses frozen to the fixed layout, antennas
/// move in-plane inside each sector panel with half-wavelength spacing
/// enforced by penalty. Zero iterations returns the fixed layout as-is.
SchemeRunResult optimize_fa_ma(const SensingScenario& scenario, const ArraySpec& spec,
                               const PatternKind& kind, const ProbeSignal& probe,
                               const PsoParams& params, std::uint64_t seed);

/// Builds and evaluates the fixed three-sector baseline (no optimization).
SchemeRunResult evaluate_fpa(const SensingScenario& scenario, const ArraySpec& spec,
                             const PatternKind& kind, const ProbeSignal& probe);

/// Dispatch on the scheme tag.
SchemeRunResult run_scheme(SchemeKind scheme, const SensingScenario& scenario,
                           const ArraySpec& spec, const PatternKind& kind,
                           const ProbeSignal& probe, const PsoParams& params,
                           std::uint64_t seed);

}  // namespace sixdma

#endif  // SIXDMA_SCHEMES_HPP

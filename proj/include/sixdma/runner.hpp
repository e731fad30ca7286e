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

#ifndef SIXDMA_RUNNER_HPP
#define SIXDMA_RUNNER_HPP

#include <cstdint>
#include <vector>

#include "sixdma/config.hpp"
#include "sixdma/records.hpp"

namespace sixdma {

/// Worker threads for the experiment fan-out; reads SIXDMA_WORKERS,
/// defaults to 1.
int worker_count();

/// One optimization cell: every power of the sweep evaluated on the layout
/// optimized for this (scheme, pattern, seed).
std::vector<RunRecord> run_cell(const ExperimentConfig& config, SchemeKind scheme,
                                const std::string& pattern, std::uint64_t seed);

/// Full cartesian product of the config's patterns, schemes, and seeds.
/// Record order is canonical (pattern, scheme, seed, power) regardless of
/// worker count.
std::vector<RunRecord> run_experiment(const ExperimentConfig& config);

}  // namespace sixdma

#endif  // SIXDMA_RUNNER_HPP

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

#ifndef SIXDMA_PLOT_HPP
#define SIXDMA_PLOT_HPP

#include <string>
#include <vector>

#include "sixdma/records.hpp"

namespace sixdma {

/// SVG figure of total bound (log scale) against transmit power: one curve
/// per (scheme, pattern) showing the across-seed median with a min-max band
/// and per-point markers.
std::string format_plot_svg(const std::vector<CsvRecord>& rows);

void write_plot(const std::vector<CsvRecord>& rows, const std::string& path);

}  // namespace sixdma

#endif  // SIXDMA_PLOT_HPP

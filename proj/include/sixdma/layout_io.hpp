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

#ifndef SIXDMA_LAYOUT_IO_HPP
#define SIXDMA_LAYOUT_IO_HPP

#include <stdexcept>
#include <string>
#include <vector>

#include "sixdma/geometry.hpp"

namespace sixdma {

/// Malformed layout file; the message names the offending line.
class LayoutIoError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Line-oriented text form of a layout. Numbers use shortest
/// round-trippable formatting, so format -> parse -> format is
/// byte-identical.
std::string format_layout(const ArrayLayout& layout);

/// Inverse of format_layout. Rotation angles outside [0, 2*pi) are
/// canonicalized; each such repair is reported through `warnings` when
/// given.
ArrayLayout parse_layout(const std::string& text,
                         std::vector<std::string>* warnings = nullptr);

void save_layout(const ArrayLayout& layout, const std::string& path);

ArrayLayout load_layout(const std::string& path,
                        std::vector<std::string>* warnings = nullptr);

}  // namespace sixdma

#endif  // SIXDMA_LAYOUT_IO_HPP

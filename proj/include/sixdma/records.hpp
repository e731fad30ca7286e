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

#ifndef SIXDMA_RECORDS_HPP
#define SIXDMA_RECORDS_HPP

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "sixdma/estimation.hpp"
#include "sixdma/geometry.hpp"
#include "sixdma/schemes.hpp"

namespace sixdma {

/// Result of evaluating one (scheme, pattern, seed, power) cell. The layout
/// and fitness history stay in memory; the CSV carries the scalar columns
/// plus the per-target vectors.
struct RunRecord {
    std::uint64_t config_hash = 0;
    SchemeKind scheme = SchemeKind::Fpa;
    std::string pattern;
    std::uint64_t seed = 0;
    double power_dbm = 0.0;
    CrbReport report;
    ArrayLayout layout;
    std::vector<double> history;
    int iterations = 0;
    double wallclock_s = 0.0;
    bool feasible = true;
};

class RecordsError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// CSV text: a `# config_hash = <hex>` comment, a header row, then one data
/// row per record. Vector columns are semicolon-joined; numbers use
/// shortest round-trippable formatting.
std::string format_csv(const std::vector<RunRecord>& records);

void write_csv(const std::vector<RunRecord>& records, const std::string& path);

/// One parsed CSV row.
struct CsvRecord {
    std::string scheme;
    std::string pattern;
    std::uint64_t seed = 0;
    double power_dbm = 0.0;
    double crb_total_rad2 = 0.0;
    std::vector<double> crb_per_target;
    std::vector<double> power_gain;
    std::vector<double> geometric_gain;
    int iterations = 0;
    double wallclock_s = 0.0;
};

struct CsvContent {
    std::uint64_t config_hash = 0;
    std::vector<CsvRecord> rows;
};

CsvContent parse_csv(const std::string& text);

CsvContent read_csv(const std::string& path);

}  // namespace sixdma

#endif  // SIXDMA_RECORDS_HPP

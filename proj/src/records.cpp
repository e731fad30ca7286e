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

#include "sixdma/records.hpp"

#include <charconv>
#include <fstream>
#include <sstream>

namespace sixdma {

namespace {

constexpr const char* kColumns =
    "scheme,pattern,seed,power_dbm,crb_total_rad2,crb_per_target,power_gain,"
    "geometric_gain,iterations,wallclock_s";

std::string format_double(double value) {
    char buf[64];
    const auto res = std::to_chars(buf, buf + sizeof(buf), value);
    return std::string(buf, res.ptr);
}

std::string format_hex(std::uint64_t value) {
    char buf[32];
    const auto res = std::to_chars(buf, buf + sizeof(buf), value, 16);
    return std::string(buf, res.ptr);
}

std::string join_vector(const Eigen::VectorXd& values) {
    std::string out;
    for (Eigen::Index i = 0; i < values.size(); ++i) {
        if (i > 0) out += ';';
        out += format_double(values(i));
    }
    return out;
}

double parse_double(const std::string& token, int line) {
    double value = 0.0;
    const char* begin = token.data();
    const auto res = std::from_chars(begin, begin + token.size(), value);
    if (res.ec != std::errc{} || res.ptr != begin + token.size()) {
        throw RecordsError("csv line " + std::to_string(line) + ": not a number: '" + token + "'");
    }
    return value;
}

std::vector<double> parse_vector(const std::string& token, int line) {
    std::vector<double> out;
    if (token.empty()) return out;
    std::size_t start = 0;
    while (true) {
        const std::size_t sep = token.find(';', start);
        const std::string piece = token.substr(start, sep == std::string::npos
                                                          ? std::string::npos
                                                          : sep - start);
        out.push_back(parse_double(piece, line));
        if (sep == std::string::npos) break;
        start = sep + 1;
    }
    return out;
}

std::vector<std::string> split_fields(const std::string& line) {
    std::vector<std::string> out;
    std::size_t start = 0;
    while (true) {
        const std::size_t sep = line.find(',', start);
        if (sep == std::string::npos) {
            out.push_back(line.substr(start));
            break;
        }
        out.push_back(line.substr(start, sep - start));
        start = sep + 1;
    }
    return out;
}

}  // namespace

std::string format_csv(const std::vector<RunRecord>& records) {
    std::string out;
    if (!records.empty()) {
        out += "# config_hash = " + format_hex(records.front().config_hash) + "\n";
    }
    out += kColumns;
    out += '\n';
    for (const RunRecord& r : records) {
        out += to_string(r.scheme);
        out += ',';
        out += r.pattern;
        out += ',';
        out += std::to_string(r.seed);
        out += ',';
        out += format_double(r.power_dbm);
        out += ',';
        out += format_double(r.report.total);
        out += ',';
        out += join_vector(r.report.per_target);
        out += ',';
        out += join_vector(r.report.power_gain);
        out += ',';
        out += join_vector(r.report.geometric_gain);
        out += ',';
        out += std::to_string(r.iterations);
        out += ',';
        out += format_double(r.wallclock_s);
        out += '\n';
    }
    return out;
}

void write_csv(const std::vector<RunRecord>& records, const std::string& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out) {
        throw RecordsError("cannot open for writing: " + path);
    }
    out << format_csv(records);
    if (!out) {
        throw RecordsError("write failed: " + path);
    }
}

CsvContent parse_csv(const std::string& text) {
    CsvContent content;
    std::istringstream stream(text);
    std::string line;
    int line_no = 0;
    bool saw_columns = false;
    while (std::getline(stream, line)) {
        ++line_no;
        if (line.empty()) continue;
        if (line[0] == '#') {
            const std::string marker = "# config_hash = ";
            if (line.rfind(marker, 0) == 0) {
                const std::string hex = line.substr(marker.size());
                std::uint64_t value = 0;
                const auto res =
                    std::from_chars(hex.data(), hex.data() + hex.size(), value, 16);
                if (res.ec != std::errc{} || res.ptr != hex.data() + hex.size()) {
                    throw RecordsError("csv line " + std::to_string(line_no) +
                                       ": bad config hash");
                }
                content.config_hash = value;
            }
            continue;
        }
        if (!saw_columns) {
            if (line != kColumns) {
                throw RecordsError("csv line " + std::to_string(line_no) +
                                   ": unexpected header row");
            }
            saw_columns = true;
            continue;
        }
        const std::vector<std::string> fields = split_fields(line);
        if (fields.size() != 10) {
            throw RecordsError("csv line " + std::to_string(line_no) + ": expected 10 fields, got " +
                               std::to_string(fields.size()));
        }
        CsvRecord row;
        row.scheme = fields[0];
        row.pattern = fields[1];
        row.seed = static_cast<std::uint64_t>(std::stoull(fields[2]));
        row.power_dbm = parse_double(fields[3], line_no);
        row.crb_total_rad2 = parse_double(fields[4], line_no);
        row.crb_per_target = parse_vector(fields[5], line_no);
        row.power_gain = parse_vector(fields[6], line_no);
        row.geometric_gain = parse_vector(fields[7], line_no);
        row.iterations = static_cast<int>(parse_double(fields[8], line_no));
        row.wallclock_s = parse_double(fields[9], line_no);
        content.rows.push_back(std::move(row));
    }
    if (!saw_columns) {
        throw RecordsError("csv has no header row");
    }
    return content;
}

CsvContent read_csv(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw RecordsError("cannot open csv file: " + path);
    }
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return parse_csv(buffer.str());
}

}  // namespace sixdma

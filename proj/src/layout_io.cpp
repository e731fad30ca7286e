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

#include "sixdma/layout_io.hpp"

#include <charconv>
#include <fstream>
#include <sstream>

namespace sixdma {

namespace {

constexpr double kTwoPi = 2.0 * 3.14159265358979323846;
constexpr const char* kHeader = "# sixdma layout v1";

std::string format_double(double value) {
    char buf[64];
    const auto res = std::to_chars(buf, buf + sizeof(buf), value);
    return std::string(buf, res.ptr);
}

std::string format_vec(const Eigen::Vector3d& v) {
    return format_double(v.x()) + " " + format_double(v.y()) + " " + format_double(v.z());
}

[[noreturn]] void fail(int line, const std::string& message) {
    throw LayoutIoError("layout parse error at line " + std::to_string(line) + ": " + message);
}

double parse_double(const std::string& token, int line) {
    double value = 0.0;
    const char* begin = token.data();
    const char* end = begin + token.size();
    const auto res = std::from_chars(begin, end, value);
    if (res.ec != std::errc{} || res.ptr != end) {
        fail(line, "not a number: '" + token + "'");
    }
    return value;
}

Eigen::Vector3d parse_vec(const std::string& text, int line) {
    std::istringstream stream(text);
    std::string a, b, c, extra;
    if (!(stream >> a >> b >> c)) {
        fail(line, "expected three numbers");
    }
    if (stream >> extra) {
        fail(line, "trailing content after three numbers");
    }
    return {parse_double(a, line), parse_double(b, line), parse_double(c, line)};
}

std::string trim(const std::string& s) {
    const auto first = s.find_first_not_of(" \t\r");
    if (first == std::string::npos) return {};
    const auto last = s.find_last_not_of(" \t\r");
    return s.substr(first, last - first + 1);
}

}  // namespace

std::string format_layout(const ArrayLayout& layout) {
    if (layout.surface_count() < 1 || layout.poses.size() != layout.locals.size()) {
        throw std::invalid_argument("format_layout: layout is empty or inconsistent");
    }
    std::string out;
    out += kHeader;
    out += "\nsurfaces = " + std::to_string(layout.surface_count()) + "\n";
    for (int i = 0; i < layout.surface_count(); ++i) {
        const auto idx = static_cast<std::size_t>(i);
        out += "[surface " + std::to_string(i) + "]\n";
        out += "position = " + format_vec(layout.poses[idx].position) + "\n";
        out += "rotation = " + format_vec(layout.poses[idx].rotation) + "\n";
        out += "normal = " + format_vec(layout.locals[idx].normal) + "\n";
        for (const Eigen::Vector3d& offset : layout.locals[idx].offsets) {
            out += "offset = " + format_vec(offset) + "\n";
        }
    }
    return out;
}

ArrayLayout parse_layout(const std::string& text, std::vector<std::string>* warnings) {
    std::istringstream stream(text);
    std::string raw;
    int line_no = 0;
    int declared_surfaces = -1;
    int current = -1;  // index of the section being filled
    bool saw_header = false;

    ArrayLayout layout;
    std::vector<bool> has_position, has_rotation, has_normal;

    auto finish_section = [&](int line) {
        if (current < 0) return;
        const auto idx = static_cast<std::size_t>(current);
        if (!has_position[idx]) fail(line, "surface " + std::to_string(current) + " missing position");
        if (!has_rotation[idx]) fail(line, "surface " + std::to_string(current) + " missing rotation");
        if (!has_normal[idx]) fail(line, "surface " + std::to_string(current) + " missing normal");
        if (layout.locals[idx].offsets.empty()) {
            fail(line, "surface " + std::to_string(current) + " has no antenna offsets");
        }
    };

    while (std::getline(stream, raw)) {
        ++line_no;
        const std::string line = trim(raw);
        if (line.empty()) continue;
        if (line[0] == '#') {
            if (!saw_header) {
                if (line != kHeader) fail(line_no, "unrecognized header");
                saw_header = true;
            }
            continue;
        }
        if (!saw_header) fail(line_no, "missing layout header");

        if (line.front() == '[') {
            if (line.back() != ']') fail(line_no, "unterminated section name");
            const std::string inner = trim(line.substr(1, line.size() - 2));
            if (inner.rfind("surface ", 0) != 0) fail(line_no, "unknown section '" + inner + "'");
            const int index = static_cast<int>(parse_double(trim(inner.substr(8)), line_no));
            if (index != current + 1) {
                fail(line_no, "expected [surface " + std::to_string(current + 1) + "]");
            }
            finish_section(line_no);
            current = index;
            layout.poses.emplace_back();
            layout.locals.emplace_back();
            layout.locals.back().offsets.clear();
            has_position.push_back(false);
            has_rotation.push_back(false);
            has_normal.push_back(false);
            continue;
        }

        const auto eq = line.find('=');
        if (eq == std::string::npos) fail(line_no, "expected 'key = value'");
        const std::string key = trim(line.substr(0, eq));
        const std::string value = trim(line.substr(eq + 1));

        if (key == "surfaces") {
            if (declared_surfaces >= 0) fail(line_no, "duplicate 'surfaces' line");
            declared_surfaces = static_cast<int>(parse_double(value, line_no));
            if (declared_surfaces < 1) fail(line_no, "'surfaces' must be at least 1");
            continue;
        }
        if (current < 0) fail(line_no, "'" + key + "' outside any [surface] section");
        const auto idx = static_cast<std::size_t>(current);
        if (key == "position") {
            if (has_position[idx]) fail(line_no, "duplicate position");
            layout.poses[idx].position = parse_vec(value, line_no);
            has_position[idx] = true;
        } else if (key == "rotation") {
            if (has_rotation[idx]) fail(line_no, "duplicate rotation");
            Eigen::Vector3d u = parse_vec(value, line_no);
            for (int d = 0; d < 3; ++d) {
                if (u(d) < 0.0 || u(d) >= kTwoPi) {
                    const double fixed = canonicalize_angle(u(d));
                    if (warnings) {
                        warnings->push_back("line " + std::to_string(line_no) +
                                            ": rotation angle " + format_double(u(d)) +
                                            " canonicalized to " + format_double(fixed));
                    }
                    u(d) = fixed;
                }
            }
            layout.poses[idx].rotation = u;
            has_rotation[idx] = true;
        } else if (key == "normal") {
            if (has_normal[idx]) fail(line_no, "duplicate normal");
            layout.locals[idx].normal = parse_vec(value, line_no);
            has_normal[idx] = true;
        } else if (key == "offset") {
            layout.locals[idx].offsets.push_back(parse_vec(value, line_no));
        } else {
            fail(line_no, "unknown key '" + key + "'");
        }
    }

    if (!saw_header) fail(line_no, "missing layout header");
    if (declared_surfaces < 0) fail(line_no, "missing 'surfaces' line");
    finish_section(line_no);
    if (layout.surface_count() != declared_surfaces) {
        fail(line_no, "declared " + std::to_string(declared_surfaces) + " surfaces but found " +
                          std::to_string(layout.surface_count()));
    }
    return layout;
}

void save_layout(const ArrayLayout& layout, const std::string& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out) {
        throw LayoutIoError("cannot open for writing: " + path);
    }
    out << format_layout(layout);
    if (!out) {
        throw LayoutIoError("write failed: " + path);
    }
}

ArrayLayout load_layout(const std::string& path, std::vector<std::string>* warnings) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw LayoutIoError("cannot open layout file: " + path);
    }
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return parse_layout(buffer.str(), warnings);
}

}  // namespace sixdma

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

#include "sixdma/plot.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <map>
#include <set>
#include <stdexcept>

namespace sixdma {

namespace {

constexpr double kWidth = 720.0;
constexpr double kHeight = 520.0;
constexpr double kLeft = 80.0;
constexpr double kRight = 30.0;
constexpr double kTop = 40.0;
constexpr double kBottom = 60.0;

std::string num(double value) {
    char buf[64];
    const auto res = std::to_chars(buf, buf + sizeof(buf), value, std::chars_format::fixed, 2);
    return std::string(buf, res.ptr);
}

std::string scheme_color(const std::string& scheme) {
    if (scheme == "6dma") return "#d62728";
    if (scheme == "fa-ma") return "#1f77b4";
    if (scheme == "fpa") return "#2ca02c";
    return "#7f7f7f";
}

struct SeriesPoint {
    double power = 0.0;
    double median = 0.0;
    double lo = 0.0;
    double hi = 0.0;
};

double median_of(std::vector<double> values) {
    std::sort(values.begin(), values.end());
    const std::size_t n = values.size();
    if (n % 2 == 1) return values[n / 2];
    return 0.5 * (values[n / 2 - 1] + values[n / 2]);
}

}  // namespace

std::string format_plot_svg(const std::vector<CsvRecord>& rows) {
    if (rows.empty()) {
        throw std::invalid_argument("format_plot_svg: no rows to plot");
    }

    // (scheme, pattern) -> power -> totals across seeds
    std::map<std::pair<std::string, std::string>, std::map<double, std::vector<double>>> groups;
    for (const CsvRecord& row : rows) {
        if (!(row.crb_total_rad2 > 0.0)) continue;
        groups[{row.scheme, row.pattern}][row.power_dbm].push_back(row.crb_total_rad2);
    }
    if (groups.empty()) {
        throw std::invalid_argument("format_plot_svg: no positive bound values");
    }

    std::map<std::pair<std::string, std::string>, std::vector<SeriesPoint>> series;
    double xmin = 1e300, xmax = -1e300, ymin = 1e300, ymax = -1e300;
    for (const auto& [key, by_power] : groups) {
        std::vector<SeriesPoint> points;
        for (const auto& [power, values] : by_power) {
            SeriesPoint p;
            p.power = power;
            p.median = std::log10(median_of(values));
            p.lo = std::log10(*std::min_element(values.begin(), values.end()));
            p.hi = std::log10(*std::max_element(values.begin(), values.end()));
            points.push_back(p);
            xmin = std::min(xmin, power);
            xmax = std::max(xmax, power);
            ymin = std::min(ymin, p.lo);
            ymax = std::max(ymax, p.hi);
        }
        series[key] = std::move(points);
    }
    if (xmax <= xmin) {
        xmin -= 1.0;
        xmax += 1.0;
    }
    double ylo = std::floor(ymin);
    double yhi = std::ceil(ymax);
    if (yhi <= ylo) yhi = ylo + 1.0;

    const double plot_w = kWidth - kLeft - kRight;
    const double plot_h = kHeight - kTop - kBottom;
    const auto to_x = [&](double power) {
        return kLeft + (power - xmin) / (xmax - xmin) * plot_w;
    };
    const auto to_y = [&](double log_value) {
        return kTop + (yhi - log_value) / (yhi - ylo) * plot_h;
    };

    std::string svg;
    svg += "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" + num(kWidth) +
           "\" height=\"" + num(kHeight) + "\" viewBox=\"0 0 " + num(kWidth) + " " +
           num(kHeight) + "\">\n";
    svg += "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";

    // grid and y decade labels
    for (double d = ylo; d <= yhi + 1e-9; d += 1.0) {
        const double y = to_y(d);
        svg += "<line x1=\"" + num(kLeft) + "\" y1=\"" + num(y) + "\" x2=\"" +
               num(kWidth - kRight) + "\" y2=\"" + num(y) +
               "\" stroke=\"#dddddd\" stroke-width=\"1\"/>\n";
        svg += "<text x=\"" + num(kLeft - 8.0) + "\" y=\"" + num(y + 4.0) +
               "\" font-family=\"sans-serif\" font-size=\"12\" text-anchor=\"end\">1e" +
               std::to_string(static_cast<int>(d)) + "</text>\n";
    }
    // x ticks at every swept power
    std::set<double> powers;
    for (const auto& [key, points] : series) {
        for (const SeriesPoint& p : points) powers.insert(p.power);
    }
    for (double p : powers) {
        const double x = to_x(p);
        svg += "<line x1=\"" + num(x) + "\" y1=\"" + num(kHeight - kBottom) + "\" x2=\"" +
               num(x) + "\" y2=\"" + num(kHeight - kBottom + 6.0) +
               "\" stroke=\"black\" stroke-width=\"1\"/>\n";
        char label[32];
        const auto res = std::to_chars(label, label + sizeof(label), p, std::chars_format::fixed, 0);
        svg += "<text x=\"" + num(x) + "\" y=\"" + num(kHeight - kBottom + 20.0) +
               "\" font-family=\"sans-serif\" font-size=\"12\" text-anchor=\"middle\">" +
               std::string(label, res.ptr) + "</text>\n";
    }
    // axes
    svg += "<line x1=\"" + num(kLeft) + "\" y1=\"" + num(kTop) + "\" x2=\"" + num(kLeft) +
           "\" y2=\"" + num(kHeight - kBottom) + "\" stroke=\"black\" stroke-width=\"1.5\"/>\n";
    svg += "<line x1=\"" + num(kLeft) + "\" y1=\"" + num(kHeight - kBottom) + "\" x2=\"" +
           num(kWidth - kRight) + "\" y2=\"" + num(kHeight - kBottom) +
           "\" stroke=\"black\" stroke-width=\"1.5\"/>\n";
    svg += "<text x=\"" + num(kLeft + plot_w / 2.0) + "\" y=\"" + num(kHeight - 18.0) +
           "\" font-family=\"sans-serif\" font-size=\"14\" text-anchor=\"middle\">transmit power (dBm)</text>\n";
    svg += "<text x=\"20\" y=\"" + num(kTop + plot_h / 2.0) +
           "\" font-family=\"sans-serif\" font-size=\"14\" text-anchor=\"middle\" transform=\"rotate(-90 20 " +
           num(kTop + plot_h / 2.0) + ")\">total CRB (rad^2)</text>\n";

    double legend_y = kTop + 10.0;
    for (const auto& [key, points] : series) {
        const std::string color = scheme_color(key.first);
        const bool dashed = key.second == "isotropic";
        const std::string dash = dashed ? " stroke-dasharray=\"6 4\"" : "";

        // min-max band
        if (points.size() > 1) {
            std::string band = "<polygon fill=\"" + color + "\" fill-opacity=\"0.12\" stroke=\"none\" points=\"";
            for (const SeriesPoint& p : points) {
                band += num(to_x(p.power)) + "," + num(to_y(p.hi)) + " ";
            }
            for (auto it = points.rbegin(); it != points.rend(); ++it) {
                band += num(to_x(it->power)) + "," + num(to_y(it->lo)) + " ";
            }
            band += "\"/>\n";
            svg += band;
        }

        // median polyline
        if (points.size() > 1) {
            std::string line = "<polyline fill=\"none\" stroke=\"" + color +
                               "\" stroke-width=\"2\"" + dash + " points=\"";
            for (const SeriesPoint& p : points) {
                line += num(to_x(p.power)) + "," + num(to_y(p.median)) + " ";
            }
            line += "\"/>\n";
            svg += line;
        }
        for (const SeriesPoint& p : points) {
            svg += "<circle cx=\"" + num(to_x(p.power)) + "\" cy=\"" + num(to_y(p.median)) +
                   "\" r=\"3\" fill=\"" + color + "\"/>\n";
        }

        // legend entry
        svg += "<line x1=\"" + num(kWidth - kRight - 150.0) + "\" y1=\"" + num(legend_y) +
               "\" x2=\"" + num(kWidth - kRight - 120.0) + "\" y2=\"" + num(legend_y) +
               "\" stroke=\"" + color + "\" stroke-width=\"2\"" + dash + "/>\n";
        svg += "<text x=\"" + num(kWidth - kRight - 112.0) + "\" y=\"" + num(legend_y + 4.0) +
               "\" font-family=\"sans-serif\" font-size=\"12\">" + key.first + " / " +
               key.second + "</text>\n";
        legend_y += 18.0;
    }

    svg += "</svg>\n";
    return svg;
}

void write_plot(const std::vector<CsvRecord>& rows, const std::string& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out) {
        throw RecordsError("cannot open for writing: " + path);
    }
    out << format_plot_svg(rows);
    if (!out) {
        throw RecordsError("write failed: " + path);
    }
}

}  // namespace sixdma

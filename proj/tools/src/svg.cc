// Copyright 2026 The kinkprobe Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "kinkprobe_cli/svg.h"

#include <algorithm>
#include <cstdio>
#include <sstream>

namespace kinkprobe::cli {

namespace {

constexpr double kWidth = 960.0;
constexpr double kHeight = 380.0;
constexpr double kPanelWidth = 400.0;
constexpr double kPanelHeight = 280.0;
constexpr double kTop = 50.0;
constexpr double kLeft[2] = {60.0, 530.0};

std::string fmt(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.2f", v);
    return buf;
}

std::string label(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.4g", v);
    return buf;
}

std::string escape(const std::string &s) {
    std::string out;
    for (char c : s) {
        switch (c) {
            case '&': out += "&amp;"; break;
            case '<': out += "&lt;"; break;
            case '>': out += "&gt;"; break;
            case '"': out += "&quot;"; break;
            default: out += c;
        }
    }
    return out;
}

void frame(std::ostringstream &os, int panel, const std::string &xlabel, double x0, double x1, double y0,
           double y1) {
    const double left = kLeft[panel];
    os << "<rect x=\"" << fmt(left) << "\" y=\"" << fmt(kTop) << "\" width=\"" << fmt(kPanelWidth)
       << "\" height=\"" << fmt(kPanelHeight) << "\" fill=\"none\" stroke=\"#444\"/>\n";
    const double bottom = kTop + kPanelHeight;
    os << "<text x=\"" << fmt(left) << "\" y=\"" << fmt(bottom + 16) << "\">" << label(x0) << "</text>\n";
    os << "<text x=\"" << fmt(left + kPanelWidth) << "\" y=\"" << fmt(bottom + 16)
       << "\" text-anchor=\"end\">" << label(x1) << "</text>\n";
    os << "<text x=\"" << fmt(left + kPanelWidth / 2) << "\" y=\"" << fmt(bottom + 32)
       << "\" text-anchor=\"middle\">" << xlabel << "</text>\n";
    os << "<text x=\"" << fmt(left - 6) << "\" y=\"" << fmt(bottom) << "\" text-anchor=\"end\">" << label(y0)
       << "</text>\n";
    os << "<text x=\"" << fmt(left - 6) << "\" y=\"" << fmt(kTop + 10) << "\" text-anchor=\"end\">" << label(y1)
       << "</text>\n";
}

void trace(std::ostringstream &os, const std::vector<double> &t, const std::vector<double> &y, double t_max,
           const char *color) {
    os << "<polyline fill=\"none\" stroke=\"" << color << "\" stroke-width=\"1.2\" points=\"";
    for (std::size_t i = 0; i < t.size(); ++i) {
        double px = kLeft[0] + (t_max > 0 ? t[i] / t_max : 0.0) * kPanelWidth;
        double py = kTop + (1.0 - (y[i] + 1.0) / 2.0) * kPanelHeight;
        py = std::clamp(py, kTop, kTop + kPanelHeight);
        os << (i ? " " : "") << fmt(px) << "," << fmt(py);
    }
    os << "\"/>\n";
}

}  // namespace

std::string render_svg(const ProbeRecord &record, const Distribution &dist, const std::string &title) {
    std::ostringstream os;
    os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << fmt(kWidth) << "\" height=\"" << fmt(kHeight)
       << "\" font-family=\"sans-serif\" font-size=\"12\">\n";
    os << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
    os << "<text x=\"" << fmt(kWidth / 2) << "\" y=\"24\" text-anchor=\"middle\" font-size=\"15\">" << escape(title)
       << "</text>\n";

    double t_max = record.time_grid.empty() ? 0.0 : record.time_grid.back();
    frame(os, 0, "t", 0.0, t_max, -1.0, 1.0);
    os << "<line x1=\"" << fmt(kLeft[0]) << "\" y1=\"" << fmt(kTop + kPanelHeight / 2) << "\" x2=\""
       << fmt(kLeft[0] + kPanelWidth) << "\" y2=\"" << fmt(kTop + kPanelHeight / 2)
       << "\" stroke=\"#bbb\" stroke-dasharray=\"4 3\"/>\n";
    trace(os, record.time_grid, record.sx, t_max, "#1f77b4");
    trace(os, record.time_grid, record.sy, t_max, "#d62728");
    os << "<text x=\"" << fmt(kLeft[0] + 8) << "\" y=\"" << fmt(kTop + 16) << "\" fill=\"#1f77b4\">sx</text>\n";
    os << "<text x=\"" << fmt(kLeft[0] + 32) << "\" y=\"" << fmt(kTop + 16) << "\" fill=\"#d62728\">sy</text>\n";

    if (!dist.support.empty()) {
        const double x0 = dist.support.front();
        const double x1 = dist.support.back();
        double p_max = 0.0;
        for (double p : dist.probs) {
            p_max = std::max(p_max, p);
        }
        if (p_max <= 0.0) {
            p_max = 1.0;
        }
        frame(os, 1, "x", x0, x1, 0.0, p_max);
        const double slot = kPanelWidth / static_cast<double>(dist.size());
        for (std::size_t i = 0; i < dist.size(); ++i) {
            const double p = std::max(0.0, dist.probs[i]);
            const double height = p / p_max * kPanelHeight;
            os << "<rect x=\"" << fmt(kLeft[1] + slot * static_cast<double>(i) + slot * 0.1) << "\" y=\""
               << fmt(kTop + kPanelHeight - height) << "\" width=\"" << fmt(slot * 0.8) << "\" height=\""
               << fmt(height) << "\" fill=\"#2ca02c\"/>\n";
        }
    }
    os << "</svg>\n";
    return os.str();
}

}  // namespace kinkprobe::cli

// Copyright 2026 The Dicke Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//    http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef DICKE_SVG_HPP
#define DICKE_SVG_HPP

#include <algorithm>
#include <array>
#include <limits>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "dicke/csv.hpp"
#include "dicke/spin.hpp"

namespace dicke {

struct Series {
  std::string name;
  std::vector<std::pair<double, double>> points;
};

/// Minimal line chart: two axes with end labels, one polyline per series
/// and a legend. Output is plain SVG 1.1.
inline std::string render_svg(const std::vector<Series>& series, const std::string& x_label,
                              const std::string& y_label) {
  constexpr double width = 640, height = 400, left = 60, right = 150, top = 20, bottom = 50;
  static constexpr std::array<const char*, 8> kColors = {"#1f77b4", "#d62728", "#2ca02c", "#9467bd",
                                                         "#ff7f0e", "#8c564b", "#e377c2", "#17becf"};
  double x0 = std::numeric_limits<double>::infinity(), x1 = -x0, y0 = 0.0, y1 = -x0;
  for (const auto& s : series)
    for (const auto& [x, y] : s.points) {
      x0 = std::min(x0, x);
      x1 = std::max(x1, x);
      y0 = std::min(y0, y);
      y1 = std::max(y1, y);
    }
  if (!(x1 > x0)) x0 = 0, x1 = 1;
  if (!(y1 > y0)) y1 = y0 + 1;
  const double pw = width - left - right, ph = height - top - bottom;
  auto px = [&](double x) { return left + (x - x0) / (x1 - x0) * pw; };
  auto py = [&](double y) { return top + ph - (y - y0) / (y1 - y0) * ph; };

  std::ostringstream o;
  o << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
    << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << width << "\" height=\"" << height
    << "\" font-family=\"sans-serif\" font-size=\"12\">\n"
    << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n"
    << "<line x1=\"" << left << "\" y1=\"" << top + ph << "\" x2=\"" << left + pw << "\" y2=\"" << top + ph
    << "\" stroke=\"black\"/>\n"
    << "<line x1=\"" << left << "\" y1=\"" << top << "\" x2=\"" << left << "\" y2=\"" << top + ph
    << "\" stroke=\"black\"/>\n"
    << "<text x=\"" << left << "\" y=\"" << top + ph + 16 << "\" text-anchor=\"middle\">" << format_fixed(x0, 0)
    << "</text>\n"
    << "<text x=\"" << left + pw << "\" y=\"" << top + ph + 16 << "\" text-anchor=\"middle\">"
    << format_fixed(x1, 0) << "</text>\n"
    << "<text x=\"" << left - 6 << "\" y=\"" << top + ph << "\" text-anchor=\"end\">" << format_fixed(y0, 3)
    << "</text>\n"
    << "<text x=\"" << left - 6 << "\" y=\"" << top + 4 << "\" text-anchor=\"end\">" << format_fixed(y1, 3)
    << "</text>\n"
    << "<text x=\"" << left + pw / 2 << "\" y=\"" << height - 12 << "\" text-anchor=\"middle\">" << x_label
    << "</text>\n"
    << "<text x=\"16\" y=\"" << top + ph / 2 << "\" text-anchor=\"middle\" transform=\"rotate(-90 16 "
    << top + ph / 2 << ")\">" << y_label << "</text>\n";
  for (std::size_t i = 0; i < series.size(); ++i) {
    const char* color = kColors[i % kColors.size()];
    o << "<polyline fill=\"none\" stroke=\"" << color << "\" stroke-width=\"1.5\" points=\"";
    for (std::size_t k = 0; k < series[i].points.size(); ++k)
      o << (k ? " " : "") << format_fixed(px(series[i].points[k].first), 2) << ','
        << format_fixed(py(series[i].points[k].second), 2);
    o << "\"/>\n";
    const double ly = top + 10 + 18.0 * static_cast<double>(i);
    o << "<line x1=\"" << width - right + 15 << "\" y1=\"" << ly << "\" x2=\"" << width - right + 40 << "\" y2=\""
      << ly << "\" stroke=\"" << color << "\" stroke-width=\"2\"/>\n"
      << "<text x=\"" << width - right + 46 << "\" y=\"" << ly + 4 << "\">" << series[i].name << "</text>\n";
  }
  o << "</svg>\n";
  return o.str();
}

namespace detail {
inline double parse_axis_value(const std::string& text) {
  if (text.find('/') != std::string::npos) return parse_half_integer(text) / 2.0;
  return std::stod(text);
}
}  // namespace detail

/// Reads either a wide CSV (first column x, one column per series) or the
/// long form `N,M,negativity`, which becomes one series per N.
inline std::vector<Series> series_from_csv(const std::vector<CsvRow>& rows) {
  if (rows.size() < 2 || rows[0].size() < 2) throw DomainError("plot input needs a header and data rows");
  for (std::size_t r = 1; r < rows.size(); ++r)
    if (rows[r].size() != rows[0].size()) throw DomainError("plot input row " + std::to_string(r + 1) + " is ragged");
  std::vector<Series> out;
  if (rows[0] == CsvRow{"N", "M", "negativity"}) {
    for (std::size_t r = 1; r < rows.size(); ++r) {
      const std::string name = "N=" + rows[r][0];
      if (out.empty() || out.back().name != name) out.push_back({name, {}});
      out.back().points.emplace_back(detail::parse_axis_value(rows[r][1]), std::stod(rows[r][2]));
    }
    return out;
  }
  for (std::size_t c = 1; c < rows[0].size(); ++c) out.push_back({rows[0][c], {}});
  for (std::size_t r = 1; r < rows.size(); ++r) {
    const double x = detail::parse_axis_value(rows[r][0]);
    for (std::size_t c = 1; c < rows[r].size(); ++c)
      if (!rows[r][c].empty()) out[c - 1].points.emplace_back(x, std::stod(rows[r][c]));
  }
  return out;
}

}  // namespace dicke

#endif  // DICKE_SVG_HPP

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

// Spin-1 negativity curves: Dicke states for N = 20..80 over M = 0..J, and
// Dicke versus equal-probability states for N = 30 and N = 80.

#ifndef DICKE_FIGURES_HPP
#define DICKE_FIGURES_HPP

#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "dicke/csv.hpp"
#include "dicke/entanglement.hpp"
#include "dicke/svg.hpp"

namespace dicke {

/// Raised when a computed curve breaks one of the expected shape properties.
class PropertyViolation : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

inline const std::vector<int>& figure_particle_numbers() {
  static const std::vector<int> ns = {20, 30, 40, 50, 60, 70, 80};
  return ns;
}

inline const std::vector<int>& comparison_particle_numbers() {
  static const std::vector<int> ns = {30, 80};
  return ns;
}

/// Slack for "non-increasing" comparisons between neighbouring points.
inline constexpr double kShapeSlack = 1e-12;

struct DickeCurves {
  std::map<int, std::vector<SweepPoint>> by_n;  // M = 0..J for each N
};

struct ComparisonCurve {
  int n = 0;
  std::vector<SweepPoint> dicke, equal;  // M = 0..J
};

inline DickeCurves dicke_curves(unsigned threads) {
  DickeCurves out;
  for (int n : figure_particle_numbers())
    out.by_n[n] = negativity_sweep(StateFamily::kDicke, n, Magnetization::from_twice(0),
                                   Magnetization::from_twice(2 * n), threads);
  return out;
}

inline ComparisonCurve comparison_curve(int n, unsigned threads) {
  const auto lo = Magnetization::from_twice(0), hi = Magnetization::from_twice(2 * n);
  return {n, negativity_sweep(StateFamily::kDicke, n, lo, hi, threads),
          negativity_sweep(StateFamily::kEqual, n, lo, hi, threads)};
}

/// Empty when every property holds; otherwise one message per failure.
inline std::vector<std::string> check_dicke_shape(const DickeCurves& c) {
  std::vector<std::string> problems;
  double previous_peak = -1.0;
  int previous_n = 0;
  for (const auto& [n, pts] : c.by_n) {
    for (std::size_t i = 1; i < pts.size(); ++i)
      if (pts[i].negativity > pts[i - 1].negativity + kShapeSlack)
        problems.push_back("N=" + std::to_string(n) + ": negativity rises from M=" + pts[i - 1].m.str() +
                           " to M=" + pts[i].m.str());
    for (const auto& p : pts)
      if (p.negativity > pts.front().negativity + kShapeSlack)
        problems.push_back("N=" + std::to_string(n) + ": maximum not at M=0");
    if (pts.back().negativity > kShapeSlack)
      problems.push_back("N=" + std::to_string(n) + ": nonzero negativity at M=J");
    if (previous_n && !(pts.front().negativity < previous_peak))
      problems.push_back("M=0 negativity does not decrease from N=" + std::to_string(previous_n) +
                         " to N=" + std::to_string(n));
    previous_peak = pts.front().negativity;
    previous_n = n;
  }
  return problems;
}

inline std::vector<std::string> check_comparison_shape(const ComparisonCurve& c) {
  std::vector<std::string> problems;
  if (!(c.equal.front().negativity > c.dicke.front().negativity))
    problems.push_back("N=" + std::to_string(c.n) + ": equal-probability state does not exceed Dicke at M=0");
  return problems;
}

inline std::string dicke_curves_csv(const DickeCurves& c) {
  std::string out = "N,M,negativity\n";
  for (const auto& [n, pts] : c.by_n)
    for (const auto& p : pts) out += std::to_string(n) + "," + p.m.str() + "," + format_fixed(p.negativity, 6) + "\n";
  return out;
}

inline std::string comparison_csv(const ComparisonCurve& c) {
  std::string out = "M,dicke,equal\n";
  for (std::size_t i = 0; i < c.dicke.size(); ++i)
    out += c.dicke[i].m.str() + "," + format_fixed(c.dicke[i].negativity, 6) + "," +
           format_fixed(c.equal[i].negativity, 6) + "\n";
  return out;
}

inline Series to_series(std::string name, const std::vector<SweepPoint>& pts) {
  Series s{std::move(name), {}};
  for (const auto& p : pts) s.points.emplace_back(p.m.value(), p.negativity);
  return s;
}

inline std::string dicke_curves_svg(const DickeCurves& c) {
  std::vector<Series> series;
  for (const auto& [n, pts] : c.by_n) series.push_back(to_series("N=" + std::to_string(n), pts));
  return render_svg(series, "M", "negativity");
}

inline std::string comparison_svg(const ComparisonCurve& c) {
  return render_svg({to_series("Dicke N=" + std::to_string(c.n), c.dicke),
                     to_series("equal N=" + std::to_string(c.n), c.equal)},
                    "M", "negativity");
}

}  // namespace dicke

#endif  // DICKE_FIGURES_HPP

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

#ifndef DICKE_ANTISYM_HPP
#define DICKE_ANTISYM_HPP

#include <algorithm>
#include <cmath>
#include <map>
#include <numeric>
#include <vector>

#include "dicke/spin.hpp"

namespace dicke {

struct FirstQuantizedTerm {
  std::vector<int> assignment;  // 2m of each particle slot
  double amplitude = 0.0;
};

/// n-particle state written out over per-particle level assignments.
struct FirstQuantizedState {
  SpinSpecies species{1};
  int n_particles = 0;
  std::vector<FirstQuantizedTerm> terms;

  double norm_squared() const {
    double s = 0.0;
    for (const auto& t : terms) s += t.amplitude * t.amplitude;
    return s;
  }
};

/// 2^{2s+1} - (2s+2): one state per level subset of size 2..2s+1.
inline long antisym_count(SpinSpecies species) {
  return (1L << species.levels()) - (species.twice_spin() + 2);
}

/// (1/sqrt(n!)) sum_P sign(P) P(|l_1>|l_2>...|l_n>) for strictly decreasing
/// levels (twice-m values). The identity permutation carries +1.
inline FirstQuantizedState elementary_antisym(SpinSpecies species,
                                              const std::vector<int>& twice_levels) {
  const int n = static_cast<int>(twice_levels.size());
  if (n < 2 || n > species.levels())
    throw DomainError("antisymmetric states need between 2 and 2s+1 particles");
  for (int tm : twice_levels) species.level_index(tm);
  for (int i = 0; i + 1 < n; ++i) {
    if (twice_levels[i] == twice_levels[i + 1] ||
        std::count(twice_levels.begin(), twice_levels.end(), twice_levels[i]) > 1)
      throw DomainError("two particles cannot occupy the same level");
    if (twice_levels[i] < twice_levels[i + 1])
      throw DomainError("levels must be listed in strictly decreasing order");
  }
  FirstQuantizedState state{species, n, {}};
  std::vector<int> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  double factorial = 1.0;
  for (int i = 2; i <= n; ++i) factorial *= i;
  const double scale = 1.0 / std::sqrt(factorial);
  do {
    int inversions = 0;
    for (int a = 0; a < n; ++a)
      for (int b = a + 1; b < n; ++b)
        if (perm[a] > perm[b]) ++inversions;
    std::vector<int> assignment(n);
    for (int slot = 0; slot < n; ++slot) assignment[slot] = twice_levels[perm[slot]];
    state.terms.push_back({std::move(assignment), inversions % 2 ? -scale : scale});
  } while (std::next_permutation(perm.begin(), perm.end()));
  return state;
}

/// Every elementary antisymmetric state, ordered by particle number and then
/// by level subset (levels taken from m = +s downwards).
inline std::vector<FirstQuantizedState> enumerate_all_antisym(SpinSpecies species) {
  std::vector<FirstQuantizedState> out;
  const int levels = species.levels();
  for (int n = 2; n <= levels; ++n) {
    std::vector<bool> pick(levels, false);
    std::fill(pick.begin(), pick.begin() + n, true);
    do {
      std::vector<int> subset;
      for (int i = 0; i < levels; ++i)
        if (pick[i]) subset.push_back(species.twice_m(i));
      out.push_back(elementary_antisym(species, subset));
    } while (std::prev_permutation(pick.begin(), pick.end()));
  }
  return out;
}

inline double inner_product(const FirstQuantizedState& a, const FirstQuantizedState& b) {
  if (a.n_particles != b.n_particles) return 0.0;
  std::map<std::vector<int>, double> lookup;
  for (const auto& t : b.terms) lookup[t.assignment] += t.amplitude;
  double s = 0.0;
  for (const auto& t : a.terms) {
    const auto it = lookup.find(t.assignment);
    if (it != lookup.end()) s += t.amplitude * it->second;
  }
  return s;
}

/// True iff exchanging any two particle slots negates the state.
inline bool is_antisymmetric(const FirstQuantizedState& x, double tol = 1e-12) {
  std::map<std::vector<int>, double> amp;
  for (const auto& t : x.terms) amp[t.assignment] += t.amplitude;
  for (const auto& [assignment, a] : amp) {
    for (int i = 0; i < x.n_particles; ++i) {
      for (int j = i + 1; j < x.n_particles; ++j) {
        std::vector<int> swapped = assignment;
        std::swap(swapped[i], swapped[j]);
        const auto it = amp.find(swapped);
        const double b = it == amp.end() ? 0.0 : it->second;
        if (std::abs(a + b) > tol) return false;
      }
    }
  }
  return true;
}

/// Collective lowering J_- = sum_i s_{i-} applied slot by slot.
inline FirstQuantizedState apply_lowering(const FirstQuantizedState& x) {
  const int ts = x.species.twice_spin();
  std::map<std::vector<int>, double> acc;
  for (const auto& t : x.terms) {
    for (int slot = 0; slot < x.n_particles; ++slot) {
      const int tm = t.assignment[slot];
      if (tm == -ts) continue;
      std::vector<int> lowered = t.assignment;
      lowered[slot] -= 2;
      acc[lowered] += t.amplitude * std::sqrt((ts + tm) * (ts - tm + 2) / 4.0);
    }
  }
  FirstQuantizedState out{x.species, x.n_particles, {}};
  for (auto& [assignment, a] : acc)
    if (std::abs(a) > 1e-14) out.terms.push_back({assignment, a});
  return out;
}

struct PairSubspaceRow {
  int twice_m = 0;
  double residual = 0.0;      // |psi - P psi|, P onto the elementary pair span
  double best_overlap = 0.0;  // max |<e|psi>| over elementary pair states
  std::vector<int> best_pair;
};

/// Walks the two-particle J = 2s-1 multiplet down from
/// |2s-1, 2s-1> = (|s>|s-1> - |s-1>|s>)/sqrt(2) and projects every member
/// onto the span of the elementary antisymmetric pair states.
inline std::vector<PairSubspaceRow> verify_pair_subspace(SpinSpecies species) {
  const int ts = species.twice_spin();
  std::vector<FirstQuantizedState> pairs;
  for (auto& s : enumerate_all_antisym(species))
    if (s.n_particles == 2) pairs.push_back(std::move(s));

  std::vector<PairSubspaceRow> rows;
  FirstQuantizedState psi = elementary_antisym(species, {ts, ts - 2});
  for (int tm = 2 * ts - 2; tm >= -(2 * ts - 2); tm -= 2) {
    const double norm = std::sqrt(psi.norm_squared());
    for (auto& t : psi.terms) t.amplitude /= norm;
    PairSubspaceRow row{tm, 0.0, 0.0, {}};
    std::map<std::vector<int>, double> remainder;
    for (const auto& t : psi.terms) remainder[t.assignment] += t.amplitude;
    for (const auto& e : pairs) {
      const double overlap = inner_product(e, psi);
      for (const auto& t : e.terms) remainder[t.assignment] -= overlap * t.amplitude;
      if (std::abs(overlap) > row.best_overlap) {
        row.best_overlap = std::abs(overlap);
        row.best_pair = e.terms.front().assignment;
      }
    }
    double residual2 = 0.0;
    for (const auto& [assignment, a] : remainder) residual2 += a * a;
    row.residual = std::sqrt(residual2);
    rows.push_back(std::move(row));
    psi = apply_lowering(psi);
  }
  return rows;
}

}  // namespace dicke

#endif  // DICKE_ANTISYM_HPP

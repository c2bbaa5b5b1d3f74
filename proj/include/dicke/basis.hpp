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

// Occupation-number basis of the maximal-J sector |J = sN, M>.
//
// enumerate_basis() is the authoritative enumeration: it solves
//   sum_i n_i = N,  sum_i 2m_i n_i = 2M
// directly over non-negative integers. The k / k1 / k2 parametrization and
// its bound formulas are exposed separately, evaluated as written, so they
// can be compared against the direct solve.

#ifndef DICKE_BASIS_HPP
#define DICKE_BASIS_HPP

#include <algorithm>
#include <cstdlib>
#include <optional>
#include <set>
#include <vector>

#include "dicke/spin.hpp"

namespace dicke {

namespace detail {

inline void enumerate_levels(SpinSpecies species, int level, int remaining,
                             int twice_m_remaining, std::vector<int>& counts,
                             std::vector<OccupationVector>& out) {
  const int levels = species.levels();
  const int twice_s = species.twice_spin();
  if (level == levels - 2) {
    // Last two levels carry 2m = -2s+2 and -2s:
    //   a + b = r,  (2 - 2s) a - 2s b = t   =>   2a = t + 2s r.
    const int twice_a = twice_m_remaining + twice_s * remaining;
    if (twice_a < 0 || twice_a % 2 != 0) return;
    const int a = twice_a / 2;
    if (a > remaining) return;
    counts[level] = a;
    counts[level + 1] = remaining - a;
    out.emplace_back(counts);
    return;
  }
  const int top = species.twice_m(level);
  for (int c = remaining; c >= 0; --c) {
    const int r = remaining - c;
    const int t = twice_m_remaining - top * c;
    // The r particles left on levels below this one span 2M in
    // [-2s r, (top - 2) r].
    if (t < -twice_s * r || t > (top - 2) * r) continue;
    counts[level] = c;
    enumerate_levels(species, level + 1, r, t, counts, out);
  }
}

}  // namespace detail

/// Every occupation vector of N particles with total magnetization M, in
/// canonical (descending lexicographic) order.
inline std::vector<OccupationVector> enumerate_basis(SpinSpecies species, int n_particles,
                                                     Magnetization m) {
  check_sector(species, n_particles, m);
  std::vector<OccupationVector> out;
  std::vector<int> counts(species.levels(), 0);
  detail::enumerate_levels(species, 0, n_particles, m.twice(), counts, out);
  std::sort(out.begin(), out.end(), CanonicalOrder{});
  return out;
}

/// Per-k quantities of the parametrized construction. Fields that the
/// species does not define are empty.
struct KParameters {
  int k = 0;
  std::optional<long> gamma;
  std::optional<long> beta;
  long m_k = 0;
};

struct EnumerationParams {
  int parity_min = 0;
  int k0 = 0;
  int k_max = 0;
  std::optional<long> alpha;
  int sign_factor = 1;  // (-1)^{(|M|-M)/(2|M|)}, defined as +1 at M = 0
  std::vector<KParameters> per_k;

  /// Inclusive range of k1 for a given k (1..m_k; empty when m_k < 1).
  std::pair<long, long> k1_range(const KParameters& kp) const { return {1, kp.m_k}; }
  /// Inclusive range of k2 for (k, k1) in the spin-2 construction.
  std::pair<long, long> k2_range(const KParameters& kp, long k1) const {
    return {0, kp.m_k - k1};
  }
};

namespace detail {

inline long positive_part(long x) { return x > 0 ? x : 0; }
inline long negative_part(long x) { return x < 0 ? x : 0; }
inline long floor_div(long a, long b) {
  long q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
  return q;
}

}  // namespace detail

/// Bound parameters exactly as the closed-form construction prints them.
/// No consistency with enumerate_basis() is implied; see
/// parametrization_report().
inline EnumerationParams enumeration_bounds(SpinSpecies species, int n_particles,
                                            Magnetization m) {
  check_sector(species, n_particles, m);
  EnumerationParams p;
  const int twice_s = species.twice_spin();
  const long abs_twice_m = std::abs(m.twice());
  // J - |M| is always an integer inside a valid sector.
  const long j_minus_m = (static_cast<long>(twice_s) * n_particles - abs_twice_m) / 2;
  p.parity_min = static_cast<int>(j_minus_m % 2);  // (1/2)[(-1)^{J-|M|+1} + 1]
  p.sign_factor = m.twice() < 0 ? -1 : 1;

  switch (twice_s) {
    case 1:
      p.k0 = 0;
      p.k_max = 0;
      p.per_k.push_back({0, std::nullopt, std::nullopt, 1});
      break;
    case 2:
      p.k0 = 0;
      p.k_max = static_cast<int>((j_minus_m - p.parity_min) / 2);
      for (int k = 0; k <= p.k_max; ++k) p.per_k.push_back({k, std::nullopt, std::nullopt, 1});
      break;
    case 3: {
      // alpha_1 = N/2 - |M| is an integer because 2M and N share parity.
      const long alpha = (n_particles - abs_twice_m) / 2;
      p.alpha = alpha;
      const long a = detail::positive_part(alpha);
      p.k0 = static_cast<int>((a + (a % 2)) / 2);
      p.k_max = static_cast<int>((j_minus_m - p.parity_min) / 2);
      for (int k = p.k0; k <= p.k_max; ++k) {
        const long gamma = j_minus_m - 3L * k;
        const long beta = k - a;
        const long head = detail::negative_part(beta) + k + 1;
        const long m_k = detail::positive_part(head) + detail::positive_part(gamma);
        p.per_k.push_back({k, gamma, beta, m_k});
      }
      break;
    }
    case 4: {
      const long alpha = n_particles - abs_twice_m / 2;
      p.alpha = alpha;
      const long a = detail::positive_part(alpha);
      switch (a % 3) {
        case 0: p.k0 = static_cast<int>(2 * a / 3); break;
        case 1: p.k0 = static_cast<int>((2 * a + 1) / 3); break;
        default: p.k0 = static_cast<int>((2 * a + 2) / 3); break;
      }
      const long d = 2L * n_particles - abs_twice_m / 2;  // 2N - |M|
      switch (d % 3) {
        case 0: p.k_max = static_cast<int>(2 * d / 3); break;      // d = 3n''
        case 2: p.k_max = static_cast<int>((2 * d - 1) / 3); break;  // d = 3n'' - 1
        default: p.k_max = static_cast<int>((2 * d - 2) / 3); break; // d = 3n'' - 2
      }
      for (int k = p.k0; k <= p.k_max; ++k) {
        const long gamma = j_minus_m - 2L * k;
        const long beta = k - a;
        // (2k + 3 + (-1)^k) / 4 == floor(k/2) + 1
        const long head = detail::positive_part(beta) + (k / 2) + 1;
        const long m_k = detail::positive_part(head) + detail::negative_part(gamma);
        p.per_k.push_back({k, gamma, beta, m_k});
      }
      break;
    }
  }
  return p;
}

/// The printed basis-size formula: 1 (spin 1/2), max+1 (spin 1),
/// sum m_k (spin 3/2), sum m_k(m_k+1)/2 (spin 2).
inline long basis_count_formula(SpinSpecies species, int n_particles, Magnetization m) {
  const EnumerationParams p = enumeration_bounds(species, n_particles, m);
  switch (species.twice_spin()) {
    case 1: return 1;
    case 2: return p.k_max + 1;
    case 3: {
      long total = 0;
      for (const auto& kp : p.per_k) total += kp.m_k;
      return total;
    }
    default: {
      long total = 0;
      for (const auto& kp : p.per_k) total += kp.m_k * (kp.m_k + 1) / 2;
      return total;
    }
  }
}

/// One solution of the parametrized constraint system. `counts` holds twice
/// each count so half-integral solutions are representable; `occupation` is
/// set only when every count is a non-negative integer.
struct ParametrizedCandidate {
  int k = 0;
  long k1 = 0;
  long k2 = -1;
  std::vector<long> twice_counts;
  std::optional<OccupationVector> occupation;
};

namespace detail {

inline ParametrizedCandidate finish_candidate(int k, long k1, long k2,
                                              std::vector<long> twice_counts) {
  ParametrizedCandidate c{k, k1, k2, std::move(twice_counts), std::nullopt};
  std::vector<int> counts;
  for (long t : c.twice_counts) {
    if (t < 0 || t % 2 != 0) return c;
    counts.push_back(static_cast<int>(t / 2));
  }
  c.occupation = OccupationVector(std::move(counts));
  return c;
}

}  // namespace detail

/// Solves the parametrized constraint system for every (k, k1, k2) in the
/// printed index ranges.
inline std::vector<ParametrizedCandidate> parametrized_candidates(
    SpinSpecies species, int n_particles, Magnetization m) {
  const EnumerationParams p = enumeration_bounds(species, n_particles, m);
  const long n = n_particles;
  const long tm = m.twice();
  std::vector<ParametrizedCandidate> out;
  switch (species.twice_spin()) {
    case 1:
      out.push_back(detail::finish_candidate(0, 0, -1, {n + tm, n - tm}));
      break;
    case 2:
      for (int k = 0; k <= p.k_max; ++k) {
        const long n0 = p.parity_min + 2L * k;
        // n1 - n_{-1} = M, n1 + n_{-1} = N - n0
        out.push_back(detail::finish_candidate(
            k, 0, -1, {(n - n0) + tm / 2, 2 * n0, (n - n0) - tm / 2}));
      }
      break;
    case 3:
      for (const auto& kp : p.per_k) {
        const long gamma = *kp.gamma;
        for (long k1 = 1; k1 <= kp.m_k; ++k1) {
          const long diff = p.sign_factor * gamma;              // n2 - n3
          const long sum = std::abs(gamma) - 2 * (k1 - 1);      // n2 + n3
          // 3(n1 - n4) = 2M - (n2 - n3); n1 + n4 = N - (n2 + n3)
          const long outer_diff3 = tm - diff;                   // 3(n1 - n4)
          const long outer_sum = n - sum;
          std::vector<long> twice_counts(4);
          twice_counts[1] = sum + diff;
          twice_counts[2] = sum - diff;
          if (outer_diff3 % 3 != 0) {
            twice_counts[0] = -1;  // marks a non-integral solution
            twice_counts[3] = -1;
          } else {
            twice_counts[0] = outer_sum + outer_diff3 / 3;
            twice_counts[3] = outer_sum - outer_diff3 / 3;
          }
          out.push_back(detail::finish_candidate(kp.k, k1, -1, std::move(twice_counts)));
        }
      }
      break;
    default:
      for (const auto& kp : p.per_k) {
        const long gamma = *kp.gamma;
        for (long k1 = 1; k1 <= kp.m_k; ++k1) {
          for (long k2 = 0; k2 <= kp.m_k - k1; ++k2) {
            const long diff = p.sign_factor * gamma;            // n2 - n4
            const long sum = gamma + 2 * (k1 - 1);              // n2 + n4
            const long n3 = 2 * (k2 + 1) + (kp.k % 2) - 2;
            // 2(n1 - n5) + (n2 - n4) = M; n1 + n5 = N - n2 - n3 - n4
            const long outer_sum = n - sum - n3;
            const long twice_outer_diff = tm / 2 - diff;       // 2(n1 - n5)
            std::vector<long> twice_counts(5);
            twice_counts[1] = sum + diff;
            twice_counts[2] = 2 * n3;
            twice_counts[3] = sum - diff;
            if (twice_outer_diff % 2 != 0) {
              twice_counts[0] = -1;
              twice_counts[4] = -1;
            } else {
              twice_counts[0] = outer_sum + twice_outer_diff / 2;
              twice_counts[4] = outer_sum - twice_outer_diff / 2;
            }
            out.push_back(detail::finish_candidate(kp.k, k1, k2, std::move(twice_counts)));
          }
        }
      }
      break;
  }
  return out;
}

/// Comparison of the parametrized construction with the direct solve.
struct ParametrizationReport {
  std::size_t basis_size = 0;
  long count_formula = 0;
  std::size_t candidates = 0;
  std::size_t valid_distinct = 0;
  std::vector<OccupationVector> missing;  // in the basis, never generated
  bool reproduces_basis() const { return missing.empty() && valid_distinct == basis_size; }
  bool count_matches() const { return count_formula == static_cast<long>(basis_size); }
};

inline ParametrizationReport parametrization_report(SpinSpecies species, int n_particles,
                                                    Magnetization m) {
  const auto basis = enumerate_basis(species, n_particles, m);
  const auto candidates = parametrized_candidates(species, n_particles, m);
  ParametrizationReport r;
  r.basis_size = basis.size();
  r.count_formula = basis_count_formula(species, n_particles, m);
  r.candidates = candidates.size();
  std::set<OccupationVector> valid;
  for (const auto& c : candidates) {
    // A candidate only counts if it also satisfies both conservation laws.
    if (c.occupation && c.occupation->total() == n_particles &&
        c.occupation->twice_magnetization(species) == m.twice())
      valid.insert(*c.occupation);
  }
  r.valid_distinct = valid.size();
  for (const auto& v : basis)
    if (!valid.contains(v)) r.missing.push_back(v);
  return r;
}

}  // namespace dicke

#endif  // DICKE_BASIS_HPP

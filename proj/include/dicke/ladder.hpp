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

// Collective ladder operators in second quantization, and the Dicke states
// they generate from |J, J> = |N, 0, ..., 0>. This is the ground truth the
// closed-form coefficients are checked against.

#ifndef DICKE_LADDER_HPP
#define DICKE_LADDER_HPP

#include <cmath>
#include <map>
#include <stdexcept>
#include <vector>

#include "dicke/coefficients.hpp"
#include "dicke/spin.hpp"

namespace dicke {

/// Unnormalized symmetric state; terms may mix M sectors and carry zeros.
struct RawExpansion {
  SpinSpecies species{1};
  int n_particles = 0;
  std::vector<Term> terms;

  double norm_squared() const {
    double s = 0.0;
    for (const auto& t : terms) s += t.amplitude * t.amplitude;
    return s;
  }
};

inline RawExpansion to_raw(const DickeExpansion& x) {
  return RawExpansion{x.species, x.n_particles, x.terms};
}

inline constexpr double kPruneThreshold = 1e-14;

namespace detail {

using TermMap = std::map<OccupationVector, double, CanonicalOrder>;

inline std::vector<Term> flatten(const TermMap& map) {
  std::vector<Term> out;
  out.reserve(map.size());
  for (const auto& [occ, amp] : map) out.push_back({occ, amp});
  return out;
}

// direction = +1 moves a particle from level i to i+1 (m -> m-1, lowering),
// -1 from level i to i-1 (raising).
inline RawExpansion apply_ladder(const RawExpansion& x, int direction) {
  const int ts = x.species.twice_spin();
  const int levels = x.species.levels();
  TermMap acc;
  for (const auto& term : x.terms) {
    for (int i = 0; i < levels; ++i) {
      const int j = i + direction;
      if (j < 0 || j >= levels) continue;
      const int n_from = term.occupation[i];
      if (n_from == 0) continue;
      const int tm = x.species.twice_m(i);
      // s_-: sqrt((s+m)(s-m+1)),  s_+: sqrt((s-m)(s+m+1)); twice units.
      const double single =
          direction > 0 ? std::sqrt((ts + tm) * (ts - tm + 2) / 4.0)
                        : std::sqrt((ts - tm) * (ts + tm + 2) / 4.0);
      const double bosonic = std::sqrt(static_cast<double>(n_from) * (term.occupation[j] + 1));
      acc[term.occupation.moved(i, j)] += term.amplitude * single * bosonic;
    }
  }
  return RawExpansion{x.species, x.n_particles, flatten(acc)};
}

}  // namespace detail

/// |J, J>: every particle in the m = +s level.
inline DickeExpansion highest_weight(SpinSpecies species, int n_particles) {
  if (n_particles < 1) throw DomainError("particle count must be at least 1");
  std::vector<int> counts(species.levels(), 0);
  counts[0] = n_particles;
  return DickeExpansion{species, n_particles,
                        Magnetization::from_twice(species.twice_spin() * n_particles),
                        {{OccupationVector(std::move(counts)), 1.0}}};
}

/// Collective J_- = sum_m sqrt((s+m)(s-m+1)) a_{m-1}^dag a_m.
inline RawExpansion apply_lowering(const RawExpansion& x) { return detail::apply_ladder(x, +1); }

/// Collective J_+ = sum_m sqrt((s-m)(s+m+1)) a_{m+1}^dag a_m.
inline RawExpansion apply_raising(const RawExpansion& x) { return detail::apply_ladder(x, -1); }

/// Drops near-zero terms and rescales to unit norm; all surviving terms must
/// share one magnetization.
inline DickeExpansion normalize(const RawExpansion& x, double prune = kPruneThreshold) {
  DickeExpansion out{x.species, x.n_particles, {}, {}};
  bool have_m = false;
  for (const auto& t : x.terms) {
    if (std::abs(t.amplitude) < prune) continue;
    const int tm = t.occupation.twice_magnetization(x.species);
    if (!have_m) {
      out.m = Magnetization::from_twice(tm);
      have_m = true;
    } else if (out.m.twice() != tm) {
      throw DomainError("expansion mixes magnetization sectors");
    }
    out.terms.push_back(t);
  }
  if (out.terms.empty()) throw DomainError("cannot normalize the zero vector");
  const double norm = std::sqrt(out.norm_squared());
  for (auto& t : out.terms) t.amplitude /= norm;
  return out;
}

/// |J, M> by repeated lowering from |J, J>, dividing by
/// sqrt((J+M')(J-M'+1)) at every step M' -> M'-1.
inline DickeExpansion oracle_expansion(SpinSpecies species, int n_particles, Magnetization m) {
  check_sector(species, n_particles, m);
  const int twice_j = species.twice_spin() * n_particles;
  RawExpansion x = to_raw(highest_weight(species, n_particles));
  for (int tm = twice_j; tm > m.twice(); tm -= 2) {
    x = apply_lowering(x);
    const double step = std::sqrt((twice_j + tm) * (twice_j - tm + 2) / 4.0);
    std::vector<Term> kept;
    for (auto& t : x.terms) {
      t.amplitude /= step;
      if (std::abs(t.amplitude) >= kPruneThreshold) kept.push_back(std::move(t));
    }
    x.terms = std::move(kept);
  }
  return normalize(x);
}

/// <J^2> = (|J_+ psi|^2 + sum |a|^2 (M^2 + M)) / |psi|^2, with J^2 = J_- J_+ + J_z^2 + J_z.
inline double total_spin_expectation(const RawExpansion& x) {
  const double norm2 = x.norm_squared();
  if (norm2 == 0.0) throw DomainError("expectation of the zero vector");
  const double raised = apply_raising(x).norm_squared();
  double diagonal = 0.0;
  for (const auto& t : x.terms) {
    const double m = t.occupation.twice_magnetization(x.species) / 2.0;
    diagonal += t.amplitude * t.amplitude * (m * m + m);
  }
  return (raised + diagonal) / norm2;
}

inline double total_spin_expectation(const DickeExpansion& x) {
  return total_spin_expectation(to_raw(x));
}

// ---------------------------------------------------------------------------
// Exact mode. Every amplitude in the maximal-J sector is the positive square
// root of a rational, so squared amplitudes are carried as big rationals.

struct ExactTerm {
  OccupationVector occupation;
  BigRational amplitude_squared;
};

struct ExactExpansion {
  SpinSpecies species{1};
  int n_particles = 0;
  Magnetization m;
  std::vector<ExactTerm> terms;
};

namespace detail {

inline bool exact_sqrt(const BigRational& r, BigRational& root) {
  using boost::multiprecision::numerator;
  using boost::multiprecision::denominator;
  const BigInt num = numerator(r);
  const BigInt den = denominator(r);
  if (num < 0) return false;
  const BigInt sn = boost::multiprecision::sqrt(num);
  const BigInt sd = boost::multiprecision::sqrt(den);
  if (sn * sn != num || sd * sd != den) return false;
  root = BigRational(sn, sd);
  return true;
}

// sqrt(r_0) + sqrt(r_1) + ... for commensurate radicals, squared.
inline BigRational add_square_roots(const std::vector<BigRational>& squares) {
  const BigRational& ref = squares.front();
  BigRational sum = 0;
  for (const auto& r : squares) {
    BigRational ratio_root;
    if (!exact_sqrt(r / ref, ratio_root))
      throw std::logic_error("incommensurate radicals in exact ladder step");
    sum += ratio_root;
  }
  return sum * sum * ref;
}

}  // namespace detail

/// Exact counterpart of oracle_expansion(); throws std::logic_error if two
/// lowering paths ever produce incommensurate square roots.
inline ExactExpansion oracle_expansion_exact(SpinSpecies species, int n_particles,
                                             Magnetization m) {
  check_sector(species, n_particles, m);
  const int ts = species.twice_spin();
  const int twice_j = ts * n_particles;
  std::vector<int> top(species.levels(), 0);
  top[0] = n_particles;
  std::vector<ExactTerm> terms{{OccupationVector(top), BigRational(1)}};
  for (int tm = twice_j; tm > m.twice(); tm -= 2) {
    std::map<OccupationVector, std::vector<BigRational>, CanonicalOrder> contributions;
    for (const auto& term : terms) {
      for (int i = 0; i + 1 < species.levels(); ++i) {
        const int n_from = term.occupation[i];
        if (n_from == 0) continue;
        const int tmi = species.twice_m(i);
        // (s+m)(s-m+1) * n_i (n_{i+1}+1)
        const BigRational factor = BigRational((ts + tmi) * (ts - tmi + 2), 4) *
                                   BigRational(n_from * (term.occupation[i + 1] + 1));
        contributions[term.occupation.moved(i, i + 1)].push_back(term.amplitude_squared * factor);
      }
    }
    const BigRational step((twice_j + tm) * (twice_j - tm + 2), 4);
    terms.clear();
    for (auto& [occ, squares] : contributions)
      terms.push_back({occ, detail::add_square_roots(squares) / step});
  }
  return ExactExpansion{species, n_particles, m, std::move(terms)};
}

}  // namespace dicke

#endif  // DICKE_LADDER_HPP

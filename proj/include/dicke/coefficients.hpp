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

// Closed-form superposition coefficients of |J = sN, M> in the occupation
// basis.
//
// With K = J - |M| and d_m = sqrt(C(2s, s - m)) the squared coefficient of
// |n_{+s}, ..., n_{-s}> is the rational number
//
//   C^2 = N! / prod_m n_m!  *  prod_m C(2s, s-m)^{n_m}  /  C(2sN, K),
//
// which equals (K!)^2 N!/prod n_m! prod d_m^{2 n_m} / prod_{l=1}^{K} (2sN-l+1) l.
// Everything up to the final square root is exact.

#ifndef DICKE_COEFFICIENTS_HPP
#define DICKE_COEFFICIENTS_HPP

#include <boost/multiprecision/cpp_int.hpp>

#include <cmath>
#include <cstdlib>
#include <vector>

#include "dicke/basis.hpp"
#include "dicke/spin.hpp"

namespace dicke {

using BigInt = boost::multiprecision::cpp_int;
using BigRational = boost::multiprecision::cpp_rational;

inline BigInt factorial(int n) {
  BigInt f = 1;
  for (int i = 2; i <= n; ++i) f *= i;
  return f;
}

inline BigInt binomial(int n, int k) {
  if (k < 0 || k > n) return 0;
  k = std::min(k, n - k);
  BigInt b = 1;
  for (int i = 1; i <= k; ++i) {
    b *= n - k + i;
    b /= i;
  }
  return b;
}

inline double to_double(const BigRational& r) { return r.convert_to<double>(); }

struct Term {
  OccupationVector occupation;
  double amplitude = 0.0;
};

/// Symmetric N-particle state in the occupation basis of one M sector.
struct DickeExpansion {
  SpinSpecies species{1};
  int n_particles = 0;
  Magnetization m;
  std::vector<Term> terms;

  int twice_j() const { return species.twice_spin() * n_particles; }

  double norm_squared() const {
    double s = 0.0;
    for (const auto& t : terms) s += t.amplitude * t.amplitude;
    return s;
  }

  /// Amplitude of `occ`, 0 if absent.
  double amplitude(const OccupationVector& occ) const {
    for (const auto& t : terms)
      if (t.occupation == occ) return t.amplitude;
    return 0.0;
  }
};

/// d_m = sqrt(C(2s, s - m)) for the level with magnetic number m (twice units).
inline double level_weight(SpinSpecies species, int twice_m) {
  const int index = species.level_index(twice_m);
  return std::sqrt(binomial(species.twice_spin(), index).convert_to<double>());
}

/// Exact squared closed-form coefficient.
inline BigRational closed_form_coefficient_squared(SpinSpecies species, int n_particles,
                                                   Magnetization m,
                                                   const OccupationVector& occ) {
  check_sector(species, n_particles, m);
  if (static_cast<int>(occ.size()) != species.levels() || occ.total() != n_particles ||
      occ.twice_magnetization(species) != m.twice())
    throw DomainError("occupation " + occ.str() + " is not in the basis of N = " +
                      std::to_string(n_particles) + ", M = " + m.str());
  const int twice_s = species.twice_spin();
  const int k = (twice_s * n_particles - std::abs(m.twice())) / 2;
  BigInt numerator = factorial(n_particles);
  BigInt denominator = binomial(twice_s * n_particles, k);
  for (int i = 0; i < species.levels(); ++i) {
    denominator *= factorial(occ[i]);
    numerator *= boost::multiprecision::pow(binomial(twice_s, i), occ[i]);
  }
  return BigRational(numerator, denominator);
}

inline double closed_form_coefficient(SpinSpecies species, int n_particles, Magnetization m,
                                      const OccupationVector& occ) {
  return std::sqrt(to_double(closed_form_coefficient_squared(species, n_particles, m, occ)));
}

/// Full normalized expansion of |J, M>. Amplitudes are the closed-form values
/// divided by the square root of their summed squares.
inline DickeExpansion dicke_expansion(SpinSpecies species, int n_particles, Magnetization m) {
  DickeExpansion x{species, n_particles, m, {}};
  for (auto& occ : enumerate_basis(species, n_particles, m)) {
    const double c = closed_form_coefficient(species, n_particles, m, occ);
    x.terms.push_back({std::move(occ), c});
  }
  const double norm = std::sqrt(x.norm_squared());
  for (auto& t : x.terms) t.amplitude /= norm;
  return x;
}

/// Coefficient with the per-species prefactors exactly as printed and no
/// renormalization. Only used to document where those prefactors disagree
/// with the tables.
///   spin 1/2: 1
///   spin 1:   2^{n_0}
///   spin 3/2: 3^{(n2+n3)/2}
///   spin 2:   (3/2)^{n3/2} 3^{(n2+n3+n4)/2}
/// each times K! sqrt(N!/prod n!) prod_{l=1}^{K} 1/sqrt((2sN-l+1) l).
inline double printed_prefactor_coefficient(SpinSpecies species, int n_particles,
                                            Magnetization m, const OccupationVector& occ) {
  check_sector(species, n_particles, m);
  if (species.twice_spin() == 1) return 1.0;
  const int twice_s = species.twice_spin();
  const int k = (twice_s * n_particles - std::abs(m.twice())) / 2;
  BigInt denominator = binomial(twice_s * n_particles, k);
  BigInt numerator = factorial(n_particles);
  for (int i = 0; i < species.levels(); ++i) denominator *= factorial(occ[i]);
  double prefactor = 1.0;
  switch (twice_s) {
    case 2: prefactor = std::pow(2.0, occ[1]); break;
    case 3: prefactor = std::pow(3.0, 0.5 * (occ[1] + occ[2])); break;
    case 4:
      prefactor = std::pow(1.5, 0.5 * occ[2]) * std::pow(3.0, 0.5 * (occ[1] + occ[2] + occ[3]));
      break;
  }
  return prefactor * std::sqrt(to_double(BigRational(numerator, denominator)));
}

}  // namespace dicke

#endif  // DICKE_COEFFICIENTS_HPP

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

// Two-qudit density matrices, partial transpose and negativity.
//
// Matrices are stored in the natural product basis |a>|b>, index d*a + b,
// with level index 0 = m = +s. For spin 1 the labelled orderings below map
// that storage onto the nine-state lists used for the block forms:
//
//   rho:     |ud>, |00>, |du>, |u0>, |0u>, |0d>, |d0>, |uu>, |dd>
//            blocks T1 (3), T2 (2), T3 (2), a8, a9
//   rho^PT:  |uu>, |00>, |dd>, |u0>, |0d>, |0u>, |d0>, |ud>, |du>
//            blocks T1' (3), T2' (2), T3' (2), a1, a3
//
// (u = m +1, d = m -1).

#ifndef DICKE_ENTANGLEMENT_HPP
#define DICKE_ENTANGLEMENT_HPP

#include <algorithm>
#include <array>
#include <atomic>
#include <exception>
#include <mutex>
#include <cmath>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <thread>
#include <vector>

#include "dicke/basis.hpp"
#include "dicke/coefficients.hpp"
#include "dicke/linalg.hpp"
#include "dicke/spin.hpp"

namespace dicke {

inline constexpr std::array<std::size_t, 9> kRhoBlockOrder = {2, 4, 6, 1, 3, 5, 7, 0, 8};
inline constexpr std::array<std::size_t, 9> kPartialTransposeBlockOrder = {0, 4, 8, 1, 5, 3, 7, 2, 6};
inline constexpr std::array<std::size_t, 5> kBlockSizes = {3, 2, 2, 1, 1};

/// Density matrix of two d-level particles in the natural product basis.
struct TwoQuditDensity {
  int dim = 3;
  ComplexMatrix entries;

  double trace_defect() const { return std::abs(entries.trace() - Complex(1.0)); }
  double hermiticity_defect() const { return entries.hermiticity_defect(); }
};

/// Normalized pure state of two d-level particles, natural product order.
struct PureState {
  int dim = 3;
  std::vector<Complex> amplitudes;
};

inline TwoQuditDensity density_of(const PureState& psi) {
  const std::size_t n = psi.amplitudes.size();
  TwoQuditDensity rho{psi.dim, ComplexMatrix(n, n)};
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      rho.entries(i, j) = psi.amplitudes[i] * std::conj(psi.amplitudes[j]);
  return rho;
}

/// Matrix re-indexed so that out(i, j) = m(order[i], order[j]).
template <class T, std::size_t N>
Matrix<T> permuted(const Matrix<T>& m, const std::array<std::size_t, N>& order) {
  Matrix<T> out(N, N);
  for (std::size_t i = 0; i < N; ++i)
    for (std::size_t j = 0; j < N; ++j) out(i, j) = m(order[i], order[j]);
  return out;
}

/// Largest |entry| outside the diagonal blocks of the given sizes.
template <class T, std::size_t B>
double off_block_max(const Matrix<T>& m, const std::array<std::size_t, B>& sizes) {
  std::vector<std::size_t> block_of;
  for (std::size_t b = 0; b < B; ++b) block_of.insert(block_of.end(), sizes[b], b);
  double worst = 0.0;
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j)
      if (block_of[i] != block_of[j]) worst = std::max(worst, std::abs(m(i, j)));
  return worst;
}

// ---------------------------------------------------------------------------
// Named two-qutrit states.

enum class NamedState { kBellGeneralized, kEvenCoherent, kPsi2, kSingletPlus, kSingletMinus, kPsi1 };

inline NamedState parse_named_state(std::string_view name) {
  if (name == "bg" || name == "B_G") return NamedState::kBellGeneralized;
  if (name == "psie" || name == "psi_e") return NamedState::kEvenCoherent;
  if (name == "psi2" || name == "psi_2") return NamedState::kPsi2;
  if (name == "bsplus" || name == "B_s+") return NamedState::kSingletPlus;
  if (name == "bsminus" || name == "B_s-") return NamedState::kSingletMinus;
  if (name == "psi1" || name == "psi_1") return NamedState::kPsi1;
  throw DomainError("unknown state '" + std::string(name) + "'");
}

namespace detail {
inline constexpr std::size_t kUp = 0, kZero = 1, kDown = 2;
inline constexpr std::size_t pair_index(std::size_t a, std::size_t b) { return 3 * a + b; }
}  // namespace detail

/// psi_1 = (1/sqrt3)[|uu> + c1 (|ud> + |du>)/sqrt2 + c2 |00> + |dd>],
/// |c1|^2 + |c2|^2 = 1.
inline PureState psi1_state(Complex c1, Complex c2) {
  using namespace detail;
  if (std::abs(std::norm(c1) + std::norm(c2) - 1.0) > 1e-10)
    throw DomainError("psi1 requires |c1|^2 + |c2|^2 = 1");
  const double r3 = 1.0 / std::sqrt(3.0);
  PureState psi{3, std::vector<Complex>(9)};
  psi.amplitudes[pair_index(kUp, kUp)] = r3;
  psi.amplitudes[pair_index(kDown, kDown)] = r3;
  psi.amplitudes[pair_index(kUp, kDown)] = r3 * c1 / std::sqrt(2.0);
  psi.amplitudes[pair_index(kDown, kUp)] = r3 * c1 / std::sqrt(2.0);
  psi.amplitudes[pair_index(kZero, kZero)] = r3 * c2;
  return psi;
}

inline PureState named_two_qutrit_state(NamedState name, Complex c1 = 0.0, Complex c2 = 0.0) {
  using namespace detail;
  PureState psi{3, std::vector<Complex>(9)};
  auto& a = psi.amplitudes;
  const double r3 = 1.0 / std::sqrt(3.0);
  switch (name) {
    case NamedState::kBellGeneralized:
      a[pair_index(kUp, kUp)] = a[pair_index(kZero, kZero)] = a[pair_index(kDown, kDown)] = r3;
      break;
    case NamedState::kEvenCoherent:
      return psi1_state(std::sqrt(1.0 / 3.0), std::sqrt(2.0 / 3.0));
    case NamedState::kPsi2:
      a[pair_index(kUp, kDown)] = a[pair_index(kDown, kUp)] = 0.5;
      a[pair_index(kZero, kZero)] = 1.0 / std::sqrt(2.0);
      break;
    case NamedState::kSingletPlus:
    case NamedState::kSingletMinus:
      a[pair_index(kUp, kDown)] = a[pair_index(kDown, kUp)] = r3;
      a[pair_index(kZero, kZero)] = name == NamedState::kSingletPlus ? r3 : -r3;
      break;
    case NamedState::kPsi1:
      return psi1_state(c1, c2);
  }
  return psi;
}

// ---------------------------------------------------------------------------
// Partial transpose and negativity.

/// <a b|rho^PT|a' b'> = <a b'|rho|a' b>: transpose on the second factor.
inline TwoQuditDensity partial_transpose(const TwoQuditDensity& rho) {
  const std::size_t d = static_cast<std::size_t>(rho.dim);
  TwoQuditDensity out{rho.dim, ComplexMatrix(d * d, d * d)};
  for (std::size_t a = 0; a < d; ++a)
    for (std::size_t b = 0; b < d; ++b)
      for (std::size_t ap = 0; ap < d; ++ap)
        for (std::size_t bp = 0; bp < d; ++bp)
          out.entries(a * d + b, ap * d + bp) = rho.entries(a * d + bp, ap * d + b);
  return out;
}

/// Eigenvalues of a Hermitian matrix, taking the real path when every entry
/// is real.
inline std::vector<double> density_eigenvalues(const ComplexMatrix& m) {
  bool real = true;
  for (std::size_t i = 0; i < m.rows() && real; ++i)
    for (std::size_t j = 0; j < m.cols(); ++j)
      if (m(i, j).imag() != 0.0) {
        real = false;
        break;
      }
  if (!real) return hermitian_eigenvalues(m);
  RealMatrix r(m.rows(), m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) r(i, j) = m(i, j).real();
  return symmetric_eigenvalues(r);
}

/// Throws unless trace = 1, rho is Hermitian and min eigenvalue >= -1e-10.
inline void check_density(const TwoQuditDensity& rho) {
  if (rho.trace_defect() > 1e-12) throw DomainError("density matrix trace differs from 1");
  if (rho.hermiticity_defect() > 1e-12) throw DomainError("density matrix is not Hermitian");
  if (density_eigenvalues(rho.entries).front() < -1e-10)
    throw DomainError("density matrix is not positive semidefinite");
}

struct BlockContribution {
  std::string label;
  std::vector<double> eigenvalues;
  double negativity = 0.0;
};

struct NegativityReport {
  double value = 0.0;
  std::vector<double> negative_eigenvalues;
  std::optional<std::vector<BlockContribution>> blocks;
};

/// Eigenvalues above -1e-14 are rounding noise and count as non-negative.
inline constexpr double kNegativeEigenvalueCutoff = -1e-14;

namespace detail {

inline double negative_sum(const std::vector<double>& values, std::vector<double>* negatives) {
  double s = 0.0;
  for (double v : values) {
    if (v < kNegativeEigenvalueCutoff) {
      s += -v;
      if (negatives) negatives->push_back(v);
    }
  }
  return s;
}

inline ComplexMatrix sub_block(const ComplexMatrix& m, std::size_t start, std::size_t size) {
  ComplexMatrix out(size, size);
  for (std::size_t i = 0; i < size; ++i)
    for (std::size_t j = 0; j < size; ++j) out(i, j) = m(start + i, start + j);
  return out;
}

}  // namespace detail

/// Tolerance under which off-block entries are treated as structurally zero.
inline constexpr double kBlockTolerance = 1e-12;

/// True when a spin-1 rho has the block form diag(T1, T2, T3, a8, a9).
inline bool has_dicke_block_structure(const TwoQuditDensity& rho) {
  if (rho.dim != 3) return false;
  return off_block_max(permuted(rho.entries, kRhoBlockOrder), kBlockSizes) <= kBlockTolerance;
}

/// Sum of |lambda| over the negative eigenvalues of rho^PT. The full
/// diagonalization always runs; for block-structured spin-1 inputs the
/// per-block eigenvalues of T1', T2', T3', a1, a3 are attached as well.
inline NegativityReport negativity(const TwoQuditDensity& rho) {
  const TwoQuditDensity pt = partial_transpose(rho);
  NegativityReport report;
  report.value = detail::negative_sum(density_eigenvalues(pt.entries), &report.negative_eigenvalues);
  if (has_dicke_block_structure(rho)) {
    const ComplexMatrix ordered = permuted(pt.entries, kPartialTransposeBlockOrder);
    static constexpr std::array<const char*, 5> kLabels = {"T1'", "T2'", "T3'", "a1", "a3"};
    std::vector<BlockContribution> blocks;
    std::size_t start = 0;
    for (std::size_t b = 0; b < kBlockSizes.size(); ++b) {
      BlockContribution c{kLabels[b], density_eigenvalues(detail::sub_block(ordered, start, kBlockSizes[b])), 0.0};
      c.negativity = detail::negative_sum(c.eigenvalues, nullptr);
      blocks.push_back(std::move(c));
      start += kBlockSizes[b];
    }
    report.blocks = std::move(blocks);
  }
  return report;
}

/// Negativity of a two-qutrit pure state from its Schmidt coefficients,
/// N = x = sum_{i<j} s_i s_j, built from the invariants of the coefficient
/// matrix A alone: s1 = tr A A^dag, s2 = sum of squared 2 x 2 minors and
/// d = |det A|. With t = sum s_i one has t^2 = s1 + 2x and x^2 = s2 + 2 d t,
/// so x is the positive root of the convex f(x) = x^2 - s2 - 2 d sqrt(s1 + 2x).
/// Newton from x = s1 descends monotonically onto it. Unlike the
/// trigonometric cubic for the eigenvalues of A A^dag this stays accurate at
/// repeated Schmidt coefficients, product states included.
inline double schmidt_negativity_oracle(const PureState& psi) {
  if (psi.dim != 3 || psi.amplitudes.size() != 9)
    throw DomainError("Schmidt oracle handles two qutrits only");
  auto a = [&](int i, int j) { return psi.amplitudes[static_cast<std::size_t>(3 * i + j)]; };
  double s1 = 0.0, s2 = 0.0;
  for (const auto& c : psi.amplitudes) s1 += std::norm(c);
  for (int r0 = 0; r0 < 3; ++r0)
    for (int r1 = r0 + 1; r1 < 3; ++r1)
      for (int c0 = 0; c0 < 3; ++c0)
        for (int c1 = c0 + 1; c1 < 3; ++c1) s2 += std::norm(a(r0, c0) * a(r1, c1) - a(r0, c1) * a(r1, c0));
  const double d = std::abs(a(0, 0) * (a(1, 1) * a(2, 2) - a(1, 2) * a(2, 1)) -
                            a(0, 1) * (a(1, 0) * a(2, 2) - a(1, 2) * a(2, 0)) +
                            a(0, 2) * (a(1, 0) * a(2, 1) - a(1, 1) * a(2, 0)));
  if (d == 0.0) return std::sqrt(s2);
  auto f = [&](double x) { return x * x - s2 - 2.0 * d * std::sqrt(s1 + 2.0 * x); };
  double x = s1;
  for (int it = 0; it < 500; ++it) {
    const double fx = f(x);
    if (!(fx > 0.0)) break;
    const double slope = 2.0 * x - 2.0 * d / std::sqrt(s1 + 2.0 * x);
    if (!(slope > 0.0)) break;
    const double next = x - fx / slope;
    if (!(next < x)) break;
    x = std::max(next, 0.0);
  }
  return x;
}

// ---------------------------------------------------------------------------
// Two-particle reductions of symmetric spin-1 states.

/// The independent elements of the spin-1 two-particle RDM of a symmetric
/// state with real amplitudes in one M sector. a2 and a4..a7 are evaluated
/// in the forms built from (N - n0)/N and M/(2N); the direct occupation
/// moments are kept alongside for comparison.
struct TwoBodyElements {
  double a1 = 0, a2 = 0, a3 = 0, a4 = 0, a5 = 0, a6 = 0, a7 = 0, a8 = 0, a9 = 0;
  double b1 = 0, b2 = 0, b3 = 0;
  double c1 = 0, c2 = 0;
  double a2_hypergeometric = 0;  // <n0 (n0-1)> / (N (N-1))
  double a4_direct = 0;          // <n1 n0> / (N (N-1))
  double a6_direct = 0;          // <n-1 n0> / (N (N-1))

  double trace() const { return a1 + a2 + a3 + a4 + a5 + a6 + a7 + a8 + a9; }
};

inline TwoBodyElements two_body_elements(const DickeExpansion& x) {
  if (x.species.twice_spin() != 2) throw DomainError("two-body elements are defined for spin 1 only");
  if (x.n_particles < 2) throw DomainError("two-particle reduction needs N >= 2");
  const double n = x.n_particles;
  const double pairs = n * (n - 1.0);
  const double m = x.m.value();
  std::map<OccupationVector, double> amp;
  for (const auto& t : x.terms) amp[t.occupation] = t.amplitude;

  double mean_non_zero = 0;  // sum |C|^2 (N - n0)/N
  double s_n1nm1 = 0, s_n1n1 = 0, s_nm1nm1 = 0, s_n0n1 = 0, s_n0nm1 = 0, s_n0n0 = 0, cross = 0;
  for (const auto& t : x.terms) {
    const double w = t.amplitude * t.amplitude;
    const double n1 = t.occupation[0], n0 = t.occupation[1], nm1 = t.occupation[2];
    mean_non_zero += w * (n - n0) / n;
    s_n1nm1 += w * n1 * nm1;
    s_n1n1 += w * n1 * (n1 - 1);
    s_nm1nm1 += w * nm1 * (nm1 - 1);
    s_n0n1 += w * n0 * n1;
    s_n0nm1 += w * n0 * nm1;
    s_n0n0 += w * n0 * (n0 - 1);
    if (t.occupation[1] >= 2) {
      const OccupationVector partner({t.occupation[0] + 1, t.occupation[1] - 2, t.occupation[2] + 1});
      const auto it = amp.find(partner);
      if (it != amp.end())
        cross += t.amplitude * it->second * std::sqrt(n0 * (n0 - 1) * (n1 + 1) * (nm1 + 1));
    }
  }

  TwoBodyElements e;
  e.a2 = 1.0 - 2.0 * mean_non_zero + (2.0 / pairs) * (s_n1nm1 + 0.5 * (s_n1n1 + s_nm1nm1));
  e.a3 = s_n1nm1 / pairs;
  e.a1 = e.a3;
  e.a4 = e.a5 = 0.5 * mean_non_zero + m / (2.0 * n) - (s_n1nm1 + s_n1n1) / pairs;
  e.a6 = e.a7 = 0.5 * mean_non_zero - m / (2.0 * n) - (s_n1nm1 + s_nm1nm1) / pairs;
  e.a8 = s_n1n1 / pairs;
  e.a9 = s_nm1nm1 / pairs;
  e.c1 = e.c2 = cross / pairs;
  e.b1 = s_n0n1 / pairs;
  e.b2 = s_n0nm1 / pairs;
  e.b3 = s_n1nm1 / pairs;
  e.a2_hypergeometric = s_n0n0 / pairs;
  e.a4_direct = s_n0n1 / pairs;
  e.a6_direct = s_n0nm1 / pairs;
  return e;
}

/// Places the two-body elements into a 9 x 9 matrix (natural product order).
inline TwoQuditDensity assemble_two_body_rdm(const TwoBodyElements& e) {
  using namespace detail;
  TwoQuditDensity rho{3, ComplexMatrix(9, 9)};
  auto set = [&](std::size_t a, std::size_t b, std::size_t c, std::size_t d, double v) {
    rho.entries(pair_index(a, b), pair_index(c, d)) = v;
  };
  set(kUp, kDown, kUp, kDown, e.a1);
  set(kZero, kZero, kZero, kZero, e.a2);
  set(kDown, kUp, kDown, kUp, e.a3);
  set(kUp, kDown, kZero, kZero, e.c1);
  set(kZero, kZero, kUp, kDown, e.c1);
  set(kUp, kDown, kDown, kUp, e.b3);
  set(kDown, kUp, kUp, kDown, e.b3);
  set(kZero, kZero, kDown, kUp, e.c2);
  set(kDown, kUp, kZero, kZero, e.c2);
  set(kUp, kZero, kUp, kZero, e.a4);
  set(kZero, kUp, kZero, kUp, e.a5);
  set(kUp, kZero, kZero, kUp, e.b1);
  set(kZero, kUp, kUp, kZero, e.b1);
  set(kZero, kDown, kZero, kDown, e.a6);
  set(kDown, kZero, kDown, kZero, e.a7);
  set(kZero, kDown, kDown, kZero, e.b2);
  set(kDown, kZero, kZero, kDown, e.b2);
  set(kUp, kUp, kUp, kUp, e.a8);
  set(kDown, kDown, kDown, kDown, e.a9);
  return rho;
}

/// Two-particle RDM of a spin-1 symmetric state from its occupation
/// statistics. Throws if the assembled trace misses 1 by more than 1e-12.
inline TwoQuditDensity dicke_two_particle_rdm(const DickeExpansion& x) {
  const TwoBodyElements e = two_body_elements(x);
  if (std::abs(e.trace() - 1.0) > 1e-12)
    throw std::logic_error("two-body elements fail trace closure");
  return assemble_two_body_rdm(e);
}

inline constexpr int kBruteForceMaxParticles = 6;

/// Two-particle RDM by writing the symmetric state out over all d^N
/// product configurations and tracing out particles 3..N.
inline TwoQuditDensity brute_force_rdm(const DickeExpansion& x) {
  const int n = x.n_particles;
  if (n < 2) throw DomainError("two-particle reduction needs N >= 2");
  if (n > kBruteForceMaxParticles) throw DomainError("brute-force reduction is limited to N <= 6");
  const int d = x.species.levels();
  std::size_t total = 1;
  for (int i = 0; i < n; ++i) total *= d;
  std::vector<double> psi(total, 0.0);
  std::vector<int> config(n);
  for (std::size_t idx = 0; idx < total; ++idx) {
    std::size_t rest = idx;
    std::vector<int> counts(d, 0);
    for (int p = n - 1; p >= 0; --p) {
      config[p] = static_cast<int>(rest % d);
      rest /= d;
      ++counts[config[p]];
    }
    const OccupationVector occ(counts);
    const double c = x.amplitude(occ);
    if (c == 0.0) continue;
    // |n> spreads over N!/prod n! configurations with equal weight.
    double multinomial = std::tgamma(n + 1.0);
    for (int k : counts) multinomial /= std::tgamma(k + 1.0);
    psi[idx] = c / std::sqrt(multinomial);
  }
  const std::size_t pair_dim = static_cast<std::size_t>(d) * d;
  const std::size_t env = total / pair_dim;
  TwoQuditDensity rho{d, ComplexMatrix(pair_dim, pair_dim)};
  for (std::size_t i = 0; i < pair_dim; ++i)
    for (std::size_t j = 0; j < pair_dim; ++j) {
      double s = 0.0;
      for (std::size_t e = 0; e < env; ++e) s += psi[i * env + e] * psi[j * env + e];
      rho.entries(i, j) = s;
    }
  return rho;
}

/// Uniform superposition over the K basis vectors of one M sector.
inline DickeExpansion equal_probability_expansion(SpinSpecies species, int n_particles,
                                                  Magnetization m) {
  DickeExpansion x{species, n_particles, m, {}};
  auto basis = enumerate_basis(species, n_particles, m);
  const double amp = 1.0 / std::sqrt(static_cast<double>(basis.size()));
  for (auto& occ : basis) x.terms.push_back({std::move(occ), amp});
  return x;
}

// ---------------------------------------------------------------------------
// Sweeps over M.

enum class StateFamily { kDicke, kEqual };

struct SweepPoint {
  Magnetization m;
  double negativity = 0.0;
};

inline double family_negativity(StateFamily family, int n_particles, Magnetization m) {
  const SpinSpecies spin1(2);
  const DickeExpansion x = family == StateFamily::kDicke
                               ? dicke_expansion(spin1, n_particles, m)
                               : equal_probability_expansion(spin1, n_particles, m);
  return negativity(dicke_two_particle_rdm(x)).value;
}

/// Negativity for every M in [m_first, m_last] (twice units, step 2) of a
/// spin-1 family. Points are computed on up to `threads` workers and
/// returned in M order.
inline std::vector<SweepPoint> negativity_sweep(StateFamily family, int n_particles,
                                                Magnetization m_first, Magnetization m_last,
                                                unsigned threads = 1) {
  const SpinSpecies spin1(2);
  check_sector(spin1, n_particles, m_first);
  check_sector(spin1, n_particles, m_last);
  std::vector<SweepPoint> points;
  for (int tm = m_first.twice(); tm <= m_last.twice(); tm += 2)
    points.push_back({Magnetization::from_twice(tm), 0.0});
  std::atomic<std::size_t> next{0};
  std::exception_ptr failure;
  std::mutex failure_mutex;
  auto work = [&] {
    try {
      for (std::size_t i = next++; i < points.size(); i = next++)
        points[i].negativity = family_negativity(family, n_particles, points[i].m);
    } catch (...) {
      std::lock_guard lock(failure_mutex);
      if (!failure) failure = std::current_exception();
      next = points.size();
    }
  };
  threads = std::max(1u, std::min<unsigned>(threads, static_cast<unsigned>(points.size())));
  if (threads == 1) {
    work();
  } else {
    std::vector<std::jthread> pool;
    for (unsigned t = 0; t < threads; ++t) pool.emplace_back(work);
  }
  if (failure) std::rethrow_exception(failure);
  return points;
}

}  // namespace dicke

#endif  // DICKE_ENTANGLEMENT_HPP

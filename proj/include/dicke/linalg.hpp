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

// Small dense matrices and a cyclic Jacobi eigensolver. Sizes here never
// exceed 25 x 25 (two spin-2 particles), usually 9 x 9.

#ifndef DICKE_LINALG_HPP
#define DICKE_LINALG_HPP

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstddef>
#include <stdexcept>
#include <vector>

#include "dicke/spin.hpp"

namespace dicke {

using Complex = std::complex<double>;

inline double abs2(double x) { return x * x; }
inline double abs2(const Complex& z) { return std::norm(z); }
inline double conj(double x) { return x; }
inline Complex conj(const Complex& z) { return std::conj(z); }

/// Row-major dense matrix.
template <class T>
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

  static Matrix identity(std::size_t n) {
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = T(1);
    return m;
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  T& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const T& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  T trace() const {
    T t{};
    for (std::size_t i = 0; i < std::min(rows_, cols_); ++i) t += (*this)(i, i);
    return t;
  }

  Matrix adjoint() const {
    Matrix out(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j) out(j, i) = conj((*this)(i, j));
    return out;
  }

  friend Matrix operator*(const Matrix& a, const Matrix& b) {
    if (a.cols_ != b.rows_) throw std::invalid_argument("matrix shape mismatch");
    Matrix out(a.rows_, b.cols_);
    for (std::size_t i = 0; i < a.rows_; ++i)
      for (std::size_t k = 0; k < a.cols_; ++k)
        for (std::size_t j = 0; j < b.cols_; ++j) out(i, j) += a(i, k) * b(k, j);
    return out;
  }

  /// max_ij |a_ij - b_ij|
  friend double max_abs_diff(const Matrix& a, const Matrix& b) {
    if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw std::invalid_argument("matrix shape mismatch");
    double d = 0.0;
    for (std::size_t i = 0; i < a.data_.size(); ++i) d = std::max(d, std::abs(a.data_[i] - b.data_[i]));
    return d;
  }

  /// max_ij |a_ij - conj(a_ji)|
  double hermiticity_defect() const {
    double d = 0.0;
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j)
        d = std::max(d, std::abs((*this)(i, j) - conj((*this)(j, i))));
    return d;
  }

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<T> data_;
};

using RealMatrix = Matrix<double>;
using ComplexMatrix = Matrix<Complex>;

struct EigenDecomposition {
  std::vector<double> values;  // ascending
  RealMatrix vectors;          // column j pairs with values[j]
  int sweeps = 0;
};

inline constexpr double kSymmetryTolerance = 1e-12;
inline constexpr double kJacobiOffDiagonalTolerance = 1e-13;
inline constexpr int kJacobiMaxSweeps = 50;

/// Cyclic Jacobi diagonalization of a real symmetric matrix. Converged when
/// the off-diagonal Frobenius norm drops below 1e-13 (scaled by the matrix
/// norm when that exceeds one).
inline EigenDecomposition symmetric_eigen(const RealMatrix& input) {
  const std::size_t n = input.rows();
  if (input.cols() != n) throw DomainError("eigensolver needs a square matrix");
  if (input.hermiticity_defect() > kSymmetryTolerance)
    throw DomainError("eigensolver input is not symmetric");

  RealMatrix a = input;
  RealMatrix v = RealMatrix::identity(n);
  double frobenius = 0.0;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) frobenius += a(i, j) * a(i, j);
  const double tol = kJacobiOffDiagonalTolerance * std::max(1.0, std::sqrt(frobenius));

  auto off_norm = [&] {
    double s = 0.0;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        if (i != j) s += a(i, j) * a(i, j);
    return std::sqrt(s);
  };

  int sweep = 0;
  while (off_norm() >= tol) {
    if (++sweep > kJacobiMaxSweeps) throw std::runtime_error("Jacobi iteration did not converge");
    for (std::size_t p = 0; p + 1 < n; ++p) {
      for (std::size_t q = p + 1; q < n; ++q) {
        const double apq = a(p, q);
        if (apq == 0.0) continue;
        const double tau = (a(q, q) - a(p, p)) / (2.0 * apq);
        const double t = (tau >= 0 ? 1.0 : -1.0) / (std::abs(tau) + std::sqrt(1.0 + tau * tau));
        const double c = 1.0 / std::sqrt(1.0 + t * t);
        const double s = t * c;
        for (std::size_t k = 0; k < n; ++k) {  // A <- A J
          const double akp = a(k, p), akq = a(k, q);
          a(k, p) = c * akp - s * akq;
          a(k, q) = s * akp + c * akq;
        }
        for (std::size_t k = 0; k < n; ++k) {  // A <- J^T A
          const double apk = a(p, k), aqk = a(q, k);
          a(p, k) = c * apk - s * aqk;
          a(q, k) = s * apk + c * aqk;
        }
        a(p, q) = a(q, p) = 0.0;
        for (std::size_t k = 0; k < n; ++k) {  // V <- V J
          const double vkp = v(k, p), vkq = v(k, q);
          v(k, p) = c * vkp - s * vkq;
          v(k, q) = s * vkp + c * vkq;
        }
      }
    }
  }

  std::vector<std::size_t> order(n);
  for (std::size_t i = 0; i < n; ++i) order[i] = i;
  std::sort(order.begin(), order.end(), [&](std::size_t x, std::size_t y) { return a(x, x) < a(y, y); });
  EigenDecomposition out{std::vector<double>(n), RealMatrix(n, n), sweep};
  for (std::size_t j = 0; j < n; ++j) {
    out.values[j] = a(order[j], order[j]);
    for (std::size_t i = 0; i < n; ++i) out.vectors(i, j) = v(i, order[j]);
  }
  return out;
}

inline std::vector<double> symmetric_eigenvalues(const RealMatrix& m) {
  return symmetric_eigen(m).values;
}

/// Eigenvalues of a Hermitian matrix H = A + iB through the real symmetric
/// embedding [[A, -B], [B, A]], whose spectrum is that of H twice over.
inline std::vector<double> hermitian_eigenvalues(const ComplexMatrix& h) {
  const std::size_t n = h.rows();
  if (h.cols() != n) throw DomainError("eigensolver needs a square matrix");
  if (h.hermiticity_defect() > kSymmetryTolerance) throw DomainError("eigensolver input is not Hermitian");
  RealMatrix embedded(2 * n, 2 * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      embedded(i, j) = embedded(i + n, j + n) = h(i, j).real();
      embedded(i + n, j) = h(i, j).imag();
      embedded(i, j + n) = -h(i, j).imag();
    }
  }
  const auto doubled = symmetric_eigenvalues(embedded);
  std::vector<double> values(n);
  for (std::size_t i = 0; i < n; ++i) values[i] = 0.5 * (doubled[2 * i] + doubled[2 * i + 1]);
  return values;
}

inline std::vector<double> hermitian_eigenvalues(const RealMatrix& h) {
  return symmetric_eigenvalues(h);
}

}  // namespace dicke

#endif  // DICKE_LINALG_HPP

// Copyright 2026 The entverify Authors
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

#pragma once

// Dense complex linear algebra for operators on C^d and C^d (x) C^d.

#include <complex>
#include <cstddef>
#include <span>
#include <vector>

namespace entverify {

using Complex = std::complex<double>;
using ComplexVector = std::vector<Complex>;

inline constexpr double kDefaultTolerance = 1e-10;

/// Dense row-major complex matrix.
class ComplexMatrix {
 public:
  ComplexMatrix() = default;
  ComplexMatrix(std::size_t rows, std::size_t cols);
  ComplexMatrix(std::size_t rows, std::size_t cols, std::vector<Complex> entries);

  static ComplexMatrix identity(std::size_t n);
  static ComplexMatrix diagonal(std::span<const Complex> diag);
  /// |a><b|
  static ComplexMatrix outer(std::span<const Complex> a, std::span<const Complex> b);
  /// Matrix whose columns are the given vectors (all of equal length).
  static ComplexMatrix from_columns(std::span<const ComplexVector> columns);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  bool is_square() const noexcept { return rows_ == cols_; }

  Complex& operator()(std::size_t i, std::size_t j) { return entries_[i * cols_ + j]; }
  const Complex& operator()(std::size_t i, std::size_t j) const {
    return entries_[i * cols_ + j];
  }

  std::span<const Complex> entries() const noexcept { return entries_; }
  ComplexVector column(std::size_t j) const;

  ComplexMatrix adjoint() const;
  ComplexMatrix conj() const;
  ComplexMatrix transpose() const;
  Complex trace() const;
  double frobenius_norm() const;

  ComplexMatrix& operator+=(const ComplexMatrix& other);
  ComplexMatrix& operator-=(const ComplexMatrix& other);
  ComplexMatrix& operator*=(Complex scale);

  friend ComplexMatrix operator+(ComplexMatrix a, const ComplexMatrix& b) { return a += b; }
  friend ComplexMatrix operator-(ComplexMatrix a, const ComplexMatrix& b) { return a -= b; }
  friend ComplexMatrix operator*(ComplexMatrix a, Complex s) { return a *= s; }
  friend ComplexMatrix operator*(Complex s, ComplexMatrix a) { return a *= s; }
  friend ComplexMatrix operator*(const ComplexMatrix& a, const ComplexMatrix& b);
  friend ComplexVector operator*(const ComplexMatrix& a, std::span<const Complex> v);

  friend bool operator==(const ComplexMatrix&, const ComplexMatrix&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Complex> entries_;
};

/// Largest entrywise modulus of a - b; dimensions must agree.
double max_abs_diff(const ComplexMatrix& a, const ComplexMatrix& b);

/// tr(a b) without forming the product.
Complex trace_of_product(const ComplexMatrix& a, const ComplexMatrix& b);

ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b);
ComplexVector kron(std::span<const Complex> a, std::span<const Complex> b);

bool is_hermitian(const ComplexMatrix& a, double tol = kDefaultTolerance);
bool is_projector(const ComplexMatrix& p, double tol = kDefaultTolerance);
bool is_unitary(const ComplexMatrix& u, double tol = kDefaultTolerance);

Complex inner(std::span<const Complex> a, std::span<const Complex> b);  // <a|b>
double norm(std::span<const Complex> v);
double max_abs_diff(std::span<const Complex> a, std::span<const Complex> b);

/// Real spectrum of a Hermitian matrix. Eigenvalues are sorted nonincreasing and
/// column k of `eigenvectors` belongs to eigenvalues[k].
struct Spectrum {
  std::vector<double> eigenvalues;
  ComplexMatrix eigenvectors;
};

/// Cyclic complex Jacobi eigensolver. Throws NotHermitian when `a` fails
/// is_hermitian(a, tol).
Spectrum hermitian_eig(const ComplexMatrix& a, double tol = kDefaultTolerance);

/// Eigendecomposition of a unitary with nondegenerate spectrum. Eigenpairs are
/// ordered by eigenvalue phase in [0, 2*pi).
struct UnitarySpectrum {
  std::vector<Complex> eigenvalues;
  std::vector<ComplexVector> eigenvectors;
};

/// Diagonalizes the Hermitian combination a*U + conj(a)*U^dagger for a fixed
/// generic phase a, then checks every vector against U directly. Throws
/// NotUnitary or DegenerateSpectrum.
UnitarySpectrum unitary_eigendecomposition(const ComplexMatrix& u,
                                           double tol = kDefaultTolerance);

/// Partial trace over the second factor of a (d*d) x (d*d) operator.
ComplexMatrix partial_trace_b(const ComplexMatrix& a, std::size_t d);
/// Partial transpose on the second factor of a (d*d) x (d*d) operator.
ComplexMatrix partial_transpose_b(const ComplexMatrix& a, std::size_t d);

}  // namespace entverify

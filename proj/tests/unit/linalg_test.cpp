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

#include "entverify/linalg.hpp"

#include <gtest/gtest.h>

#include <Eigen/Dense>
#include <cmath>
#include <numbers>
#include <random>

#include "entverify/error.hpp"
#include "fixtures.hpp"

namespace entverify {
namespace {

using testing::random_hermitian;
using testing::random_unitary;

Eigen::MatrixXcd to_eigen(const ComplexMatrix& a) {
  Eigen::MatrixXcd m(a.rows(), a.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) m(i, j) = a(i, j);
  return m;
}

ComplexMatrix shift(std::size_t d) {
  ComplexMatrix x(d, d);
  for (std::size_t j = 0; j < d; ++j) x((j + 1) % d, j) = 1.0;
  return x;
}

double phase(Complex z) {
  const double a = std::arg(z);
  return a < 0.0 ? a + 2.0 * std::numbers::pi : a;
}

TEST(ComplexMatrix, ArithmeticAndAdjoint) {
  std::mt19937_64 rng(1);
  const ComplexMatrix a = random_unitary(4, rng);
  const ComplexMatrix b = testing::random_hermitian(4, rng);
  EXPECT_LT(max_abs_diff((a * b).adjoint(), b.adjoint() * a.adjoint()), 1e-12);
  EXPECT_EQ(a.adjoint(), a.conj().transpose());
  EXPECT_NEAR(std::abs(trace_of_product(a, b) - (a * b).trace()), 0.0, 1e-12);
  EXPECT_TRUE(is_unitary(a));
  EXPECT_TRUE(is_hermitian(b));
  EXPECT_FALSE(is_hermitian(a));
}

TEST(ComplexMatrix, DimensionChecks) {
  EXPECT_THROW((void)(ComplexMatrix(2, 3) * ComplexMatrix(2, 3)), Error);
  EXPECT_THROW((void)(ComplexMatrix(2, 2) + ComplexMatrix(3, 3)), Error);
  EXPECT_THROW(ComplexMatrix(2, 2, ComplexVector(3)), Error);
}

TEST(Kron, MixedProductProperty) {
  std::mt19937_64 rng(2);
  const auto a = random_hermitian(2, rng);
  const auto b = random_hermitian(3, rng);
  const auto c = random_hermitian(2, rng);
  const auto e = random_hermitian(3, rng);
  EXPECT_LT(max_abs_diff(kron(a, b) * kron(c, e), kron(a * c, b * e)), 1e-12);
  const ComplexVector u{1.0, Complex(0, 1)};
  const ComplexVector v{2.0, 3.0, 4.0};
  const ComplexVector uv = kron(u, v);
  ASSERT_EQ(uv.size(), 6u);
  EXPECT_EQ(uv[4], Complex(0, 3));
}

TEST(HermitianEig, MatchesEigenOnRandomMatrices) {
  std::mt19937_64 rng(3);
  for (std::size_t n = 1; n <= 16; ++n) {
    const ComplexMatrix a = random_hermitian(n, rng);
    const Spectrum s = hermitian_eig(a);
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> oracle(to_eigen(a));
    const Eigen::VectorXd ev = oracle.eigenvalues();  // ascending
    ASSERT_EQ(s.eigenvalues.size(), n);
    for (std::size_t k = 0; k < n; ++k) {
      EXPECT_NEAR(s.eigenvalues[k], ev(static_cast<Eigen::Index>(n - 1 - k)), 1e-10) << n;
      if (k > 0) EXPECT_GE(s.eigenvalues[k - 1], s.eigenvalues[k]);
    }
    EXPECT_TRUE(is_unitary(s.eigenvectors, 1e-10));
    std::vector<Complex> diag(s.eigenvalues.begin(), s.eigenvalues.end());
    const ComplexMatrix recon =
        s.eigenvectors * ComplexMatrix::diagonal(diag) * s.eigenvectors.adjoint();
    EXPECT_LT(max_abs_diff(recon, a), 1e-10);
  }
}

TEST(HermitianEig, DegenerateSpectrum) {
  const std::size_t d = 4;
  ComplexVector phi(d * d);
  for (std::size_t j = 0; j < d; ++j) phi[j * d + j] = 1.0 / std::sqrt(double(d));
  const ComplexMatrix omega = (ComplexMatrix::identity(d * d) +
                               ComplexMatrix::outer(phi, phi) * Complex(double(d))) *
                              Complex(1.0 / (d + 1));
  const Spectrum s = hermitian_eig(omega);
  EXPECT_NEAR(s.eigenvalues.front(), 1.0, 1e-12);
  for (std::size_t k = 1; k < d * d; ++k) EXPECT_NEAR(s.eigenvalues[k], 0.2, 1e-12);
  const ComplexVector top = s.eigenvectors.column(0);
  EXPECT_NEAR(std::abs(inner(top, phi)), 1.0, 1e-12);
}

TEST(HermitianEig, Errors) {
  ComplexMatrix a(2, 2);
  a(0, 1) = 1.0;
  try {
    hermitian_eig(a);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kNotHermitian);
  }
  try {
    hermitian_eig(ComplexMatrix(2, 3));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kDimensionMismatch);
  }
}

TEST(UnitaryEigendecomposition, ShiftOperatorAllDimensions) {
  for (std::size_t d = 2; d <= 13; ++d) {
    const ComplexMatrix x = shift(d);
    const UnitarySpectrum s = unitary_eigendecomposition(x);
    ASSERT_EQ(s.eigenvalues.size(), d);
    for (std::size_t k = 0; k < d; ++k) {
      const Complex expected = std::polar(1.0, 2.0 * std::numbers::pi * double(k) / double(d));
      EXPECT_LT(std::abs(s.eigenvalues[k] - expected), 1e-9) << "d=" << d << " k=" << k;
      const ComplexVector xv = x * std::span<const Complex>(s.eigenvectors[k]);
      for (std::size_t i = 0; i < d; ++i) {
        EXPECT_LT(std::abs(xv[i] - s.eigenvalues[k] * s.eigenvectors[k][i]), 1e-9);
      }
      EXPECT_NEAR(norm(s.eigenvectors[k]), 1.0, 1e-12);
    }
  }
}

TEST(UnitaryEigendecomposition, RandomUnitaries) {
  std::mt19937_64 rng(4);
  for (std::size_t d = 2; d <= 8; ++d) {
    const ComplexMatrix u = random_unitary(d, rng);
    const UnitarySpectrum s = unitary_eigendecomposition(u);
    Eigen::ComplexEigenSolver<Eigen::MatrixXcd> oracle(to_eigen(u));
    for (std::size_t k = 0; k < d; ++k) {
      double best = 1.0;
      for (Eigen::Index j = 0; j < static_cast<Eigen::Index>(d); ++j) {
        best = std::min(best, std::abs(oracle.eigenvalues()(j) - s.eigenvalues[k]));
      }
      EXPECT_LT(best, 1e-9);
      if (k > 0) EXPECT_LT(phase(s.eigenvalues[k - 1]), phase(s.eigenvalues[k]));
    }
  }
}

TEST(UnitaryEigendecomposition, Errors) {
  try {
    unitary_eigendecomposition(ComplexMatrix::identity(3));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kDegenerateSpectrum);
  }
  ComplexMatrix a = ComplexMatrix::identity(2);
  a(0, 0) = 2.0;
  try {
    unitary_eigendecomposition(a);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kNotUnitary);
  }
}

TEST(PartialOperations, MaximallyEntangledState) {
  for (std::size_t d = 2; d <= 5; ++d) {
    ComplexVector phi(d * d);
    for (std::size_t j = 0; j < d; ++j) phi[j * d + j] = 1.0 / std::sqrt(double(d));
    const ComplexMatrix rho = ComplexMatrix::outer(phi, phi);
    EXPECT_LT(max_abs_diff(partial_trace_b(rho, d),
                           ComplexMatrix::identity(d) * Complex(1.0 / double(d))),
              1e-14);
    // The partial transpose of |Phi><Phi| is SWAP/d.
    ComplexMatrix swap(d * d, d * d);
    for (std::size_t i = 0; i < d; ++i)
      for (std::size_t j = 0; j < d; ++j) swap(i * d + j, j * d + i) = 1.0 / double(d);
    EXPECT_LT(max_abs_diff(partial_transpose_b(rho, d), swap), 1e-14);
  }
}

TEST(PartialOperations, ProductOperatorsAndInvolution) {
  std::mt19937_64 rng(5);
  const auto a = random_hermitian(3, rng);
  const auto b = random_hermitian(3, rng);
  const ComplexMatrix ab = kron(a, b);
  EXPECT_LT(max_abs_diff(partial_trace_b(ab, 3), a * b.trace()), 1e-12);
  EXPECT_LT(max_abs_diff(partial_transpose_b(ab, 3), kron(a, b.transpose())), 1e-14);
  const auto c = random_hermitian(9, rng);
  EXPECT_EQ(partial_transpose_b(partial_transpose_b(c, 3), 3), c);
}

}  // namespace
}  // namespace entverify

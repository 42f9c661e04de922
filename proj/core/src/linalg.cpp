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

#include <algorithm>
#include <array>
#include <cmath>
#include <numbers>
#include <limits>
#include <numeric>
#include <string>

#include "entverify/error.hpp"

namespace entverify {
namespace {

void require_same_shape(const ComplexMatrix& a, const ComplexMatrix& b, const char* what) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) {
    throw Error(ErrorCode::kDimensionMismatch,
                std::string(what) + ": shapes " + std::to_string(a.rows()) + "x" +
                    std::to_string(a.cols()) + " and " + std::to_string(b.rows()) + "x" +
                    std::to_string(b.cols()) + " differ");
  }
}

void require_bipartite(const ComplexMatrix& a, std::size_t d, const char* what) {
  if (d == 0 || !a.is_square() || a.rows() != d * d) {
    throw Error(ErrorCode::kDimensionMismatch,
                std::string(what) + ": expected a " + std::to_string(d * d) + "x" +
                    std::to_string(d * d) + " operator");
  }
}

}  // namespace

ComplexMatrix::ComplexMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), entries_(rows * cols) {}

ComplexMatrix::ComplexMatrix(std::size_t rows, std::size_t cols, std::vector<Complex> entries)
    : rows_(rows), cols_(cols), entries_(std::move(entries)) {
  if (entries_.size() != rows * cols) {
    throw Error(ErrorCode::kDimensionMismatch, "ComplexMatrix: entry count does not match shape");
  }
}

ComplexMatrix ComplexMatrix::identity(std::size_t n) {
  ComplexMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1.0;
  return m;
}

ComplexMatrix ComplexMatrix::diagonal(std::span<const Complex> diag) {
  ComplexMatrix m(diag.size(), diag.size());
  for (std::size_t i = 0; i < diag.size(); ++i) m(i, i) = diag[i];
  return m;
}

ComplexMatrix ComplexMatrix::outer(std::span<const Complex> a, std::span<const Complex> b) {
  ComplexMatrix m(a.size(), b.size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    for (std::size_t j = 0; j < b.size(); ++j) m(i, j) = a[i] * std::conj(b[j]);
  }
  return m;
}

ComplexMatrix ComplexMatrix::from_columns(std::span<const ComplexVector> columns) {
  if (columns.empty()) return {};
  const std::size_t n = columns.front().size();
  ComplexMatrix m(n, columns.size());
  for (std::size_t j = 0; j < columns.size(); ++j) {
    if (columns[j].size() != n) {
      throw Error(ErrorCode::kDimensionMismatch, "from_columns: ragged columns");
    }
    for (std::size_t i = 0; i < n; ++i) m(i, j) = columns[j][i];
  }
  return m;
}

ComplexVector ComplexMatrix::column(std::size_t j) const {
  ComplexVector v(rows_);
  for (std::size_t i = 0; i < rows_; ++i) v[i] = (*this)(i, j);
  return v;
}

ComplexMatrix ComplexMatrix::adjoint() const {
  ComplexMatrix m(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t j = 0; j < cols_; ++j) m(j, i) = std::conj((*this)(i, j));
  }
  return m;
}

ComplexMatrix ComplexMatrix::conj() const {
  ComplexMatrix m = *this;
  for (auto& z : m.entries_) z = std::conj(z);
  return m;
}

ComplexMatrix ComplexMatrix::transpose() const {
  ComplexMatrix m(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t j = 0; j < cols_; ++j) m(j, i) = (*this)(i, j);
  }
  return m;
}

Complex ComplexMatrix::trace() const {
  Complex t = 0.0;
  for (std::size_t i = 0; i < std::min(rows_, cols_); ++i) t += (*this)(i, i);
  return t;
}

double ComplexMatrix::frobenius_norm() const {
  double s = 0.0;
  for (const auto& z : entries_) s += std::norm(z);
  return std::sqrt(s);
}

ComplexMatrix& ComplexMatrix::operator+=(const ComplexMatrix& other) {
  require_same_shape(*this, other, "operator+");
  for (std::size_t k = 0; k < entries_.size(); ++k) entries_[k] += other.entries_[k];
  return *this;
}

ComplexMatrix& ComplexMatrix::operator-=(const ComplexMatrix& other) {
  require_same_shape(*this, other, "operator-");
  for (std::size_t k = 0; k < entries_.size(); ++k) entries_[k] -= other.entries_[k];
  return *this;
}

ComplexMatrix& ComplexMatrix::operator*=(Complex scale) {
  for (auto& z : entries_) z *= scale;
  return *this;
}

ComplexMatrix operator*(const ComplexMatrix& a, const ComplexMatrix& b) {
  if (a.cols() != b.rows()) {
    throw Error(ErrorCode::kDimensionMismatch, "matrix product: inner dimensions differ");
  }
  ComplexMatrix c(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t k = 0; k < a.cols(); ++k) {
      const Complex aik = a(i, k);
      if (aik == Complex{}) continue;
      for (std::size_t j = 0; j < b.cols(); ++j) c(i, j) += aik * b(k, j);
    }
  }
  return c;
}

ComplexVector operator*(const ComplexMatrix& a, std::span<const Complex> v) {
  if (a.cols() != v.size()) {
    throw Error(ErrorCode::kDimensionMismatch, "matrix-vector product: dimensions differ");
  }
  ComplexVector out(a.rows());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    Complex s = 0.0;
    for (std::size_t j = 0; j < a.cols(); ++j) s += a(i, j) * v[j];
    out[i] = s;
  }
  return out;
}

double max_abs_diff(const ComplexMatrix& a, const ComplexMatrix& b) {
  require_same_shape(a, b, "max_abs_diff");
  double m = 0.0;
  for (std::size_t k = 0; k < a.entries().size(); ++k) {
    m = std::max(m, std::abs(a.entries()[k] - b.entries()[k]));
  }
  return m;
}

Complex trace_of_product(const ComplexMatrix& a, const ComplexMatrix& b) {
  if (a.cols() != b.rows() || a.rows() != b.cols()) {
    throw Error(ErrorCode::kDimensionMismatch, "trace_of_product: incompatible shapes");
  }
  Complex t = 0.0;
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) t += a(i, j) * b(j, i);
  }
  return t;
}

ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b) {
  ComplexMatrix out(a.rows() * b.rows(), a.cols() * b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) {
      const Complex aij = a(i, j);
      if (aij == Complex{}) continue;
      for (std::size_t k = 0; k < b.rows(); ++k) {
        for (std::size_t l = 0; l < b.cols(); ++l) {
          out(i * b.rows() + k, j * b.cols() + l) = aij * b(k, l);
        }
      }
    }
  }
  return out;
}

ComplexVector kron(std::span<const Complex> a, std::span<const Complex> b) {
  ComplexVector out(a.size() * b.size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    for (std::size_t k = 0; k < b.size(); ++k) out[i * b.size() + k] = a[i] * b[k];
  }
  return out;
}

bool is_hermitian(const ComplexMatrix& a, double tol) {
  if (!a.is_square()) return false;
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = i; j < a.cols(); ++j) {
      if (std::abs(a(i, j) - std::conj(a(j, i))) > tol) return false;
    }
  }
  return true;
}

bool is_projector(const ComplexMatrix& p, double tol) {
  return is_hermitian(p, tol) && max_abs_diff(p * p, p) <= tol;
}

bool is_unitary(const ComplexMatrix& u, double tol) {
  if (!u.is_square()) return false;
  return max_abs_diff(u.adjoint() * u, ComplexMatrix::identity(u.rows())) <= tol;
}

Complex inner(std::span<const Complex> a, std::span<const Complex> b) {
  if (a.size() != b.size()) {
    throw Error(ErrorCode::kDimensionMismatch, "inner: lengths differ");
  }
  Complex s = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) s += std::conj(a[i]) * b[i];
  return s;
}

double norm(std::span<const Complex> v) {
  double s = 0.0;
  for (const auto& z : v) s += std::norm(z);
  return std::sqrt(s);
}

double max_abs_diff(std::span<const Complex> a, std::span<const Complex> b) {
  if (a.size() != b.size()) {
    throw Error(ErrorCode::kDimensionMismatch, "max_abs_diff: lengths differ");
  }
  double m = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) m = std::max(m, std::abs(a[i] - b[i]));
  return m;
}

Spectrum hermitian_eig(const ComplexMatrix& input, double tol) {
  if (!input.is_square()) {
    throw Error(ErrorCode::kDimensionMismatch, "hermitian_eig: matrix is not square");
  }
  if (!is_hermitian(input, tol)) {
    throw Error(ErrorCode::kNotHermitian, "hermitian_eig: input is not Hermitian");
  }
  const std::size_t n = input.rows();
  ComplexMatrix a = (input + input.adjoint()) * Complex{0.5};
  ComplexMatrix v = ComplexMatrix::identity(n);

  const double scale = a.frobenius_norm();
  // Sweep to rounding level; stop early once the off-diagonal mass is below
  // `converged` and no longer shrinks.
  const double threshold = 1e-16 * scale;
  const double converged = 1e-13 * scale;
  constexpr int kMaxSweeps = 100;

  auto off_diagonal = [&] {
    double s = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        if (i != j) s += std::norm(a(i, j));
      }
    }
    return std::sqrt(s);
  };

  int sweep = 0;
  double previous = std::numeric_limits<double>::infinity();
  for (double off = off_diagonal(); scale > 0.0 && off > threshold; off = off_diagonal()) {
    if (off <= converged && off >= 0.5 * previous) break;
    previous = off;
    if (++sweep > kMaxSweeps) {
      throw Error(ErrorCode::kNoConvergence, "hermitian_eig: Jacobi sweeps did not converge");
    }
    for (std::size_t p = 0; p + 1 < n; ++p) {
      for (std::size_t q = p + 1; q < n; ++q) {
        const Complex apq = a(p, q);
        const double mag = std::abs(apq);
        if (mag == 0.0) continue;
        const Complex phase = apq / mag;
        const double app = a(p, p).real();
        const double aqq = a(q, q).real();
        // The phase rotation diag(1, conj(phase)) makes the pivot real; the
        // remaining real rotation annihilates it.
        const double tau = (aqq - app) / (2.0 * mag);
        const double t = (tau >= 0.0 ? 1.0 : -1.0) / (std::abs(tau) + std::sqrt(1.0 + tau * tau));
        const double c = 1.0 / std::sqrt(1.0 + t * t);
        const double s = t * c;
        const Complex gpp = c;
        const Complex gpq = s;
        const Complex gqp = -s * std::conj(phase);
        const Complex gqq = c * std::conj(phase);

        for (std::size_t k = 0; k < n; ++k) {
          const Complex akp = a(k, p);
          const Complex akq = a(k, q);
          a(k, p) = akp * gpp + akq * gqp;
          a(k, q) = akp * gpq + akq * gqq;
        }
        for (std::size_t k = 0; k < n; ++k) {
          const Complex apk = a(p, k);
          const Complex aqk = a(q, k);
          a(p, k) = std::conj(gpp) * apk + std::conj(gqp) * aqk;
          a(q, k) = std::conj(gpq) * apk + std::conj(gqq) * aqk;
        }
        a(p, q) = 0.0;
        a(q, p) = 0.0;
        a(p, p) = a(p, p).real();
        a(q, q) = a(q, q).real();

        for (std::size_t k = 0; k < n; ++k) {
          const Complex vkp = v(k, p);
          const Complex vkq = v(k, q);
          v(k, p) = vkp * gpp + vkq * gqp;
          v(k, q) = vkp * gpq + vkq * gqq;
        }
      }
    }
  }

  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::stable_sort(order.begin(), order.end(), [&](std::size_t i, std::size_t j) {
    return a(i, i).real() > a(j, j).real();
  });

  Spectrum out;
  out.eigenvalues.resize(n);
  out.eigenvectors = ComplexMatrix(n, n);
  for (std::size_t k = 0; k < n; ++k) {
    out.eigenvalues[k] = a(order[k], order[k]).real();
    for (std::size_t i = 0; i < n; ++i) out.eigenvectors(i, k) = v(i, order[k]);
  }
  return out;
}

UnitarySpectrum unitary_eigendecomposition(const ComplexMatrix& u, double tol) {
  if (!is_unitary(u, tol)) {
    throw Error(ErrorCode::kNotUnitary, "unitary_eigendecomposition: input is not unitary");
  }
  const std::size_t n = u.rows();
  // The first phase is the canonical one. It sits within 1e-8 of pi/4, so for
  // spectra made of 4k-th roots of unity two eigenvalues nearly collide in the
  // Hermitian combination and its eigenvectors lose accuracy; the later
  // phases are fallbacks for that case.
  constexpr std::array<double, 3> kPhases = {0.7853981, 0.3141592653, 1.2345678901};
  constexpr double kMinHermitianGap = 1e-4;
  constexpr double kMinSeparation = 1e-6;
  constexpr double kEigenResidual = 1e-8;

  const ComplexMatrix u_dag = u.adjoint();
  for (const double phi : kPhases) {
    const Complex alpha = std::polar(1.0, phi);
    const ComplexMatrix h = alpha * u + std::conj(alpha) * u_dag;
    const Spectrum spec = hermitian_eig(h, 1e-8);

    bool separated = true;
    for (std::size_t k = 0; k + 1 < n; ++k) {
      if (spec.eigenvalues[k] - spec.eigenvalues[k + 1] < kMinHermitianGap) separated = false;
    }
    if (!separated) continue;

    UnitarySpectrum out;
    bool verified = true;
    for (std::size_t k = 0; k < n && verified; ++k) {
      ComplexVector vec = spec.eigenvectors.column(k);
      const ComplexVector uv = u * vec;
      const Complex mu = inner(vec, uv);
      for (std::size_t i = 0; i < n; ++i) {
        if (std::abs(uv[i] - mu * vec[i]) > kEigenResidual) verified = false;
      }
      out.eigenvalues.push_back(mu / std::abs(mu));
      out.eigenvectors.push_back(std::move(vec));
    }
    if (!verified) continue;

    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = i + 1; j < n; ++j) {
        if (std::abs(out.eigenvalues[i] - out.eigenvalues[j]) <= kMinSeparation) {
          throw Error(ErrorCode::kDegenerateSpectrum,
                      "unitary_eigendecomposition: eigenvalues are not separated");
        }
      }
    }

    auto phase_of = [](Complex z) {
      double ang = std::arg(z);
      if (ang < 0.0) ang += 2.0 * std::numbers::pi;
      if (ang > 2.0 * std::numbers::pi - 1e-9) ang = 0.0;
      return ang;
    };
    std::vector<std::size_t> order(n);
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::sort(order.begin(), order.end(), [&](std::size_t i, std::size_t j) {
      return phase_of(out.eigenvalues[i]) < phase_of(out.eigenvalues[j]);
    });
    UnitarySpectrum sorted;
    for (const std::size_t k : order) {
      sorted.eigenvalues.push_back(out.eigenvalues[k]);
      sorted.eigenvectors.push_back(std::move(out.eigenvectors[k]));
    }
    return sorted;
  }
  throw Error(ErrorCode::kDegenerateSpectrum,
              "unitary_eigendecomposition: no Hermitian combination separates the spectrum");
}

ComplexMatrix partial_trace_b(const ComplexMatrix& a, std::size_t d) {
  require_bipartite(a, d, "partial_trace_b");
  ComplexMatrix out(d, d);
  for (std::size_t i = 0; i < d; ++i) {
    for (std::size_t j = 0; j < d; ++j) {
      Complex s = 0.0;
      for (std::size_t k = 0; k < d; ++k) s += a(i * d + k, j * d + k);
      out(i, j) = s;
    }
  }
  return out;
}

ComplexMatrix partial_transpose_b(const ComplexMatrix& a, std::size_t d) {
  require_bipartite(a, d, "partial_transpose_b");
  ComplexMatrix out(d * d, d * d);
  for (std::size_t i = 0; i < d; ++i) {
    for (std::size_t k = 0; k < d; ++k) {
      for (std::size_t j = 0; j < d; ++j) {
        for (std::size_t l = 0; l < d; ++l) {
          out(i * d + k, j * d + l) = a(i * d + l, j * d + k);
        }
      }
    }
  }
  return out;
}

}  // namespace entverify

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

#include "entverify/bases.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

#include "entverify/error.hpp"

namespace entverify {
namespace {

constexpr double kGramTolerance = 1e-10;
constexpr double kPhaseThreshold = 1e-8;
constexpr double kOrderTolerance = 1e-9;
constexpr double kMubCertificate = 1e-8;

ComplexMatrix matrix_power(const ComplexMatrix& m, std::size_t k) {
  ComplexMatrix out = ComplexMatrix::identity(m.rows());
  for (std::size_t i = 0; i < k; ++i) out = out * m;
  return out;
}

// Lexicographic comparison that treats components within kOrderTolerance as equal.
bool canonical_less(const ComplexVector& a, const ComplexVector& b) {
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (std::abs(a[i].real() - b[i].real()) > kOrderTolerance) return a[i].real() > b[i].real();
    if (std::abs(a[i].imag() - b[i].imag()) > kOrderTolerance) return a[i].imag() > b[i].imag();
  }
  return false;
}

}  // namespace

Basis::Basis(std::vector<ComplexVector> kets, std::string label)
    : kets_(std::move(kets)), label_(std::move(label)) {
  const std::size_t d = kets_.size();
  if (d == 0) throw Error(ErrorCode::kInvalidBasis, "Basis: no kets");
  for (const auto& k : kets_) {
    if (k.size() != d) {
      throw Error(ErrorCode::kInvalidBasis, "Basis: expected " + std::to_string(d) +
                                                " kets of length " + std::to_string(d));
    }
  }
  for (std::size_t i = 0; i < d; ++i) {
    for (std::size_t j = i; j < d; ++j) {
      const Complex g = inner(kets_[i], kets_[j]);
      const double expected = i == j ? 1.0 : 0.0;
      if (std::abs(g - expected) > kGramTolerance) {
        throw Error(ErrorCode::kInvalidBasis, "Basis: kets are not orthonormal");
      }
    }
  }
}

ComplexMatrix Basis::as_matrix() const { return ComplexMatrix::from_columns(kets_); }

WeylPair weyl_pair(std::size_t d) {
  if (d < 2) throw Error(ErrorCode::kInvalidDimension, "weyl_pair: d must be at least 2");
  WeylPair w;
  w.d = d;
  w.omega = std::polar(1.0, 2.0 * std::numbers::pi / static_cast<double>(d));
  w.z = ComplexMatrix(d, d);
  w.x = ComplexMatrix(d, d);
  for (std::size_t j = 0; j < d; ++j) {
    w.z(j, j) = std::polar(1.0, 2.0 * std::numbers::pi * static_cast<double>(j) /
                                    static_cast<double>(d));
    w.x((j + 1) % d, j) = 1.0;
  }
  return w;
}

Basis computational_basis(std::size_t d) {
  if (d < 1) throw Error(ErrorCode::kInvalidDimension, "computational_basis: d must be positive");
  std::vector<ComplexVector> kets(d, ComplexVector(d));
  for (std::size_t j = 0; j < d; ++j) kets[j][j] = 1.0;
  return Basis(std::move(kets), "computational");
}

Basis fourier_basis(std::size_t d) {
  if (d < 1) throw Error(ErrorCode::kInvalidDimension, "fourier_basis: d must be positive");
  const double amp = 1.0 / std::sqrt(static_cast<double>(d));
  std::vector<ComplexVector> kets(d, ComplexVector(d));
  for (std::size_t k = 0; k < d; ++k) {
    for (std::size_t j = 0; j < d; ++j) {
      const std::size_t e = (j * k) % d;
      kets[k][j] = std::polar(amp, 2.0 * std::numbers::pi * static_cast<double>(e) /
                                       static_cast<double>(d));
    }
  }
  return Basis(std::move(kets), "fourier");
}

void normalize_phase(ComplexVector& ket) {
  for (const auto& a : ket) {
    const double mag = std::abs(a);
    if (mag > kPhaseThreshold) {
      const Complex rot = std::conj(a) / mag;
      for (auto& z : ket) z *= rot;
      return;
    }
  }
}

Basis unitary_eigenbasis(const ComplexMatrix& u, double tol, std::string label) {
  UnitarySpectrum spec = unitary_eigendecomposition(u, tol);
  for (auto& v : spec.eigenvectors) normalize_phase(v);
  return Basis(std::move(spec.eigenvectors), std::move(label));
}

Basis conjugate_basis(const Basis& b) {
  std::vector<ComplexVector> kets = b.kets();
  for (auto& k : kets) {
    for (auto& z : k) z = std::conj(z);
  }
  return Basis(std::move(kets), b.label().empty() ? std::string{} : b.label() + "*");
}

Basis canonicalize(const Basis& b) {
  std::vector<ComplexVector> kets = b.kets();
  for (auto& k : kets) normalize_phase(k);
  std::sort(kets.begin(), kets.end(), canonical_less);
  return Basis(std::move(kets), b.label());
}

bool is_mutually_unbiased(const Basis& b1, const Basis& b2, double tol) {
  if (b1.d() != b2.d()) {
    throw Error(ErrorCode::kDimensionMismatch, "is_mutually_unbiased: dimensions differ");
  }
  const double target = 1.0 / static_cast<double>(b1.d());
  for (const auto& psi : b1.kets()) {
    for (const auto& phi : b2.kets()) {
      if (std::abs(std::norm(inner(psi, phi)) - target) > tol) return false;
    }
  }
  return true;
}

bool is_prime(std::size_t n) {
  if (n < 2) return false;
  for (std::size_t k = 2; k * k <= n; ++k) {
    if (n % k == 0) return false;
  }
  return true;
}

std::vector<Basis> mub_set(std::size_t d, std::size_t g) {
  if (d < 2) throw Error(ErrorCode::kInvalidDimension, "mub_set: d must be at least 2");
  if (g < 1) throw Error(ErrorCode::kInvalidDimension, "mub_set: g must be at least 1");
  if (g > 3 && !is_prime(d)) {
    throw Error(ErrorCode::kUnsupportedDimension,
                "mub_set: more than 3 bases requires prime d (d=" + std::to_string(d) + ")");
  }
  if (g > d + 1) {
    throw Error(ErrorCode::kUnsupportedDimension,
                "mub_set: at most d+1 mutually unbiased bases exist");
  }

  const WeylPair w = weyl_pair(d);
  std::vector<Basis> out;
  out.reserve(g);
  out.push_back(unitary_eigenbasis(w.z, kDefaultTolerance, "Z"));
  for (std::size_t m = 0; out.size() < g; ++m) {
    const ComplexMatrix u = w.x * matrix_power(w.z, m);
    std::string label = m == 0 ? "X" : (m == 1 ? "XZ" : "XZ^" + std::to_string(m));
    out.push_back(unitary_eigenbasis(u, kDefaultTolerance, std::move(label)));
  }

  for (std::size_t i = 0; i < out.size(); ++i) {
    for (std::size_t j = i + 1; j < out.size(); ++j) {
      if (!is_mutually_unbiased(out[i], out[j], kMubCertificate)) {
        throw Error(ErrorCode::kUnbiasednessViolation,
                    "mub_set: bases " + out[i].label() + " and " + out[j].label() +
                        " failed the unbiasedness certificate");
      }
    }
  }
  return out;
}

}  // namespace entverify

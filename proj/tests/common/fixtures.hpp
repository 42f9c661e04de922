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

// Random test fixtures shared by the unit and acceptance suites.

#include <cmath>
#include <cstddef>
#include <random>
#include <vector>

#include "entverify/bases.hpp"
#include "entverify/linalg.hpp"

namespace entverify::testing {

inline ComplexVector random_vector(std::size_t n, std::mt19937_64& rng) {
  std::normal_distribution<double> g;
  ComplexVector v(n);
  for (auto& z : v) z = {g(rng), g(rng)};
  return v;
}

/// Haar-ish random unitary by Gram-Schmidt on Gaussian columns.
inline ComplexMatrix random_unitary(std::size_t n, std::mt19937_64& rng) {
  std::vector<ComplexVector> cols;
  while (cols.size() < n) {
    ComplexVector v = random_vector(n, rng);
    for (const auto& c : cols) {
      const Complex overlap = inner(c, v);
      for (std::size_t i = 0; i < n; ++i) v[i] -= overlap * c[i];
    }
    const double len = norm(v);
    if (len < 1e-6) continue;
    for (auto& z : v) z /= len;
    cols.push_back(std::move(v));
  }
  return ComplexMatrix::from_columns(cols);
}

inline Basis random_basis(std::size_t d, std::mt19937_64& rng) {
  const ComplexMatrix u = random_unitary(d, rng);
  std::vector<ComplexVector> kets;
  for (std::size_t j = 0; j < d; ++j) kets.push_back(u.column(j));
  return Basis(std::move(kets), "random");
}

inline ComplexMatrix random_hermitian(std::size_t n, std::mt19937_64& rng) {
  ComplexMatrix a(n, n);
  std::normal_distribution<double> g;
  for (std::size_t i = 0; i < n; ++i) {
    a(i, i) = g(rng);
    for (std::size_t j = i + 1; j < n; ++j) {
      a(i, j) = {g(rng), g(rng)};
      a(j, i) = std::conj(a(i, j));
    }
  }
  return a;
}

/// Random density matrix of rank `rank` on C^n.
inline ComplexMatrix random_density(std::size_t n, std::size_t rank, std::mt19937_64& rng) {
  ComplexMatrix rho(n, n);
  for (std::size_t r = 0; r < rank; ++r) {
    const ComplexVector v = random_vector(n, rng);
    rho += ComplexMatrix::outer(v, v);
  }
  rho *= Complex(1.0 / rho.trace().real());
  return rho;
}

/// Positive coefficients with unit 2-norm (unsorted).
inline std::vector<double> random_schmidt(std::size_t d, std::mt19937_64& rng) {
  std::uniform_real_distribution<double> u(0.0, 1.0);
  std::vector<double> s(d);
  double sq = 0.0;
  for (auto& x : s) {
    x = u(rng);
    sq += x * x;
  }
  for (auto& x : s) x /= std::sqrt(sq);
  return s;
}

}  // namespace entverify::testing

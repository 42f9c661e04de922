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

// Orthonormal bases of C^d: construction, conjugation and unbiasedness.

#include <string>
#include <vector>

#include "entverify/linalg.hpp"

namespace entverify {

/// An ordered orthonormal basis of C^d. Construction validates the Gram matrix.
class Basis {
 public:
  Basis(std::vector<ComplexVector> kets, std::string label = {});

  std::size_t d() const noexcept { return kets_.size(); }
  const std::vector<ComplexVector>& kets() const noexcept { return kets_; }
  const ComplexVector& ket(std::size_t i) const { return kets_.at(i); }
  const std::string& label() const noexcept { return label_; }

  /// Kets as matrix columns.
  ComplexMatrix as_matrix() const;

 private:
  std::vector<ComplexVector> kets_;
  std::string label_;
};

/// Generalized Pauli (clock and shift) operators: Z|j> = w^j |j>, X|j> = |j+1 mod d>.
struct WeylPair {
  std::size_t d = 0;
  ComplexMatrix z;
  ComplexMatrix x;
  Complex omega;
};

WeylPair weyl_pair(std::size_t d);

Basis computational_basis(std::size_t d);
/// f_k = d^{-1/2} sum_j w^{jk} |j>.
Basis fourier_basis(std::size_t d);

/// Multiplies the ket by a global phase so its first amplitude with modulus
/// above 1e-8 is real and positive.
void normalize_phase(ComplexVector& ket);

/// Eigenbasis of a unitary with nondegenerate spectrum, kets ordered by
/// eigenvalue phase and phase-normalized.
Basis unitary_eigenbasis(const ComplexMatrix& u, double tol = kDefaultTolerance,
                         std::string label = {});

/// Entrywise complex conjugate of every ket in the computational basis.
Basis conjugate_basis(const Basis& b);

/// Phase-normalized kets in a deterministic lexicographic order. Two bases that
/// differ only in ket order and ket phases have the same canonical form.
Basis canonicalize(const Basis& b);

bool is_mutually_unbiased(const Basis& b1, const Basis& b2, double tol = kDefaultTolerance);

bool is_prime(std::size_t n);

/// g pairwise mutually unbiased bases. For prime d: eigenbases of Z, X, XZ, ...,
/// XZ^{d-1} (first g). Any d >= 2 supports g <= 3 via Z, X, XZ. The result is
/// certified pairwise unbiased at 1e-8.
std::vector<Basis> mub_set(std::size_t d, std::size_t g);

}  // namespace entverify

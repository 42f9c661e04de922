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

// Conjugate-basis tests and verification strategies for the maximally
// entangled state |Phi> = d^{-1/2} sum_j |jj>.

#include <optional>
#include <utility>
#include <vector>

#include "entverify/bases.hpp"
#include "entverify/linalg.hpp"

namespace entverify {

/// Absolute tolerance on eigenvalue comparisons used for classification.
inline constexpr double kClassificationTolerance = 1e-9;

ComplexVector max_entangled_state(std::size_t d);
ComplexMatrix max_entangled_projector(std::size_t d);

/// A two-outcome test on C^d (x) C^d; `projector` is the pass outcome.
struct TestProjector {
  std::size_t d = 0;
  ComplexMatrix projector;
  std::size_t rank = 0;
  std::optional<Basis> source_basis;

  bool is_trivial() const noexcept { return !source_basis && rank == d * d; }
};

/// Validates `p` (projector to 1e-9 that fixes |Phi>) and computes its rank.
TestProjector make_test_projector(std::size_t d, ComplexMatrix p);

/// P(B) = sum_{psi in B} |psi><psi| (x) |psi*><psi*|.
TestProjector cb_projector(const Basis& b);

/// The always-pass test with P = identity.
TestProjector trivial_test(std::size_t d);

/// Bases with probabilities summing to one.
class WeightedBasisSet {
 public:
  explicit WeightedBasisSet(std::vector<std::pair<Basis, double>> entries);

  static WeightedBasisSet uniform(std::vector<Basis> bases);

  std::size_t d() const noexcept { return entries_.front().first.d(); }
  const std::vector<std::pair<Basis, double>>& entries() const noexcept { return entries_; }

 private:
  std::vector<std::pair<Basis, double>> entries_;
};

struct StrategyFlags {
  bool parsimonious = false;
  bool optimal = false;
  bool perfect = false;
  bool homogeneous = false;
  bool singular = false;
};

struct WeightedTest {
  TestProjector test;
  double probability = 0.0;
};

/// Verification operator Omega = sum_l p_l P_l with its spectrum and
/// classification computed once at construction.
class Strategy {
 public:
  /// Throws DimensionMismatch, WeightError, or InvalidProjector.
  Strategy(std::size_t d, std::vector<WeightedTest> tests);

  std::size_t d() const noexcept { return d_; }
  const std::vector<WeightedTest>& tests() const noexcept { return tests_; }
  const ComplexMatrix& omega() const noexcept { return omega_; }
  const Spectrum& spectrum() const noexcept { return spectrum_; }
  /// Second largest eigenvalue of Omega.
  double beta() const noexcept { return beta_; }
  /// Spectral gap 1 - beta.
  double nu() const noexcept { return 1.0 - beta_; }
  const StrategyFlags& flags() const noexcept { return flags_; }

  /// Unit eigenvector of Omega with eigenvalue beta, orthogonal to |Phi>.
  ComplexVector beta_eigenvector() const;

 private:
  std::size_t d_;
  std::vector<WeightedTest> tests_;
  ComplexMatrix omega_;
  Spectrum spectrum_;
  double beta_ = 0.0;
  StrategyFlags flags_;
};

Strategy build_strategy(const WeightedBasisSet& wbs);

/// True iff sum_l p_l P(B_l) equals (1 + d|Phi><Phi|)/(d+1) entrywise within tol.
bool is_2design(const WeightedBasisSet& wbs, double tol = kClassificationTolerance);

/// Mixes in the trivial test with probability p = ((d+1)*lambda - 1)/d so the
/// result is homogeneous with beta = lambda. Requires an optimal strategy and
/// 1/(d+1) <= lambda < 1.
Strategy homogenize(const Strategy& optimal, double lambda);

/// Probability of mixing in the trivial test for a target lambda.
double trivial_test_probability(std::size_t d, double lambda);

struct PassBound {
  double probability = 0.0;
  /// (1 - eps)|Phi><Phi| + eps|v><v| with v a beta-eigenvector of Omega.
  ComplexMatrix witness;
};

/// max over states with fidelity <= 1 - eps of tr(Omega sigma) = 1 - nu*eps.
PassBound max_pass_probability(const Strategy& s, double epsilon);

/// F = ((d+1)*rate - 1)/d for an optimal strategy.
double fidelity_from_pass_rate(const Strategy& s, double rate);

/// Recovers B from P = P(B). The support of P is mapped to d x d matrices by
/// |a>(x)|b> -> |a><b*|, a seeded generic Hermitian combination is
/// diagonalized, and P(recovered) is checked against P. The result is in
/// canonical form.
Basis recover_basis(const TestProjector& p);
/// Raw-operator form; throws PreconditionViolation unless p is a rank-d
/// projector fixing |Phi>.
Basis recover_basis(std::size_t d, const ComplexMatrix& p);

/// tr[(P1 - |Phi><Phi|)(P2 - |Phi><Phi|)] <= 1e-9.
bool orthogonality_check(const TestProjector& p1, const TestProjector& p2);

}  // namespace entverify

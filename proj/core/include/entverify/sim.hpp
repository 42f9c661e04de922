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

// Monte Carlo simulation of the verification protocol on i.i.d. copies of a
// noisy state: each round draws a test with its probability and passes with
// probability tr(P rho).

#include <cstddef>
#include <cstdint>
#include <vector>

#include "entverify/linalg.hpp"
#include "entverify/strategy.hpp"

namespace entverify {

enum class NoiseKind { kDepolarized, kWorstCase, kCustomDensity };

struct NoisyStateModel {
  NoiseKind kind = NoiseKind::kCustomDensity;
  std::size_t d = 0;
  /// Infidelity 1 - <Phi|rho|Phi>.
  double epsilon = 0.0;
  ComplexMatrix density;
};

/// (1 - q)|Phi><Phi| + q I/d^2 with q = eps/(1 - 1/d^2). Requires
/// 0 <= eps <= 1 - 1/d^2 (EpsilonOutOfRange).
NoisyStateModel depolarized_state(std::size_t d, double epsilon);

/// (1 - eps)|Phi><Phi| + eps|v><v| with v a beta-eigenvector of Omega, the
/// state maximizing the pass probability at infidelity eps.
NoisyStateModel worst_case_state(const Strategy& s, double epsilon);

/// Wraps an arbitrary density matrix on C^d (x) C^d. Requires a Hermitian
/// operator with unit trace (1e-10) and no eigenvalue below -1e-10.
NoisyStateModel custom_density(std::size_t d, ComplexMatrix rho);

/// tr(Omega rho).
double analytic_pass_probability(const Strategy& s, const NoisyStateModel& model);

struct TestTally {
  std::uint64_t uses = 0;
  std::uint64_t passes = 0;
  friend bool operator==(const TestTally&, const TestTally&) = default;
};

struct RunResult {
  std::uint64_t seed = 0;
  std::uint64_t trials = 0;
  std::uint64_t passes = 0;
  /// Indexed like Strategy::tests().
  std::vector<TestTally> per_test;

  double pass_rate() const;
  friend bool operator==(const RunResult&, const RunResult&) = default;
};

/// Sums tallies; the merged seed is the smaller of the two. Commutative and
/// associative. Throws DimensionMismatch on differing test counts.
RunResult merge(const RunResult& a, const RunResult& b);

/// Runs n rounds. Rounds are grouped into fixed-size blocks, each drawing
/// from its own stream seeded by derive_seed(seed, block), so the result
/// depends only on (s, model, n, seed) and not on `workers`.
RunResult run_protocol(const Strategy& s, const NoisyStateModel& model, std::uint64_t n,
                       std::uint64_t seed, unsigned workers = 1);

inline constexpr std::uint64_t kRoundsPerBlock = 1 << 16;

struct FidelityEstimate {
  double estimate = 0.0;
  double standard_error = 0.0;
};

/// F = ((d+1) rate - 1)/d with standard error (d+1)/d sqrt(r(1-r)/N).
/// Requires an optimal strategy (NotOptimalStrategy).
FidelityEstimate estimate_fidelity(const Strategy& s, const RunResult& result);

struct AllPassStats {
  std::uint64_t repetitions = 0;
  std::uint64_t all_pass = 0;
  double frequency() const;
  double standard_error() const;
};

/// Repeats an n-round protocol and counts the repetitions in which every
/// round passed.
AllPassStats all_pass_frequency(const Strategy& s, const NoisyStateModel& model, std::uint64_t n,
                                std::uint64_t repetitions, std::uint64_t seed);

}  // namespace entverify

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

#include "entverify/sim.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <string>
#include <thread>

#include "entverify/error.hpp"
#include "entverify/rng.hpp"

namespace entverify {
namespace {

void require_model_dimension(const Strategy& s, const NoisyStateModel& model) {
  if (s.d() != model.d || model.density.rows() != s.d() * s.d()) {
    throw Error(ErrorCode::kDimensionMismatch, "strategy and state dimensions differ");
  }
}

double fidelity(const ComplexMatrix& rho, std::size_t d) {
  const ComplexVector phi = max_entangled_state(d);
  return inner(phi, rho * std::span<const Complex>(phi)).real();
}

// Per-round sampler: cumulative test probabilities and pass probabilities.
class Sampler {
 public:
  Sampler(const Strategy& s, const NoisyStateModel& model) {
    require_model_dimension(s, model);
    double acc = 0.0;
    for (const auto& t : s.tests()) {
      acc += t.probability;
      cumulative_.push_back(acc);
      const double p = trace_of_product(t.test.projector, model.density).real();
      pass_.push_back(std::clamp(p, 0.0, 1.0));
    }
  }

  std::size_t size() const { return pass_.size(); }

  // Returns the test index; sets `passed`.
  std::size_t round(SplitMix64& rng, bool& passed) const {
    const double u = rng.uniform() * cumulative_.back();
    auto it = std::upper_bound(cumulative_.begin(), cumulative_.end(), u);
    const auto l = std::min<std::size_t>(it - cumulative_.begin(), pass_.size() - 1);
    passed = rng.uniform() < pass_[l];
    return l;
  }

 private:
  std::vector<double> cumulative_;
  std::vector<double> pass_;
};

RunResult run_block(const Sampler& sampler, std::uint64_t rounds, std::uint64_t seed) {
  RunResult r;
  r.seed = seed;
  r.trials = rounds;
  r.per_test.assign(sampler.size(), {});
  SplitMix64 rng(seed);
  for (std::uint64_t i = 0; i < rounds; ++i) {
    bool passed = false;
    const std::size_t l = sampler.round(rng, passed);
    ++r.per_test[l].uses;
    if (passed) {
      ++r.per_test[l].passes;
      ++r.passes;
    }
  }
  return r;
}

}  // namespace

NoisyStateModel depolarized_state(std::size_t d, double epsilon) {
  if (d < 2) throw Error(ErrorCode::kInvalidDimension, "local dimension must be at least 2");
  const double dd = static_cast<double>(d);
  const double max_eps = 1.0 - 1.0 / (dd * dd);
  if (!(epsilon >= 0.0 && epsilon <= max_eps * (1.0 + 1e-12))) {
    throw Error(ErrorCode::kEpsilonOutOfRange,
                "depolarized infidelity must lie in [0, 1 - 1/d^2]");
  }
  const double q = std::min(1.0, epsilon / max_eps);
  NoisyStateModel m;
  m.kind = NoiseKind::kDepolarized;
  m.d = d;
  m.epsilon = epsilon;
  m.density = max_entangled_projector(d) * Complex(1.0 - q) +
              ComplexMatrix::identity(d * d) * Complex(q / (dd * dd));
  return m;
}

NoisyStateModel worst_case_state(const Strategy& s, double epsilon) {
  if (!(epsilon >= 0.0 && epsilon <= 1.0)) {
    throw Error(ErrorCode::kEpsilonOutOfRange, "infidelity must lie in [0, 1]");
  }
  NoisyStateModel m;
  m.kind = NoiseKind::kWorstCase;
  m.d = s.d();
  m.epsilon = epsilon;
  m.density = max_pass_probability(s, epsilon).witness;
  return m;
}

NoisyStateModel custom_density(std::size_t d, ComplexMatrix rho) {
  if (d < 2) throw Error(ErrorCode::kInvalidDimension, "local dimension must be at least 2");
  if (rho.rows() != d * d || rho.cols() != d * d) {
    throw Error(ErrorCode::kDimensionMismatch, "density matrix must be d^2 x d^2");
  }
  if (!is_hermitian(rho)) throw Error(ErrorCode::kNotHermitian, "density matrix not Hermitian");
  if (std::abs(rho.trace() - Complex(1.0)) > 1e-10) {
    throw Error(ErrorCode::kPreconditionViolation, "density matrix must have unit trace");
  }
  if (hermitian_eig(rho).eigenvalues.back() < -1e-10) {
    throw Error(ErrorCode::kPreconditionViolation, "density matrix is not positive semidefinite");
  }
  NoisyStateModel m;
  m.kind = NoiseKind::kCustomDensity;
  m.d = d;
  m.epsilon = 1.0 - fidelity(rho, d);
  m.density = std::move(rho);
  return m;
}

double analytic_pass_probability(const Strategy& s, const NoisyStateModel& model) {
  require_model_dimension(s, model);
  return trace_of_product(s.omega(), model.density).real();
}

double RunResult::pass_rate() const {
  return trials == 0 ? 0.0 : static_cast<double>(passes) / static_cast<double>(trials);
}

RunResult merge(const RunResult& a, const RunResult& b) {
  if (a.per_test.size() != b.per_test.size()) {
    throw Error(ErrorCode::kDimensionMismatch, "cannot merge results of different strategies");
  }
  RunResult r;
  r.seed = std::min(a.seed, b.seed);
  r.trials = a.trials + b.trials;
  r.passes = a.passes + b.passes;
  r.per_test.resize(a.per_test.size());
  for (std::size_t l = 0; l < r.per_test.size(); ++l) {
    r.per_test[l].uses = a.per_test[l].uses + b.per_test[l].uses;
    r.per_test[l].passes = a.per_test[l].passes + b.per_test[l].passes;
  }
  return r;
}

RunResult run_protocol(const Strategy& s, const NoisyStateModel& model, std::uint64_t n,
                       std::uint64_t seed, unsigned workers) {
  const Sampler sampler(s, model);
  const std::uint64_t blocks = (n + kRoundsPerBlock - 1) / kRoundsPerBlock;
  auto block_rounds = [&](std::uint64_t b) {
    return std::min(kRoundsPerBlock, n - b * kRoundsPerBlock);
  };

  std::vector<RunResult> partial(blocks);
  workers = std::max(1u, std::min<unsigned>(workers, static_cast<unsigned>(blocks)));
  if (workers == 1) {
    for (std::uint64_t b = 0; b < blocks; ++b) {
      partial[b] = run_block(sampler, block_rounds(b), derive_seed(seed, b));
    }
  } else {
    std::atomic<std::uint64_t> next{0};
    std::vector<std::jthread> pool;
    pool.reserve(workers);
    for (unsigned w = 0; w < workers; ++w) {
      pool.emplace_back([&] {
        for (std::uint64_t b = next++; b < blocks; b = next++) {
          partial[b] = run_block(sampler, block_rounds(b), derive_seed(seed, b));
        }
      });
    }
  }

  RunResult total;
  total.per_test.assign(sampler.size(), {});
  total.seed = seed;
  for (const auto& p : partial) total = merge(total, p);
  total.seed = seed;
  return total;
}

FidelityEstimate estimate_fidelity(const Strategy& s, const RunResult& result) {
  if (!s.flags().optimal) {
    throw Error(ErrorCode::kNotOptimalStrategy, "fidelity estimation requires an optimal strategy");
  }
  if (result.trials == 0) throw Error(ErrorCode::kDomainError, "no trials to estimate from");
  const double dd = static_cast<double>(s.d());
  const double r = result.pass_rate();
  const double n = static_cast<double>(result.trials);
  return {((dd + 1.0) * r - 1.0) / dd, (dd + 1.0) / dd * std::sqrt(r * (1.0 - r) / n)};
}

double AllPassStats::frequency() const {
  return repetitions == 0 ? 0.0
                          : static_cast<double>(all_pass) / static_cast<double>(repetitions);
}

double AllPassStats::standard_error() const {
  if (repetitions == 0) return 0.0;
  const double f = frequency();
  return std::sqrt(f * (1.0 - f) / static_cast<double>(repetitions));
}

AllPassStats all_pass_frequency(const Strategy& s, const NoisyStateModel& model, std::uint64_t n,
                                std::uint64_t repetitions, std::uint64_t seed) {
  const Sampler sampler(s, model);
  AllPassStats stats;
  stats.repetitions = repetitions;
  for (std::uint64_t rep = 0; rep < repetitions; ++rep) {
    SplitMix64 rng(derive_seed(seed, rep));
    bool all = true;
    for (std::uint64_t i = 0; i < n && all; ++i) {
      sampler.round(rng, all);
    }
    if (all) ++stats.all_pass;
  }
  return stats;
}

}  // namespace entverify

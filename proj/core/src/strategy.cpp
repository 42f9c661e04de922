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

#include "entverify/strategy.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <string>

#include "entverify/error.hpp"
#include "entverify/rng.hpp"

namespace entverify {
namespace {

constexpr double kProjectorTolerance = 1e-9;
constexpr double kWeightTolerance = 1e-12;
constexpr double kSingularThreshold = 1e-10;
constexpr double kRecoveryCheck = 1e-8;
constexpr double kRecoveryGap = 1e-8;
constexpr std::uint64_t kRecoverySeed = 0xC0FFEE;

double fixed_point_error(const ComplexMatrix& p, std::size_t d) {
  const ComplexVector phi = max_entangled_state(d);
  return max_abs_diff(p * phi, phi);
}

std::size_t rank_of_projector(const ComplexMatrix& p) {
  const Spectrum spec = hermitian_eig(p, kProjectorTolerance);
  return static_cast<std::size_t>(
      std::count_if(spec.eigenvalues.begin(), spec.eigenvalues.end(),
                    [](double x) { return x > 0.5; }));
}

ComplexMatrix cb_projector_matrix(const Basis& b) {
  const std::size_t d = b.d();
  ComplexMatrix p(d * d, d * d);
  for (const auto& psi : b.kets()) {
    ComplexVector psi_conj(psi.size());
    std::transform(psi.begin(), psi.end(), psi_conj.begin(),
                   [](Complex z) { return std::conj(z); });
    p += ComplexMatrix::outer(kron(psi, psi_conj), kron(psi, psi_conj));
  }
  return p;
}

void check_weights(const std::vector<double>& weights) {
  double total = 0.0;
  for (const double w : weights) {
    if (!(w >= 0.0)) throw Error(ErrorCode::kWeightError, "probabilities must be nonnegative");
    total += w;
  }
  if (std::abs(total - 1.0) > kWeightTolerance) {
    throw Error(ErrorCode::kWeightError,
                "probabilities must sum to 1 (sum=" + std::to_string(total) + ")");
  }
}

// Hermitian combination of the support of a rank-d projector, after mapping
// |a>(x)|b> to |a><b|.
ComplexMatrix generic_support_combination(const Spectrum& spec, std::size_t d,
                                          std::uint64_t seed) {
  SplitMix64 rng(seed);
  ComplexMatrix h(d, d);
  const Complex i_unit{0.0, 1.0};
  for (std::size_t k = 0; k < d; ++k) {
    ComplexMatrix m(d, d);
    for (std::size_t a = 0; a < d; ++a) {
      for (std::size_t b = 0; b < d; ++b) m(a, b) = spec.eigenvectors(a * d + b, k);
    }
    const ComplexMatrix m_dag = m.adjoint();
    const double r_re = rng.uniform(-1.0, 1.0);
    const double r_im = rng.uniform(-1.0, 1.0);
    h += (m + m_dag) * Complex{0.5 * r_re};
    h += (m - m_dag) * (Complex{0.5 * r_im} / i_unit);
  }
  return h;
}

double min_gap(const std::vector<double>& sorted_desc) {
  double gap = std::numeric_limits<double>::infinity();
  for (std::size_t k = 0; k + 1 < sorted_desc.size(); ++k) {
    gap = std::min(gap, sorted_desc[k] - sorted_desc[k + 1]);
  }
  return gap;
}

}  // namespace

ComplexVector max_entangled_state(std::size_t d) {
  if (d < 1) throw Error(ErrorCode::kInvalidDimension, "max_entangled_state: d must be positive");
  ComplexVector phi(d * d);
  const double amp = 1.0 / std::sqrt(static_cast<double>(d));
  for (std::size_t j = 0; j < d; ++j) phi[j * d + j] = amp;
  return phi;
}

ComplexMatrix max_entangled_projector(std::size_t d) {
  const ComplexVector phi = max_entangled_state(d);
  return ComplexMatrix::outer(phi, phi);
}

TestProjector make_test_projector(std::size_t d, ComplexMatrix p) {
  if (d < 1 || !p.is_square() || p.rows() != d * d) {
    throw Error(ErrorCode::kDimensionMismatch, "test projector must be (d*d)x(d*d)");
  }
  if (!is_projector(p, kProjectorTolerance)) {
    throw Error(ErrorCode::kInvalidProjector, "test operator is not a projector");
  }
  if (fixed_point_error(p, d) > kProjectorTolerance) {
    throw Error(ErrorCode::kInvalidProjector, "test projector does not fix |Phi>");
  }
  TestProjector t;
  t.d = d;
  t.rank = rank_of_projector(p);
  t.projector = std::move(p);
  return t;
}

TestProjector cb_projector(const Basis& b) {
  TestProjector t = make_test_projector(b.d(), cb_projector_matrix(b));
  t.source_basis = b;
  return t;
}

TestProjector trivial_test(std::size_t d) {
  TestProjector t;
  t.d = d;
  t.projector = ComplexMatrix::identity(d * d);
  t.rank = d * d;
  return t;
}

WeightedBasisSet::WeightedBasisSet(std::vector<std::pair<Basis, double>> entries)
    : entries_(std::move(entries)) {
  if (entries_.empty()) throw Error(ErrorCode::kWeightError, "WeightedBasisSet: no bases");
  std::vector<double> weights;
  for (const auto& [basis, w] : entries_) {
    if (basis.d() != entries_.front().first.d()) {
      throw Error(ErrorCode::kDimensionMismatch, "WeightedBasisSet: bases differ in dimension");
    }
    weights.push_back(w);
  }
  check_weights(weights);
}

WeightedBasisSet WeightedBasisSet::uniform(std::vector<Basis> bases) {
  const double w = 1.0 / static_cast<double>(bases.size());
  std::vector<std::pair<Basis, double>> entries;
  for (auto& b : bases) entries.emplace_back(std::move(b), w);
  return WeightedBasisSet(std::move(entries));
}

Strategy::Strategy(std::size_t d, std::vector<WeightedTest> tests)
    : d_(d), tests_(std::move(tests)) {
  if (tests_.empty()) throw Error(ErrorCode::kWeightError, "Strategy: no tests");
  std::vector<double> weights;
  for (const auto& t : tests_) {
    if (t.test.d != d_ || t.test.projector.rows() != d_ * d_) {
      throw Error(ErrorCode::kDimensionMismatch, "Strategy: test dimension differs from d");
    }
    weights.push_back(t.probability);
  }
  check_weights(weights);

  omega_ = ComplexMatrix(d_ * d_, d_ * d_);
  for (const auto& t : tests_) omega_ += t.test.projector * Complex{t.probability};

  spectrum_ = hermitian_eig(omega_, kProjectorTolerance);
  if (std::abs(spectrum_.eigenvalues.front() - 1.0) > kClassificationTolerance ||
      fixed_point_error(omega_, d_) > kClassificationTolerance) {
    throw Error(ErrorCode::kInvalidProjector, "Strategy: |Phi> is not the top eigenvector");
  }
  beta_ = spectrum_.eigenvalues.size() > 1 ? spectrum_.eigenvalues[1] : 0.0;

  const double g = static_cast<double>(tests_.size());
  const double dd = static_cast<double>(d_);
  flags_.parsimonious = std::abs(beta_ - 1.0 / g) <= kClassificationTolerance;
  flags_.optimal = std::abs(beta_ - 1.0 / (dd + 1.0)) <= kClassificationTolerance;
  flags_.perfect = flags_.parsimonious && flags_.optimal;
  flags_.singular = spectrum_.eigenvalues.back() <= kSingularThreshold;

  const ComplexMatrix phi_proj = max_entangled_projector(d_);
  const ComplexMatrix homogeneous =
      phi_proj + (ComplexMatrix::identity(d_ * d_) - phi_proj) * Complex{beta_};
  flags_.homogeneous = max_abs_diff(omega_, homogeneous) <= kClassificationTolerance;
}

ComplexVector Strategy::beta_eigenvector() const {
  const ComplexVector phi = max_entangled_state(d_);
  ComplexVector best;
  double best_norm = 0.0;
  for (std::size_t k = 0; k < spectrum_.eigenvalues.size(); ++k) {
    if (std::abs(spectrum_.eigenvalues[k] - beta_) > kClassificationTolerance) continue;
    ComplexVector v = spectrum_.eigenvectors.column(k);
    const Complex overlap = inner(phi, v);
    for (std::size_t i = 0; i < v.size(); ++i) v[i] -= overlap * phi[i];
    const double n = norm(v);
    if (n > best_norm) {
      best_norm = n;
      best = std::move(v);
    }
  }
  if (best_norm < 0.5) {
    throw Error(ErrorCode::kDegenerateSpectrum, "no beta-eigenvector orthogonal to |Phi>");
  }
  for (auto& z : best) z /= best_norm;
  return best;
}

Strategy build_strategy(const WeightedBasisSet& wbs) {
  std::vector<WeightedTest> tests;
  for (const auto& [basis, w] : wbs.entries()) tests.push_back({cb_projector(basis), w});
  return Strategy(wbs.d(), std::move(tests));
}

bool is_2design(const WeightedBasisSet& wbs, double tol) {
  const std::size_t d = wbs.d();
  ComplexMatrix omega(d * d, d * d);
  for (const auto& [basis, w] : wbs.entries()) omega += cb_projector_matrix(basis) * Complex{w};
  const double dd = static_cast<double>(d);
  const ComplexMatrix target =
      (ComplexMatrix::identity(d * d) + max_entangled_projector(d) * Complex{dd}) *
      Complex{1.0 / (dd + 1.0)};
  return max_abs_diff(omega, target) <= tol;
}

double trivial_test_probability(std::size_t d, double lambda) {
  const double dd = static_cast<double>(d);
  if (!(lambda >= 1.0 / (dd + 1.0) - 1e-15) || !(lambda < 1.0)) {
    throw Error(ErrorCode::kLambdaOutOfRange,
                "lambda must satisfy 1/(d+1) <= lambda < 1 (lambda=" + std::to_string(lambda) +
                    ")");
  }
  return std::max(0.0, ((dd + 1.0) * lambda - 1.0) / dd);
}

Strategy homogenize(const Strategy& optimal, double lambda) {
  if (!optimal.flags().optimal) {
    throw Error(ErrorCode::kNotOptimalStrategy, "homogenize requires an optimal strategy");
  }
  const double p = trivial_test_probability(optimal.d(), lambda);
  if (p < 1e-14) return optimal;
  std::vector<WeightedTest> tests = optimal.tests();
  for (auto& t : tests) t.probability *= 1.0 - p;
  tests.push_back({trivial_test(optimal.d()), p});
  return Strategy(optimal.d(), std::move(tests));
}

PassBound max_pass_probability(const Strategy& s, double epsilon) {
  if (!(epsilon >= 0.0 && epsilon <= 1.0)) {
    throw Error(ErrorCode::kDomainError, "max_pass_probability: epsilon must lie in [0, 1]");
  }
  PassBound out;
  out.probability = 1.0 - s.nu() * epsilon;
  const ComplexVector v = s.beta_eigenvector();
  out.witness = max_entangled_projector(s.d()) * Complex{1.0 - epsilon} +
                ComplexMatrix::outer(v, v) * Complex{epsilon};
  return out;
}

double fidelity_from_pass_rate(const Strategy& s, double rate) {
  if (!s.flags().optimal || !s.flags().homogeneous) {
    throw Error(ErrorCode::kNotOptimalStrategy,
                "fidelity inference requires the optimal homogeneous strategy");
  }
  const double dd = static_cast<double>(s.d());
  if (!(rate >= 1.0 / (dd + 1.0) - 1e-12 && rate <= 1.0 + 1e-12)) {
    throw Error(ErrorCode::kRateOutOfRange, "pass rate must lie in [1/(d+1), 1]");
  }
  return ((dd + 1.0) * rate - 1.0) / dd;
}

Basis recover_basis(std::size_t d, const ComplexMatrix& p) {
  if (d < 1 || !p.is_square() || p.rows() != d * d) {
    throw Error(ErrorCode::kDimensionMismatch, "recover_basis: expected a (d*d)x(d*d) operator");
  }
  if (!is_projector(p, kProjectorTolerance)) {
    throw Error(ErrorCode::kPreconditionViolation, "recover_basis: input is not a projector");
  }
  if (fixed_point_error(p, d) > kProjectorTolerance) {
    throw Error(ErrorCode::kPreconditionViolation, "recover_basis: projector does not fix |Phi>");
  }
  const Spectrum support = hermitian_eig(p, kProjectorTolerance);
  const auto rank = std::count_if(support.eigenvalues.begin(), support.eigenvalues.end(),
                                  [](double x) { return x > 0.5; });
  if (static_cast<std::size_t>(rank) != d) {
    throw Error(ErrorCode::kPreconditionViolation,
                "recover_basis: projector rank " + std::to_string(rank) + " differs from d");
  }

  for (const std::uint64_t seed : {kRecoverySeed, kRecoverySeed + 1}) {
    const Spectrum spec = hermitian_eig(generic_support_combination(support, d, seed));
    if (min_gap(spec.eigenvalues) < kRecoveryGap) continue;
    std::vector<ComplexVector> kets;
    for (std::size_t k = 0; k < d; ++k) kets.push_back(spec.eigenvectors.column(k));
    Basis recovered(std::move(kets), "recovered");
    if (max_abs_diff(cb_projector_matrix(recovered), p) > kRecoveryCheck) {
      throw Error(ErrorCode::kNotConjugateBasisForm,
                  "recover_basis: projector is not of conjugate-basis form");
    }
    return canonicalize(recovered);
  }
  throw Error(ErrorCode::kDegenerateSpectrum,
              "recover_basis: generic combination stayed degenerate after reseeding");
}

Basis recover_basis(const TestProjector& p) { return recover_basis(p.d, p.projector); }

bool orthogonality_check(const TestProjector& p1, const TestProjector& p2) {
  if (p1.d != p2.d) throw Error(ErrorCode::kDimensionMismatch, "orthogonality_check: d differs");
  const ComplexMatrix phi = max_entangled_projector(p1.d);
  return trace_of_product(p1.projector - phi, p2.projector - phi).real() <= 1e-9;
}

}  // namespace entverify

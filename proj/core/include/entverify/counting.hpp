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

// Test counts, fidelity bounds and one-test thresholds for verifying a pure
// state, in the nonadversarial (i.i.d.) and adversarial scenarios.
//
// Conventions: epsilon is the infidelity to reject, delta the significance
// level, nu = 1 - beta the spectral gap of the strategy and lambda = beta for
// homogeneous strategies.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string_view>
#include <utility>

namespace entverify {

enum class Scenario { kNonadversarial, kAdversarialSingular, kAdversarialHomogeneous };

std::string_view scenario_name(Scenario s) noexcept;

/// Inputs and outputs of a test-count computation.
struct CountPlan {
  Scenario scenario = Scenario::kNonadversarial;
  std::size_t d = 0;  // 0 when the count does not depend on a local dimension
  double epsilon = 0.0;
  double delta = 0.0;
  double nu_or_lambda = 0.0;

  std::uint64_t n = 1;
  bool one_test = false;
  std::optional<std::uint64_t> k_star;
  std::optional<std::uint64_t> k_minus;
  std::optional<std::uint64_t> k_plus;
  std::optional<double> p1;
  std::optional<double> p2;
  /// Which closed form produced N (e.g. "(1-delta)/(nu*delta*eps)").
  std::string_view branch;
};

/// Ceiling that snaps values within 1e-9 (relative) of an integer onto that
/// integer, so exact rational boundaries survive floating-point evaluation.
std::uint64_t snapped_ceil(double x);

/// Smallest N >= 1 with q^N <= delta, for 0 <= q < 1.
std::uint64_t smallest_power_count(double q, double delta);

// -- nonadversarial ---------------------------------------------------------

/// N = ceil(ln delta / ln(1 - nu*eps)).
std::uint64_t tests_nonadversarial(double epsilon, double delta, double nu);
CountPlan plan_nonadversarial(double epsilon, double delta, double nu);

/// nu*eps + delta >= 1.
bool one_test_nonadversarial(double epsilon, double delta, double nu);

// -- adversarial, singular strategies -----------------------------------------

struct FidelityBound {
  double value = 0.0;
  /// Equality holds when nu >= 1/2; otherwise `value` is an upper bound.
  bool exact = false;
};

/// F = 1 - min{(1-delta)/(N delta nu), 1/((N+1) delta), 1}.
FidelityBound fidelity_bound_singular(std::uint64_t n, double delta, double nu);

/// N = min{ceil((1-delta)/(nu delta eps)), ceil(1/(delta eps) - 1)}.
std::uint64_t tests_adversarial_singular(double epsilon, double delta, double nu);
CountPlan plan_adversarial_singular(double epsilon, double delta, double nu);

// -- adversarial, homogeneous strategies --------------------------------------

/// eta_k(lambda) = (k lambda^{k-1} + (N+1-k) lambda^k)/(N+1).
double eta(std::uint64_t n, double lambda, std::uint64_t k);
/// zeta_k(lambda) = (N+1-k) lambda^k/(N+1).
double zeta(std::uint64_t n, double lambda, std::uint64_t k);

struct MinFidelity {
  double value = 0.0;
  std::optional<std::uint64_t> k;
  std::optional<double> p1;
  std::optional<double> p2;
};

/// Minimum fidelity after N passed tests of a homogeneous strategy. Zero when
/// delta <= lambda^N; otherwise [p1 zeta_k + p2 zeta_{k+1}]/delta with k the
/// largest index such that eta_k >= delta.
MinFidelity min_fidelity_adversarial(std::uint64_t n, double delta, double lambda);

/// The three-branch N = 1 form of min_fidelity_adversarial.
double min_fidelity_adversarial_one_test(double delta, double lambda);

/// lambda(delta - lambda)/(delta(1 - lambda)) >= 1 - eps. Sufficient for one
/// test; also necessary when delta <= (1 + lambda)/2.
bool one_test_adversarial(double epsilon, double delta, double lambda);

/// Significance level guaranteed by one passed test:
/// lambda^2/(lambda - (1 - lambda)(1 - eps)).
double one_test_significance_adversarial(double epsilon, double lambda);

/// Real-valued count for a given k:
/// (k nu^2 delta F + lambda^{k+1} + lambda delta (k nu - 1))/(lambda nu delta eps).
double tests_adversarial_homogeneous_real(double epsilon, double delta, double lambda,
                                          std::uint64_t k);

/// Largest k with delta <= lambda^k/(F + lambda eps).
std::uint64_t optimal_k(double epsilon, double delta, double lambda);

/// N = ceil(Ntilde(k*)), with k*, floor and ceil of log_lambda(delta) reported.
CountPlan tests_adversarial_homogeneous(double epsilon, double delta, double lambda);

// -- entanglement detection (eps = (d-1)/d) -----------------------------------

std::uint64_t entanglement_tests_nonadversarial(std::size_t d, double delta, double nu);
/// ceil(ln delta / (ln 2 - ln(d+1))) for an optimal strategy.
std::uint64_t entanglement_tests_optimal(std::size_t d, double delta);
/// ceil(ln delta / (ln(g+d-1) - ln(g d))) for a parsimonious g-test strategy.
std::uint64_t entanglement_tests_parsimonious(std::size_t d, std::size_t g, double delta);
/// Smallest d for which one optimal local test certifies entanglement: ceil(2/delta - 1).
std::size_t one_test_dimension_nonadversarial(double delta);

/// lambda = 0: ceil(d(1-delta)/((d-1)delta)); lambda > 0: homogeneous count.
std::uint64_t entanglement_tests_adversarial(std::size_t d, double delta, double lambda);
CountPlan plan_entanglement_adversarial(std::size_t d, double delta, double lambda);
/// Singular parsimonious g-test strategy in the adversarial scenario.
std::uint64_t entanglement_tests_adversarial_parsimonious(std::size_t d, std::size_t g,
                                                          double delta);

/// Unique root in (0, 1) of 1 + (d-1) lambda + ln lambda = 0, by bisection.
double lambda_star(std::size_t d);

/// One-test entanglement certification in the adversarial scenario.
class OneTestThreshold {
 public:
  /// Requires 0 < delta <= 1/2.
  explicit OneTestThreshold(double delta);

  double delta() const noexcept { return delta_; }
  /// d* = ceil((2 + 2 sqrt(1-delta) - delta)/delta).
  std::size_t d_star() const noexcept { return d_star_; }
  /// delta >= 4d/(d+1)^2, the equivalent form of d >= d*.
  bool admits(std::size_t d) const noexcept;
  /// [lambda_-, lambda_+] = ((d+1)delta -/+ sqrt((d+1)^2 delta^2 - 4 d delta))/(2d).
  /// Throws DomainError when d < d*.
  std::pair<double, double> lambda_bounds(std::size_t d) const;

 private:
  double delta_;
  std::size_t d_star_;
};

/// Closed-form approximations, valid only in the limits stated for each. None
/// of the exact counts above call into this namespace.
namespace asymptotic {

/// delta -> 0: (F + lambda eps)/(lambda eps ln lambda) ln delta.
double tests_adversarial_small_delta(double epsilon, double delta, double lambda);
/// eps, delta -> 0: ln delta/(lambda eps ln lambda).
double tests_adversarial_high_precision(double epsilon, double delta, double lambda);
/// e eps^{-1} ln delta^{-1}, the minimum of the above over lambda (at 1/e).
double tests_adversarial_high_precision_optimum(double epsilon, double delta);
/// delta << lambda: (1 + (d-1) lambda)/((d-1) lambda ln lambda) ln delta.
double entanglement_tests_adversarial(std::size_t d, double delta, double lambda);
/// lambda = 1/(d-1), d >= 3, delta << lambda: 2 ln delta^{-1}/ln(d-1).
double entanglement_tests_adversarial_inverse_dimension(std::size_t d, double delta);

}  // namespace asymptotic

}  // namespace entverify

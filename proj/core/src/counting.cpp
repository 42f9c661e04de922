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

#include "entverify/counting.hpp"

#include <algorithm>
#include <cfloat>
#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>
#include <string>

#include "entverify/error.hpp"

namespace entverify {
namespace {

constexpr double kSnap = 1e-9;
constexpr double kRelativeSlack = 1e-12;

[[noreturn]] void domain_error(const std::string& what) {
  throw Error(ErrorCode::kDomainError, what);
}

void require_open_unit(double x, const char* name) {
  if (!(x > 0.0 && x < 1.0)) domain_error(std::string(name) + " must lie in (0, 1)");
}

void require_gap(double nu) {
  if (!(nu > 0.0 && nu <= 1.0)) domain_error("nu must lie in (0, 1]");
}

void require_dimension(std::size_t d) {
  if (d < 2) throw Error(ErrorCode::kInvalidDimension, "local dimension must be at least 2");
}

// a <= b, treating a relative excess of b below the slack as equality.
bool leq_slack(long double a, long double b, long double slack = kRelativeSlack) {
  return a <= b + std::abs(b) * slack;
}

std::uint64_t to_count(double x) {
  if (!std::isfinite(x) || x > 9.0e18) domain_error("test count overflows");
  return static_cast<std::uint64_t>(std::max(x, 1.0));
}

double entanglement_epsilon(std::size_t d) {
  return static_cast<double>(d - 1) / static_cast<double>(d);
}

}  // namespace

std::string_view scenario_name(Scenario s) noexcept {
  switch (s) {
    case Scenario::kNonadversarial: return "nonadversarial";
    case Scenario::kAdversarialSingular: return "adversarial-singular";
    case Scenario::kAdversarialHomogeneous: return "adversarial-homogeneous";
  }
  return "unknown";
}

std::uint64_t snapped_ceil(double x) {
  if (!std::isfinite(x)) domain_error("snapped_ceil: non-finite argument");
  const double r = std::round(x);
  const double c = std::abs(x - r) <= kSnap * std::max(1.0, std::abs(x)) ? r : std::ceil(x);
  return c <= 0.0 ? 0 : to_count(c);
}

std::uint64_t smallest_power_count(double q, double delta) {
  if (!(q >= 0.0 && q < 1.0)) domain_error("smallest_power_count: q must lie in [0, 1)");
  require_open_unit(delta, "delta");
  if (leq_slack(q, delta)) return 1;

  const double ratio = std::log(delta) / std::log(q);
  const double r = std::round(ratio);
  if (std::abs(ratio - r) > kSnap * std::max(1.0, ratio)) return to_count(std::ceil(ratio));

  // Near an integer the logarithms cannot decide; compare the power directly.
  const auto n = to_count(r);
  const long double power = std::pow(static_cast<long double>(q), static_cast<long double>(n));
  const long double slack =
      std::max<long double>(kRelativeSlack, 4.0L * static_cast<long double>(n) * DBL_EPSILON);
  return leq_slack(power, delta, slack) ? n : n + 1;
}

std::uint64_t tests_nonadversarial(double epsilon, double delta, double nu) {
  require_open_unit(epsilon, "epsilon");
  require_open_unit(delta, "delta");
  require_gap(nu);
  if (!(nu * epsilon < 1.0)) domain_error("nu * epsilon must be below 1");
  return smallest_power_count(1.0 - nu * epsilon, delta);
}

CountPlan plan_nonadversarial(double epsilon, double delta, double nu) {
  CountPlan plan;
  plan.scenario = Scenario::kNonadversarial;
  plan.epsilon = epsilon;
  plan.delta = delta;
  plan.nu_or_lambda = nu;
  plan.n = tests_nonadversarial(epsilon, delta, nu);
  plan.one_test = plan.n == 1;
  plan.branch = "ln(delta)/ln(1-nu*eps)";
  return plan;
}

bool one_test_nonadversarial(double epsilon, double delta, double nu) {
  require_open_unit(epsilon, "epsilon");
  require_open_unit(delta, "delta");
  require_gap(nu);
  return leq_slack(1.0 - nu * epsilon, delta);
}

FidelityBound fidelity_bound_singular(std::uint64_t n, double delta, double nu) {
  if (n < 1) domain_error("N must be at least 1");
  require_open_unit(delta, "delta");
  require_gap(nu);
  const double nn = static_cast<double>(n);
  const double m = std::min({(1.0 - delta) / (nn * delta * nu), 1.0 / ((nn + 1.0) * delta), 1.0});
  return {1.0 - m, nu >= 0.5};
}

std::uint64_t tests_adversarial_singular(double epsilon, double delta, double nu) {
  return plan_adversarial_singular(epsilon, delta, nu).n;
}

CountPlan plan_adversarial_singular(double epsilon, double delta, double nu) {
  require_open_unit(epsilon, "epsilon");
  require_open_unit(delta, "delta");
  require_gap(nu);
  const std::uint64_t by_gap = snapped_ceil((1.0 - delta) / (nu * delta * epsilon));
  const std::uint64_t by_delta = snapped_ceil(1.0 / (delta * epsilon) - 1.0);

  CountPlan plan;
  plan.scenario = Scenario::kAdversarialSingular;
  plan.epsilon = epsilon;
  plan.delta = delta;
  plan.nu_or_lambda = nu;
  plan.n = std::max<std::uint64_t>(1, std::min(by_gap, by_delta));
  plan.one_test = plan.n == 1;
  plan.branch = by_gap <= by_delta ? "(1-delta)/(nu*delta*eps)" : "1/(delta*eps)-1";
  return plan;
}

double eta(std::uint64_t n, double lambda, std::uint64_t k) {
  const double nn = static_cast<double>(n);
  const double kk = static_cast<double>(k);
  const double lead = k == 0 ? 0.0 : kk * std::pow(lambda, kk - 1.0);
  return (lead + (nn + 1.0 - kk) * std::pow(lambda, kk)) / (nn + 1.0);
}

double zeta(std::uint64_t n, double lambda, std::uint64_t k) {
  const double nn = static_cast<double>(n);
  const double kk = static_cast<double>(k);
  return (nn + 1.0 - kk) * std::pow(lambda, kk) / (nn + 1.0);
}

MinFidelity min_fidelity_adversarial(std::uint64_t n, double delta, double lambda) {
  if (n < 1) domain_error("N must be at least 1");
  require_open_unit(delta, "delta");
  require_open_unit(lambda, "lambda");
  if (delta <= std::pow(lambda, static_cast<double>(n))) return {};

  // eta is not assumed monotone in k: scan for the largest admissible index.
  std::uint64_t k = n + 1;
  while (k > 0 && eta(n, lambda, k) < delta) --k;
  const double e1 = eta(n, lambda, k);
  const double e2 = eta(n, lambda, k + 1);
  const double p1 = e1 == e2 ? 1.0 : (delta - e2) / (e1 - e2);
  const double p2 = 1.0 - p1;

  MinFidelity out;
  out.value = (p1 * zeta(n, lambda, k) + p2 * zeta(n, lambda, k + 1)) / delta;
  out.k = k;
  out.p1 = p1;
  out.p2 = p2;
  return out;
}

double min_fidelity_adversarial_one_test(double delta, double lambda) {
  require_open_unit(delta, "delta");
  require_open_unit(lambda, "lambda");
  if (delta <= lambda) return 0.0;
  if (delta <= (1.0 + lambda) / 2.0) return lambda * (delta - lambda) / (delta * (1.0 - lambda));
  return (delta * (2.0 - lambda) - 1.0) / (delta * (1.0 - lambda));
}

bool one_test_adversarial(double epsilon, double delta, double lambda) {
  require_open_unit(epsilon, "epsilon");
  require_open_unit(delta, "delta");
  require_open_unit(lambda, "lambda");
  const double lhs = lambda * (delta - lambda) / (delta * (1.0 - lambda));
  return leq_slack(1.0 - epsilon, lhs);
}

double one_test_significance_adversarial(double epsilon, double lambda) {
  require_open_unit(epsilon, "epsilon");
  require_open_unit(lambda, "lambda");
  const double denom = lambda - (1.0 - lambda) * (1.0 - epsilon);
  if (denom <= 0.0) return std::numeric_limits<double>::infinity();
  return lambda * lambda / denom;
}

double tests_adversarial_homogeneous_real(double epsilon, double delta, double lambda,
                                          std::uint64_t k) {
  const double fid = 1.0 - epsilon;
  const double nu = 1.0 - lambda;
  const double kk = static_cast<double>(k);
  return (kk * nu * nu * delta * fid + std::pow(lambda, kk + 1.0) +
          lambda * delta * (kk * nu - 1.0)) /
         (lambda * nu * delta * epsilon);
}

std::uint64_t optimal_k(double epsilon, double delta, double lambda) {
  require_open_unit(epsilon, "epsilon");
  require_open_unit(delta, "delta");
  require_open_unit(lambda, "lambda");
  const double threshold = delta * (1.0 - epsilon + lambda * epsilon);
  auto admissible = [&](std::uint64_t k) {
    return threshold <= std::pow(lambda, static_cast<double>(k));
  };
  std::uint64_t k = to_count(std::floor(std::log(threshold) / std::log(lambda)));
  if (std::log(threshold) / std::log(lambda) < 1.0) k = 0;
  while (admissible(k + 1)) ++k;
  while (k > 0 && !admissible(k)) --k;
  return k;
}

CountPlan tests_adversarial_homogeneous(double epsilon, double delta, double lambda) {
  const std::uint64_t k_star = optimal_k(epsilon, delta, lambda);
  const double log_ratio = std::log(delta) / std::log(lambda);
  const double nearest = std::round(log_ratio);
  std::uint64_t k_minus = 0;
  std::uint64_t k_plus = 0;
  if (std::abs(log_ratio - nearest) <= kSnap * std::max(1.0, log_ratio)) {
    k_minus = k_plus = static_cast<std::uint64_t>(nearest);
  } else {
    k_minus = static_cast<std::uint64_t>(std::floor(log_ratio));
    k_plus = static_cast<std::uint64_t>(std::ceil(log_ratio));
  }
  if (k_star != k_minus && k_star != k_plus) {
    throw std::logic_error("tests_adversarial_homogeneous: k* outside {k-, k+}");
  }

  CountPlan plan;
  plan.scenario = Scenario::kAdversarialHomogeneous;
  plan.epsilon = epsilon;
  plan.delta = delta;
  plan.nu_or_lambda = lambda;
  plan.n = std::max<std::uint64_t>(
      1, snapped_ceil(tests_adversarial_homogeneous_real(epsilon, delta, lambda, k_star)));
  plan.one_test = plan.n == 1;
  plan.k_star = k_star;
  plan.k_minus = k_minus;
  plan.k_plus = k_plus;
  const MinFidelity at_n = min_fidelity_adversarial(plan.n, delta, lambda);
  plan.p1 = at_n.p1;
  plan.p2 = at_n.p2;
  plan.branch = "Ntilde(k*)";
  return plan;
}

std::uint64_t entanglement_tests_nonadversarial(std::size_t d, double delta, double nu) {
  require_dimension(d);
  require_open_unit(delta, "delta");
  require_gap(nu);
  const double dd = static_cast<double>(d);
  return smallest_power_count((dd - nu * (dd - 1.0)) / dd, delta);
}

std::uint64_t entanglement_tests_optimal(std::size_t d, double delta) {
  require_dimension(d);
  return smallest_power_count(2.0 / (static_cast<double>(d) + 1.0), delta);
}

std::uint64_t entanglement_tests_parsimonious(std::size_t d, std::size_t g, double delta) {
  require_dimension(d);
  if (g < 2) domain_error("a parsimonious strategy needs at least 2 tests");
  const double dd = static_cast<double>(d);
  const double gg = static_cast<double>(g);
  return smallest_power_count((gg + dd - 1.0) / (gg * dd), delta);
}

std::size_t one_test_dimension_nonadversarial(double delta) {
  require_open_unit(delta, "delta");
  return std::max<std::size_t>(2, snapped_ceil(2.0 / delta - 1.0));
}

std::uint64_t entanglement_tests_adversarial(std::size_t d, double delta, double lambda) {
  return plan_entanglement_adversarial(d, delta, lambda).n;
}

CountPlan plan_entanglement_adversarial(std::size_t d, double delta, double lambda) {
  require_dimension(d);
  require_open_unit(delta, "delta");
  if (!(lambda >= 0.0 && lambda < 1.0)) domain_error("lambda must lie in [0, 1)");
  if (lambda > 0.0) {
    CountPlan plan = tests_adversarial_homogeneous(entanglement_epsilon(d), delta, lambda);
    plan.d = d;
    return plan;
  }
  const double dd = static_cast<double>(d);
  CountPlan plan;
  plan.scenario = Scenario::kAdversarialSingular;
  plan.d = d;
  plan.epsilon = entanglement_epsilon(d);
  plan.delta = delta;
  plan.nu_or_lambda = 0.0;
  plan.n = std::max<std::uint64_t>(1, snapped_ceil(dd * (1.0 - delta) / ((dd - 1.0) * delta)));
  plan.one_test = plan.n == 1;
  plan.branch = "d(1-delta)/((d-1)delta)";
  return plan;
}

std::uint64_t entanglement_tests_adversarial_parsimonious(std::size_t d, std::size_t g,
                                                          double delta) {
  require_dimension(d);
  if (g < 2) domain_error("a parsimonious strategy needs at least 2 tests");
  const double gg = static_cast<double>(g);
  return tests_adversarial_singular(entanglement_epsilon(d), delta, (gg - 1.0) / gg);
}

double lambda_star(std::size_t d) {
  require_dimension(d);
  const double slope = static_cast<double>(d) - 1.0;
  auto f = [slope](double x) { return 1.0 + slope * x + std::log(x); };
  double lo = 1e-12;
  double hi = 1.0 - 1e-12;
  for (int i = 0; i < 200 && hi - lo > 0.0; ++i) {
    const double mid = 0.5 * (lo + hi);
    if (mid == lo || mid == hi) break;
    (f(mid) < 0.0 ? lo : hi) = mid;
  }
  return 0.5 * (lo + hi);
}

OneTestThreshold::OneTestThreshold(double delta) : delta_(delta) {
  if (!(delta > 0.0 && delta <= 0.5)) domain_error("one-test threshold requires 0 < delta <= 1/2");
  d_star_ = snapped_ceil((2.0 + 2.0 * std::sqrt(1.0 - delta) - delta) / delta);
}

bool OneTestThreshold::admits(std::size_t d) const noexcept {
  const double dd = static_cast<double>(d);
  return delta_ >= 4.0 * dd / ((dd + 1.0) * (dd + 1.0));
}

std::pair<double, double> OneTestThreshold::lambda_bounds(std::size_t d) const {
  if (d < d_star_) {
    domain_error("lambda bounds exist only for d >= d* = " + std::to_string(d_star_));
  }
  const double dd = static_cast<double>(d);
  const double b = (dd + 1.0) * delta_;
  const double disc = std::max(0.0, b * b - 4.0 * dd * delta_);
  const double upper = (b + std::sqrt(disc)) / (2.0 * dd);
  // lambda_- lambda_+ = delta/d avoids cancellation in the smaller root.
  const double lower = delta_ / dd / upper;
  return {lower, upper};
}

namespace asymptotic {

double tests_adversarial_small_delta(double epsilon, double delta, double lambda) {
  require_open_unit(epsilon, "epsilon");
  require_open_unit(delta, "delta");
  require_open_unit(lambda, "lambda");
  return (1.0 - epsilon + lambda * epsilon) / (lambda * epsilon * std::log(lambda)) *
         std::log(delta);
}

double tests_adversarial_high_precision(double epsilon, double delta, double lambda) {
  require_open_unit(epsilon, "epsilon");
  require_open_unit(delta, "delta");
  require_open_unit(lambda, "lambda");
  return std::log(delta) / (lambda * epsilon * std::log(lambda));
}

double tests_adversarial_high_precision_optimum(double epsilon, double delta) {
  require_open_unit(epsilon, "epsilon");
  require_open_unit(delta, "delta");
  return std::numbers::e / epsilon * std::log(1.0 / delta);
}

double entanglement_tests_adversarial(std::size_t d, double delta, double lambda) {
  require_dimension(d);
  require_open_unit(delta, "delta");
  require_open_unit(lambda, "lambda");
  const double m = static_cast<double>(d) - 1.0;
  return (1.0 + m * lambda) / (m * lambda * std::log(lambda)) * std::log(delta);
}

double entanglement_tests_adversarial_inverse_dimension(std::size_t d, double delta) {
  if (d < 3) throw Error(ErrorCode::kInvalidDimension, "lambda = 1/(d-1) requires d >= 3");
  require_open_unit(delta, "delta");
  return 2.0 * std::log(1.0 / delta) / std::log(static_cast<double>(d) - 1.0);
}

}  // namespace asymptotic

}  // namespace entverify

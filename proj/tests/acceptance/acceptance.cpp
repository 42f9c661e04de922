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

// Acceptance suite: one PASS/FAIL line per criterion, nonzero exit status if
// any criterion fails.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <numbers>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "entverify/bases.hpp"
#include "entverify/counting.hpp"
#include "entverify/robustness.hpp"
#include "entverify/sim.hpp"
#include "entverify/strategy.hpp"
#include "fixtures.hpp"
#include "oracles.hpp"

namespace ev = entverify;

namespace {

struct Check {
  bool ok = true;
  std::ostringstream note;

  void expect(bool cond, const std::string& what) {
    if (!cond && ok) note << "first failure: " << what << "; ";
    ok = ok && cond;
  }
};

double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

ev::Strategy uniform_strategy(std::size_t d, std::size_t g) {
  return ev::build_strategy(ev::WeightedBasisSet::uniform(ev::mub_set(d, g)));
}

void spectral_claims(Check& c) {
  const auto t0 = std::chrono::steady_clock::now();
  double worst = 0.0;
  for (std::size_t d : {2u, 3u, 5u, 7u}) {
    const ev::Strategy s = uniform_strategy(d, d + 1);
    const auto& ev = s.spectrum().eigenvalues;
    c.expect(ev.size() == d * d, "spectrum size");
    worst = std::max(worst, std::abs(ev[0] - 1.0));
    for (std::size_t k = 1; k < ev.size(); ++k) worst = std::max(worst, std::abs(ev[k] - 1.0 / (d + 1)));
  }
  const double elapsed = seconds_since(t0);
  c.expect(worst <= 1e-9, "eigenvalue deviation");
  c.expect(elapsed < 10.0, "runtime");
  c.note << "max eigenvalue deviation " << worst << ", " << elapsed << " s";
}

void parsimonious_claims(Check& c) {
  double worst = 0.0;
  int broken = 0;
  for (std::size_t d = 2; d <= 7; ++d) {
    const auto bases = ev::mub_set(d, 3);
    const ev::Strategy s = ev::build_strategy(ev::WeightedBasisSet::uniform(bases));
    worst = std::max(worst, std::abs(s.beta() - 1.0 / 3.0));
    c.expect(s.flags().parsimonious, "parsimonious flag at d=" + std::to_string(d));
    for (std::size_t i = 0; i < 3; ++i) {
      std::vector<std::pair<ev::Basis, double>> entries;
      for (std::size_t j = 0; j < 3; ++j) {
        double p = 1.0 / 3.0;
        if (j == i) p += 0.01;
        if (j == (i + 1) % 3) p -= 0.01;
        entries.emplace_back(bases[j], p);
      }
      const ev::Strategy t = ev::build_strategy(ev::WeightedBasisSet(entries));
      c.expect(!t.flags().parsimonious, "perturbed weight keeps flag");
      if (!t.flags().parsimonious) ++broken;
    }
  }
  c.expect(worst <= 1e-9, "beta deviation");
  c.note << "max |beta - 1/3| " << worst << ", perturbations breaking the flag " << broken << "/18";
}

void two_design(Check& c) {
  int negatives = 0;
  for (std::size_t d : {2u, 3u, 5u, 7u}) {
    c.expect(ev::is_2design(ev::WeightedBasisSet::uniform(ev::mub_set(d, d + 1))),
             "complete set at d=" + std::to_string(d));
    for (std::size_t g = 1; g <= d; ++g) {
      const bool is = ev::is_2design(ev::WeightedBasisSet::uniform(ev::mub_set(d, g)));
      c.expect(!is, "g <= d accepted");
      if (!is) ++negatives;
    }
  }
  c.note << "complete sets certified at d = 2,3,5,7; " << negatives << "/17 incomplete sets rejected";
}

void counting_oracles(Check& c) {
  using ev::testing::Rational;
  int matched = 0;
  int total = 0;
  const Rational nus[] = {Rational(1, 3), Rational(2, 3), Rational(1)};
  for (const Rational& nu : nus)
    for (int i = 1; i <= 20; ++i)
      for (int j = 1; j <= 20; ++j) {
        const auto expected =
            ev::testing::smallest_power_oracle(1 - nu * Rational(i, 21), Rational(j, 21));
        const auto got = ev::tests_nonadversarial(i / 21.0, j / 21.0, nu.convert_to<double>());
        ++total;
        if (got == expected) ++matched;
      }
  c.expect(total == 1200 && matched == total, "nonadversarial grid");
  int hmatched = 0;
  int htotal = 0;
  for (double eps : {0.3, 0.1, 0.03, 0.01})
    for (double delta : {0.3, 0.1, 0.03, 0.01})
      for (double lambda : {0.1, 1.0 / std::numbers::e, 0.6}) {
        ++htotal;
        if (ev::tests_adversarial_homogeneous(eps, delta, lambda).n ==
            ev::testing::exhaustive_k_oracle(eps, delta, lambda)) {
          ++hmatched;
        }
      }
  c.expect(hmatched == htotal, "homogeneous grid");
  c.note << "nonadversarial " << matched << "/" << total << ", homogeneous " << hmatched << "/"
         << htotal;
}

void reference_numbers(Check& c) {
  const ev::OneTestThreshold t(0.1);
  c.expect(t.d_star() == 38, "d* at delta=0.1");
  c.expect(ev::one_test_dimension_nonadversarial(0.1) == 19, "nonadversarial d at 0.1");
  c.expect(ev::one_test_dimension_nonadversarial(0.05) == 39, "nonadversarial d at 0.05");
  const auto [lo, hi] = t.lambda_bounds(38);
  c.expect(std::abs(lo - 0.05) <= 1e-9, "lambda_-");
  c.expect(std::abs(hi - 4.0 / 76.0) <= 1e-9, "lambda_+");
  const double a = 1.0 - std::sqrt(0.9);
  const double b = 2.0 / 39.0;
  c.expect(lo <= a && a <= hi, "1 - sqrt(0.9) inside");
  c.expect(lo <= b && b <= hi, "2/39 inside");
  c.note << "d* = " << t.d_star() << ", one-test d = " << ev::one_test_dimension_nonadversarial(0.1)
         << " / " << ev::one_test_dimension_nonadversarial(0.05) << ", [" << lo << ", " << hi
         << "]";
}

void one_test_fidelity(Check& c) {
  double worst = 0.0;
  int points = 0;
  for (double lambda : {0.05, 0.1, 0.2, 0.3, 0.4, 0.5, 0.6, 0.7, 0.8, 0.9})
    for (double delta : {0.04, 0.15, 0.45, 0.75, 0.98}) {
      ++points;
      worst = std::max(worst, std::abs(ev::min_fidelity_adversarial(1, delta, lambda).value -
                                       ev::min_fidelity_adversarial_one_test(delta, lambda)));
    }
  const double special = ev::min_fidelity_adversarial(1, 0.1, 0.05).value;
  c.expect(points == 50 && worst <= 1e-12, "grid agreement");
  c.expect(std::abs(special - 1.0 / 38.0) <= 1e-12, "1/38 case");
  c.note << points << " points, max deviation " << worst << ", F(1, 0.1, 0.05) = " << special;
}

void robustness_identities(Check& c) {
  std::mt19937_64 rng(2718);
  double worst_t = 0.0;
  double worst_w = 0.0;
  for (int trial = 0; trial < 100; ++trial) {
    const ev::SchmidtVector s(ev::testing::random_schmidt(2 + trial % 4, rng));
    const ev::RobustnessReport r = ev::robustness_quantities(s);
    worst_t = std::max(worst_t, std::abs(r.t - r.robustness - 1.0));
    worst_w = std::max(worst_w, std::abs(ev::ppt_beta_witness(s) - s[0] * s[1]));
  }
  c.expect(worst_t <= 1e-9 && worst_w <= 1e-9, "random identities");
  for (std::size_t d = 2; d <= 5; ++d) {
    const ev::RobustnessReport r =
        ev::robustness_quantities(ev::SchmidtVector::maximally_entangled(d));
    c.expect(std::abs(r.robustness - (d - 1.0)) <= 1e-9, "E_R maximally entangled");
    c.expect(std::abs(r.random_robustness - double(d)) <= 1e-9, "R maximally entangled");
  }
  c.note << "max |T - E_R - 1| " << worst_t << ", max |witness - s0 s1| " << worst_w;
}

void monte_carlo(Check& c) {
  const auto t0 = std::chrono::steady_clock::now();
  const std::uint64_t n = 1000000;
  const ev::Strategy s = uniform_strategy(2, 3);
  const ev::RunResult dep = ev::run_protocol(s, ev::depolarized_state(2, 0.1), n, 20240101);
  const double p = 1.0 - (2.0 / 3.0) * 0.1;
  const double z_dep = (dep.pass_rate() - p) / std::sqrt(p * (1 - p) / n);
  const ev::RunResult worst = ev::run_protocol(s, ev::worst_case_state(s, 0.1), n, 20240102);
  const double q = 1.0 - s.nu() * 0.1;
  const double z_worst = (worst.pass_rate() - q) / std::sqrt(q * (1 - q) / n);
  const double elapsed = seconds_since(t0);
  c.expect(std::abs(z_dep) <= 4.0, "depolarized rate");
  c.expect(std::abs(z_worst) <= 4.0, "worst-case rate");
  c.expect(elapsed < 30.0, "runtime");
  c.note << "depolarized rate " << dep.pass_rate() << " (z = " << z_dep << "), worst-case "
         << worst.pass_rate() << " (z = " << z_worst << "), " << elapsed << " s";
}

void basis_recovery(Check& c) {
  std::mt19937_64 rng(31415);
  double worst = 0.0;
  for (int trial = 0; trial < 50; ++trial) {
    const std::size_t d = 2 + trial % 5;
    const ev::Basis b = ev::testing::random_basis(d, rng);
    const ev::Basis r = ev::recover_basis(ev::cb_projector(b));
    const ev::Basis expected = ev::canonicalize(b);
    for (std::size_t i = 0; i < d; ++i) worst = std::max(worst, ev::max_abs_diff(r.ket(i), expected.ket(i)));
  }
  c.expect(worst <= 1e-7, "ket deviation");
  c.note << "50 bases, max ket deviation " << worst;
}

void interval_bounds(Check& c) {
  int checked = 0;
  for (int i = 1; i <= 10; ++i) {
    const double delta = 0.05 * i;
    const ev::OneTestThreshold t(delta);
    for (std::size_t d = t.d_star(); d <= t.d_star() + 50; ++d) {
      const auto [lo, hi] = t.lambda_bounds(d);
      const double dd = double(d);
      const double mid = 1.0 - std::sqrt(1.0 - delta);
      const bool ok = 1.0 / (dd + 1.0) < lo && lo <= hi && hi < (dd - 1.0) / (2.0 * dd) &&
                      delta / dd < lo && hi < delta && lo <= 2.0 / (dd + 1.0) &&
                      2.0 / (dd + 1.0) <= mid && mid <= hi;
      c.expect(ok, "bounds at delta=" + std::to_string(delta) + " d=" + std::to_string(d));
      ++checked;
    }
  }
  c.note << checked << " (delta, d) points";
}

void asymptotic_convergence(Check& c) {
  const double eps = 0.01;
  const double delta = 0.001;
  const double lambda = 1.0 / std::numbers::e;
  const double exact = double(ev::tests_adversarial_homogeneous(eps, delta, lambda).n);
  const double hp = ev::asymptotic::tests_adversarial_high_precision(eps, delta, lambda);
  const double sd = ev::asymptotic::tests_adversarial_small_delta(eps, delta, lambda);
  const double gap_hp = std::abs(exact - hp) / exact;
  const double gap_sd = std::abs(exact - sd) / exact;
  c.expect(gap_hp <= 0.05, "high-precision form");
  c.expect(gap_sd <= 0.05, "small-delta form");
  c.note << "N = " << exact << ", high-precision gap " << gap_hp << ", small-delta gap " << gap_sd;
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<void(Check&)>>> criteria = {
      {"AC1 complete MUB spectrum", spectral_claims},
      {"AC2 three-basis parsimony", parsimonious_claims},
      {"AC3 2-design certificate", two_design},
      {"AC4 counting oracle equivalence", counting_oracles},
      {"AC5 reference thresholds", reference_numbers},
      {"AC6 one-test adversarial fidelity", one_test_fidelity},
      {"AC7 robustness identities", robustness_identities},
      {"AC8 Monte Carlo acceptance", monte_carlo},
      {"AC9 basis recovery round trip", basis_recovery},
      {"AC10 one-test interval bounds", interval_bounds},
      {"ASYM asymptotic convergence", asymptotic_convergence},
  };
  int failures = 0;
  for (const auto& [name, fn] : criteria) {
    Check c;
    try {
      fn(c);
    } catch (const std::exception& e) {
      c.ok = false;
      c.note << "exception: " << e.what();
    }
    if (!c.ok) ++failures;
    std::printf("[%s] %s: %s\n", c.ok ? "PASS" : "FAIL", name.c_str(), c.note.str().c_str());
  }
  std::printf("%d/%zu criteria passed\n", int(criteria.size()) - failures, criteria.size());
  return failures == 0 ? 0 : 1;
}

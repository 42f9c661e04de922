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

// Robustness-type entanglement quantities of bipartite pure states, computed
// from Schmidt coefficients, and the lower bounds they imply on beta for
// strategies built from separable tests.

#include <cstddef>
#include <span>
#include <vector>

namespace entverify {

/// Schmidt coefficients sorted nonincreasing with sum of squares one.
class SchmidtVector {
 public:
  /// Sorts the input. Renormalizes when the squared norm is within 1e-8 of
  /// one; throws InvalidSchmidt otherwise or on negative/empty input.
  explicit SchmidtVector(std::vector<double> s);

  static SchmidtVector maximally_entangled(std::size_t d);
  static SchmidtVector product(std::size_t d);

  std::size_t d() const noexcept { return s_.size(); }
  std::span<const double> coefficients() const noexcept { return s_; }
  double operator[](std::size_t i) const { return s_[i]; }
  /// s_0 s_1, or 0 when d == 1.
  double leading_product() const noexcept;

 private:
  std::vector<double> s_;
};

struct RobustnessReport {
  double robustness = 0.0;         // E_R = (sum s)^2 - 1
  double random_robustness = 0.0;  // R = D s0 s1
  double t = 0.0;                  // T = (sum s)^2
  double beta_lower_separable = 0.0;
  double beta_lower_homogeneous = 0.0;
  std::size_t total_dimension = 0;  // D = d^2
};

RobustnessReport robustness_quantities(const SchmidtVector& s);

/// Negative of the smallest eigenvalue of the partial transpose of
/// |Psi><Psi|, |Psi> = sum_j s_j |jj>. Builds the d^2 x d^2 operator, so
/// d <= 12 (DimensionTooLarge otherwise).
double ppt_beta_witness(const SchmidtVector& s);

}  // namespace entverify

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

#include "entverify/robustness.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <numeric>

#include "entverify/error.hpp"
#include "entverify/linalg.hpp"

namespace entverify {

SchmidtVector::SchmidtVector(std::vector<double> s) : s_(std::move(s)) {
  if (s_.empty()) throw Error(ErrorCode::kInvalidSchmidt, "empty Schmidt vector");
  for (double x : s_) {
    if (!(x >= 0.0) || !std::isfinite(x)) {
      throw Error(ErrorCode::kInvalidSchmidt, "Schmidt coefficients must be finite and >= 0");
    }
  }
  std::sort(s_.begin(), s_.end(), std::greater<>());
  const double sq = std::inner_product(s_.begin(), s_.end(), s_.begin(), 0.0);
  if (std::abs(sq - 1.0) > 1e-8) {
    throw Error(ErrorCode::kInvalidSchmidt, "sum of squared Schmidt coefficients is not 1");
  }
  const double scale = 1.0 / std::sqrt(sq);
  for (double& x : s_) x *= scale;
}

SchmidtVector SchmidtVector::maximally_entangled(std::size_t d) {
  if (d < 1) throw Error(ErrorCode::kInvalidSchmidt, "empty Schmidt vector");
  return SchmidtVector(std::vector<double>(d, 1.0 / std::sqrt(static_cast<double>(d))));
}

SchmidtVector SchmidtVector::product(std::size_t d) {
  if (d < 1) throw Error(ErrorCode::kInvalidSchmidt, "empty Schmidt vector");
  std::vector<double> s(d, 0.0);
  s[0] = 1.0;
  return SchmidtVector(std::move(s));
}

double SchmidtVector::leading_product() const noexcept {
  return s_.size() < 2 ? 0.0 : s_[0] * s_[1];
}

RobustnessReport robustness_quantities(const SchmidtVector& s) {
  const auto c = s.coefficients();
  const double sum = std::accumulate(c.begin(), c.end(), 0.0);
  const double dd = static_cast<double>(s.d());
  const double s01 = s.leading_product();

  RobustnessReport r;
  r.t = sum * sum;
  r.robustness = r.t - 1.0;
  r.total_dimension = s.d() * s.d();
  r.random_robustness = static_cast<double>(r.total_dimension) * s01;
  r.beta_lower_separable = s.d() < 2 ? 0.0 : r.robustness / (dd * dd - 1.0);
  r.beta_lower_homogeneous = s01 / (1.0 + s01);
  return r;
}

double ppt_beta_witness(const SchmidtVector& s) {
  const std::size_t d = s.d();
  if (d > 12) throw Error(ErrorCode::kDimensionTooLarge, "ppt_beta_witness supports d <= 12");
  ComplexVector psi(d * d);
  for (std::size_t j = 0; j < d; ++j) psi[j * d + j] = s[j];
  const ComplexMatrix rho = ComplexMatrix::outer(psi, psi);
  const Spectrum spec = hermitian_eig(partial_transpose_b(rho, d));
  return -spec.eigenvalues.back();
}

}  // namespace entverify

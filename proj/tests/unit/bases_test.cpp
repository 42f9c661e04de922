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

#include "entverify/bases.hpp"

#include <gtest/gtest.h>

#include <algorithm>
#include <cmath>
#include <random>

#include "entverify/error.hpp"
#include "fixtures.hpp"

namespace entverify {
namespace {

ErrorCode code_of(auto&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  ADD_FAILURE() << "no error thrown";
  return ErrorCode::kDomainError;
}

// Direct overlap check, independent of is_mutually_unbiased.
double max_unbiasedness_defect(const Basis& a, const Basis& b) {
  double worst = 0.0;
  for (const auto& u : a.kets())
    for (const auto& v : b.kets())
      worst = std::max(worst, std::abs(std::norm(inner(u, v)) - 1.0 / double(a.d())));
  return worst;
}

TEST(WeylPair, CommutationAndOrder) {
  for (std::size_t d = 2; d <= 9; ++d) {
    const WeylPair w = weyl_pair(d);
    EXPECT_LT(max_abs_diff(w.z * w.x, w.x * w.z * w.omega), 1e-12);
    ComplexMatrix zd = ComplexMatrix::identity(d);
    ComplexMatrix xd = ComplexMatrix::identity(d);
    for (std::size_t k = 0; k < d; ++k) {
      zd = zd * w.z;
      xd = xd * w.x;
    }
    EXPECT_LT(max_abs_diff(zd, ComplexMatrix::identity(d)), 1e-12);
    EXPECT_LT(max_abs_diff(xd, ComplexMatrix::identity(d)), 1e-12);
    EXPECT_EQ(w.x(1 % d, 0), Complex(1.0));
  }
  EXPECT_EQ(code_of([] { weyl_pair(1); }), ErrorCode::kInvalidDimension);
}

TEST(Basis, ValidatesOrthonormality) {
  EXPECT_EQ(code_of([] { Basis({{1.0, 0.0}, {1.0, 0.0}}); }), ErrorCode::kInvalidBasis);
  EXPECT_EQ(code_of([] { Basis({{1.0, 0.0}, {0.0, 1.1}}); }), ErrorCode::kInvalidBasis);
  EXPECT_EQ(code_of([] { Basis({{1.0, 0.0}}); }), ErrorCode::kInvalidBasis);
  EXPECT_NO_THROW(Basis({{0.0, 1.0}, {1.0, 0.0}}));
}

TEST(Basis, FourierIsShiftEigenbasisAndUnbiasedToComputational) {
  for (std::size_t d = 2; d <= 8; ++d) {
    const Basis f = fourier_basis(d);
    const Basis c = computational_basis(d);
    EXPECT_TRUE(is_mutually_unbiased(f, c));
    EXPECT_FALSE(is_mutually_unbiased(c, c));
    const WeylPair w = weyl_pair(d);
    for (const auto& k : f.kets()) {
      const ComplexVector xk = w.x * std::span<const Complex>(k);
      EXPECT_NEAR(std::abs(inner(k, xk)), 1.0, 1e-12);
    }
  }
  EXPECT_EQ(code_of([] { is_mutually_unbiased(fourier_basis(2), fourier_basis(3)); }),
            ErrorCode::kDimensionMismatch);
}

TEST(Basis, UnitaryEigenbasisIsPhaseNormalized) {
  const WeylPair w = weyl_pair(5);
  const Basis b = unitary_eigenbasis(w.x * w.z, kDefaultTolerance, "XZ");
  EXPECT_EQ(b.label(), "XZ");
  for (const auto& k : b.kets()) {
    const auto first = std::find_if(k.begin(), k.end(), [](Complex z) { return std::abs(z) > 1e-8; });
    ASSERT_NE(first, k.end());
    EXPECT_NEAR(first->imag(), 0.0, 1e-12);
    EXPECT_GT(first->real(), 0.0);
  }
}

TEST(Basis, ConjugateBasis) {
  std::mt19937_64 rng(7);
  const Basis b = testing::random_basis(3, rng);
  const Basis c = conjugate_basis(b);
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = 0; j < 3; ++j) EXPECT_EQ(c.ket(i)[j], std::conj(b.ket(i)[j]));
  EXPECT_EQ(c.label(), b.label() + "*");
}

TEST(Basis, CanonicalFormIgnoresOrderAndPhases) {
  std::mt19937_64 rng(8);
  std::uniform_real_distribution<double> angle(0.0, 6.283185307179586);
  for (std::size_t d = 2; d <= 6; ++d) {
    const Basis b = testing::random_basis(d, rng);
    std::vector<ComplexVector> kets = b.kets();
    std::shuffle(kets.begin(), kets.end(), rng);
    for (auto& k : kets) {
      const Complex ph = std::polar(1.0, angle(rng));
      for (auto& z : k) z *= ph;
    }
    const Basis x = canonicalize(b);
    const Basis y = canonicalize(Basis(std::move(kets)));
    for (std::size_t i = 0; i < d; ++i) EXPECT_LT(max_abs_diff(x.ket(i), y.ket(i)), 1e-12);
  }
}

TEST(MubSet, CompleteSetsForPrimes) {
  for (std::size_t p : {2u, 3u, 5u, 7u, 11u}) {
    const auto bases = mub_set(p, p + 1);
    ASSERT_EQ(bases.size(), p + 1);
    EXPECT_EQ(bases[0].label(), "Z");
    EXPECT_EQ(bases[1].label(), "X");
    EXPECT_EQ(bases[2].label(), "XZ");
    if (p >= 3) EXPECT_EQ(bases[3].label(), "XZ^2");
    for (std::size_t a = 0; a < bases.size(); ++a)
      for (std::size_t b = a + 1; b < bases.size(); ++b)
        EXPECT_LT(max_unbiasedness_defect(bases[a], bases[b]), 1e-10) << p << ' ' << a << b;
  }
}

TEST(MubSet, ThreeBasesInAnyDimension) {
  for (std::size_t d = 2; d <= 12; ++d) {
    const auto bases = mub_set(d, 3);
    ASSERT_EQ(bases.size(), 3u);
    EXPECT_LT(max_unbiasedness_defect(bases[0], bases[1]), 1e-10);
    EXPECT_LT(max_unbiasedness_defect(bases[0], bases[2]), 1e-10);
    EXPECT_LT(max_unbiasedness_defect(bases[1], bases[2]), 1e-10);
  }
}

TEST(MubSet, UnsupportedRequests) {
  EXPECT_EQ(code_of([] { mub_set(9, 4); }), ErrorCode::kUnsupportedDimension);
  EXPECT_EQ(code_of([] { mub_set(4, 4); }), ErrorCode::kUnsupportedDimension);
  EXPECT_EQ(code_of([] { mub_set(3, 5); }), ErrorCode::kUnsupportedDimension);
  EXPECT_EQ(code_of([] { mub_set(1, 1); }), ErrorCode::kInvalidDimension);
  EXPECT_EQ(mub_set(4, 1).size(), 1u);
}

TEST(Primes, SmallNumbers) {
  const std::vector<std::size_t> primes{2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31};
  for (std::size_t n = 0; n <= 31; ++n) {
    EXPECT_EQ(is_prime(n), std::count(primes.begin(), primes.end(), n) == 1) << n;
  }
}

}  // namespace
}  // namespace entverify

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

#include "entverify/error.hpp"

namespace entverify {

std::string_view error_code_name(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::kNotHermitian: return "NotHermitian";
    case ErrorCode::kNotUnitary: return "NotUnitary";
    case ErrorCode::kDegenerateSpectrum: return "DegenerateSpectrum";
    case ErrorCode::kNoConvergence: return "NoConvergence";
    case ErrorCode::kDimensionMismatch: return "DimensionMismatch";
    case ErrorCode::kInvalidDimension: return "InvalidDimension";
    case ErrorCode::kUnsupportedDimension: return "UnsupportedDimension";
    case ErrorCode::kUnbiasednessViolation: return "UnbiasednessViolation";
    case ErrorCode::kInvalidBasis: return "InvalidBasis";
    case ErrorCode::kInvalidProjector: return "InvalidProjector";
    case ErrorCode::kWeightError: return "WeightError";
    case ErrorCode::kLambdaOutOfRange: return "LambdaOutOfRange";
    case ErrorCode::kNotOptimalStrategy: return "NotOptimalStrategy";
    case ErrorCode::kRateOutOfRange: return "RateOutOfRange";
    case ErrorCode::kPreconditionViolation: return "PreconditionViolation";
    case ErrorCode::kNotConjugateBasisForm: return "NotConjugateBasisForm";
    case ErrorCode::kDomainError: return "DomainError";
    case ErrorCode::kInvalidSchmidt: return "InvalidSchmidt";
    case ErrorCode::kDimensionTooLarge: return "DimensionTooLarge";
    case ErrorCode::kEpsilonOutOfRange: return "EpsilonOutOfRange";
    case ErrorCode::kParseError: return "ParseError";
    case ErrorCode::kIoError: return "IoError";
  }
  return "Unknown";
}

}  // namespace entverify

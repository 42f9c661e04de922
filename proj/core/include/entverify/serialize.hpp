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

// JSON encodings of bases, strategies and simulation results. Complex numbers
// are written as [re, im] pairs.

#include <string>

#include "entverify/bases.hpp"
#include "entverify/counting.hpp"
#include "entverify/sim.hpp"
#include "entverify/strategy.hpp"

namespace entverify {

/// {"label": ..., "d": ..., "kets": [[[re, im], ...], ...]}
std::string basis_to_json(const Basis& b, int indent = -1);
/// Throws ParseError on malformed input and InvalidBasis on non-orthonormal kets.
Basis basis_from_json(const std::string& text);

/// {"d", "beta", "nu", "flags": {...}, "tests": [{"p", "basis" | "trivial": true}]}
std::string strategy_to_json(const Strategy& s, int indent = -1);

/// {"seed", "trials", "passes", "per_test": [{"test", "uses", "passes"}]}
std::string run_result_to_json(const RunResult& r, int indent = -1);
RunResult run_result_from_json(const std::string& text);

std::string count_plan_to_json(const CountPlan& plan, int indent = -1);

}  // namespace entverify

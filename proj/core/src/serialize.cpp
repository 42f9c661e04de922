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

#include "entverify/serialize.hpp"

#include <json.hpp>

#include "entverify/error.hpp"

namespace entverify {
namespace {

using nlohmann::json;

json ket_to_json(const ComplexVector& v) {
  json out = json::array();
  for (const Complex& z : v) out.push_back({z.real(), z.imag()});
  return out;
}

json basis_json(const Basis& b) {
  json kets = json::array();
  for (const auto& k : b.kets()) kets.push_back(ket_to_json(k));
  return {{"label", b.label()}, {"d", b.d()}, {"kets", std::move(kets)}};
}

json parse(const std::string& text) {
  try {
    return json::parse(text);
  } catch (const json::exception& e) {
    throw Error(ErrorCode::kParseError, e.what());
  }
}

}  // namespace

std::string basis_to_json(const Basis& b, int indent) { return basis_json(b).dump(indent); }

Basis basis_from_json(const std::string& text) {
  const json j = parse(text);
  try {
    std::vector<ComplexVector> kets;
    for (const auto& k : j.at("kets")) {
      ComplexVector v;
      for (const auto& z : k) v.emplace_back(z.at(0).get<double>(), z.at(1).get<double>());
      kets.push_back(std::move(v));
    }
    return Basis(std::move(kets), j.value("label", std::string()));
  } catch (const json::exception& e) {
    throw Error(ErrorCode::kParseError, e.what());
  }
}

std::string strategy_to_json(const Strategy& s, int indent) {
  json tests = json::array();
  for (const auto& t : s.tests()) {
    json entry = {{"p", t.probability}};
    if (t.test.source_basis) {
      entry["basis"] = basis_json(*t.test.source_basis);
    } else if (t.test.is_trivial()) {
      entry["trivial"] = true;
    } else {
      entry["rank"] = t.test.rank;
    }
    tests.push_back(std::move(entry));
  }
  const auto& f = s.flags();
  json out = {
      {"d", s.d()},
      {"beta", s.beta()},
      {"nu", s.nu()},
      {"flags",
       {{"parsimonious", f.parsimonious},
        {"optimal", f.optimal},
        {"perfect", f.perfect},
        {"homogeneous", f.homogeneous},
        {"singular", f.singular}}},
      {"tests", std::move(tests)},
  };
  return out.dump(indent);
}

std::string run_result_to_json(const RunResult& r, int indent) {
  json per_test = json::array();
  for (std::size_t l = 0; l < r.per_test.size(); ++l) {
    per_test.push_back(
        {{"test", l}, {"uses", r.per_test[l].uses}, {"passes", r.per_test[l].passes}});
  }
  json out = {{"seed", r.seed},
              {"trials", r.trials},
              {"passes", r.passes},
              {"per_test", std::move(per_test)}};
  return out.dump(indent);
}

RunResult run_result_from_json(const std::string& text) {
  const json j = parse(text);
  try {
    RunResult r;
    r.seed = j.at("seed").get<std::uint64_t>();
    r.trials = j.at("trials").get<std::uint64_t>();
    r.passes = j.at("passes").get<std::uint64_t>();
    for (const auto& t : j.at("per_test")) {
      const auto l = t.at("test").get<std::size_t>();
      if (l >= r.per_test.size()) r.per_test.resize(l + 1);
      r.per_test[l] = {t.at("uses").get<std::uint64_t>(), t.at("passes").get<std::uint64_t>()};
    }
    return r;
  } catch (const json::exception& e) {
    throw Error(ErrorCode::kParseError, e.what());
  }
}

std::string count_plan_to_json(const CountPlan& plan, int indent) {
  json out = {{"scenario", std::string(scenario_name(plan.scenario))},
              {"epsilon", plan.epsilon},
              {"delta", plan.delta},
              {"nu_or_lambda", plan.nu_or_lambda},
              {"n", plan.n},
              {"one_test", plan.one_test},
              {"branch", std::string(plan.branch)}};
  if (plan.d != 0) out["d"] = plan.d;
  if (plan.k_star) out["k_star"] = *plan.k_star;
  if (plan.k_minus) out["k_minus"] = *plan.k_minus;
  if (plan.k_plus) out["k_plus"] = *plan.k_plus;
  if (plan.p1) out["p1"] = *plan.p1;
  if (plan.p2) out["p2"] = *plan.p2;
  return out.dump(indent);
}

}  // namespace entverify

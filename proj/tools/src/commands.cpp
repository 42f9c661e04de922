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

#include "entverify_cli/commands.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include "entverify/bases.hpp"
#include "entverify/counting.hpp"
#include "entverify/error.hpp"
#include "entverify/robustness.hpp"
#include "entverify/serialize.hpp"
#include "entverify/sim.hpp"
#include "entverify/strategy.hpp"

namespace entverify::cli {
namespace {

std::string num(double x) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.12g", x);
  return buf;
}

void write_file(const std::string& path, const std::string& content) {
  std::ofstream f(path, std::ios::binary);
  if (!f) throw Error(ErrorCode::kIoError, "cannot open " + path + " for writing");
  f << content;
  if (!f) throw Error(ErrorCode::kIoError, "failed writing " + path);
}

std::string flag_list(const StrategyFlags& f) {
  std::string s;
  auto add = [&](bool on, const char* name) {
    if (!on) return;
    if (!s.empty()) s += ' ';
    s += name;
  };
  add(f.parsimonious, "parsimonious");
  add(f.optimal, "optimal");
  add(f.perfect, "perfect");
  add(f.homogeneous, "homogeneous");
  add(f.singular, "singular");
  return s.empty() ? "none" : s;
}

Strategy make_strategy(std::size_t d, std::size_t g, std::optional<double> lambda) {
  Strategy s = build_strategy(WeightedBasisSet::uniform(mub_set(d, g)));
  if (lambda) return homogenize(s, *lambda);
  return s;
}

// ---------------------------------------------------------------------------

struct StrategyArgs {
  std::size_t d = 0;
  std::size_t g = 0;
  std::optional<double> lambda;
  std::string out;
};

void cmd_strategy(const StrategyArgs& a, std::ostream& out) {
  const Strategy s = make_strategy(a.d, a.g, a.lambda);
  out << "d = " << s.d() << ", tests = " << s.tests().size() << '\n';
  for (const auto& t : s.tests()) {
    const std::string name = t.test.source_basis ? t.test.source_basis->label() : "trivial";
    out << "  p = " << num(t.probability) << "  " << name << '\n';
  }
  out << "beta = " << num(s.beta()) << '\n';
  out << "nu = " << num(s.nu()) << '\n';
  out << "flags: " << flag_list(s.flags()) << '\n';
  if (!a.out.empty()) write_file(a.out, strategy_to_json(s, 2) + "\n");
}

// ---------------------------------------------------------------------------

struct CountArgs {
  std::string scenario;
  std::optional<double> epsilon;
  double delta = 0.0;
  std::optional<double> nu;
  std::optional<double> lambda;
  std::optional<std::size_t> d;
  std::optional<std::size_t> g;
  std::string out;
};

double require(const std::optional<double>& v, const char* flag, const std::string& scenario) {
  if (!v) throw Error(ErrorCode::kDomainError, scenario + " requires " + flag);
  return *v;
}

// Spectral gap from --nu, or from the strategy implied by --d/--g.
double resolve_nu(const CountArgs& a) {
  if (a.nu) return *a.nu;
  if (a.g) {
    if (*a.g < 2) throw Error(ErrorCode::kDomainError, "--g must be at least 2");
    return 1.0 - 1.0 / static_cast<double>(*a.g);
  }
  if (a.d) {
    const double dd = static_cast<double>(*a.d);
    return dd / (dd + 1.0);
  }
  throw Error(ErrorCode::kDomainError, a.scenario + " requires --nu, --g or --d");
}

std::size_t require_d(const CountArgs& a) {
  if (!a.d) throw Error(ErrorCode::kDomainError, a.scenario + " requires --d");
  return *a.d;
}

void print_plan(const CountPlan& p, std::ostream& out) {
  out << "scenario = " << scenario_name(p.scenario) << '\n';
  if (p.d != 0) out << "d = " << p.d << '\n';
  out << "epsilon = " << num(p.epsilon) << '\n';
  out << "delta = " << num(p.delta) << '\n';
  out << (p.scenario == Scenario::kAdversarialHomogeneous ? "lambda = " : "nu = ")
      << num(p.nu_or_lambda) << '\n';
  out << "N = " << p.n << '\n';
  if (p.k_star) out << "k* = " << *p.k_star << '\n';
  if (p.k_minus) out << "k- = " << *p.k_minus << ", k+ = " << *p.k_plus << '\n';
  if (p.p1) out << "p1 = " << num(*p.p1) << ", p2 = " << num(*p.p2) << '\n';
  out << "branch = " << p.branch << '\n';
  out << "one test suffices = " << (p.one_test ? "yes" : "no") << '\n';
}

void cmd_count(const CountArgs& a, std::ostream& out) {
  CountPlan plan;
  const std::string& sc = a.scenario;
  if (sc == "nonadversarial") {
    plan = plan_nonadversarial(require(a.epsilon, "--epsilon", sc), a.delta, resolve_nu(a));
    if (a.d) plan.d = *a.d;
  } else if (sc == "adversarial-singular") {
    plan = plan_adversarial_singular(require(a.epsilon, "--epsilon", sc), a.delta, resolve_nu(a));
    if (a.d) plan.d = *a.d;
  } else if (sc == "adversarial-homogeneous") {
    plan = tests_adversarial_homogeneous(require(a.epsilon, "--epsilon", sc), a.delta,
                                         require(a.lambda, "--lambda", sc));
  } else if (sc == "entanglement-nonadversarial") {
    const std::size_t d = require_d(a);
    const double nu = resolve_nu(a);
    plan.scenario = Scenario::kNonadversarial;
    plan.d = d;
    plan.epsilon = static_cast<double>(d - 1) / static_cast<double>(d);
    plan.delta = a.delta;
    plan.nu_or_lambda = nu;
    plan.n = entanglement_tests_nonadversarial(d, a.delta, nu);
    plan.one_test = plan.n == 1;
    plan.branch = "ln(delta)/ln(1-nu(d-1)/d)";
  } else if (sc == "entanglement-adversarial") {
    const std::size_t d = require_d(a);
    const double lambda = a.lambda.value_or(2.0 / (static_cast<double>(d) + 1.0));
    plan = plan_entanglement_adversarial(d, a.delta, lambda);
  } else {
    throw Error(ErrorCode::kDomainError, "unknown scenario '" + sc + "'");
  }
  print_plan(plan, out);
  if (!a.out.empty()) write_file(a.out, count_plan_to_json(plan, 2) + "\n");
}

// ---------------------------------------------------------------------------

struct FigureArgs {
  std::string name;
  double delta = 0.0;
  std::optional<std::size_t> d_min;
  std::optional<std::size_t> d_max;
  std::string out;
};

std::string figure_ed(const FigureArgs& a) {
  const std::size_t lo = std::max<std::size_t>(2, a.d_min.value_or(2));
  const std::size_t hi = a.d_max.value_or(100);
  if (hi < lo) throw Error(ErrorCode::kDomainError, "empty dimension range");
  if (!(a.delta > 0.0 && a.delta < 1.0)) {
    throw Error(ErrorCode::kDomainError, "delta must lie in (0, 1)");
  }
  std::ostringstream csv;
  csv << "d,N_nonadversarial,N_adversarial\r\n";
  for (std::size_t d = lo; d <= hi; ++d) {
    const double lambda = 2.0 / (static_cast<double>(d) + 1.0);
    csv << d << ',' << entanglement_tests_optimal(d, a.delta) << ','
        << entanglement_tests_adversarial(d, a.delta, lambda) << "\r\n";
  }
  return csv.str();
}

std::string figure_ed_one_test(const FigureArgs& a) {
  const OneTestThreshold t(a.delta);
  const std::size_t lo = std::max(t.d_star(), a.d_min.value_or(t.d_star()));
  const std::size_t hi = a.d_max.value_or(t.d_star() + 50);
  if (hi < lo) throw Error(ErrorCode::kDomainError, "empty dimension range");
  const double mid = 1.0 - std::sqrt(1.0 - a.delta);
  std::ostringstream csv;
  csv << "d,lambda_minus,lambda_plus,2/(d+1),1-sqrt(1-delta),1/(d+1)\r\n";
  for (std::size_t d = lo; d <= hi; ++d) {
    const auto [minus, plus] = t.lambda_bounds(d);
    const double dd = static_cast<double>(d);
    csv << d << ',' << num(minus) << ',' << num(plus) << ',' << num(2.0 / (dd + 1.0)) << ','
        << num(mid) << ',' << num(1.0 / (dd + 1.0)) << "\r\n";
  }
  return csv.str();
}

void cmd_figure(const FigureArgs& a, std::ostream& out) {
  const std::string csv = a.name == "ed" ? figure_ed(a) : figure_ed_one_test(a);
  if (a.out.empty()) {
    out << csv;
  } else {
    write_file(a.out, csv);
    out << "wrote " << a.out << '\n';
  }
}

// ---------------------------------------------------------------------------

struct SimulateArgs {
  std::size_t d = 0;
  std::size_t g = 0;
  double epsilon = 0.0;
  std::uint64_t n = 0;
  std::optional<std::uint64_t> seed;
  std::string model = "depolarized";
  std::optional<double> lambda;
  unsigned workers = 1;
  std::string out;
};

std::uint64_t resolve_seed(const std::optional<std::uint64_t>& flag) {
  if (flag) return *flag;
  if (const char* env = std::getenv("ENTVERIFY_SEED"); env != nullptr && *env != '\0') {
    char* end = nullptr;
    const unsigned long long v = std::strtoull(env, &end, 0);
    if (end == env || *end != '\0') {
      throw Error(ErrorCode::kParseError, "ENTVERIFY_SEED is not an unsigned integer");
    }
    return v;
  }
  return 1;
}

void cmd_simulate(const SimulateArgs& a, std::ostream& out) {
  const Strategy s = make_strategy(a.d, a.g, a.lambda);
  const NoisyStateModel model =
      a.model == "worst" ? worst_case_state(s, a.epsilon) : depolarized_state(a.d, a.epsilon);
  const std::uint64_t seed = resolve_seed(a.seed);
  const RunResult r = run_protocol(s, model, a.n, seed, a.workers);

  const double rate = r.pass_rate();
  const double sigma = a.n == 0 ? 0.0 : std::sqrt(rate * (1.0 - rate) / static_cast<double>(a.n));
  out << "seed = " << r.seed << '\n';
  out << "passes = " << r.passes << '/' << r.trials << '\n';
  out << "empirical rate = " << num(rate) << " +- " << num(sigma) << '\n';
  out << "analytic rate = " << num(analytic_pass_probability(s, model)) << '\n';
  if (s.flags().optimal && r.trials > 0) {
    const FidelityEstimate f = estimate_fidelity(s, r);
    out << "fidelity estimate = " << num(f.estimate) << " +- " << num(f.standard_error) << '\n';
  } else {
    out << "fidelity estimate = n/a (strategy not optimal)\n";
  }
  out << "true fidelity = " << num(1.0 - model.epsilon) << '\n';
  if (!a.out.empty()) write_file(a.out, run_result_to_json(r, 2) + "\n");
}

// ---------------------------------------------------------------------------

struct RobustnessArgs {
  std::vector<double> schmidt;
  std::optional<std::size_t> d;
};

void cmd_robustness(const RobustnessArgs& a, std::ostream& out) {
  if (a.schmidt.empty() && !a.d) {
    throw Error(ErrorCode::kDomainError, "robustness requires --schmidt or --d");
  }
  const SchmidtVector s =
      a.schmidt.empty() ? SchmidtVector::maximally_entangled(*a.d) : SchmidtVector(a.schmidt);
  const RobustnessReport r = robustness_quantities(s);
  out << "d = " << s.d() << ", D = " << r.total_dimension << '\n';
  out << "E_R = " << num(r.robustness) << '\n';
  out << "R = " << num(r.random_robustness) << '\n';
  out << "T = " << num(r.t) << '\n';
  out << "beta bound (separable tests) = " << num(r.beta_lower_separable) << '\n';
  out << "beta bound (homogeneous) = " << num(r.beta_lower_homogeneous) << '\n';
  if (s.d() <= 12) out << "ppt witness = " << num(ppt_beta_witness(s)) << '\n';
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Verification of maximally entangled states with conjugate-basis tests",
               "entverify"};
  app.require_subcommand(1);
  std::function<void()> action;

  StrategyArgs sa;
  auto* strategy = app.add_subcommand("strategy", "Build a uniform MUB strategy");
  strategy->add_option("--d", sa.d, "Local dimension")->required();
  strategy->add_option("--g", sa.g, "Number of bases")->required();
  strategy->add_option("--lambda", sa.lambda, "Homogenize to beta = lambda");
  strategy->add_option("--out", sa.out, "Write the strategy as JSON");
  strategy->callback([&] { action = [&] { cmd_strategy(sa, out); }; });

  CountArgs ca;
  auto* count = app.add_subcommand("count", "Number of tests for a verification task");
  count->add_option("--scenario", ca.scenario)
      ->required()
      ->check(CLI::IsMember({"nonadversarial", "adversarial-singular", "adversarial-homogeneous",
                             "entanglement-nonadversarial", "entanglement-adversarial"}));
  count->add_option("--epsilon", ca.epsilon, "Infidelity to reject");
  count->add_option("--delta", ca.delta, "Significance level")->required();
  count->add_option("--nu", ca.nu, "Spectral gap");
  count->add_option("--lambda", ca.lambda, "beta of a homogeneous strategy");
  count->add_option("--d", ca.d, "Local dimension");
  count->add_option("--g", ca.g, "Number of tests of a parsimonious strategy");
  count->add_option("--out", ca.out, "Write the plan as JSON");
  count->callback([&] { action = [&] { cmd_count(ca, out); }; });

  FigureArgs fa;
  auto* figure = app.add_subcommand("figure", "Emit a data table as CSV");
  figure->add_option("name", fa.name)->required()->check(CLI::IsMember({"ed", "ed-one-test"}));
  figure->add_option("--delta", fa.delta, "Significance level")->required();
  figure->add_option("--d-min", fa.d_min, "First dimension");
  figure->add_option("--d-max", fa.d_max, "Last dimension");
  figure->add_option("--out", fa.out, "Write CSV to a file instead of stdout");
  figure->callback([&] { action = [&] { cmd_figure(fa, out); }; });

  SimulateArgs ma;
  auto* simulate = app.add_subcommand("simulate", "Monte Carlo run of the protocol");
  simulate->add_option("--d", ma.d, "Local dimension")->required();
  simulate->add_option("--g", ma.g, "Number of bases")->required();
  simulate->add_option("--epsilon", ma.epsilon, "Infidelity of the noisy state")->required();
  simulate->add_option("--n", ma.n, "Number of rounds")->required();
  simulate->add_option("--seed", ma.seed, "RNG seed (default: $ENTVERIFY_SEED, then 1)");
  simulate->add_option("--model", ma.model, "Noise model")
      ->check(CLI::IsMember({"depolarized", "worst"}));
  simulate->add_option("--lambda", ma.lambda, "Homogenize to beta = lambda");
  simulate->add_option("--workers", ma.workers, "Worker threads")->check(CLI::PositiveNumber);
  simulate->add_option("--out", ma.out, "Write the run result as JSON");
  simulate->callback([&] { action = [&] { cmd_simulate(ma, out); }; });

  RobustnessArgs ra;
  auto* robustness = app.add_subcommand("robustness", "Robustness quantities of a pure state");
  robustness->add_option("--schmidt", ra.schmidt, "Schmidt coefficients")->delimiter(',');
  robustness->add_option("--d", ra.d, "Maximally entangled state of this dimension");
  robustness->callback([&] { action = [&] { cmd_robustness(ra, out); }; });

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return 0;
  } catch (const CLI::ParseError& e) {
    std::string msg = e.what();
    std::replace(msg.begin(), msg.end(), '\n', ' ');
    err << "error: ParseError: " << msg << '\n';
    return 2;
  }

  try {
    action();
  } catch (const Error& e) {
    std::string msg = e.what();
    std::replace(msg.begin(), msg.end(), '\n', ' ');
    err << "error: " << error_code_name(e.code()) << ": " << msg << '\n';
    return e.code() == ErrorCode::kParseError ? 2 : 1;
  }
  return 0;
}

}  // namespace entverify::cli

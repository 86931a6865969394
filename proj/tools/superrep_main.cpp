// Copyright 2026 The superrep Authors
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

// Command line front end. Subcommands print a JSON summary to stdout; data
// files (CSV) are written next to a .manifest.json reproducibility record.
// Exit codes: 0 success, 2 domain or usage error, 3 I/O error, 4 internal
// consistency failure.

#include <bit>
#include <cmath>
#include <complex>
#include <cstdint>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <numbers>
#include <random>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "superrep/combinatorics.hpp"
#include "superrep/emulation.hpp"
#include "superrep/errors.hpp"
#include "superrep/manifest.hpp"
#include "superrep/metrology.hpp"
#include "superrep/oracle.hpp"
#include "superrep/protocol.hpp"

namespace {

using nlohmann::json;
using namespace superrep;

std::string format_double(double value) {
  char buffer[64];
  std::snprintf(buffer, sizeof buffer, "%.17g", value);
  return buffer;
}

void write_text_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) {
    throw IoError("cannot open '" + path + "' for writing");
  }
  out << content;
  if (!out.good()) {
    throw IoError("failed while writing '" + path + "'");
  }
}

GammaPolicy parse_policy(const std::string& name) {
  return name == "zero" ? GammaPolicy::Zero : GammaPolicy::Random;
}

json config_to_json(const ReplicationConfig& config) {
  json doc;
  doc["m"] = config.m;
  doc["n"] = config.n;
  doc["alpha"] = config.alpha;
  doc["beta"] = config.beta;
  doc["k_minus"] = config.k_minus;
  doc["k_plus"] = config.k_plus;
  doc["window_clamped"] = config.window_clamped;
  doc["bulk_sector_count"] = config.bulk_sector_count();
  if (config.bulk_sector_count() > 0) {
    doc["bulk_first_sector"] = config.bulk_first_sector();
    doc["bulk_last_sector"] = config.bulk_last_sector();
  }
  return doc;
}

void emit(const json& doc) { std::cout << doc.dump(2) << "\n"; }

std::vector<double> uniform_theta_grid(int count) {
  if (count < 1) {
    throw std::domain_error("need at least one angle");
  }
  std::vector<double> thetas(count);
  for (int i = 0; i < count; ++i) {
    thetas[i] = 2.0 * std::numbers::pi * i / count;
  }
  return thetas;
}

// Canonical spot-check angles: endpoints of interest plus two generic values.
std::vector<double> canonical_thetas() {
  return {0.0, 0.3, std::numbers::pi / 2.0, std::numbers::pi, 2.5};
}

/// Platform-stable Box-Muller state: every draw comes from the generator's
/// top 53 bits, so the same seed gives the same state everywhere.
DenseState random_state(int qubit_count, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  const auto uniform01 = [&rng]() {
    return static_cast<double>(rng() >> 11) * 0x1.0p-53;
  };
  DenseState state;
  state.qubit_count = qubit_count;
  state.amplitudes.resize(std::uint64_t{1} << qubit_count);
  for (auto& amp : state.amplitudes) {
    const double u1 = 1.0 - uniform01();  // (0, 1]
    const double u2 = uniform01();
    const double radius = std::sqrt(-2.0 * std::log(u1));
    amp = {radius * std::cos(2.0 * std::numbers::pi * u2),
           radius * std::sin(2.0 * std::numbers::pi * u2)};
  }
  const double norm = std::sqrt(state.squared_norm());
  for (auto& amp : state.amplitudes) {
    amp /= norm;
  }
  return state;
}

struct PlanArgs {
  int m = 0;
  double alpha = 1.0;
  double beta = 0.6;
};

int cmd_plan(const PlanArgs& args) {
  const ReplicationConfig config = plan_replication(args.m, args.alpha, args.beta);
  const FidelityBounds bounds = worst_case_bound(config);
  json doc = config_to_json(config);
  doc["bulk_mass"] = bulk_mass(config.m, config.k_minus, config.k_plus);
  doc["gaussian_bound"] = bounds.gaussian_figure;
  doc["triangle_floor"] = bounds.triangle_floor;
  emit(doc);
  return 0;
}

struct SweepArgs {
  int m = 0;
  double alpha = 1.0;
  double beta = 0.6;
  std::string policy = "random";
  std::uint64_t seed = 0;
  int theta_count = 64;
  std::string out;
};

int cmd_sweep(const SweepArgs& args) {
  const ReplicationConfig config = plan_replication(args.m, args.alpha, args.beta);
  const std::vector<double> thetas = uniform_theta_grid(args.theta_count);
  const std::vector<FidelityReport> reports =
      fidelity_sweep(config, parse_policy(args.policy), args.seed, thetas);

  std::string csv =
      "theta,process_fidelity,average_state_fidelity,bulk_mass,"
      "gaussian_bound,triangle_floor\n";
  for (const FidelityReport& r : reports) {
    csv += format_double(r.theta) + ',' + format_double(r.process_fidelity) + ',' +
           format_double(r.average_state_fidelity) + ',' +
           format_double(r.bulk_mass) + ',' + format_double(r.gaussian_bound) +
           ',' + format_double(r.worst_case_bound) + '\n';
  }
  write_text_file(args.out, csv);

  RunManifest manifest;
  manifest.command = "sweep";
  manifest.parameters = {{"m", std::to_string(args.m)},
                         {"alpha", format_double(args.alpha)},
                         {"beta", format_double(args.beta)},
                         {"gamma_policy", args.policy},
                         {"theta_count", std::to_string(args.theta_count)},
                         {"out", args.out}};
  manifest.seed = args.seed;
  manifest.tool_version = tool_version_string();
  manifest.timestamp = current_timestamp_iso8601();
  const std::string manifest_path = args.out + ".manifest.json";
  write_text_file(manifest_path, manifest.to_json());

  json doc;
  doc["rows"] = reports.size();
  doc["output"] = args.out;
  doc["manifest_output"] = manifest_path;
  doc["config"] = config_to_json(config);
  emit(doc);
  return 0;
}

struct OracleCheckArgs {
  int max_m = 6;
  int max_n = 4;
  std::uint64_t seed = 1;
  int theta_count = 0;  // 0 selects the canonical spot-check set
  double perturb = 0.0;
};

int cmd_oracle_check(const OracleCheckArgs& args) {
  const std::vector<double> thetas =
      args.theta_count > 0 ? uniform_theta_grid(args.theta_count) : canonical_thetas();
  const OracleCheckResult result =
      run_oracle_equivalence(args.max_m, args.max_n, thetas, args.seed, args.perturb);
  json doc;
  doc["max_m"] = args.max_m;
  doc["max_n"] = args.max_n;
  doc["thetas"] = thetas;
  doc["configurations"] = result.configurations;
  doc["evaluations"] = result.evaluations;
  doc["max_abs_deviation"] = result.max_abs_deviation;
  doc["tolerance"] = result.tolerance;
  doc["passed"] = result.passed;
  emit(doc);
  return result.passed ? 0 : 4;
}

struct EmulateArgs {
  int n = 0;
  double theta = 0.0;
  std::uint64_t seed = 0;
  double alpha = 1.0;
  double beta = 0.6;
};

int cmd_emulate(const EmulateArgs& args) {
  const DenseState input = random_state(args.n, args.seed);
  const EmulationResult result = emulate_qubits_from_qudit(args.n, args.theta, input);

  // Independent target: the n-fold phase gate is diagonal with weight phases.
  double max_deviation = 0.0;
  for (std::uint64_t s = 0; s < input.amplitudes.size(); ++s) {
    const std::complex<double> expected =
        input.amplitudes[s] *
        std::polar(1.0, -args.theta * std::popcount(s));
    max_deviation =
        std::max(max_deviation, std::abs(result.state.amplitudes[s] - expected));
  }
  const bool passed = max_deviation <= 1e-12 && result.v_invocations == 1;

  json doc;
  doc["n"] = args.n;
  doc["theta"] = args.theta;
  doc["ladder_levels"] = args.n + 1;
  doc["min_ancilla_count"] = min_ancilla_count(args.n);
  doc["v_invocations"] = result.v_invocations;
  doc["max_abs_deviation"] = max_deviation;
  doc["passed"] = passed;
  if (args.n >= 2) {
    doc["bang_bang_spectrum"] = bang_bang_effective_spectrum(args.n + 1).eigenvalues;
    try {
      const SingleUseReplicationResult single = single_use_super_replication(
          args.n, args.alpha, args.beta, args.theta, GammaPolicy::Random, args.seed);
      json block;
      block["config"] = config_to_json(single.config);
      block["budget_slack"] = single.budget_slack;
      block["theta_effective"] = single.theta_effective;
      block["process_fidelity"] = single.report.process_fidelity;
      block["average_state_fidelity"] = single.report.average_state_fidelity;
      doc["single_use"] = block;
    } catch (const std::domain_error& err) {
      doc["single_use"] = {{"feasible", false}, {"reason", err.what()}};
    }
  }
  emit(doc);
  return passed ? 0 : 4;
}

struct MetrologyArgs {
  std::string state;
  int m = 0;
  double alpha = 1.0;
  double beta = 0.6;
  std::string policy = "random";
  std::uint64_t seed = 0;
  double theta = 0.0;
};

int cmd_metrology(const MetrologyArgs& args) {
  if (!(args.theta >= 0.0) || !(args.theta < 2.0 * std::numbers::pi)) {
    throw std::domain_error("metrology: theta must lie in [0, 2*pi)");
  }
  const ReplicationConfig config = plan_replication(args.m, args.alpha, args.beta);
  SymmetricState state;
  if (args.state == "plus") {
    state = plus_state(args.m);
  } else if (args.state == "ghz") {
    state = ghz_state(args.m);
  } else {
    state = uniform_bulk_state(config);
  }
  const SectorPhaseMap map =
      build_sector_map(config, parse_policy(args.policy), args.seed);

  json doc;
  doc["state"] = args.state;
  doc["m"] = args.m;
  doc["qfi"] = qfi(state);
  doc["theta"] = args.theta;
  doc["state_fidelity"] = state_fidelity_under_protocol(state, map, args.theta);
  doc["process_fidelity"] = process_fidelity(map, args.theta);
  doc["config"] = config_to_json(config);
  emit(doc);
  return 0;
}

struct ResourcesArgs {
  int n = 0;
  double alpha = 1.0;
  double beta = 0.6;
};

int cmd_resources(const ResourcesArgs& args) {
  const PrecisionResourceTable table =
      precision_resource_table(args.n, args.alpha, args.beta);
  json doc;
  doc["n_uses"] = table.n_uses;
  doc["product_copies"] = table.product_copies;
  doc["product_qfi"] = table.product_qfi;
  doc["ghz_qfi"] = table.ghz_qfi;
  doc["qudit_levels"] = table.qudit_levels;
  doc["uses_for_product_copies"] = table.uses_for_product_copies;
  doc["shot_noise_scaling"] = table.shot_noise_scaling;
  doc["heisenberg_scaling"] = table.heisenberg_scaling;
  emit(doc);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Deterministic replication of one-parameter diagonal gates"};
  app.set_version_flag("--version", tool_version_string());
  app.require_subcommand(1);

  const auto policy_check = CLI::IsMember({"zero", "random"});

  PlanArgs plan_args;
  CLI::App* plan = app.add_subcommand("plan", "Plan a replication window");
  plan->add_option("--m", plan_args.m, "Target copy count")->required();
  plan->add_option("--alpha", plan_args.alpha, "Window scale")->capture_default_str();
  plan->add_option("--beta", plan_args.beta, "Window exponent")->capture_default_str();

  SweepArgs sweep_args;
  CLI::App* sweep = app.add_subcommand("sweep", "Fidelity sweep over angles (CSV)");
  sweep->add_option("--m", sweep_args.m, "Target copy count")->required();
  sweep->add_option("--alpha", sweep_args.alpha, "Window scale")->capture_default_str();
  sweep->add_option("--beta", sweep_args.beta, "Window exponent")->capture_default_str();
  sweep->add_option("--gamma-policy", sweep_args.policy, "Non-bulk phase policy")->capture_default_str()
      ->check(policy_check);
  sweep->add_option("--seed", sweep_args.seed, "Seed for the random policy")->capture_default_str();
  sweep->add_option("--theta-count", sweep_args.theta_count,
                    "Uniform grid size on [0, 2*pi)")->capture_default_str();
  sweep->add_option("--out", sweep_args.out, "CSV output path")->required();

  OracleCheckArgs oracle_args;
  CLI::App* oracle =
      app.add_subcommand("oracle-check", "Closed form versus brute force");
  oracle->add_option("--max-m", oracle_args.max_m, "Largest copy count")->capture_default_str();
  oracle->add_option("--max-n", oracle_args.max_n, "Largest use budget")->capture_default_str();
  oracle->add_option("--seed", oracle_args.seed, "Seed for the random policy")->capture_default_str();
  oracle
      ->add_option("--theta-count", oracle_args.theta_count,
                   "Grid size; 0 uses the canonical spot checks")
      ->capture_default_str();
  oracle->add_option("--perturb", oracle_args.perturb,
                     "Bias added to the brute-force value (self test)")->capture_default_str();

  EmulateArgs emulate_args;
  CLI::App* emulate =
      app.add_subcommand("emulate", "One multi-level gate standing in for n uses");
  emulate->add_option("--n", emulate_args.n, "Qubit count to emulate")->required();
  emulate->add_option("--theta", emulate_args.theta, "Gate angle")->required();
  emulate->add_option("--seed", emulate_args.seed, "Seed for the probe state")->capture_default_str();
  emulate->add_option("--alpha", emulate_args.alpha, "Window scale")->capture_default_str();
  emulate->add_option("--beta", emulate_args.beta, "Window exponent")->capture_default_str();

  MetrologyArgs metrology_args;
  CLI::App* metrology =
      app.add_subcommand("metrology", "Phase-estimation figures of merit");
  metrology->add_option("--state", metrology_args.state, "Probe state")
      ->required()
      ->check(CLI::IsMember({"plus", "ghz", "bulk"}));
  metrology->add_option("--m", metrology_args.m, "Qubit count")->required();
  metrology->add_option("--alpha", metrology_args.alpha, "Window scale")->capture_default_str();
  metrology->add_option("--beta", metrology_args.beta, "Window exponent")->capture_default_str();
  metrology
      ->add_option("--gamma-policy", metrology_args.policy, "Non-bulk phase policy")->capture_default_str()
      ->check(policy_check);
  metrology->add_option("--seed", metrology_args.seed, "Seed for the random policy")->capture_default_str();
  metrology->add_option("--theta", metrology_args.theta, "Gate angle")->capture_default_str();

  ResourcesArgs resources_args;
  CLI::App* resources =
      app.add_subcommand("resources", "Sequential versus parallel precision budget");
  resources->add_option("--n", resources_args.n, "Sequential use count")->required();
  resources->add_option("--alpha", resources_args.alpha, "Window scale")->capture_default_str();
  resources->add_option("--beta", resources_args.beta, "Window exponent")->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& err) {
    const int code = app.exit(err);
    return code == 0 ? 0 : 2;
  }

  try {
    if (plan->parsed()) {
      return cmd_plan(plan_args);
    }
    if (sweep->parsed()) {
      return cmd_sweep(sweep_args);
    }
    if (oracle->parsed()) {
      return cmd_oracle_check(oracle_args);
    }
    if (emulate->parsed()) {
      return cmd_emulate(emulate_args);
    }
    if (metrology->parsed()) {
      return cmd_metrology(metrology_args);
    }
    if (resources->parsed()) {
      return cmd_resources(resources_args);
    }
  } catch (const IoError& err) {
    std::cerr << "error: " << err.what() << "\n";
    return 3;
  } catch (const InternalConsistencyError& err) {
    std::cerr << "error: " << err.what() << "\n";
    return 4;
  } catch (const std::domain_error& err) {
    std::cerr << "error: " << err.what() << "\n";
    return 2;
  } catch (const std::invalid_argument& err) {
    std::cerr << "error: " << err.what() << "\n";
    return 2;
  } catch (const std::exception& err) {
    std::cerr << "unexpected error: " << err.what() << "\n";
    return 4;
  }
  return 0;
}

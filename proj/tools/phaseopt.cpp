// Copyright 2026 The phaseopt Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Command-line front end. All numerics live in the library; this file only
// parses arguments, loads/saves files and forwards to phaseopt:: calls.

#include <CLI11.hpp>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "phaseopt/io.hpp"
#include "phaseopt/oracle.hpp"
#include "phaseopt/sweep.hpp"

namespace {

using phaseopt::AnyState;
using phaseopt::CircularPrior;
using phaseopt::Json;
using phaseopt::ProbeState;

struct PriorSpec {
  std::string kind = "uniform";  // uniform | diffusive | fourier-file:<path>
  double t = 0.0;
  bool t_given = false;
  double coeff_tol = CircularPrior::kDefaultCoeffTol;
};

void add_prior_flags(CLI::App* cmd, PriorSpec* spec) {
  cmd->add_option("--prior", spec->kind,
                  "uniform | diffusive | fourier-file:<path>")
      ->capture_default_str();
  cmd->add_option("--t", spec->t, "diffusion time for --prior diffusive")
      ->check(CLI::PositiveNumber)
      ->each([spec](const std::string&) { spec->t_given = true; });
  cmd->add_option("--coeff-tol", spec->coeff_tol,
                  "Fourier truncation tolerance for diffusive priors")
      ->capture_default_str();
}

CircularPrior make_prior(const PriorSpec& spec, int n) {
  if (spec.kind == "uniform") return phaseopt::uniform_prior();
  if (spec.kind == "diffusive") {
    if (!spec.t_given) {
      throw std::invalid_argument("--prior diffusive requires --t");
    }
    return phaseopt::diffusive_prior(spec.t, spec.coeff_tol, n + 1);
  }
  if (spec.kind.rfind("fourier-file:", 0) == 0) {
    return phaseopt::prior_from_json(
        phaseopt::load_json_file(spec.kind.substr(13)));
  }
  throw std::invalid_argument("unknown prior spec: " + spec.kind);
}

// States loaded from files carry their own dimension; reconcile with --n.
std::optional<AnyState> load_file_state(const std::string& spec) {
  if (spec.rfind("file:", 0) != 0) return std::nullopt;
  return phaseopt::state_from_json(phaseopt::load_json_file(spec.substr(5)));
}

int state_dim(const AnyState& s) {
  return std::holds_alternative<ProbeState>(s)
             ? std::get<ProbeState>(s).dim()
             : std::get<phaseopt::DensityMatrix>(s).dim();
}

void write_output(const std::string& out_path, const std::string& payload) {
  if (out_path.empty()) {
    std::cout << payload;
    return;
  }
  std::ofstream out(out_path, std::ios::binary);
  if (!out) throw std::invalid_argument("cannot open output file: " + out_path);
  out << payload;
}

struct OptimalArgs {
  int n = -1;
  std::string state;
  PriorSpec prior;
  std::string out;
  std::uint64_t seed = 0;
  phaseopt::OptimizerConfig optimizer;
};

int run_optimal(const OptimalArgs& args) {
  std::optional<AnyState> file_state = load_file_state(args.state);
  int n = args.n;
  if (file_state) {
    const int file_n = state_dim(*file_state) - 1;
    if (n >= 0 && n != file_n) {
      throw std::invalid_argument("--n disagrees with the state file");
    }
    n = file_n;
  } else if (n < 0) {
    throw std::invalid_argument("--n is required for named states");
  }

  const CircularPrior prior = make_prior(args.prior, n);
  Json out;
  if (args.state == "optimal") {
    phaseopt::OptimizerConfig cfg = args.optimizer;
    cfg.seed = args.seed;
    const phaseopt::OptimizerResult result =
        phaseopt::optimize_probe(n, prior, cfg);
    out = phaseopt::report_to_json(
        phaseopt::optimal_strategy(phaseopt::build_r10(result.state, prior)));
    out["state"] = phaseopt::state_to_json(result.state);
  } else {
    AnyState state = file_state ? std::move(*file_state)
                                : AnyState(phaseopt::probe_state_by_name(
                                      args.state, n));
    const phaseopt::OffDiagonalBlock block =
        std::holds_alternative<ProbeState>(state)
            ? phaseopt::build_r10(std::get<ProbeState>(state), prior)
            : phaseopt::build_r10(std::get<phaseopt::DensityMatrix>(state),
                                  prior);
    out = phaseopt::report_to_json(phaseopt::optimal_strategy(block));
  }
  write_output(args.out, out.dump(2) + "\n");
  return 0;
}

struct SweepArgs {
  int n = 0;
  std::string grid_spec;
  std::string states = "noon,bw,binomial,optimal";
  std::string out;
  phaseopt::SweepOptions options;
};

int run_sweep_cmd(const SweepArgs& args) {
  std::vector<std::string> states;
  std::string token;
  std::istringstream in(args.states);
  while (std::getline(in, token, ',')) {
    if (!token.empty()) states.push_back(token);
  }
  const auto records = phaseopt::run_sweep(
      args.n, phaseopt::TimeGrid::parse(args.grid_spec), states, args.options);
  write_output(args.out, phaseopt::sweep_to_csv(records));
  return 0;
}

struct ProfileArgs {
  int n = -1;
  std::string state;
  PriorSpec prior;
  int grid = 512;
  std::string out;
  std::uint64_t seed = 0;
  phaseopt::OptimizerConfig optimizer;
};

int run_profile(const ProfileArgs& args) {
  std::optional<AnyState> file_state = load_file_state(args.state);
  int n = args.n;
  if (file_state) {
    if (!std::holds_alternative<ProbeState>(*file_state)) {
      throw std::invalid_argument("profile needs a pure state");
    }
    const int file_n = state_dim(*file_state) - 1;
    if (n >= 0 && n != file_n) {
      throw std::invalid_argument("--n disagrees with the state file");
    }
    n = file_n;
  } else if (n < 0) {
    throw std::invalid_argument("--n is required for named states");
  }

  const CircularPrior prior = make_prior(args.prior, n);
  ProbeState psi = [&]() -> ProbeState {
    if (file_state) return std::get<ProbeState>(*file_state);
    if (args.state == "optimal") {
      phaseopt::OptimizerConfig cfg = args.optimizer;
      cfg.seed = args.seed;
      return phaseopt::optimize_probe(n, prior, cfg).state;
    }
    return phaseopt::probe_state_by_name(args.state, n);
  }();

  const phaseopt::ProfileData data =
      phaseopt::run_profile(psi, prior, args.grid);
  write_output(args.out, phaseopt::profile_to_csv(data));
  if (!args.out.empty()) {
    Json sidecar = {{"phases", data.estimator_phases},
                    {"state", phaseopt::state_to_json(data.state)}};
    write_output(args.out + ".json", sidecar.dump(2) + "\n");
  }
  return 0;
}

struct OptimizeArgs {
  int n = 0;
  PriorSpec prior;
  std::string out;
  std::uint64_t seed = 0;
  phaseopt::OptimizerConfig config;
};

int run_optimize(const OptimizeArgs& args) {
  const CircularPrior prior = make_prior(args.prior, args.n);
  phaseopt::OptimizerConfig cfg = args.config;
  cfg.seed = args.seed;
  const phaseopt::OptimizerResult result =
      phaseopt::optimize_probe(args.n, prior, cfg);
  write_output(args.out, phaseopt::result_to_json(result).dump(2) + "\n");
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "phaseopt: optimal single-shot Bayesian phase estimation on the circle"};
  app.require_subcommand(1);

  OptimalArgs optimal_args;
  CLI::App* optimal = app.add_subcommand(
      "optimal", "Optimal strategy report (JSON: cost, phases, basis)");
  optimal->add_option("--n", optimal_args.n, "photon number N");
  optimal
      ->add_option("--state", optimal_args.state,
                   "noon | bw | binomial | flat | optimal | file:<path>")
      ->required();
  add_prior_flags(optimal, &optimal_args.prior);
  optimal->add_option("--seed", optimal_args.seed, "optimizer seed");
  optimal->add_option("--tol", optimal_args.optimizer.tol, "optimizer tol");
  optimal->add_option("--restarts", optimal_args.optimizer.restarts,
                      "optimizer restarts");
  optimal->add_option("--max-iter", optimal_args.optimizer.max_iter,
                      "optimizer iteration cap");
  optimal->add_option("--out", optimal_args.out, "output path (default stdout)");

  SweepArgs sweep_args;
  CLI::App* sweep = app.add_subcommand(
      "sweep", "Cost table over a diffusion-time grid (CSV)");
  sweep->add_option("--n", sweep_args.n, "photon number N")->required();
  sweep->add_option("--t-grid", sweep_args.grid_spec, "min:max:log|lin:count")
      ->required();
  sweep->add_option("--states", sweep_args.states, "comma-separated state list")
      ->capture_default_str();
  sweep->add_option("--seed", sweep_args.options.seed, "optimizer seed");
  sweep->add_option("--jobs", sweep_args.options.jobs,
                    "worker threads (default: logical CPUs)");
  sweep->add_option("--tol", sweep_args.options.optimizer.tol,
                    "optimizer tol");
  sweep->add_option("--restarts", sweep_args.options.optimizer.restarts,
                    "optimizer restarts");
  sweep->add_option("--max-iter", sweep_args.options.optimizer.max_iter,
                    "optimizer iteration cap");
  sweep->add_option("--out", sweep_args.out, "output path (default stdout)");

  ProfileArgs profile_args;
  CLI::App* profile = app.add_subcommand(
      "profile",
      "Conditional probabilities p(k|phi) under the optimal strategy (CSV; "
      "estimator phases and probe amplitudes in <out>.json)");
  profile->add_option("--n", profile_args.n, "photon number N");
  profile
      ->add_option("--state", profile_args.state,
                   "noon | bw | binomial | flat | optimal | file:<path>")
      ->required();
  add_prior_flags(profile, &profile_args.prior);
  profile->add_option("--grid", profile_args.grid, "phi grid points")
      ->capture_default_str();
  profile->add_option("--seed", profile_args.seed, "optimizer seed");
  profile->add_option("--tol", profile_args.optimizer.tol, "optimizer tol");
  profile->add_option("--out", profile_args.out,
                      "output path (default stdout; sidecar JSON only with "
                      "--out)");

  OptimizeArgs optimize_args;
  CLI::App* optimize = app.add_subcommand(
      "optimize", "Optimal probe state for a prior (JSON)");
  optimize->add_option("--n", optimize_args.n, "photon number N")->required();
  add_prior_flags(optimize, &optimize_args.prior);
  optimize->add_option("--seed", optimize_args.seed, "optimizer seed");
  optimize->add_option("--tol", optimize_args.config.tol, "optimizer tol");
  optimize->add_option("--restarts", optimize_args.config.restarts,
                       "optimizer restarts");
  optimize->add_option("--max-iter", optimize_args.config.max_iter,
                       "optimizer iteration cap");
  optimize->add_option("--out", optimize_args.out,
                       "output path (default stdout)");

  phaseopt::VerifyOptions verify_options;
  CLI::App* verify = app.add_subcommand(
      "verify", "Brute-force cross-check suite for the closed forms");
  verify->add_option("--seed", verify_options.seed, "RNG seed");
  verify->add_option("--trials", verify_options.trials,
                     "random-search trials per instance");
  verify->add_option("--instances", verify_options.instances,
                     "random instances per check");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    const bool help = dynamic_cast<const CLI::CallForHelp*>(&e) != nullptr ||
                      dynamic_cast<const CLI::CallForAllHelp*>(&e) != nullptr;
    return help ? code : 2;
  }

  try {
    if (optimal->parsed()) return run_optimal(optimal_args);
    if (sweep->parsed()) return run_sweep_cmd(sweep_args);
    if (profile->parsed()) return run_profile(profile_args);
    if (optimize->parsed()) return run_optimize(optimize_args);
    if (verify->parsed()) {
      return phaseopt::run_oracle_suite(verify_options, std::cout) ? 0 : 1;
    }
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 2;
}

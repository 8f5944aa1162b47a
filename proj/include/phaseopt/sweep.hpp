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

#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "phaseopt/optimizer.hpp"

namespace phaseopt {

/// Parse of a "min:max:log|lin:count" grid specification.
struct TimeGrid {
  double min = 0.0;
  double max = 0.0;
  int count = 0;
  bool log_spacing = true;

  static TimeGrid parse(const std::string& spec);
  std::vector<double> values() const;
};

/// One (diffusion time, probe state) evaluation under its optimal strategy.
struct SweepRecord {
  double t;
  double delta_phi_prior;
  std::string state;
  double cost;
  double delta_phi;  // sqrt(cost)
  double ratio;      // delta_phi / delta_phi_prior
};

struct SweepOptions {
  std::uint64_t seed = 0;
  int jobs = 0;  // <= 0: logical CPU count
  OptimizerConfig optimizer;
};

/**
 * One record per (t, state) cell, rows in grid-major order regardless of how
 * the worker pool schedules them. States are "noon" | "bw" | "binomial" |
 * "flat" | "optimal"; "optimal" cells run the probe optimizer with a seed
 * derived from the cell index, so output is deterministic for a fixed seed.
 */
std::vector<SweepRecord> run_sweep(int n, const TimeGrid& grid,
                                   const std::vector<std::string>& states,
                                   const SweepOptions& options = {});

/// Header "t,delta_phi_prior,state,cost,delta_phi,ratio"; 12 significant
/// digits, '\n' line endings.
std::string sweep_to_csv(const std::vector<SweepRecord>& records);

/// Conditional-probability table of a probe under its optimal strategy.
struct ProfileData {
  ProbeState state;
  std::vector<double> phi;
  Eigen::MatrixXd probabilities;         // row per phi, column per outcome
  std::vector<double> estimator_phases;  // phi_k, sorted
};

ProfileData run_profile(const ProbeState& psi, const CircularPrior& prior,
                        int grid_points);

/// Header "phi,p0,...,pN"; same float formatting as the sweep CSV.
std::string profile_to_csv(const ProfileData& data);

/// 12-significant-digit, locale-independent float used in all CSV output.
std::string format_csv_double(double v);

}  // namespace phaseopt

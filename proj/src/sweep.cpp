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

#include "phaseopt/sweep.hpp"

#include <atomic>
#include <cmath>
#include <cstdio>
#include <exception>
#include <mutex>
#include <numbers>
#include <sstream>
#include <stdexcept>
#include <thread>

namespace phaseopt {

TimeGrid TimeGrid::parse(const std::string& spec) {
  std::vector<std::string> parts;
  std::string token;
  std::istringstream in(spec);
  while (std::getline(in, token, ':')) parts.push_back(token);
  if (parts.size() != 4) {
    throw std::invalid_argument(
        "grid spec must be min:max:log|lin:count, got \"" + spec + "\"");
  }
  TimeGrid grid;
  try {
    grid.min = std::stod(parts[0]);
    grid.max = std::stod(parts[1]);
    grid.count = std::stoi(parts[3]);
  } catch (const std::exception&) {
    throw std::invalid_argument("grid spec has non-numeric fields: " + spec);
  }
  if (parts[2] == "log") {
    grid.log_spacing = true;
  } else if (parts[2] == "lin") {
    grid.log_spacing = false;
  } else {
    throw std::invalid_argument("grid spacing must be log or lin");
  }
  if (grid.count < 1) throw std::invalid_argument("grid count must be >= 1");
  if (!(grid.min <= grid.max)) {
    throw std::invalid_argument("grid min must not exceed max");
  }
  if (grid.log_spacing && !(grid.min > 0.0)) {
    throw std::invalid_argument("log grid requires min > 0");
  }
  if (!(grid.min > 0.0)) {
    throw std::invalid_argument("diffusion times must be positive");
  }
  return grid;
}

std::vector<double> TimeGrid::values() const {
  std::vector<double> t(count);
  if (count == 1) {
    t[0] = min;
    return t;
  }
  for (int i = 0; i < count; ++i) {
    const double x = static_cast<double>(i) / (count - 1);
    t[i] = log_spacing ? min * std::pow(max / min, x)
                       : min + (max - min) * x;
  }
  return t;
}

namespace {

SweepRecord evaluate_cell(int n, double t, const std::string& state,
                          std::uint64_t cell_seed,
                          const OptimizerConfig& base_cfg) {
  const CircularPrior prior = diffusive_prior(
      t, CircularPrior::kDefaultCoeffTol, n + 1);
  double cost;
  if (state == "optimal") {
    OptimizerConfig cfg = base_cfg;
    cfg.seed = cell_seed;
    cost = optimize_probe(n, prior, cfg).cost;
  } else {
    cost = optimal_cost(build_r10(probe_state_by_name(state, n), prior));
  }
  const double prior_dphi = prior.uncertainty();
  const double dphi = std::sqrt(cost);
  return {t, prior_dphi, state, cost, dphi, dphi / prior_dphi};
}

}  // namespace

std::vector<SweepRecord> run_sweep(int n, const TimeGrid& grid,
                                   const std::vector<std::string>& states,
                                   const SweepOptions& options) {
  if (n < 1) throw std::invalid_argument("sweep requires N >= 1");
  if (states.empty()) throw std::invalid_argument("sweep needs >= 1 state");
  for (const auto& s : states) {
    if (s != "optimal") probe_state_by_name(s, n);  // validate names up front
  }

  const std::vector<double> times = grid.values();
  const std::size_t cells = times.size() * states.size();
  std::vector<SweepRecord> records(cells);

  int jobs = options.jobs > 0
                 ? options.jobs
                 : static_cast<int>(std::thread::hardware_concurrency());
  if (jobs < 1) jobs = 1;
  jobs = static_cast<int>(
      std::min<std::size_t>(static_cast<std::size_t>(jobs), cells));

  std::atomic<std::size_t> next{0};
  std::mutex error_mutex;
  std::exception_ptr error;
  const auto worker = [&]() {
    for (;;) {
      const std::size_t i = next.fetch_add(1);
      if (i >= cells) return;
      try {
        const std::size_t ti = i / states.size();
        const std::size_t si = i % states.size();
        records[i] = evaluate_cell(n, times[ti], states[si],
                                   derive_seed(options.seed, i),
                                   options.optimizer);
      } catch (...) {
        std::lock_guard<std::mutex> lock(error_mutex);
        if (!error) error = std::current_exception();
        next.store(cells);  // drain remaining work
        return;
      }
    }
  };

  if (jobs == 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    pool.reserve(jobs);
    for (int j = 0; j < jobs; ++j) pool.emplace_back(worker);
    for (auto& th : pool) th.join();
  }
  if (error) std::rethrow_exception(error);
  return records;
}

std::string format_csv_double(double v) {
  char buf[48];
  std::snprintf(buf, sizeof(buf), "%.12g", v);
  return buf;
}

std::string sweep_to_csv(const std::vector<SweepRecord>& records) {
  std::string out = "t,delta_phi_prior,state,cost,delta_phi,ratio\n";
  for (const auto& r : records) {
    out += format_csv_double(r.t);
    out += ',';
    out += format_csv_double(r.delta_phi_prior);
    out += ',';
    out += r.state;
    out += ',';
    out += format_csv_double(r.cost);
    out += ',';
    out += format_csv_double(r.delta_phi);
    out += ',';
    out += format_csv_double(r.ratio);
    out += '\n';
  }
  return out;
}

ProfileData run_profile(const ProbeState& psi, const CircularPrior& prior,
                        int grid_points) {
  if (grid_points < 2) {
    throw std::invalid_argument("profile grid needs >= 2 points");
  }
  std::vector<double> phi(grid_points);
  for (int j = 0; j < grid_points; ++j) {
    phi[j] = -std::numbers::pi + 2.0 * std::numbers::pi * j / grid_points;
  }
  const PhaseMeasurement m = optimal_measurement(build_r10(psi, prior));
  Eigen::MatrixXd probs = conditional_probabilities(psi, m, phi);
  return {psi, std::move(phi), std::move(probs), m.phases()};
}

std::string profile_to_csv(const ProfileData& data) {
  std::string out = "phi";
  for (int k = 0; k < data.probabilities.cols(); ++k) {
    out += ",p" + std::to_string(k);
  }
  out += '\n';
  for (int r = 0; r < data.probabilities.rows(); ++r) {
    out += format_csv_double(data.phi[r]);
    for (int k = 0; k < data.probabilities.cols(); ++k) {
      out += ',';
      out += format_csv_double(data.probabilities(r, k));
    }
    out += '\n';
  }
  return out;
}

}  // namespace phaseopt

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

#include "phaseopt/optimizer.hpp"

#include <cmath>
#include <complex>
#include <optional>
#include <random>
#include <stdexcept>

namespace phaseopt {

namespace {
using Complex = std::complex<double>;

ProbeState haar_random_state(int n, std::mt19937_64& rng) {
  std::normal_distribution<double> gauss(0.0, 1.0);
  Eigen::VectorXcd a(n + 1);
  for (int j = 0; j <= n; ++j) a(j) = Complex(gauss(rng), gauss(rng));
  return state_from_amplitudes(a);
}

struct AscentOutcome {
  ProbeState state;
  std::vector<double> trace;
  bool stopped_by_tol = false;
};

AscentOutcome run_ascent(ProbeState psi, const CircularPrior& prior,
                         const OptimizerConfig& cfg) {
  AscentOutcome out{std::move(psi), {}, false};
  for (int iter = 0; iter < cfg.max_iter; ++iter) {
    const StrategyReport best = optimal_strategy(build_r10(out.state, prior));
    out.trace.push_back(best.fidelity);
    if (iter > 0 && best.fidelity - out.trace[iter - 1] < cfg.tol) {
      out.stopped_by_tol = true;
      break;
    }
    if (iter + 1 == cfg.max_iter) break;

    const Eigen::MatrixXcd op = fidelity_operator(best.measurement, prior);
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(op);
    if (es.info() != Eigen::Success) {
      throw std::runtime_error("fidelity operator eigendecomposition failed");
    }
    out.state = state_from_amplitudes(
        es.eigenvectors().col(out.state.dim() - 1));  // top eigenvector
  }
  return out;
}

}  // namespace

std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t stream) {
  // splitmix64 over seed advanced by the stream index.
  std::uint64_t x = seed + (stream + 1) * 0x9E3779B97F4A7C15ULL;
  x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
  x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
  return x ^ (x >> 31);
}

Eigen::MatrixXcd fidelity_operator(const PhaseMeasurement& m,
                                   const CircularPrior& prior) {
  const int d = m.dim();
  Eigen::MatrixXcd op = Eigen::MatrixXcd::Zero(d, d);
  for (int k = 0; k < m.outcomes(); ++k) {
    const auto psi_k = m.basis().col(k);
    const Complex e = std::polar(1.0, -m.phases()[k]);
    for (int row = 0; row < d; ++row) {
      for (int col = 0; col < d; ++col) {
        const int q = row - col;
        // Integral of p(phi) e^{i q phi} (1 + cos(phi - phi_k)) / 2 in
        // coefficient form.
        const Complex weight = 0.5 * prior.coefficient(-q) +
                               0.25 * e * prior.coefficient(-q - 1) +
                               0.25 * std::conj(e) * prior.coefficient(-q + 1);
        op(row, col) += psi_k(row) * std::conj(psi_k(col)) * weight;
      }
    }
  }
  return op;
}

OptimizerResult optimize_probe(int n, const CircularPrior& prior,
                               const OptimizerConfig& config) {
  if (n < 1) throw std::invalid_argument("optimize_probe requires N >= 1");
  if (!(config.tol > 0.0)) {
    throw std::invalid_argument("optimizer tol must be positive");
  }
  if (config.max_iter < 1 || config.restarts < 1) {
    throw std::invalid_argument("optimizer needs max_iter >= 1, restarts >= 1");
  }

  std::optional<AscentOutcome> best;
  for (int restart = 0; restart < config.restarts; ++restart) {
    ProbeState start = flat_state(n);
    switch (restart) {
      case 0: start = berry_wiseman_state(n); break;
      case 1: start = noon_state(n); break;
      case 2: break;  // flat
      case 3: start = binomial_state(n); break;
      default: {
        std::mt19937_64 rng(derive_seed(config.seed, restart));
        start = haar_random_state(n, rng);
        break;
      }
    }
    AscentOutcome outcome = run_ascent(std::move(start), prior, config);
    if (!best || outcome.trace.back() > best->trace.back()) {
      best = std::move(outcome);
    }
  }

  bool converged = best->stopped_by_tol;
  if (converged) {
    // Fixed-point check: the winner must reproduce itself as the top
    // eigenvector of its own fidelity operator. A stalled-but-oscillating
    // trace fails here and is reported as non-converged.
    const PhaseMeasurement m =
        optimal_measurement(build_r10(best->state, prior));
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(
        fidelity_operator(m, prior));
    const double overlap =
        std::abs(es.eigenvectors().col(n).dot(best->state.amplitudes()));
    if (overlap < 1.0 - 1e-9) converged = false;
  }

  const double fidelity = best->trace.back();
  const int iterations = static_cast<int>(best->trace.size());
  double cost = 4.0 * (1.0 - fidelity);
  if (cost < 0.0) cost = 0.0;
  return {canonical_gauge(best->state), cost,       fidelity,
          std::move(best->trace),       iterations, converged};
}

}  // namespace phaseopt

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
#include <iosfwd>
#include <utility>
#include <vector>

#include "phaseopt/estimation.hpp"

namespace phaseopt {

// Brute-force evaluators kept deliberately independent of the closed-form
// path: plain loops and power iteration instead of the SVD/Schur machinery.

/// Uniform phase grid on [-pi, pi).
struct QuadratureGrid {
  int points;

  explicit QuadratureGrid(int n = 4096);
  std::vector<double> nodes() const;
};

/**
 * Direct discretization of the average cost integral: Riemann sum over phi of
 * p(phi) * sum_k p(k|phi) * 4 sin^2((phi - phi_k)/2). Requires
 * points >= 8 * (N + K + 1) so every Fourier mode of the integrand resolves.
 */
double quadrature_cost(const ProbeState& psi, const CircularPrior& prior,
                       const PhaseMeasurement& m, const QuadratureGrid& grid);

/// Strategy cost for a basis with each estimator phase set to its per-outcome
/// optimum arg<psi_k|R|psi_k>; cost = 2 - 4 sum_k |<psi_k|R|psi_k>|.
double best_cost_for_basis(const ProbeState& psi, const CircularPrior& prior,
                           const Eigen::MatrixXcd& basis);

/**
 * Minimum cost over `trials` Haar-random orthonormal bases, each with
 * per-outcome optimal phases. Per-trial RNG streams derive from the seed, so
 * the result is independent of evaluation order. Never undercuts the optimum
 * beyond roundoff; used as the falsification harness for the bound.
 */
double random_strategy_search(const ProbeState& psi,
                              const CircularPrior& prior, int trials,
                              std::uint64_t seed);

/**
 * Exhaustive strategy scan for N = 1: orthonormal pairs parametrized by a
 * rotation angle (theta_points over [0, pi/2]) and a relative phase
 * (phase_points over [0, 2pi)), with per-outcome optimal estimator phases.
 */
double exhaustive_strategy_search_n1(const ProbeState& psi,
                                     const CircularPrior& prior,
                                     int theta_points = 10000,
                                     int phase_points = 1000);

/**
 * Dominant eigenpair of the (N+1)x(N+1) tridiagonal matrix with 1/2 on the
 * off-diagonals, via shifted power iteration (no library eigensolver). The
 * eigenvector is the Berry-Wiseman profile; the eigenvalue is cos(pi/(N+2)).
 */
std::pair<double, Eigen::VectorXd> tridiagonal_dominant(int n);

struct VerifyOptions {
  std::uint64_t seed = 0;
  int trials = 400;     // random-search trials per instance
  int instances = 25;   // random instances per cross-check
};

/// Cross-checks closed forms against the brute-force evaluators, one log line
/// per check. Returns true when every check passes.
bool run_oracle_suite(const VerifyOptions& options, std::ostream& log);

}  // namespace phaseopt

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

#include <Eigen/Dense>
#include <vector>

#include "phaseopt/prior.hpp"
#include "phaseopt/states.hpp"

namespace phaseopt {

/**
 * The off-diagonal block that carries all the information the single-shot
 * Bayesian problem needs: entry (n, m) is rho^n_m * p_{n-m-1} / 2. Its trace
 * norm fixes the optimal cost; its SVD fixes the optimal measurement.
 */
struct OffDiagonalBlock {
  Eigen::MatrixXcd matrix;

  int dim() const { return static_cast<int>(matrix.rows()); }
  int photon_number() const { return dim() - 1; }
};

OffDiagonalBlock build_r10(const DensityMatrix& rho,
                           const CircularPrior& prior);
OffDiagonalBlock build_r10(const ProbeState& psi, const CircularPrior& prior);

/**
 * A projective single-shot strategy: orthonormal basis vectors psi_k (columns)
 * paired with estimator phases phi_k in [-pi, pi). Outcome k means "estimate
 * phi_k".
 */
class PhaseMeasurement {
 public:
  /// Validates orthonormality (Gram within 1e-10) and wraps phases.
  PhaseMeasurement(Eigen::MatrixXcd basis, std::vector<double> phases);

  int outcomes() const { return static_cast<int>(basis_.cols()); }
  int dim() const { return static_cast<int>(basis_.rows()); }
  const Eigen::MatrixXcd& basis() const { return basis_; }
  const std::vector<double>& phases() const { return phases_; }

  /// (1/2) sum_k e^{-i phi_k} |psi_k><psi_k| — the block whose overlap with
  /// the off-diagonal block gives the strategy fidelity.
  Eigen::MatrixXcd estimator_block() const;

 private:
  Eigen::MatrixXcd basis_;
  std::vector<double> phases_;
};

struct StrategyReport {
  double cost;
  double fidelity;
  double posterior_uncertainty;  // sqrt(cost)
  PhaseMeasurement measurement;
};

/// Minimal average cost 4*(1/2 - ||R||_1) over all strategies.
double optimal_cost(const OffDiagonalBlock& block);

/**
 * Cost-optimal strategy: with SVD R = U_R Lambda V_R^dag, the unitary
 * U = V_R U_R^dag has eigenvalues e^{-i phi_k} and eigenvectors psi_k which
 * form the measurement basis and estimator phases. Outcomes are sorted by
 * phase (ties by index). Rank-deficient blocks take the SVD routine's unitary
 * completion as-is; any completion is optimal.
 */
PhaseMeasurement optimal_measurement(const OffDiagonalBlock& block);

/// optimal_cost and optimal_measurement from a single decomposition.
StrategyReport optimal_strategy(const OffDiagonalBlock& block);

/// Cost/fidelity of an arbitrary projective strategy, optimal or not.
StrategyReport evaluate_strategy(const DensityMatrix& rho,
                                 const CircularPrior& prior,
                                 const PhaseMeasurement& m);

/**
 * p(k | phi) = |<psi_k| U_phi |psi>|^2 with U_phi |n> = e^{-i n phi} |n>.
 * One row per grid point, one column per outcome.
 */
Eigen::MatrixXd conditional_probabilities(const ProbeState& psi,
                                          const PhaseMeasurement& m,
                                          const std::vector<double>& phi_grid);

/// Quantum Fisher information of a pure probe, 4 * Var(n) under |alpha_n|^2.
double qfi_pure(const ProbeState& psi);

/// Wrap an angle into [-pi, pi).
double wrap_angle(double phi);

}  // namespace phaseopt

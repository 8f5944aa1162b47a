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
#include <string>

namespace phaseopt {

/**
 * Pure N-photon probe |psi> = sum_{n=0..N} alpha_n |n> on the eigenbasis of
 * the phase shift U_phi |n> = e^{-i n phi} |n>. Unit norm, immutable.
 */
class ProbeState {
 public:
  int photon_number() const { return static_cast<int>(amps_.size()) - 1; }
  int dim() const { return static_cast<int>(amps_.size()); }
  const Eigen::VectorXcd& amplitudes() const { return amps_; }

 private:
  explicit ProbeState(Eigen::VectorXcd a) : amps_(std::move(a)) {}

  friend ProbeState noon_state(int n);
  friend ProbeState berry_wiseman_state(int n);
  friend ProbeState binomial_state(int n);
  friend ProbeState flat_state(int n);
  friend ProbeState state_from_amplitudes(const Eigen::VectorXcd& raw);
  friend ProbeState canonical_gauge(const ProbeState& psi);

  Eigen::VectorXcd amps_;
};

/// Equal superposition of |0> and |N>; requires N >= 1.
ProbeState noon_state(int n);

/// Sine-profile state alpha_n = sqrt(2/(N+2)) sin((n+1)pi/(N+2)), the
/// dominant eigenvector of the tridiagonal matrix with 1/2 off-diagonals.
ProbeState berry_wiseman_state(int n);

/// alpha_n = sqrt(C(N,n)/2^N).
ProbeState binomial_state(int n);

/// All amplitudes equal to 1/sqrt(N+1).
ProbeState flat_state(int n);

/// Normalized copy of an arbitrary nonzero amplitude vector.
ProbeState state_from_amplitudes(const Eigen::VectorXcd& raw);

/// Global-phase fix: first amplitude above 1e-12 made real positive.
ProbeState canonical_gauge(const ProbeState& psi);

/// Lookup for "noon" | "bw" | "binomial" | "flat".
ProbeState probe_state_by_name(const std::string& name, int n);

/**
 * Hermitian, unit-trace, positive-semidefinite matrix rho on the same basis.
 * Mixed probes are accepted as-is; no decoherence channels are modeled.
 */
class DensityMatrix {
 public:
  int photon_number() const { return static_cast<int>(rho_.rows()) - 1; }
  int dim() const { return static_cast<int>(rho_.rows()); }
  const Eigen::MatrixXcd& matrix() const { return rho_; }

 private:
  explicit DensityMatrix(Eigen::MatrixXcd m) : rho_(std::move(m)) {}

  friend DensityMatrix pure_to_density(const ProbeState& psi);
  friend DensityMatrix density_from_matrix(const Eigen::MatrixXcd& m);

  Eigen::MatrixXcd rho_;
};

/// rho = |psi><psi|.
DensityMatrix pure_to_density(const ProbeState& psi);

/// Validates Hermiticity (1e-12), trace 1 (1e-12), min eigenvalue >= -1e-10.
DensityMatrix density_from_matrix(const Eigen::MatrixXcd& m);

}  // namespace phaseopt

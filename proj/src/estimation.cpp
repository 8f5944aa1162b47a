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

#include "phaseopt/estimation.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <numbers>
#include <numeric>
#include <stdexcept>

namespace phaseopt {

namespace {
using Complex = std::complex<double>;
constexpr double kTwoPi = 2.0 * std::numbers::pi;
}  // namespace

double wrap_angle(double phi) {
  double w = std::remainder(phi, kTwoPi);  // (-pi, pi]
  if (w >= std::numbers::pi) w -= kTwoPi;
  return w == 0.0 ? 0.0 : w;  // collapse -0.0
}

OffDiagonalBlock build_r10(const DensityMatrix& rho,
                           const CircularPrior& prior) {
  const Eigen::MatrixXcd& r = rho.matrix();
  const int d = static_cast<int>(r.rows());
  Eigen::MatrixXcd block(d, d);
  for (int n = 0; n < d; ++n) {
    for (int m = 0; m < d; ++m) {
      block(n, m) = 0.5 * r(n, m) * prior.coefficient(n - m - 1);
    }
  }
  return {std::move(block)};
}

OffDiagonalBlock build_r10(const ProbeState& psi, const CircularPrior& prior) {
  return build_r10(pure_to_density(psi), prior);
}

PhaseMeasurement::PhaseMeasurement(Eigen::MatrixXcd basis,
                                   std::vector<double> phases)
    : basis_(std::move(basis)), phases_(std::move(phases)) {
  if (basis_.rows() != basis_.cols() || basis_.rows() == 0) {
    throw std::invalid_argument("measurement basis must be square nonempty");
  }
  if (static_cast<int>(phases_.size()) != basis_.cols()) {
    throw std::invalid_argument(
        "measurement needs one estimator phase per basis vector");
  }
  const Eigen::MatrixXcd gram = basis_.adjoint() * basis_;
  const double defect =
      (gram - Eigen::MatrixXcd::Identity(basis_.cols(), basis_.cols()))
          .cwiseAbs()
          .maxCoeff();
  if (defect > 1e-10) {
    throw std::invalid_argument("measurement basis is not orthonormal");
  }
  for (double& p : phases_) p = wrap_angle(p);
}

Eigen::MatrixXcd PhaseMeasurement::estimator_block() const {
  const int d = dim();
  Eigen::MatrixXcd block = Eigen::MatrixXcd::Zero(d, d);
  for (int k = 0; k < outcomes(); ++k) {
    const Complex w = 0.5 * std::polar(1.0, -phases_[k]);
    block.noalias() += w * (basis_.col(k) * basis_.col(k).adjoint());
  }
  return block;
}

double optimal_cost(const OffDiagonalBlock& block) {
  Eigen::JacobiSVD<Eigen::MatrixXcd> svd(block.matrix);
  const double trace_norm = svd.singularValues().sum();
  const double cost = 4.0 * (0.5 - trace_norm);
  return cost < 0.0 ? 0.0 : cost;
}

namespace {

// Shared by optimal_measurement and optimal_strategy: full SVD, then the
// eigensystem of U = V_R U_R^dag via a complex Schur form. U is unitary, so
// the Schur factor is diagonal to machine precision and the Schur basis is an
// orthonormal eigenbasis even under eigenvalue degeneracy.
struct OptimalDecomposition {
  double trace_norm;
  PhaseMeasurement measurement;
};

OptimalDecomposition decompose(const OffDiagonalBlock& block) {
  Eigen::JacobiSVD<Eigen::MatrixXcd> svd(
      block.matrix, Eigen::ComputeFullU | Eigen::ComputeFullV);
  const double trace_norm = svd.singularValues().sum();
  const Eigen::MatrixXcd u = svd.matrixV() * svd.matrixU().adjoint();

  Eigen::ComplexSchur<Eigen::MatrixXcd> schur(u);
  if (schur.info() != Eigen::Success) {
    throw std::runtime_error("Schur decomposition of optimal unitary failed");
  }

  const int d = block.dim();
  std::vector<int> order(d);
  std::vector<double> phase(d);
  for (int k = 0; k < d; ++k) {
    // Eigenvalue e^{-i phi_k}: arg lands in (-pi, pi], so phi in [-pi, pi).
    phase[k] = -std::arg(schur.matrixT()(k, k));
    order[k] = k;
  }
  std::sort(order.begin(), order.end(), [&](int a, int b) {
    return phase[a] != phase[b] ? phase[a] < phase[b] : a < b;
  });

  Eigen::MatrixXcd basis(d, d);
  std::vector<double> phases(d);
  for (int k = 0; k < d; ++k) {
    basis.col(k) = schur.matrixU().col(order[k]);
    phases[k] = phase[order[k]];
  }
  return {trace_norm, PhaseMeasurement(std::move(basis), std::move(phases))};
}

}  // namespace

PhaseMeasurement optimal_measurement(const OffDiagonalBlock& block) {
  return decompose(block).measurement;
}

StrategyReport optimal_strategy(const OffDiagonalBlock& block) {
  OptimalDecomposition dec = decompose(block);
  const double fidelity = 0.5 + dec.trace_norm;
  double cost = 4.0 * (1.0 - fidelity);
  if (cost < 0.0) cost = 0.0;
  return {cost, fidelity, std::sqrt(cost), std::move(dec.measurement)};
}

StrategyReport evaluate_strategy(const DensityMatrix& rho,
                                 const CircularPrior& prior,
                                 const PhaseMeasurement& m) {
  if (rho.dim() != m.dim()) {
    throw std::invalid_argument(
        "measurement dimension does not match the probe state");
  }
  const OffDiagonalBlock block = build_r10(rho, prior);
  const Complex overlap = (block.matrix * m.estimator_block()).trace();
  const double fidelity = 0.5 + 2.0 * overlap.real();
  double cost = 4.0 * (1.0 - fidelity);
  if (cost < 0.0) cost = 0.0;
  return {cost, fidelity, std::sqrt(cost), m};
}

Eigen::MatrixXd conditional_probabilities(
    const ProbeState& psi, const PhaseMeasurement& m,
    const std::vector<double>& phi_grid) {
  if (psi.dim() != m.dim()) {
    throw std::invalid_argument(
        "measurement dimension does not match the probe state");
  }
  const int d = psi.dim();
  Eigen::MatrixXd probs(static_cast<int>(phi_grid.size()), d);
  Eigen::VectorXcd shifted(d);
  for (int g = 0; g < static_cast<int>(phi_grid.size()); ++g) {
    const double phi = phi_grid[g];
    for (int n = 0; n < d; ++n) {
      shifted(n) = psi.amplitudes()(n) * std::polar(1.0, -n * phi);
    }
    for (int k = 0; k < d; ++k) {
      probs(g, k) = std::norm(m.basis().col(k).dot(shifted));
    }
  }
  return probs;
}

double qfi_pure(const ProbeState& psi) {
  double mean = 0.0, second = 0.0;
  for (int n = 0; n < psi.dim(); ++n) {
    const double w = std::norm(psi.amplitudes()(n));
    mean += n * w;
    second += static_cast<double>(n) * n * w;
  }
  const double var = second - mean * mean;
  return var < 0.0 ? 0.0 : 4.0 * var;
}

}  // namespace phaseopt

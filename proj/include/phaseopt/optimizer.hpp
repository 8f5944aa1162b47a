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
#include <vector>

#include "phaseopt/estimation.hpp"

namespace phaseopt {

struct OptimizerConfig {
  double tol = 1e-12;   // stop when the fidelity gain of a step drops below
  int max_iter = 1000;  // per restart
  int restarts = 8;     // 4 deterministic seeds + Haar-random extras
  std::uint64_t seed = 0;
};

struct OptimizerResult {
  ProbeState state;
  double cost;
  double fidelity;
  std::vector<double> fidelity_trace;  // one entry per iterate of the winner
  int iterations;
  bool converged;
};

/**
 * Fidelity of a fixed strategy as a quadratic form in the probe amplitudes:
 * F(psi, m) = <psi| Op |psi>. Entry (n, m) expands exactly in the prior
 * coefficients, so no quadrature is involved. Op is Hermitian with spectrum
 * in [0, 1]; its top eigenvector is the best probe for the strategy.
 */
Eigen::MatrixXcd fidelity_operator(const PhaseMeasurement& m,
                                   const CircularPrior& prior);

/**
 * Alternating ascent over (measurement, probe): each iteration takes the
 * optimal measurement of the current probe, then the top eigenvector of the
 * resulting fidelity operator. Both half-steps are exact maximizations, so
 * the fidelity trace never decreases. Restarts seed from the Berry-Wiseman,
 * N00N, flat and binomial states plus Haar-random draws; the best restart by
 * fidelity wins (ties to the lower restart index).
 */
OptimizerResult optimize_probe(int n, const CircularPrior& prior,
                               const OptimizerConfig& config = {});

/// Deterministic per-stream seed derivation used across the library.
std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t stream);

}  // namespace phaseopt

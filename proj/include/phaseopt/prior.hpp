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

#include <complex>
#include <optional>
#include <string>
#include <vector>

namespace phaseopt {

/**
 * Probability density on the circle [-pi, pi) stored as a truncated Fourier
 * series,
 *
 *   p(phi) = (1/2pi) * (1 + 2 * sum_{k=1..K} Re[p_k e^{i k phi}]),
 *
 * with p_0 = 1 (normalization) and p_{-k} = conj(p_k) implied. Values are
 * immutable after construction; all queries are pure.
 */
class CircularPrior {
 public:
  static constexpr double kDefaultCoeffTol = 1e-14;
  static constexpr double kPositivityEps = 1e-9;

  /// Truncation order K; coefficients p_0..p_K are stored.
  int order() const { return static_cast<int>(coeffs_.size()) - 1; }

  /// p_k for any integer k: conjugated for k < 0, zero beyond the truncation.
  std::complex<double> coefficient(int k) const;

  /// Stored coefficients p_0..p_K.
  const std::vector<std::complex<double>>& coefficients() const {
    return coeffs_;
  }

  /// Density value, clamped at zero if within -kPositivityEps of it.
  double density_at(double phi) const;

  /// sqrt(2 - 2 Re p_1), i.e. sqrt of the mean cost 4 sin^2(phi/2) under p.
  double uncertainty() const;

  const std::string& label() const { return label_; }

  /// Set when the prior was built by diffusive_prior; used for round-trips.
  std::optional<double> diffusion_time() const { return diffusion_time_; }
  std::optional<double> coefficient_tol() const { return coeff_tol_; }

 private:
  CircularPrior() = default;

  friend CircularPrior uniform_prior();
  friend CircularPrior diffusive_prior(double t, double tol, int min_order);
  friend CircularPrior prior_from_coefficients(
      std::vector<std::complex<double>> coeffs, std::string label);

  std::vector<std::complex<double>> coeffs_;
  std::string label_;
  std::optional<double> diffusion_time_;
  std::optional<double> coeff_tol_;
};

/// The uniform density 1/2pi (K = 0).
CircularPrior uniform_prior();

/**
 * Heat-kernel prior with coefficients p_k = exp(-k^2 t), truncated at the
 * smallest K with exp(-(K+1)^2 t) < tol. Pass min_order = N+1 when the prior
 * feeds an N-photon problem so the downstream block builds stay exact.
 * Rejects t <= 0 (the delta limit is not representable) and tol outside (0,1).
 */
CircularPrior diffusive_prior(double t,
                              double tol = CircularPrior::kDefaultCoeffTol,
                              int min_order = 0);

/**
 * Prior from an explicit coefficient list p_0..p_K. Requires p_0 = 1 within
 * 1e-12, |p_k| <= 1 and a reconstructed density >= -kPositivityEps on a
 * sampling grid. Complex (asymmetric) coefficients are allowed.
 */
CircularPrior prior_from_coefficients(
    std::vector<std::complex<double>> coeffs, std::string label = "fourier");

}  // namespace phaseopt

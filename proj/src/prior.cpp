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

#include "phaseopt/prior.hpp"

#include <cmath>
#include <cstdio>
#include <numbers>
#include <stdexcept>
#include <utility>

namespace phaseopt {

namespace {
constexpr double kTwoPi = 2.0 * std::numbers::pi;
// Truncation orders past this point indicate a degenerate (t, tol) request.
constexpr int kMaxOrder = 1 << 24;
}  // namespace

std::complex<double> CircularPrior::coefficient(int k) const {
  const int a = k < 0 ? -k : k;
  if (a >= static_cast<int>(coeffs_.size())) return {0.0, 0.0};
  return k < 0 ? std::conj(coeffs_[a]) : coeffs_[a];
}

double CircularPrior::density_at(double phi) const {
  double s = 1.0;
  for (int k = 1; k < static_cast<int>(coeffs_.size()); ++k) {
    const auto& p = coeffs_[k];
    s += 2.0 * (p.real() * std::cos(k * phi) - p.imag() * std::sin(k * phi));
  }
  const double rho = s / kTwoPi;
  if (rho < -kPositivityEps) {
    throw std::invalid_argument(
        "circular prior density negative beyond tolerance: invalid "
        "coefficient sequence");
  }
  return rho < 0.0 ? 0.0 : rho;
}

double CircularPrior::uncertainty() const {
  const double v = 2.0 - 2.0 * coefficient(1).real();
  return std::sqrt(v < 0.0 ? 0.0 : v);
}

CircularPrior uniform_prior() {
  CircularPrior p;
  p.coeffs_ = {std::complex<double>(1.0, 0.0)};
  p.label_ = "uniform";
  return p;
}

CircularPrior diffusive_prior(double t, double tol, int min_order) {
  if (!(t > 0.0)) {
    throw std::invalid_argument("diffusive prior requires t > 0");
  }
  if (!(tol > 0.0 && tol < 1.0)) {
    throw std::invalid_argument("diffusive prior requires tol in (0, 1)");
  }
  if (min_order < 0) {
    throw std::invalid_argument("min_order must be nonnegative");
  }

  // Smallest K with exp(-(K+1)^2 t) < tol: scan up from the first dropped
  // index q = K+1. Coefficients decay fast so the scan is short.
  int q = 1;
  while (std::exp(-static_cast<double>(q) * q * t) >= tol) {
    if (++q > kMaxOrder) {
      throw std::invalid_argument(
          "diffusive prior truncation order exceeds limit; increase t or tol");
    }
  }
  int order = q - 1;
  if (order < min_order) order = min_order;

  CircularPrior p;
  p.coeffs_.resize(order + 1);
  for (int k = 0; k <= order; ++k) {
    p.coeffs_[k] = std::exp(-static_cast<double>(k) * k * t);
  }
  char buf[64];
  std::snprintf(buf, sizeof(buf), "diffusive(t=%g)", t);
  p.label_ = buf;
  p.diffusion_time_ = t;
  p.coeff_tol_ = tol;
  return p;
}

CircularPrior prior_from_coefficients(std::vector<std::complex<double>> coeffs,
                                      std::string label) {
  if (coeffs.empty()) {
    throw std::invalid_argument("prior needs at least the k = 0 coefficient");
  }
  if (std::abs(coeffs[0] - std::complex<double>(1.0, 0.0)) > 1e-12) {
    throw std::invalid_argument("prior coefficient p_0 must equal 1");
  }
  coeffs[0] = {1.0, 0.0};
  for (const auto& c : coeffs) {
    if (!std::isfinite(c.real()) || !std::isfinite(c.imag())) {
      throw std::invalid_argument("prior coefficients must be finite");
    }
    if (std::abs(c) > 1.0 + 1e-12) {
      throw std::invalid_argument("prior coefficients must satisfy |p_k| <= 1");
    }
  }

  CircularPrior p;
  p.coeffs_ = std::move(coeffs);
  p.label_ = std::move(label);

  // Positivity screen; density_at throws past -kPositivityEps.
  const int samples = 2048;
  for (int j = 0; j < samples; ++j) {
    p.density_at(-std::numbers::pi + kTwoPi * j / samples);
  }
  return p;
}

}  // namespace phaseopt

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
#include <numbers>
#include <random>
#include <vector>

#include "phaseopt/estimation.hpp"
#include "phaseopt/prior.hpp"
#include "phaseopt/states.hpp"

namespace test_support {

using Complex = std::complex<double>;

inline phaseopt::ProbeState random_state(int n, std::mt19937_64& rng) {
  std::normal_distribution<double> gauss(0.0, 1.0);
  Eigen::VectorXcd a(n + 1);
  for (int j = 0; j <= n; ++j) a(j) = Complex(gauss(rng), gauss(rng));
  return phaseopt::state_from_amplitudes(a);
}

// A valid (possibly asymmetric) prior: the squared modulus of a random
// trigonometric polynomial is nonnegative by construction and its Fourier
// coefficients come out in closed form.
inline phaseopt::CircularPrior random_fourier_prior(int degree,
                                                    std::mt19937_64& rng) {
  std::normal_distribution<double> gauss(0.0, 1.0);
  std::vector<Complex> a(degree + 1);
  double norm = 0.0;
  for (auto& c : a) {
    c = Complex(gauss(rng), gauss(rng));
    norm += std::norm(c);
  }
  std::vector<Complex> coeffs(degree + 1, Complex(0.0, 0.0));
  for (int k = 0; k <= degree; ++k) {
    Complex acc(0.0, 0.0);
    for (int l = 0; l + k <= degree; ++l) acc += a[l + k] * std::conj(a[l]);
    coeffs[k] = acc / norm;
  }
  coeffs[0] = Complex(1.0, 0.0);
  return phaseopt::prior_from_coefficients(std::move(coeffs), "random");
}

inline Eigen::MatrixXcd haar_basis(int d, std::mt19937_64& rng) {
  std::normal_distribution<double> gauss(0.0, 1.0);
  Eigen::MatrixXcd z(d, d);
  for (int r = 0; r < d; ++r) {
    for (int c = 0; c < d; ++c) z(r, c) = Complex(gauss(rng), gauss(rng));
  }
  Eigen::HouseholderQR<Eigen::MatrixXcd> qr(z);
  return qr.householderQ();
}

inline phaseopt::PhaseMeasurement random_measurement(int d,
                                                     std::mt19937_64& rng) {
  std::uniform_real_distribution<double> angle(-std::numbers::pi,
                                               std::numbers::pi);
  std::vector<double> phases(d);
  for (auto& p : phases) p = angle(rng);
  return phaseopt::PhaseMeasurement(haar_basis(d, rng), std::move(phases));
}

}  // namespace test_support

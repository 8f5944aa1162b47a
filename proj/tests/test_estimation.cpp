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

#include <algorithm>
#include <cmath>
#include <doctest.h>
#include <numbers>
#include <random>

#include "helpers.hpp"
#include "phaseopt/estimation.hpp"
#include "phaseopt/oracle.hpp"

using namespace phaseopt;
using test_support::random_fourier_prior;
using test_support::random_state;

TEST_CASE("block entries: pure state with diffusive prior") {
  std::mt19937_64 rng(21);
  const ProbeState psi = random_state(4, rng);
  const double t = 0.37;
  const OffDiagonalBlock block = build_r10(psi, diffusive_prior(t, 1e-14, 6));
  for (int n = 0; n <= 4; ++n) {
    for (int m = 0; m <= 4; ++m) {
      const std::complex<double> expected =
          0.5 * psi.amplitudes()(n) * std::conj(psi.amplitudes()(m)) *
          std::exp(-double(m - n + 1) * (m - n + 1) * t);
      CHECK(std::abs(block.matrix(n, m) - expected) < 1e-14);
    }
  }
}

TEST_CASE("block is the adjoint of its conjugate companion") {
  // The companion block with coefficient index n-m+1 must be the exact
  // adjoint, including for asymmetric (complex-coefficient) priors.
  std::mt19937_64 rng(22);
  const CircularPrior prior = random_fourier_prior(7, rng);
  const DensityMatrix rho = pure_to_density(random_state(5, rng));
  const OffDiagonalBlock block = build_r10(rho, prior);

  Eigen::MatrixXcd companion(6, 6);
  for (int n = 0; n < 6; ++n) {
    for (int m = 0; m < 6; ++m) {
      companion(n, m) = 0.5 * rho.matrix()(n, m) * prior.coefficient(n - m + 1);
    }
  }
  CHECK((block.matrix - companion.adjoint()).cwiseAbs().maxCoeff() < 1e-15);
}

TEST_CASE("block under the uniform prior keeps only the subdiagonal") {
  std::mt19937_64 rng(23);
  const ProbeState psi = random_state(5, rng);
  const OffDiagonalBlock block = build_r10(psi, uniform_prior());
  for (int n = 0; n < 6; ++n) {
    for (int m = 0; m < 6; ++m) {
      if (n == m + 1) {
        const std::complex<double> expected =
            0.5 * psi.amplitudes()(n) * std::conj(psi.amplitudes()(m));
        CHECK(std::abs(block.matrix(n, m) - expected) < 1e-15);
      } else {
        CHECK(block.matrix(n, m) == std::complex<double>(0.0, 0.0));
      }
    }
  }
}

TEST_CASE("near-delta prior drives the block to rank one with norm 1/2") {
  std::mt19937_64 rng(24);
  const ProbeState psi = random_state(4, rng);
  const OffDiagonalBlock block = build_r10(psi, diffusive_prior(1e-8, 1e-14));
  Eigen::JacobiSVD<Eigen::MatrixXcd> svd(block.matrix);
  CHECK(svd.singularValues()(0) == doctest::Approx(0.5).epsilon(1e-5));
  CHECK(svd.singularValues()(1) < 1e-5);
  CHECK(svd.singularValues().sum() == doctest::Approx(0.5).epsilon(1e-5));
}

TEST_CASE("N=1 flat-state block table") {
  const double t = 0.8;
  const OffDiagonalBlock block =
      build_r10(flat_state(1), diffusive_prior(t, 1e-14, 2));
  CHECK(std::abs(block.matrix(0, 0) - 0.25 * std::exp(-t)) < 1e-15);
  CHECK(std::abs(block.matrix(0, 1) - 0.25 * std::exp(-4.0 * t)) < 1e-15);
  CHECK(std::abs(block.matrix(1, 0) - 0.25) < 1e-15);
  CHECK(std::abs(block.matrix(1, 1) - 0.25 * std::exp(-t)) < 1e-15);
}

TEST_CASE("optimal cost closed forms") {
  Eigen::VectorXcd trivial(1);
  trivial << 1.0;
  CHECK(optimal_cost(build_r10(state_from_amplitudes(trivial),
                               uniform_prior())) ==
        doctest::Approx(2.0).epsilon(1e-15));

  CHECK(optimal_cost(build_r10(flat_state(1), uniform_prior())) ==
        doctest::Approx(1.0).epsilon(1e-13));

  CHECK(optimal_cost(build_r10(berry_wiseman_state(10), uniform_prior())) ==
        doctest::Approx(2.0 * (1.0 - std::cos(std::numbers::pi / 12.0)))
            .epsilon(1e-12));
}

TEST_CASE("cost stays within [0, 2]; zero block means cost 2") {
  // N00N under the uniform prior has no adjacent support: the block vanishes.
  const OffDiagonalBlock zero = build_r10(noon_state(3), uniform_prior());
  CHECK(zero.matrix.cwiseAbs().maxCoeff() == 0.0);
  CHECK(optimal_cost(zero) == 2.0);

  std::mt19937_64 rng(31);
  for (int i = 0; i < 20; ++i) {
    const double t = std::exp(std::uniform_real_distribution<double>(
        std::log(1e-3), std::log(30.0))(rng));
    const int n = std::uniform_int_distribution<int>(1, 8)(rng);
    const OffDiagonalBlock block =
        build_r10(random_state(n, rng), diffusive_prior(t, 1e-14, n + 1));
    Eigen::JacobiSVD<Eigen::MatrixXcd> svd(block.matrix);
    CHECK(svd.singularValues().sum() <= 0.5 + 1e-12);
    const double cost = optimal_cost(block);
    CHECK(cost >= 0.0);
    CHECK(cost < 2.0);
  }
}

TEST_CASE("uniform-prior optimal measurement is the covariant one") {
  const int n = 4;
  const ProbeState psi = berry_wiseman_state(n);
  const OffDiagonalBlock block = build_r10(psi, uniform_prior());
  const PhaseMeasurement m = optimal_measurement(block);

  // Discrete Fourier phases: sorted estimator phases step by 2pi/(N+1).
  REQUIRE(m.outcomes() == n + 1);
  for (int k = 0; k + 1 < m.outcomes(); ++k) {
    CHECK(m.phases()[k + 1] - m.phases()[k] ==
          doctest::Approx(2.0 * std::numbers::pi / (n + 1)).epsilon(1e-10));
  }
  // Cost is unchanged when evaluated through the generic path.
  const StrategyReport eval = evaluate_strategy(pure_to_density(psi),
                                                uniform_prior(), m);
  CHECK(eval.cost == doctest::Approx(optimal_cost(block)).epsilon(1e-12));
}

TEST_CASE("saturation identity for random instances") {
  std::mt19937_64 rng(32);
  for (int i = 0; i < 20; ++i) {
    const int n = std::uniform_int_distribution<int>(1, 9)(rng);
    const ProbeState psi = random_state(n, rng);
    const CircularPrior prior = random_fourier_prior(n + 2, rng);
    const OffDiagonalBlock block = build_r10(psi, prior);

    Eigen::JacobiSVD<Eigen::MatrixXcd> svd(block.matrix);
    const double trace_norm = svd.singularValues().sum();
    const StrategyReport rt = evaluate_strategy(
        pure_to_density(psi), prior, optimal_measurement(block));
    CHECK(rt.fidelity == doctest::Approx(0.5 + trace_norm).epsilon(1e-10));
    CHECK(rt.cost == doctest::Approx(optimal_cost(block)).epsilon(1e-12));
    CHECK(rt.posterior_uncertainty ==
          doctest::Approx(std::sqrt(rt.cost)).epsilon(1e-14));
  }
}

TEST_CASE("no strategy beats the optimum") {
  std::mt19937_64 rng(33);
  for (int i = 0; i < 50; ++i) {
    const int n = std::uniform_int_distribution<int>(1, 6)(rng);
    const ProbeState psi = random_state(n, rng);
    const CircularPrior prior = random_fourier_prior(n + 1, rng);
    const double best = optimal_cost(build_r10(psi, prior));
    const StrategyReport any =
        evaluate_strategy(pure_to_density(psi), prior,
                          test_support::random_measurement(n + 1, rng));
    CHECK(any.cost >= best - 1e-12);
  }
}

TEST_CASE("evaluate_strategy agrees with the direct quadrature") {
  std::mt19937_64 rng(34);
  for (int i = 0; i < 8; ++i) {
    const int n = std::uniform_int_distribution<int>(1, 5)(rng);
    const double t = std::uniform_real_distribution<double>(0.1, 1.5)(rng);
    const ProbeState psi = random_state(n, rng);
    const CircularPrior prior = diffusive_prior(t, 1e-14, n + 1);
    const PhaseMeasurement m = test_support::random_measurement(n + 1, rng);
    const double closed = evaluate_strategy(pure_to_density(psi), prior, m).cost;
    const double direct = quadrature_cost(psi, prior, m, QuadratureGrid(2048));
    CHECK(closed == doctest::Approx(direct).epsilon(1e-6));
  }
}

TEST_CASE("measurement validation") {
  Eigen::MatrixXcd skewed(2, 2);
  skewed << 1.0, 0.5, 0.0, 1.0;
  CHECK_THROWS_AS(PhaseMeasurement(skewed, {0.0, 0.0}), std::invalid_argument);

  Eigen::MatrixXcd id = Eigen::MatrixXcd::Identity(2, 2);
  CHECK_THROWS_AS(PhaseMeasurement(id, {0.0}), std::invalid_argument);

  // Phases wrap into [-pi, pi).
  const PhaseMeasurement ok(id, {3.0 * std::numbers::pi, -std::numbers::pi});
  CHECK(ok.phases()[0] == doctest::Approx(-std::numbers::pi));
  CHECK(ok.phases()[1] == doctest::Approx(-std::numbers::pi));

  std::mt19937_64 rng(35);
  const DensityMatrix rho = pure_to_density(random_state(3, rng));
  const PhaseMeasurement wrong_dim(Eigen::MatrixXcd::Identity(3, 3),
                                   {0.0, 0.0, 0.0});
  CHECK_THROWS_AS(evaluate_strategy(rho, uniform_prior(), wrong_dim),
                  std::invalid_argument);
}

TEST_CASE("shifting the prior shifts the estimators and not the cost") {
  std::mt19937_64 rng(36);
  for (int i = 0; i < 5; ++i) {
    const int n = 4;
    const ProbeState psi = random_state(n, rng);
    const CircularPrior prior = random_fourier_prior(n + 2, rng);
    const double theta =
        std::uniform_real_distribution<double>(-2.5, 2.5)(rng);

    std::vector<std::complex<double>> rotated = prior.coefficients();
    for (int k = 0; k < static_cast<int>(rotated.size()); ++k) {
      rotated[k] *= std::polar(1.0, k * theta);
    }
    const CircularPrior shifted = prior_from_coefficients(rotated, "shifted");

    const OffDiagonalBlock b0 = build_r10(psi, prior);
    const OffDiagonalBlock b1 = build_r10(psi, shifted);
    CHECK(optimal_cost(b0) == doctest::Approx(optimal_cost(b1)).epsilon(1e-10));

    // Estimator phases move rigidly by -theta (mod 2pi).
    const PhaseMeasurement m0 = optimal_measurement(b0);
    std::vector<double> moved;
    for (double p : m0.phases()) {
      moved.push_back(wrap_angle(p - theta));
    }
    std::sort(moved.begin(), moved.end());
    std::vector<double> found = optimal_measurement(b1).phases();
    std::sort(found.begin(), found.end());
    for (std::size_t k = 0; k < moved.size(); ++k) {
      const double diff = std::abs(wrap_angle(moved[k] - found[k]));
      CHECK(diff < 1e-8);
    }
  }
}

TEST_CASE("optimal cost is non-decreasing in the diffusion time") {
  const ProbeState psi = berry_wiseman_state(6);
  double prev = -1.0;
  for (int i = 0; i < 40; ++i) {
    const double t = 1e-3 * std::pow(30.0 / 1e-3, i / 39.0);
    const double cost = optimal_cost(build_r10(psi, diffusive_prior(t, 1e-14, 7)));
    CHECK(cost >= prev - 1e-12);
    prev = cost;
  }
}

TEST_CASE("measurement gauge freedom leaves the cost alone") {
  std::mt19937_64 rng(37);
  const int n = 5;
  const ProbeState psi = random_state(n, rng);
  const CircularPrior prior = random_fourier_prior(n + 2, rng);
  const PhaseMeasurement m = optimal_measurement(build_r10(psi, prior));

  // Permute outcomes and rephase each basis column: a different but equally
  // valid gauge of the same strategy.
  std::vector<int> perm(n + 1);
  for (int k = 0; k <= n; ++k) perm[k] = k;
  std::shuffle(perm.begin(), perm.end(), rng);
  Eigen::MatrixXcd basis(n + 1, n + 1);
  std::vector<double> phases(n + 1);
  std::uniform_real_distribution<double> angle(-3.0, 3.0);
  for (int k = 0; k <= n; ++k) {
    basis.col(k) = m.basis().col(perm[k]) * std::polar(1.0, angle(rng));
    phases[k] = m.phases()[perm[k]];
  }
  const StrategyReport a =
      evaluate_strategy(pure_to_density(psi), prior, m);
  const StrategyReport b = evaluate_strategy(
      pure_to_density(psi), prior, PhaseMeasurement(basis, phases));
  CHECK(a.cost == doctest::Approx(b.cost).epsilon(1e-12));
}

TEST_CASE("a global phase on the probe leaves the cost invariant") {
  std::mt19937_64 rng(40);
  const ProbeState psi = random_state(5, rng);
  const CircularPrior prior = random_fourier_prior(7, rng);
  const ProbeState rephased =
      state_from_amplitudes(psi.amplitudes() * std::polar(1.0, 1.37));
  CHECK(optimal_cost(build_r10(psi, prior)) ==
        doctest::Approx(optimal_cost(build_r10(rephased, prior)))
            .epsilon(1e-13));
}

TEST_CASE("mixed probes: fidelity is linear in rho, mixing never helps") {
  std::mt19937_64 rng(41);
  const int n = 4;
  const ProbeState a = random_state(n, rng);
  const ProbeState b = random_state(n, rng);
  const CircularPrior prior = random_fourier_prior(n + 2, rng);
  const double w = 0.3;
  const DensityMatrix mix = density_from_matrix(
      w * pure_to_density(a).matrix() + (1.0 - w) * pure_to_density(b).matrix());

  const PhaseMeasurement m = test_support::random_measurement(n + 1, rng);
  const double f_mix = evaluate_strategy(mix, prior, m).fidelity;
  const double f_a = evaluate_strategy(pure_to_density(a), prior, m).fidelity;
  const double f_b = evaluate_strategy(pure_to_density(b), prior, m).fidelity;
  CHECK(f_mix == doctest::Approx(w * f_a + (1.0 - w) * f_b).epsilon(1e-12));

  // Trace-norm convexity: a mixture can never beat its best component.
  const double c_mix = optimal_cost(build_r10(mix, prior));
  const double c_a = optimal_cost(build_r10(a, prior));
  const double c_b = optimal_cost(build_r10(b, prior));
  CHECK(c_mix >= w * c_a + (1.0 - w) * c_b - 1e-12);
  CHECK(c_mix >= std::min(c_a, c_b) - 1e-12);
}

TEST_CASE("N00N(3) in the local regime uses only two outcomes") {
  const CircularPrior prior = diffusive_prior(0.02, 1e-14, 4);
  const ProbeState psi = noon_state(3);
  const PhaseMeasurement m = optimal_measurement(build_r10(psi, prior));

  std::vector<double> grid;
  for (int j = 0; j < 240; ++j) {
    grid.push_back(-std::numbers::pi + 2.0 * std::numbers::pi * j / 240);
  }
  const Eigen::MatrixXd probs = conditional_probabilities(psi, m, grid);
  int active = 0;
  for (int k = 0; k < 4; ++k) {
    const double peak = probs.col(k).maxCoeff();
    if (peak > 0.01) {
      ++active;
    } else {
      CHECK(peak < 1e-12);  // the idle outcomes are exactly dark
    }
  }
  CHECK(active == 2);
}

TEST_CASE("conditional probability rows are normalized and periodic") {
  std::mt19937_64 rng(38);
  const ProbeState psi = noon_state(3);
  const PhaseMeasurement m = test_support::random_measurement(4, rng);

  std::vector<double> grid;
  const int points = 300;  // divisible by 3: phi + 2pi/3 lands on the grid
  for (int j = 0; j < points; ++j) {
    grid.push_back(-std::numbers::pi + 2.0 * std::numbers::pi * j / points);
  }
  const Eigen::MatrixXd probs = conditional_probabilities(psi, m, grid);
  for (int r = 0; r < points; ++r) {
    CHECK(probs.row(r).sum() == doctest::Approx(1.0).epsilon(1e-12));
    for (int k = 0; k < 4; ++k) {
      CHECK(probs(r, k) ==
            doctest::Approx(probs((r + points / 3) % points, k))
                .epsilon(1e-9));
    }
  }
}

TEST_CASE("a number eigenstate is phase-insensitive") {
  Eigen::VectorXcd ground = Eigen::VectorXcd::Zero(4);
  ground(0) = 1.0;
  const ProbeState psi = state_from_amplitudes(ground);
  std::mt19937_64 rng(39);
  const PhaseMeasurement m = test_support::random_measurement(4, rng);
  const std::vector<double> grid{-2.0, -0.5, 0.0, 1.0, 3.0};
  const Eigen::MatrixXd probs = conditional_probabilities(psi, m, grid);
  for (int k = 0; k < 4; ++k) {
    for (int r = 1; r < 5; ++r) {
      CHECK(probs(r, k) == doctest::Approx(probs(0, k)).epsilon(1e-12));
    }
  }
}

TEST_CASE("pure-state quantum Fisher information") {
  for (int n : {1, 3, 10}) {
    CHECK(qfi_pure(noon_state(n)) ==
          doctest::Approx(double(n) * n).epsilon(1e-12));
  }
  Eigen::VectorXcd basis = Eigen::VectorXcd::Zero(5);
  basis(2) = 1.0;
  CHECK(qfi_pure(state_from_amplitudes(basis)) == doctest::Approx(0.0));
  CHECK(qfi_pure(binomial_state(10)) == doctest::Approx(10.0).epsilon(1e-12));
}

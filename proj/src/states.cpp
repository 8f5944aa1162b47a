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

#include "phaseopt/states.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace phaseopt {

namespace {
void require_positive_n(int n, const char* what) {
  if (n < 1) {
    throw std::invalid_argument(std::string(what) + " requires N >= 1");
  }
}
}  // namespace

ProbeState noon_state(int n) {
  require_positive_n(n, "noon state");
  Eigen::VectorXcd a = Eigen::VectorXcd::Zero(n + 1);
  a(0) = a(n) = 1.0 / std::numbers::sqrt2;
  return ProbeState(std::move(a));
}

ProbeState berry_wiseman_state(int n) {
  require_positive_n(n, "Berry-Wiseman state");
  Eigen::VectorXcd a(n + 1);
  const double norm = std::sqrt(2.0 / (n + 2));
  for (int j = 0; j <= n; ++j) {
    a(j) = norm * std::sin((j + 1) * std::numbers::pi / (n + 2));
  }
  // The sine profile is normalized in closed form; renormalize to kill the
  // last ulp so the unit-norm invariant holds exactly.
  a /= a.norm();
  return ProbeState(std::move(a));
}

ProbeState binomial_state(int n) {
  require_positive_n(n, "binomial state");
  Eigen::VectorXcd a(n + 1);
  // C(N, j) / 2^N built multiplicatively to stay in range for moderate N.
  double c = std::pow(0.5, n);
  for (int j = 0; j <= n; ++j) {
    a(j) = std::sqrt(c);
    c = c * (n - j) / (j + 1);
  }
  a /= a.norm();
  return ProbeState(std::move(a));
}

ProbeState flat_state(int n) {
  if (n < 0) throw std::invalid_argument("flat state requires N >= 0");
  return ProbeState(Eigen::VectorXcd::Constant(
      n + 1, std::complex<double>(1.0 / std::sqrt(n + 1.0), 0.0)));
}

ProbeState state_from_amplitudes(const Eigen::VectorXcd& raw) {
  if (raw.size() == 0) {
    throw std::invalid_argument("amplitude vector must be nonempty");
  }
  const double norm = raw.norm();
  if (!(norm > 1e-300) || !std::isfinite(norm)) {
    throw std::invalid_argument("amplitude vector must be nonzero and finite");
  }
  return ProbeState(raw / norm);
}

ProbeState canonical_gauge(const ProbeState& psi) {
  Eigen::VectorXcd a = psi.amplitudes();
  for (int j = 0; j < a.size(); ++j) {
    const double mag = std::abs(a(j));
    if (mag > 1e-12) {
      a *= std::conj(a(j)) / mag;
      break;
    }
  }
  return ProbeState(std::move(a));
}

ProbeState probe_state_by_name(const std::string& name, int n) {
  if (name == "noon") return noon_state(n);
  if (name == "bw") return berry_wiseman_state(n);
  if (name == "binomial") return binomial_state(n);
  if (name == "flat") return flat_state(n);
  throw std::invalid_argument("unknown probe state name: " + name);
}

DensityMatrix pure_to_density(const ProbeState& psi) {
  const Eigen::VectorXcd& a = psi.amplitudes();
  return DensityMatrix(a * a.adjoint());
}

DensityMatrix density_from_matrix(const Eigen::MatrixXcd& m) {
  if (m.rows() == 0 || m.rows() != m.cols()) {
    throw std::invalid_argument("density matrix must be square and nonempty");
  }
  if ((m - m.adjoint()).cwiseAbs().maxCoeff() > 1e-12) {
    throw std::invalid_argument("density matrix must be Hermitian");
  }
  if (std::abs(m.trace() - std::complex<double>(1.0, 0.0)) > 1e-12) {
    throw std::invalid_argument("density matrix must have unit trace");
  }
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(m,
                                                     Eigen::EigenvaluesOnly);
  if (es.eigenvalues().minCoeff() < -1e-10) {
    throw std::invalid_argument("density matrix must be positive semidefinite");
  }
  return DensityMatrix(m);
}

}  // namespace phaseopt

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

#include "phaseopt/io.hpp"

#include <complex>
#include <fstream>
#include <stdexcept>

namespace phaseopt {

namespace {
using Complex = std::complex<double>;

Json complex_to_json(const Complex& z) { return Json::array({z.real(), z.imag()}); }

Complex complex_from_json(const Json& j) {
  if (!j.is_array() || j.size() != 2) {
    throw std::invalid_argument("complex values must be [re, im] pairs");
  }
  return {j[0].get<double>(), j[1].get<double>()};
}

std::string type_of(const Json& j) {
  if (!j.is_object() || !j.contains("type")) {
    throw std::invalid_argument("expected an object with a \"type\" field");
  }
  return j.at("type").get<std::string>();
}
}  // namespace

Json prior_to_json(const CircularPrior& prior) {
  if (prior.diffusion_time()) {
    return {{"type", "diffusive"},
            {"t", *prior.diffusion_time()},
            {"tol", prior.coefficient_tol().value_or(
                        CircularPrior::kDefaultCoeffTol)}};
  }
  Json coeffs = Json::array();
  for (const auto& c : prior.coefficients()) coeffs.push_back(complex_to_json(c));
  return {{"type", "fourier"}, {"coeffs", coeffs}};
}

CircularPrior prior_from_json(const Json& j) {
  const std::string type = type_of(j);
  if (type == "diffusive") {
    return diffusive_prior(j.at("t").get<double>(),
                           j.value("tol", CircularPrior::kDefaultCoeffTol));
  }
  if (type == "fourier") {
    std::vector<Complex> coeffs;
    for (const auto& c : j.at("coeffs")) coeffs.push_back(complex_from_json(c));
    return prior_from_coefficients(std::move(coeffs));
  }
  throw std::invalid_argument("unknown prior type: " + type);
}

Json state_to_json(const ProbeState& psi) {
  Json values = Json::array();
  for (int n = 0; n < psi.dim(); ++n) {
    values.push_back(complex_to_json(psi.amplitudes()(n)));
  }
  return {{"type", "amplitudes"}, {"values", values}};
}

Json state_to_json(const DensityMatrix& rho) {
  Json rows = Json::array();
  for (int r = 0; r < rho.dim(); ++r) {
    Json row = Json::array();
    for (int c = 0; c < rho.dim(); ++c) {
      row.push_back(complex_to_json(rho.matrix()(r, c)));
    }
    rows.push_back(std::move(row));
  }
  return {{"type", "density"}, {"matrix", rows}};
}

AnyState state_from_json(const Json& j) {
  const std::string type = type_of(j);
  if (type == "noon" || type == "bw" || type == "binomial" || type == "flat") {
    return probe_state_by_name(type, j.at("n").get<int>());
  }
  if (type == "amplitudes") {
    const Json& values = j.at("values");
    Eigen::VectorXcd a(values.size());
    for (int n = 0; n < static_cast<int>(values.size()); ++n) {
      a(n) = complex_from_json(values[n]);
    }
    return state_from_amplitudes(a);
  }
  if (type == "density") {
    const Json& rows = j.at("matrix");
    const int d = static_cast<int>(rows.size());
    Eigen::MatrixXcd m(d, d);
    for (int r = 0; r < d; ++r) {
      if (static_cast<int>(rows[r].size()) != d) {
        throw std::invalid_argument("density matrix rows must be square");
      }
      for (int c = 0; c < d; ++c) m(r, c) = complex_from_json(rows[r][c]);
    }
    return density_from_matrix(m);
  }
  throw std::invalid_argument("unknown state type: " + type);
}

Json report_to_json(const StrategyReport& report) {
  Json basis = Json::array();
  const PhaseMeasurement& m = report.measurement;
  for (int k = 0; k < m.outcomes(); ++k) {
    Json vec = Json::array();
    for (int n = 0; n < m.dim(); ++n) {
      vec.push_back(complex_to_json(m.basis()(n, k)));
    }
    basis.push_back(std::move(vec));
  }
  return {{"cost", report.cost},
          {"fidelity", report.fidelity},
          {"posterior_uncertainty", report.posterior_uncertainty},
          {"phases", m.phases()},
          {"basis", basis}};
}

Json result_to_json(const OptimizerResult& result) {
  return {{"state", state_to_json(result.state)},
          {"cost", result.cost},
          {"iterations", result.iterations},
          {"converged", result.converged},
          {"fidelity_trace", result.fidelity_trace}};
}

Json load_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open file: " + path);
  try {
    return Json::parse(in);
  } catch (const Json::parse_error& e) {
    throw std::invalid_argument("invalid JSON in " + path + ": " + e.what());
  }
}

}  // namespace phaseopt

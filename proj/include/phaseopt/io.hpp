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

#include <json.hpp>
#include <string>
#include <variant>

#include "phaseopt/estimation.hpp"
#include "phaseopt/optimizer.hpp"

namespace phaseopt {

using Json = nlohmann::json;

// Wire formats. Complex numbers are [re, im] pairs.
//   prior:  {"type":"diffusive","t":0.2,"tol":1e-14}
//           {"type":"fourier","coeffs":[[re,im],...]}
//   state:  {"type":"noon"|"bw"|"binomial"|"flat","n":10}
//           {"type":"amplitudes","values":[[re,im],...]}
//           {"type":"density","matrix":[[[re,im],...],...]}
//   report: {"cost","fidelity","posterior_uncertainty","phases","basis"}
//   result: {"state","cost","iterations","converged","fidelity_trace"}

Json prior_to_json(const CircularPrior& prior);
CircularPrior prior_from_json(const Json& j);

Json state_to_json(const ProbeState& psi);
Json state_to_json(const DensityMatrix& rho);

using AnyState = std::variant<ProbeState, DensityMatrix>;
AnyState state_from_json(const Json& j);

Json report_to_json(const StrategyReport& report);
Json result_to_json(const OptimizerResult& result);

/// Parse a JSON document from a file path; wraps read/parse failures in
/// std::invalid_argument so they map to usage errors.
Json load_json_file(const std::string& path);

}  // namespace phaseopt

// Copyright 2026 The telesim Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <json.hpp>

#include "telesim/capacities.h"
#include "telesim/channel_metrics.h"
#include "telesim/pauli_damping.h"
#include "telesim/teleport_sim.h"

namespace telesim {

/// Raised when a JSON document does not match the expected schema.
class SchemaError : public std::runtime_error {
   public:
    explicit SchemaError(const std::string &what) : std::runtime_error(what) {}
};

/// Complex matrices are nested arrays of [re, im] pairs.
nlohmann::json matrix_to_json(const ComplexMatrix &m);
ComplexMatrix matrix_from_json(const nlohmann::json &j);

nlohmann::json real_matrix_to_json(const Eigen::MatrixXd &m);
nlohmann::json vec3_to_json(const Vec3 &v);

/// {"p": [[p_{0|0}, p_{0|1}, p_{0|2}, p_{0|3}], ...]}, row l, column k.
nlohmann::json classical_channel_to_json(const ClassicalChannel &pi);
ClassicalChannel classical_channel_from_json(const nlohmann::json &j);

/// Either {"rho": matrix} or {"a": [..3], "b": [..3], "T": [[..3] x3]}.
nlohmann::json two_qubit_state_to_json(const TwoQubitState &tau);
TwoQubitState two_qubit_state_from_json(const nlohmann::json &j);

nlohmann::json affine_channel_to_json(const AffineChannel &F);
nlohmann::json decomposition_to_json(const PauliDampingDecomposition &d);
nlohmann::json closest_pauli_to_json(const ClosestPauliResult &r);
nlohmann::json witness_report_to_json(const DiamondWitnessReport &r);
nlohmann::json covariance_report_to_json(const CovarianceReport &r);
nlohmann::json region_to_json(const SimulabilityRegion &r);
nlohmann::json vertex_set_to_json(const PolytopeVertexSet &v);

}  // namespace telesim

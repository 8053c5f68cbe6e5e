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

#include "telesim/json_io.h"

namespace telesim {

using nlohmann::json;

namespace {

double number_at(const json &j, const char *context) {
    if (!j.is_number()) {
        throw SchemaError(std::string(context) + ": expected a number");
    }
    return j.get<double>();
}

Vec3 vec3_from_json(const json &j, const char *context) {
    if (!j.is_array() || j.size() != 3) {
        throw SchemaError(std::string(context) + ": expected an array of 3 numbers");
    }
    return Vec3(number_at(j[0], context), number_at(j[1], context), number_at(j[2], context));
}

}  // namespace

json matrix_to_json(const ComplexMatrix &m) {
    json rows = json::array();
    for (Eigen::Index r = 0; r < m.rows(); ++r) {
        json row = json::array();
        for (Eigen::Index c = 0; c < m.cols(); ++c) {
            row.push_back(json::array({m(r, c).real(), m(r, c).imag()}));
        }
        rows.push_back(std::move(row));
    }
    return rows;
}

ComplexMatrix matrix_from_json(const json &j) {
    if (!j.is_array() || j.empty() || !j[0].is_array() || j[0].empty()) {
        throw SchemaError("matrix: expected a non-empty array of rows");
    }
    const auto rows = static_cast<Eigen::Index>(j.size());
    const auto cols = static_cast<Eigen::Index>(j[0].size());
    ComplexMatrix m(rows, cols);
    for (Eigen::Index r = 0; r < rows; ++r) {
        const json &row = j[static_cast<std::size_t>(r)];
        if (!row.is_array() || static_cast<Eigen::Index>(row.size()) != cols) {
            throw SchemaError("matrix: ragged rows");
        }
        for (Eigen::Index c = 0; c < cols; ++c) {
            const json &entry = row[static_cast<std::size_t>(c)];
            if (entry.is_number()) {
                m(r, c) = Complex(entry.get<double>(), 0.0);
            } else if (entry.is_array() && entry.size() == 2) {
                m(r, c) = Complex(number_at(entry[0], "matrix entry"), number_at(entry[1], "matrix entry"));
            } else {
                throw SchemaError("matrix: entries must be [re, im] pairs");
            }
        }
    }
    return m;
}

json real_matrix_to_json(const Eigen::MatrixXd &m) {
    json rows = json::array();
    for (Eigen::Index r = 0; r < m.rows(); ++r) {
        json row = json::array();
        for (Eigen::Index c = 0; c < m.cols(); ++c) {
            row.push_back(m(r, c));
        }
        rows.push_back(std::move(row));
    }
    return rows;
}

json vec3_to_json(const Vec3 &v) {
    return json::array({v.x(), v.y(), v.z()});
}

json classical_channel_to_json(const ClassicalChannel &pi) {
    return json{{"p", real_matrix_to_json(pi.matrix())}};
}

ClassicalChannel classical_channel_from_json(const json &j) {
    if (!j.is_object() || !j.contains("p")) {
        throw SchemaError("classical channel: expected an object with key \"p\"");
    }
    const json &p = j["p"];
    if (!p.is_array() || p.size() != 4) {
        throw SchemaError("classical channel: \"p\" must be a 4x4 array indexed p[l][k]");
    }
    Mat4 m;
    for (int l = 0; l < 4; ++l) {
        if (!p[l].is_array() || p[l].size() != 4) {
            throw SchemaError("classical channel: \"p\" must be a 4x4 array indexed p[l][k]");
        }
        for (int k = 0; k < 4; ++k) {
            m(l, k) = number_at(p[l][k], "classical channel entry");
        }
    }
    return ClassicalChannel(m);
}

json two_qubit_state_to_json(const TwoQubitState &tau) {
    json t = real_matrix_to_json(tau.T());
    return json{{"a", vec3_to_json(tau.a())}, {"b", vec3_to_json(tau.b())}, {"T", t}, {"rho", matrix_to_json(tau.rho())}};
}

TwoQubitState two_qubit_state_from_json(const json &j) {
    if (!j.is_object()) {
        throw SchemaError("resource: expected an object");
    }
    if (j.contains("rho")) {
        ComplexMatrix rho = matrix_from_json(j["rho"]);
        if (rho.rows() != 4 || rho.cols() != 4) {
            throw SchemaError("resource: \"rho\" must be 4x4");
        }
        return TwoQubitState(Mat4c(rho));
    }
    if (!j.contains("a") || !j.contains("b") || !j.contains("T")) {
        throw SchemaError("resource: expected \"rho\" or all of \"a\", \"b\", \"T\"");
    }
    const json &t = j["T"];
    if (!t.is_array() || t.size() != 3) {
        throw SchemaError("resource: \"T\" must be 3x3");
    }
    Mat3 T;
    for (int r = 0; r < 3; ++r) {
        T.row(r) = vec3_from_json(t[r], "resource T row").transpose();
    }
    return two_qubit_from_abT(vec3_from_json(j["a"], "resource a"), vec3_from_json(j["b"], "resource b"), T);
}

json affine_channel_to_json(const AffineChannel &F) {
    return real_matrix_to_json(F.F());
}

json decomposition_to_json(const PauliDampingDecomposition &d) {
    return json{{"u", d.u}, {"eta", d.eta}, {"q", vec3_to_json(d.q)}};
}

json closest_pauli_to_json(const ClosestPauliResult &r) {
    return json{{"f_diag", vec3_to_json(r.f_diag)}, {"t", vec3_to_json(r.t())}, {"distance", r.distance}};
}

json witness_report_to_json(const DiamondWitnessReport &r) {
    return json{{"eta", r.eta}, {"max_deviation", r.max_deviation}, {"samples", r.samples}, {"seed", r.seed}};
}

json covariance_report_to_json(const CovarianceReport &r) {
    json rotations = json::array();
    for (const Vec3 &w : r.best_rotation) {
        rotations.push_back(vec3_to_json(w));
    }
    return json{{"covariant", r.covariant}, {"residuals", r.residuals}, {"best_rotation", rotations}};
}

json region_to_json(const SimulabilityRegion &r) {
    json vertices = json::array();
    for (const Vec3 &v : r.vertices) {
        vertices.push_back(vec3_to_json(v));
    }
    return json{{"gamma", r.gamma}, {"eta", r.eta}, {"a", r.a}, {"b", r.b}, {"vertices", vertices}};
}

json vertex_set_to_json(const PolytopeVertexSet &v) {
    json vertices = json::array();
    for (const auto &pi : v.vertices) {
        vertices.push_back(real_matrix_to_json(pi.matrix()));
    }
    return json{{"gamma", v.gamma}, {"eta", v.eta}, {"sign", v.sign}, {"vertices", vertices}};
}

}  // namespace telesim

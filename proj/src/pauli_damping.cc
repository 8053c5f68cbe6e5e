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

#include "telesim/pauli_damping.h"

#include <cmath>
#include <sstream>

#include "telesim/errors.h"

namespace telesim {

namespace {

void require_unit_interval(double value, const char *name) {
    if (!(value >= 0.0 && value <= 1.0)) {
        std::ostringstream msg;
        msg << name << " must lie in [0, 1], got " << value;
        throw ParameterError(msg.str());
    }
}

/// Diagonal and offset of a channel in Pauli-damping form, read from either
/// the classical channel (via S) or an F matrix.
PauliDampingDecomposition from_damping_form(double f30, double f11, double f22, double f33) {
    PauliDampingDecomposition d;
    d.u = f30 < 0.0 ? 1 : 0;
    d.eta = std::min(std::abs(f30), 1.0);
    const double keep = 1.0 - d.eta;
    if (keep <= tau_num()) {
        if (std::max({std::abs(f11), std::abs(f22), std::abs(f33)}) > tau_num()) {
            throw DomainError("eta = 1 requires a vanishing linear part");
        }
        d.q = Vec3::Zero();
        return d;
    }
    const double root = std::sqrt(keep);
    if (d.u == 0) {
        d.q = Vec3(f11 / root, -f22 / root, f33 / keep);
    } else {
        d.q = Vec3(f11 / root, f22 / root, -f33 / keep);
    }
    return d;
}

}  // namespace

const std::array<Vec3, 4> &tetrahedron_vertices() {
    static const std::array<Vec3, 4> vertices{
        Vec3(1, -1, 1),
        Vec3(1, 1, -1),
        Vec3(-1, -1, -1),
        Vec3(-1, 1, 1),
    };
    return vertices;
}

bool in_tetrahedron(const Vec3 &q, double tol) {
    const double x = q.x(), y = q.y(), z = q.z();
    return x + y + z <= 1.0 + tol && x - y - z <= 1.0 + tol && -x + y - z <= 1.0 + tol && -x - y + z <= 1.0 + tol;
}

Vec3 shrink_point(const Vec3 &q, double alpha) {
    require_unit_interval(alpha, "shrink factor");
    if (!in_tetrahedron(q)) {
        throw DomainError("shrink_point requires a point inside the tetrahedron");
    }
    const double root = std::sqrt(alpha);
    return Vec3(root * q.x(), root * q.y(), alpha * q.z());
}

void PauliDampingDecomposition::validate() const {
    if (u != 0 && u != 1) {
        throw DomainError("decomposition bit u must be 0 or 1");
    }
    if (!(eta >= 0.0 && eta <= 1.0)) {
        throw DomainError("damping parameter eta must lie in [0, 1]");
    }
    if (!q.allFinite() || !in_tetrahedron(q)) {
        throw DomainError("Pauli part q lies outside the tetrahedron");
    }
}

PauliDampingDecomposition decompose(double gamma, const ClassicalChannel &pi) {
    require_unit_interval(gamma, "resource damping gamma");
    const double s11 = s_coefficient(1, 1, pi);
    const double s22 = s_coefficient(2, 2, pi);
    const double s33 = s_coefficient(3, 3, pi);
    const double s30 = s_coefficient(3, 0, pi);

    PauliDampingDecomposition d;
    d.u = s30 < 0.0 ? 1 : 0;
    if (gamma == 1.0) {
        // chi_1 kills the linear part: only the offset S30 survives.
        d.eta = std::abs(s30);
        d.q = Vec3::Zero();
        return d;
    }
    d.eta = std::abs(gamma * s30);
    const double alpha = (1.0 - gamma) / (1.0 - d.eta);
    const double root = std::sqrt(alpha);
    if (d.u == 0) {
        d.q = Vec3(root * s11, root * s22, alpha * s33);
    } else {
        d.q = Vec3(root * s11, -root * s22, -alpha * s33);
    }
    return d;
}

PauliDampingDecomposition decompose_affine(const AffineChannel &F) {
    const Mat4 &m = F.F();
    const double tol = tau_num();
    bool off_structure = std::abs(m(1, 0)) > tol || std::abs(m(2, 0)) > tol;
    for (int i = 1; i <= 3; ++i) {
        for (int j = 1; j <= 3; ++j) {
            if (i != j && std::abs(m(i, j)) > tol) {
                off_structure = true;
            }
        }
    }
    if (off_structure) {
        throw DomainError("channel is not of Pauli-damping form");
    }
    PauliDampingDecomposition d = from_damping_form(m(3, 0), m(1, 1), m(2, 2), m(3, 3));
    d.validate();
    return d;
}

AffineChannel compose(const PauliDampingDecomposition &d) {
    d.validate();
    const double root = std::sqrt(1.0 - d.eta);
    const double keep = 1.0 - d.eta;
    Vec3 diagonal;
    double offset;
    if (d.u == 0) {
        diagonal = Vec3(root * d.q.x(), -root * d.q.y(), keep * d.q.z());
        offset = d.eta;
    } else {
        diagonal = Vec3(root * d.q.x(), root * d.q.y(), -keep * d.q.z());
        offset = -d.eta;
    }
    return AffineChannel::from_parts(Vec3(0.0, 0.0, offset), diagonal.asDiagonal());
}

std::array<Vec3, 8> truncated_tetrahedron_vertices(double b) {
    return {
        Vec3(1, b, -b),
        Vec3(1, -b, b),
        Vec3(b, 1, -b),
        Vec3(-b, 1, b),
        Vec3(-1, b, b),
        Vec3(-1, -b, -b),
        Vec3(b, -1, b),
        Vec3(-b, -1, -b),
    };
}

bool SimulabilityRegion::contains(const Vec3 &q, double tol) const {
    if (a <= 0.0) {
        return q.norm() <= tol;
    }
    Vec3 unshrunk(q.x() / a, q.y() / a, q.z() / (a * a));
    return in_tetrahedron(unshrunk, tol) && std::abs(unshrunk.z()) <= b + tol;
}

SimulabilityRegion region_vertices(double gamma, double eta) {
    if (!(gamma > 0.0 && gamma < 1.0)) {
        std::ostringstream msg;
        msg << "region requires 0 < gamma < 1, got " << gamma;
        throw ParameterError(msg.str());
    }
    if (!(eta >= 0.0)) {
        throw ParameterError("eta must be non-negative");
    }
    if (eta > gamma) {
        std::ostringstream msg;
        msg << "eta = " << eta << " exceeds gamma = " << gamma;
        throw DomainError(msg.str());
    }
    SimulabilityRegion region;
    region.gamma = gamma;
    region.eta = eta;
    region.a = std::sqrt((1.0 - gamma) / (1.0 - eta));
    region.b = 1.0 - eta / gamma;
    const auto corners = truncated_tetrahedron_vertices(region.b);
    for (std::size_t n = 0; n < corners.size(); ++n) {
        const Vec3 &c = corners[n];
        region.vertices[n] = Vec3(region.a * c.x(), region.a * c.y(), region.a * region.a * c.z());
    }
    return region;
}

bool is_simulable(const PauliDampingDecomposition &d, double gamma) {
    if (!(gamma > 0.0 && gamma < 1.0)) {
        throw ParameterError("is_simulable requires 0 < gamma < 1");
    }
    d.validate();
    if (d.eta > gamma + tau_num()) {
        return false;
    }
    return region_vertices(gamma, std::min(d.eta, gamma)).contains(d.q);
}

}  // namespace telesim

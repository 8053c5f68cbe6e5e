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

#include <array>
#include <vector>

#include "telesim/qubit_core.h"
#include "telesim/teleport_sim.h"

namespace telesim {

/// Vertices e_0..e_3 of the Pauli tetrahedron.
const std::array<Vec3, 4> &tetrahedron_vertices();

bool in_tetrahedron(const Vec3 &q, double tol = tau_num());

/// (sqrt(alpha) q1, sqrt(alpha) q2, alpha q3); throws DomainError if q is outside T.
Vec3 shrink_point(const Vec3 &q, double alpha);

/// E_sim = sigma_x^u o E_eta o E_P.
struct PauliDampingDecomposition {
    int u = 0;
    double eta = 0.0;
    Vec3 q = Vec3(1.0, -1.0, 1.0);

    /// Throws DomainError unless u in {0,1}, eta in [0,1] and q in T.
    void validate() const;
};

/// Decomposition of the channel simulated over chi_gamma with classical channel pi.
/// gamma in [0, 1]; gamma = 1 maps to q = 0.
PauliDampingDecomposition decompose(double gamma, const ClassicalChannel &pi);

/// Inverts compose(): reads (u, eta, q) off an F matrix of Pauli-damping form.
/// Throws DomainError if F has off-diagonal structure beyond f30.
PauliDampingDecomposition decompose_affine(const AffineChannel &F);

AffineChannel compose(const PauliDampingDecomposition &d);

/// Region of reachable q for fixed (gamma, eta): T truncated by |z| <= b and
/// shrunk by (x, y, z) -> (a x, a y, a^2 z).
struct SimulabilityRegion {
    double gamma = 0.0;
    double eta = 0.0;
    double a = 0.0;
    double b = 0.0;
    std::array<Vec3, 8> vertices{};

    bool contains(const Vec3 &q, double tol = tau_num()) const;
};

/// Requires 0 < gamma < 1 and 0 <= eta <= gamma.
SimulabilityRegion region_vertices(double gamma, double eta);

bool is_simulable(const PauliDampingDecomposition &d, double gamma);

/// Extreme points of {p_{l|k} >= 0, sum_l p_{l|k} = 1, S30 = sign * eta / gamma}.
struct PolytopeVertexSet {
    double gamma = 0.0;
    double eta = 0.0;
    int sign = 1;
    std::vector<ClassicalChannel> vertices;
};

/// Basic-feasible-solution enumeration; throws InfeasibleError for eta > gamma
/// and ParameterError for gamma <= 0 or sign not +-1.
PolytopeVertexSet enumerate_polytope_vertices(double gamma, double eta, int sign);

/// S_+ = (S11, S22, S33), S_- = (S11, -S22, -S33).
Vec3 map_S(const ClassicalChannel &pi, int sign);
std::vector<Vec3> map_S(const PolytopeVertexSet &vertex_set, int sign);

/// Eight vertices of T truncated by the planes z = +-b.
std::array<Vec3, 8> truncated_tetrahedron_vertices(double b);

struct HullComparison {
    bool contained = false;
    bool vertices_attained = false;
    double max_vertex_error = 0.0;
    std::size_t distinct_points = 0;

    bool equal() const { return contained && vertices_attained; }
};

/// Checks hull(points) == T cut by |z| <= b: every point is inside and each of
/// the eight vertices is attained within tol.
HullComparison compare_with_truncated_tetrahedron(const std::vector<Vec3> &points, double b, double tol = 1e-9);

}  // namespace telesim

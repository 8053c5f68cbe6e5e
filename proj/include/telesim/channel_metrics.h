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

#include <cstdint>
#include <random>

#include "telesim/pauli_damping.h"
#include "telesim/qubit_core.h"

namespace telesim {

/// Trace norm of rho1 - rho2, equal to the Euclidean distance of the Bloch
/// vectors (orthogonal pure states are at distance 2).
double trace_distance_states(const QubitState &r1, const QubitState &r2);

struct SphereSearchOptions {
    int theta_steps = 64;
    int phi_steps = 64;
    int refine_steps = 50;
};

struct ChannelDistance {
    double distance = 0.0;
    Vec3 maximizer = Vec3::UnitZ();
};

/// sup_rho ||E1(rho) - E2(rho)||_1 by a polar grid over the Bloch sphere plus
/// Nelder-Mead refinement of the best grid point.
ChannelDistance channel_trace_distance_search(
    const AffineChannel &F1, const AffineChannel &F2, const SphereSearchOptions &options = {});
double channel_trace_distance(const AffineChannel &F1, const AffineChannel &F2);

struct ClosestPauliResult {
    /// (f11, f22, f33) of the closest Pauli channel.
    Vec3 f_diag = Vec3::Zero();
    double distance = 0.0;

    AffineChannel channel() const;
    /// Tetrahedron coordinates (f11, -f22, f33).
    Vec3 t() const { return Vec3(f_diag.x(), -f_diag.y(), f_diag.z()); }
};

ClosestPauliResult closest_pauli(const PauliDampingDecomposition &d);

/// Diamond distance between E_sim and its closest Pauli channel (= eta).
double diamond_distance_to_closest(const PauliDampingDecomposition &d);

/// ||(I (x) E1)(rho) - (I (x) E2)(rho)||_1 for a two-qubit probe rho.
double probe_distance(const AffineChannel &F1, const AffineChannel &F2, const Mat4c &rho);

/// Random two-qubit state: mixture of 1..4 Haar-random pure states.
Mat4c random_two_qubit_state(std::mt19937_64 &rng);
Mat4c random_pure_two_qubit_state(std::mt19937_64 &rng);

struct DiamondWitnessReport {
    double eta = 0.0;
    double max_deviation = 0.0;
    std::size_t samples = 0;
    std::uint64_t seed = 0;
};

/// For random rho, the absolute eigenvalue sum of (I(x)E_sim)(rho) - (I(x)E_cl)(rho)
/// is compared with eta. Throws ParameterError if samples == 0.
DiamondWitnessReport diamond_witness_check(const PauliDampingDecomposition &d, std::size_t samples, std::uint64_t seed);

/// Lower estimate of ||E1 - E2||_diamond: maximum over random entangled pure probes
/// and the product probe |0><0| (x) rho*, rho* the trace-distance maximiser.
double diamond_distance_estimate(
    const AffineChannel &F1, const AffineChannel &F2, std::size_t samples, std::uint64_t seed);

}  // namespace telesim

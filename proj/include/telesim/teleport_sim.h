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

#include "telesim/qubit_core.h"

namespace telesim {

/// Classical channel from Alice's Bell outcome k to Bob's correction index l.
/// Entry (l, k) is p_{l|k}; every column sums to 1.
class ClassicalChannel {
   public:
    ClassicalChannel() : p_(Mat4::Identity()) {}
    /// Throws ParameterError if an entry is negative or a column does not sum to 1.
    explicit ClassicalChannel(const Mat4 &p);
    static ClassicalChannel identity() { return ClassicalChannel(); }
    static ClassicalChannel uniform();

    /// p_{l|k}.
    double operator()(int l, int k) const { return p_(l, k); }
    const Mat4 &matrix() const { return p_; }

   private:
    Mat4 p_;
};

/// Signs (s)_{k,l} such that S_ij = 1/4 sum_{k,l} s_{k,l} p_{l|k}.
using SignTable = std::array<std::array<int, 4>, 4>;

/// Hard-coded tables, i in 1..3 and j in 0..3. These are normative.
const SignTable &sign_table(int i, int j);

/// Tables generated from the closed-form exponent
/// (-1)^(d_{k0} + d_{j2} + d_{j0} + d_{kj} + d_{il} + d_{0l}); used to cross-check sign_table.
SignTable sign_table_from_exponent(int i, int j);

/// S_ij for i in 1..3, j in 0..3; throws ParameterError on bad indices.
double s_coefficient(int i, int j, const ClassicalChannel &pi);

/// Closed-form channel of noisy teleportation over tau: f_ij = t'_ji S_ij,
/// with t'_0i = b_i and t'_ji = t_ji otherwise.
AffineChannel simulated_channel(const TwoQubitState &tau, const ClassicalChannel &pi);

/// Runs the protocol explicitly on C (x) A (x) B: Bell measurement on CA,
/// outcome k relayed as l with probability p_{l|k}, Bob applies sigma_l.
/// Linear in rho, so basis operators are accepted.
Mat2c protocol_output(const TwoQubitState &tau, const ClassicalChannel &pi, const Mat2c &rho);
QubitState protocol_oracle(const TwoQubitState &tau, const ClassicalChannel &pi, const QubitState &rho_in);

/// F matrix of the protocol reconstructed by probing I/2 and (I + sigma_j)/2.
AffineChannel oracle_channel(const TwoQubitState &tau, const ClassicalChannel &pi);

/// p_i = Tr(E_i tau).
PauliProbabilities standard_teleport_probs(const TwoQubitState &tau);

struct CovarianceReport {
    bool covariant = false;
    /// Worst-case Bloch mismatch of E(U rho U^dagger) vs V E(rho) V^dagger, per U in (I, X, Y, Z).
    std::array<double, 4> residuals{};
    /// Rotation vector (axis * angle) of the best V found for each U.
    std::array<Vec3, 4> best_rotation{};
};

inline constexpr double kCovarianceThreshold = 1e-6;

/// Numeric test of teleportation covariance. Throws DomainError for non-CPTP input.
CovarianceReport check_teleportation_covariance(const AffineChannel &F);

}  // namespace telesim

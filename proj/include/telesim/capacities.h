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

#include <vector>

#include "telesim/pauli_damping.h"
#include "telesim/qubit_core.h"

namespace telesim {

/// Closed-form REE bound on K = P2 >= Q2 for any channel simulable over chi_gamma.
double ree_upper_bound(double gamma);

/// I_c = S(E(rho)) - S((I (x) E)(|phi_rho><phi_rho|)), in bits.
double coherent_information(const AffineChannel &F, const QubitState &s);

/// Same quantity via the entropy exchange W_ij = Tr(K_i rho K_j^dagger).
double coherent_information_kraus(const KrausChannel &channel, const QubitState &s);

struct LowerBoundOptions {
    int grid = 33;
    int refine_starts = 5;
    int refine_steps = 100;
};

struct LowerBoundResult {
    double value = 0.0;
    double best_coherent_information = 0.0;
    Vec3 maximizer = Vec3::Zero();
};

LowerBoundResult lower_bound_search(const AffineChannel &F, const LowerBoundOptions &options = {});
/// max(0, max_rho I_c(rho, F)).
double lower_bound(const AffineChannel &F);

struct SquaredChannel {
    AffineChannel channel;
    PauliDampingDecomposition decomposition;
};

/// F_sq with f11 = f22 = sqrt(1-gamma)(1-gamma/2), f30 = gamma^2, f33 = (1-gamma)^2.
SquaredChannel squared_channel(double gamma);

/// A classical channel that realises F_sq over chi_gamma: outcomes Psi+- are
/// relayed as sigma_z with probability gamma.
ClassicalChannel squared_channel_classical(double gamma);

struct CapacityBounds {
    double gamma = 0.0;
    double eta = 0.0;
    double upper = 0.0;
    double lower = 0.0;
};

std::vector<CapacityBounds> bounds_curve(const std::vector<double> &gammas);

}  // namespace telesim

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

#include "telesim/capacities.h"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "optimize.h"
#include "telesim/errors.h"

namespace telesim {

namespace {

double bloch_entropy_bits(const Vec3 &r) {
    const double norm = std::min(r.norm(), 1.0);
    return xlog2x((1.0 + norm) / 2.0) + xlog2x((1.0 - norm) / 2.0);
}

/// |phi_rho><phi_rho| on R (x) B with Tr_R = rho.
Mat4c purification(const Mat2c &rho) {
    Eigen::SelfAdjointEigenSolver<Mat2c> solver(rho);
    Eigen::Vector4cd phi = Eigen::Vector4cd::Zero();
    for (int i = 0; i < 2; ++i) {
        const double weight = std::sqrt(std::max(solver.eigenvalues()(i), 0.0));
        phi.segment<2>(2 * i) = weight * solver.eigenvectors().col(i);
    }
    return phi * phi.adjoint();
}

}  // namespace

double ree_upper_bound(double gamma) {
    if (!(gamma >= 0.0 && gamma <= 1.0)) {
        std::ostringstream msg;
        msg << "ree_upper_bound requires gamma in [0, 1], got " << gamma;
        throw ParameterError(msg.str());
    }
    // xlog2x(x) = -x log2 x.
    return 0.5 + xlog2x((1.0 - gamma) / 2.0) - xlog2x((2.0 - gamma) / 2.0);
}

double coherent_information(const AffineChannel &F, const QubitState &s) {
    const double output = bloch_entropy_bits(F.apply(s.bloch()));
    const Mat4c joint = apply_on_second(F, purification(s.density()));
    return output - entropy_bits(joint);
}

double coherent_information_kraus(const KrausChannel &channel, const QubitState &s) {
    const Mat2c rho = s.density();
    const auto &ops = channel.ops();
    const auto n = static_cast<Eigen::Index>(ops.size());
    ComplexMatrix exchange(n, n);
    for (Eigen::Index i = 0; i < n; ++i) {
        for (Eigen::Index j = 0; j < n; ++j) {
            exchange(i, j) = (ops[i] * rho * ops[j].adjoint()).trace();
        }
    }
    return entropy_bits(channel.apply(rho)) - entropy_bits(exchange);
}

LowerBoundResult lower_bound_search(const AffineChannel &F, const LowerBoundOptions &options) {
    if (options.grid < 2) {
        throw ParameterError("lower bound grid needs at least 2 points per axis");
    }
    auto clamp_to_ball = [](const Vec3 &x) -> Vec3 {
        double norm = x.norm();
        return norm > 1.0 ? Vec3(x / norm) : x;
    };
    auto evaluate = [&](const Vec3 &r) { return coherent_information(F, QubitState(clamp_to_ball(r))); };

    struct Candidate {
        double value;
        Vec3 r;
    };
    std::vector<Candidate> candidates;
    const int n = options.grid;
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) {
            for (int k = 0; k < n; ++k) {
                Vec3 r(-1.0 + 2.0 * i / (n - 1), -1.0 + 2.0 * j / (n - 1), -1.0 + 2.0 * k / (n - 1));
                if (r.norm() > 1.0 + 1e-12) {
                    continue;
                }
                candidates.push_back({evaluate(r), clamp_to_ball(r)});
            }
        }
    }
    const auto starts = std::min<std::size_t>(static_cast<std::size_t>(std::max(options.refine_starts, 0)), candidates.size());
    std::partial_sort(candidates.begin(), candidates.begin() + static_cast<std::ptrdiff_t>(starts), candidates.end(),
                      [](const Candidate &x, const Candidate &y) { return x.value > y.value; });

    LowerBoundResult result;
    result.best_coherent_information = candidates.front().value;
    result.maximizer = candidates.front().r;
    const double step = 1.0 / (n - 1);
    for (std::size_t s = 0; s < starts; ++s) {
        const Vec3 &r0 = candidates[s].r;
        auto objective = [&](const std::vector<double> &x) { return -evaluate(Vec3(x[0], x[1], x[2])); };
        auto refined = detail::nelder_mead(objective, {r0.x(), r0.y(), r0.z()}, step, options.refine_steps, 1e-12);
        if (-refined.value > result.best_coherent_information) {
            result.best_coherent_information = -refined.value;
            result.maximizer = clamp_to_ball(Vec3(refined.x[0], refined.x[1], refined.x[2]));
        }
    }
    // Qubit channels carry at most one bit of coherent information.
    result.value = std::clamp(result.best_coherent_information, 0.0, 1.0);
    return result;
}

double lower_bound(const AffineChannel &F) {
    return lower_bound_search(F).value;
}

SquaredChannel squared_channel(double gamma) {
    if (!(gamma >= 0.0 && gamma < 1.0)) {
        std::ostringstream msg;
        msg << "squared channel requires gamma in [0, 1), got " << gamma;
        throw ParameterError(msg.str());
    }
    const double transverse = std::sqrt(1.0 - gamma) * (1.0 - gamma / 2.0);
    Mat3 linear = Vec3(transverse, transverse, (1.0 - gamma) * (1.0 - gamma)).asDiagonal();
    SquaredChannel out{AffineChannel::from_parts(Vec3(0.0, 0.0, gamma * gamma), linear), {}};
    out.decomposition.u = 0;
    out.decomposition.eta = gamma * gamma;
    const double lateral = (1.0 - gamma / 2.0) / std::sqrt(1.0 + gamma);
    out.decomposition.q = Vec3(lateral, -lateral, (1.0 - gamma) / (1.0 + gamma));
    return out;
}

ClassicalChannel squared_channel_classical(double gamma) {
    if (!(gamma >= 0.0 && gamma <= 1.0)) {
        throw ParameterError("squared channel classical channel requires gamma in [0, 1]");
    }
    Mat4 p = Mat4::Zero();
    p(0, 0) = 1.0;
    p(1, 1) = 1.0 - gamma;
    p(3, 1) = gamma;
    p(2, 2) = 1.0 - gamma;
    p(3, 2) = gamma;
    p(3, 3) = 1.0;
    return ClassicalChannel(p);
}

std::vector<CapacityBounds> bounds_curve(const std::vector<double> &gammas) {
    for (double gamma : gammas) {
        if (!(gamma >= 0.0 && gamma < 1.0)) {
            std::ostringstream msg;
            msg << "bounds curve requires gamma in [0, 1), got " << gamma;
            throw ParameterError(msg.str());
        }
    }
    std::vector<CapacityBounds> out;
    out.reserve(gammas.size());
    for (double gamma : gammas) {
        CapacityBounds row;
        row.gamma = gamma;
        row.eta = gamma * gamma;
        row.upper = ree_upper_bound(gamma);
        row.lower = lower_bound(squared_channel(gamma).channel);
        out.push_back(row);
    }
    return out;
}

}  // namespace telesim

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

#include <cmath>
#include <limits>
#include <numbers>
#include <random>
#include <vector>

#include "optimize.h"
#include "telesim/errors.h"
#include "telesim/teleport_sim.h"

namespace telesim {

namespace {

constexpr int kStarts = 24;
constexpr int kIterations = 400;
constexpr std::uint64_t kStartSeed = 0x7e1e5eedULL;

/// Bloch rotation induced by V = exp(-i |w|/2 (w/|w|).sigma).
Mat3 rotation_from_vector(const Vec3 &w) {
    double angle = w.norm();
    if (angle < 1e-15) {
        return Mat3::Identity();
    }
    return Eigen::AngleAxisd(angle, w / angle).toRotationMatrix();
}

std::vector<Vec3> probe_grid() {
    std::vector<Vec3> grid{Vec3::Zero()};
    for (int axis = 0; axis < 3; ++axis) {
        Vec3 e = Vec3::Zero();
        e(axis) = 1.0;
        grid.push_back(e);
        grid.push_back(-e);
    }
    for (int sx : {-1, 1}) {
        for (int sy : {-1, 1}) {
            for (int sz : {-1, 1}) {
                grid.push_back(Vec3(sx, sy, sz) / std::sqrt(3.0));
            }
        }
    }
    return grid;
}

}  // namespace

CovarianceReport check_teleportation_covariance(const AffineChannel &F) {
    if (!is_cptp(F)) {
        throw DomainError("covariance check requires a CPTP channel");
    }
    const std::vector<Vec3> grid = probe_grid();
    const double pi = std::numbers::pi;
    const std::array<Mat3, 4> pauli_rotations{
        Mat3::Identity(),
        Vec3(1, -1, -1).asDiagonal().toDenseMatrix(),
        Vec3(-1, 1, -1).asDiagonal().toDenseMatrix(),
        Vec3(-1, -1, 1).asDiagonal().toDenseMatrix(),
    };

    std::vector<Vec3> starts{Vec3::Zero(), Vec3(pi, 0, 0), Vec3(0, pi, 0), Vec3(0, 0, pi)};
    std::mt19937_64 rng(kStartSeed);
    std::uniform_real_distribution<double> uniform(-pi, pi);
    while (starts.size() < static_cast<std::size_t>(kStarts)) {
        Vec3 w(uniform(rng), uniform(rng), uniform(rng));
        if (w.norm() <= pi) {
            starts.push_back(w);
        }
    }

    CovarianceReport report;
    report.covariant = true;
    for (int u = 0; u < 4; ++u) {
        const Mat3 &rotation_u = pauli_rotations[u];
        auto residual = [&](const std::vector<double> &w) {
            Mat3 rotation_v = rotation_from_vector(Vec3(w[0], w[1], w[2]));
            double worst = 0.0;
            for (const Vec3 &r : grid) {
                Vec3 lhs = F.apply(Vec3(rotation_u * r));
                Vec3 rhs = rotation_v * F.apply(r);
                worst = std::max(worst, (lhs - rhs).norm());
            }
            return worst;
        };
        double best = std::numeric_limits<double>::infinity();
        Vec3 best_w = Vec3::Zero();
        for (const Vec3 &start : starts) {
            std::vector<double> x0{start.x(), start.y(), start.z()};
            double initial = residual(x0);
            detail::MinimizeResult result{x0, initial, 0};
            if (initial > 1e-14) {
                result = detail::nelder_mead(residual, x0, 0.4, kIterations, 1e-12);
            }
            if (result.value < best) {
                best = result.value;
                best_w = Vec3(result.x[0], result.x[1], result.x[2]);
            }
            if (best < 1e-14) {
                break;
            }
        }
        report.residuals[u] = best;
        report.best_rotation[u] = best_w;
        if (!(best < kCovarianceThreshold)) {
            report.covariant = false;
        }
    }
    return report;
}

}  // namespace telesim

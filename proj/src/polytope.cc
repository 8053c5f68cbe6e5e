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

#include <algorithm>
#include <cmath>
#include <limits>
#include <map>
#include <sstream>

#include "telesim/errors.h"
#include "telesim/pauli_damping.h"

namespace telesim {

namespace {

constexpr int kVars = 16;
constexpr int kRows = 5;
constexpr double kDedupScale = 1e12;

// Variable 4k + l holds p_{l|k}.
using Key = std::array<long long, kVars>;

Key rounded_key(const Eigen::Matrix<double, kVars, 1> &x) {
    Key key{};
    for (int v = 0; v < kVars; ++v) {
        key[v] = std::llround(x(v) * kDedupScale);
    }
    return key;
}

}  // namespace

PolytopeVertexSet enumerate_polytope_vertices(double gamma, double eta, int sign) {
    if (!(gamma > 0.0)) {
        throw ParameterError("vertex enumeration requires gamma > 0");
    }
    if (sign != 1 && sign != -1) {
        throw ParameterError("sign must be +1 or -1");
    }
    if (!(eta >= 0.0)) {
        throw ParameterError("eta must be non-negative");
    }
    const double target = sign * eta / gamma;
    if (std::abs(target) > 1.0 + 1e-12) {
        throw InfeasibleError("|eta / gamma| > 1: the constraint S30 = +-eta/gamma has no solution");
    }

    Eigen::Matrix<double, kRows, kVars> A = Eigen::Matrix<double, kRows, kVars>::Zero();
    Eigen::Matrix<double, kRows, 1> rhs;
    const SignTable &s30 = sign_table(3, 0);
    for (int k = 0; k < 4; ++k) {
        for (int l = 0; l < 4; ++l) {
            A(k, 4 * k + l) = 1.0;
            A(4, 4 * k + l) = 0.25 * s30[k][l];
        }
        rhs(k) = 1.0;
    }
    rhs(4) = target;

    std::map<Key, Eigen::Matrix<double, kVars, 1>> unique;
    // Every basis of the 5-row system: choose 5 of 16 columns, all others are at zero.
    std::array<int, kRows> basis{0, 1, 2, 3, 4};
    while (true) {
        Eigen::Matrix<double, kRows, kRows> B;
        for (int c = 0; c < kRows; ++c) {
            B.col(c) = A.col(basis[c]);
        }
        Eigen::FullPivLU<Eigen::Matrix<double, kRows, kRows>> lu(B);
        if (lu.isInvertible()) {
            Eigen::Matrix<double, kRows, 1> xb = lu.solve(rhs);
            if (xb.minCoeff() >= -1e-12) {
                Eigen::Matrix<double, kVars, 1> x = Eigen::Matrix<double, kVars, 1>::Zero();
                for (int c = 0; c < kRows; ++c) {
                    x(basis[c]) = std::max(xb(c), 0.0);
                }
                unique.emplace(rounded_key(x), x);
            }
        }
        // Next combination in lexicographic order.
        int pos = kRows - 1;
        while (pos >= 0 && basis[pos] == kVars - kRows + pos) {
            --pos;
        }
        if (pos < 0) {
            break;
        }
        ++basis[pos];
        for (int c = pos + 1; c < kRows; ++c) {
            basis[c] = basis[c - 1] + 1;
        }
    }

    PolytopeVertexSet out;
    out.gamma = gamma;
    out.eta = eta;
    out.sign = sign;
    for (const auto &[key, x] : unique) {
        Mat4 p;
        for (int k = 0; k < 4; ++k) {
            for (int l = 0; l < 4; ++l) {
                p(l, k) = x(4 * k + l);
            }
        }
        out.vertices.emplace_back(p);
    }
    return out;
}

Vec3 map_S(const ClassicalChannel &pi, int sign) {
    Vec3 s(s_coefficient(1, 1, pi), s_coefficient(2, 2, pi), s_coefficient(3, 3, pi));
    if (sign < 0) {
        s.y() = -s.y();
        s.z() = -s.z();
    }
    return s;
}

std::vector<Vec3> map_S(const PolytopeVertexSet &vertex_set, int sign) {
    std::vector<Vec3> out;
    out.reserve(vertex_set.vertices.size());
    for (const auto &vertex : vertex_set.vertices) {
        out.push_back(map_S(vertex, sign));
    }
    return out;
}

HullComparison compare_with_truncated_tetrahedron(const std::vector<Vec3> &points, double b, double tol) {
    HullComparison result;
    result.contained = !points.empty();
    std::vector<Vec3> distinct;
    for (const Vec3 &p : points) {
        if (!in_tetrahedron(p, tol) || std::abs(p.z()) > b + tol) {
            result.contained = false;
        }
        bool seen = std::any_of(distinct.begin(), distinct.end(), [&](const Vec3 &d) {
            return (d - p).cwiseAbs().maxCoeff() <= tol;
        });
        if (!seen) {
            distinct.push_back(p);
        }
    }
    result.distinct_points = distinct.size();

    result.vertices_attained = true;
    for (const Vec3 &corner : truncated_tetrahedron_vertices(b)) {
        double nearest = std::numeric_limits<double>::infinity();
        for (const Vec3 &p : points) {
            nearest = std::min(nearest, (p - corner).cwiseAbs().maxCoeff());
        }
        result.max_vertex_error = std::max(result.max_vertex_error, nearest);
        if (!(nearest <= tol)) {
            result.vertices_attained = false;
        }
    }
    return result;
}

}  // namespace telesim

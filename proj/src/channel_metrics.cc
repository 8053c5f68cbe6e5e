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

#include "telesim/channel_metrics.h"

#include <cmath>
#include <numbers>

#include "optimize.h"
#include "telesim/errors.h"

namespace telesim {

namespace {

Vec3 sphere_point(double theta, double phi) {
    return Vec3(std::sin(theta) * std::cos(phi), std::sin(theta) * std::sin(phi), std::cos(theta));
}

}  // namespace

double trace_distance_states(const QubitState &r1, const QubitState &r2) {
    return (r1.bloch() - r2.bloch()).norm();
}

ChannelDistance channel_trace_distance_search(
    const AffineChannel &F1, const AffineChannel &F2, const SphereSearchOptions &options) {
    if (options.theta_steps < 2 || options.phi_steps < 1) {
        throw ParameterError("sphere search needs at least 2 polar and 1 azimuthal steps");
    }
    const Vec3 offset = F1.offset() - F2.offset();
    const Mat3 linear = F1.linear() - F2.linear();
    auto gap = [&](double theta, double phi) { return (offset + linear * sphere_point(theta, phi)).norm(); };

    const double pi = std::numbers::pi;
    double best = -1.0;
    double best_theta = 0.0, best_phi = 0.0;
    for (int i = 0; i < options.theta_steps; ++i) {
        double theta = pi * i / (options.theta_steps - 1);
        for (int j = 0; j < options.phi_steps; ++j) {
            double phi = 2.0 * pi * j / options.phi_steps;
            double value = gap(theta, phi);
            if (value > best) {
                best = value;
                best_theta = theta;
                best_phi = phi;
            }
        }
    }
    auto objective = [&](const std::vector<double> &x) { return -gap(x[0], x[1]); };
    auto refined = detail::nelder_mead(
        objective, {best_theta, best_phi}, pi / options.theta_steps, options.refine_steps, 1e-14);

    ChannelDistance out;
    if (-refined.value > best) {
        best = -refined.value;
        best_theta = refined.x[0];
        best_phi = refined.x[1];
    }
    out.distance = best;
    out.maximizer = sphere_point(best_theta, best_phi);
    return out;
}

double channel_trace_distance(const AffineChannel &F1, const AffineChannel &F2) {
    return channel_trace_distance_search(F1, F2).distance;
}

AffineChannel ClosestPauliResult::channel() const {
    return AffineChannel::from_parts(Vec3::Zero(), f_diag.asDiagonal());
}

ClosestPauliResult closest_pauli(const PauliDampingDecomposition &d) {
    d.validate();
    const double root = std::sqrt(1.0 - d.eta);
    const double keep = 1.0 - d.eta;
    ClosestPauliResult out;
    if (d.u == 0) {
        out.f_diag = Vec3(root * d.q.x(), -root * d.q.y(), keep * d.q.z());
    } else {
        out.f_diag = Vec3(root * d.q.x(), root * d.q.y(), -keep * d.q.z());
    }
    out.distance = d.eta;
    return out;
}

double diamond_distance_to_closest(const PauliDampingDecomposition &d) {
    d.validate();
    return d.eta;
}

double probe_distance(const AffineChannel &F1, const AffineChannel &F2, const Mat4c &rho) {
    return trace_norm(apply_on_second(F1, rho) - apply_on_second(F2, rho));
}

Mat4c random_pure_two_qubit_state(std::mt19937_64 &rng) {
    std::normal_distribution<double> normal(0.0, 1.0);
    Eigen::Vector4cd psi;
    for (int n = 0; n < 4; ++n) {
        psi(n) = Complex(normal(rng), normal(rng));
    }
    psi.normalize();
    return psi * psi.adjoint();
}

Mat4c random_two_qubit_state(std::mt19937_64 &rng) {
    std::uniform_int_distribution<int> count(1, 4);
    std::uniform_real_distribution<double> weight(0.0, 1.0);
    const int terms = count(rng);
    Mat4c rho = Mat4c::Zero();
    double total = 0.0;
    for (int n = 0; n < terms; ++n) {
        double w = weight(rng) + 1e-3;
        rho += w * random_pure_two_qubit_state(rng);
        total += w;
    }
    return rho / total;
}

DiamondWitnessReport diamond_witness_check(const PauliDampingDecomposition &d, std::size_t samples, std::uint64_t seed) {
    if (samples == 0) {
        throw ParameterError("diamond witness check needs at least one sample");
    }
    const AffineChannel simulated = compose(d);
    const AffineChannel closest = closest_pauli(d).channel();
    std::mt19937_64 rng(seed);
    DiamondWitnessReport report;
    report.eta = d.eta;
    report.samples = samples;
    report.seed = seed;
    for (std::size_t n = 0; n < samples; ++n) {
        Mat4c rho = random_two_qubit_state(rng);
        double deviation = std::abs(probe_distance(simulated, closest, rho) - d.eta);
        report.max_deviation = std::max(report.max_deviation, deviation);
    }
    return report;
}

double diamond_distance_estimate(
    const AffineChannel &F1, const AffineChannel &F2, std::size_t samples, std::uint64_t seed) {
    ChannelDistance single = channel_trace_distance_search(F1, F2);
    Mat2c ancilla = Mat2c::Zero();
    ancilla(0, 0) = 1.0;
    Mat4c product = kron(ancilla, bloch_to_density(single.maximizer));
    double best = probe_distance(F1, F2, product);

    std::mt19937_64 rng(seed);
    for (std::size_t n = 0; n < samples; ++n) {
        best = std::max(best, probe_distance(F1, F2, random_pure_two_qubit_state(rng)));
    }
    best = std::max(best, probe_distance(F1, F2, bell_projectors()[0]));
    return best;
}

}  // namespace telesim

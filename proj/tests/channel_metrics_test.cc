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

#include <gtest/gtest.h>

#include "telesim/capacities.h"
#include "test_support.h"

namespace telesim {
namespace {

/// Trace norm of rho1 - rho2 from the 2x2 traceless closed form +/- sqrt(d^2 + |o|^2).
double two_by_two_trace_distance(const Vec3 &r1, const Vec3 &r2) {
    const Mat2c diff = bloch_to_density(r1) - bloch_to_density(r2);
    const double d = diff(0, 0).real();
    return 2.0 * std::sqrt(d * d + std::norm(diff(0, 1)));
}

PauliDampingDecomposition sample_decomposition(std::mt19937_64 &rng) {
    std::uniform_real_distribution<double> u(0.05, 0.95);
    const double g = u(rng);
    return decompose(g, test::random_classical(rng));
}

TEST(StateDistance, Examples) {
    const QubitState up(Vec3(0, 0, 1)), down(Vec3(0, 0, -1));
    EXPECT_DOUBLE_EQ(trace_distance_states(up, up), 0.0);
    EXPECT_NEAR(trace_distance_states(up, down), 2.0, 1e-15);
    std::mt19937_64 rng(41);
    for (int trial = 0; trial < 100; ++trial) {
        const Vec3 a = test::random_ball_point(rng), b = test::random_ball_point(rng);
        EXPECT_NEAR(trace_distance_states(QubitState(a), QubitState(b)), two_by_two_trace_distance(a, b), 1e-14);
    }
}

TEST(ChannelDistance, SimulatedVersusClosestPauli) {
    std::mt19937_64 rng(42);
    EXPECT_DOUBLE_EQ(channel_trace_distance(AffineChannel::identity(), AffineChannel::identity()), 0.0);
    for (int trial = 0; trial < 10; ++trial) {
        const auto d = sample_decomposition(rng);
        const auto closest = closest_pauli(d);
        EXPECT_DOUBLE_EQ(closest.distance, d.eta);
        EXPECT_TRUE(in_tetrahedron(closest.t()));
        const auto found = channel_trace_distance_search(compose(d), closest.channel());
        EXPECT_NEAR(found.distance, d.eta, 1e-6);
        EXPECT_NEAR(std::abs(found.maximizer.z()), 1.0, 1e-3);
    }
}

TEST(ChannelDistance, DampingVersusIdentityMatchesSampling) {
    const AffineChannel ad = affine_amplitude_damping(0.4);
    std::mt19937_64 rng(43);
    double brute = 0.0;
    for (int n = 0; n < 100000; ++n) {
        const Vec3 r = test::random_sphere_point(rng);
        brute = std::max(brute, (ad.apply(r) - r).norm());
    }
    const double searched = channel_trace_distance(ad, AffineChannel::identity());
    EXPECT_GE(searched, brute - 1e-12);
    EXPECT_NEAR(searched, brute, 1e-4);
}

TEST(ClosestPauli, Examples) {
    PauliDampingDecomposition zero_eta;
    zero_eta.q = Vec3(0.2, -0.3, 0.1);
    const auto same = closest_pauli(zero_eta);
    EXPECT_DOUBLE_EQ(same.distance, 0.0);
    EXPECT_LT(test::max_abs_diff(same.channel().F(), compose(zero_eta).F()), 1e-15);

    PauliDampingDecomposition d;
    d.eta = 0.3;
    const auto r = closest_pauli(d);
    EXPECT_LT((r.f_diag - Vec3(std::sqrt(0.7), std::sqrt(0.7), 0.7)).norm(), 1e-15);
    EXPECT_DOUBLE_EQ(r.distance, 0.3);
    EXPECT_DOUBLE_EQ(diamond_distance_to_closest(d), 0.3);
    EXPECT_DOUBLE_EQ(diamond_distance_to_closest(zero_eta), 0.0);
}

TEST(ClosestPauli, SharesLinearPartOnBothBranches) {
    for (int u : {0, 1}) {
        PauliDampingDecomposition d;
        d.u = u;
        d.eta = 0.4;
        d.q = Vec3(0.3, 0.2, -0.1);
        const auto r = closest_pauli(d);
        EXPECT_LT(test::max_abs_diff(r.channel().linear(), compose(d).linear()), 1e-15);
        EXPECT_LT(r.channel().offset().norm(), 1e-15);
        // u = 1 flips the sign of the sigma_y coefficient relative to u = 0.
        EXPECT_NEAR(r.f_diag.y(), (u == 0 ? -1 : 1) * std::sqrt(0.6) * d.q.y(), 1e-15);
    }
}

TEST(ClosestPauli, IsMinimalAmongPauliChannels) {
    std::mt19937_64 rng(44);
    for (int trial = 0; trial < 5; ++trial) {
        const auto d = sample_decomposition(rng);
        SphereSearchOptions coarse{24, 24, 30};
        for (int other = 0; other < 20; ++other) {
            const AffineChannel p = pauli_channel_from_probs(PauliProbabilities(test::random_simplex(rng)));
            EXPECT_GE(channel_trace_distance_search(compose(d), p, coarse).distance, d.eta - 1e-8);
        }
    }
}

TEST(DiamondWitness, EigenvalueSumIsEta) {
    std::mt19937_64 rng(45);
    for (int trial = 0; trial < 5; ++trial) {
        const auto d = sample_decomposition(rng);
        const auto report = diamond_witness_check(d, 200, 7 + trial);
        EXPECT_LT(report.max_deviation, 1e-8);
        const AffineChannel sim = compose(d), cl = closest_pauli(d).channel();
        EXPECT_NEAR(probe_distance(sim, cl, bell_projectors()[0]), d.eta, 1e-12);
        Mat4c product = Mat4c::Zero();
        product(0, 0) = 1.0;
        EXPECT_NEAR(probe_distance(sim, cl, product), d.eta, 1e-12);
    }
}

TEST(DiamondWitness, DiamondBoundsTraceFromAbove) {
    std::mt19937_64 rng(46);
    for (int trial = 0; trial < 10; ++trial) {
        const AffineChannel a = affine_amplitude_damping(std::uniform_real_distribution<double>(0, 1)(rng));
        const AffineChannel b = pauli_channel_from_probs(PauliProbabilities(test::random_simplex(rng)));
        const double trace = channel_trace_distance(a, b);
        EXPECT_GE(diamond_distance_estimate(a, b, 200, trial), trace - 1e-9);
        // Product probes reproduce the single-qubit trace distance.
        const Vec3 r = channel_trace_distance_search(a, b).maximizer;
        const Mat4c probe = kron(bloch_to_density(Vec3(0, 0, 1)), bloch_to_density(r));
        EXPECT_NEAR(probe_distance(a, b, probe), trace, 1e-12);
    }
}

TEST(RandomStates, AreValidAndReproducible) {
    std::mt19937_64 a(5), b(5);
    for (int trial = 0; trial < 20; ++trial) {
        const Mat4c x = random_two_qubit_state(a);
        EXPECT_LT(test::max_abs_diff(x, random_two_qubit_state(b)), 0.0 + 1e-300);
        EXPECT_NO_THROW(TwoQubitState{x});
        const Mat4c pure = random_pure_two_qubit_state(a);
        random_pure_two_qubit_state(b);
        EXPECT_NEAR((pure * pure).trace().real(), 1.0, 1e-13);
    }
}

}  // namespace
}  // namespace telesim

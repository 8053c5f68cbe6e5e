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

#include <gtest/gtest.h>

#include "telesim/errors.h"
#include "test_support.h"

namespace telesim {
namespace {

using test::max_abs_diff;

Vec3 random_tetra_point(std::mt19937_64 &rng) {
    const auto w = test::random_simplex(rng);
    Vec3 q = Vec3::Zero();
    for (int i = 0; i < 4; ++i) {
        q += w[i] * tetrahedron_vertices()[i];
    }
    return q;
}

TEST(Tetrahedron, Membership) {
    EXPECT_TRUE(in_tetrahedron(Vec3(1, -1, 1)));
    EXPECT_TRUE(in_tetrahedron(Vec3::Zero()));
    EXPECT_FALSE(in_tetrahedron(Vec3(1, 1, 1)));
    for (const Vec3 &v : tetrahedron_vertices()) {
        EXPECT_TRUE(in_tetrahedron(v));
        EXPECT_FALSE(in_tetrahedron(1.01 * v));
    }
}

TEST(Tetrahedron, VerticesArePauliConjugations) {
    for (int i = 0; i < 4; ++i) {
        std::array<double, 4> p{};
        p[i] = 1.0;
        const Vec3 t = t_from_probs(PauliProbabilities(p));
        bool found = false;
        for (const Vec3 &v : tetrahedron_vertices()) {
            found = found || (v - t).norm() < 1e-15;
        }
        EXPECT_TRUE(found) << "vertex for sigma_" << i;
    }
}

TEST(ShrinkPoint, Examples) {
    const Vec3 q(0.3, -0.2, 0.1);
    EXPECT_LT((shrink_point(q, 1.0) - q).norm(), 1e-15);
    EXPECT_LT(shrink_point(q, 0.0).norm(), 1e-15);
    const Vec3 s = shrink_point(Vec3(1, -1, 1), 0.25);
    EXPECT_LT((s - Vec3(0.5, -0.5, 0.25)).norm(), 1e-15);
    EXPECT_TRUE(in_tetrahedron(s));
    EXPECT_THROW(shrink_point(q, 1.5), ParameterError);
    EXPECT_THROW(shrink_point(Vec3(1, 1, 1), 0.5), DomainError);
}

TEST(ShrinkPoint, StaysInsideTetrahedron) {
    std::mt19937_64 rng(31);
    std::uniform_real_distribution<double> u(0.0, 1.0);
    for (int trial = 0; trial < 200; ++trial) {
        EXPECT_TRUE(in_tetrahedron(shrink_point(random_tetra_point(rng), u(rng))));
    }
}

TEST(Decompose, IdentityClassicalChannel) {
    for (double g : {0.1, 0.5, 0.9}) {
        const auto d = decompose(g, ClassicalChannel::identity());
        EXPECT_EQ(d.u, 0);
        EXPECT_DOUBLE_EQ(d.eta, 0.0);
        EXPECT_LT((d.q - Vec3(std::sqrt(1 - g), -std::sqrt(1 - g), 1 - g)).norm(), 1e-15);
    }
}

TEST(Compose, Examples) {
    EXPECT_LT(max_abs_diff(compose(PauliDampingDecomposition{}).F(), Mat4::Identity()), 1e-15);
    for (double g : {0.2, 0.7}) {
        PauliDampingDecomposition d;
        d.eta = g;
        EXPECT_LT(max_abs_diff(compose(d).F(), affine_amplitude_damping(g).F()), 1e-15);
    }
    PauliDampingDecomposition neg;
    neg.u = 1;
    neg.eta = 0.3;
    neg.q = Vec3(0.2, 0.1, -0.3);
    EXPECT_NEAR(compose(neg).f(3, 0), -0.3, 1e-15);
    EXPECT_NEAR(compose(neg).f(3, 3), -(1 - 0.3) * neg.q.z(), 1e-15);
}

TEST(Compose, MatchesPauliThenDamping) {
    // u = 0: E_sim = A_eta o P_q.
    std::mt19937_64 rng(32);
    std::uniform_real_distribution<double> u(0.0, 1.0);
    for (int trial = 0; trial < 50; ++trial) {
        PauliDampingDecomposition d;
        d.eta = u(rng);
        d.q = random_tetra_point(rng);
        const Mat4 expected = affine_amplitude_damping(d.eta).F() * pauli_channel_from_probs(probs_from_t(d.q)).F();
        EXPECT_LT(max_abs_diff(compose(d).F(), expected), 1e-14);
    }
}

TEST(Decompose, RoundTripThroughAffine) {
    std::mt19937_64 rng(33);
    std::uniform_real_distribution<double> u(0.0, 0.99);
    for (int trial = 0; trial < 100; ++trial) {
        PauliDampingDecomposition d;
        d.u = trial % 2;
        d.eta = u(rng);
        d.q = random_tetra_point(rng);
        const auto back = decompose_affine(compose(d));
        EXPECT_EQ(back.u, d.eta > 0 ? d.u : 0);
        EXPECT_NEAR(back.eta, d.eta, 1e-14);
        EXPECT_LT((back.q - d.q).norm(), 1e-12);
    }
    Mat4 skew = Mat4::Identity();
    skew(1, 2) = 0.1;
    EXPECT_THROW(decompose_affine(AffineChannel(skew)), DomainError);
}

TEST(Decompose, ComposeReproducesSimulatedChannel) {
    std::mt19937_64 rng(34);
    std::uniform_real_distribution<double> u(0.01, 0.99);
    int negative = 0;
    for (int trial = 0; trial < 100; ++trial) {
        const double g = u(rng);
        const ClassicalChannel pi = test::random_classical(rng);
        const auto d = decompose(g, pi);
        negative += d.u;
        const AffineChannel sim = simulated_channel(TwoQubitState(choi_amplitude_damping(g).matrix()), pi);
        EXPECT_LT(max_abs_diff(compose(d).F(), sim.F()), 1e-12);
        ASSERT_NO_THROW(d.validate());
        EXPECT_TRUE(is_simulable(d, g));
    }
    EXPECT_GT(negative, 0);
}

TEST(Region, GoldenVertices) {
    const auto region = region_vertices(0.6, 0.3);
    const double r7 = std::sqrt(7.0);
    const std::vector<Vec3> expected{
        {2 / r7, 1 / r7, -2.0 / 7},  {2 / r7, -1 / r7, 2.0 / 7},  {1 / r7, 2 / r7, -2.0 / 7},
        {-1 / r7, 2 / r7, 2.0 / 7},  {-2 / r7, 1 / r7, 2.0 / 7},  {-2 / r7, -1 / r7, -2.0 / 7},
        {1 / r7, -2 / r7, 2.0 / 7},  {-1 / r7, -2 / r7, -2.0 / 7},
    };
    for (const Vec3 &e : expected) {
        double best = 1e9;
        for (const Vec3 &v : region.vertices) {
            best = std::min(best, (v - e).norm());
        }
        EXPECT_LT(best, 1e-12);
    }
}

TEST(Region, Limits) {
    const auto flat = region_vertices(0.6, 0.6);
    EXPECT_DOUBLE_EQ(flat.b, 0.0);
    for (const Vec3 &v : flat.vertices) {
        EXPECT_NEAR(v.z(), 0.0, 1e-15);
    }
    const auto full = region_vertices(0.6, 0.0);
    EXPECT_DOUBLE_EQ(full.b, 1.0);
    EXPECT_NEAR(full.a, std::sqrt(0.4), 1e-15);
    EXPECT_THROW(region_vertices(0.0, 0.0), ParameterError);
    EXPECT_THROW(region_vertices(0.6, 0.7), DomainError);
}

TEST(Simulable, AmplitudeDampingAndIdentityAreNot) {
    for (double g : {0.1, 0.5, 0.9}) {
        PauliDampingDecomposition identity;
        EXPECT_FALSE(is_simulable(identity, g));
        PauliDampingDecomposition ad;
        ad.eta = g;
        EXPECT_FALSE(is_simulable(ad, g));
    }
}

TEST(Polytope, MappedImages) {
    EXPECT_LT((map_S(ClassicalChannel::identity(), 1) - Vec3(1, -1, 1)).norm(), 1e-15);
    EXPECT_LT(map_S(ClassicalChannel::uniform(), 1).norm(), 1e-15);
    EXPECT_LT(map_S(ClassicalChannel::uniform(), -1).norm(), 1e-15);
}

TEST(Polytope, VerticesSatisfyConstraint) {
    for (double eta : {0.0, 0.3, 0.6}) {
        for (int sign : {1, -1}) {
            const auto set = enumerate_polytope_vertices(0.6, eta, sign);
            ASSERT_FALSE(set.vertices.empty());
            for (const auto &v : set.vertices) {
                EXPECT_NEAR(s_coefficient(3, 0, v), sign * eta / 0.6, 1e-12);
            }
        }
    }
    EXPECT_THROW(enumerate_polytope_vertices(0.5, 0.6, 1), InfeasibleError);
}

TEST(Polytope, HullIsTruncatedTetrahedron) {
    for (int sign : {1, -1}) {
        const auto set = enumerate_polytope_vertices(0.6, 0.3, sign);
        const auto cmp = compare_with_truncated_tetrahedron(map_S(set, sign), 0.5);
        EXPECT_TRUE(cmp.equal()) << "max vertex error " << cmp.max_vertex_error;
    }
}

}  // namespace
}  // namespace telesim

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

// Prints one PASS/FAIL line per acceptance criterion; exits non-zero on any failure.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <random>
#include <string>

#include "telesim/capacities.h"
#include "telesim/channel_metrics.h"
#include "telesim/pauli_damping.h"
#include "telesim/teleport_sim.h"

namespace {

using namespace telesim;

struct Outcome {
    bool pass;
    std::string detail;
};

std::string sci(double x) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.3e", x);
    return buf;
}

double seconds_since(std::chrono::steady_clock::time_point start) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

std::array<double, 4> simplex(std::mt19937_64 &rng) {
    std::exponential_distribution<double> e(1.0);
    std::array<double, 4> p{};
    double total = 0;
    for (double &x : p) {
        total += (x = e(rng));
    }
    for (double &x : p) {
        x /= total;
    }
    return p;
}

ClassicalChannel random_classical(std::mt19937_64 &rng) {
    Mat4 m;
    for (int k = 0; k < 4; ++k) {
        const auto col = simplex(rng);
        for (int l = 0; l < 4; ++l) {
            m(l, k) = col[l];
        }
    }
    return ClassicalChannel(m);
}

TwoQubitState random_bell_diagonal(std::mt19937_64 &rng) {
    const auto p = simplex(rng);
    Mat4c rho = Mat4c::Zero();
    for (int i = 0; i < 4; ++i) {
        rho += p[i] * bell_projectors()[i];
    }
    return TwoQubitState(rho);
}

double max_diff(const Mat4 &a, const Mat4 &b) {
    return (a - b).cwiseAbs().maxCoeff();
}

TwoQubitState chi(double gamma) {
    return TwoQubitState(choi_amplitude_damping(gamma).matrix());
}

Outcome oracle_equivalence() {
    const auto start = std::chrono::steady_clock::now();
    std::mt19937_64 rng(101);
    double worst = 0;
    for (int n = 0; n < 100; ++n) {
        const TwoQubitState tau(random_two_qubit_state(rng));
        const ClassicalChannel pi = random_classical(rng);
        worst = std::max(worst, max_diff(simulated_channel(tau, pi).F(), oracle_channel(tau, pi).F()));
    }
    const double elapsed = seconds_since(start);
    return {worst <= 1e-9 && elapsed < 5.0, "max |dF| = " + sci(worst) + ", " + sci(elapsed) + " s"};
}

Outcome standard_reduction() {
    std::mt19937_64 rng(102);
    double worst = 0;
    for (int n = 0; n < 100; ++n) {
        const TwoQubitState tau(random_two_qubit_state(rng));
        worst = std::max(worst, max_diff(simulated_channel(tau, ClassicalChannel::identity()).F(),
                                         pauli_channel_from_probs(standard_teleport_probs(tau)).F()));
    }
    return {worst <= 1e-10, "max |dF| = " + sci(worst)};
}

Outcome bell_diagonal_no_go() {
    std::mt19937_64 rng(103);
    double worst = 0;
    bool inside = true;
    for (int n = 0; n < 100; ++n) {
        const Mat4 F = simulated_channel(random_bell_diagonal(rng), random_classical(rng)).F();
        Mat4 off = F;
        off.diagonal().setZero();
        worst = std::max(worst, off.cwiseAbs().maxCoeff());
        inside = inside && in_tetrahedron(Vec3(F(1, 1), -F(2, 2), F(3, 3)));
    }
    return {worst < 1e-12 && inside, "max off-diagonal = " + sci(worst)};
}

Outcome golden_vertices() {
    const auto region = region_vertices(0.6, 0.3);
    const double r = std::sqrt(7.0);
    const Vec3 expected[8] = {{2 / r, 1 / r, -2. / 7},  {2 / r, -1 / r, 2. / 7},   {1 / r, 2 / r, -2. / 7},
                              {-1 / r, 2 / r, 2. / 7},  {-2 / r, 1 / r, 2. / 7},   {-2 / r, -1 / r, -2. / 7},
                              {1 / r, -2 / r, 2. / 7},  {-1 / r, -2 / r, -2. / 7}};
    double worst = 0;
    for (const Vec3 &e : expected) {
        double best = 1e9;
        for (const Vec3 &v : region.vertices) {
            best = std::min(best, (v - e).cwiseAbs().maxCoeff());
        }
        worst = std::max(worst, best);
    }
    return {worst <= 1e-9, "max vertex error = " + sci(worst)};
}

Outcome decomposition_round_trip() {
    std::mt19937_64 rng(105);
    std::uniform_real_distribution<double> u(0.01, 0.99);
    double worst = 0;
    int negative = 0;
    bool unique = true;
    for (int n = 0; n < 100; ++n) {
        const double g = u(rng);
        const ClassicalChannel pi = random_classical(rng);
        const auto d = decompose(g, pi);
        negative += d.u;
        const AffineChannel sim = simulated_channel(chi(g), pi);
        worst = std::max(worst, max_diff(compose(d).F(), sim.F()));
        // Uniqueness: the channel alone determines (u, eta, q).
        const auto again = decompose_affine(sim);
        unique = unique && again.u == d.u && std::abs(again.eta - d.eta) < 1e-10 && (again.q - d.q).norm() < 1e-9;
    }
    return {worst <= 1e-10 && negative > 0 && unique,
            "max |dF| = " + sci(worst) + ", u=1 cases = " + std::to_string(negative)};
}

Outcome squared_channel_decomposition() {
    double worst = 0;
    bool flags = true;
    for (int i = 1; i <= 9; ++i) {
        const double g = i / 10.0;
        const auto d = decompose_affine(squared_channel(g).channel);
        const Vec3 q((1 - g / 2) / std::sqrt(1 + g), -(1 - g / 2) / std::sqrt(1 + g), (1 - g) / (1 + g));
        flags = flags && d.u == 0;
        worst = std::max({worst, std::abs(d.eta - g * g), (d.q - q).cwiseAbs().maxCoeff()});
    }
    return {flags && worst <= 1e-12, "max error = " + sci(worst)};
}

Outcome distances() {
    std::mt19937_64 rng(107);
    std::uniform_real_distribution<double> u(0.05, 0.95);
    double trace_err = 0, witness_err = 0;
    bool ordered = true;
    for (int n = 0; n < 10; ++n) {
        const double g = u(rng);
        const auto d = decompose(g, random_classical(rng));
        const AffineChannel sim = compose(d), cl = closest_pauli(d).channel();
        const double trace = channel_trace_distance(sim, cl);
        trace_err = std::max(trace_err, std::abs(trace - d.eta));
        witness_err = std::max(witness_err, diamond_witness_check(d, 1000, 1000 + n).max_deviation);
        std::mt19937_64 probes(2000 + n);
        for (int s = 0; s < 200; ++s) {
            const double entangled = probe_distance(sim, cl, random_pure_two_qubit_state(probes));
            ordered = ordered && diamond_distance_to_closest(d) >= entangled - 1e-12;
        }
        ordered = ordered && diamond_distance_estimate(sim, cl, 200, n) >= trace - 1e-9;
    }
    return {trace_err <= 1e-6 && witness_err < 1e-8 && ordered,
            "trace error = " + sci(trace_err) + ", witness deviation = " + sci(witness_err)};
}

Outcome capacity_bounds() {
    bool endpoints = std::abs(ree_upper_bound(0.0) - 1.0) <= 1e-12 && std::abs(ree_upper_bound(1.0)) <= 1e-12;
    bool monotone = true;
    double previous = ree_upper_bound(0.0);
    for (int i = 1; i < 1000; ++i) {
        const double v = ree_upper_bound(i / 999.0);
        monotone = monotone && v <= previous;
        previous = v;
    }
    std::vector<double> grid;
    for (int i = 0; i < 20; ++i) {
        grid.push_back(i / 20.0);
    }
    bool ordered = true;
    for (const auto &row : bounds_curve(grid)) {
        ordered = ordered && row.lower <= row.upper;
    }
    return {endpoints && monotone && ordered, std::string("endpoints ") + (endpoints ? "ok" : "bad") + ", monotone " +
                                                  (monotone ? "ok" : "bad") + ", lower<=upper " + (ordered ? "ok" : "bad")};
}

Outcome polytope_hull() {
    const auto start = std::chrono::steady_clock::now();
    const double pairs[3][2] = {{0.6, 0.3}, {0.5, 0.25}, {0.8, 0.4}};
    bool all = true;
    double worst = 0;
    for (const auto &pair : pairs) {
        for (int sign : {1, -1}) {
            const auto set = enumerate_polytope_vertices(pair[0], pair[1], sign);
            const auto cmp = compare_with_truncated_tetrahedron(map_S(set, sign), 1 - pair[1] / pair[0], 1e-9);
            all = all && cmp.equal();
            worst = std::max(worst, cmp.max_vertex_error);
        }
    }
    const double elapsed = seconds_since(start);
    return {all && elapsed < 60.0, "max vertex error = " + sci(worst) + ", " + sci(elapsed) + " s"};
}

Outcome damping_not_simulable() {
    bool none = true;
    for (int i = 1; i <= 9; ++i) {
        PauliDampingDecomposition ad;
        ad.eta = i / 10.0;
        none = none && !is_simulable(ad, i / 10.0);
    }
    std::mt19937_64 rng(110);
    int pauli_ok = 0;
    for (int n = 0; n < 20; ++n) {
        pauli_ok += check_teleportation_covariance(pauli_channel_from_probs(PauliProbabilities(simplex(rng)))).covariant;
    }
    int ad_rejected = 0;
    for (double g : {0.3, 0.5, 0.7}) {
        ad_rejected += !check_teleportation_covariance(affine_amplitude_damping(g)).covariant;
    }
    return {none && pauli_ok == 20 && ad_rejected == 3,
            "pauli covariant " + std::to_string(pauli_ok) + "/20, damping rejected " + std::to_string(ad_rejected) + "/3"};
}

Outcome sign_tables() {
    int mismatches = 0;
    std::string diff;
    for (int i = 1; i <= 3; ++i) {
        for (int j = 0; j <= 3; ++j) {
            const SignTable &hard = sign_table(i, j);
            const SignTable gen = sign_table_from_exponent(i, j);
            for (int k = 0; k < 4; ++k) {
                for (int l = 0; l < 4; ++l) {
                    if (hard[k][l] != gen[k][l]) {
                        ++mismatches;
                        diff += " (" + std::to_string(i) + std::to_string(j) + ")[" + std::to_string(k) + "][" +
                                std::to_string(l) + "]";
                    }
                }
            }
        }
    }
    return {mismatches == 0, mismatches == 0 ? "12 tables identical" : "mismatches:" + diff};
}

}  // namespace

int main() {
    const std::pair<const char *, std::function<Outcome()>> criteria[] = {
        {"oracle equivalence", oracle_equivalence},
        {"standard teleportation reduction", standard_reduction},
        {"Bell-diagonal no-go", bell_diagonal_no_go},
        {"region golden vertices", golden_vertices},
        {"decomposition round trip", decomposition_round_trip},
        {"squared channel decomposition", squared_channel_decomposition},
        {"distances", distances},
        {"capacity bounds", capacity_bounds},
        {"polytope hull", polytope_hull},
        {"damping non-simulability and covariance", damping_not_simulable},
        {"sign table consistency", sign_tables},
    };
    int failures = 0;
    int index = 1;
    for (const auto &[name, check] : criteria) {
        Outcome outcome;
        try {
            outcome = check();
        } catch (const std::exception &e) {
            outcome = {false, std::string("exception: ") + e.what()};
        }
        failures += !outcome.pass;
        std::printf("%s %2d %s: %s\n", outcome.pass ? "PASS" : "FAIL", index++, name, outcome.detail.c_str());
    }
    return failures == 0 ? 0 : 1;
}

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

#include "telesim/teleport_sim.h"

#include <cmath>
#include <sstream>

#include "telesim/errors.h"

namespace telesim {

namespace {

using Mat8c = Eigen::Matrix<Complex, 8, 8>;

// Rows are Bell outcomes k, columns correction indices l.
constexpr SignTable kTables[3][4] = {
    {
        {{{1, 1, -1, -1}, {1, 1, -1, -1}, {1, 1, -1, -1}, {1, 1, -1, -1}}},
        {{{1, 1, -1, -1}, {1, 1, -1, -1}, {-1, -1, 1, 1}, {-1, -1, 1, 1}}},
        {{{-1, -1, 1, 1}, {1, 1, -1, -1}, {-1, -1, 1, 1}, {1, 1, -1, -1}}},
        {{{1, 1, -1, -1}, {-1, -1, 1, 1}, {-1, -1, 1, 1}, {1, 1, -1, -1}}},
    },
    {
        {{{1, -1, 1, -1}, {1, -1, 1, -1}, {1, -1, 1, -1}, {1, -1, 1, -1}}},
        {{{1, -1, 1, -1}, {1, -1, 1, -1}, {-1, 1, -1, 1}, {-1, 1, -1, 1}}},
        {{{-1, 1, -1, 1}, {1, -1, 1, -1}, {-1, 1, -1, 1}, {1, -1, 1, -1}}},
        {{{1, -1, 1, -1}, {-1, 1, -1, 1}, {-1, 1, -1, 1}, {1, -1, 1, -1}}},
    },
    {
        {{{1, -1, -1, 1}, {1, -1, -1, 1}, {1, -1, -1, 1}, {1, -1, -1, 1}}},
        {{{1, -1, -1, 1}, {1, -1, -1, 1}, {-1, 1, 1, -1}, {-1, 1, 1, -1}}},
        {{{-1, 1, 1, -1}, {1, -1, -1, 1}, {-1, 1, 1, -1}, {1, -1, -1, 1}}},
        {{{1, -1, -1, 1}, {-1, 1, 1, -1}, {-1, 1, 1, -1}, {1, -1, -1, 1}}},
    },
};

void require_indices(int i, int j) {
    if (i < 1 || i > 3 || j < 0 || j > 3) {
        std::ostringstream msg;
        msg << "S coefficient index out of range: (" << i << ", " << j << ")";
        throw ParameterError(msg.str());
    }
}

int delta(int x, int y) {
    return x == y ? 1 : 0;
}

}  // namespace

ClassicalChannel::ClassicalChannel(const Mat4 &p) : p_(p) {
    for (int k = 0; k < 4; ++k) {
        double column = 0.0;
        for (int l = 0; l < 4; ++l) {
            if (!std::isfinite(p(l, k)) || p(l, k) < -tau_num()) {
                throw ParameterError("classical channel entries must be non-negative");
            }
            column += p(l, k);
        }
        if (std::abs(column - 1.0) > tau_num()) {
            std::ostringstream msg;
            msg << "classical channel column " << k << " sums to " << column << ", expected 1";
            throw ParameterError(msg.str());
        }
    }
}

ClassicalChannel ClassicalChannel::uniform() {
    return ClassicalChannel(Mat4::Constant(0.25));
}

const SignTable &sign_table(int i, int j) {
    require_indices(i, j);
    return kTables[i - 1][j];
}

SignTable sign_table_from_exponent(int i, int j) {
    require_indices(i, j);
    SignTable out{};
    for (int k = 0; k < 4; ++k) {
        for (int l = 0; l < 4; ++l) {
            int exponent = delta(k, 0) + delta(j, 2) + delta(j, 0) + delta(k, j) + delta(i, l) + delta(0, l);
            out[k][l] = exponent % 2 == 0 ? 1 : -1;
        }
    }
    return out;
}

double s_coefficient(int i, int j, const ClassicalChannel &pi) {
    const SignTable &table = sign_table(i, j);
    double sum = 0.0;
    for (int k = 0; k < 4; ++k) {
        for (int l = 0; l < 4; ++l) {
            sum += table[k][l] * pi(l, k);
        }
    }
    return sum / 4.0;
}

AffineChannel simulated_channel(const TwoQubitState &tau, const ClassicalChannel &pi) {
    Mat4 F = Mat4::Zero();
    F(0, 0) = 1.0;
    for (int i = 1; i <= 3; ++i) {
        for (int j = 0; j <= 3; ++j) {
            double t_prime = j == 0 ? tau.b()(i - 1) : tau.T()(j - 1, i - 1);
            F(i, j) = t_prime * s_coefficient(i, j, pi);
        }
    }
    return AffineChannel(F);
}

Mat2c protocol_output(const TwoQubitState &tau, const ClassicalChannel &pi, const Mat2c &rho) {
    // Ordering C (x) A (x) B.
    Mat8c joint = kron(rho, tau.rho());
    Mat2c out = Mat2c::Zero();
    for (int k = 0; k < 4; ++k) {
        Mat8c projector = kron(bell_projectors()[k], Mat2c::Identity());
        Mat8c branch = projector * joint * projector;
        Mat2c bob = Mat2c::Zero();
        for (int ca = 0; ca < 4; ++ca) {
            bob += branch.block<2, 2>(2 * ca, 2 * ca);
        }
        for (int l = 0; l < 4; ++l) {
            double weight = pi(l, k);
            if (weight != 0.0) {
                out += weight * pauli(l) * bob * pauli(l).adjoint();
            }
        }
    }
    return out;
}

QubitState protocol_oracle(const TwoQubitState &tau, const ClassicalChannel &pi, const QubitState &rho_in) {
    Mat2c out = protocol_output(tau, pi, rho_in.density());
    out /= out.trace();
    return QubitState(density_to_bloch(0.5 * (out + out.adjoint())));
}

AffineChannel oracle_channel(const TwoQubitState &tau, const ClassicalChannel &pi) {
    auto bloch_of = [](const Mat2c &m) {
        return Vec3(2.0 * m(1, 0).real(), 2.0 * m(1, 0).imag(), (m(0, 0) - m(1, 1)).real());
    };
    Vec3 offset = bloch_of(protocol_output(tau, pi, 0.5 * Mat2c::Identity()));
    Mat3 linear;
    for (int j = 0; j < 3; ++j) {
        Mat2c probe = 0.5 * (Mat2c::Identity() + pauli(j + 1));
        linear.col(j) = bloch_of(protocol_output(tau, pi, probe)) - offset;
    }
    return AffineChannel::from_parts(offset, linear);
}

PauliProbabilities standard_teleport_probs(const TwoQubitState &tau) {
    std::array<double, 4> p{};
    for (int i = 0; i < 4; ++i) {
        p[i] = (bell_projectors()[i] * tau.rho()).trace().real();
    }
    return PauliProbabilities(p);
}

}  // namespace telesim

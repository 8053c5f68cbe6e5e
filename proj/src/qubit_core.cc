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

#include "telesim/qubit_core.h"

#include <cmath>
#include <sstream>

#include "telesim/errors.h"

namespace telesim {

namespace {

void require_damping(double gamma) {
    if (!(gamma >= 0.0 && gamma <= 1.0)) {
        std::ostringstream msg;
        msg << "damping probability must lie in [0, 1], got " << gamma;
        throw ParameterError(msg.str());
    }
}

}  // namespace

QubitState::QubitState(const Vec3 &bloch) : bloch_(bloch) {
    if (!bloch.allFinite() || bloch.norm() > 1.0 + tau_num()) {
        std::ostringstream msg;
        msg << "Bloch vector norm " << bloch.norm() << " exceeds 1";
        throw InvalidStateError(msg.str());
    }
}

QubitState QubitState::from_density(const Mat2c &rho) {
    return QubitState(density_to_bloch(rho));
}

Mat2c QubitState::density() const {
    return bloch_to_density(bloch_);
}

Mat2c bloch_to_density(const Vec3 &bloch) {
    if (!bloch.allFinite() || bloch.norm() > 1.0 + tau_num()) {
        throw InvalidStateError("Bloch vector outside the unit ball");
    }
    const double x = bloch.x(), y = bloch.y(), z = bloch.z();
    Mat2c rho;
    rho << Complex(1 + z, 0), Complex(x, -y), Complex(x, y), Complex(1 - z, 0);
    return 0.5 * rho;
}

Vec3 density_to_bloch(const Mat2c &rho) {
    if (!is_hermitian(rho)) {
        throw InvalidStateError("density matrix is not Hermitian");
    }
    if (std::abs(rho.trace() - Complex(1.0, 0.0)) > tau_num()) {
        throw InvalidStateError("density matrix does not have unit trace");
    }
    return Vec3(2.0 * rho(1, 0).real(), 2.0 * rho(1, 0).imag(), (rho(0, 0) - rho(1, 1)).real());
}

Mat4 PauliCoefficients::correlations() const {
    Mat4 c = Mat4::Zero();
    c(0, 0) = 1.0;
    c.block<3, 1>(1, 0) = a;
    c.block<1, 3>(0, 1) = b.transpose();
    c.block<3, 3>(1, 1) = T;
    return c;
}

PauliCoefficients PauliCoefficients::from_correlations(const Mat4 &c) {
    PauliCoefficients out;
    out.a = c.block<3, 1>(1, 0);
    out.b = c.block<1, 3>(0, 1).transpose();
    out.T = c.block<3, 3>(1, 1);
    return out;
}

Mat4c density_from_abT(const PauliCoefficients &coefficients) {
    return from_pauli_correlations(coefficients.correlations());
}

PauliCoefficients abT_from_density(const Mat4c &rho) {
    if (!is_hermitian(rho)) {
        throw InvalidStateError("two-qubit matrix is not Hermitian");
    }
    if (std::abs(rho.trace() - Complex(1.0, 0.0)) > tau_num()) {
        throw InvalidStateError("two-qubit matrix does not have unit trace");
    }
    return PauliCoefficients::from_correlations(pauli_correlations(rho));
}

TwoQubitState::TwoQubitState(const Mat4c &rho) : rho_(rho), coefficients_(abT_from_density(rho)) {
    if (!is_psd(rho)) {
        throw InvalidStateError("two-qubit matrix is not positive semidefinite");
    }
}

TwoQubitState two_qubit_from_abT(const Vec3 &a, const Vec3 &b, const Mat3 &T) {
    PauliCoefficients c{a, b, T};
    Mat4c rho = density_from_abT(c);
    if (!is_psd(rho)) {
        throw InvalidStateError("(a, b, T) does not describe a positive semidefinite state");
    }
    return TwoQubitState(rho);
}

const std::array<Mat4c, 4> &bell_projectors() {
    static const std::array<Mat4c, 4> projectors = [] {
        const double h = 1.0 / std::sqrt(2.0);
        std::array<Eigen::Vector4cd, 4> kets;
        kets[0] << h, 0, 0, h;   // Phi+
        kets[1] << 0, h, h, 0;   // Psi+
        kets[2] << 0, h, -h, 0;  // Psi-
        kets[3] << h, 0, 0, -h;  // Phi-
        std::array<Mat4c, 4> out;
        for (int k = 0; k < 4; ++k) {
            out[k] = kets[k] * kets[k].adjoint();
        }
        return out;
    }();
    return projectors;
}

PauliProbabilities::PauliProbabilities(const std::array<double, 4> &p) : p_(p) {
    double total = 0.0;
    for (double v : p) {
        if (!std::isfinite(v) || v < -tau_num()) {
            throw ParameterError("Pauli probabilities must be non-negative");
        }
        total += v;
    }
    if (std::abs(total - 1.0) > tau_num()) {
        throw ParameterError("Pauli probabilities must sum to 1");
    }
}

AffineChannel::AffineChannel(const Mat4 &F) : F_(F) {
    if (F(0, 0) != 1.0 || F(0, 1) != 0.0 || F(0, 2) != 0.0 || F(0, 3) != 0.0) {
        throw DomainError("F matrix first row must be (1, 0, 0, 0)");
    }
    if (!F.allFinite()) {
        throw DomainError("F matrix has non-finite entries");
    }
}

AffineChannel AffineChannel::from_parts(const Vec3 &offset, const Mat3 &linear) {
    Mat4 F = Mat4::Zero();
    F(0, 0) = 1.0;
    F.block<3, 1>(1, 0) = offset;
    F.block<3, 3>(1, 1) = linear;
    return AffineChannel(F);
}

AffineChannel AffineChannel::completely_depolarizing() {
    return from_parts(Vec3::Zero(), Mat3::Zero());
}

Mat2c AffineChannel::apply(const Mat2c &op) const {
    // op = 1/2 (c_0 I + sum c_j s_j); the channel maps I -> I + sum f_i0 s_i and s_j -> sum f_ij s_i.
    Eigen::Vector4cd c;
    for (int mu = 0; mu < 4; ++mu) {
        c(mu) = (pauli(mu) * op).trace();
    }
    Eigen::Vector4cd out = F_.cast<Complex>() * c;
    Mat2c result = Mat2c::Zero();
    for (int mu = 0; mu < 4; ++mu) {
        result += out(mu) * pauli(mu);
    }
    return 0.5 * result;
}

ChoiMatrix::ChoiMatrix(const Mat4c &chi) : chi_(chi) {
    if (!is_hermitian(chi)) {
        throw InvalidStateError("Choi matrix is not Hermitian");
    }
    if (std::abs(chi.trace() - Complex(1.0, 0.0)) > tau_num()) {
        throw InvalidStateError("Choi matrix does not have unit trace");
    }
}

bool ChoiMatrix::is_psd() const {
    return telesim::is_psd(chi_);
}

bool ChoiMatrix::is_trace_preserving() const {
    Mat2c reduced = trace_out_second(chi_);
    return (reduced - 0.5 * Mat2c::Identity()).cwiseAbs().maxCoeff() <= tau_num();
}

KrausChannel::KrausChannel(std::vector<Mat2c> ops) : ops_(std::move(ops)) {
    if (ops_.empty()) {
        throw DomainError("Kraus channel needs at least one operator");
    }
    Mat2c sum = Mat2c::Zero();
    for (const auto &k : ops_) {
        sum += k.adjoint() * k;
    }
    if ((sum - Mat2c::Identity()).cwiseAbs().maxCoeff() > tau_num()) {
        throw DomainError("Kraus operators do not satisfy sum K^dagger K = I");
    }
}

Mat2c KrausChannel::apply(const Mat2c &rho) const {
    Mat2c out = Mat2c::Zero();
    for (const auto &k : ops_) {
        out += k * rho * k.adjoint();
    }
    return out;
}

AffineChannel KrausChannel::affine() const {
    // f_ij = 1/2 Tr(s_i E(s_j)).
    Mat4 F;
    for (int j = 0; j < 4; ++j) {
        Mat2c image = apply(pauli(j));
        for (int i = 0; i < 4; ++i) {
            F(i, j) = 0.5 * (pauli(i) * image).trace().real();
        }
    }
    F.row(0) << 1.0, 0.0, 0.0, 0.0;
    return AffineChannel(F);
}

Vec3 t_from_probs(const PauliProbabilities &p) {
    return Vec3(p[0] + p[1] - p[2] - p[3], -p[0] + p[1] - p[2] + p[3], p[0] - p[1] - p[2] + p[3]);
}

AffineChannel pauli_channel_from_probs(const PauliProbabilities &p) {
    Vec3 t = t_from_probs(p);
    Mat3 linear = Vec3(t.x(), -t.y(), t.z()).asDiagonal();
    return AffineChannel::from_parts(Vec3::Zero(), linear);
}

PauliProbabilities probs_from_t(const Vec3 &t) {
    std::array<double, 4> p{
        (1.0 + t.x() - t.y() + t.z()) / 4.0,
        (1.0 + t.x() + t.y() - t.z()) / 4.0,
        (1.0 - t.x() - t.y() - t.z()) / 4.0,
        (1.0 - t.x() + t.y() + t.z()) / 4.0,
    };
    for (double &v : p) {
        if (v < -tau_num()) {
            throw NotPauliChannelError("t lies outside the Pauli tetrahedron");
        }
        v = std::max(v, 0.0);
    }
    return PauliProbabilities(p);
}

KrausChannel kraus_pauli(const PauliProbabilities &p) {
    std::vector<Mat2c> ops;
    for (int i = 0; i < 4; ++i) {
        ops.push_back(std::sqrt(p[i]) * pauli(i));
    }
    return KrausChannel(std::move(ops));
}

ChoiMatrix choi_amplitude_damping(double gamma) {
    require_damping(gamma);
    const double s = std::sqrt(1.0 - gamma);
    Mat4c chi = Mat4c::Zero();
    chi(0, 0) = 0.5;
    chi(0, 3) = s / 2.0;
    chi(3, 0) = s / 2.0;
    chi(2, 2) = gamma / 2.0;
    chi(3, 3) = (1.0 - gamma) / 2.0;
    return ChoiMatrix(chi);
}

AffineChannel affine_amplitude_damping(double gamma) {
    require_damping(gamma);
    const double s = std::sqrt(1.0 - gamma);
    Mat3 linear = Vec3(s, s, 1.0 - gamma).asDiagonal();
    return AffineChannel::from_parts(Vec3(0.0, 0.0, gamma), linear);
}

KrausChannel kraus_amplitude_damping(double gamma) {
    require_damping(gamma);
    Mat2c k0, k1;
    k0 << 1, 0, 0, std::sqrt(1.0 - gamma);
    k1 << 0, std::sqrt(gamma), 0, 0;
    return KrausChannel({k0, k1});
}

Mat4c apply_on_second(const AffineChannel &F, const Mat4c &op) {
    Mat4c hermitian_part = 0.5 * (op + op.adjoint());
    Mat4c anti_part = (op - op.adjoint()) * Complex(0.0, -0.5);
    // Both parts are Hermitian, so their Pauli correlations are real.
    Mat4 c_h = pauli_correlations(hermitian_part) * F.F().transpose();
    Mat4 c_a = pauli_correlations(anti_part) * F.F().transpose();
    return from_pauli_correlations(c_h) + Complex(0.0, 1.0) * from_pauli_correlations(c_a);
}

ChoiMatrix choi_of_affine(const AffineChannel &F) {
    Mat4c phi_plus = bell_projectors()[0];
    return ChoiMatrix(apply_on_second(F, phi_plus));
}

bool is_cptp(const AffineChannel &F) {
    ChoiMatrix chi = choi_of_affine(F);
    return chi.is_psd() && chi.is_trace_preserving();
}

QubitState apply_affine(const AffineChannel &F, const QubitState &s) {
    return QubitState(F.apply(s.bloch()));
}

}  // namespace telesim

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

#include <array>
#include <vector>

#include "telesim/linalg.h"

namespace telesim {

/// A single-qubit state stored as its Bloch vector (x, y, z), |r| <= 1.
class QubitState {
   public:
    QubitState() : bloch_(Vec3::Zero()) {}
    explicit QubitState(const Vec3 &bloch);
    static QubitState from_density(const Mat2c &rho);

    const Vec3 &bloch() const { return bloch_; }
    Mat2c density() const;

   private:
    Vec3 bloch_;
};

Mat2c bloch_to_density(const Vec3 &bloch);
Vec3 density_to_bloch(const Mat2c &rho);

/// Pauli expansion (a, b, T) of a two-qubit operator:
/// rho = 1/4 (I(x)I + sum a_i s_i(x)I + sum b_j I(x)s_j + sum t_ij s_i(x)s_j).
struct PauliCoefficients {
    Vec3 a = Vec3::Zero();
    Vec3 b = Vec3::Zero();
    Mat3 T = Mat3::Zero();

    Mat4 correlations() const;
    static PauliCoefficients from_correlations(const Mat4 &c);
};

/// Builds the 4x4 matrix from (a, b, T) without any positivity check.
Mat4c density_from_abT(const PauliCoefficients &coefficients);

/// Extracts (a, b, T); throws InvalidStateError unless rho is Hermitian with unit trace.
PauliCoefficients abT_from_density(const Mat4c &rho);

/// A two-qubit density matrix on A (x) B with A the most significant factor.
class TwoQubitState {
   public:
    /// Throws InvalidStateError if rho is not Hermitian, PSD and unit trace.
    explicit TwoQubitState(const Mat4c &rho);

    const Mat4c &rho() const { return rho_; }
    const PauliCoefficients &coefficients() const { return coefficients_; }
    const Vec3 &a() const { return coefficients_.a; }
    const Vec3 &b() const { return coefficients_.b; }
    const Mat3 &T() const { return coefficients_.T; }

   private:
    Mat4c rho_;
    PauliCoefficients coefficients_;
};

/// Throws InvalidStateError when the Hermitian matrix built from (a, b, T) is not PSD.
TwoQubitState two_qubit_from_abT(const Vec3 &a, const Vec3 &b, const Mat3 &T);

/// Bell projectors (E_0, E_1, E_2, E_3) onto (Phi+, Psi+, Psi-, Phi-).
const std::array<Mat4c, 4> &bell_projectors();

/// Probabilities (p_0..p_3) of the Pauli channel rho -> sum p_i s_i rho s_i.
class PauliProbabilities {
   public:
    /// Throws ParameterError unless p_i >= -tau and sum p_i = 1 within tau.
    explicit PauliProbabilities(const std::array<double, 4> &p);

    double operator[](int i) const { return p_[i]; }
    const std::array<double, 4> &values() const { return p_; }

   private:
    std::array<double, 4> p_;
};

/// A qubit channel as its F matrix acting on the augmented Bloch vector (1, x, y, z).
class AffineChannel {
   public:
    AffineChannel() : F_(Mat4::Identity()) {}
    /// Throws DomainError unless the first row is exactly (1, 0, 0, 0).
    explicit AffineChannel(const Mat4 &F);
    static AffineChannel from_parts(const Vec3 &offset, const Mat3 &linear);
    static AffineChannel identity() { return AffineChannel(); }
    static AffineChannel completely_depolarizing();

    const Mat4 &F() const { return F_; }
    double f(int i, int j) const { return F_(i, j); }
    Vec3 offset() const { return F_.block<3, 1>(1, 0); }
    Mat3 linear() const { return F_.block<3, 3>(1, 1); }

    Vec3 apply(const Vec3 &bloch) const { return offset() + linear() * bloch; }
    /// Action on an arbitrary 2x2 operator (linear extension of the channel).
    Mat2c apply(const Mat2c &op) const;

   private:
    Mat4 F_;
};

/// Choi matrix chi = (I (x) E)(|Phi+><Phi+|).
class ChoiMatrix {
   public:
    /// Throws InvalidStateError unless chi is Hermitian with unit trace.
    explicit ChoiMatrix(const Mat4c &chi);

    const Mat4c &matrix() const { return chi_; }
    bool is_psd() const;
    /// Tr_B chi = I/2, i.e. the channel is trace preserving.
    bool is_trace_preserving() const;

   private:
    Mat4c chi_;
};

/// A channel given by Kraus operators; sum K^dagger K = I is enforced.
class KrausChannel {
   public:
    explicit KrausChannel(std::vector<Mat2c> ops);

    const std::vector<Mat2c> &ops() const { return ops_; }
    Mat2c apply(const Mat2c &rho) const;
    AffineChannel affine() const;

   private:
    std::vector<Mat2c> ops_;
};

/// Diagonal (t11, t22, t33) of the Pauli channel, with the sign convention
/// f22 = -t22 of the Bloch action (t11 x, -t22 y, t33 z).
Vec3 t_from_probs(const PauliProbabilities &p);
AffineChannel pauli_channel_from_probs(const PauliProbabilities &p);
/// Throws NotPauliChannelError when t is outside the tetrahedron.
PauliProbabilities probs_from_t(const Vec3 &t);
KrausChannel kraus_pauli(const PauliProbabilities &p);

ChoiMatrix choi_amplitude_damping(double gamma);
AffineChannel affine_amplitude_damping(double gamma);
KrausChannel kraus_amplitude_damping(double gamma);

/// (I (x) E) applied to an arbitrary two-qubit operator.
Mat4c apply_on_second(const AffineChannel &F, const Mat4c &op);
ChoiMatrix choi_of_affine(const AffineChannel &F);
bool is_cptp(const AffineChannel &F);

/// Throws InvalidStateError if F is not CPTP and maps s outside the Bloch ball.
QubitState apply_affine(const AffineChannel &F, const QubitState &s);

}  // namespace telesim

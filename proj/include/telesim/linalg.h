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

#include <Eigen/Dense>
#include <complex>

#include "telesim/tolerance.h"

namespace telesim {

using Complex = std::complex<double>;
using ComplexMatrix = Eigen::MatrixXcd;
using Mat2c = Eigen::Matrix2cd;
using Mat4c = Eigen::Matrix4cd;
using Vec3 = Eigen::Vector3d;
using Vec4 = Eigen::Vector4d;
using Mat3 = Eigen::Matrix3d;
using Mat4 = Eigen::Matrix4d;

/// Pauli operator sigma_i for i in 0..3: I, sigma_x, sigma_y = [[0,-i],[i,0]], sigma_z.
const Mat2c &pauli(int i);

ComplexMatrix kron(const ComplexMatrix &left, const ComplexMatrix &right);

bool is_hermitian(const ComplexMatrix &m, double tol = tau_num());
bool is_unitary(const ComplexMatrix &m, double tol = tau_num());
bool is_psd(const ComplexMatrix &m, double floor = kPsdFloor);

/// Eigenvalues of a Hermitian matrix in ascending order.
Eigen::VectorXd hermitian_eigenvalues(const ComplexMatrix &m);

/// Sum of absolute eigenvalues (trace norm of a Hermitian matrix).
double trace_norm(const ComplexMatrix &m);

/// von Neumann entropy in bits with 0 log 0 = 0; tiny negative eigenvalues are clamped.
double entropy_bits(const ComplexMatrix &rho);

/// Shannon-style -x log2 x with 0 log 0 = 0.
double xlog2x(double x);

/// Trace out the left (A) factor of a 4x4 operator on A (x) B.
Mat2c trace_out_first(const Mat4c &m);
/// Trace out the right (B) factor of a 4x4 operator on A (x) B.
Mat2c trace_out_second(const Mat4c &m);

/// sigma_mu (x) sigma_nu, cached.
const Mat4c &pauli_product(int mu, int nu);

/// Real 4x4 correlation matrix c_{mu,nu} = Tr[(sigma_mu (x) sigma_nu) m].
Mat4 pauli_correlations(const Mat4c &m);
/// Inverse of pauli_correlations: (1/4) sum c_{mu,nu} sigma_mu (x) sigma_nu.
Mat4c from_pauli_correlations(const Mat4 &c);

}  // namespace telesim

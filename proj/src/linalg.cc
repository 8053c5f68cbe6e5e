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

#include "telesim/linalg.h"

#include <array>
#include <cmath>

namespace telesim {

namespace {

std::array<Mat2c, 4> make_paulis() {
    const Complex i(0.0, 1.0);
    std::array<Mat2c, 4> s;
    s[0] << 1, 0, 0, 1;
    s[1] << 0, 1, 1, 0;
    s[2] << 0, -i, i, 0;
    s[3] << 1, 0, 0, -1;
    return s;
}

}  // namespace

const Mat2c &pauli(int i) {
    static const std::array<Mat2c, 4> paulis = make_paulis();
    return paulis.at(static_cast<std::size_t>(i));
}

ComplexMatrix kron(const ComplexMatrix &left, const ComplexMatrix &right) {
    ComplexMatrix out(left.rows() * right.rows(), left.cols() * right.cols());
    for (Eigen::Index r = 0; r < left.rows(); ++r) {
        for (Eigen::Index c = 0; c < left.cols(); ++c) {
            out.block(r * right.rows(), c * right.cols(), right.rows(), right.cols()) = left(r, c) * right;
        }
    }
    return out;
}

bool is_hermitian(const ComplexMatrix &m, double tol) {
    if (m.rows() != m.cols()) {
        return false;
    }
    return (m - m.adjoint()).cwiseAbs().maxCoeff() <= tol;
}

bool is_unitary(const ComplexMatrix &m, double tol) {
    if (m.rows() != m.cols()) {
        return false;
    }
    ComplexMatrix id = ComplexMatrix::Identity(m.rows(), m.cols());
    return (m.adjoint() * m - id).cwiseAbs().maxCoeff() <= tol;
}

Eigen::VectorXd hermitian_eigenvalues(const ComplexMatrix &m) {
    // Symmetrise so round-off in the strictly lower triangle is not ignored.
    ComplexMatrix h = 0.5 * (m + m.adjoint());
    Eigen::SelfAdjointEigenSolver<ComplexMatrix> solver(h, Eigen::EigenvaluesOnly);
    return solver.eigenvalues();
}

bool is_psd(const ComplexMatrix &m, double floor) {
    if (!is_hermitian(m, std::max(floor, tau_num()))) {
        return false;
    }
    return hermitian_eigenvalues(m).minCoeff() >= -floor;
}

double trace_norm(const ComplexMatrix &m) {
    return hermitian_eigenvalues(m).cwiseAbs().sum();
}

double xlog2x(double x) {
    if (x <= 0.0) {
        return 0.0;
    }
    return -x * std::log2(x);
}

double entropy_bits(const ComplexMatrix &rho) {
    double s = 0.0;
    for (double lambda : hermitian_eigenvalues(rho)) {
        s += xlog2x(lambda);
    }
    return s;
}

Mat2c trace_out_first(const Mat4c &m) {
    Mat2c out = Mat2c::Zero();
    for (int a = 0; a < 2; ++a) {
        out += m.block<2, 2>(2 * a, 2 * a);
    }
    return out;
}

Mat2c trace_out_second(const Mat4c &m) {
    Mat2c out;
    for (int r = 0; r < 2; ++r) {
        for (int c = 0; c < 2; ++c) {
            out(r, c) = m(2 * r, 2 * c) + m(2 * r + 1, 2 * c + 1);
        }
    }
    return out;
}

const Mat4c &pauli_product(int mu, int nu) {
    static const std::array<Mat4c, 16> products = [] {
        std::array<Mat4c, 16> out;
        for (int a = 0; a < 4; ++a) {
            for (int b = 0; b < 4; ++b) {
                out[4 * a + b] = kron(pauli(a), pauli(b));
            }
        }
        return out;
    }();
    return products[4 * mu + nu];
}

Mat4 pauli_correlations(const Mat4c &m) {
    Mat4 c;
    for (int mu = 0; mu < 4; ++mu) {
        for (int nu = 0; nu < 4; ++nu) {
            // Tr(P m) without forming the product.
            c(mu, nu) = pauli_product(mu, nu).transpose().cwiseProduct(m).sum().real();
        }
    }
    return c;
}

Mat4c from_pauli_correlations(const Mat4 &c) {
    Mat4c out = Mat4c::Zero();
    for (int mu = 0; mu < 4; ++mu) {
        for (int nu = 0; nu < 4; ++nu) {
            if (c(mu, nu) != 0.0) {
                out += c(mu, nu) * pauli_product(mu, nu);
            }
        }
    }
    return 0.25 * out;
}

}  // namespace telesim

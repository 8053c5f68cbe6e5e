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

#include <pybind11/eigen.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "telesim/capacities.h"
#include "telesim/channel_metrics.h"
#include "telesim/errors.h"
#include "telesim/pauli_damping.h"
#include "telesim/teleport_sim.h"

namespace py = pybind11;
using namespace telesim;

namespace {

AffineChannel to_channel(const Mat4 &F) {
    return AffineChannel(F);
}

ClassicalChannel to_classical(const Mat4 &p) {
    return ClassicalChannel(p);
}

TwoQubitState to_state(const Mat4c &rho) {
    return TwoQubitState(rho);
}

py::dict covariance_dict(const CovarianceReport &r) {
    py::dict d;
    d["covariant"] = r.covariant;
    d["residuals"] = r.residuals;
    return d;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Noisy teleportation simulation of qubit channels (C++ core).";
    m.attr("__version__") = "0.1.0";

    auto &domain_error = py::register_exception<DomainError>(m, "DomainError", PyExc_ValueError);
    py::register_exception<NotPauliChannelError>(m, "NotPauliChannelError", domain_error.ptr());
    py::register_exception<InfeasibleError>(m, "InfeasibleError", domain_error.ptr());

    // Channels and states. F matrices are 4x4 real, density matrices complex.
    m.def("bloch_to_density", &bloch_to_density, py::arg("bloch"));
    m.def("density_to_bloch", &density_to_bloch, py::arg("rho"));
    m.def("choi_amplitude_damping", [](double g) { return choi_amplitude_damping(g).matrix(); }, py::arg("gamma"));
    m.def("affine_amplitude_damping", [](double g) { return affine_amplitude_damping(g).F(); }, py::arg("gamma"));
    m.def(
        "pauli_channel_from_probs",
        [](const std::array<double, 4> &p) { return pauli_channel_from_probs(PauliProbabilities(p)).F(); },
        py::arg("p"));
    m.def("probs_from_t", [](const Vec3 &t) { return probs_from_t(t).values(); }, py::arg("t"));
    m.def("is_cptp", [](const Mat4 &F) { return is_cptp(to_channel(F)); }, py::arg("F"));
    m.def("choi_of_affine", [](const Mat4 &F) { return choi_of_affine(to_channel(F)).matrix(); }, py::arg("F"));
    m.def("bell_projectors", [] {
        const auto &E = bell_projectors();
        return std::vector<Mat4c>(E.begin(), E.end());
    });

    // Teleportation simulation.
    m.def("sign_table", &sign_table, py::arg("i"), py::arg("j"));
    m.def("sign_table_from_exponent", &sign_table_from_exponent, py::arg("i"), py::arg("j"));
    m.def(
        "s_coefficient", [](int i, int j, const Mat4 &p) { return s_coefficient(i, j, to_classical(p)); },
        py::arg("i"), py::arg("j"), py::arg("p"));
    m.def(
        "simulated_channel",
        [](const Mat4c &tau, const Mat4 &p) { return simulated_channel(to_state(tau), to_classical(p)).F(); },
        py::arg("tau"), py::arg("p"), "F matrix of the channel simulated from resource tau and classical channel p[l][k].");
    m.def(
        "oracle_channel",
        [](const Mat4c &tau, const Mat4 &p) { return oracle_channel(to_state(tau), to_classical(p)).F(); },
        py::arg("tau"), py::arg("p"));
    m.def(
        "protocol_output",
        [](const Mat4c &tau, const Mat4 &p, const Mat2c &rho) {
            return protocol_output(to_state(tau), to_classical(p), rho);
        },
        py::arg("tau"), py::arg("p"), py::arg("rho"));
    m.def(
        "standard_teleport_probs", [](const Mat4c &tau) { return standard_teleport_probs(to_state(tau)).values(); },
        py::arg("tau"));
    m.def(
        "check_teleportation_covariance",
        [](const Mat4 &F) { return covariance_dict(check_teleportation_covariance(to_channel(F))); }, py::arg("F"));

    // Pauli-damping decomposition.
    py::class_<PauliDampingDecomposition>(m, "Decomposition")
        .def(py::init<>())
        .def(py::init([](int u, double eta, const Vec3 &q) {
                 PauliDampingDecomposition d{u, eta, q};
                 d.validate();
                 return d;
             }),
             py::arg("u"), py::arg("eta"), py::arg("q"))
        .def_readwrite("u", &PauliDampingDecomposition::u)
        .def_readwrite("eta", &PauliDampingDecomposition::eta)
        .def_readwrite("q", &PauliDampingDecomposition::q)
        .def("__repr__", [](const PauliDampingDecomposition &d) {
            return "Decomposition(u=" + std::to_string(d.u) + ", eta=" + std::to_string(d.eta) + ")";
        });
    m.def(
        "decompose", [](double g, const Mat4 &p) { return decompose(g, to_classical(p)); }, py::arg("gamma"),
        py::arg("p"));
    m.def("decompose_affine", [](const Mat4 &F) { return decompose_affine(to_channel(F)); }, py::arg("F"));
    m.def("compose", [](const PauliDampingDecomposition &d) { return compose(d).F(); }, py::arg("decomposition"));
    m.def("in_tetrahedron", [](const Vec3 &q) { return in_tetrahedron(q); }, py::arg("q"));
    m.def(
        "region_vertices",
        [](double g, double eta) {
            const auto r = region_vertices(g, eta);
            Eigen::Matrix<double, 8, 3> out;
            for (int i = 0; i < 8; ++i) {
                out.row(i) = r.vertices[i].transpose();
            }
            return out;
        },
        py::arg("gamma"), py::arg("eta"));
    m.def("is_simulable", &is_simulable, py::arg("decomposition"), py::arg("gamma"));
    m.def(
        "polytope_images",
        [](double g, double eta, int sign) {
            const auto points = map_S(enumerate_polytope_vertices(g, eta, sign), sign);
            Eigen::MatrixX3d out(points.size(), 3);
            for (std::size_t i = 0; i < points.size(); ++i) {
                out.row(static_cast<Eigen::Index>(i)) = points[i].transpose();
            }
            return out;
        },
        py::arg("gamma"), py::arg("eta"), py::arg("sign"),
        "S-images (S11, S22, S33) of the vertices of the classical-channel polytope.");

    // Distances.
    m.def(
        "channel_trace_distance",
        [](const Mat4 &a, const Mat4 &b) { return channel_trace_distance(to_channel(a), to_channel(b)); },
        py::arg("F1"), py::arg("F2"));
    m.def(
        "closest_pauli",
        [](const PauliDampingDecomposition &d) {
            const auto r = closest_pauli(d);
            py::dict out;
            out["f_diag"] = r.f_diag;
            out["distance"] = r.distance;
            out["F"] = r.channel().F();
            return out;
        },
        py::arg("decomposition"));
    m.def("diamond_distance_to_closest", &diamond_distance_to_closest, py::arg("decomposition"));
    m.def(
        "diamond_witness_check",
        [](const PauliDampingDecomposition &d, std::size_t samples, std::uint64_t seed) {
            const auto r = diamond_witness_check(d, samples, seed);
            py::dict out;
            out["eta"] = r.eta;
            out["max_deviation"] = r.max_deviation;
            out["samples"] = r.samples;
            out["seed"] = r.seed;
            return out;
        },
        py::arg("decomposition"), py::arg("samples") = 1000, py::arg("seed") = 1);

    // Capacities.
    m.def("ree_upper_bound", &ree_upper_bound, py::arg("gamma"));
    m.def(
        "coherent_information",
        [](const Mat4 &F, const Vec3 &bloch) { return coherent_information(to_channel(F), QubitState(bloch)); },
        py::arg("F"), py::arg("bloch"));
    m.def("lower_bound", [](const Mat4 &F) { return lower_bound(to_channel(F)); }, py::arg("F"));
    m.def(
        "squared_channel",
        [](double g) {
            const auto sq = squared_channel(g);
            return py::make_tuple(sq.channel.F(), sq.decomposition);
        },
        py::arg("gamma"));
    m.def("squared_channel_classical", [](double g) { return squared_channel_classical(g).matrix(); }, py::arg("gamma"));
    m.def(
        "bounds_curve",
        [](const std::vector<double> &gammas) {
            py::list rows;
            for (const auto &r : bounds_curve(gammas)) {
                py::dict row;
                row["gamma"] = r.gamma;
                row["eta"] = r.eta;
                row["lower_bits"] = r.lower;
                row["upper_bits"] = r.upper;
                rows.append(row);
            }
            return rows;
        },
        py::arg("gammas"));
}

// Copyright 2026 The qmem Authors
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

#include "qmem/spectral.h"

#include <gtest/gtest.h>

#include <Eigen/Eigenvalues>
#include <complex>
#include <json.hpp>

#include "test_util.h"

using namespace qmem;

namespace {

using CMatrix = Eigen::MatrixXcd;

CMatrix pauli_matrix(PauliKind k) {
    CMatrix p(2, 2);
    const std::complex<double> i(0, 1);
    switch (k) {
        case PauliKind::I:
            p << 1, 0, 0, 1;
            break;
        case PauliKind::X:
            p << 0, 1, 1, 0;
            break;
        case PauliKind::Y:
            p << 0, -i, i, 0;
            break;
        case PauliKind::Z:
            p << 1, 0, 0, -1;
            break;
    }
    return p;
}

CMatrix kron(const CMatrix &a, const CMatrix &b) {
    CMatrix out(a.rows() * b.rows(), a.cols() * b.cols());
    for (Eigen::Index r = 0; r < a.rows(); r++) {
        for (Eigen::Index c = 0; c < a.cols(); c++) {
            out.block(r * b.rows(), c * b.cols(), b.rows(), b.cols()) = a(r, c) * b;
        }
    }
    return out;
}

/// Tensor product with qubit 0 as the least significant basis bit.
CMatrix pauli_string(const PauliOperator &p) {
    CMatrix out = CMatrix::Identity(1, 1);
    for (size_t q = 0; q < p.num_qubits(); q++) {
        out = kron(pauli_matrix(p.at(q)), out);
    }
    return out;
}

CMatrix kron_hamiltonian(const CodeModel &m, const Perturbation &p) {
    const size_t dim = size_t{1} << m.n;
    CMatrix h = CMatrix::Zero(dim, dim);
    for (const auto &c : m.checks) {
        h -= m.delta * pauli_string(c.op);
    }
    PauliKind field = p.direction == FieldDirection::x_field ? PauliKind::X : PauliKind::Z;
    for (size_t q = 0; q < m.n; q++) {
        PauliOperator s(m.n);
        s.set(q, field);
        h -= p.epsilon * pauli_string(s);
    }
    return h;
}

}  // namespace

TEST(spectral, direction_names) {
    ASSERT_EQ(parse_direction("Xfield"), FieldDirection::x_field);
    ASSERT_EQ(parse_direction("z"), FieldDirection::z_field);
    ASSERT_EQ(direction_name(FieldDirection::z_field), "Zfield");
    ASSERT_THROW(parse_direction("Yfield"), std::invalid_argument);
}

TEST(spectral, two_spin_diagonal) {
    auto m = build_model(Family::ising1d, 2);
    auto h = dense_hamiltonian(m, {});
    Eigen::MatrixXd expected = Eigen::Vector4d(-1, 1, 1, -1).asDiagonal();
    ASSERT_TRUE(h.isApprox(expected));
}

TEST(spectral, dense_matches_tensor_products) {
    std::vector<std::pair<CodeModel, Perturbation>> cases{
        {build_model(Family::surface2d, 2), {FieldDirection::z_field, 0.3}},
        {build_model(Family::surface2d, 2), {FieldDirection::x_field, 0.2}},
        {build_model(Family::ising1d, 5, {.delta = 0.5}), {FieldDirection::x_field, 0.7}},
        {build_model(Family::ising2d, 2), {FieldDirection::z_field, 0.1}},
    };
    for (const auto &[m, p] : cases) {
        CMatrix oracle = kron_hamiltonian(m, p);
        Eigen::MatrixXd h = dense_hamiltonian(m, p);
        ASSERT_LT(oracle.imag().cwiseAbs().maxCoeff(), 1e-15);
        ASSERT_LT((oracle.real() - h).cwiseAbs().maxCoeff(), 1e-14) << m.id();
        ASSERT_LT((h - h.transpose()).cwiseAbs().maxCoeff(), 1e-15);
    }
}

TEST(spectral, matrix_free_matches_dense) {
    Rng rng(3);
    for (const auto &m : {build_model(Family::surface2d, 2), build_model(Family::ising1d, 8), build_model(Family::ising2d, 3)}) {
        HamiltonianOperator op(m, {FieldDirection::x_field, 0.37});
        Eigen::MatrixXd h = op.dense();
        for (size_t trial = 0; trial < 5; trial++) {
            Eigen::VectorXd x(op.dimension());
            for (Eigen::Index i = 0; i < x.size(); i++) {
                x[i] = rng.uniform() - 0.5;
            }
            ASSERT_LT((op.apply(x) - h * x).cwiseAbs().maxCoeff(), 1e-12);
        }
    }
}

TEST(spectral, unperturbed_ground_space) {
    for (const auto &m : {build_model(Family::surface2d, 2), build_model(Family::surface2d, 3), build_model(Family::ising1d, 6)}) {
        auto r = ground_splitting(m, {});
        ASSERT_NEAR(r.eigenvalues[0], -m.delta * static_cast<double>(m.checks.size()), 1e-9) << m.id();
        ASSERT_EQ(r.ground_degeneracy, size_t{1} << m.k());
        ASSERT_NEAR(r.splitting, 0.0, 1e-9);
        ASSERT_NEAR(r.gap, 2.0 * m.delta, 1e-9);
        ASSERT_LT(r.max_residual(), 1e-8);
    }
}

TEST(spectral, lanczos_matches_dense) {
    auto m = build_model(Family::ising1d, 6);
    Perturbation p{FieldDirection::x_field, 0.3};
    auto dense = ground_splitting(m, p, {.method = EigenMethod::dense, .levels = 6});
    auto lanczos = ground_splitting(m, p, {.method = EigenMethod::lanczos, .levels = 6});
    ASSERT_EQ(dense.method, "dense");
    ASSERT_EQ(lanczos.method, "lanczos");
    ASSERT_EQ(lanczos.eigenvalues.size(), 6);
    for (size_t i = 0; i < 6; i++) {
        ASSERT_NEAR(dense.eigenvalues[i], lanczos.eigenvalues[i], 1e-10) << i;
    }
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> full(kron_hamiltonian(m, p).real());
    for (size_t i = 0; i < 6; i++) {
        ASSERT_NEAR(dense.eigenvalues[i], full.eigenvalues()[i], 1e-10);
    }

    auto grid = build_model(Family::ising2d, 3);
    Perturbation q{FieldDirection::x_field, 0.2};
    auto a = ground_splitting(grid, q, {.method = EigenMethod::dense, .levels = 6});
    auto b = ground_splitting(grid, q, {.method = EigenMethod::lanczos, .levels = 6});
    for (size_t i = 0; i < a.eigenvalues.size(); i++) {
        ASSERT_NEAR(a.eigenvalues[i], b.eigenvalues[i], 1e-10) << i;
    }
    ASSERT_LT(b.max_residual(), 1e-8);
}

TEST(spectral, splitting_grows_with_field) {
    auto m = build_model(Family::surface2d, 2);
    double previous = -1;
    for (double eps = 0.0; eps <= 0.2 + 1e-12; eps += 0.025) {
        auto r = ground_splitting(m, {FieldDirection::z_field, eps});
        ASSERT_GE(r.splitting, previous - 1e-12) << eps;
        ASSERT_GE(r.gap, r.splitting);
        previous = r.splitting;
    }
    ASSERT_GT(previous, 0);
}

TEST(spectral, splitting_shrinks_with_size) {
    Perturbation p{FieldDirection::z_field, 0.1};
    auto small = ground_splitting(build_model(Family::surface2d, 2), p);
    auto large = ground_splitting(build_model(Family::surface2d, 3), p);
    ASSERT_GT(large.splitting, 0);
    ASSERT_LT(large.splitting, small.splitting);
}

TEST(spectral, default_levels) {
    auto chain = ground_splitting(build_model(Family::ising1d, 4), {FieldDirection::x_field, 0.1});
    ASSERT_EQ(chain.eigenvalues.size(), 4);
    ASSERT_EQ(chain.residuals.size(), 4);
    auto t = build_model(Family::toric3d, 2);
    ASSERT_THROW(ground_splitting(t, {}), std::invalid_argument);
}

TEST(spectral, refusals) {
    ASSERT_THROW(HamiltonianOperator(build_model(Family::surface2d, 4), {}), std::invalid_argument);
    ASSERT_THROW(HamiltonianOperator(build_model(Family::ising1d, 15), {}), std::invalid_argument);
    auto m = build_model(Family::surface2d, 2);
    m.checks[0].op.set(0, PauliKind::Y);
    ASSERT_THROW(HamiltonianOperator(m, {}), std::invalid_argument);
    ASSERT_THROW(ground_splitting(build_model(Family::ising1d, 13), {}, {.method = EigenMethod::dense}), std::invalid_argument);
}

TEST(spectral, json_export) {
    auto r = ground_splitting(build_model(Family::surface2d, 2), {FieldDirection::z_field, 0.1});
    auto j = nlohmann::json::parse(spectrum_json(r));
    ASSERT_EQ(j["model"], "surface2d_L2");
    ASSERT_EQ(j["direction"], "Zfield");
    ASSERT_DOUBLE_EQ(j["splitting"].get<double>(), r.splitting);
    ASSERT_EQ(j["eigenvalues"].size(), r.eigenvalues.size());
}

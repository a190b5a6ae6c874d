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

#include <algorithm>
#include <bit>
#include <cmath>
#include <json.hpp>

#include "qmem/rng.h"

namespace qmem {

std::string_view direction_name(FieldDirection d) { return d == FieldDirection::x_field ? "Xfield" : "Zfield"; }

FieldDirection parse_direction(std::string_view name) {
    if (name == "Xfield" || name == "x") {
        return FieldDirection::x_field;
    }
    if (name == "Zfield" || name == "z") {
        return FieldDirection::z_field;
    }
    throw std::invalid_argument("unknown field direction '" + std::string(name) + "'");
}

namespace {

uint64_t mask_of(const BitVector &v) {
    uint64_t mask = 0;
    for (size_t q : v.ones()) {
        mask |= uint64_t{1} << q;
    }
    return mask;
}

}  // namespace

HamiltonianOperator::HamiltonianOperator(const CodeModel &m, const Perturbation &p) {
    if (m.n > kSpectralMaxQubits) {
        throw std::invalid_argument(
            "spectral methods refused for n = " + std::to_string(m.n) + " > " + std::to_string(kSpectralMaxQubits));
    }
    const uint64_t dim = uint64_t{1} << m.n;
    diag_.assign(dim, 0.0);
    std::vector<uint64_t> z_masks;
    for (const auto &c : m.checks) {
        bool has_x = c.op.x_part().any();
        bool has_z = c.op.z_part().any();
        if (has_x && has_z) {
            throw std::invalid_argument("spectral methods need CSS checks");
        }
        if (has_x) {
            flips_.emplace_back(mask_of(c.op.x_part()), -m.delta);
        } else {
            z_masks.push_back(mask_of(c.op.z_part()));
        }
    }
    if (p.direction == FieldDirection::x_field && p.epsilon != 0) {
        for (size_t q = 0; q < m.n; q++) {
            flips_.emplace_back(uint64_t{1} << q, -p.epsilon);
        }
    }
    for (uint64_t b = 0; b < dim; b++) {
        double e = 0;
        for (uint64_t zm : z_masks) {
            e -= m.delta * ((std::popcount(b & zm) & 1) ? -1.0 : 1.0);
        }
        if (p.direction == FieldDirection::z_field) {
            e -= p.epsilon * (static_cast<double>(m.n) - 2.0 * std::popcount(b));
        }
        diag_[b] = e;
    }
}

void HamiltonianOperator::apply(const Eigen::VectorXd &x, Eigen::VectorXd &y) const {
    const size_t dim = diag_.size();
    y.resize(static_cast<Eigen::Index>(dim));
    for (size_t b = 0; b < dim; b++) {
        double acc = diag_[b] * x[b];
        for (const auto &[mask, coeff] : flips_) {
            acc += coeff * x[b ^ mask];
        }
        y[b] = acc;
    }
}

Eigen::VectorXd HamiltonianOperator::apply(const Eigen::VectorXd &x) const {
    Eigen::VectorXd y;
    apply(x, y);
    return y;
}

Eigen::MatrixXd HamiltonianOperator::dense() const {
    const size_t dim = diag_.size();
    Eigen::MatrixXd h = Eigen::MatrixXd::Zero(dim, dim);
    for (size_t b = 0; b < dim; b++) {
        h(b, b) += diag_[b];
        for (const auto &[mask, coeff] : flips_) {
            h(b ^ mask, b) += coeff;
        }
    }
    return h;
}

Eigen::MatrixXd dense_hamiltonian(const CodeModel &m, const Perturbation &p) {
    HamiltonianOperator op(m, p);
    if (op.dimension() > kDenseMaxDimension) {
        throw std::invalid_argument("dense matrix refused for dimension " + std::to_string(op.dimension()));
    }
    return op.dense();
}

double SpectrumReport::max_residual() const {
    double r = 0;
    for (double x : residuals) {
        r = std::max(r, x);
    }
    return r;
}

namespace {

void orthogonalize(Eigen::VectorXd &v, const std::vector<Eigen::VectorXd> &basis) {
    for (int pass = 0; pass < 2; pass++) {
        for (const auto &b : basis) {
            v -= b.dot(v) * b;
        }
    }
}

/// Lowest eigenpair of H restricted to the complement of `locked`, by
/// restarted Lanczos with full reorthogonalization.
std::pair<double, Eigen::VectorXd> lowest_deflated(
    const HamiltonianOperator &op,
    const std::vector<Eigen::VectorXd> &locked,
    Eigen::VectorXd start,
    const SpectralOptions &options,
    double &residual) {
    const size_t dim = op.dimension();
    const size_t room = dim - locked.size();
    const size_t kdim = std::max<size_t>(2, std::min(options.krylov_dim, room));
    Eigen::VectorXd w;
    for (size_t restart = 0; restart <= options.max_restarts; restart++) {
        orthogonalize(start, locked);
        start.normalize();
        std::vector<Eigen::VectorXd> V{start};
        std::vector<double> alpha;
        std::vector<double> beta;
        for (size_t j = 0; j < kdim; j++) {
            op.apply(V[j], w);
            alpha.push_back(V[j].dot(w));
            orthogonalize(w, locked);
            orthogonalize(w, V);
            double b = w.norm();
            if (j + 1 == kdim || b < 1e-13) {
                break;
            }
            beta.push_back(b);
            V.push_back(w / b);
        }
        const size_t m = alpha.size();
        Eigen::VectorXd d = Eigen::Map<Eigen::VectorXd>(alpha.data(), static_cast<Eigen::Index>(m));
        Eigen::VectorXd e(static_cast<Eigen::Index>(m > 0 ? m - 1 : 0));
        for (size_t i = 0; i + 1 < m; i++) {
            e[i] = beta[i];
        }
        Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> tri;
        tri.computeFromTridiagonal(d, e, Eigen::ComputeEigenvectors);
        double theta = tri.eigenvalues()[0];
        Eigen::VectorXd ritz = Eigen::VectorXd::Zero(static_cast<Eigen::Index>(dim));
        for (size_t i = 0; i < m; i++) {
            ritz += tri.eigenvectors()(static_cast<Eigen::Index>(i), 0) * V[i];
        }
        orthogonalize(ritz, locked);
        ritz.normalize();
        op.apply(ritz, w);
        theta = ritz.dot(w);
        residual = (w - theta * ritz).norm();
        if (residual <= options.tolerance * std::max(1.0, std::abs(theta))) {
            return {theta, ritz};
        }
        start = ritz;
    }
    throw EigenNonConvergence("Lanczos did not converge", {residual});
}

}  // namespace

SpectrumReport ground_splitting(const CodeModel &m, const Perturbation &p, const SpectralOptions &options) {
    HamiltonianOperator op(m, p);
    const size_t dim = op.dimension();
    const size_t multiplet = size_t{1} << m.k();
    size_t levels = options.levels ? options.levels : std::max<size_t>(4, multiplet + 2);
    levels = std::min(levels, dim);

    SpectrumReport r;
    r.model_id = m.id();
    r.n = m.n;
    r.k = m.k();
    r.perturbation = p;

    bool dense = options.method == EigenMethod::dense || (options.method == EigenMethod::automatic && dim <= kAutoDenseDimension);
    if (dense) {
        if (dim > kDenseMaxDimension) {
            throw std::invalid_argument("dense diagonalization refused for dimension " + std::to_string(dim));
        }
        Eigen::MatrixXd h = op.dense();
        Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(h);
        if (es.info() != Eigen::Success) {
            throw EigenNonConvergence("dense eigensolver failed", {});
        }
        for (size_t i = 0; i < levels; i++) {
            Eigen::VectorXd v = es.eigenvectors().col(static_cast<Eigen::Index>(i));
            r.eigenvalues.push_back(es.eigenvalues()[static_cast<Eigen::Index>(i)]);
            r.residuals.push_back((h * v - r.eigenvalues.back() * v).norm());
        }
        r.method = "dense";
    } else {
        Rng rng(options.seed);
        std::vector<Eigen::VectorXd> locked;
        for (size_t i = 0; i < levels; i++) {
            Eigen::VectorXd start(static_cast<Eigen::Index>(dim));
            for (size_t b = 0; b < dim; b++) {
                start[b] = rng.uniform() - 0.5;
            }
            double residual = 0;
            std::pair<double, Eigen::VectorXd> pair;
            try {
                pair = lowest_deflated(op, locked, start, options, residual);
            } catch (EigenNonConvergence &e) {
                std::vector<double> all = r.residuals;
                all.push_back(residual);
                throw EigenNonConvergence("Lanczos did not converge for level " + std::to_string(i), all);
            }
            r.eigenvalues.push_back(pair.first);
            r.residuals.push_back(residual);
            locked.push_back(std::move(pair.second));
        }
        std::vector<size_t> order(levels);
        for (size_t i = 0; i < levels; i++) {
            order[i] = i;
        }
        std::sort(order.begin(), order.end(), [&](size_t a, size_t b) { return r.eigenvalues[a] < r.eigenvalues[b]; });
        std::vector<double> ev, res;
        for (size_t i : order) {
            ev.push_back(r.eigenvalues[i]);
            res.push_back(r.residuals[i]);
        }
        r.eigenvalues = ev;
        r.residuals = res;
        r.method = "lanczos";
    }
    const double e0 = r.eigenvalues[0];
    if (multiplet - 1 < r.eigenvalues.size()) {
        r.splitting = r.eigenvalues[multiplet - 1] - e0;
    }
    if (multiplet < r.eigenvalues.size()) {
        r.gap = r.eigenvalues[multiplet] - e0;
    }
    double window = 1e-8 * std::max(1.0, std::abs(e0));
    for (double e : r.eigenvalues) {
        if (e - e0 <= window) {
            r.ground_degeneracy++;
        }
    }
    return r;
}

std::string spectrum_json(const SpectrumReport &r) {
    nlohmann::json j;
    j["model"] = r.model_id;
    j["n"] = r.n;
    j["k"] = r.k;
    j["epsilon"] = r.perturbation.epsilon;
    j["direction"] = direction_name(r.perturbation.direction);
    j["eigenvalues"] = r.eigenvalues;
    j["residuals"] = r.residuals;
    j["splitting"] = r.splitting;
    j["gap"] = r.gap;
    j["ground_degeneracy"] = r.ground_degeneracy;
    j["method"] = r.method;
    return j.dump();
}

}  // namespace qmem

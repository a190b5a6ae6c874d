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

#ifndef QMEM_SPECTRAL_H
#define QMEM_SPECTRAL_H

#include <Eigen/Dense>
#include <stdexcept>
#include <string>
#include <vector>

#include "qmem/code_model.h"

namespace qmem {

enum class FieldDirection : uint8_t { x_field, z_field };

std::string_view direction_name(FieldDirection d);
FieldDirection parse_direction(std::string_view name);

/// Uniform single-qubit field, V = sum_i sigma_i with sigma in {X, Z}.
struct Perturbation {
    FieldDirection direction = FieldDirection::z_field;
    double epsilon = 0;
};

inline constexpr size_t kSpectralMaxQubits = 14;
inline constexpr size_t kDenseMaxDimension = 4096;
inline constexpr size_t kAutoDenseDimension = 1024;

/// H = -delta * sum_checks C  -  epsilon * V in the computational (Z) basis.
/// Refused (std::invalid_argument) for n > kSpectralMaxQubits or non-CSS checks.
class HamiltonianOperator {
   public:
    HamiltonianOperator(const CodeModel &m, const Perturbation &p);

    size_t dimension() const { return diag_.size(); }
    /// y = H x.
    void apply(const Eigen::VectorXd &x, Eigen::VectorXd &y) const;
    Eigen::VectorXd apply(const Eigen::VectorXd &x) const;
    Eigen::MatrixXd dense() const;

   private:
    std::vector<double> diag_;
    /// Off-diagonal terms coeff * |b ^ mask><b|.
    std::vector<std::pair<uint64_t, double>> flips_;
};

Eigen::MatrixXd dense_hamiltonian(const CodeModel &m, const Perturbation &p);

enum class EigenMethod : uint8_t { automatic, dense, lanczos };

struct SpectralOptions {
    EigenMethod method = EigenMethod::automatic;
    /// Eigenvalues requested; 0 selects max(4, 2^k + 2).
    size_t levels = 0;
    double tolerance = 1e-10;
    size_t krylov_dim = 80;
    size_t max_restarts = 200;
    uint64_t seed = 7;
};

struct SpectrumReport {
    std::string model_id;
    size_t n = 0;
    size_t k = 0;
    Perturbation perturbation;
    /// Ascending.
    std::vector<double> eigenvalues;
    /// ||H v - lambda v|| per eigenvalue.
    std::vector<double> residuals;
    /// E_{2^k - 1} - E_0: width of the would-be ground multiplet.
    double splitting = 0;
    /// E_{2^k} - E_0.
    double gap = 0;
    /// Levels within 1e-8 * max(1, |E_0|) of E_0.
    size_t ground_degeneracy = 0;
    std::string method;

    double max_residual() const;
};

class EigenNonConvergence : public std::runtime_error {
   public:
    EigenNonConvergence(const std::string &what, std::vector<double> residuals)
        : std::runtime_error(what), residuals(std::move(residuals)) {}
    std::vector<double> residuals;
};

SpectrumReport ground_splitting(const CodeModel &m, const Perturbation &p, const SpectralOptions &options = {});

/// {"model", "n", "k", "epsilon", "direction", "eigenvalues", "splitting", "gap", ...}
std::string spectrum_json(const SpectrumReport &r);

}  // namespace qmem

#endif

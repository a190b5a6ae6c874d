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

#ifndef QMEM_CODE_ANALYSIS_H
#define QMEM_CODE_ANALYSIS_H

#include <optional>
#include <span>

#include "qmem/code_model.h"
#include "qmem/gf2.h"

namespace qmem {

/// Supports of the checks of one type as rows of an n-column matrix.
BinaryMatrix type_matrix(const CodeModel &m, CheckType type);
/// Full check matrix in [x | z] layout.
BinaryMatrix check_matrix(const CodeModel &m);
size_t check_rank(const CodeModel &m);

/// Extends `seed` (pure X / pure Z pairs) to a full symplectic logical basis of
/// the CSS code defined by `checks`. Added pairs are pure X / pure Z.
std::vector<LogicalPair> complete_css_logicals(size_t n, const std::vector<Check> &checks, std::vector<LogicalPair> seed);

/// Logical class of an operator that commutes with every check: bit 2i is set
/// when it anticommutes with Zbar_i (carries Xbar_i), bit 2i+1 when it
/// anticommutes with Xbar_i (carries Zbar_i).
BitVector logical_class(const CodeModel &m, const PauliOperator &p);

struct DistanceResult {
    /// Exact distance when found within the cap.
    std::optional<size_t> distance;
    std::optional<size_t> x_distance;
    std::optional<size_t> z_distance;
    bool exhausted = false;
};

/// Local guard for exact distance search without a cap.
inline constexpr size_t kExactDistanceMaxQubits = 30;
inline constexpr size_t kExactDistanceMaxLogicals = 16;

/// Minimum weight of a nontrivial logical. X- and Z-type logicals are searched
/// separately over every nonzero combination of the logical basis.
/// Throws if n > kExactDistanceMaxQubits and no cap is given.
DistanceResult code_distance(const CodeModel &m, std::optional<size_t> weight_cap = std::nullopt);

/// Minimum weight within the stabilizer coset of each basis logical.
struct LogicalWeights {
    std::vector<std::optional<size_t>> x;
    std::vector<std::optional<size_t>> z;
};
LogicalWeights minimal_logical_weights(const CodeModel &m, std::optional<size_t> weight_cap = std::nullopt);

struct SupportDims {
    struct PairDims {
        int d_x = 0;
        int d_z = 0;
        double slope_x = 0;
        double slope_z = 0;
    };
    Family family = Family::ising1d;
    size_t dimension = 0;
    std::vector<size_t> sizes;
    /// weights[s][i] = (x weight, z weight) of pair i at sizes[s].
    std::vector<std::vector<std::pair<size_t, size_t>>> weights;
    std::vector<PairDims> pairs;

    /// Pair minimising d_x + d_z.
    const PairDims &tightest() const;
};

/// Classifies each logical pair's minimal support as 0-, 1- or 2-dimensional
/// from the weight scaling across sizes (log-log slope, rounded).
/// Throws when fewer than two distinct sizes are given.
SupportDims support_dims(Family family, std::span<const size_t> sizes, const BuildOptions &options = {});

}  // namespace qmem

#endif

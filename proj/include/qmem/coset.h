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

#ifndef QMEM_COSET_H
#define QMEM_COSET_H

#include <optional>

#include "qmem/gf2.h"
#include "qmem/pauli.h"

namespace qmem {

/// Generator groups of at most this rank are enumerated exhaustively.
inline constexpr size_t kExhaustiveCosetRank = 30;

/// Minimum Hamming weight over the coset offset + span(generators).
///
/// Returns nullopt ("exhausted") when the minimum exceeds weight_cap. Groups of
/// rank <= kExhaustiveCosetRank are enumerated in Gray-code order; larger groups
/// are searched by increasing weight up to weight_cap with a span membership test.
std::optional<size_t> coset_min_weight(const BinaryMatrix &generators, const BitVector &offset, size_t weight_cap);

/// Pauli version: generators are rows in [x | z] layout (2n columns) and the
/// weight of a Pauli counts qubits with x or z set.
std::optional<size_t> coset_min_weight(const BinaryMatrix &generators, const PauliOperator &offset, size_t weight_cap);

/// Stacks Paulis into a 2n-column [x | z] matrix.
BinaryMatrix symplectic_matrix(std::span<const PauliOperator> paulis);
BitVector symplectic_vector(const PauliOperator &p);
PauliOperator from_symplectic(const BitVector &v);

}  // namespace qmem

#endif

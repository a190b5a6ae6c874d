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

#ifndef QMEM_PAULI_H
#define QMEM_PAULI_H

#include <string>
#include <string_view>

#include "qmem/bit_vector.h"

namespace qmem {

enum class PauliKind : uint8_t { I = 0, X = 1, Z = 2, Y = 3 };

/// An n-qubit Pauli operator in binary symplectic form. The overall phase is
/// not tracked: X*Z and Z*X both give Y.
class PauliOperator {
   public:
    PauliOperator() = default;
    explicit PauliOperator(size_t num_qubits) : x_(num_qubits), z_(num_qubits) {}
    PauliOperator(BitVector x_part, BitVector z_part);

    /// Parses a string over {I, X, Y, Z} (also accepts '_' for identity).
    static PauliOperator from_str(std::string_view text);
    /// Pauli with `kind` on each listed qubit.
    static PauliOperator on(size_t num_qubits, std::span<const size_t> qubits, PauliKind kind);

    size_t num_qubits() const { return x_.size(); }
    const BitVector &x_part() const { return x_; }
    const BitVector &z_part() const { return z_; }
    BitVector &x_part() { return x_; }
    BitVector &z_part() { return z_; }

    PauliKind at(size_t q) const {
        return static_cast<PauliKind>(static_cast<uint8_t>(x_.get(q)) | (static_cast<uint8_t>(z_.get(q)) << 1));
    }
    void set(size_t q, PauliKind kind);
    /// Multiplies in a single-qubit X, Y or Z on qubit q.
    void apply(size_t q, PauliKind kind);

    size_t weight() const;
    bool is_identity() const { return x_.none() && z_.none(); }
    bool is_x_type() const { return z_.none(); }
    bool is_z_type() const { return x_.none(); }
    std::vector<size_t> support() const;

    PauliOperator &operator*=(const PauliOperator &other);
    PauliOperator operator*(const PauliOperator &other) const;
    bool operator==(const PauliOperator &other) const = default;

    std::string str() const;

   private:
    BitVector x_;
    BitVector z_;
};

/// True iff the symplectic product x_a.z_b + z_a.x_b vanishes mod 2.
bool commutes(const PauliOperator &a, const PauliOperator &b);
PauliOperator multiply(const PauliOperator &a, const PauliOperator &b);

}  // namespace qmem

#endif

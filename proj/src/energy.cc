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

#include "qmem/energy.h"

#include <stdexcept>

namespace qmem {

SyndromeEnergy syndrome_energy(const CodeModel &m, const PauliOperator &error) {
    if (error.num_qubits() != m.n) {
        throw std::invalid_argument(
            "error has " + std::to_string(error.num_qubits()) + " qubits, model has " + std::to_string(m.n));
    }
    SyndromeEnergy out{BitVector(m.checks.size()), 0};
    for (size_t c = 0; c < m.checks.size(); c++) {
        if (!commutes(m.checks[c].op, error)) {
            out.syndrome.set(c, true);
            out.violated++;
        }
    }
    return out;
}

SyndromeMap::SyndromeMap(const CodeModel &m) : num_checks_(m.checks.size()), x_flips_(m.n), z_flips_(m.n) {
    for (size_t c = 0; c < m.checks.size(); c++) {
        const auto &op = m.checks[c].op;
        for (size_t q : op.z_part().ones()) {
            x_flips_[q].push_back(static_cast<uint32_t>(c));
        }
        for (size_t q : op.x_part().ones()) {
            z_flips_[q].push_back(static_cast<uint32_t>(c));
        }
    }
    for (size_t q = 0; q < m.n; q++) {
        max_degree_ = std::max({max_degree_, x_flips_[q].size(), z_flips_[q].size()});
    }
}

int SyndromeMap::delta_violated(const BitVector &syndrome, size_t q, PauliKind kind) const {
    switch (kind) {
        case PauliKind::I:
            return 0;
        case PauliKind::Y: {
            BitVector copy = syndrome;
            return apply(copy, q, kind);
        }
        default:
            break;
    }
    int delta = 0;
    for (uint32_t c : kind == PauliKind::X ? x_flips_[q] : z_flips_[q]) {
        delta += syndrome.get(c) ? -1 : 1;
    }
    return delta;
}

int SyndromeMap::apply(BitVector &syndrome, size_t q, PauliKind kind) const {
    int delta = 0;
    auto k = static_cast<uint8_t>(kind);
    if (k & 1) {
        for (uint32_t c : x_flips_[q]) {
            delta += syndrome.get(c) ? -1 : 1;
            syndrome.flip(c);
        }
    }
    if (k & 2) {
        for (uint32_t c : z_flips_[q]) {
            delta += syndrome.get(c) ? -1 : 1;
            syndrome.flip(c);
        }
    }
    return delta;
}

}  // namespace qmem

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

#ifndef QMEM_ENERGY_H
#define QMEM_ENERGY_H

#include <span>

#include "qmem/code_model.h"

namespace qmem {

struct SyndromeEnergy {
    /// Bit c is set iff the error anticommutes with check c.
    BitVector syndrome;
    size_t violated = 0;
};

SyndromeEnergy syndrome_energy(const CodeModel &m, const PauliOperator &error);

/// Energy above the ground state, 2 * delta * violated.
inline double excitation_energy(const CodeModel &m, size_t violated) { return 2.0 * m.delta * static_cast<double>(violated); }

/// Qubit-to-check incidence used for incremental syndrome updates.
class SyndromeMap {
   public:
    explicit SyndromeMap(const CodeModel &m);

    size_t num_qubits() const { return x_flips_.size(); }
    size_t num_checks() const { return num_checks_; }
    /// Checks anticommuting with a single X (resp. Z) on qubit q.
    std::span<const uint32_t> x_flips(size_t q) const { return x_flips_[q]; }
    std::span<const uint32_t> z_flips(size_t q) const { return z_flips_[q]; }
    /// Largest number of checks touched by one single-qubit flip.
    size_t max_degree() const { return max_degree_; }

    /// Change in violated count if X/Y/Z on q were applied to an error with this syndrome.
    int delta_violated(const BitVector &syndrome, size_t q, PauliKind kind) const;
    /// Updates syndrome in place; returns the change in violated count.
    int apply(BitVector &syndrome, size_t q, PauliKind kind) const;

   private:
    size_t num_checks_;
    size_t max_degree_ = 0;
    std::vector<std::vector<uint32_t>> x_flips_;
    std::vector<std::vector<uint32_t>> z_flips_;
};

}  // namespace qmem

#endif

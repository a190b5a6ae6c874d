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

#ifndef QMEM_TEST_UTIL_H
#define QMEM_TEST_UTIL_H

#include "qmem/code_model.h"
#include "qmem/rng.h"

namespace qmem::test_util {

inline BitVector random_bits(Rng &rng, size_t n, double p = 0.5) {
    BitVector v(n);
    for (size_t i = 0; i < n; i++) {
        v.set(i, rng.uniform() < p);
    }
    return v;
}

inline PauliOperator random_pauli(Rng &rng, size_t n, double p = 0.5) {
    return PauliOperator(random_bits(rng, n, p), random_bits(rng, n, p));
}

/// Random error of the kinds a model's dynamics can produce.
inline PauliOperator random_error(Rng &rng, const CodeModel &m, double p = 0.3) {
    PauliOperator e(m.n);
    for (size_t q = 0; q < m.n; q++) {
        if (rng.uniform() < p) {
            e.apply(q, m.classical ? PauliKind::X : static_cast<PauliKind>(1 + rng.below(3)));
        }
    }
    return e;
}

/// Every small model used by the property tests.
inline std::vector<CodeModel> small_models() {
    std::vector<CodeModel> out;
    for (size_t n : {3, 6, 8}) {
        out.push_back(build_model(Family::ising1d, n));
    }
    out.push_back(build_model(Family::ising1d, 5, {.boundary = Boundary::periodic}));
    for (size_t L : {2, 3}) {
        out.push_back(build_model(Family::ising2d, L));
    }
    out.push_back(build_model(Family::ising2d, 3, {.boundary = Boundary::periodic}));
    for (size_t L : {2, 3, 4}) {
        out.push_back(build_model(Family::surface2d, L));
    }
    out.push_back(build_model(Family::toric3d, 2));
    out.push_back(build_model(Family::toric3d, 2, {.gauge_only = true}));
    return out;
}

}  // namespace qmem::test_util

#endif

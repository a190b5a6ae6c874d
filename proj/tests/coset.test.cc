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

#include "qmem/coset.h"

#include <gtest/gtest.h>

#include "test_util.h"

using namespace qmem;

namespace {

/// Minimum weight over all 2^r combinations of the generator rows.
size_t brute_min(const BinaryMatrix &g, const BitVector &offset) {
    size_t best = offset.size() + 1;
    for (uint64_t mask = 0; mask < (uint64_t{1} << g.rows()); mask++) {
        BitVector v = offset;
        for (size_t i = 0; i < g.rows(); i++) {
            if ((mask >> i) & 1) {
                v ^= g.row(i);
            }
        }
        best = std::min(best, v.popcount());
    }
    return best;
}

size_t brute_min_pauli(const std::vector<PauliOperator> &g, const PauliOperator &offset) {
    size_t best = offset.num_qubits() + 1;
    for (uint64_t mask = 0; mask < (uint64_t{1} << g.size()); mask++) {
        PauliOperator v = offset;
        for (size_t i = 0; i < g.size(); i++) {
            if ((mask >> i) & 1) {
                v *= g[i];
            }
        }
        best = std::min(best, v.weight());
    }
    return best;
}

}  // namespace

TEST(coset, hamming_matches_enumeration) {
    Rng rng(21);
    for (int trial = 0; trial < 150; trial++) {
        size_t n = 1 + rng.below(20), r = rng.below(10);
        BinaryMatrix g(r, n);
        for (size_t i = 0; i < r; i++) {
            g.row(i) = test_util::random_bits(rng, n, rng.uniform());
        }
        auto offset = test_util::random_bits(rng, n);
        size_t expected = brute_min(g, offset);
        ASSERT_EQ(coset_min_weight(g, offset, n), expected);
        if (expected > 0) {
            ASSERT_EQ(coset_min_weight(g, offset, expected - 1), std::nullopt);
        }
    }
}

TEST(coset, weight_search_path_on_known_span) {
    // Rank above the exhaustive limit forces the increasing-weight search. The
    // span is that of the first 32 unit vectors, given in a mixed basis, so the
    // minimum is the offset weight on the last 8 coordinates.
    Rng rng(22);
    const size_t n = 40, r = kExhaustiveCosetRank + 2;
    BinaryMatrix g(r, n);
    for (size_t i = 0; i < r; i++) {
        g.set(i, i, true);
        if (i + 1 < r) {
            g.set(i, i + 1, true);
        }
    }
    for (int trial = 0; trial < 20; trial++) {
        BitVector offset = test_util::random_bits(rng, n);
        for (size_t i = r; i < n; i++) {
            offset.set(i, false);
        }
        size_t expected = rng.below(4);
        for (size_t i = 0; i < expected; i++) {
            offset.set(r + 2 * i, true);
        }
        ASSERT_EQ(coset_min_weight(g, offset, n - r), expected);
        if (expected > 0) {
            ASSERT_EQ(coset_min_weight(g, offset, expected - 1), std::nullopt);
        }
    }
}

TEST(coset, pauli_weight_counts_qubits) {
    Rng rng(23);
    for (int trial = 0; trial < 100; trial++) {
        size_t n = 1 + rng.below(8);
        std::vector<PauliOperator> gens;
        for (size_t i = 0; i < rng.below(6); i++) {
            gens.push_back(test_util::random_pauli(rng, n, 0.3));
        }
        auto offset = test_util::random_pauli(rng, n);
        ASSERT_EQ(coset_min_weight(symplectic_matrix(gens), offset, n), brute_min_pauli(gens, offset));
    }
}

TEST(coset, symplectic_roundtrip) {
    Rng rng(24);
    auto p = test_util::random_pauli(rng, 17);
    auto v = symplectic_vector(p);
    ASSERT_EQ(v.size(), 34);
    ASSERT_EQ(from_symplectic(v), p);
}

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

#include <algorithm>
#include <functional>
#include <stdexcept>

namespace qmem {

namespace {

/// Splits a 2n-bit symplectic vector into its x and z halves.
PauliOperator split(const BitVector &v) {
    size_t n = v.size() / 2;
    PauliOperator p(n);
    for (size_t i : v.ones()) {
        if (i < n) {
            p.x_part().set(i, true);
        } else {
            p.z_part().set(i - n, true);
        }
    }
    return p;
}

size_t weight_of(const BitVector &v) { return v.popcount(); }
size_t weight_of(const PauliOperator &p) { return p.weight(); }

template <typename T>
size_t gray_code_min(const std::vector<T> &basis, T current) {
    size_t best = weight_of(current);
    uint64_t count = uint64_t{1} << basis.size();
    for (uint64_t i = 1; i < count && best > 0; i++) {
        unsigned flip = std::countr_zero(i);
        if constexpr (std::is_same_v<T, BitVector>) {
            current ^= basis[flip];
        } else {
            current *= basis[flip];
        }
        best = std::min(best, weight_of(current));
    }
    return best;
}

/// Enumerates weight-w vectors in increasing w. `choices` is the number of
/// non-identity letters per qubit; `unit(q, letter)` gives the remainder of that
/// single-qubit vector modulo the span. Returns the first w whose remainder
/// matches `target`.
std::optional<size_t> weight_bounded_search(
    size_t num_qubits,
    size_t choices,
    const BitVector &target,
    size_t weight_cap,
    const std::function<const BitVector &(size_t, size_t)> &unit) {
    if (target.none()) {
        return 0;
    }
    size_t cap = std::min(weight_cap, num_qubits);
    BitVector acc(target.size());
    std::function<bool(size_t, size_t)> rec = [&](size_t start, size_t remaining) -> bool {
        if (remaining == 0) {
            return acc == target;
        }
        for (size_t q = start; q + remaining <= num_qubits; q++) {
            for (size_t letter = 0; letter < choices; letter++) {
                acc ^= unit(q, letter);
                bool hit = rec(q + 1, remaining - 1);
                acc ^= unit(q, letter);
                if (hit) {
                    return true;
                }
            }
        }
        return false;
    };
    for (size_t w = 1; w <= cap; w++) {
        if (rec(0, w)) {
            return w;
        }
    }
    return std::nullopt;
}

}  // namespace

std::optional<size_t> coset_min_weight(const BinaryMatrix &generators, const BitVector &offset, size_t weight_cap) {
    if (generators.rows() > 0 && generators.cols() != offset.size()) {
        throw std::invalid_argument("offset length does not match generator width");
    }
    RowSpan span(offset.size());
    for (const auto &r : generators.row_vectors()) {
        span.add(r);
    }
    if (span.rank() <= kExhaustiveCosetRank) {
        size_t best = gray_code_min(span.basis(), offset);
        if (best > weight_cap) {
            return std::nullopt;
        }
        return best;
    }
    std::vector<BitVector> units;
    units.reserve(offset.size());
    for (size_t q = 0; q < offset.size(); q++) {
        BitVector e(offset.size());
        e.set(q, true);
        units.push_back(span.reduce(std::move(e)));
    }
    return weight_bounded_search(
        offset.size(), 1, span.reduce(offset), weight_cap, [&](size_t q, size_t) -> const BitVector & {
            return units[q];
        });
}

std::optional<size_t> coset_min_weight(const BinaryMatrix &generators, const PauliOperator &offset, size_t weight_cap) {
    size_t n = offset.num_qubits();
    if (generators.rows() > 0 && generators.cols() != 2 * n) {
        throw std::invalid_argument("generator matrix must have 2n columns");
    }
    RowSpan span(2 * n);
    for (const auto &r : generators.row_vectors()) {
        span.add(r);
    }
    if (span.rank() <= kExhaustiveCosetRank) {
        std::vector<PauliOperator> basis;
        for (const auto &b : span.basis()) {
            basis.push_back(split(b));
        }
        size_t best = gray_code_min(basis, offset);
        if (best > weight_cap) {
            return std::nullopt;
        }
        return best;
    }
    // Letters per qubit: X, Z, Y.
    std::vector<BitVector> units;
    units.reserve(3 * n);
    for (size_t q = 0; q < n; q++) {
        BitVector ex(2 * n);
        ex.set(q, true);
        BitVector ez(2 * n);
        ez.set(n + q, true);
        BitVector rx = span.reduce(ex);
        BitVector rz = span.reduce(ez);
        units.push_back(rx);
        units.push_back(rz);
        units.push_back(rx ^ rz);
    }
    return weight_bounded_search(
        n, 3, span.reduce(symplectic_vector(offset)), weight_cap, [&](size_t q, size_t letter) -> const BitVector & {
            return units[3 * q + letter];
        });
}

BitVector symplectic_vector(const PauliOperator &p) {
    size_t n = p.num_qubits();
    BitVector v(2 * n);
    for (size_t q : p.x_part().ones()) {
        v.set(q, true);
    }
    for (size_t q : p.z_part().ones()) {
        v.set(n + q, true);
    }
    return v;
}

PauliOperator from_symplectic(const BitVector &v) {
    if (v.size() % 2) {
        throw std::invalid_argument("symplectic vector must have even length");
    }
    return split(v);
}

BinaryMatrix symplectic_matrix(std::span<const PauliOperator> paulis) {
    size_t n = paulis.empty() ? 0 : paulis[0].num_qubits();
    BinaryMatrix m(0, 2 * n);
    for (const auto &p : paulis) {
        if (p.num_qubits() != n) {
            throw std::invalid_argument("Pauli dimension mismatch");
        }
        m.append_row(symplectic_vector(p));
    }
    return m;
}

}  // namespace qmem

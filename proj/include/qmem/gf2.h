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

#ifndef QMEM_GF2_H
#define QMEM_GF2_H

#include <optional>
#include <vector>

#include "qmem/bit_vector.h"

namespace qmem {

/// Dense matrix over GF(2), stored as packed rows.
class BinaryMatrix {
   public:
    BinaryMatrix() = default;
    BinaryMatrix(size_t num_rows, size_t num_cols);
    static BinaryMatrix from_rows(size_t num_cols, std::vector<BitVector> rows);
    static BinaryMatrix identity(size_t n);

    size_t rows() const { return rows_.size(); }
    size_t cols() const { return cols_; }
    const BitVector &row(size_t r) const { return rows_[r]; }
    BitVector &row(size_t r) { return rows_[r]; }
    const std::vector<BitVector> &row_vectors() const { return rows_; }
    bool get(size_t r, size_t c) const { return rows_[r].get(c); }
    void set(size_t r, size_t c, bool v) { rows_[r].set(c, v); }
    void append_row(BitVector row);

    /// Matrix-vector product M v.
    BitVector apply(const BitVector &v) const;
    BinaryMatrix transposed() const;
    bool operator==(const BinaryMatrix &other) const = default;

   private:
    size_t cols_ = 0;
    std::vector<BitVector> rows_;
};

struct RowEchelonForm {
    /// Reduced row echelon form with zero rows dropped; rows() == rank.
    BinaryMatrix reduced;
    /// pivots[i] is the leading column of reduced.row(i), strictly increasing.
    std::vector<size_t> pivots;
};

RowEchelonForm row_reduce(const BinaryMatrix &m);
size_t rank_gf2(const BinaryMatrix &m);
/// Basis (as rows) of { v : m v = 0 }.
BinaryMatrix nullspace(const BinaryMatrix &m);
bool in_row_span(const BinaryMatrix &m, const BitVector &v);
/// Inverse of a square matrix, or nullopt when singular.
std::optional<BinaryMatrix> inverse(const BinaryMatrix &m);

/// Incrementally grown row space with a canonical linear remainder map.
class RowSpan {
   public:
    explicit RowSpan(size_t num_cols) : cols_(num_cols) {}
    explicit RowSpan(const BinaryMatrix &m);

    /// Adds v; returns false if it was already in the span.
    bool add(const BitVector &v);
    /// Canonical remainder of v modulo the span (zero at every pivot). Linear in v.
    BitVector reduce(BitVector v) const;
    bool contains(const BitVector &v) const { return reduce(v).none(); }
    size_t rank() const { return basis_.size(); }
    size_t cols() const { return cols_; }
    const std::vector<BitVector> &basis() const { return basis_; }

   private:
    size_t cols_;
    std::vector<BitVector> basis_;
    std::vector<size_t> pivots_;
};

}  // namespace qmem

#endif

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

#include "qmem/gf2.h"

#include <stdexcept>

namespace qmem {

BinaryMatrix::BinaryMatrix(size_t num_rows, size_t num_cols) : cols_(num_cols), rows_(num_rows, BitVector(num_cols)) {}

BinaryMatrix BinaryMatrix::from_rows(size_t num_cols, std::vector<BitVector> rows) {
    BinaryMatrix m;
    m.cols_ = num_cols;
    for (auto &r : rows) {
        m.append_row(std::move(r));
    }
    return m;
}

BinaryMatrix BinaryMatrix::identity(size_t n) {
    BinaryMatrix m(n, n);
    for (size_t i = 0; i < n; i++) {
        m.set(i, i, true);
    }
    return m;
}

void BinaryMatrix::append_row(BitVector row) {
    if (row.size() != cols_) {
        throw std::invalid_argument("row length does not match column count");
    }
    rows_.push_back(std::move(row));
}

BitVector BinaryMatrix::apply(const BitVector &v) const {
    if (v.size() != cols_) {
        throw std::invalid_argument("vector length does not match column count");
    }
    BitVector out(rows_.size());
    for (size_t r = 0; r < rows_.size(); r++) {
        out.set(r, rows_[r].dot(v));
    }
    return out;
}

BinaryMatrix BinaryMatrix::transposed() const {
    BinaryMatrix t(cols_, rows_.size());
    for (size_t r = 0; r < rows_.size(); r++) {
        for (size_t c : rows_[r].ones()) {
            t.set(c, r, true);
        }
    }
    return t;
}

RowEchelonForm row_reduce(const BinaryMatrix &m) {
    std::vector<BitVector> rows = m.row_vectors();
    std::vector<size_t> pivots;
    size_t next = 0;
    for (size_t c = 0; c < m.cols() && next < rows.size(); c++) {
        size_t found = next;
        while (found < rows.size() && !rows[found].get(c)) {
            found++;
        }
        if (found == rows.size()) {
            continue;
        }
        std::swap(rows[next], rows[found]);
        for (size_t r = 0; r < rows.size(); r++) {
            if (r != next && rows[r].get(c)) {
                rows[r] ^= rows[next];
            }
        }
        pivots.push_back(c);
        next++;
    }
    rows.resize(next);
    return {BinaryMatrix::from_rows(m.cols(), std::move(rows)), std::move(pivots)};
}

size_t rank_gf2(const BinaryMatrix &m) { return RowSpan(m).rank(); }

BinaryMatrix nullspace(const BinaryMatrix &m) {
    RowEchelonForm ref = row_reduce(m);
    std::vector<bool> is_pivot(m.cols(), false);
    for (size_t p : ref.pivots) {
        is_pivot[p] = true;
    }
    BinaryMatrix basis(0, m.cols());
    for (size_t f = 0; f < m.cols(); f++) {
        if (is_pivot[f]) {
            continue;
        }
        BitVector v(m.cols());
        v.set(f, true);
        for (size_t i = 0; i < ref.pivots.size(); i++) {
            if (ref.reduced.get(i, f)) {
                v.set(ref.pivots[i], true);
            }
        }
        basis.append_row(std::move(v));
    }
    return basis;
}

bool in_row_span(const BinaryMatrix &m, const BitVector &v) { return RowSpan(m).contains(v); }

std::optional<BinaryMatrix> inverse(const BinaryMatrix &m) {
    size_t n = m.rows();
    if (m.cols() != n) {
        throw std::invalid_argument("inverse requires a square matrix");
    }
    // Row-reduce [m | I].
    BinaryMatrix aug(n, 2 * n);
    for (size_t r = 0; r < n; r++) {
        for (size_t c : m.row(r).ones()) {
            aug.set(r, c, true);
        }
        aug.set(r, n + r, true);
    }
    RowEchelonForm ref = row_reduce(aug);
    if (ref.pivots.size() < n || ref.pivots[n - 1] != n - 1) {
        return std::nullopt;
    }
    BinaryMatrix inv(n, n);
    for (size_t r = 0; r < n; r++) {
        for (size_t c = 0; c < n; c++) {
            inv.set(r, c, ref.reduced.get(r, n + c));
        }
    }
    return inv;
}

RowSpan::RowSpan(const BinaryMatrix &m) : cols_(m.cols()) {
    for (const auto &r : m.row_vectors()) {
        add(r);
    }
}

bool RowSpan::add(const BitVector &v) {
    if (v.size() != cols_) {
        throw std::invalid_argument("vector length does not match span width");
    }
    BitVector r = reduce(v);
    size_t p = r.first_one();
    if (p == BitVector::npos) {
        return false;
    }
    basis_.push_back(std::move(r));
    pivots_.push_back(p);
    return true;
}

BitVector RowSpan::reduce(BitVector v) const {
    if (v.size() != cols_) {
        throw std::invalid_argument("vector length does not match span width");
    }
    for (size_t i = 0; i < basis_.size(); i++) {
        if (v.get(pivots_[i])) {
            v ^= basis_[i];
        }
    }
    return v;
}

}  // namespace qmem

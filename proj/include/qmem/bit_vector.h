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

#ifndef QMEM_BIT_VECTOR_H
#define QMEM_BIT_VECTOR_H

#include <bit>
#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

namespace qmem {

/// Fixed-length packed bit vector. Bit i lives in word i / 64 at position i % 64
/// (little-endian within a word). Padding bits past size() are always zero.
class BitVector {
   public:
    static constexpr size_t npos = static_cast<size_t>(-1);

    BitVector() = default;
    explicit BitVector(size_t num_bits) : num_bits_(num_bits), words_((num_bits + 63) / 64, 0) {}

    static BitVector from_indices(size_t num_bits, std::span<const size_t> indices);

    size_t size() const { return num_bits_; }
    size_t num_words() const { return words_.size(); }

    bool get(size_t i) const { return (words_[i >> 6] >> (i & 63)) & 1; }
    bool operator[](size_t i) const { return get(i); }
    void set(size_t i, bool value) {
        uint64_t mask = uint64_t{1} << (i & 63);
        if (value) {
            words_[i >> 6] |= mask;
        } else {
            words_[i >> 6] &= ~mask;
        }
    }
    void flip(size_t i) { words_[i >> 6] ^= uint64_t{1} << (i & 63); }
    void clear();

    BitVector &operator^=(const BitVector &other);
    BitVector &operator&=(const BitVector &other);
    BitVector &operator|=(const BitVector &other);
    BitVector operator^(const BitVector &other) const;
    BitVector operator&(const BitVector &other) const;
    BitVector operator|(const BitVector &other) const;
    bool operator==(const BitVector &other) const = default;

    size_t popcount() const;
    bool any() const;
    bool none() const { return !any(); }
    /// Parity of |self AND other|.
    bool dot(const BitVector &other) const;
    /// Lowest set bit index, or npos.
    size_t first_one() const;
    std::vector<size_t> ones() const;

    std::span<const uint64_t> words() const { return words_; }
    std::span<uint64_t> words() { return words_; }

   private:
    size_t num_bits_ = 0;
    std::vector<uint64_t> words_;
};

}  // namespace qmem

#endif

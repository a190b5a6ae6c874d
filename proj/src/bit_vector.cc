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

#include "qmem/bit_vector.h"

#include <stdexcept>

namespace qmem {

namespace {
void require_same_size(const BitVector &a, const BitVector &b) {
    if (a.size() != b.size()) {
        throw std::invalid_argument("bit vector length mismatch");
    }
}
}  // namespace

BitVector BitVector::from_indices(size_t num_bits, std::span<const size_t> indices) {
    BitVector result(num_bits);
    for (size_t i : indices) {
        if (i >= num_bits) {
            throw std::out_of_range("bit index out of range");
        }
        result.set(i, true);
    }
    return result;
}

void BitVector::clear() {
    for (auto &w : words_) {
        w = 0;
    }
}

BitVector &BitVector::operator^=(const BitVector &other) {
    require_same_size(*this, other);
    for (size_t k = 0; k < words_.size(); k++) {
        words_[k] ^= other.words_[k];
    }
    return *this;
}

BitVector &BitVector::operator&=(const BitVector &other) {
    require_same_size(*this, other);
    for (size_t k = 0; k < words_.size(); k++) {
        words_[k] &= other.words_[k];
    }
    return *this;
}

BitVector &BitVector::operator|=(const BitVector &other) {
    require_same_size(*this, other);
    for (size_t k = 0; k < words_.size(); k++) {
        words_[k] |= other.words_[k];
    }
    return *this;
}

BitVector BitVector::operator^(const BitVector &other) const {
    BitVector r = *this;
    r ^= other;
    return r;
}

BitVector BitVector::operator&(const BitVector &other) const {
    BitVector r = *this;
    r &= other;
    return r;
}

BitVector BitVector::operator|(const BitVector &other) const {
    BitVector r = *this;
    r |= other;
    return r;
}

size_t BitVector::popcount() const {
    size_t total = 0;
    for (uint64_t w : words_) {
        total += std::popcount(w);
    }
    return total;
}

bool BitVector::any() const {
    for (uint64_t w : words_) {
        if (w) {
            return true;
        }
    }
    return false;
}

bool BitVector::dot(const BitVector &other) const {
    require_same_size(*this, other);
    uint64_t acc = 0;
    for (size_t k = 0; k < words_.size(); k++) {
        acc ^= words_[k] & other.words_[k];
    }
    return std::popcount(acc) & 1;
}

size_t BitVector::first_one() const {
    for (size_t k = 0; k < words_.size(); k++) {
        if (words_[k]) {
            return k * 64 + std::countr_zero(words_[k]);
        }
    }
    return npos;
}

std::vector<size_t> BitVector::ones() const {
    std::vector<size_t> result;
    for (size_t k = 0; k < words_.size(); k++) {
        uint64_t w = words_[k];
        while (w) {
            result.push_back(k * 64 + std::countr_zero(w));
            w &= w - 1;
        }
    }
    return result;
}

}  // namespace qmem

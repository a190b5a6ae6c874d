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

#ifndef QMEM_RNG_H
#define QMEM_RNG_H

#include <cstdint>
#include <random>

namespace qmem {

uint64_t splitmix64(uint64_t x);

/// Pinned seed-splitting rule: seed for (master, a, b) is
/// splitmix64(splitmix64(master ^ splitmix64(a)) ^ b).
uint64_t derive_seed(uint64_t master, uint64_t a, uint64_t b = 0);

/// mt19937_64 with pinned integer and real mappings, so that trajectories are
/// identical across standard library implementations.
class Rng {
   public:
    explicit Rng(uint64_t seed) : seed_(seed), engine_(seed) {}

    uint64_t next() { return engine_(); }
    /// Uniform integer in [0, bound) via the high half of a 128-bit product.
    uint64_t below(uint64_t bound) {
        return static_cast<uint64_t>((static_cast<unsigned __int128>(engine_()) * bound) >> 64);
    }
    /// Uniform double in [0, 1) with 53 random bits.
    double uniform() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }
    uint64_t seed() const { return seed_; }

   private:
    uint64_t seed_;
    std::mt19937_64 engine_;
};

}  // namespace qmem

#endif

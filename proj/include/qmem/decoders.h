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

#ifndef QMEM_DECODERS_H
#define QMEM_DECODERS_H

#include <optional>
#include <stdexcept>
#include <string_view>

#include "qmem/code_model.h"
#include "qmem/rng.h"

namespace qmem {

enum class DecoderId : uint8_t { majority, ml, greedy, match2d };

/// Ids used in results files: "majority", "ml", "greedy", "match2d".
std::string_view decoder_name(DecoderId id);
DecoderId parse_decoder(std::string_view name);
/// majority for classical models, match2d for surface2d, greedy otherwise.
DecoderId default_decoder(const CodeModel &m);
bool decoder_supports(DecoderId id, const CodeModel &m);

struct Correction {
    PauliOperator correction;
    /// True iff syndrome(error * correction) is zero.
    bool cleared = false;
    size_t cost = 0;
    DecoderId decoder = DecoderId::ml;
};

class MajorityTie : public std::runtime_error {
   public:
    using std::runtime_error::runtime_error;
};

class SearchExhausted : public std::runtime_error {
   public:
    using std::runtime_error::runtime_error;
};

/// Read-out bit of a classical memory from its spin configuration (the X part
/// of the accumulated error relative to all-0): 0 if M > 0, 1 if M < 0.
/// Throws MajorityTie when M == 0.
int majority_vote(const CodeModel &m, const PauliOperator &spins);

inline constexpr size_t kMlMaxQubits = 20;

/// Minimum-weight Pauli with the given syndrome. Candidates are enumerated by
/// weight, then lexicographically by support, then by letter (X < Y < Z); the
/// first hit is returned. Classical models use X corrections only.
/// Requires n <= kMlMaxQubits unless a weight cap is given; throws
/// SearchExhausted when no correction of weight <= cap exists.
Correction ml_bruteforce(const CodeModel &m, const BitVector &syndrome, std::optional<size_t> weight_cap = std::nullopt);

struct GreedyOptions {
    size_t plateau_steps = 32;
    size_t steps_per_qubit = 64;
};

/// Steepest descent on the violated count (ties: lowest qubit, X before Z),
/// with bounded random neutral moves at local minima.
Correction greedy_cooling(const CodeModel &m, const BitVector &syndrome, Rng &rng, const GreedyOptions &options = {});

inline constexpr size_t kExactMatchingLimit = 10;

/// Pairs surface2d defects with each other or with their absorbing boundary
/// (plaquette defects: left/right columns, star defects: top/bottom rows) under
/// the taxicab metric. Exact minimum total length for at most
/// kExactMatchingLimit defects of a type, greedy closest-first otherwise.
Correction match_defects_2d(const CodeModel &m, const BitVector &syndrome);

/// Syndrome-based dispatch. ml exhaustion yields cleared = false.
/// majority is not syndrome-based and is rejected here.
Correction decode(DecoderId id, const CodeModel &m, const BitVector &syndrome, uint64_t seed);

}  // namespace qmem

#endif

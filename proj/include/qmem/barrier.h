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

#ifndef QMEM_BARRIER_H
#define QMEM_BARRIER_H

#include <optional>
#include <stdexcept>
#include <string>

#include "qmem/code_model.h"

namespace qmem {

enum class BarrierMethod : uint8_t { exact_bottleneck, ordered_flip, annealed_order };
enum class OrderStrategy : uint8_t { given_order, exhaustive_orders, annealed };

std::string_view method_name(BarrierMethod m);

/// Logical sector: kind X targets Xbar of `pair`, kind Z targets Zbar.
struct LogicalTarget {
    size_t pair = 0;
    PauliKind kind = PauliKind::X;

    std::string str() const;
    static LogicalTarget parse(std::string_view text);
    bool operator==(const LogicalTarget &other) const = default;
};

struct Flip {
    uint32_t qubit;
    PauliKind kind;
    bool operator==(const Flip &other) const = default;
};

struct BarrierResult {
    std::string model_id;
    LogicalTarget target;
    /// Peak violated-check count along the witness path.
    size_t barrier = 0;
    BarrierMethod method = BarrierMethod::exact_bottleneck;
    std::vector<Flip> witness;
    uint64_t seed = 0;
    size_t states_explored = 0;
};

/// Raised when a search would exceed its state budget. Never approximated silently.
class SearchRefused : public std::runtime_error {
   public:
    using std::runtime_error::runtime_error;
};

struct ReplayResult {
    size_t peak = 0;
    size_t final_violated = 0;
    /// Endpoint error, start * flips.
    PauliOperator final_error;
};

/// Replays flips from `start` (identity when omitted).
ReplayResult replay_witness(
    const CodeModel &m, std::span<const Flip> flips, const std::optional<PauliOperator> &start = std::nullopt);

/// Canonical representative of the target logical.
const PauliOperator &target_operator(const CodeModel &m, LogicalTarget target);

inline constexpr size_t kDefaultStateCap = size_t{1} << 24;

/// Minimax path value over single-qubit flips of the target's Pauli type, from
/// `start` (identity by default) to any error in the class start * target *
/// stabilizers. Bottleneck Dijkstra keyed on (peak, flips, state index).
/// Throws SearchRefused when 2^n exceeds state_cap.
BarrierResult exact_barrier(
    const CodeModel &m,
    LogicalTarget target,
    size_t state_cap = kDefaultStateCap,
    const std::optional<PauliOperator> &start = std::nullopt);

struct AnnealOptions {
    uint64_t seed = 1;
    size_t restarts = 16;
    double t_start = 2.0;
    double t_end = 0.05;
    /// Moves per restart; 0 selects 4000 + 200 * |support|.
    size_t steps = 0;
};

inline constexpr size_t kExhaustiveOrderLimit = 10;

/// Flips every qubit of `support` once, with Pauli `kind`, and reports the
/// smallest peak violated count over the searched orders. `support` must carry
/// a nontrivial logical with zero syndrome.
BarrierResult ordered_flip_barrier(
    const CodeModel &m,
    std::span<const size_t> support,
    PauliKind kind,
    OrderStrategy strategy,
    const AnnealOptions &anneal = {});

/// Peak violated count when flipping `order` in sequence from the identity.
size_t order_peak(const CodeModel &m, std::span<const size_t> order, PauliKind kind);

enum class ScanMethod : uint8_t { exact, given_order, exhaustive_orders, annealed };
std::string_view scan_method_name(ScanMethod m);
ScanMethod parse_scan_method(std::string_view name);

struct BarrierScanRow {
    size_t size = 0;
    std::optional<BarrierResult> result;
    std::string refusal;
};

struct BarrierScan {
    Family family = Family::ising1d;
    LogicalTarget target;
    ScanMethod method = ScanMethod::exact;
    std::vector<BarrierScanRow> rows;
    bool nondecreasing = true;
    bool strictly_increasing = true;
    bool constant = true;
};

BarrierScan barrier_scan(
    Family family,
    std::span<const size_t> sizes,
    LogicalTarget target,
    ScanMethod method,
    const BuildOptions &build = {},
    const AnnealOptions &anneal = {},
    size_t state_cap = kDefaultStateCap);

/// CSV with header family,L,target,method,barrier,seed,witness_length.
/// Refused rows carry an empty barrier.
std::string barrier_table_csv(std::span<const BarrierScan> scans);
/// {"model", "target", "method", "barrier", "seed", "flips": [{"qubit", "pauli"}]}
std::string witness_json(const BarrierResult &r);

}  // namespace qmem

#endif

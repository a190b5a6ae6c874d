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

#ifndef QMEM_THERMAL_H
#define QMEM_THERMAL_H

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "qmem/decoders.h"
#include "qmem/energy.h"
#include "qmem/rng.h"

namespace qmem {

/// Error-corrected read-outs. X_ec flips when the corrected error carries a
/// Zbar, Z_ec when it carries an Xbar, bit_ec is the classical bit.
enum class Observable : uint8_t { x_ec, z_ec, bit_ec };

std::string_view observable_name(Observable o);
Observable parse_observable(std::string_view name);
/// bit_ec for classical models, X_ec and Z_ec for quantum models.
bool observable_supported(Observable o, const CodeModel &m);
std::vector<Observable> default_tracked(const CodeModel &m);

struct ThermalState {
    std::string model_id;
    PauliOperator error;
    BitVector syndrome;
    size_t violated = 0;
    double beta = 0;
    uint64_t sweep_count = 0;
};

/// Trivial error at inverse temperature beta.
ThermalState initial_state(const CodeModel &m, double beta);

/// Single-flip Metropolis dynamics. Each proposal picks (qubit, X or Z)
/// uniformly (X only for classical models) and accepts with
/// min(1, exp(-beta * 2 * delta * dviolated)).
class Dynamics {
   public:
    /// beta may be +infinity.
    Dynamics(const CodeModel &m, double beta);

    const CodeModel &model() const { return *model_; }
    double beta() const { return beta_; }
    const SyndromeMap &syndrome_map() const { return map_; }
    /// Acceptance probability of a proposal changing the violated count by dv.
    double acceptance(int dv) const;

    /// One proposal; returns true when accepted.
    bool step(ThermalState &s, Rng &rng) const;
    /// n proposals.
    void sweep(ThermalState &s, Rng &rng) const;

   private:
    const CodeModel *model_;
    double beta_;
    SyndromeMap map_;
    std::vector<double> accept_;
};

void metropolis_sweep(const CodeModel &m, ThermalState &s, Rng &rng);

/// Exact Gibbs expectation of the violated count, by enumeration over the X
/// and Z parts of the error separately. Refused (std::invalid_argument) for
/// n > kEnumerationMaxQubits or non-CSS checks.
inline constexpr size_t kEnumerationMaxQubits = 12;
double exact_mean_violated(const CodeModel &m, double beta);

struct EquilibriumCheck {
    double estimate = 0;
    double stderr_estimate = 0;
    double exact = 0;
    size_t sweeps = 0;
    size_t burn_in = 0;

    /// |estimate - exact| in units of the standard error.
    double z_score() const;
};

/// Time average of the violated count over `sweeps` sweeps after `burn_in`,
/// with a 100-batch-means standard error, next to the exact value.
EquilibriumCheck equilibrium_energy_check(const CodeModel &m, double beta, size_t sweeps, size_t burn_in, Rng &rng);

struct Observables {
    /// (1/n) sum_i <Z_i> on the spin configuration; 1 - 2 |x| / n.
    double magnetization = 1;
    /// Per Observable; nullopt when the decoder abstained or the observable
    /// does not apply to the model.
    std::optional<int> x_ec;
    std::optional<int> z_ec;
    std::optional<int> bit_ec;
    bool abstained = false;

    std::optional<int> get(Observable o) const;
};

Observables measure_observables(const CodeModel &m, const PauliOperator &error, DecoderId decoder, uint64_t decoder_seed);

struct LifetimeOptions {
    uint64_t t_max = 100000;
    uint64_t check_interval = 1;
    std::vector<Observable> tracked;
    /// CSV lines sweep,violated,M,<tracked...> per snapshot when set.
    std::ostream *trajectory = nullptr;
};

struct LifetimeRecord {
    std::string model_id;
    size_t linear_size = 0;
    double beta = 0;
    uint64_t seed = 0;
    DecoderId decoder = DecoderId::greedy;
    uint64_t check_interval = 1;
    uint64_t t_max = 0;
    std::vector<Observable> tracked;
    /// First snapshot sweep at which each tracked observable read -1.
    std::vector<std::optional<uint64_t>> failure_sweep;
    size_t skipped_snapshots = 0;
    uint64_t sweeps_run = 0;

    bool censored(size_t i) const { return !failure_sweep[i].has_value(); }
    /// First failure over all tracked observables (memory lifetime).
    std::optional<uint64_t> memory_failure() const;
};

/// Runs Metropolis dynamics from the trivial error and decodes a copy of the
/// state every check_interval sweeps. Throws std::invalid_argument for
/// unsupported decoder/observable combinations or t_max < check_interval.
LifetimeRecord lifetime_trial(
    const CodeModel &m, double beta, DecoderId decoder, const LifetimeOptions &options, uint64_t seed);

}  // namespace qmem

#endif

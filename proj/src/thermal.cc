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

#include "qmem/thermal.h"

#include <bit>
#include <cmath>
#include <limits>
#include <ostream>
#include <stdexcept>

#include "qmem/code_analysis.h"

namespace qmem {

std::string_view observable_name(Observable o) {
    switch (o) {
        case Observable::x_ec:
            return "X_ec";
        case Observable::z_ec:
            return "Z_ec";
        case Observable::bit_ec:
            return "bit_ec";
    }
    return "unknown";
}

Observable parse_observable(std::string_view name) {
    for (auto o : {Observable::x_ec, Observable::z_ec, Observable::bit_ec}) {
        if (observable_name(o) == name) {
            return o;
        }
    }
    throw std::invalid_argument("unknown observable '" + std::string(name) + "'");
}

bool observable_supported(Observable o, const CodeModel &m) { return m.classical == (o == Observable::bit_ec); }

std::vector<Observable> default_tracked(const CodeModel &m) {
    if (m.classical) {
        return {Observable::bit_ec};
    }
    return {Observable::x_ec, Observable::z_ec};
}

ThermalState initial_state(const CodeModel &m, double beta) {
    return ThermalState{m.id(), PauliOperator(m.n), BitVector(m.checks.size()), 0, beta, 0};
}

Dynamics::Dynamics(const CodeModel &m, double beta) : model_(&m), beta_(beta), map_(m) {
    if (std::isnan(beta) || beta < 0) {
        throw std::invalid_argument("beta must be >= 0");
    }
    accept_.resize(map_.max_degree() + 1, 1.0);
    for (size_t dv = 1; dv < accept_.size(); dv++) {
        accept_[dv] = std::isinf(beta) ? 0.0 : std::exp(-beta * 2.0 * m.delta * static_cast<double>(dv));
    }
}

double Dynamics::acceptance(int dv) const {
    if (dv <= 0) {
        return 1.0;
    }
    if (static_cast<size_t>(dv) >= accept_.size()) {
        return std::isinf(beta_) ? 0.0 : std::exp(-beta_ * 2.0 * model_->delta * dv);
    }
    return accept_[dv];
}

bool Dynamics::step(ThermalState &s, Rng &rng) const {
    const size_t n = model_->n;
    size_t q;
    PauliKind kind;
    if (model_->classical) {
        q = rng.below(n);
        kind = PauliKind::X;
    } else {
        uint64_t r = rng.below(2 * n);
        q = r >> 1;
        kind = (r & 1) ? PauliKind::Z : PauliKind::X;
    }
    int dv = map_.delta_violated(s.syndrome, q, kind);
    if (dv > 0 && !(rng.uniform() < accept_[dv])) {
        return false;
    }
    map_.apply(s.syndrome, q, kind);
    s.error.apply(q, kind);
    s.violated = static_cast<size_t>(static_cast<int64_t>(s.violated) + dv);
    return true;
}

void Dynamics::sweep(ThermalState &s, Rng &rng) const {
    for (size_t i = 0; i < model_->n; i++) {
        step(s, rng);
    }
    s.sweep_count++;
}

void metropolis_sweep(const CodeModel &m, ThermalState &s, Rng &rng) { Dynamics(m, s.beta).sweep(s, rng); }

namespace {

/// Histogram of violated counts over all 2^n errors of one Pauli kind.
std::vector<uint64_t> violated_histogram(const CodeModel &m, const SyndromeMap &map, PauliKind kind) {
    std::vector<uint64_t> hist(m.checks.size() + 1, 0);
    BitVector syn(m.checks.size());
    size_t violated = 0;
    hist[0]++;
    uint64_t total = uint64_t{1} << m.n;
    for (uint64_t i = 1; i < total; i++) {
        size_t q = std::countr_zero(i);
        violated = static_cast<size_t>(static_cast<int64_t>(violated) + map.apply(syn, q, kind));
        hist[violated]++;
    }
    return hist;
}

double histogram_mean(const std::vector<uint64_t> &hist, double beta, double delta) {
    if (std::isinf(beta)) {
        return 0;
    }
    double num = 0;
    double den = 0;
    for (size_t v = 0; v < hist.size(); v++) {
        double w = static_cast<double>(hist[v]) * std::exp(-beta * 2.0 * delta * static_cast<double>(v));
        num += w * static_cast<double>(v);
        den += w;
    }
    return num / den;
}

}  // namespace

double exact_mean_violated(const CodeModel &m, double beta) {
    if (m.n > kEnumerationMaxQubits) {
        throw std::invalid_argument(
            "exact enumeration refused for n = " + std::to_string(m.n) + " > " + std::to_string(kEnumerationMaxQubits));
    }
    for (const auto &c : m.checks) {
        if (c.op.x_part().any() && c.op.z_part().any()) {
            throw std::invalid_argument("exact enumeration needs CSS checks");
        }
    }
    SyndromeMap map(m);
    double mean = histogram_mean(violated_histogram(m, map, PauliKind::X), beta, m.delta);
    if (!m.classical) {
        mean += histogram_mean(violated_histogram(m, map, PauliKind::Z), beta, m.delta);
    }
    return mean;
}

double EquilibriumCheck::z_score() const {
    double diff = std::abs(estimate - exact);
    if (stderr_estimate == 0) {
        return diff == 0 ? 0 : std::numeric_limits<double>::infinity();
    }
    return diff / stderr_estimate;
}

EquilibriumCheck equilibrium_energy_check(const CodeModel &m, double beta, size_t sweeps, size_t burn_in, Rng &rng) {
    constexpr size_t kBatches = 100;
    if (sweeps < kBatches) {
        throw std::invalid_argument("equilibrium check needs at least 100 sweeps");
    }
    EquilibriumCheck out;
    out.exact = exact_mean_violated(m, beta);
    out.sweeps = sweeps;
    out.burn_in = burn_in;
    Dynamics dyn(m, beta);
    ThermalState s = initial_state(m, beta);
    for (size_t i = 0; i < burn_in; i++) {
        dyn.sweep(s, rng);
    }
    size_t per_batch = sweeps / kBatches;
    std::vector<double> means(kBatches, 0);
    for (size_t b = 0; b < kBatches; b++) {
        double sum = 0;
        for (size_t i = 0; i < per_batch; i++) {
            dyn.sweep(s, rng);
            sum += static_cast<double>(s.violated);
        }
        means[b] = sum / static_cast<double>(per_batch);
    }
    double mean = 0;
    for (double x : means) {
        mean += x;
    }
    mean /= kBatches;
    double var = 0;
    for (double x : means) {
        var += (x - mean) * (x - mean);
    }
    var /= kBatches - 1;
    out.estimate = mean;
    out.stderr_estimate = std::sqrt(var / kBatches);
    return out;
}

std::optional<int> Observables::get(Observable o) const {
    switch (o) {
        case Observable::x_ec:
            return x_ec;
        case Observable::z_ec:
            return z_ec;
        case Observable::bit_ec:
            return bit_ec;
    }
    return std::nullopt;
}

namespace {

Observables measure(
    const CodeModel &m, const PauliOperator &error, const BitVector &syndrome, DecoderId decoder, uint64_t decoder_seed) {
    Observables out;
    if (m.n > 0) {
        out.magnetization = 1.0 - 2.0 * static_cast<double>(error.x_part().popcount()) / static_cast<double>(m.n);
    }
    if (decoder == DecoderId::majority) {
        try {
            out.bit_ec = majority_vote(m, error) == 0 ? 1 : -1;
        } catch (const MajorityTie &) {
            out.abstained = true;
        }
        return out;
    }
    Correction c = decode(decoder, m, syndrome, decoder_seed);
    if (!c.cleared) {
        out.abstained = true;
        return out;
    }
    BitVector cls = logical_class(m, error * c.correction);
    bool carries_x = false;
    bool carries_z = false;
    for (size_t i = 0; i < m.k(); i++) {
        carries_x |= cls.get(2 * i);
        carries_z |= cls.get(2 * i + 1);
    }
    if (m.classical) {
        out.bit_ec = cls.get(0) ? -1 : 1;
    } else {
        out.x_ec = carries_z ? -1 : 1;
        out.z_ec = carries_x ? -1 : 1;
    }
    return out;
}

}  // namespace

Observables measure_observables(const CodeModel &m, const PauliOperator &error, DecoderId decoder, uint64_t decoder_seed) {
    if (!decoder_supports(decoder, m)) {
        throw std::invalid_argument(std::string("decoder ") + std::string(decoder_name(decoder)) + " does not support " + m.id());
    }
    return measure(m, error, syndrome_energy(m, error).syndrome, decoder, decoder_seed);
}

std::optional<uint64_t> LifetimeRecord::memory_failure() const {
    std::optional<uint64_t> first;
    for (const auto &f : failure_sweep) {
        if (f && (!first || *f < *first)) {
            first = f;
        }
    }
    return first;
}

LifetimeRecord lifetime_trial(
    const CodeModel &m, double beta, DecoderId decoder, const LifetimeOptions &options, uint64_t seed) {
    if (!decoder_supports(decoder, m)) {
        throw std::invalid_argument(std::string("decoder ") + std::string(decoder_name(decoder)) + " does not support " + m.id());
    }
    if (options.check_interval == 0 || options.t_max < options.check_interval) {
        throw std::invalid_argument("need 1 <= check_interval <= t_max");
    }
    std::vector<Observable> tracked = options.tracked.empty() ? default_tracked(m) : options.tracked;
    for (auto o : tracked) {
        if (!observable_supported(o, m)) {
            throw std::invalid_argument(std::string(observable_name(o)) + " is not defined for " + m.id());
        }
    }
    LifetimeRecord rec;
    rec.model_id = m.id();
    rec.linear_size = m.linear_size;
    rec.beta = beta;
    rec.seed = seed;
    rec.decoder = decoder;
    rec.check_interval = options.check_interval;
    rec.t_max = options.t_max;
    rec.tracked = tracked;
    rec.failure_sweep.assign(tracked.size(), std::nullopt);

    Dynamics dyn(m, beta);
    Rng rng(seed);
    ThermalState s = initial_state(m, beta);
    if (options.trajectory) {
        *options.trajectory << "sweep,violated,M";
        for (auto o : tracked) {
            *options.trajectory << ',' << observable_name(o);
        }
        *options.trajectory << '\n';
    }
    size_t remaining = tracked.size();
    uint64_t snapshot = 0;
    while (s.sweep_count < options.t_max && remaining > 0) {
        for (uint64_t i = 0; i < options.check_interval && s.sweep_count < options.t_max; i++) {
            dyn.sweep(s, rng);
        }
        Observables obs = measure(m, s.error, s.syndrome, decoder, derive_seed(seed, 0xDEC0DE, snapshot));
        snapshot++;
        if (options.trajectory) {
            *options.trajectory << s.sweep_count << ',' << s.violated << ',' << obs.magnetization;
            for (auto o : tracked) {
                auto v = obs.get(o);
                *options.trajectory << ',';
                if (v) {
                    *options.trajectory << *v;
                }
            }
            *options.trajectory << '\n';
        }
        if (obs.abstained) {
            rec.skipped_snapshots++;
            continue;
        }
        for (size_t i = 0; i < tracked.size(); i++) {
            auto v = obs.get(tracked[i]);
            if (!rec.failure_sweep[i] && v && *v == -1) {
                rec.failure_sweep[i] = s.sweep_count;
                remaining--;
            }
        }
    }
    rec.sweeps_run = s.sweep_count;
    return rec;
}

}  // namespace qmem

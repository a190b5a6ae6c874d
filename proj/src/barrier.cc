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

#include "qmem/barrier.h"

#include <algorithm>
#include <cmath>
#include <limits>
#include <queue>
#include <sstream>

#include "json.hpp"
#include "qmem/code_analysis.h"
#include "qmem/energy.h"
#include "qmem/rng.h"

namespace qmem {

std::string_view method_name(BarrierMethod m) {
    switch (m) {
        case BarrierMethod::exact_bottleneck:
            return "exact_bottleneck";
        case BarrierMethod::ordered_flip:
            return "ordered_flip";
        case BarrierMethod::annealed_order:
            return "annealed_order";
    }
    return "unknown";
}

std::string LogicalTarget::str() const { return (kind == PauliKind::Z ? "Z" : "X") + std::to_string(pair); }

LogicalTarget LogicalTarget::parse(std::string_view text) {
    if (text.size() < 1 || (text[0] != 'X' && text[0] != 'Z')) {
        throw std::invalid_argument("logical target must look like X0 or Z1, got '" + std::string(text) + "'");
    }
    LogicalTarget t;
    t.kind = text[0] == 'X' ? PauliKind::X : PauliKind::Z;
    if (text.size() > 1) {
        size_t pos = 0;
        std::string digits(text.substr(1));
        t.pair = std::stoul(digits, &pos);
        if (pos != digits.size()) {
            throw std::invalid_argument("bad logical pair index in '" + std::string(text) + "'");
        }
    }
    return t;
}

const PauliOperator &target_operator(const CodeModel &m, LogicalTarget target) {
    if (target.pair >= m.k()) {
        throw std::invalid_argument("logical pair " + std::to_string(target.pair) + " out of range");
    }
    if (target.kind == PauliKind::X) {
        return m.logicals[target.pair].x;
    }
    if (target.kind == PauliKind::Z) {
        return m.logicals[target.pair].z;
    }
    throw std::invalid_argument("logical target kind must be X or Z");
}

ReplayResult replay_witness(const CodeModel &m, std::span<const Flip> flips, const std::optional<PauliOperator> &start) {
    SyndromeMap map(m);
    ReplayResult r;
    r.final_error = start ? *start : PauliOperator(m.n);
    auto se = syndrome_energy(m, r.final_error);
    BitVector syndrome = std::move(se.syndrome);
    long violated = static_cast<long>(se.violated);
    r.peak = se.violated;
    for (const auto &f : flips) {
        if (f.qubit >= m.n) {
            throw std::out_of_range("witness qubit out of range");
        }
        violated += map.apply(syndrome, f.qubit, f.kind);
        r.final_error.apply(f.qubit, f.kind);
        r.peak = std::max(r.peak, static_cast<size_t>(violated));
    }
    r.final_violated = static_cast<size_t>(violated);
    return r;
}

namespace {

uint64_t to_mask(const BitVector &v) {
    uint64_t mask = 0;
    for (size_t q : v.ones()) {
        mask |= uint64_t{1} << q;
    }
    return mask;
}

}  // namespace

BarrierResult exact_barrier(
    const CodeModel &m, LogicalTarget target, size_t state_cap, const std::optional<PauliOperator> &start) {
    target_operator(m, target);
    if (m.n > 32 || (uint64_t{1} << m.n) > state_cap) {
        throw SearchRefused(
            "exact barrier search over 2^" + std::to_string(m.n) + " configurations exceeds state cap " +
            std::to_string(state_cap));
    }
    PauliKind kind = target.kind;
    bool x_flips = kind == PauliKind::X;
    uint64_t start_mask = 0;
    if (start) {
        if (start->num_qubits() != m.n) {
            throw std::invalid_argument("start error has wrong qubit count");
        }
        if (x_flips ? !start->is_x_type() : !start->is_z_type()) {
            throw std::invalid_argument("start error must use the same Pauli type as the target");
        }
        start_mask = to_mask(x_flips ? start->x_part() : start->z_part());
    }

    // Logical pattern of a configuration: anticommutation with each conjugate logical.
    std::vector<uint64_t> conjugates;
    for (const auto &p : m.logicals) {
        conjugates.push_back(to_mask(x_flips ? p.z.z_part() : p.x.x_part()));
    }
    auto pattern = [&](uint64_t s) {
        uint64_t bits = 0;
        for (size_t j = 0; j < conjugates.size(); j++) {
            bits |= static_cast<uint64_t>(std::popcount(s & conjugates[j]) & 1) << j;
        }
        return bits;
    };
    uint64_t goal_pattern = pattern(start_mask) ^ (uint64_t{1} << target.pair);

    SyndromeMap map(m);
    size_t num_states = size_t{1} << m.n;
    constexpr uint16_t kUnset = std::numeric_limits<uint16_t>::max();
    std::vector<uint16_t> best(num_states, kUnset);
    std::vector<uint16_t> depth(num_states, kUnset);
    std::vector<uint8_t> pred(num_states, 0xFF);
    std::vector<bool> settled(num_states, false);

    auto syndrome_of = [&](uint64_t s) {
        BitVector syn(m.checks.size());
        long violated = 0;
        for (uint64_t w = s; w; w &= w - 1) {
            violated += map.apply(syn, std::countr_zero(w), kind);
        }
        return std::pair{std::move(syn), static_cast<size_t>(violated)};
    };
    // Key layout: peak (16 bits) | depth (16 bits) | state (32 bits).
    auto key = [](uint64_t peak, uint64_t d, uint64_t s) { return (peak << 48) | (d << 32) | s; };
    std::priority_queue<uint64_t, std::vector<uint64_t>, std::greater<>> queue;

    auto [start_syn, start_violated] = syndrome_of(start_mask);
    best[start_mask] = static_cast<uint16_t>(start_violated);
    depth[start_mask] = 0;
    queue.push(key(start_violated, 0, start_mask));

    BarrierResult result;
    result.model_id = m.id();
    result.target = target;
    result.method = BarrierMethod::exact_bottleneck;
    std::optional<uint64_t> reached;
    while (!queue.empty()) {
        uint64_t top = queue.top();
        queue.pop();
        uint64_t s = top & 0xFFFFFFFFull;
        if (settled[s]) {
            continue;
        }
        settled[s] = true;
        result.states_explored++;
        auto [syn, violated] = syndrome_of(s);
        if (violated == 0 && pattern(s) == goal_pattern) {
            reached = s;
            break;
        }
        uint16_t b = best[s];
        uint16_t d = depth[s];
        for (size_t q = 0; q < m.n; q++) {
            uint64_t t = s ^ (uint64_t{1} << q);
            if (settled[t]) {
                continue;
            }
            long vt = static_cast<long>(violated) + map.delta_violated(syn, q, kind);
            auto bt = static_cast<uint16_t>(std::max<long>(b, vt));
            auto dt = static_cast<uint16_t>(d + 1);
            if (bt < best[t] || (bt == best[t] && dt < depth[t])) {
                best[t] = bt;
                depth[t] = dt;
                pred[t] = static_cast<uint8_t>(q);
                queue.push(key(bt, dt, t));
            }
        }
    }
    if (!reached) {
        throw std::logic_error("target logical sector unreachable");
    }
    result.barrier = best[*reached];
    for (uint64_t s = *reached; s != start_mask; s ^= uint64_t{1} << pred[s]) {
        result.witness.push_back({pred[s], kind});
    }
    std::reverse(result.witness.begin(), result.witness.end());
    return result;
}

size_t order_peak(const CodeModel &m, std::span<const size_t> order, PauliKind kind) {
    SyndromeMap map(m);
    BitVector syn(m.checks.size());
    long violated = 0;
    size_t peak = 0;
    for (size_t q : order) {
        violated += map.apply(syn, q, kind);
        peak = std::max(peak, static_cast<size_t>(violated));
    }
    return peak;
}

namespace {

struct OrderCost {
    size_t peak = 0;
    size_t area = 0;
};

OrderCost evaluate_order(const SyndromeMap &map, std::span<const size_t> order, PauliKind kind, BitVector &scratch) {
    scratch.clear();
    long violated = 0;
    OrderCost c;
    for (size_t q : order) {
        violated += map.apply(scratch, q, kind);
        c.peak = std::max(c.peak, static_cast<size_t>(violated));
        c.area += static_cast<size_t>(violated);
    }
    return c;
}

std::vector<size_t> exhaustive_best_order(const SyndromeMap &map, std::span<const size_t> support, PauliKind kind) {
    size_t s = support.size();
    size_t count = size_t{1} << s;
    std::vector<BitVector> syndromes(count, BitVector(map.num_checks()));
    std::vector<size_t> cost(count, 0), best(count, 0), last(count, 0);
    for (size_t set = 1; set < count; set++) {
        size_t low = std::countr_zero(set);
        syndromes[set] = syndromes[set & (set - 1)];
        map.apply(syndromes[set], support[low], kind);
        cost[set] = syndromes[set].popcount();
        size_t choice = s;
        size_t value = std::numeric_limits<size_t>::max();
        for (size_t i = 0; i < s; i++) {
            if ((set >> i) & 1) {
                size_t v = std::max(best[set ^ (size_t{1} << i)], cost[set]);
                if (v < value) {
                    value = v;
                    choice = i;
                }
            }
        }
        best[set] = value;
        last[set] = choice;
    }
    std::vector<size_t> order;
    for (size_t set = count - 1; set; set ^= size_t{1} << last[set]) {
        order.push_back(support[last[set]]);
    }
    std::reverse(order.begin(), order.end());
    return order;
}

std::vector<size_t> annealed_best_order(
    const SyndromeMap &map, std::span<const size_t> support, PauliKind kind, const AnnealOptions &opt, size_t &evaluations) {
    size_t s = support.size();
    BitVector scratch(map.num_checks());
    std::vector<size_t> best_order(support.begin(), support.end());
    OrderCost best_cost = evaluate_order(map, best_order, kind, scratch);
    evaluations++;
    if (s < 2) {
        return best_order;
    }
    size_t steps = opt.steps ? opt.steps : 4000 + 200 * s;
    double area_scale = 1.0 / (static_cast<double>(s) * static_cast<double>(map.num_checks() + 1));
    auto objective = [&](const OrderCost &c) { return static_cast<double>(c.peak) + static_cast<double>(c.area) * area_scale; };
    auto better = [](const OrderCost &a, const OrderCost &b) {
        return a.peak < b.peak || (a.peak == b.peak && a.area < b.area);
    };
    for (size_t r = 0; r < opt.restarts; r++) {
        Rng rng(derive_seed(opt.seed, r));
        std::vector<size_t> order(support.begin(), support.end());
        for (size_t i = s - 1; i > 0; i--) {
            std::swap(order[i], order[rng.below(i + 1)]);
        }
        OrderCost cur = evaluate_order(map, order, kind, scratch);
        evaluations++;
        if (better(cur, best_cost)) {
            best_cost = cur;
            best_order = order;
        }
        double ratio = steps > 1 ? std::pow(opt.t_end / opt.t_start, 1.0 / static_cast<double>(steps - 1)) : 1.0;
        double temperature = opt.t_start;
        for (size_t step = 0; step < steps; step++, temperature *= ratio) {
            size_t i = rng.below(s);
            size_t j = rng.below(s - 1);
            if (j >= i) {
                j++;
            }
            std::swap(order[i], order[j]);
            OrderCost next = evaluate_order(map, order, kind, scratch);
            evaluations++;
            double dE = objective(next) - objective(cur);
            if (dE <= 0 || rng.uniform() < std::exp(-dE / temperature)) {
                cur = next;
                if (better(cur, best_cost)) {
                    best_cost = cur;
                    best_order = order;
                }
            } else {
                std::swap(order[i], order[j]);
            }
        }
    }
    return best_order;
}

}  // namespace

BarrierResult ordered_flip_barrier(
    const CodeModel &m, std::span<const size_t> support, PauliKind kind, OrderStrategy strategy, const AnnealOptions &anneal) {
    if (kind != PauliKind::X && kind != PauliKind::Z) {
        throw std::invalid_argument("ordered flips use X or Z");
    }
    std::vector<size_t> sorted(support.begin(), support.end());
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
        throw std::invalid_argument("support has repeated qubits");
    }
    PauliOperator op = PauliOperator::on(m.n, support, kind);
    if (syndrome_energy(m, op).violated != 0) {
        throw std::invalid_argument("support does not carry a logical operator: nonzero syndrome");
    }
    BitVector cls = logical_class(m, op);
    if (cls.none()) {
        throw std::invalid_argument("support does not carry a logical operator: trivial logical class");
    }
    BarrierResult result;
    result.model_id = m.id();
    // Report the first logical the support flips.
    size_t bit = cls.first_one();
    result.target = LogicalTarget{bit / 2, bit % 2 == 0 ? PauliKind::X : PauliKind::Z};

    SyndromeMap map(m);
    std::vector<size_t> order;
    switch (strategy) {
        case OrderStrategy::given_order:
            result.method = BarrierMethod::ordered_flip;
            order.assign(support.begin(), support.end());
            result.states_explored = 1;
            break;
        case OrderStrategy::exhaustive_orders:
            if (support.size() > kExhaustiveOrderLimit) {
                throw std::invalid_argument(
                    "exhaustive ordering search limited to " + std::to_string(kExhaustiveOrderLimit) + " qubits");
            }
            result.method = BarrierMethod::ordered_flip;
            order = exhaustive_best_order(map, support, kind);
            result.states_explored = size_t{1} << support.size();
            break;
        case OrderStrategy::annealed:
            result.method = BarrierMethod::annealed_order;
            result.seed = anneal.seed;
            order = annealed_best_order(map, support, kind, anneal, result.states_explored);
            break;
    }
    BitVector scratch(map.num_checks());
    result.barrier = evaluate_order(map, order, kind, scratch).peak;
    for (size_t q : order) {
        result.witness.push_back({static_cast<uint32_t>(q), kind});
    }
    return result;
}

std::string_view scan_method_name(ScanMethod m) {
    switch (m) {
        case ScanMethod::exact:
            return "exact";
        case ScanMethod::given_order:
            return "given_order";
        case ScanMethod::exhaustive_orders:
            return "exhaustive_orders";
        case ScanMethod::annealed:
            return "annealed";
    }
    return "unknown";
}

ScanMethod parse_scan_method(std::string_view name) {
    for (auto m : {ScanMethod::exact, ScanMethod::given_order, ScanMethod::exhaustive_orders, ScanMethod::annealed}) {
        if (scan_method_name(m) == name) {
            return m;
        }
    }
    throw std::invalid_argument("unknown barrier method '" + std::string(name) + "'");
}

BarrierScan barrier_scan(
    Family family,
    std::span<const size_t> sizes,
    LogicalTarget target,
    ScanMethod method,
    const BuildOptions &build,
    const AnnealOptions &anneal,
    size_t state_cap) {
    BarrierScan scan;
    scan.family = family;
    scan.target = target;
    scan.method = method;
    for (size_t L : sizes) {
        BarrierScanRow row;
        row.size = L;
        try {
            CodeModel m = build_model(family, L, build);
            if (method == ScanMethod::exact) {
                row.result = exact_barrier(m, target, state_cap);
            } else {
                auto support = target_operator(m, target).support();
                auto strategy = method == ScanMethod::given_order         ? OrderStrategy::given_order
                                : method == ScanMethod::exhaustive_orders ? OrderStrategy::exhaustive_orders
                                                                          : OrderStrategy::annealed;
                row.result = ordered_flip_barrier(m, support, target.kind, strategy, anneal);
                row.result->target = target;
            }
        } catch (const SearchRefused &e) {
            row.refusal = e.what();
        } catch (const std::invalid_argument &e) {
            row.refusal = e.what();
        }
        scan.rows.push_back(std::move(row));
    }
    std::optional<size_t> prev;
    for (const auto &row : scan.rows) {
        if (!row.result) {
            continue;
        }
        size_t b = row.result->barrier;
        if (prev) {
            scan.nondecreasing &= b >= *prev;
            scan.strictly_increasing &= b > *prev;
            scan.constant &= b == *prev;
        }
        prev = b;
    }
    return scan;
}

std::string barrier_table_csv(std::span<const BarrierScan> scans) {
    std::ostringstream out;
    out << "family,L,target,method,barrier,seed,witness_length\n";
    for (const auto &scan : scans) {
        for (const auto &row : scan.rows) {
            out << family_name(scan.family) << ',' << row.size << ',' << scan.target.str() << ',';
            if (row.result) {
                out << method_name(row.result->method) << ',' << row.result->barrier << ',' << row.result->seed << ','
                    << row.result->witness.size() << '\n';
            } else {
                out << "refused,,,\n";
            }
        }
    }
    return out.str();
}

std::string witness_json(const BarrierResult &r) {
    nlohmann::json flips = nlohmann::json::array();
    for (const auto &f : r.witness) {
        flips.push_back({{"qubit", f.qubit}, {"pauli", f.kind == PauliKind::X ? "X" : f.kind == PauliKind::Z ? "Z" : "Y"}});
    }
    nlohmann::json doc{
        {"model", r.model_id},
        {"target", r.target.str()},
        {"method", method_name(r.method)},
        {"barrier", r.barrier},
        {"seed", r.seed},
        {"flips", std::move(flips)}};
    return doc.dump();
}

}  // namespace qmem

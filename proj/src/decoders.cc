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

#include "qmem/decoders.h"

#include <algorithm>
#include <bit>
#include <cstdlib>
#include <functional>
#include <limits>

#include "qmem/energy.h"

namespace qmem {

std::string_view decoder_name(DecoderId id) {
    switch (id) {
        case DecoderId::majority:
            return "majority";
        case DecoderId::ml:
            return "ml";
        case DecoderId::greedy:
            return "greedy";
        case DecoderId::match2d:
            return "match2d";
    }
    return "unknown";
}

DecoderId parse_decoder(std::string_view name) {
    for (auto id : {DecoderId::majority, DecoderId::ml, DecoderId::greedy, DecoderId::match2d}) {
        if (decoder_name(id) == name) {
            return id;
        }
    }
    throw std::invalid_argument("unknown decoder '" + std::string(name) + "'");
}

DecoderId default_decoder(const CodeModel &m) {
    if (m.classical) {
        return DecoderId::majority;
    }
    if (m.family == Family::surface2d) {
        return DecoderId::match2d;
    }
    return DecoderId::greedy;
}

bool decoder_supports(DecoderId id, const CodeModel &m) {
    switch (id) {
        case DecoderId::majority:
            return m.classical;
        case DecoderId::match2d:
            return m.family == Family::surface2d;
        default:
            return true;
    }
}

int majority_vote(const CodeModel &m, const PauliOperator &spins) {
    if (!m.classical) {
        throw std::invalid_argument("majority vote needs a classical model");
    }
    size_t ones = spins.x_part().popcount();
    size_t zeros = m.n - ones;
    if (ones == zeros) {
        throw MajorityTie("majority vote tie: magnetization is exactly 0");
    }
    return ones > zeros ? 1 : 0;
}

namespace {

Correction finish(const CodeModel &m, PauliOperator correction, bool cleared, DecoderId id) {
    (void)m;
    size_t cost = correction.weight();
    return Correction{std::move(correction), cleared, cost, id};
}

}  // namespace

Correction ml_bruteforce(const CodeModel &m, const BitVector &syndrome, std::optional<size_t> weight_cap) {
    if (syndrome.size() != m.checks.size()) {
        throw std::invalid_argument("syndrome length does not match check count");
    }
    if (!weight_cap && m.n > kMlMaxQubits) {
        throw std::invalid_argument("ml_bruteforce refused for n = " + std::to_string(m.n) + " without a weight cap");
    }
    if (syndrome.none()) {
        return finish(m, PauliOperator(m.n), true, DecoderId::ml);
    }
    // Letters in lexicographic order X < Y < Z.
    std::vector<PauliKind> letters =
        m.classical ? std::vector<PauliKind>{PauliKind::X} : std::vector<PauliKind>{PauliKind::X, PauliKind::Y, PauliKind::Z};
    SyndromeMap map(m);
    std::vector<BitVector> unit;
    for (size_t q = 0; q < m.n; q++) {
        for (PauliKind k : letters) {
            BitVector s(m.checks.size());
            map.apply(s, q, k);
            unit.push_back(std::move(s));
        }
    }
    size_t L = letters.size();
    size_t cap = std::min(weight_cap.value_or(m.n), m.n);
    BitVector acc(m.checks.size());
    std::vector<std::pair<size_t, size_t>> chosen;
    std::function<bool(size_t, size_t)> rec = [&](size_t start, size_t remaining) -> bool {
        if (remaining == 0) {
            return acc == syndrome;
        }
        for (size_t q = start; q + remaining <= m.n; q++) {
            for (size_t l = 0; l < L; l++) {
                acc ^= unit[q * L + l];
                chosen.emplace_back(q, l);
                if (rec(q + 1, remaining - 1)) {
                    return true;
                }
                chosen.pop_back();
                acc ^= unit[q * L + l];
            }
        }
        return false;
    };
    for (size_t w = 1; w <= cap; w++) {
        if (rec(0, w)) {
            PauliOperator c(m.n);
            for (auto [q, l] : chosen) {
                c.set(q, letters[l]);
            }
            return finish(m, std::move(c), true, DecoderId::ml);
        }
    }
    throw SearchExhausted("no correction of weight <= " + std::to_string(cap) + " matches the syndrome");
}

Correction greedy_cooling(const CodeModel &m, const BitVector &syndrome, Rng &rng, const GreedyOptions &options) {
    if (syndrome.size() != m.checks.size()) {
        throw std::invalid_argument("syndrome length does not match check count");
    }
    PauliOperator correction(m.n);
    if (syndrome.none()) {
        return finish(m, std::move(correction), true, DecoderId::greedy);
    }
    SyndromeMap map(m);
    BitVector syn = syndrome;
    std::vector<PauliKind> kinds =
        m.classical ? std::vector<PauliKind>{PauliKind::X} : std::vector<PauliKind>{PauliKind::X, PauliKind::Z};
    size_t budget = options.steps_per_qubit * m.n;
    size_t steps = 0;
    auto touches = [&](size_t q, PauliKind k) { return !(k == PauliKind::X ? map.x_flips(q) : map.z_flips(q)).empty(); };
    auto best_move = [&](int &best_delta) {
        std::pair<size_t, PauliKind> best{0, PauliKind::I};
        best_delta = std::numeric_limits<int>::max();
        for (size_t q = 0; q < m.n; q++) {
            for (PauliKind k : kinds) {
                int d = map.delta_violated(syn, q, k);
                if (d < best_delta) {
                    best_delta = d;
                    best = {q, k};
                }
            }
        }
        return best;
    };
    auto apply = [&](size_t q, PauliKind k) {
        map.apply(syn, q, k);
        correction.apply(q, k);
        steps++;
    };
    std::vector<std::pair<size_t, PauliKind>> neutral;
    while (syn.any() && steps < budget) {
        int delta;
        auto [q, k] = best_move(delta);
        if (delta < 0) {
            apply(q, k);
            continue;
        }
        bool escaped = false;
        for (size_t p = 0; p < options.plateau_steps && steps < budget; p++) {
            neutral.clear();
            for (size_t qq = 0; qq < m.n; qq++) {
                for (PauliKind kk : kinds) {
                    if (touches(qq, kk) && map.delta_violated(syn, qq, kk) == 0) {
                        neutral.emplace_back(qq, kk);
                    }
                }
            }
            if (neutral.empty()) {
                break;
            }
            auto [nq, nk] = neutral[rng.below(neutral.size())];
            apply(nq, nk);
            best_move(delta);
            if (delta < 0) {
                escaped = true;
                break;
            }
        }
        if (!escaped) {
            break;
        }
    }
    bool cleared = syn.none();
    return finish(m, std::move(correction), cleared, DecoderId::greedy);
}

namespace {

struct Defect {
    int r;
    int c;
};

/// Taxicab distance in check steps between two defects of the same type.
int pair_distance(const Defect &a, const Defect &b) { return (std::abs(a.r - b.r) + std::abs(a.c - b.c)) / 2; }

/// Pairs defects minimising total cost; partner[i] == -1 means boundary.
std::vector<int> pair_defects(const std::vector<Defect> &defects, const std::function<int(const Defect &)> &boundary_cost) {
    size_t D = defects.size();
    std::vector<int> partner(D, -1);
    if (D == 0) {
        return partner;
    }
    if (D <= kExactMatchingLimit) {
        size_t count = size_t{1} << D;
        constexpr int kUnset = std::numeric_limits<int>::max();
        std::vector<int> best(count, kUnset);
        std::vector<int> choice(count, -2);
        best[0] = 0;
        // f(mask) over the remaining defects; the lowest remaining defect is matched first.
        std::function<int(size_t)> solve = [&](size_t mask) -> int {
            if (best[mask] != kUnset) {
                return best[mask];
            }
            size_t i = std::countr_zero(mask);
            size_t rest = mask ^ (size_t{1} << i);
            int value = boundary_cost(defects[i]) + solve(rest);
            int pick = -1;
            for (size_t j = i + 1; j < D; j++) {
                if ((rest >> j) & 1) {
                    int v = pair_distance(defects[i], defects[j]) + solve(rest ^ (size_t{1} << j));
                    if (v < value) {
                        value = v;
                        pick = static_cast<int>(j);
                    }
                }
            }
            best[mask] = value;
            choice[mask] = pick;
            return value;
        };
        size_t mask = count - 1;
        solve(mask);
        while (mask) {
            size_t i = std::countr_zero(mask);
            int j = choice[mask];
            mask ^= size_t{1} << i;
            if (j >= 0) {
                partner[i] = j;
                partner[j] = static_cast<int>(i);
                mask ^= size_t{1} << j;
            }
        }
        return partner;
    }
    std::vector<bool> done(D, false);
    size_t remaining = D;
    while (remaining) {
        int best = std::numeric_limits<int>::max();
        int bi = -1, bj = -1;
        for (size_t i = 0; i < D; i++) {
            if (done[i]) {
                continue;
            }
            int b = boundary_cost(defects[i]);
            if (b < best) {
                best = b;
                bi = static_cast<int>(i);
                bj = -1;
            }
            for (size_t j = i + 1; j < D; j++) {
                if (!done[j]) {
                    int d = pair_distance(defects[i], defects[j]);
                    if (d < best) {
                        best = d;
                        bi = static_cast<int>(i);
                        bj = static_cast<int>(j);
                    }
                }
            }
        }
        done[bi] = true;
        remaining--;
        if (bj >= 0) {
            done[bj] = true;
            remaining--;
            partner[bi] = bj;
            partner[bj] = bi;
        }
    }
    return partner;
}

}  // namespace

Correction match_defects_2d(const CodeModel &m, const BitVector &syndrome) {
    if (m.family != Family::surface2d) {
        throw std::invalid_argument("match_defects_2d needs a surface2d model");
    }
    if (syndrome.size() != m.checks.size()) {
        throw std::invalid_argument("syndrome length does not match check count");
    }
    const int L = static_cast<int>(m.linear_size);
    const int W = 2 * L - 1;
    PauliOperator correction(m.n);
    auto flip = [&](int r, int c, PauliKind k) { correction.apply(surface_qubit_index(L, r, c), k); };

    for (CheckType type : {CheckType::Z, CheckType::X}) {
        std::vector<Defect> defects;
        for (size_t c : syndrome.ones()) {
            if (m.checks[c].type == type) {
                defects.push_back({m.checks[c].location.at(0), m.checks[c].location.at(1)});
            }
        }
        // Plaquette defects leave through the left/right columns, star defects through the top/bottom rows.
        bool horizontal = type == CheckType::Z;
        PauliKind kind = type == CheckType::Z ? PauliKind::X : PauliKind::Z;
        auto boundary_cost = [&](const Defect &d) {
            int along = horizontal ? d.c : d.r;
            return std::min((along + 1) / 2, (W - along) / 2);
        };
        auto partner = pair_defects(defects, boundary_cost);
        for (size_t i = 0; i < defects.size(); i++) {
            const Defect &a = defects[i];
            if (partner[i] < 0) {
                int along = horizontal ? a.c : a.r;
                int toward = (along + 1) / 2 <= (W - along) / 2 ? -1 : 1;
                for (int t = along + toward; t >= 0 && t < W; t += 2 * toward) {
                    horizontal ? flip(a.r, t, kind) : flip(t, a.c, kind);
                }
            } else if (static_cast<size_t>(partner[i]) > i) {
                const Defect &b = defects[partner[i]];
                int r = a.r;
                int step = b.r > r ? 2 : -2;
                for (; r != b.r; r += step) {
                    flip(r + step / 2, a.c, kind);
                }
                int c = a.c;
                step = b.c > c ? 2 : -2;
                for (; c != b.c; c += step) {
                    flip(b.r, c + step / 2, kind);
                }
            }
        }
    }
    return finish(m, std::move(correction), true, DecoderId::match2d);
}

Correction decode(DecoderId id, const CodeModel &m, const BitVector &syndrome, uint64_t seed) {
    switch (id) {
        case DecoderId::ml:
            try {
                return ml_bruteforce(m, syndrome, m.n > kMlMaxQubits ? std::optional<size_t>(8) : std::nullopt);
            } catch (const SearchExhausted &) {
                return Correction{PauliOperator(m.n), false, 0, DecoderId::ml};
            }
        case DecoderId::greedy: {
            Rng rng(seed);
            return greedy_cooling(m, syndrome, rng);
        }
        case DecoderId::match2d:
            return match_defects_2d(m, syndrome);
        case DecoderId::majority:
            break;
    }
    throw std::invalid_argument("majority vote reads spins, not syndromes");
}

}  // namespace qmem

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

#include <gtest/gtest.h>

#include <deque>
#include <json.hpp>

#include "qmem/code_analysis.h"
#include "qmem/energy.h"
#include "test_util.h"

using namespace qmem;

namespace {

uint64_t mask_of(const BitVector &v) {
    uint64_t m = 0;
    for (size_t q : v.ones()) {
        m |= uint64_t{1} << q;
    }
    return m;
}

/// Barrier by threshold connectivity: the smallest t such that the identity
/// connects to a target configuration through configurations of at most t
/// violated checks. Uses only bit masks of checks and logicals.
size_t threshold_oracle(const CodeModel &m, LogicalTarget target) {
    const bool x_errors = target.kind == PauliKind::X;
    std::vector<uint64_t> check_masks;
    for (const auto &c : m.checks) {
        uint64_t mask = mask_of(x_errors ? c.op.z_part() : c.op.x_part());
        if (mask) {
            check_masks.push_back(mask);
        }
    }
    std::vector<uint64_t> conj;
    for (const auto &p : m.logicals) {
        conj.push_back(mask_of(x_errors ? p.z.z_part() : p.x.x_part()));
    }
    const uint64_t states = uint64_t{1} << m.n;
    std::vector<uint8_t> violated(states);
    std::vector<bool> is_target(states);
    for (uint64_t s = 0; s < states; s++) {
        size_t v = 0;
        for (uint64_t c : check_masks) {
            v += std::popcount(s & c) & 1;
        }
        violated[s] = static_cast<uint8_t>(v);
        bool ok = v == 0;
        for (size_t i = 0; i < conj.size() && ok; i++) {
            bool flipped = std::popcount(s & conj[i]) & 1;
            ok = flipped == (i == target.pair);
        }
        is_target[s] = ok;
    }
    for (size_t t = 0;; t++) {
        std::vector<bool> seen(states, false);
        std::deque<uint64_t> queue{0};
        seen[0] = true;
        while (!queue.empty()) {
            uint64_t s = queue.front();
            queue.pop_front();
            if (is_target[s]) {
                return t;
            }
            for (size_t q = 0; q < m.n; q++) {
                uint64_t nb = s ^ (uint64_t{1} << q);
                if (!seen[nb] && violated[nb] <= t) {
                    seen[nb] = true;
                    queue.push_back(nb);
                }
            }
        }
    }
}

void expect_witness_valid(const CodeModel &m, const BarrierResult &r) {
    auto replay = replay_witness(m, r.witness);
    ASSERT_EQ(replay.peak, r.barrier) << m.id();
    ASSERT_EQ(replay.final_violated, 0);
    auto cls = logical_class(m, replay.final_error);
    size_t bit = 2 * r.target.pair + (r.target.kind == PauliKind::X ? 0 : 1);
    ASSERT_EQ(cls.ones(), std::vector<size_t>{bit}) << m.id();
}

}  // namespace

TEST(barrier, target_parse) {
    ASSERT_EQ(LogicalTarget::parse("Z2"), (LogicalTarget{2, PauliKind::Z}));
    ASSERT_EQ(LogicalTarget::parse("X"), (LogicalTarget{0, PauliKind::X}));
    ASSERT_EQ((LogicalTarget{1, PauliKind::X}).str(), "X1");
    ASSERT_THROW(LogicalTarget::parse("Y0"), std::invalid_argument);
    ASSERT_THROW(LogicalTarget::parse("X1a"), std::invalid_argument);
}

TEST(barrier, ising1d_is_one) {
    for (size_t n : {6, 8, 10}) {
        auto m = build_model(Family::ising1d, n);
        auto r = exact_barrier(m, {0, PauliKind::X});
        ASSERT_EQ(r.barrier, 1);
        ASSERT_EQ(r.method, BarrierMethod::exact_bottleneck);
        expect_witness_valid(m, r);
    }
}

TEST(barrier, ising2d_values_from_oracle) {
    std::vector<size_t> expected{2, 4, 5};
    for (size_t L : {2, 3, 4}) {
        auto m = build_model(Family::ising2d, L);
        auto r = exact_barrier(m, {0, PauliKind::X});
        ASSERT_EQ(r.barrier, threshold_oracle(m, {0, PauliKind::X})) << L;
        ASSERT_EQ(r.barrier, expected[L - 2]) << L;
        expect_witness_valid(m, r);
    }
}

TEST(barrier, exact_matches_threshold_oracle) {
    std::vector<std::pair<CodeModel, LogicalTarget>> cases{
        {build_model(Family::ising1d, 7), {0, PauliKind::X}},
        {build_model(Family::ising1d, 6, {.boundary = Boundary::periodic}), {0, PauliKind::X}},
        {build_model(Family::ising2d, 3, {.boundary = Boundary::periodic}), {0, PauliKind::X}},
        {build_model(Family::surface2d, 2), {0, PauliKind::X}},
        {build_model(Family::surface2d, 2), {0, PauliKind::Z}},
        {build_model(Family::surface2d, 3), {0, PauliKind::X}},
        {build_model(Family::surface2d, 3), {0, PauliKind::Z}},
    };
    for (const auto &[m, t] : cases) {
        auto r = exact_barrier(m, t);
        ASSERT_EQ(r.barrier, threshold_oracle(m, t)) << m.id() << " " << t.str();
        expect_witness_valid(m, r);
    }
}

TEST(barrier, surface2d_constant) {
    auto a = exact_barrier(build_model(Family::surface2d, 2), {0, PauliKind::X});
    auto b = exact_barrier(build_model(Family::surface2d, 3), {0, PauliKind::X});
    ASSERT_EQ(a.barrier, b.barrier);
    ASSERT_EQ(a.barrier, 1);
}

TEST(barrier, symmetric_under_reversal) {
    for (const auto &m : {build_model(Family::ising2d, 3), build_model(Family::surface2d, 3), build_model(Family::ising1d, 8)}) {
        LogicalTarget t{0, PauliKind::X};
        auto forward = exact_barrier(m, t);
        auto back = exact_barrier(m, t, kDefaultStateCap, target_operator(m, t));
        ASSERT_EQ(forward.barrier, back.barrier) << m.id();
        auto replay = replay_witness(m, back.witness, target_operator(m, t));
        ASSERT_EQ(replay.peak, back.barrier);
        ASSERT_TRUE(logical_class(m, replay.final_error).none());
    }
}

TEST(barrier, refusal) {
    auto m = build_model(Family::ising2d, 4);
    ASSERT_THROW(exact_barrier(m, {0, PauliKind::X}, 1000), SearchRefused);
    ASSERT_THROW(exact_barrier(build_model(Family::ising2d, 6), {0, PauliKind::X}), SearchRefused);
    ASSERT_THROW(exact_barrier(m, {3, PauliKind::X}), std::invalid_argument);
}

TEST(barrier, ordered_flip_examples) {
    auto chain = build_model(Family::ising1d, 9);
    std::vector<size_t> left_to_right;
    for (size_t q = 0; q < 9; q++) {
        left_to_right.push_back(q);
    }
    ASSERT_EQ(order_peak(chain, left_to_right, PauliKind::X), 1);
    auto r = ordered_flip_barrier(chain, left_to_right, PauliKind::X, OrderStrategy::given_order);
    ASSERT_EQ(r.barrier, 1);
    ASSERT_EQ(r.method, BarrierMethod::ordered_flip);

    // Column-major sweep of a 4x4 Ising lattice: filling the second column
    // costs 3 horizontal bonds to its left, 1 to its right, 1 vertical.
    auto grid = build_model(Family::ising2d, 4);
    std::vector<size_t> column_major;
    for (size_t c = 0; c < 4; c++) {
        for (size_t row = 0; row < 4; row++) {
            column_major.push_back(row * 4 + c);
        }
    }
    ASSERT_EQ(order_peak(grid, column_major, PauliKind::X), 5);
}

TEST(barrier, ordered_flip_rejects_non_logical) {
    auto m = build_model(Family::surface2d, 3);
    std::vector<size_t> partial{0, 1};
    ASSERT_THROW(ordered_flip_barrier(m, partial, PauliKind::X, OrderStrategy::given_order), std::invalid_argument);
    std::vector<size_t> stabilizer = m.checks.back().op.support();
    ASSERT_THROW(ordered_flip_barrier(m, stabilizer, PauliKind::X, OrderStrategy::given_order), std::invalid_argument);
    std::vector<size_t> big(11);
    auto g = build_model(Family::ising1d, 11);
    for (size_t q = 0; q < 11; q++) {
        big[q] = q;
    }
    ASSERT_THROW(ordered_flip_barrier(g, big, PauliKind::X, OrderStrategy::exhaustive_orders), std::invalid_argument);
}

TEST(barrier, ordered_methods_dominate_exact) {
    std::vector<CodeModel> models;
    for (size_t n : {4, 6, 8, 10}) {
        models.push_back(build_model(Family::ising1d, n));
    }
    models.push_back(build_model(Family::ising2d, 2));
    models.push_back(build_model(Family::ising2d, 3));
    models.push_back(build_model(Family::surface2d, 2));
    for (const auto &m : models) {
        for (auto kind : {PauliKind::X, PauliKind::Z}) {
            if (m.classical && kind == PauliKind::Z) {
                continue;
            }
            LogicalTarget t{0, kind};
            size_t exact = exact_barrier(m, t).barrier;
            auto support = target_operator(m, t).support();
            for (auto s : {OrderStrategy::given_order, OrderStrategy::exhaustive_orders, OrderStrategy::annealed}) {
                auto r = ordered_flip_barrier(m, support, kind, s, {.seed = 4});
                ASSERT_GE(r.barrier, exact) << m.id();
                auto replay = replay_witness(m, r.witness);
                ASSERT_EQ(replay.peak, r.barrier);
                ASSERT_EQ(r.witness.size(), support.size());
            }
        }
    }
}

TEST(barrier, exhaustive_orders_match_brute_force_permutations) {
    auto m = build_model(Family::ising2d, 2);
    auto support = target_operator(m, {0, PauliKind::X}).support();
    std::sort(support.begin(), support.end());
    size_t best = m.checks.size();
    do {
        best = std::min(best, order_peak(m, support, PauliKind::X));
    } while (std::next_permutation(support.begin(), support.end()));
    auto r = ordered_flip_barrier(m, support, PauliKind::X, OrderStrategy::exhaustive_orders);
    ASSERT_EQ(r.barrier, best);
}

TEST(barrier, annealing_is_seeded) {
    auto m = build_model(Family::toric3d, 2);
    auto support = target_operator(m, {0, PauliKind::X}).support();
    auto a = ordered_flip_barrier(m, support, PauliKind::X, OrderStrategy::annealed, {.seed = 12});
    auto b = ordered_flip_barrier(m, support, PauliKind::X, OrderStrategy::annealed, {.seed = 12});
    ASSERT_EQ(a.witness, b.witness);
    ASSERT_EQ(a.seed, 12);
    ASSERT_EQ(a.method, BarrierMethod::annealed_order);
}

TEST(barrier, toric3d_asymmetry) {
    std::vector<size_t> sizes{2, 3};
    auto z = barrier_scan(Family::toric3d, sizes, {0, PauliKind::Z}, ScanMethod::annealed);
    auto x = barrier_scan(Family::toric3d, sizes, {0, PauliKind::X}, ScanMethod::annealed);
    ASSERT_TRUE(z.constant);
    ASSERT_TRUE(x.strictly_increasing);
    ASSERT_EQ(z.rows[0].result->barrier, 2);
    ASSERT_EQ(x.rows[0].result->barrier, 4);
}

TEST(barrier, scan_and_exports) {
    std::vector<size_t> sizes{2, 3, 6};
    auto scan = barrier_scan(Family::ising2d, sizes, {0, PauliKind::X}, ScanMethod::exact);
    ASSERT_EQ(scan.rows.size(), 3);
    ASSERT_TRUE(scan.rows[2].refusal.size() > 0);
    ASSERT_FALSE(scan.rows[2].result.has_value());
    ASSERT_TRUE(scan.strictly_increasing);
    std::vector<BarrierScan> scans{scan};
    auto csv = barrier_table_csv(scans);
    ASSERT_EQ(csv.substr(0, csv.find('\n')), "family,L,target,method,barrier,seed,witness_length");
    ASSERT_NE(csv.find("ising2d,2,X0,exact_bottleneck,2,0,"), std::string::npos);
    ASSERT_NE(csv.find("ising2d,6,X0,refused,,,"), std::string::npos);
    auto j = nlohmann::json::parse(witness_json(*scan.rows[0].result));
    ASSERT_EQ(j["barrier"], 2);
    ASSERT_EQ(j["flips"].size(), scan.rows[0].result->witness.size());
}

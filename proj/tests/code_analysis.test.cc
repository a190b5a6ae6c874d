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

#include "qmem/code_analysis.h"

#include <gtest/gtest.h>

#include <functional>

#include "qmem/coset.h"
#include "test_util.h"

using namespace qmem;

namespace {

bool is_logical(const CodeModel &m, const RowSpan &group, const PauliOperator &p) {
    for (const auto &c : m.checks) {
        if (!commutes(c.op, p)) {
            return false;
        }
    }
    return !group.contains(symplectic_vector(p));
}

/// Smallest weight of a Pauli that commutes with every check and lies outside
/// the check group, by direct enumeration of all Paulis up to max_weight.
std::optional<size_t> brute_distance(const CodeModel &m, size_t max_weight) {
    RowSpan group(check_matrix(m));
    PauliOperator p(m.n);
    std::function<bool(size_t, size_t)> rec = [&](size_t start, size_t left) -> bool {
        if (left == 0) {
            return is_logical(m, group, p);
        }
        for (size_t q = start; q < m.n; q++) {
            for (auto k : {PauliKind::X, PauliKind::Y, PauliKind::Z}) {
                p.set(q, k);
                if (rec(q + 1, left - 1)) {
                    return true;
                }
            }
            p.set(q, PauliKind::I);
        }
        return false;
    };
    for (size_t w = 1; w <= max_weight; w++) {
        if (rec(0, w)) {
            return w;
        }
    }
    return std::nullopt;
}

}  // namespace

TEST(code_analysis, distance_examples) {
    ASSERT_EQ(code_distance(build_model(Family::surface2d, 2)).distance, 2);
    ASSERT_EQ(code_distance(build_model(Family::surface2d, 3)).distance, 3);
    ASSERT_EQ(code_distance(build_model(Family::surface2d, 4)).distance, 4);
    ASSERT_EQ(code_distance(build_model(Family::ising2d, 3)).distance, 1);
    ASSERT_EQ(code_distance(build_model(Family::ising1d, 6)).distance, 1);
    auto d = code_distance(build_model(Family::surface2d, 3));
    ASSERT_EQ(d.x_distance, 3);
    ASSERT_EQ(d.z_distance, 3);
    ASSERT_FALSE(d.exhausted);
}

TEST(code_analysis, distance_matches_brute_force) {
    for (const auto &m :
         {build_model(Family::surface2d, 2), build_model(Family::surface2d, 3), build_model(Family::ising1d, 5),
          build_model(Family::ising2d, 2), build_model(Family::ising1d, 5, {.boundary = Boundary::periodic})}) {
        ASSERT_EQ(code_distance(m).distance, brute_distance(m, 3)) << m.id();
    }
}

TEST(code_analysis, distance_cap_and_refusal) {
    auto m = build_model(Family::surface2d, 4);
    auto capped = code_distance(m, 3);
    ASSERT_TRUE(capped.exhausted);
    ASSERT_EQ(capped.distance, std::nullopt);
    auto big = build_model(Family::surface2d, 5);
    ASSERT_THROW(code_distance(big), std::invalid_argument);
    ASSERT_EQ(code_distance(big, 5).distance, 5);
    auto toric = build_model(Family::toric3d, 3);
    ASSERT_EQ(code_distance(toric, 4).distance, 3);
}

TEST(code_analysis, coset_of_surface_zbar) {
    auto m = build_model(Family::surface2d, 2);
    std::vector<PauliOperator> checks;
    for (const auto &c : m.checks) {
        checks.push_back(c.op);
    }
    ASSERT_EQ(checks.size(), 4);
    // All 16 elements of the coset.
    size_t best = m.n;
    for (uint32_t mask = 0; mask < 16; mask++) {
        PauliOperator p = m.logicals[0].z;
        for (size_t i = 0; i < 4; i++) {
            if ((mask >> i) & 1) {
                p *= checks[i];
            }
        }
        best = std::min(best, p.weight());
    }
    ASSERT_EQ(best, 2);
    ASSERT_EQ(coset_min_weight(symplectic_matrix(checks), m.logicals[0].z, m.n), 2);
    ASSERT_EQ(coset_min_weight(symplectic_matrix(checks), PauliOperator(m.n), m.n), 0);
    auto xx = PauliOperator::from_str("XX");
    ASSERT_EQ(coset_min_weight(symplectic_matrix(std::vector<PauliOperator>{xx}), PauliOperator::from_str("XI"), 2), 1);
}

TEST(code_analysis, check_rank_examples) {
    ASSERT_EQ(check_rank(build_model(Family::surface2d, 2)), 4);
    ASSERT_EQ(check_rank(build_model(Family::ising1d, 5, {.boundary = Boundary::periodic})), 4);
    ASSERT_EQ(check_rank(build_model(Family::toric3d, 2)), 24 - 3);
}

TEST(code_analysis, logical_class_bits) {
    auto m = build_model(Family::toric3d, 2);
    for (size_t i = 0; i < 3; i++) {
        auto cx = logical_class(m, m.logicals[i].x);
        auto cz = logical_class(m, m.logicals[i].z);
        ASSERT_EQ(cx.ones(), std::vector<size_t>{2 * i});
        ASSERT_EQ(cz.ones(), std::vector<size_t>{2 * i + 1});
    }
    for (const auto &c : m.checks) {
        ASSERT_TRUE(logical_class(m, c.op).none());
    }
}

TEST(code_analysis, complete_css_logicals_is_symplectic) {
    auto m = build_model(Family::toric3d, 2, {.gauge_only = true});
    ASSERT_EQ(m.k(), 10);
    for (size_t i = 0; i < m.k(); i++) {
        ASSERT_TRUE(m.logicals[i].x.is_x_type());
        ASSERT_TRUE(m.logicals[i].z.is_z_type());
        for (size_t j = 0; j < m.k(); j++) {
            ASSERT_EQ(commutes(m.logicals[i].x, m.logicals[j].z), i != j);
        }
    }
    // Completing an empty seed of the surface code recovers one pair.
    auto s = build_model(Family::surface2d, 3);
    auto pairs = complete_css_logicals(s.n, s.checks, {});
    ASSERT_EQ(pairs.size(), 1);
    ASSERT_FALSE(commutes(pairs[0].x, pairs[0].z));
}

TEST(code_analysis, minimal_logical_weights) {
    auto w = minimal_logical_weights(build_model(Family::surface2d, 3));
    ASSERT_EQ(w.x, (std::vector<std::optional<size_t>>{3}));
    ASSERT_EQ(w.z, (std::vector<std::optional<size_t>>{3}));
    auto t = minimal_logical_weights(build_model(Family::toric3d, 2));
    for (size_t i = 0; i < 3; i++) {
        ASSERT_EQ(t.x[i], 4);
        ASSERT_EQ(t.z[i], 2);
    }
}

TEST(code_analysis, support_dims) {
    std::vector<size_t> two_three{2, 3};
    auto s = support_dims(Family::surface2d, two_three);
    ASSERT_EQ(s.pairs.at(0).d_x, 1);
    ASSERT_EQ(s.pairs.at(0).d_z, 1);

    std::vector<size_t> ising_sizes{3, 5};
    auto i = support_dims(Family::ising2d, ising_sizes);
    ASSERT_EQ(i.pairs.at(0).d_z, 0);
    ASSERT_EQ(i.pairs.at(0).d_x, 2);

    auto t = support_dims(Family::toric3d, two_three);
    ASSERT_EQ(t.tightest().d_z, 1);
    ASSERT_EQ(t.tightest().d_x, 2);

    for (const auto &d : {s, i, t}) {
        ASSERT_LE(d.tightest().d_x + d.tightest().d_z, static_cast<int>(d.dimension));
    }
    std::vector<size_t> one{3};
    ASSERT_THROW(support_dims(Family::surface2d, one), std::invalid_argument);
}

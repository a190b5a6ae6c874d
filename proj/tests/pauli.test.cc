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

#include "qmem/pauli.h"

#include <gtest/gtest.h>

#include "test_util.h"

using namespace qmem;

TEST(pauli, str_roundtrip) {
    auto p = PauliOperator::from_str("IXYZ_");
    ASSERT_EQ(p.str(), "IXYZI");
    ASSERT_EQ(p.weight(), 3);
    ASSERT_EQ(p.at(2), PauliKind::Y);
    ASSERT_EQ(p.support(), (std::vector<size_t>{1, 2, 3}));
    ASSERT_THROW(PauliOperator::from_str("XQ"), std::invalid_argument);
}

TEST(pauli, single_qubit_products_ignore_phase) {
    auto x = PauliOperator::from_str("X");
    auto y = PauliOperator::from_str("Y");
    auto z = PauliOperator::from_str("Z");
    ASSERT_EQ(x * z, y);
    ASSERT_EQ(z * x, y);
    ASSERT_EQ(x * y, z);
    ASSERT_TRUE((x * x).is_identity());
}

TEST(pauli, commutation_table) {
    const char *letters = "IXYZ";
    for (int a = 0; a < 4; a++) {
        for (int b = 0; b < 4; b++) {
            bool expected = a == 0 || b == 0 || a == b;
            ASSERT_EQ(
                commutes(PauliOperator::from_str(std::string(1, letters[a])), PauliOperator::from_str(std::string(1, letters[b]))),
                expected)
                << letters[a] << letters[b];
        }
    }
    ASSERT_TRUE(commutes(PauliOperator::from_str("XX"), PauliOperator::from_str("ZZ")));
    ASSERT_FALSE(commutes(PauliOperator::from_str("XX"), PauliOperator::from_str("ZI")));
    ASSERT_THROW(commutes(PauliOperator::from_str("X"), PauliOperator::from_str("XX")), std::invalid_argument);
}

TEST(pauli, on_and_apply) {
    std::vector<size_t> qs{0, 2};
    auto p = PauliOperator::on(4, qs, PauliKind::Z);
    ASSERT_EQ(p.str(), "ZIZI");
    ASSERT_TRUE(p.is_z_type());
    p.apply(2, PauliKind::X);
    ASSERT_EQ(p.str(), "ZIYI");
    p.set(0, PauliKind::I);
    ASSERT_EQ(p.str(), "IIYI");
}

TEST(pauli, commutation_matches_letterwise_count) {
    Rng rng(5);
    for (int trial = 0; trial < 300; trial++) {
        size_t n = 1 + rng.below(80);
        auto a = test_util::random_pauli(rng, n);
        auto b = test_util::random_pauli(rng, n);
        size_t anti = 0;
        for (size_t q = 0; q < n; q++) {
            auto ka = a.at(q), kb = b.at(q);
            anti += ka != PauliKind::I && kb != PauliKind::I && ka != kb;
        }
        ASSERT_EQ(commutes(a, b), anti % 2 == 0);
        ASSERT_EQ(a * b, b * a);
        ASSERT_EQ((a * b) * b, a);
        ASSERT_EQ(multiply(a, b), a * b);
    }
}

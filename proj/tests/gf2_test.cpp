// Copyright 2026 The Dislo Authors
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


#include "dislo/gf2.h"

#include <random>
#include <set>

#include "dislo/bitvec.h"
#include "gtest/gtest.h"

using namespace dislo;

namespace {

BitVector random_bits(size_t n, std::mt19937_64 &rng) {
    BitVector v(n);
    for (size_t k = 0; k < n; ++k) {
        v.set(k, rng() & 1);
    }
    return v;
}

std::set<BitVector> span_of(const std::vector<BitVector> &rows, size_t n) {
    std::set<BitVector> span{BitVector(n)};
    for (const auto &r : rows) {
        std::set<BitVector> next = span;
        for (const auto &s : span) {
            next.insert(s ^ r);
        }
        span = std::move(next);
    }
    return span;
}

TEST(BitVector, basics) {
    BitVector v(130);
    EXPECT_TRUE(v.none());
    v.set(0);
    v.set(64);
    v.set(129);
    EXPECT_EQ(v.popcount(), 3u);
    EXPECT_EQ(v.first_set(), 0u);
    EXPECT_EQ(v.set_bits(), (std::vector<size_t>{0, 64, 129}));
    v.flip(0);
    EXPECT_EQ(v.first_set(), 64u);
    BitVector w(130);
    w.set(64);
    EXPECT_TRUE(dot(v, w));
    EXPECT_EQ((v ^ w).popcount(), 1u);
    EXPECT_EQ((v & w).popcount(), 1u);
    EXPECT_EQ((v | w).popcount(), 2u);
    EXPECT_EQ(BitVector(5).first_set(), 5u);
}

TEST(Gf2, symplectic_packing) {
    auto p = parse_pauli("XYZI");
    BitVector v = pack_symplectic(p);
    EXPECT_EQ(v.str(), "11000110");
    EXPECT_EQ(unpack_symplectic(v), p);
    EXPECT_EQ(swap_halves(v).str(), "01101100");
    EXPECT_THROW(unpack_symplectic(BitVector(3)), std::invalid_argument);
}

TEST(Gf2, row_space_matches_enumerated_span) {
    std::mt19937_64 rng(7);
    for (int trial = 0; trial < 300; ++trial) {
        size_t n = 1 + rng() % 10;
        size_t m = rng() % 7;
        std::vector<BitVector> rows;
        for (size_t i = 0; i < m; ++i) {
            rows.push_back(random_bits(n, rng));
        }
        auto span = span_of(rows, n);
        RowSpace space(n);
        for (const auto &r : rows) {
            space.insert(r);
        }
        ASSERT_EQ(size_t{1} << space.rank(), span.size());
        ASSERT_EQ(gf2_rank(rows), space.rank());
        for (int probe = 0; probe < 20; ++probe) {
            BitVector v = random_bits(n, rng);
            ASSERT_EQ(space.contains(v), span.count(v) == 1);
            ASSERT_TRUE(span.count(v ^ space.reduce(v)) == 1);
        }
    }
}

TEST(Gf2, nullspace_is_orthogonal_and_complete) {
    std::mt19937_64 rng(8);
    for (int trial = 0; trial < 200; ++trial) {
        size_t n = 1 + rng() % 12;
        size_t m = rng() % 8;
        std::vector<BitVector> rows;
        for (size_t i = 0; i < m; ++i) {
            rows.push_back(random_bits(n, rng));
        }
        auto null = gf2_nullspace(rows, n);
        ASSERT_EQ(null.size() + gf2_rank(rows), n);
        ASSERT_EQ(gf2_rank(null), null.size());
        for (const auto &v : null) {
            for (const auto &r : rows) {
                ASSERT_FALSE(dot(v, r));
            }
        }
    }
}

}  // namespace

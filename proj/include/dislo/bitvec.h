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

#ifndef DISLO_BITVEC_H
#define DISLO_BITVEC_H

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace dislo {

/// Fixed-length bit vector over GF(2), packed into 64-bit words.
///
/// Bits past size() in the last word are always zero, so word-level
/// equality, hashing and popcounts never see garbage.
class BitVector {
   public:
    BitVector() = default;
    explicit BitVector(size_t num_bits);

    size_t size() const {
        return num_bits_;
    }
    size_t num_words() const {
        return words_.size();
    }

    bool operator[](size_t k) const {
        return (words_[k >> 6] >> (k & 63)) & 1;
    }
    void set(size_t k, bool value = true);
    void flip(size_t k) {
        words_[k >> 6] ^= uint64_t{1} << (k & 63);
    }
    void clear();

    BitVector &operator^=(const BitVector &other);
    BitVector &operator|=(const BitVector &other);
    BitVector &operator&=(const BitVector &other);

    bool any() const;
    bool none() const {
        return !any();
    }
    size_t popcount() const;
    /// Index of the lowest set bit, or size() when none is set.
    size_t first_set() const;
    /// Indices of all set bits, ascending.
    std::vector<size_t> set_bits() const;

    std::span<const uint64_t> words() const {
        return words_;
    }
    std::span<uint64_t> words() {
        return words_;
    }

    bool operator==(const BitVector &other) const = default;
    bool operator<(const BitVector &other) const;

    size_t hash() const;
    /// '0'/'1' characters, bit 0 first.
    std::string str() const;

   private:
    size_t num_bits_ = 0;
    std::vector<uint64_t> words_;
};

BitVector operator^(BitVector a, const BitVector &b);
BitVector operator|(BitVector a, const BitVector &b);
BitVector operator&(BitVector a, const BitVector &b);

/// Parity of the bitwise AND (the GF(2) dot product).
bool dot(const BitVector &a, const BitVector &b);

}  // namespace dislo

template <>
struct std::hash<dislo::BitVector> {
    size_t operator()(const dislo::BitVector &v) const {
        return v.hash();
    }
};

#endif

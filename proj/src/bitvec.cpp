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

#include "dislo/bitvec.h"

#include <bit>
#include <stdexcept>

namespace dislo {

namespace {

void require_same_size(const BitVector &a, const BitVector &b) {
    if (a.size() != b.size()) {
        throw std::invalid_argument(
            "bit vector length mismatch: " + std::to_string(a.size()) + " vs " + std::to_string(b.size()));
    }
}

}  // namespace

BitVector::BitVector(size_t num_bits) : num_bits_(num_bits), words_((num_bits + 63) / 64, 0) {
}

void BitVector::set(size_t k, bool value) {
    uint64_t mask = uint64_t{1} << (k & 63);
    if (value) {
        words_[k >> 6] |= mask;
    } else {
        words_[k >> 6] &= ~mask;
    }
}

void BitVector::clear() {
    for (auto &w : words_) {
        w = 0;
    }
}

BitVector &BitVector::operator^=(const BitVector &other) {
    require_same_size(*this, other);
    for (size_t i = 0; i < words_.size(); i++) {
        words_[i] ^= other.words_[i];
    }
    return *this;
}

BitVector &BitVector::operator|=(const BitVector &other) {
    require_same_size(*this, other);
    for (size_t i = 0; i < words_.size(); i++) {
        words_[i] |= other.words_[i];
    }
    return *this;
}

BitVector &BitVector::operator&=(const BitVector &other) {
    require_same_size(*this, other);
    for (size_t i = 0; i < words_.size(); i++) {
        words_[i] &= other.words_[i];
    }
    return *this;
}

bool BitVector::any() const {
    for (auto w : words_) {
        if (w) {
            return true;
        }
    }
    return false;
}

size_t BitVector::popcount() const {
    size_t total = 0;
    for (auto w : words_) {
        total += std::popcount(w);
    }
    return total;
}

size_t BitVector::first_set() const {
    for (size_t i = 0; i < words_.size(); i++) {
        if (words_[i]) {
            return i * 64 + std::countr_zero(words_[i]);
        }
    }
    return num_bits_;
}

std::vector<size_t> BitVector::set_bits() const {
    std::vector<size_t> out;
    for (size_t i = 0; i < words_.size(); i++) {
        uint64_t w = words_[i];
        while (w) {
            out.push_back(i * 64 + std::countr_zero(w));
            w &= w - 1;
        }
    }
    return out;
}

bool BitVector::operator<(const BitVector &other) const {
    if (num_bits_ != other.num_bits_) {
        return num_bits_ < other.num_bits_;
    }
    return words_ < other.words_;
}

size_t BitVector::hash() const {
    uint64_t h = 0x9E3779B97F4A7C15ULL ^ num_bits_;
    for (auto w : words_) {
        h ^= w + 0x9E3779B97F4A7C15ULL + (h << 6) + (h >> 2);
    }
    return static_cast<size_t>(h);
}

std::string BitVector::str() const {
    std::string out;
    out.reserve(num_bits_);
    for (size_t k = 0; k < num_bits_; k++) {
        out.push_back((*this)[k] ? '1' : '0');
    }
    return out;
}

BitVector operator^(BitVector a, const BitVector &b) {
    a ^= b;
    return a;
}

BitVector operator|(BitVector a, const BitVector &b) {
    a |= b;
    return a;
}

BitVector operator&(BitVector a, const BitVector &b) {
    a &= b;
    return a;
}

bool dot(const BitVector &a, const BitVector &b) {
    require_same_size(a, b);
    auto wa = a.words();
    auto wb = b.words();
    uint64_t acc = 0;
    for (size_t i = 0; i < wa.size(); i++) {
        acc ^= wa[i] & wb[i];
    }
    return std::popcount(acc) & 1;
}

}  // namespace dislo

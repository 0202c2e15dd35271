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

#ifndef DISLO_SRC_SEARCH_SPACE_H
#define DISLO_SRC_SEARCH_SPACE_H

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cstdint>
#include <limits>
#include <mutex>
#include <optional>
#include <span>
#include <thread>
#include <vector>

#include "dislo/codecheck.h"
#include "dislo/distance.h"

namespace dislo::detail {

/// Flat per-generator bit masks, `words` uint64 per row.
struct MaskTable {
    size_t words = 0;
    std::vector<uint64_t> data;

    std::span<const uint64_t> row(size_t i) const {
        return {data.data() + i * words, words};
    }
    std::span<uint64_t> row(size_t i) {
        return {data.data() + i * words, words};
    }
};

inline bool intersects(std::span<const uint64_t> a, std::span<const uint64_t> b) {
    for (size_t i = 0; i < a.size(); i++) {
        if (a[i] & b[i]) {
            return true;
        }
    }
    return false;
}

inline void xor_into(std::span<uint64_t> a, std::span<const uint64_t> b) {
    for (size_t i = 0; i < a.size(); i++) {
        a[i] ^= b[i];
    }
}

inline bool all_zero(std::span<const uint64_t> a) {
    return std::all_of(a.begin(), a.end(), [](uint64_t w) {
        return w == 0;
    });
}

/// Generators that can no longer change once every remaining choice lies at
/// qubit q or later (closed_before), or at qubit q or earlier (open_after).
struct ClosureMasks {
    MaskTable closed_before;  // max support qubit < q, rows q = 0..n
    MaskTable open_after;     // min support qubit > q, rows q = 0..n-1
};

ClosureMasks build_closure_masks(const StabilizerCode &code);

/// Atoms are the unit steps of a search. Under FULL an atom is a (qubit,
/// letter) pair and a qubit holds at most one atom; under XZ_ONLY an atom is
/// one of the 2n symplectic bits. Every error is a unique increasing atom
/// sequence whose length is its model weight.
class AtomTable {
   public:
    AtomTable(const StabilizerCode &code, const CodeChecker &checker, ErrorModel model, uint64_t logical_mask);

    size_t num_atoms() const {
        return qubit_.size();
    }
    size_t words() const {
        return syndromes_.words;
    }
    size_t qubit(size_t atom) const {
        return qubit_[atom];
    }
    /// First atom allowed after `atom` in an increasing sequence.
    size_t next_start(size_t atom) const {
        return (atom / stride_ + 1) * stride_;
    }
    /// One past the last atom allowed before `atom`.
    size_t prev_end(size_t atom) const {
        return (atom / stride_) * stride_;
    }
    std::span<const uint64_t> syndrome(size_t atom) const {
        return syndromes_.row(atom);
    }
    uint64_t hash(size_t atom) const {
        return hash_[atom];
    }
    uint64_t lbits(size_t atom) const {
        return lbits_[atom];
    }
    uint64_t mask() const {
        return mask_;
    }
    const ClosureMasks &closure() const {
        return closure_;
    }

    PauliOperator to_operator(std::span<const uint16_t> atoms) const;

   private:
    size_t n_;
    ErrorModel model_;
    size_t stride_;
    std::vector<uint32_t> qubit_;
    std::vector<char> letter_;
    MaskTable syndromes_;
    std::vector<uint64_t> hash_;
    std::vector<uint64_t> lbits_;
    uint64_t mask_;
    ClosureMasks closure_;
};

/// Bit 2i marks anticommutation with xbar_i, bit 2i+1 with zbar_i.
uint64_t all_logicals_mask(size_t k);
uint64_t logical_mask(size_t index);

/// Runs task(t) for t = 0..num_tasks-1 across worker threads. A task returns
/// true when it found a hit; tasks after the lowest hitting task are skipped
/// and the lowest hitting index is returned (num_tasks when none hit). The
/// result does not depend on the thread count.
template <typename Fn>
size_t first_hit(size_t num_tasks, unsigned threads, Fn &&task) {
    std::atomic<size_t> next{0};
    std::atomic<size_t> best{num_tasks};
    auto worker = [&]() {
        while (true) {
            size_t t = next.fetch_add(1);
            if (t >= num_tasks || t > best.load()) {
                return;
            }
            if (task(t)) {
                size_t cur = best.load();
                while (t < cur && !best.compare_exchange_weak(cur, t)) {
                }
            }
        }
    };
    unsigned count = std::max(1u, std::min<unsigned>(threads, static_cast<unsigned>(num_tasks)));
    if (count <= 1) {
        worker();
    } else {
        std::vector<std::thread> pool;
        for (unsigned i = 0; i < count; i++) {
            pool.emplace_back(worker);
        }
        for (auto &t : pool) {
            t.join();
        }
    }
    return best.load();
}

double seconds_since(std::chrono::steady_clock::time_point start);

}  // namespace dislo::detail

namespace dislo {

/// Engine entry points; `logical` restricts acceptance to errors acting on
/// that encoded qubit, otherwise any nontrivial logical is accepted.
DistanceReport brute_force_search(
    const StabilizerCode &code,
    ErrorModel model,
    size_t cap,
    const SearchOptions &options,
    std::optional<size_t> logical);

DistanceReport mitm_search(
    const StabilizerCode &code,
    ErrorModel model,
    size_t cap,
    const SearchOptions &options,
    std::optional<size_t> logical);

}  // namespace dislo

#endif

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

#include "search_space.h"

#include <random>

namespace dislo::detail {

namespace {

constexpr uint64_t kHashSeed = 0x5eed'd15c'0c0d'e001ULL;

size_t words_for(size_t bits) {
    return (bits + 63) / 64;
}

}  // namespace

ClosureMasks build_closure_masks(const StabilizerCode &code) {
    size_t n = code.n;
    size_t g = code.generators.size();
    size_t w = words_for(g);
    ClosureMasks out;
    out.closed_before.words = w;
    out.closed_before.data.assign((n + 1) * w, 0);
    out.open_after.words = w;
    out.open_after.data.assign(n * w, 0);
    for (size_t i = 0; i < g; i++) {
        auto support = code.generators[i].op.support();
        if (support.empty()) {
            continue;
        }
        size_t lo = support.front();
        size_t hi = support.back();
        uint64_t bit = uint64_t{1} << (i & 63);
        for (size_t q = hi + 1; q <= n; q++) {
            out.closed_before.row(q)[i >> 6] |= bit;
        }
        for (size_t q = 0; q < lo; q++) {
            out.open_after.row(q)[i >> 6] |= bit;
        }
    }
    return out;
}

AtomTable::AtomTable(const StabilizerCode &code, const CodeChecker &checker, ErrorModel model, uint64_t logical_mask)
    : n_(code.n),
      model_(model),
      stride_(model == ErrorModel::kFull ? 3 : 1),
      mask_(logical_mask),
      closure_(build_closure_masks(code)) {
    static constexpr char kFullLetters[3] = {'X', 'Y', 'Z'};
    static constexpr char kXZLetters[2] = {'X', 'Z'};
    size_t per_qubit = model == ErrorModel::kFull ? 3 : 2;
    size_t count = n_ * per_qubit;
    if (count > std::numeric_limits<uint16_t>::max()) {
        throw ResourceError("code too large for the search tables (" + std::to_string(n_) + " qubits)");
    }

    size_t g = code.generators.size();
    syndromes_.words = words_for(g);
    syndromes_.data.assign(count * syndromes_.words, 0);

    std::mt19937_64 rng(kHashSeed);
    std::vector<uint64_t> gen_keys(g);
    for (auto &key : gen_keys) {
        key = rng();
    }

    const auto &logicals = checker.logicals();
    for (size_t q = 0; q < n_; q++) {
        for (size_t l = 0; l < per_qubit; l++) {
            char letter = model == ErrorModel::kFull ? kFullLetters[l] : kXZLetters[l];
            PauliOperator single(n_);
            single.set_letter(q, letter);
            qubit_.push_back(static_cast<uint32_t>(q));
            letter_.push_back(letter);
            size_t atom = qubit_.size() - 1;
            uint64_t h = 0;
            for (size_t i = 0; i < g; i++) {
                if (!commutes(single, code.generators[i].op)) {
                    syndromes_.row(atom)[i >> 6] |= uint64_t{1} << (i & 63);
                    h ^= gen_keys[i];
                }
            }
            hash_.push_back(h);
            uint64_t lb = 0;
            for (size_t j = 0; j < logicals.size(); j++) {
                if (!commutes(single, logicals[j].xbar)) {
                    lb |= uint64_t{1} << (2 * j);
                }
                if (!commutes(single, logicals[j].zbar)) {
                    lb |= uint64_t{1} << (2 * j + 1);
                }
            }
            lbits_.push_back(lb);
        }
    }
}

PauliOperator AtomTable::to_operator(std::span<const uint16_t> atoms) const {
    PauliOperator out(n_);
    for (uint16_t a : atoms) {
        PauliOperator single(n_);
        single.set_letter(qubit_[a], letter_[a]);
        out *= single;
    }
    return out;
}

uint64_t all_logicals_mask(size_t k) {
    if (k > 32) {
        throw ResourceError("at most 32 logical qubits are supported, got " + std::to_string(k));
    }
    return k == 32 ? ~uint64_t{0} : (uint64_t{1} << (2 * k)) - 1;
}

uint64_t logical_mask(size_t index) {
    if (index >= 32) {
        throw ResourceError("logical index " + std::to_string(index) + " exceeds the supported 32");
    }
    return uint64_t{3} << (2 * index);
}

double seconds_since(std::chrono::steady_clock::time_point start) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

}  // namespace dislo::detail

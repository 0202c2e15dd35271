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

#include <stdexcept>

namespace dislo {

BitVector pack_symplectic(const PauliOperator &p) {
    size_t n = p.num_qubits();
    BitVector out(2 * n);
    for (size_t q : p.xs().set_bits()) {
        out.set(q);
    }
    for (size_t q : p.zs().set_bits()) {
        out.set(n + q);
    }
    return out;
}

PauliOperator unpack_symplectic(const BitVector &v) {
    if (v.size() % 2) {
        throw std::invalid_argument("symplectic vector must have even length");
    }
    size_t n = v.size() / 2;
    BitVector xs(n);
    BitVector zs(n);
    for (size_t k : v.set_bits()) {
        if (k < n) {
            xs.set(k);
        } else {
            zs.set(k - n);
        }
    }
    return PauliOperator(std::move(xs), std::move(zs));
}

BitVector swap_halves(const BitVector &v) {
    size_t n = v.size() / 2;
    BitVector out(v.size());
    for (size_t k : v.set_bits()) {
        out.set(k < n ? k + n : k - n);
    }
    return out;
}

RowSpace::RowSpace(size_t num_bits) : num_bits_(num_bits) {
}

BitVector RowSpace::reduce(BitVector v) const {
    if (v.size() != num_bits_) {
        throw std::invalid_argument("row length mismatch in RowSpace::reduce");
    }
    for (size_t i = 0; i < rows_.size(); i++) {
        if (v[pivots_[i]]) {
            v ^= rows_[i];
        }
    }
    return v;
}

bool RowSpace::contains(const BitVector &v) const {
    return reduce(v).none();
}

bool RowSpace::insert(const BitVector &v) {
    BitVector r = reduce(v);
    size_t pivot = r.first_set();
    if (pivot == r.size()) {
        return false;
    }
    for (auto &row : rows_) {
        if (row[pivot]) {
            row ^= r;
        }
    }
    rows_.push_back(std::move(r));
    pivots_.push_back(pivot);
    return true;
}

size_t gf2_rank(const std::vector<BitVector> &rows) {
    if (rows.empty()) {
        return 0;
    }
    RowSpace space(rows.front().size());
    for (const auto &r : rows) {
        space.insert(r);
    }
    return space.rank();
}

std::vector<BitVector> gf2_nullspace(const std::vector<BitVector> &rows, size_t num_cols) {
    RowSpace space(num_cols);
    for (const auto &r : rows) {
        if (r.size() != num_cols) {
            throw std::invalid_argument("row length mismatch in gf2_nullspace");
        }
        space.insert(r);
    }
    std::vector<bool> is_pivot(num_cols, false);
    for (size_t p : space.pivots()) {
        is_pivot[p] = true;
    }
    // Fully reduced rows: row i reads x[pivot_i] + sum_{free f} row_i[f] x[f] = 0.
    std::vector<BitVector> basis;
    for (size_t f = 0; f < num_cols; f++) {
        if (is_pivot[f]) {
            continue;
        }
        BitVector v(num_cols);
        v.set(f);
        for (size_t i = 0; i < space.rank(); i++) {
            if (space.rows()[i][f]) {
                v.set(space.pivots()[i]);
            }
        }
        basis.push_back(std::move(v));
    }
    return basis;
}

}  // namespace dislo

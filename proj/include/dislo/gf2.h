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

#ifndef DISLO_GF2_H
#define DISLO_GF2_H

#include <cstddef>
#include <vector>

#include "dislo/bitvec.h"
#include "dislo/pauli.h"

namespace dislo {

/// Packs a Pauli operator into a 2n-bit vector laid out as [x-part | z-part].
BitVector pack_symplectic(const PauliOperator &p);
PauliOperator unpack_symplectic(const BitVector &v);
/// Swaps the halves, so that dot(swap_halves(a), b) is the symplectic product.
BitVector swap_halves(const BitVector &v);

/// Span of a set of GF(2) vectors kept in fully reduced echelon form.
///
/// Every stored row has a distinct pivot and zeros at every other row's
/// pivot, so reduction is independent of row order.
class RowSpace {
   public:
    explicit RowSpace(size_t num_bits);

    size_t num_bits() const {
        return num_bits_;
    }
    size_t rank() const {
        return rows_.size();
    }
    const std::vector<BitVector> &rows() const {
        return rows_;
    }
    const std::vector<size_t> &pivots() const {
        return pivots_;
    }

    /// Residual of v after clearing every pivot position.
    BitVector reduce(BitVector v) const;
    bool contains(const BitVector &v) const;
    /// Adds v to the span; returns false if v was already in it.
    bool insert(const BitVector &v);

   private:
    size_t num_bits_;
    std::vector<BitVector> rows_;
    std::vector<size_t> pivots_;
};

size_t gf2_rank(const std::vector<BitVector> &rows);

/// Basis of {v : dot(v, r) = 0 for every row r}; one vector per free column,
/// free columns taken in ascending order.
std::vector<BitVector> gf2_nullspace(const std::vector<BitVector> &rows, size_t num_cols);

}  // namespace dislo

#endif

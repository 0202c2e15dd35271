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

#ifndef DISLO_PAULI_H
#define DISLO_PAULI_H

#include <cstddef>
#include <string>
#include <string_view>

#include "dislo/bitvec.h"

namespace dislo {

/// How errors are charged when measuring the size of a Pauli operator.
enum class ErrorModel {
    /// X, Y and Z each cost 1.
    kFull,
    /// X and Z cost 1, Y costs 2 (an X error and a Z error on the same qubit).
    kXZOnly,
};

/// "FULL" or "XZ_ONLY".
std::string_view model_name(ErrorModel model);
/// Accepts "full", "FULL", "xz", "XZ_ONLY" and other case variants.
ErrorModel parse_model(std::string_view text);

/// An n-qubit Pauli operator with the global phase dropped.
///
/// Qubit q carries I/X/Z/Y according to (xs[q], zs[q]) = (0,0)/(1,0)/(0,1)/(1,1).
class PauliOperator {
   public:
    PauliOperator() = default;
    explicit PauliOperator(size_t num_qubits);
    PauliOperator(BitVector xs, BitVector zs);

    size_t num_qubits() const {
        return xs_.size();
    }
    const BitVector &xs() const {
        return xs_;
    }
    const BitVector &zs() const {
        return zs_;
    }

    /// One of 'I', 'X', 'Y', 'Z'.
    char letter(size_t q) const;
    void set_letter(size_t q, char letter);

    bool is_identity() const {
        return xs_.none() && zs_.none();
    }
    /// Qubits carrying a non-identity letter, ascending.
    std::vector<size_t> support() const;
    size_t y_count() const;

    PauliOperator &operator*=(const PauliOperator &other);

    bool operator==(const PauliOperator &other) const = default;
    bool operator<(const PauliOperator &other) const;

    std::string str() const;

   private:
    BitVector xs_;
    BitVector zs_;
};

/// Parses a string over {I, X, Y, Z, _}; '_' is a synonym for I.
PauliOperator parse_pauli(std::string_view text);
std::string format_pauli(const PauliOperator &p);

/// Projective product (phase discarded).
PauliOperator compose(const PauliOperator &p, const PauliOperator &q);
bool commutes(const PauliOperator &p, const PauliOperator &q);
size_t weight(const PauliOperator &p, ErrorModel model);

/// Cost of a single-qubit letter under a model (0 for identity).
inline size_t letter_cost(char letter, ErrorModel model) {
    if (letter == 'I') {
        return 0;
    }
    if (letter == 'Y' && model == ErrorModel::kXZOnly) {
        return 2;
    }
    return 1;
}

}  // namespace dislo

template <>
struct std::hash<dislo::PauliOperator> {
    size_t operator()(const dislo::PauliOperator &p) const {
        return p.xs().hash() * 31 + p.zs().hash();
    }
};

#endif

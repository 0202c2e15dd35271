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

#include "dislo/pauli.h"

#include <algorithm>
#include <cctype>
#include <stdexcept>

namespace dislo {

std::string_view model_name(ErrorModel model) {
    return model == ErrorModel::kFull ? "FULL" : "XZ_ONLY";
}

ErrorModel parse_model(std::string_view text) {
    std::string lower(text);
    std::transform(lower.begin(), lower.end(), lower.begin(), [](unsigned char c) {
        return static_cast<char>(std::tolower(c));
    });
    if (lower == "full") {
        return ErrorModel::kFull;
    }
    if (lower == "xz" || lower == "xz_only" || lower == "xz-only") {
        return ErrorModel::kXZOnly;
    }
    throw std::invalid_argument("unknown error model '" + std::string(text) + "' (expected full or xz)");
}

PauliOperator::PauliOperator(size_t num_qubits) : xs_(num_qubits), zs_(num_qubits) {
}

PauliOperator::PauliOperator(BitVector xs, BitVector zs) : xs_(std::move(xs)), zs_(std::move(zs)) {
    if (xs_.size() != zs_.size()) {
        throw std::invalid_argument("x and z parts of a Pauli operator must have the same length");
    }
}

char PauliOperator::letter(size_t q) const {
    static constexpr char kLetters[4] = {'I', 'X', 'Z', 'Y'};
    return kLetters[xs_[q] | (zs_[q] << 1)];
}

void PauliOperator::set_letter(size_t q, char letter) {
    switch (letter) {
        case 'I':
        case '_':
            xs_.set(q, false);
            zs_.set(q, false);
            break;
        case 'X':
            xs_.set(q, true);
            zs_.set(q, false);
            break;
        case 'Y':
            xs_.set(q, true);
            zs_.set(q, true);
            break;
        case 'Z':
            xs_.set(q, false);
            zs_.set(q, true);
            break;
        default:
            throw std::invalid_argument(std::string("not a Pauli letter: '") + letter + "'");
    }
}

std::vector<size_t> PauliOperator::support() const {
    return (xs_ | zs_).set_bits();
}

size_t PauliOperator::y_count() const {
    return (xs_ & zs_).popcount();
}

PauliOperator &PauliOperator::operator*=(const PauliOperator &other) {
    if (num_qubits() != other.num_qubits()) {
        throw std::invalid_argument(
            "Pauli length mismatch: " + std::to_string(num_qubits()) + " vs " + std::to_string(other.num_qubits()));
    }
    xs_ ^= other.xs_;
    zs_ ^= other.zs_;
    return *this;
}

bool PauliOperator::operator<(const PauliOperator &other) const {
    if (xs_ == other.xs_) {
        return zs_ < other.zs_;
    }
    return xs_ < other.xs_;
}

std::string PauliOperator::str() const {
    return format_pauli(*this);
}

PauliOperator parse_pauli(std::string_view text) {
    if (text.empty()) {
        throw std::invalid_argument("empty Pauli string");
    }
    PauliOperator result(text.size());
    for (size_t q = 0; q < text.size(); q++) {
        char c = text[q];
        if (c != 'I' && c != '_' && c != 'X' && c != 'Y' && c != 'Z') {
            throw std::invalid_argument(
                "invalid character '" + std::string(1, c) + "' at position " + std::to_string(q) +
                " of Pauli string (expected I, X, Y, Z or _)");
        }
        result.set_letter(q, c);
    }
    return result;
}

std::string format_pauli(const PauliOperator &p) {
    std::string out(p.num_qubits(), 'I');
    for (size_t q = 0; q < p.num_qubits(); q++) {
        out[q] = p.letter(q);
    }
    return out;
}

PauliOperator compose(const PauliOperator &p, const PauliOperator &q) {
    PauliOperator result = p;
    result *= q;
    return result;
}

bool commutes(const PauliOperator &p, const PauliOperator &q) {
    if (p.num_qubits() != q.num_qubits()) {
        throw std::invalid_argument(
            "Pauli length mismatch: " + std::to_string(p.num_qubits()) + " vs " + std::to_string(q.num_qubits()));
    }
    return dot(p.xs(), q.zs()) == dot(p.zs(), q.xs());
}

size_t weight(const PauliOperator &p, ErrorModel model) {
    if (model == ErrorModel::kFull) {
        return (p.xs() | p.zs()).popcount();
    }
    return p.xs().popcount() + p.zs().popcount();
}

}  // namespace dislo

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

#ifndef DISLO_CODECHECK_H
#define DISLO_CODECHECK_H

#include <cstddef>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "dislo/gf2.h"
#include "dislo/stabilizer_code.h"
#include "json.hpp"

namespace dislo {

/// Raised when an operation needs a valid stabilizer group and gets something else.
class InvalidCodeError : public std::invalid_argument {
   public:
    using std::invalid_argument::invalid_argument;
};

struct ValidationReport {
    bool ok = true;
    size_t n = 0;
    size_t num_generators = 0;
    /// Rank over the 2n-bit symplectic representation.
    size_t rank = 0;
    /// Anticommuting generator index pairs, i < j.
    std::vector<std::pair<size_t, size_t>> offending;
    /// Generators whose length differs from n.
    std::vector<size_t> wrong_length;

    size_t logical_count() const {
        return n - rank;
    }
};

ValidationReport validate(const StabilizerCode &code);
nlohmann::json report_to_json(const ValidationReport &report);
std::string format_report(const ValidationReport &report);

struct LogicalPair {
    PauliOperator xbar;
    PauliOperator zbar;
    size_t index = 0;
};

enum class ErrorClassKind { kDetected, kStabilizer, kLogical };

std::string_view class_name(ErrorClassKind kind);

struct LogicalAction {
    bool anticommutes_xbar = false;
    bool anticommutes_zbar = false;

    bool nontrivial() const {
        return anticommutes_xbar || anticommutes_zbar;
    }
    bool operator==(const LogicalAction &) const = default;
};

struct ErrorClass {
    ErrorClassKind kind = ErrorClassKind::kStabilizer;
    /// One entry per encoded qubit; filled only for kLogical.
    std::vector<LogicalAction> logical_action;
};

/// Precomputed elimination state for one code. Immutable after construction,
/// so concurrent queries are safe.
class CodeChecker {
   public:
    /// Throws InvalidCodeError unless the generators have length n and commute.
    explicit CodeChecker(const StabilizerCode &code);

    size_t n() const {
        return n_;
    }
    size_t k() const {
        return n_ - stabilizers_.rank();
    }
    const RowSpace &stabilizer_space() const {
        return stabilizers_;
    }
    const std::vector<LogicalPair> &logicals() const {
        return logicals_;
    }

    BitVector syndrome(const PauliOperator &e) const;
    bool in_stabilizer_group(const PauliOperator &e) const;
    ErrorClass classify(const PauliOperator &e) const;

   private:
    size_t n_;
    std::vector<PauliOperator> generators_;
    RowSpace stabilizers_;
    std::vector<LogicalPair> logicals_;

    void check_length(const PauliOperator &e) const;
};

size_t logical_count(const StabilizerCode &code);
std::vector<LogicalPair> extract_logicals(const StabilizerCode &code);
BitVector syndrome(const StabilizerCode &code, const PauliOperator &e);
ErrorClass classify(const StabilizerCode &code, const PauliOperator &e);

}  // namespace dislo

#endif

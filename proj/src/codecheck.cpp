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

#include "dislo/codecheck.h"

#include <sstream>

namespace dislo {

namespace {

bool symplectic_product(const BitVector &a, const BitVector &b) {
    return dot(a, swap_halves(b));
}

// Normalizer modulo stabilizer span, paired up so that xbar_i and zbar_j
// anticommute exactly when i == j.
std::vector<LogicalPair> pair_logicals(size_t n, const RowSpace &stabilizers, const std::vector<PauliOperator> &gens) {
    std::vector<BitVector> swapped;
    swapped.reserve(gens.size());
    for (const auto &g : gens) {
        swapped.push_back(swap_halves(pack_symplectic(g)));
    }
    RowSpace span = stabilizers;
    std::vector<BitVector> reps;
    for (const auto &v : gf2_nullspace(swapped, 2 * n)) {
        if (span.insert(v)) {
            reps.push_back(stabilizers.reduce(v));
        }
    }

    std::vector<LogicalPair> out;
    while (!reps.empty()) {
        BitVector a = reps.front();
        reps.erase(reps.begin());
        size_t partner = reps.size();
        for (size_t i = 0; i < reps.size(); i++) {
            if (symplectic_product(a, reps[i])) {
                partner = i;
                break;
            }
        }
        if (partner == reps.size()) {
            throw std::logic_error("normalizer element commutes with every other logical representative");
        }
        BitVector b = reps[partner];
        reps.erase(reps.begin() + static_cast<std::ptrdiff_t>(partner));
        for (auto &c : reps) {
            bool ca = symplectic_product(c, a);
            bool cb = symplectic_product(c, b);
            if (cb) {
                c ^= a;
            }
            if (ca) {
                c ^= b;
            }
            c = stabilizers.reduce(c);
        }
        out.push_back({unpack_symplectic(a), unpack_symplectic(b), out.size()});
    }
    return out;
}

}  // namespace

std::string_view class_name(ErrorClassKind kind) {
    switch (kind) {
        case ErrorClassKind::kDetected:
            return "DETECTED";
        case ErrorClassKind::kStabilizer:
            return "STABILIZER";
        case ErrorClassKind::kLogical:
            return "LOGICAL";
    }
    return "DETECTED";
}

ValidationReport validate(const StabilizerCode &code) {
    ValidationReport report;
    report.n = code.n;
    report.num_generators = code.generators.size();
    std::vector<size_t> good;
    for (size_t i = 0; i < code.generators.size(); i++) {
        if (code.generators[i].op.num_qubits() != code.n) {
            report.wrong_length.push_back(i);
        } else {
            good.push_back(i);
        }
    }
    for (size_t a = 0; a < good.size(); a++) {
        for (size_t b = a + 1; b < good.size(); b++) {
            if (!commutes(code.generators[good[a]].op, code.generators[good[b]].op)) {
                report.offending.emplace_back(good[a], good[b]);
            }
        }
    }
    std::vector<BitVector> rows;
    rows.reserve(good.size());
    for (size_t i : good) {
        rows.push_back(pack_symplectic(code.generators[i].op));
    }
    report.rank = gf2_rank(rows);
    report.ok = report.offending.empty() && report.wrong_length.empty();
    return report;
}

nlohmann::json report_to_json(const ValidationReport &report) {
    nlohmann::json pairs = nlohmann::json::array();
    for (const auto &[i, j] : report.offending) {
        pairs.push_back({i, j});
    }
    nlohmann::json j = {
        {"ok", report.ok},
        {"n", report.n},
        {"num_generators", report.num_generators},
        {"rank", report.rank},
        {"offending_pairs", pairs},
        {"wrong_length", report.wrong_length},
    };
    if (report.ok) {
        j["k"] = report.logical_count();
    }
    return j;
}

std::string format_report(const ValidationReport &report) {
    std::ostringstream out;
    out << "valid: " << (report.ok ? "yes" : "no") << "\n";
    out << "qubits: " << report.n << "\n";
    out << "generators: " << report.num_generators << "\n";
    out << "rank: " << report.rank << "\n";
    if (report.ok) {
        out << "logical qubits: " << report.logical_count() << "\n";
    }
    for (size_t i : report.wrong_length) {
        out << "generator " << i << " has the wrong length\n";
    }
    for (const auto &[i, j] : report.offending) {
        out << "generators " << i << " and " << j << " anticommute\n";
    }
    return out.str();
}

CodeChecker::CodeChecker(const StabilizerCode &code) : n_(code.n), stabilizers_(2 * code.n) {
    ValidationReport report = validate(code);
    if (!report.ok) {
        std::string why = report.wrong_length.empty()
                              ? "generators " + std::to_string(report.offending[0].first) + " and " +
                                    std::to_string(report.offending[0].second) + " anticommute"
                              : "generator " + std::to_string(report.wrong_length[0]) + " has the wrong length";
        throw InvalidCodeError("invalid stabilizer code: " + why);
    }
    generators_.reserve(code.generators.size());
    for (const auto &g : code.generators) {
        generators_.push_back(g.op);
        stabilizers_.insert(pack_symplectic(g.op));
    }
    logicals_ = pair_logicals(n_, stabilizers_, generators_);
}

void CodeChecker::check_length(const PauliOperator &e) const {
    if (e.num_qubits() != n_) {
        throw std::invalid_argument(
            "error has " + std::to_string(e.num_qubits()) + " qubits but the code has " + std::to_string(n_));
    }
}

BitVector CodeChecker::syndrome(const PauliOperator &e) const {
    check_length(e);
    BitVector out(generators_.size());
    for (size_t i = 0; i < generators_.size(); i++) {
        if (!commutes(e, generators_[i])) {
            out.set(i);
        }
    }
    return out;
}

bool CodeChecker::in_stabilizer_group(const PauliOperator &e) const {
    check_length(e);
    return stabilizers_.contains(pack_symplectic(e));
}

ErrorClass CodeChecker::classify(const PauliOperator &e) const {
    ErrorClass out;
    if (syndrome(e).any()) {
        out.kind = ErrorClassKind::kDetected;
        return out;
    }
    if (in_stabilizer_group(e)) {
        out.kind = ErrorClassKind::kStabilizer;
        return out;
    }
    out.kind = ErrorClassKind::kLogical;
    for (const auto &pair : logicals_) {
        out.logical_action.push_back({!commutes(e, pair.xbar), !commutes(e, pair.zbar)});
    }
    return out;
}

size_t logical_count(const StabilizerCode &code) {
    ValidationReport report = validate(code);
    if (!report.ok) {
        throw InvalidCodeError("logical_count needs a valid code: " + format_report(report));
    }
    return report.logical_count();
}

std::vector<LogicalPair> extract_logicals(const StabilizerCode &code) {
    CodeChecker checker(code);
    if (checker.k() == 0) {
        throw InvalidCodeError("code encodes no logical qubits");
    }
    return checker.logicals();
}

BitVector syndrome(const StabilizerCode &code, const PauliOperator &e) {
    if (e.num_qubits() != code.n) {
        throw std::invalid_argument(
            "error has " + std::to_string(e.num_qubits()) + " qubits but the code has " + std::to_string(code.n));
    }
    BitVector out(code.generators.size());
    for (size_t i = 0; i < code.generators.size(); i++) {
        if (!commutes(e, code.generators[i].op)) {
            out.set(i);
        }
    }
    return out;
}

ErrorClass classify(const StabilizerCode &code, const PauliOperator &e) {
    return CodeChecker(code).classify(e);
}

}  // namespace dislo

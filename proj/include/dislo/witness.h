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

#ifndef DISLO_WITNESS_H
#define DISLO_WITNESS_H

#include <filesystem>
#include <stdexcept>
#include <vector>

#include "dislo/codecheck.h"
#include "json.hpp"

namespace dislo {

/// No cap completion exists inside the search neighbourhood.
class WitnessError : public std::runtime_error {
   public:
    using std::runtime_error::runtime_error;
};

struct ErrorChain {
    PauliOperator error;
    size_t dislocation = 0;
    /// Length of the dislocation the chain runs along.
    int L = 0;
    /// Dislocation-line qubits, ordered from the left twist to the right twist.
    std::vector<size_t> body_qubits;
    /// Cap qubits of the left and right endpoints.
    std::vector<size_t> left_cap;
    std::vector<size_t> right_cap;
    size_t weight_full = 0;
    size_t weight_xz = 0;
    ErrorClass classification;

    std::vector<size_t> cap_qubits() const;
};

struct WitnessOptions {
    /// Graph radius around each twist searched for cap qubits; 2 or 3.
    int radius = 2;
    size_t max_cap_per_endpoint = 8;
};

ErrorChain build_y_highway(const StabilizerCode &code, size_t dislocation, const WitnessOptions &options = {});

struct WitnessReport {
    bool undetected = false;
    ErrorClass classification;
    size_t weight_full = 0;
    size_t weight_xz = 0;
    int L = 0;
    long margin = 0;
    size_t syndrome_weight = 0;
    bool body_all_y = false;
    /// Every cap qubit is within `radius` of a twist qubit of its dislocation.
    bool caps_local = false;
};

WitnessReport verify_witness(const StabilizerCode &code, const ErrorChain &chain, int radius = 2);

nlohmann::json witness_report_to_json(const WitnessReport &report);
std::string format_witness_report(const WitnessReport &report);

nlohmann::json chain_to_json(const StabilizerCode &code, const ErrorChain &chain);
/// Rebuilds a chain from its JSON form; weights and classification are
/// recomputed against `code`.
ErrorChain chain_from_json(const StabilizerCode &code, const nlohmann::json &j);

ErrorChain load_chain(const std::filesystem::path &path, const StabilizerCode &code);
void save_chain(const std::filesystem::path &path, const StabilizerCode &code, const ErrorChain &chain);

/// Qubits within `radius` steps of the twist pentagons of a dislocation, where
/// two qubits are adjacent when some generator acts on both.
std::vector<size_t> twist_neighbourhood(const StabilizerCode &code, size_t dislocation, bool left, int radius);

}  // namespace dislo

#endif

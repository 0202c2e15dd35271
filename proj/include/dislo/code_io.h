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

#ifndef DISLO_CODE_IO_H
#define DISLO_CODE_IO_H

#include <filesystem>
#include <stdexcept>
#include <string>

#include "dislo/stabilizer_code.h"
#include "json.hpp"

namespace dislo {

/// Malformed code or chain description.
class FormatError : public std::runtime_error {
   public:
    using std::runtime_error::runtime_error;
};

/// A file could not be read or written.
class IoError : public std::runtime_error {
   public:
    using std::runtime_error::runtime_error;
};

nlohmann::json spec_to_json(const LatticeSpec &spec);
LatticeSpec spec_from_json(const nlohmann::json &j);

nlohmann::json code_to_json(const StabilizerCode &code);
/// Accepts `coords` either as an array indexed by qubit or as an object keyed
/// by the decimal qubit index.
StabilizerCode code_from_json(const nlohmann::json &j);

std::string read_text_file(const std::filesystem::path &path);
void write_text_file(const std::filesystem::path &path, const std::string &text);

StabilizerCode load_code(const std::filesystem::path &path);
void save_code(const std::filesystem::path &path, const StabilizerCode &code);

}  // namespace dislo

#endif

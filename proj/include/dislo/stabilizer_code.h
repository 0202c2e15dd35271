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

#ifndef DISLO_STABILIZER_CODE_H
#define DISLO_STABILIZER_CODE_H

#include <compare>
#include <cstddef>
#include <optional>
#include <string_view>
#include <vector>

#include "dislo/pauli.h"

namespace dislo {

enum class GeneratorKind {
    kZPlaquette,
    kXPlaquette,
    kDislocation,
    kTwist,
    kBoundary,
    /// Hand-written generators of externally supplied codes.
    kOther,
};

std::string_view kind_name(GeneratorKind kind);
GeneratorKind parse_kind(std::string_view text);

struct Generator {
    PauliOperator op;
    GeneratorKind kind = GeneratorKind::kOther;
};

struct Coord {
    int row = 0;
    int col = 0;
    auto operator<=>(const Coord &) const = default;
};

enum class Boundary {
    /// Every boundary is X-type; a plain patch encodes nothing.
    kUniform,
    /// X-type top/bottom, Z-type left/right; a plain patch encodes one qubit.
    kMixed,
};

std::string_view boundary_name(Boundary boundary);
Boundary parse_boundary(std::string_view text);

/// A horizontal dislocation of `length` slanted cells in cell row `row`.
///
/// The slanted cells occupy cell columns [col_start, col_start + length); the
/// twists at either end extend one column further on the left and two on the
/// right (in vertex columns).
struct DislocationSpec {
    int row = 0;
    int col_start = 0;
    int length = 1;
    bool operator==(const DislocationSpec &) const = default;
};

struct LatticeSpec {
    int width = 0;
    int height = 0;
    std::vector<DislocationSpec> dislocations;
    int padding = 2;
    Boundary boundary = Boundary::kUniform;
    /// Allows configurations with fewer than four twists.
    bool boundary_assisted = false;
    bool operator==(const LatticeSpec &) const = default;
};

/// Qubits, generators and (optionally) the geometry they came from.
///
/// Qubit indices of lattice-built codes are row-major: q = row * width + col.
struct StabilizerCode {
    size_t n = 0;
    std::vector<Coord> coords;
    std::vector<Generator> generators;
    std::optional<LatticeSpec> spec;

    size_t num_generators() const {
        return generators.size();
    }
    bool has_coords() const {
        return coords.size() == n;
    }
};

}  // namespace dislo

#endif

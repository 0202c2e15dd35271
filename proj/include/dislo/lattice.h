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

#ifndef DISLO_LATTICE_H
#define DISLO_LATTICE_H

#include <stdexcept>
#include <vector>

#include "dislo/stabilizer_code.h"

namespace dislo {

/// Raised for lattice parameters that do not describe a buildable code.
class GeometryError : public std::invalid_argument {
   public:
    using std::invalid_argument::invalid_argument;
};

/// Checkerboard patch of width x height data qubits on grid vertices.
StabilizerCode build_plain_patch(int width, int height, Boundary boundary);

/// Throws GeometryError describing the first problem found.
void validate_spec(const LatticeSpec &spec);

/// Patch with dislocation lines, each terminated by two weight-5 twist checks.
StabilizerCode build_dislocation_code(const LatticeSpec &spec);

/// Two stacked dislocations of length L, `separation` cell rows apart
/// (defaults to L), with `padding` cells to every boundary.
LatticeSpec default_dislocation_spec(int length, int padding = 2, int separation = -1);

/// Cells and qubits that make up one dislocation line, in grid coordinates.
struct DislocationGeometry {
    /// Pentagon corners of the twist at the left end and at the right end.
    std::vector<Coord> left_twist;
    std::vector<Coord> right_twist;
    /// Corners of each slanted cell, left to right.
    std::vector<std::vector<Coord>> slanted_cells;
    /// Line qubits from the left twist to the right twist.
    std::vector<Coord> line;
};

DislocationGeometry dislocation_geometry(const LatticeSpec &spec, size_t index);

/// Qubits lying on dislocation `index`, ordered from its left twist to its right twist.
std::vector<size_t> qubit_on_dislocation(const StabilizerCode &code, size_t index);

}  // namespace dislo

#endif

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

#include "dislo/lattice.h"

#include <algorithm>
#include <cctype>
#include <string>

#include "dislo/gf2.h"

namespace dislo {

namespace {

std::string upper(std::string_view text) {
    std::string out(text);
    std::transform(out.begin(), out.end(), out.begin(), [](unsigned char c) {
        return static_cast<char>(std::toupper(c));
    });
    return out;
}

int color_of(int row, int col) {
    return ((row + col) % 2 + 2) % 2;
}

// Light cells (colour 0) are Z checks, dark cells (colour 1) are X checks.
char letter_of(int color) {
    return color ? 'X' : 'Z';
}

struct Cell {
    std::vector<Coord> corners;
    std::vector<char> letters;
    GeneratorKind kind;
};

class LatticeBuilder {
   public:
    explicit LatticeBuilder(const LatticeSpec &spec) : spec_(spec) {
    }

    StabilizerCode build() {
        StabilizerCode code;
        code.n = static_cast<size_t>(spec_.width) * spec_.height;
        code.coords.reserve(code.n);
        for (int r = 0; r < spec_.height; r++) {
            for (int c = 0; c < spec_.width; c++) {
                code.coords.push_back({r, c});
            }
        }

        std::vector<Cell> cells;
        std::vector<size_t> twist_slots;
        for (int r = -1; r < spec_.height; r++) {
            for (int c = -1; c < spec_.width; c++) {
                emit_cell(r, c, cells, twist_slots);
            }
        }

        code.generators.reserve(cells.size());
        for (const auto &cell : cells) {
            code.generators.push_back({to_operator(cell), cell.kind});
        }
        for (size_t slot : twist_slots) {
            code.generators[slot].op = solve_twist(code, slot, cells[slot].corners);
        }
        code.spec = spec_;
        return code;
    }

   private:
    const LatticeSpec &spec_;

    bool inside(const Coord &p) const {
        return p.row >= 0 && p.row < spec_.height && p.col >= 0 && p.col < spec_.width;
    }

    size_t index(const Coord &p) const {
        return static_cast<size_t>(p.row) * spec_.width + p.col;
    }

    PauliOperator to_operator(const Cell &cell) const {
        PauliOperator op(static_cast<size_t>(spec_.width) * spec_.height);
        for (size_t k = 0; k < cell.corners.size(); k++) {
            op.set_letter(index(cell.corners[k]), cell.letters[k]);
        }
        return op;
    }

    const DislocationSpec *dislocation_at(int row, int col) const {
        for (const auto &d : spec_.dislocations) {
            if (d.row == row && col >= d.col_start - 1 && col <= d.col_start + d.length + 1) {
                return &d;
            }
        }
        return nullptr;
    }

    void emit_cell(int r, int c, std::vector<Cell> &cells, std::vector<size_t> &twist_slots) const {
        bool interior = r >= 0 && r < spec_.height - 1 && c >= 0 && c < spec_.width - 1;
        if (interior) {
            if (const DislocationSpec *d = dislocation_at(r, c)) {
                emit_dislocation_cell(*d, c, cells, twist_slots);
                return;
            }
            char l = letter_of(color_of(r, c));
            cells.push_back(
                {{{r, c}, {r, c + 1}, {r + 1, c}, {r + 1, c + 1}},
                 std::vector<char>(4, l),
                 l == 'Z' ? GeneratorKind::kZPlaquette : GeneratorKind::kXPlaquette});
            return;
        }

        std::vector<Coord> corners;
        for (Coord p : {Coord{r, c}, Coord{r, c + 1}, Coord{r + 1, c}, Coord{r + 1, c + 1}}) {
            if (inside(p)) {
                corners.push_back(p);
            }
        }
        if (corners.empty()) {
            return;
        }
        int color = color_of(r, c);
        if (spec_.boundary == Boundary::kUniform) {
            if (color != 1) {
                return;
            }
        } else {
            if (corners.size() == 1) {
                return;
            }
            bool top_or_bottom = r == -1 || r == spec_.height - 1;
            if (top_or_bottom ? color != 1 : color != 0) {
                return;
            }
        }
        cells.push_back({corners, std::vector<char>(corners.size(), letter_of(color)), GeneratorKind::kBoundary});
    }

    // Replaced cells in row R run over columns [a-1, a+L+1]; the left twist is
    // emitted at a-1, the slanted cells at a..a+L-1 and the right twist at a+L.
    void emit_dislocation_cell(
        const DislocationSpec &d, int c, std::vector<Cell> &cells, std::vector<size_t> &twist_slots) const {
        int R = d.row;
        int a = d.col_start;
        int b = d.col_start + d.length;
        if (c == a - 1) {
            twist_slots.push_back(cells.size());
            cells.push_back(
                {{{R, a - 1}, {R, a}, {R + 1, a - 1}, {R + 1, a}, {R + 1, a + 1}},
                 std::vector<char>(5, 'I'),
                 GeneratorKind::kTwist});
        } else if (c >= a && c < b) {
            char top = letter_of(color_of(R, c));
            char bottom = letter_of(color_of(R, c + 1));
            cells.push_back(
                {{{R, c}, {R, c + 1}, {R + 1, c + 1}, {R + 1, c + 2}},
                 {top, top, bottom, bottom},
                 GeneratorKind::kDislocation});
        } else if (c == b) {
            twist_slots.push_back(cells.size());
            cells.push_back(
                {{{R, b}, {R, b + 1}, {R, b + 2}, {R + 1, b + 1}, {R + 1, b + 2}},
                 std::vector<char>(5, 'I'),
                 GeneratorKind::kTwist});
        }
    }

    // Picks the first single-Y weight-5 assignment on the merged cell that
    // commutes with every other generator. Twists are solved in order, so a
    // later twist also has to commute with the earlier ones.
    PauliOperator solve_twist(const StabilizerCode &code, size_t slot, const std::vector<Coord> &corners) const {
        static constexpr char kLetters[3] = {'X', 'Z', 'Y'};
        std::vector<const PauliOperator *> others;
        for (size_t g = 0; g < code.generators.size(); g++) {
            if (g != slot && !code.generators[g].op.is_identity()) {
                others.push_back(&code.generators[g].op);
            }
        }
        for (int combo = 0; combo < 243; combo++) {
            PauliOperator candidate(code.n);
            int y_count = 0;
            int rest = combo;
            for (const auto &p : corners) {
                char l = kLetters[rest % 3];
                rest /= 3;
                y_count += l == 'Y';
                candidate.set_letter(index(p), l);
            }
            if (y_count != 1) {
                continue;
            }
            bool ok = std::all_of(others.begin(), others.end(), [&](const PauliOperator *g) {
                return commutes(candidate, *g);
            });
            if (ok) {
                return candidate;
            }
        }
        throw GeometryError(
            "no single-Y twist check commutes with its neighbours at (" + std::to_string(corners[0].row) + ", " +
            std::to_string(corners[0].col) + "); defects are probably too close together");
    }
};

struct ColumnSpan {
    int lo;
    int hi;
};

ColumnSpan replaced_cells(const DislocationSpec &d) {
    return {d.col_start - 1, d.col_start + d.length + 1};
}

void check_commutation(const StabilizerCode &code) {
    for (size_t i = 0; i < code.generators.size(); i++) {
        for (size_t j = i + 1; j < code.generators.size(); j++) {
            if (!commutes(code.generators[i].op, code.generators[j].op)) {
                throw std::logic_error(
                    "lattice construction produced anticommuting generators " + std::to_string(i) + " and " +
                    std::to_string(j));
            }
        }
    }
}

}  // namespace

std::string_view kind_name(GeneratorKind kind) {
    switch (kind) {
        case GeneratorKind::kZPlaquette:
            return "Z_PLAQUETTE";
        case GeneratorKind::kXPlaquette:
            return "X_PLAQUETTE";
        case GeneratorKind::kDislocation:
            return "DISLOCATION";
        case GeneratorKind::kTwist:
            return "TWIST";
        case GeneratorKind::kBoundary:
            return "BOUNDARY";
        case GeneratorKind::kOther:
            return "OTHER";
    }
    return "OTHER";
}

GeneratorKind parse_kind(std::string_view text) {
    std::string u = upper(text);
    for (auto k :
         {GeneratorKind::kZPlaquette,
          GeneratorKind::kXPlaquette,
          GeneratorKind::kDislocation,
          GeneratorKind::kTwist,
          GeneratorKind::kBoundary,
          GeneratorKind::kOther}) {
        if (u == kind_name(k)) {
            return k;
        }
    }
    throw std::invalid_argument("unknown generator kind '" + std::string(text) + "'");
}

std::string_view boundary_name(Boundary boundary) {
    return boundary == Boundary::kUniform ? "UNIFORM" : "MIXED";
}

Boundary parse_boundary(std::string_view text) {
    std::string u = upper(text);
    if (u == "UNIFORM") {
        return Boundary::kUniform;
    }
    if (u == "MIXED") {
        return Boundary::kMixed;
    }
    throw std::invalid_argument("unknown boundary '" + std::string(text) + "' (expected uniform or mixed)");
}

StabilizerCode build_plain_patch(int width, int height, Boundary boundary) {
    if (width < 2 || height < 2) {
        throw GeometryError(
            "patch dimensions must be at least 2x2, got " + std::to_string(width) + "x" + std::to_string(height));
    }
    LatticeSpec spec;
    spec.width = width;
    spec.height = height;
    spec.padding = 1;
    spec.boundary = boundary;
    return LatticeBuilder(spec).build();
}

void validate_spec(const LatticeSpec &spec) {
    if (spec.width < 2 || spec.height < 2) {
        throw GeometryError(
            "width and height must be at least 2, got " + std::to_string(spec.width) + "x" +
            std::to_string(spec.height));
    }
    if (spec.padding < 1) {
        throw GeometryError("padding must be at least 1, got " + std::to_string(spec.padding));
    }
    for (size_t i = 0; i < spec.dislocations.size(); i++) {
        const auto &d = spec.dislocations[i];
        std::string name = "dislocation " + std::to_string(i);
        if (d.length < 1) {
            throw GeometryError(name + ": length must be at least 1, got " + std::to_string(d.length));
        }
        int left = d.col_start - 1;
        int right = d.col_start + d.length + 2;
        if (left < spec.padding || spec.width - 1 - right < spec.padding) {
            throw GeometryError(
                name + ": twists span vertex columns " + std::to_string(left) + ".." + std::to_string(right) +
                ", which leaves fewer than " + std::to_string(spec.padding) + " padding cells in a width-" +
                std::to_string(spec.width) + " patch");
        }
        if (d.row < spec.padding || spec.height - 1 - (d.row + 1) < spec.padding) {
            throw GeometryError(
                name + ": row " + std::to_string(d.row) + " leaves fewer than " + std::to_string(spec.padding) +
                " padding cells in a height-" + std::to_string(spec.height) + " patch");
        }
        for (size_t j = 0; j < i; j++) {
            const auto &e = spec.dislocations[j];
            if (std::abs(d.row - e.row) > 1) {
                continue;
            }
            ColumnSpan s = replaced_cells(d);
            ColumnSpan t = replaced_cells(e);
            bool separated = s.hi + 1 < t.lo || t.hi + 1 < s.lo;
            if (!separated) {
                throw GeometryError(
                    "dislocations " + std::to_string(j) + " and " + std::to_string(i) + " overlap or touch");
            }
        }
    }
}

StabilizerCode build_dislocation_code(const LatticeSpec &spec) {
    validate_spec(spec);
    if (spec.dislocations.empty()) {
        throw GeometryError("a dislocation code needs at least one dislocation");
    }
    if (spec.dislocations.size() < 2 && !spec.boundary_assisted) {
        throw GeometryError(
            "a single dislocation has only two twists; use two dislocations or declare boundary-assisted encoding");
    }
    StabilizerCode code = LatticeBuilder(spec).build();
    check_commutation(code);

    std::vector<BitVector> rows;
    rows.reserve(code.generators.size());
    for (const auto &g : code.generators) {
        rows.push_back(pack_symplectic(g.op));
    }
    if (gf2_rank(rows) >= code.n) {
        throw GeometryError("the dislocation configuration encodes no logical qubit");
    }
    return code;
}

LatticeSpec default_dislocation_spec(int length, int padding, int separation) {
    if (length < 1) {
        throw GeometryError("dislocation length must be at least 1, got " + std::to_string(length));
    }
    if (separation < 0) {
        separation = std::max(length, 2);
    }
    if (separation < 1) {
        throw GeometryError("dislocation separation must be at least 1");
    }
    LatticeSpec spec;
    spec.padding = padding;
    spec.width = 2 * padding + length + 4;
    int second_row = padding + 1 + separation;
    spec.height = second_row + 2 + padding;
    spec.dislocations = {{padding, padding + 1, length}, {second_row, padding + 1, length}};
    spec.boundary = Boundary::kUniform;
    return spec;
}

DislocationGeometry dislocation_geometry(const LatticeSpec &spec, size_t index) {
    if (index >= spec.dislocations.size()) {
        throw std::out_of_range(
            "dislocation index " + std::to_string(index) + " out of range (" +
            std::to_string(spec.dislocations.size()) + " dislocations)");
    }
    const auto &d = spec.dislocations[index];
    int R = d.row;
    int a = d.col_start;
    int b = d.col_start + d.length;
    DislocationGeometry geo;
    geo.left_twist = {{R, a - 1}, {R, a}, {R + 1, a - 1}, {R + 1, a}, {R + 1, a + 1}};
    geo.right_twist = {{R, b}, {R, b + 1}, {R, b + 2}, {R + 1, b + 1}, {R + 1, b + 2}};
    for (int c = a; c < b; c++) {
        geo.slanted_cells.push_back({{R, c}, {R, c + 1}, {R + 1, c + 1}, {R + 1, c + 2}});
    }
    for (int c = a + 1; c <= b; c++) {
        geo.line.push_back({R + 1, c});
    }
    return geo;
}

std::vector<size_t> qubit_on_dislocation(const StabilizerCode &code, size_t index) {
    if (!code.spec) {
        throw std::invalid_argument("code was not built from a lattice spec");
    }
    DislocationGeometry geo = dislocation_geometry(*code.spec, index);
    std::vector<size_t> out;
    out.reserve(geo.line.size());
    for (const auto &p : geo.line) {
        out.push_back(static_cast<size_t>(p.row) * code.spec->width + p.col);
    }
    return out;
}

}  // namespace dislo

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

#include "dislo/code_io.h"

#include <fstream>
#include <sstream>

namespace dislo {

using nlohmann::json;

namespace {

const json &require(const json &j, const char *key, const char *where) {
    auto it = j.find(key);
    if (it == j.end()) {
        throw FormatError(std::string(where) + ": missing field '" + key + "'");
    }
    return *it;
}

int require_int(const json &j, const char *key, const char *where) {
    const json &v = require(j, key, where);
    if (!v.is_number_integer()) {
        throw FormatError(std::string(where) + ": field '" + key + "' must be an integer");
    }
    return v.get<int>();
}

Coord parse_coord(const json &j, size_t q) {
    if (!j.is_array() || j.size() != 2 || !j[0].is_number_integer() || !j[1].is_number_integer()) {
        throw FormatError("coords[" + std::to_string(q) + "] must be a [row, col] pair of integers");
    }
    return {j[0].get<int>(), j[1].get<int>()};
}

}  // namespace

json spec_to_json(const LatticeSpec &spec) {
    json dislocations = json::array();
    for (const auto &d : spec.dislocations) {
        dislocations.push_back({{"row", d.row}, {"col_start", d.col_start}, {"length", d.length}});
    }
    return {
        {"width", spec.width},
        {"height", spec.height},
        {"padding", spec.padding},
        {"boundary", std::string(boundary_name(spec.boundary))},
        {"boundary_assisted", spec.boundary_assisted},
        {"dislocations", dislocations},
    };
}

LatticeSpec spec_from_json(const json &j) {
    if (!j.is_object()) {
        throw FormatError("spec must be an object");
    }
    LatticeSpec spec;
    spec.width = require_int(j, "width", "spec");
    spec.height = require_int(j, "height", "spec");
    if (j.contains("padding")) {
        spec.padding = require_int(j, "padding", "spec");
    }
    if (j.contains("boundary")) {
        try {
            spec.boundary = parse_boundary(j["boundary"].get<std::string>());
        } catch (const std::exception &e) {
            throw FormatError(std::string("spec: ") + e.what());
        }
    }
    if (j.contains("boundary_assisted")) {
        spec.boundary_assisted = j["boundary_assisted"].get<bool>();
    }
    if (j.contains("dislocations")) {
        const json &ds = j["dislocations"];
        if (!ds.is_array()) {
            throw FormatError("spec: 'dislocations' must be an array");
        }
        for (const auto &d : ds) {
            spec.dislocations.push_back(
                {require_int(d, "row", "dislocation"),
                 require_int(d, "col_start", "dislocation"),
                 require_int(d, "length", "dislocation")});
        }
    }
    return spec;
}

json code_to_json(const StabilizerCode &code) {
    json j;
    j["n"] = code.n;
    json coords = json::array();
    for (const auto &c : code.coords) {
        coords.push_back({c.row, c.col});
    }
    j["coords"] = coords;
    json gens = json::array();
    for (const auto &g : code.generators) {
        gens.push_back({{"pauli", format_pauli(g.op)}, {"kind", std::string(kind_name(g.kind))}});
    }
    j["generators"] = gens;
    if (code.spec) {
        j["spec"] = spec_to_json(*code.spec);
    }
    return j;
}

StabilizerCode code_from_json(const json &j) {
    if (!j.is_object()) {
        throw FormatError("code description must be a JSON object");
    }
    StabilizerCode code;
    const json &n = require(j, "n", "code");
    if (!n.is_number_integer() || n.get<long long>() <= 0) {
        throw FormatError("code: 'n' must be a positive integer");
    }
    code.n = n.get<size_t>();

    if (j.contains("coords") && !j["coords"].is_null()) {
        const json &cs = j["coords"];
        if (cs.is_array()) {
            if (cs.size() != code.n) {
                throw FormatError(
                    "code: 'coords' has " + std::to_string(cs.size()) + " entries but n = " + std::to_string(code.n));
            }
            for (size_t q = 0; q < cs.size(); q++) {
                code.coords.push_back(parse_coord(cs[q], q));
            }
        } else if (cs.is_object()) {
            code.coords.assign(code.n, Coord{});
            std::vector<bool> seen(code.n, false);
            for (const auto &[key, value] : cs.items()) {
                size_t q;
                try {
                    size_t used = 0;
                    q = std::stoul(key, &used);
                    if (used != key.size()) {
                        throw std::invalid_argument(key);
                    }
                } catch (const std::exception &) {
                    throw FormatError("code: coords key '" + key + "' is not a qubit index");
                }
                if (q >= code.n) {
                    throw FormatError("code: coords key " + key + " is out of range");
                }
                code.coords[q] = parse_coord(value, q);
                seen[q] = true;
            }
            for (size_t q = 0; q < code.n; q++) {
                if (!seen[q]) {
                    throw FormatError("code: coords missing qubit " + std::to_string(q));
                }
            }
        } else {
            throw FormatError("code: 'coords' must be an array or an object");
        }
    }

    const json &gens = require(j, "generators", "code");
    if (!gens.is_array()) {
        throw FormatError("code: 'generators' must be an array");
    }
    for (size_t i = 0; i < gens.size(); i++) {
        const json &g = gens[i];
        std::string where = "generators[" + std::to_string(i) + "]";
        std::string text;
        GeneratorKind kind = GeneratorKind::kOther;
        if (g.is_string()) {
            text = g.get<std::string>();
        } else if (g.is_object()) {
            const json &p = require(g, "pauli", where.c_str());
            if (!p.is_string()) {
                throw FormatError(where + ": 'pauli' must be a string");
            }
            text = p.get<std::string>();
            if (g.contains("kind")) {
                try {
                    kind = parse_kind(g["kind"].get<std::string>());
                } catch (const std::exception &e) {
                    throw FormatError(where + ": " + e.what());
                }
            }
        } else {
            throw FormatError(where + " must be an object or a Pauli string");
        }
        PauliOperator op;
        try {
            op = parse_pauli(text);
        } catch (const std::exception &e) {
            throw FormatError(where + ": " + e.what());
        }
        if (op.num_qubits() != code.n) {
            throw FormatError(
                where + ": Pauli string has " + std::to_string(op.num_qubits()) + " letters but n = " +
                std::to_string(code.n));
        }
        code.generators.push_back({std::move(op), kind});
    }

    if (j.contains("spec") && !j["spec"].is_null()) {
        code.spec = spec_from_json(j["spec"]);
    }
    return code;
}

std::string read_text_file(const std::filesystem::path &path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw IoError("cannot open '" + path.string() + "' for reading");
    }
    std::ostringstream ss;
    ss << in.rdbuf();
    if (in.bad()) {
        throw IoError("error while reading '" + path.string() + "'");
    }
    return ss.str();
}

void write_text_file(const std::filesystem::path &path, const std::string &text) {
    std::ofstream out(path, std::ios::binary);
    if (!out) {
        throw IoError("cannot open '" + path.string() + "' for writing");
    }
    out << text;
    if (!out) {
        throw IoError("error while writing '" + path.string() + "'");
    }
}

StabilizerCode load_code(const std::filesystem::path &path) {
    std::string text = read_text_file(path);
    json j;
    try {
        j = json::parse(text);
    } catch (const json::parse_error &e) {
        throw FormatError(path.string() + ": " + e.what());
    }
    return code_from_json(j);
}

void save_code(const std::filesystem::path &path, const StabilizerCode &code) {
    write_text_file(path, code_to_json(code).dump(1) + "\n");
}

}  // namespace dislo

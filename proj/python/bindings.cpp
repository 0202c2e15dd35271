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


#include <pybind11/operators.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <optional>
#include <sstream>

#include "dislo/cli.h"
#include "dislo/code_io.h"
#include "dislo/codecheck.h"
#include "dislo/distance.h"
#include "dislo/lattice.h"
#include "dislo/render.h"
#include "dislo/witness.h"

namespace py = pybind11;
using namespace dislo;

namespace {

using SiteList = std::vector<std::tuple<int, int, int>>;

LatticeSpec make_spec(
    int width, int height, const SiteList &dislocations, int padding, const std::string &boundary, bool assisted) {
    LatticeSpec spec;
    spec.width = width;
    spec.height = height;
    spec.padding = padding;
    spec.boundary = parse_boundary(boundary);
    spec.boundary_assisted = assisted;
    for (const auto &[row, col, length] : dislocations) {
        spec.dislocations.push_back({row, col, length});
    }
    return spec;
}

SearchOptions make_options(unsigned threads, size_t memory_mb) {
    SearchOptions options;
    options.threads = std::max(1u, threads);
    options.memory_bytes = memory_mb << 20;
    return options;
}

size_t default_cap(const StabilizerCode &code) {
    if (code.spec && !code.spec->dislocations.empty()) {
        int longest = 0;
        for (const auto &d : code.spec->dislocations) {
            longest = std::max(longest, d.length);
        }
        return static_cast<size_t>(2 * longest + 8);
    }
    return std::max<size_t>(code.n, 1);
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Surface-code dislocation lattices, exact distance search and Y-highway witnesses.";

    py::register_exception<GeometryError>(m, "GeometryError", PyExc_ValueError);
    py::register_exception<InvalidCodeError>(m, "InvalidCodeError", PyExc_ValueError);
    py::register_exception<FormatError>(m, "FormatError", PyExc_ValueError);
    py::register_exception<ResourceError>(m, "ResourceError", PyExc_RuntimeError);
    py::register_exception<WitnessError>(m, "WitnessError", PyExc_RuntimeError);
    py::register_exception<IoError>(m, "IoError", PyExc_OSError);

    py::class_<PauliOperator>(m, "PauliOperator")
        .def(py::init([](const std::string &text) {
                 return parse_pauli(text);
             }),
             py::arg("text"))
        .def_property_readonly("num_qubits", &PauliOperator::num_qubits)
        .def("letter", &PauliOperator::letter, py::arg("qubit"))
        .def("support", &PauliOperator::support)
        .def("y_count", &PauliOperator::y_count)
        .def(
            "weight",
            [](const PauliOperator &p, const std::string &model) {
                return weight(p, parse_model(model));
            },
            py::arg("model") = "full")
        .def(
            "commutes",
            [](const PauliOperator &p, const PauliOperator &q) {
                return commutes(p, q);
            },
            py::arg("other"))
        .def("__mul__", [](const PauliOperator &p, const PauliOperator &q) {
            return compose(p, q);
        })
        .def(py::self == py::self)
        .def("__hash__", [](const PauliOperator &p) {
            return std::hash<PauliOperator>()(p);
        })
        .def("__len__", &PauliOperator::num_qubits)
        .def("__str__", &format_pauli)
        .def("__repr__", [](const PauliOperator &p) {
            return "PauliOperator('" + format_pauli(p) + "')";
        });

    py::class_<StabilizerCode>(m, "StabilizerCode")
        .def_readonly("n", &StabilizerCode::n)
        .def_property_readonly(
            "generators",
            [](const StabilizerCode &code) {
                std::vector<std::pair<std::string, std::string>> out;
                for (const auto &g : code.generators) {
                    out.emplace_back(format_pauli(g.op), std::string(kind_name(g.kind)));
                }
                return out;
            })
        .def_property_readonly(
            "coords",
            [](const StabilizerCode &code) {
                std::vector<std::pair<int, int>> out;
                for (const auto &c : code.coords) {
                    out.emplace_back(c.row, c.col);
                }
                return out;
            })
        .def_property_readonly(
            "num_dislocations",
            [](const StabilizerCode &code) {
                return code.spec ? code.spec->dislocations.size() : 0;
            })
        .def("to_json", [](const StabilizerCode &code) {
            return code_to_json(code).dump(1);
        })
        .def_static(
            "from_json",
            [](const std::string &text) {
                nlohmann::json j;
                try {
                    j = nlohmann::json::parse(text);
                } catch (const nlohmann::json::exception &e) {
                    throw FormatError(e.what());
                }
                return code_from_json(j);
            },
            py::arg("text"))
        .def_static(
            "load",
            [](const std::string &path) {
                return load_code(path);
            },
            py::arg("path"))
        .def(
            "save",
            [](const StabilizerCode &code, const std::string &path) {
                save_code(path, code);
            },
            py::arg("path"))
        .def("__repr__", [](const StabilizerCode &code) {
            return "<StabilizerCode n=" + std::to_string(code.n) +
                   " generators=" + std::to_string(code.generators.size()) + ">";
        });

    m.def(
        "build_plain_patch",
        [](int width, int height, const std::string &boundary) {
            return build_plain_patch(width, height, parse_boundary(boundary));
        },
        py::arg("width"),
        py::arg("height"),
        py::arg("boundary") = "mixed");
    m.def(
        "build_default_code",
        [](int L, int padding, int separation) {
            return build_dislocation_code(default_dislocation_spec(L, padding, separation));
        },
        py::arg("L"),
        py::arg("padding") = 2,
        py::arg("separation") = -1,
        "Two parallel dislocations of length L inside a uniform boundary.");
    m.def(
        "build_dislocation_code",
        [](int width, int height, const SiteList &dislocations, int padding, const std::string &boundary,
           bool assisted) {
            return build_dislocation_code(make_spec(width, height, dislocations, padding, boundary, assisted));
        },
        py::arg("width"),
        py::arg("height"),
        py::arg("dislocations"),
        py::arg("padding") = 2,
        py::arg("boundary") = "uniform",
        py::arg("boundary_assisted") = false,
        "Dislocations are (row, col_start, length) triples.");
    m.def("qubit_on_dislocation", &qubit_on_dislocation, py::arg("code"), py::arg("index"));

    m.def(
        "_validate",
        [](const StabilizerCode &code) {
            return report_to_json(validate(code)).dump();
        },
        py::arg("code"));
    m.def("logical_count", &logical_count, py::arg("code"));
    m.def(
        "extract_logicals",
        [](const StabilizerCode &code) {
            std::vector<std::pair<PauliOperator, PauliOperator>> out;
            for (const auto &p : extract_logicals(code)) {
                out.emplace_back(p.xbar, p.zbar);
            }
            return out;
        },
        py::arg("code"));
    m.def(
        "syndrome",
        [](const StabilizerCode &code, const PauliOperator &e) {
            return syndrome(code, e).set_bits();
        },
        py::arg("code"),
        py::arg("error"),
        "Indices of the generators that anticommute with the error.");
    m.def(
        "_classify",
        [](const StabilizerCode &code, const PauliOperator &e) {
            ErrorClass c = classify(code, e);
            nlohmann::json actions = nlohmann::json::array();
            for (const auto &a : c.logical_action) {
                actions.push_back({{"xbar", a.anticommutes_xbar}, {"zbar", a.anticommutes_zbar}});
            }
            return nlohmann::json{{"kind", std::string(class_name(c.kind))}, {"logical_action", actions}}.dump();
        },
        py::arg("code"),
        py::arg("error"));

    m.def(
        "_distance",
        [](const StabilizerCode &code, const std::string &model, const std::string &engine, size_t cap,
           unsigned threads, size_t memory_mb, std::optional<size_t> logical) {
            if (cap == 0) {
                cap = default_cap(code);
            }
            SearchOptions options = make_options(threads, memory_mb);
            DistanceReport r;
            {
                py::gil_scoped_release release;
                r = logical ? per_qubit_distance(code, *logical, parse_model(model), cap, parse_engine(engine), options)
                            : compute_distance(code, parse_model(model), cap, parse_engine(engine), options);
            }
            return report_to_json(r).dump();
        },
        py::arg("code"),
        py::arg("model"),
        py::arg("engine"),
        py::arg("cap"),
        py::arg("threads"),
        py::arg("memory_mb"),
        py::arg("logical"));
    m.def(
        "_scan",
        [](const std::vector<int> &L_values, const std::string &model, size_t cap, int padding, int separation,
           unsigned threads, size_t memory_mb) {
            std::vector<ScanRow> rows;
            {
                py::gil_scoped_release release;
                rows = distance_scan(
                    [&](int L) {
                        return default_dislocation_spec(L, padding, separation);
                    },
                    L_values,
                    parse_model(model),
                    cap,
                    make_options(threads, memory_mb));
            }
            return scan_csv(rows);
        },
        py::arg("L_values"),
        py::arg("model"),
        py::arg("cap"),
        py::arg("padding"),
        py::arg("separation"),
        py::arg("threads"),
        py::arg("memory_mb"));

    m.def(
        "_witness",
        [](const StabilizerCode &code, size_t index, int radius) {
            WitnessOptions options;
            options.radius = radius;
            ErrorChain chain = build_y_highway(code, index, options);
            nlohmann::json j = witness_report_to_json(verify_witness(code, chain, radius));
            j["chain"] = chain_to_json(code, chain);
            return j.dump();
        },
        py::arg("code"),
        py::arg("index"),
        py::arg("radius"));
    m.def(
        "_verify_chain",
        [](const StabilizerCode &code, const std::string &chain_json, int radius) {
            ErrorChain chain = chain_from_json(code, nlohmann::json::parse(chain_json));
            return witness_report_to_json(verify_witness(code, chain, radius)).dump();
        },
        py::arg("code"),
        py::arg("chain_json"),
        py::arg("radius"));
    m.def(
        "_render_svg",
        [](const StabilizerCode &code, std::optional<std::string> chain_json, double cell_size,
           const std::string &error_color, bool show_indices) {
            RenderStyle style;
            style.cell_size = cell_size;
            style.error_glyph_color = error_color;
            style.show_indices = show_indices;
            std::optional<ErrorChain> chain;
            if (chain_json) {
                chain = chain_from_json(code, nlohmann::json::parse(*chain_json));
            }
            return render_svg(code, chain ? &*chain : nullptr, style);
        },
        py::arg("code"),
        py::arg("chain_json"),
        py::arg("cell_size"),
        py::arg("error_color"),
        py::arg("show_indices"));

    m.def(
        "run_cli",
        [](const std::vector<std::string> &args) {
            std::ostringstream out, err;
            int rc = dislo::run_cli(args, out, err);
            return py::make_tuple(rc, out.str(), err.str());
        },
        py::arg("args"),
        "Runs the command-line tool in-process; returns (exit_code, stdout, stderr).");
}

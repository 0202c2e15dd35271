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

#include "dislo/cli.h"

#include <fstream>
#include <memory>
#include <sstream>

#include "CLI11.hpp"
#include "dislo/code_io.h"
#include "dislo/codecheck.h"
#include "dislo/distance.h"
#include "dislo/lattice.h"
#include "dislo/render.h"
#include "dislo/witness.h"

namespace dislo {

namespace {

constexpr const char *kExitTable =
    "Exit codes:\n"
    "  0  success\n"
    "  1  internal error\n"
    "  2  usage error (unknown flag, missing or conflicting arguments)\n"
    "  3  invalid geometry or input (bad spec, malformed file, invalid code)\n"
    "  4  resource limit (search table over the memory budget, failed scan row)\n"
    "  5  verification failure (anticommuting generators, witness not an undetected logical)\n"
    "  6  file I/O error\n";

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct VerificationFailure : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct GeometryArgs {
    std::string code_path;
    int L = 0;
    int width = 0;
    int height = 0;
    int padding = 2;
    int separation = -1;
    std::string boundary = "uniform";
    std::vector<std::string> dislocations;
    bool boundary_assisted = false;
};

void add_geometry(CLI::App *app, GeometryArgs &g, bool allow_code) {
    if (allow_code) {
        app->add_option("--code", g.code_path, "Code-description JSON file to load instead of building");
    }
    app->add_option("--L", g.L, "Default two-dislocation configuration with dislocation length L")
        ->check(CLI::PositiveNumber);
    app->add_option("--width", g.width, "Patch width in data-qubit columns");
    app->add_option("--height", g.height, "Patch height in data-qubit rows");
    app->add_option("--padding", g.padding, "Minimum cells between a twist and the boundary")->capture_default_str();
    app->add_option("--separation", g.separation, "Rows between the two default dislocations (default max(L, 2))");
    app->add_option("--boundary", g.boundary, "Outer boundary: uniform or mixed")->capture_default_str();
    app->add_option("--dislocation", g.dislocations, "Dislocation as row,col_start,length (repeatable)");
    app->add_flag("--boundary-assisted", g.boundary_assisted, "Allow a single dislocation");
}

DislocationSpec parse_dislocation(const std::string &text) {
    std::stringstream ss(text);
    std::vector<int> parts;
    std::string item;
    while (std::getline(ss, item, ',')) {
        try {
            size_t used = 0;
            parts.push_back(std::stoi(item, &used));
            if (used != item.size()) {
                throw std::invalid_argument(item);
            }
        } catch (const std::exception &) {
            throw UsageError("--dislocation: '" + text + "' is not row,col_start,length");
        }
    }
    if (parts.size() != 3) {
        throw UsageError("--dislocation: '" + text + "' is not row,col_start,length");
    }
    return {parts[0], parts[1], parts[2]};
}

StabilizerCode resolve_code(const GeometryArgs &g) {
    Boundary boundary = parse_boundary(g.boundary);
    if (!g.code_path.empty()) {
        if (g.L || g.width || g.height || !g.dislocations.empty()) {
            throw UsageError("--code cannot be combined with geometry flags");
        }
        return load_code(g.code_path);
    }
    if (!g.dislocations.empty()) {
        if (g.L) {
            throw UsageError("--L cannot be combined with --dislocation");
        }
        if (!g.width || !g.height) {
            throw UsageError("--dislocation needs --width and --height");
        }
        LatticeSpec spec;
        spec.width = g.width;
        spec.height = g.height;
        spec.padding = g.padding;
        spec.boundary = boundary;
        spec.boundary_assisted = g.boundary_assisted;
        for (const auto &d : g.dislocations) {
            spec.dislocations.push_back(parse_dislocation(d));
        }
        return build_dislocation_code(spec);
    }
    if (g.L) {
        if (g.width || g.height) {
            throw UsageError("--L sets the patch size; do not combine it with --width/--height");
        }
        LatticeSpec spec = default_dislocation_spec(g.L, g.padding, g.separation);
        spec.boundary = boundary;
        return build_dislocation_code(spec);
    }
    if (g.width || g.height) {
        return build_plain_patch(g.width, g.height, boundary);
    }
    throw UsageError("no geometry given: pass --code, --L, --dislocation or --width/--height");
}

void emit(const std::string &text, const std::string &path, std::ostream &out) {
    if (path.empty() || path == "-") {
        out << text;
    } else {
        write_text_file(path, text);
    }
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

struct SearchArgs {
    std::string model = "full";
    std::string engine = "mitm";
    size_t cap = 0;
    unsigned threads = 1;
    size_t memory_mb = 2048;
};

void add_search(CLI::App *app, SearchArgs &s, bool with_engine) {
    app->add_option("--model", s.model, "Error model: full or xz")->capture_default_str();
    if (with_engine) {
        app->add_option("--engine", s.engine, "Search engine: brute or mitm")->capture_default_str();
    }
    app->add_option("--cap", s.cap, "Largest weight searched (default 2L+8, or n for codes without a spec)");
    app->add_option("--threads", s.threads, "Worker threads")->capture_default_str();
    app->add_option("--memory-mb", s.memory_mb, "Memory budget for the search table")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();
}

SearchOptions search_options(const SearchArgs &s) {
    SearchOptions options;
    options.threads = std::max(1u, s.threads);
    options.memory_bytes = s.memory_mb << 20;
    return options;
}

std::vector<int> parse_range(const std::string &text) {
    std::vector<int> out;
    auto to_int = [&](const std::string &s) {
        try {
            size_t used = 0;
            int v = std::stoi(s, &used);
            if (used != s.size()) {
                throw std::invalid_argument(s);
            }
            return v;
        } catch (const std::exception &) {
            throw UsageError("--L-range: '" + text + "' is not a..b or a comma-separated list");
        }
    };
    size_t dots = text.find("..");
    if (dots != std::string::npos) {
        int lo = to_int(text.substr(0, dots));
        int hi = to_int(text.substr(dots + 2));
        if (hi < lo) {
            throw UsageError("--L-range: empty range '" + text + "'");
        }
        for (int L = lo; L <= hi; L++) {
            out.push_back(L);
        }
        return out;
    }
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        if (!item.empty()) {
            out.push_back(to_int(item));
        }
    }
    return out;
}

}  // namespace

int run_cli(const std::vector<std::string> &args, std::ostream &out, std::ostream &err) {
    CLI::App app{"Build and analyse surface-code patches with dislocation defects.", "dislo"};
    app.require_subcommand(1);
    app.footer(kExitTable);
    app.set_help_all_flag("--help-all", "Show help for every subcommand");

    GeometryArgs geo;
    SearchArgs search;
    std::string out_path;
    bool as_json = false;

    auto *build = app.add_subcommand("build", "Write the code description JSON for a geometry");
    add_geometry(build, geo, false);
    build->add_option("--out", out_path, "Output file (default stdout)");

    auto *validate_cmd = app.add_subcommand("validate", "Check commutation and print rank and logical count");
    add_geometry(validate_cmd, geo, true);
    validate_cmd->add_flag("--json", as_json, "Print JSON");

    size_t logical_index = 0;
    bool per_logical = false;
    auto *distance_cmd = app.add_subcommand("distance", "Exact code distance under an error model");
    add_geometry(distance_cmd, geo, true);
    add_search(distance_cmd, search, true);
    auto *logical_opt = distance_cmd->add_option("--logical", logical_index, "Distance of one encoded qubit only");
    distance_cmd->add_flag("--json", as_json, "Print JSON");

    std::string range = "2..3";
    std::string format = "csv";
    auto *scan = app.add_subcommand("scan", "Distance of the default configuration for a range of L");
    scan->add_option("--L-range", range, "a..b or a comma-separated list")->capture_default_str();
    scan->add_option("--padding", geo.padding, "Minimum cells between a twist and the boundary")->capture_default_str();
    scan->add_option("--separation", geo.separation, "Rows between the dislocations (default max(L, 2))");
    add_search(scan, search, false);
    scan->add_option("--format", format, "csv, text or json")->capture_default_str();
    scan->add_option("--out", out_path, "Output file (default stdout)");

    size_t index = 0;
    int radius = 2;
    auto *witness_cmd = app.add_subcommand("witness", "Build and verify the Y-highway chain along a dislocation");
    add_geometry(witness_cmd, geo, true);
    witness_cmd->add_option("--index", index, "Dislocation index")->capture_default_str();
    witness_cmd->add_option("--radius", radius, "Cap search radius, 2 or 3")->capture_default_str();
    witness_cmd->add_option("--out", out_path, "Write the chain JSON here");
    witness_cmd->add_flag("--json", as_json, "Print JSON");

    RenderStyle style;
    std::string chain_path;
    bool with_witness = false;
    auto *render = app.add_subcommand("render", "Write an SVG drawing of a code, optionally with an error chain");
    add_geometry(render, geo, true);
    render->add_option("--chain", chain_path, "Chain JSON to overlay");
    render->add_flag("--witness", with_witness, "Overlay the Y-highway chain of dislocation --index");
    render->add_option("--index", index, "Dislocation index for --witness")->capture_default_str();
    render->add_option("--out", out_path, "Output file (default stdout)");
    render->add_option("--cell-size", style.cell_size, "Pixels per lattice cell")->capture_default_str();
    render->add_option("--light-fill", style.light_fill, "Fill for Z checks")->capture_default_str();
    render->add_option("--dark-fill", style.dark_fill, "Fill for X checks")->capture_default_str();
    render->add_option("--dislocation-fill", style.dislocation_fill, "Fill for dislocation checks")
        ->capture_default_str();
    render->add_option("--twist-fill", style.twist_fill, "Fill for twist checks")->capture_default_str();
    render->add_option("--error-color", style.error_glyph_color, "Color of error letters")->capture_default_str();
    render->add_flag("--show-indices", style.show_indices, "Label qubits with their indices");

    std::string stage = "dislo";
    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
        CLI::App *cmd = app.get_subcommands().front();
        stage = "dislo " + cmd->get_name();

        if (cmd == build) {
            StabilizerCode code = resolve_code(geo);
            emit(code_to_json(code).dump(1) + "\n", out_path, out);
        } else if (cmd == validate_cmd) {
            StabilizerCode code = resolve_code(geo);
            ValidationReport report = validate(code);
            out << (as_json ? report_to_json(report).dump(1) + "\n" : format_report(report));
            if (!report.ok) {
                throw VerificationFailure("generators do not form a valid stabilizer group");
            }
        } else if (cmd == distance_cmd) {
            StabilizerCode code = resolve_code(geo);
            ErrorModel model = parse_model(search.model);
            Engine engine = parse_engine(search.engine);
            size_t cap = search.cap ? search.cap : default_cap(code);
            per_logical = logical_opt->count() > 0;
            DistanceReport report =
                per_logical ? per_qubit_distance(code, logical_index, model, cap, engine, search_options(search))
                            : compute_distance(code, model, cap, engine, search_options(search));
            out << (as_json ? report_to_json(report).dump(1) + "\n" : format_report(report));
        } else if (cmd == scan) {
            ErrorModel model = parse_model(search.model);
            if (format != "csv" && format != "text" && format != "json") {
                throw UsageError("--format must be csv, text or json");
            }
            int padding = geo.padding;
            int separation = geo.separation;
            auto rows = distance_scan(
                [&](int L) {
                    return default_dislocation_spec(L, padding, separation);
                },
                parse_range(range),
                model,
                search.cap,
                search_options(search));
            std::string text;
            if (format == "csv") {
                text = scan_csv(rows);
            } else if (format == "text") {
                text = scan_text(rows);
            } else {
                nlohmann::json j = nlohmann::json::array();
                for (const auto &r : rows) {
                    j.push_back({
                        {"L", r.L},
                        {"model", std::string(model_name(r.model))},
                        {"cap", r.cap},
                        {"d", r.d ? nlohmann::json(*r.d) : nlohmann::json(nullptr)},
                        {"witness", r.witness ? nlohmann::json(format_pauli(*r.witness)) : nlohmann::json(nullptr)},
                        {"seconds", r.seconds},
                        {"error", r.error},
                    });
                }
                text = j.dump(1) + "\n";
            }
            emit(text, out_path, out);
            for (const auto &r : rows) {
                if (!r.error.empty()) {
                    err << stage << ": L=" << r.L << ": " << r.error << "\n";
                }
            }
            bool failed = std::any_of(rows.begin(), rows.end(), [](const ScanRow &r) {
                return !r.error.empty();
            });
            return failed ? kExitResource : kExitOk;
        } else if (cmd == witness_cmd) {
            StabilizerCode code = resolve_code(geo);
            WitnessOptions options;
            options.radius = radius;
            ErrorChain chain = build_y_highway(code, index, options);
            WitnessReport report = verify_witness(code, chain, radius);
            if (!out_path.empty()) {
                save_chain(out_path, code, chain);
            }
            if (as_json) {
                nlohmann::json j = witness_report_to_json(report);
                j["chain"] = chain_to_json(code, chain);
                out << j.dump(1) << "\n";
            } else {
                out << format_witness_report(report);
                out << "body qubits: " << chain.body_qubits.size() << "\n";
                out << "cap qubits: " << chain.left_cap.size() << " left, " << chain.right_cap.size() << " right\n";
                out << "chain: " << format_pauli(chain.error) << "\n";
            }
            if (!report.undetected || report.classification.kind != ErrorClassKind::kLogical) {
                throw VerificationFailure("the chain is not an undetected logical operator");
            }
        } else if (cmd == render) {
            StabilizerCode code = resolve_code(geo);
            std::optional<ErrorChain> chain;
            if (!chain_path.empty() && with_witness) {
                throw UsageError("--chain and --witness are mutually exclusive");
            }
            if (!chain_path.empty()) {
                chain = load_chain(chain_path, code);
            } else if (with_witness) {
                chain = build_y_highway(code, index);
            }
            emit(render_svg(code, chain ? &*chain : nullptr, style), out_path, out);
        }
        return kExitOk;
    } catch (const CLI::CallForHelp &e) {
        return app.exit(e, out, err);
    } catch (const CLI::CallForAllHelp &e) {
        return app.exit(e, out, err);
    } catch (const CLI::ParseError &e) {
        app.exit(e, out, err);
        return kExitUsage;
    } catch (const UsageError &e) {
        err << stage << ": usage error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const IoError &e) {
        err << stage << ": I/O error: " << e.what() << "\n";
        return kExitIo;
    } catch (const ResourceError &e) {
        err << stage << ": resource limit: " << e.what() << "\n";
        return kExitResource;
    } catch (const VerificationFailure &e) {
        err << stage << ": verification failed: " << e.what() << "\n";
        return kExitVerification;
    } catch (const WitnessError &e) {
        err << stage << ": verification failed: " << e.what() << "\n";
        return kExitVerification;
    } catch (const nlohmann::json::exception &e) {
        err << stage << ": invalid input: " << e.what() << "\n";
        return kExitInvalidInput;
    } catch (const std::invalid_argument &e) {
        err << stage << ": invalid input: " << e.what() << "\n";
        return kExitInvalidInput;
    } catch (const std::out_of_range &e) {
        err << stage << ": invalid input: " << e.what() << "\n";
        return kExitInvalidInput;
    } catch (const FormatError &e) {
        err << stage << ": invalid input: " << e.what() << "\n";
        return kExitInvalidInput;
    } catch (const std::exception &e) {
        err << stage << ": internal error: " << e.what() << "\n";
        return kExitInternal;
    }
}

}  // namespace dislo

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


// Acceptance gate: prints one PASS/FAIL line per criterion and exits nonzero
// if any criterion fails. Detail lines start with two spaces.

#include <chrono>
#include <cstdio>
#include <filesystem>
#include <functional>
#include <iostream>
#include <map>
#include <random>
#include <regex>
#include <sstream>

#include "dislo/cli.h"
#include "dislo/code_io.h"
#include "dislo/codecheck.h"
#include "dislo/distance.h"
#include "dislo/lattice.h"
#include "dislo/render.h"
#include "dislo/witness.h"
#include "test_util.h"

using namespace dislo;
using dislo::fixtures::code_of;

namespace {

// Pinned limits.
constexpr int kSlopeLengths[] = {2, 3, 4};
constexpr double kSlopeBudgetSeconds = 600;
constexpr int kWitnessMinL = 1;
constexpr int kWitnessMaxL = 8;
constexpr size_t kMaxCapPerEndpoint = 8;
constexpr long kMaxCapTotal = 12;
constexpr int kPauliPairs = 10000;
constexpr size_t kPauliMaxQubits = 64;

struct Outcome {
    bool pass = true;
    std::vector<std::string> details;

    void check(bool ok, const std::string &what) {
        if (!ok) {
            pass = false;
        }
        details.push_back(std::string(ok ? "ok    " : "FAIL  ") + what);
    }
    void note(const std::string &what) {
        details.push_back("note  " + what);
    }
};

std::map<int, std::map<ErrorModel, size_t>> g_distances;
double g_slope_seconds = 0;

size_t distance_of(int L, ErrorModel model) {
    auto &slot = g_distances[L];
    if (!slot.count(model)) {
        auto start = std::chrono::steady_clock::now();
        auto code = build_dislocation_code(default_dislocation_spec(L));
        auto r = mitm_distance(code, model, 2 * L + 8);
        g_slope_seconds += std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        if (!r.found()) {
            throw std::runtime_error("no logical found up to the cap at L=" + std::to_string(L));
        }
        slot[model] = *r.d;
    }
    return slot[model];
}

Outcome slope(ErrorModel model, size_t expected_step) {
    Outcome o;
    std::ostringstream values;
    for (size_t i = 0; i < std::size(kSlopeLengths); ++i) {
        int L = kSlopeLengths[i];
        size_t d = distance_of(L, model);
        values << " d(" << L << ")=" << d;
        if (i > 0) {
            size_t prev = distance_of(kSlopeLengths[i - 1], model);
            o.check(d - prev == expected_step,
                    "d(" + std::to_string(L) + ") - d(" + std::to_string(kSlopeLengths[i - 1]) +
                        ") = " + std::to_string(long(d) - long(prev)) + ", expected " +
                        std::to_string(expected_step));
        }
    }
    o.note(std::string(model_name(model)) + ":" + values.str());
    o.check(g_slope_seconds <= kSlopeBudgetSeconds, "search time " + std::to_string(g_slope_seconds) + " s");
    return o;
}

Outcome separation() {
    Outcome o;
    for (int L : kSlopeLengths) {
        size_t full = distance_of(L, ErrorModel::kFull);
        size_t xz = distance_of(L, ErrorModel::kXZOnly);
        std::string tag = "L=" + std::to_string(L) + ": FULL " + std::to_string(full) + ", XZ_ONLY " +
                          std::to_string(xz);
        o.check(full < xz, tag + ": FULL < XZ_ONLY");
        o.check(xz <= 2 * full, tag + ": XZ_ONLY <= 2 FULL");
    }
    return o;
}

std::string action_text(const ErrorClass &c) {
    if (c.kind != ErrorClassKind::kLogical) {
        return std::string(class_name(c.kind));
    }
    const auto &a = c.logical_action.at(0);
    return std::string("LOGICAL, anticommutes with xbar=") + (a.anticommutes_xbar ? "yes" : "no") +
           " zbar=" + (a.anticommutes_zbar ? "yes" : "no");
}

Outcome witness_exhibit() {
    Outcome o;
    std::optional<long> margin;
    bool all_built = true, all_undetected = true, all_logical = true, all_both = true, margin_constant = true;
    bool caps_bounded = true;
    for (int L = kWitnessMinL; L <= kWitnessMaxL; ++L) {
        auto code = build_dislocation_code(default_dislocation_spec(L));
        ErrorChain chain;
        try {
            chain = build_y_highway(code, 0);
        } catch (const std::exception &e) {
            all_built = false;
            o.note("L=" + std::to_string(L) + ": builder failed: " + e.what());
            continue;
        }
        auto r = verify_witness(code, chain);
        bool logical = r.classification.kind == ErrorClassKind::kLogical;
        bool both = logical && r.classification.logical_action[0].anticommutes_xbar &&
                    r.classification.logical_action[0].anticommutes_zbar;
        all_undetected = all_undetected && r.undetected;
        all_logical = all_logical && logical;
        all_both = all_both && both;
        if (!margin) {
            margin = r.margin;
        }
        margin_constant = margin_constant && r.margin == *margin;
        long caps = long(chain.cap_qubits().size());
        caps_bounded = caps_bounded && chain.left_cap.size() <= kMaxCapPerEndpoint &&
                       chain.right_cap.size() <= kMaxCapPerEndpoint && caps <= kMaxCapTotal;
        o.note("L=" + std::to_string(L) + ": weight FULL " + std::to_string(r.weight_full) + ", XZ_ONLY " +
               std::to_string(r.weight_xz) + ", margin " + std::to_string(r.margin) + ", caps " +
               std::to_string(chain.left_cap.size()) + "+" + std::to_string(chain.right_cap.size()) + ", " +
               action_text(r.classification));
    }
    o.check(all_built, "build_y_highway succeeds for L=1..8");
    o.check(all_undetected, "every chain is undetected");
    o.check(all_logical, "every chain classifies as LOGICAL");
    o.check(all_both, "every chain anticommutes with both xbar and zbar");
    o.check(margin_constant && margin.has_value(),
            "weight(FULL) - L is one constant" + (margin ? " (" + std::to_string(*margin) + ")" : std::string()));
    o.check(caps_bounded, "caps <= 8 per endpoint and <= 12 in total");

    // The minimum-weight FULL logical found by the search, for comparison.
    for (int L : {2, 3}) {
        auto code = build_dislocation_code(default_dislocation_spec(L));
        auto r = mitm_distance(code, ErrorModel::kFull, 2 * L + 8);
        auto highway = build_y_highway(code, 0);
        auto c = classify(code, *r.witness);
        auto h = highway.classification.logical_action[0];
        auto m = c.logical_action[0];
        o.note("L=" + std::to_string(L) + ": minimum FULL logical " + std::to_string(*r.d) + " sites, " +
               action_text(c) + "; together with the highway covers xbar=" +
               ((h.anticommutes_xbar || m.anticommutes_xbar) ? "yes" : "no") +
               " zbar=" + ((h.anticommutes_zbar || m.anticommutes_zbar) ? "yes" : "no"));
    }
    return o;
}

Outcome oracle_equivalence() {
    Outcome o;
    std::vector<std::pair<std::string, StabilizerCode>> suite = {
        {"{ZZ}", code_of({"ZZ"})},
        {"{ZZI,IZZ}", code_of({"ZZI", "IZZ"})},
        {"5-qubit", fixtures::five_qubit_code()},
        {"MIXED 2x2", build_plain_patch(2, 2, Boundary::kMixed)},
        {"MIXED 3x3", build_plain_patch(3, 3, Boundary::kMixed)},
        {"dislocation L=2", build_dislocation_code(default_dislocation_spec(2))},
    };
    for (const auto &[name, code] : suite) {
        for (auto model : {ErrorModel::kFull, ErrorModel::kXZOnly}) {
            size_t cap = code.spec && !code.spec->dislocations.empty() ? 12 : 2 * code.n;
            auto brute = brute_force_distance(code, model, cap);
            auto mitm = mitm_distance(code, model, cap);
            std::string b = brute.d ? std::to_string(*brute.d) : "none";
            std::string m = mitm.d ? std::to_string(*mitm.d) : "none";
            o.check(brute.d.has_value() && brute.d == mitm.d,
                    name + " " + std::string(model_name(model)) + ": brute " + b + ", mitm " + m);
        }
    }
    auto five = brute_force_distance(fixtures::five_qubit_code(), ErrorModel::kFull, 5);
    o.check(five.d == 3u, "5-qubit code brute-force distance is 3");
    return o;
}

Outcome structural_validity() {
    Outcome o;
    bool all_valid = true;
    size_t count = 0;
    auto check_code = [&](const StabilizerCode &code) {
        all_valid = all_valid && validate(code).ok;
        ++count;
    };
    bool default_k = true;
    for (int L = 1; L <= 8; ++L) {
        auto code = build_dislocation_code(default_dislocation_spec(L));
        check_code(code);
        default_k = default_k && logical_count(code) == 1;
    }
    bool uniform_k = true;
    for (int w = 2; w <= 5; ++w) {
        for (int h = 2; h <= 5; ++h) {
            auto uniform = build_plain_patch(w, h, Boundary::kUniform);
            check_code(uniform);
            uniform_k = uniform_k && logical_count(uniform) == 0;
            check_code(build_plain_patch(w, h, Boundary::kMixed));
        }
    }
    o.check(all_valid, "all " + std::to_string(count) + " constructed codes pass validate");
    o.check(default_k, "default configuration has k = 1 for L=1..8");
    o.check(uniform_k, "UNIFORM plain patches 2..5 x 2..5 have k = 0");
    return o;
}

Outcome pauli_algebra() {
    Outcome o;
    std::mt19937_64 rng(2026);
    int bijection = 0, group = 0, symplectic = 0, weights = 0;
    for (int trial = 0; trial < kPauliPairs; ++trial) {
        size_t n = 1 + rng() % kPauliMaxQubits;
        auto p = fixtures::random_pauli(n, rng);
        auto q = fixtures::random_pauli(n, rng);
        auto r = fixtures::random_pauli(n, rng);
        PauliOperator id(n);
        bijection += parse_pauli(format_pauli(p)) == p && parse_pauli(format_pauli(q)) == q;
        group += compose(compose(p, q), r) == compose(p, compose(q, r)) && compose(p, q) == compose(q, p) &&
                 compose(p, id) == p && compose(p, p).is_identity();
        symplectic += commutes(p, q) == commutes(q, p) && commutes(p, id) &&
                      !commutes(p, compose(q, r)) == (!commutes(p, q) ^ !commutes(p, r)) &&
                      commutes(p, q) == !fixtures::ref_anticommutes(format_pauli(p), format_pauli(q));
        size_t full = weight(p, ErrorModel::kFull);
        size_t xz = weight(p, ErrorModel::kXZOnly);
        weights += xz == full + p.y_count() && full <= xz && xz <= 2 * full;
    }
    auto line = [&](const char *name, int hits) {
        o.check(hits == kPauliPairs, std::string(name) + ": " + std::to_string(hits) + "/" +
                                         std::to_string(kPauliPairs) + " random pairs");
    };
    line("encoding bijection", bijection);
    line("compose group laws", group);
    line("commutation symplectic form", symplectic);
    line("weight model inequality", weights);
    return o;
}

Outcome cli_round_trip() {
    Outcome o;
    auto dir = std::filesystem::temp_directory_path() / "dislo_acceptance";
    std::filesystem::create_directories(dir);
    auto code_path = (dir / "code.json").string();
    auto chain_path = (dir / "chain.json").string();
    auto svg_path = (dir / "chain.svg").string();
    auto cli = [](std::vector<std::string> args, std::string *out_text = nullptr) {
        std::ostringstream out, err;
        int rc = run_cli(args, out, err);
        if (out_text) {
            *out_text = out.str();
        }
        return rc;
    };

    o.check(cli({"build", "--L", "2", "--out", code_path}) == 0, "build --L 2 --out code.json");
    std::string text;
    o.check(cli({"validate", "--code", code_path}, &text) == 0 && text.find("logical qubits: 1") != std::string::npos,
            "validate code.json reports k = 1");
    auto in_process = build_dislocation_code(default_dislocation_spec(2));
    for (auto model : {ErrorModel::kFull, ErrorModel::kXZOnly}) {
        auto expected = mitm_distance(in_process, model, 12);
        std::string flag = model == ErrorModel::kFull ? "full" : "xz";
        cli({"distance", "--code", code_path, "--model", flag, "--json"}, &text);
        auto j = nlohmann::json::parse(text);
        o.check(j["d"] == *expected.d && j["witness"] == format_pauli(*expected.witness),
                "distance via file, " + std::string(model_name(model)) + ": " + j["d"].dump() +
                    " equals in-process " + std::to_string(*expected.d));
    }

    auto code3 = build_dislocation_code(default_dislocation_spec(3));
    auto chain = build_y_highway(code3, 0);
    o.check(cli({"witness", "--L", "3", "--out", chain_path}) == 0, "witness --L 3 --out chain.json");
    o.check(cli({"render", "--L", "3", "--chain", chain_path, "--out", svg_path}) == 0, "render --chain");
    std::string svg = read_text_file(svg_path);
    auto count = [&](const std::string &needle) {
        size_t hits = 0;
        for (size_t p = svg.find(needle); p != std::string::npos; p = svg.find(needle, p + 1)) {
            ++hits;
        }
        return hits;
    };
    size_t slanted = count("<polygon class=\"dislocation\"");
    size_t markers = count("<circle class=\"twist-marker\"");
    size_t glyphs = count("<text class=\"error\"");
    size_t y_glyphs = 0;
    std::regex glyph("<text class=\"error\" data-qubit=\"([0-9]+)\"[^>]*>([XYZ])</text>");
    for (auto it = std::sregex_iterator(svg.begin(), svg.end(), glyph); it != std::sregex_iterator(); ++it) {
        size_t q = std::stoul((*it)[1]);
        bool body = std::find(chain.body_qubits.begin(), chain.body_qubits.end(), q) != chain.body_qubits.end();
        y_glyphs += body && (*it)[2] == "Y";
    }
    size_t expected_glyphs = chain.body_qubits.size() + chain.cap_qubits().size();
    o.check(slanted == 6, "slanted polygons: " + std::to_string(slanted) + ", expected 6");
    o.check(markers == 4, "twist markers: " + std::to_string(markers) + ", expected 4");
    o.check(glyphs == expected_glyphs,
            "error glyphs: " + std::to_string(glyphs) + ", expected " + std::to_string(expected_glyphs));
    o.check(y_glyphs == chain.body_qubits.size(), "body glyphs all Y: " + std::to_string(y_glyphs) + "/" +
                                                      std::to_string(chain.body_qubits.size()));
    std::filesystem::remove_all(dir);
    return o;
}

}  // namespace

int main() {
    std::vector<std::pair<std::string, std::function<Outcome()>>> criteria = {
        {"slope FULL, d(L+1) - d(L) = 1 for L in {2,3,4}", [] { return slope(ErrorModel::kFull, 1); }},
        {"slope XZ_ONLY, d(L+1) - d(L) = 2 for L in {2,3,4}", [] { return slope(ErrorModel::kXZOnly, 2); }},
        {"separation, d(FULL) < d(XZ_ONLY) <= 2 d(FULL)", separation},
        {"Y-highway witness for L=1..8", witness_exhibit},
        {"mitm equals brute force on the fixture suite", oracle_equivalence},
        {"structural validity of constructed codes", structural_validity},
        {"Pauli algebra properties", pauli_algebra},
        {"CLI and file-format round trip", cli_round_trip},
    };
    int failures = 0;
    for (size_t i = 0; i < criteria.size(); ++i) {
        Outcome o;
        try {
            o = criteria[i].second();
        } catch (const std::exception &e) {
            o.check(false, std::string("exception: ") + e.what());
        }
        failures += !o.pass;
        std::cout << "criterion " << i + 1 << ": " << (o.pass ? "PASS" : "FAIL") << ": " << criteria[i].first
                  << "\n";
        for (const auto &d : o.details) {
            std::cout << "  " << d << "\n";
        }
        std::cout.flush();
    }
    std::cout << (failures ? std::to_string(failures) + " criteria failed" : std::string("all criteria passed"))
              << "\n";
    return failures ? 1 : 0;
}

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

#include "dislo/witness.h"

#include <algorithm>
#include <deque>
#include <limits>
#include <optional>
#include <set>
#include <sstream>

#include "dislo/code_io.h"
#include "dislo/lattice.h"

namespace dislo {

using nlohmann::json;

namespace {

struct Site {
    size_t qubit;
    char letter;
};

std::vector<std::vector<size_t>> qubit_generators(const StabilizerCode &code) {
    std::vector<std::vector<size_t>> out(code.n);
    for (size_t g = 0; g < code.generators.size(); g++) {
        for (size_t q : code.generators[g].op.support()) {
            out[q].push_back(g);
        }
    }
    return out;
}

const LatticeSpec &require_spec(const StabilizerCode &code, size_t dislocation) {
    if (!code.spec) {
        throw std::invalid_argument("code was not built from a lattice spec");
    }
    if (dislocation >= code.spec->dislocations.size()) {
        throw std::out_of_range(
            "dislocation index " + std::to_string(dislocation) + " out of range (" +
            std::to_string(code.spec->dislocations.size()) + " dislocations)");
    }
    return *code.spec;
}

bool intersects(const BitVector &a, const BitVector &b) {
    auto wa = a.words();
    auto wb = b.words();
    for (size_t i = 0; i < wa.size(); i++) {
        if (wa[i] & wb[i]) {
            return true;
        }
    }
    return false;
}

// Minimum-weight assignment on `candidates` whose syndrome equals `target`.
// Generators are renumbered to the ones the candidates touch.
class CapSearch {
   public:
    CapSearch(
        const StabilizerCode &code,
        std::vector<size_t> candidates,
        const std::vector<size_t> &local_generators,
        const BitVector &target)
        : code_(code), candidates_(std::move(candidates)), target_(local_generators.size()) {
        size_t m = local_generators.size();
        for (size_t j = 0; j < m; j++) {
            if (target[local_generators[j]]) {
                target_.set(j);
            }
        }
        std::vector<long> last(m, -1);
        for (size_t p = 0; p < candidates_.size(); p++) {
            size_t q = candidates_[p];
            for (char letter : {'X', 'Y', 'Z'}) {
                PauliOperator single(code.n);
                single.set_letter(q, letter);
                BitVector syn(m);
                for (size_t j = 0; j < m; j++) {
                    if (!commutes(single, code.generators[local_generators[j]].op)) {
                        syn.set(j);
                    }
                }
                syndromes_.push_back(std::move(syn));
            }
            for (size_t j = 0; j < m; j++) {
                if (code.generators[local_generators[j]].op.letter(q) != 'I') {
                    last[j] = static_cast<long>(p);
                }
            }
        }
        closed_before_.assign(candidates_.size() + 1, BitVector(m));
        for (size_t j = 0; j < m; j++) {
            for (size_t p = static_cast<size_t>(last[j] + 1); p <= candidates_.size(); p++) {
                closed_before_[p].set(j);
            }
        }
    }

    std::optional<std::vector<Site>> run(size_t max_weight) const {
        for (size_t w = 0; w <= max_weight; w++) {
            std::vector<Site> sites;
            BitVector syn = target_;
            if (dfs(w, 0, syn, sites)) {
                return sites;
            }
        }
        return std::nullopt;
    }

   private:
    const StabilizerCode &code_;
    std::vector<size_t> candidates_;
    BitVector target_;
    std::vector<BitVector> syndromes_;
    std::vector<BitVector> closed_before_;

    bool dfs(size_t remaining, size_t start, BitVector &syn, std::vector<Site> &sites) const {
        if (remaining == 0) {
            return syn.none();
        }
        static constexpr char kLetters[3] = {'X', 'Y', 'Z'};
        for (size_t p = start; p < candidates_.size(); p++) {
            if (intersects(closed_before_[p], syn)) {
                break;
            }
            for (size_t l = 0; l < 3; l++) {
                const BitVector &s = syndromes_[3 * p + l];
                syn ^= s;
                sites.push_back({candidates_[p], kLetters[l]});
                if (dfs(remaining - 1, p + 1, syn, sites)) {
                    return true;
                }
                sites.pop_back();
                syn ^= s;
            }
        }
        return false;
    }
};

std::vector<size_t> touched_generators(
    const std::vector<std::vector<size_t>> &by_qubit, const std::vector<size_t> &qubits) {
    std::set<size_t> out;
    for (size_t q : qubits) {
        out.insert(by_qubit[q].begin(), by_qubit[q].end());
    }
    return {out.begin(), out.end()};
}

std::vector<size_t> set_difference(const std::vector<size_t> &a, const std::vector<size_t> &b) {
    std::vector<size_t> out;
    std::set_difference(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    return out;
}

std::string describe_residual(const StabilizerCode &code, const BitVector &residual) {
    std::ostringstream out;
    out << "residual syndrome on generators";
    for (size_t g : residual.set_bits()) {
        out << " " << g << "(" << kind_name(code.generators[g].kind) << ")";
    }
    return out.str();
}

void fill_derived(const CodeChecker &checker, ErrorChain &chain) {
    chain.weight_full = weight(chain.error, ErrorModel::kFull);
    chain.weight_xz = weight(chain.error, ErrorModel::kXZOnly);
    chain.classification = checker.classify(chain.error);
}

std::vector<size_t> sorted(std::vector<size_t> v) {
    std::sort(v.begin(), v.end());
    return v;
}

// Graph distance of every qubit from the twist pentagon; -1 if unreachable.
std::vector<int> qubit_distances(
    const StabilizerCode &code, const std::vector<std::vector<size_t>> &by_qubit, size_t dislocation, bool left) {
    const LatticeSpec &spec = require_spec(code, dislocation);
    DislocationGeometry geo = dislocation_geometry(spec, dislocation);
    std::vector<int> dist(code.n, -1);
    std::deque<size_t> queue;
    for (const auto &p : left ? geo.left_twist : geo.right_twist) {
        size_t q = static_cast<size_t>(p.row) * spec.width + p.col;
        dist[q] = 0;
        queue.push_back(q);
    }
    while (!queue.empty()) {
        size_t q = queue.front();
        queue.pop_front();
        for (size_t g : by_qubit[q]) {
            for (size_t r : code.generators[g].op.support()) {
                if (dist[r] < 0) {
                    dist[r] = dist[q] + 1;
                    queue.push_back(r);
                }
            }
        }
    }
    return dist;
}

}  // namespace

std::vector<size_t> ErrorChain::cap_qubits() const {
    std::vector<size_t> out = left_cap;
    out.insert(out.end(), right_cap.begin(), right_cap.end());
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

std::vector<size_t> twist_neighbourhood(const StabilizerCode &code, size_t dislocation, bool left, int radius) {
    require_spec(code, dislocation);
    if (radius < 0) {
        throw std::invalid_argument("radius must be nonnegative");
    }
    std::vector<int> dist = qubit_distances(code, qubit_generators(code), dislocation, left);
    std::vector<size_t> out;
    for (size_t q = 0; q < code.n; q++) {
        if (dist[q] >= 0 && dist[q] <= radius) {
            out.push_back(q);
        }
    }
    return out;
}

ErrorChain build_y_highway(const StabilizerCode &code, size_t dislocation, const WitnessOptions &options) {
    const LatticeSpec &spec = require_spec(code, dislocation);
    if (options.radius < 2 || options.radius > 3) {
        throw std::invalid_argument("cap search radius must be 2 or 3, got " + std::to_string(options.radius));
    }
    CodeChecker checker(code);

    ErrorChain chain;
    chain.dislocation = dislocation;
    chain.L = spec.dislocations[dislocation].length;
    chain.body_qubits = qubit_on_dislocation(code, dislocation);
    chain.error = PauliOperator(code.n);
    for (size_t q : chain.body_qubits) {
        chain.error.set_letter(q, 'Y');
    }
    BitVector residual = checker.syndrome(chain.error);

    auto by_qubit = qubit_generators(code);
    std::vector<size_t> body = sorted(chain.body_qubits);
    std::vector<size_t> left = set_difference(twist_neighbourhood(code, dislocation, true, options.radius), body);
    std::vector<size_t> right = set_difference(twist_neighbourhood(code, dislocation, false, options.radius), body);
    // Each violated check is assigned to the twist it is strictly closer to,
    // else to the right one. Each endpoint is then completed on its own
    // neighbourhood, and a
    // cap must not disturb the checks assigned to the other endpoint.
    std::vector<int> left_dist = qubit_distances(code, by_qubit, dislocation, true);
    std::vector<int> right_dist = qubit_distances(code, by_qubit, dislocation, false);
    auto generator_distance = [&](size_t g, const std::vector<int> &dist) {
        int best = std::numeric_limits<int>::max();
        for (size_t q : code.generators[g].op.support()) {
            if (dist[q] >= 0) {
                best = std::min(best, dist[q]);
            }
        }
        return best;
    };
    std::vector<size_t> taken = body;
    for (bool is_left : {true, false}) {
        std::vector<size_t> cands =
            set_difference(is_left ? left : right, taken);
        std::vector<size_t> gens = touched_generators(by_qubit, cands);
        BitVector target(code.generators.size());
        for (size_t g : residual.set_bits()) {
            bool mine = !is_left || generator_distance(g, left_dist) < generator_distance(g, right_dist);
            if (mine) {
                target.set(g);
                if (!std::binary_search(gens.begin(), gens.end(), g)) {
                    gens.insert(std::lower_bound(gens.begin(), gens.end(), g), g);
                }
            }
        }
        CapSearch search(code, cands, gens, target);
        auto sites = search.run(options.max_cap_per_endpoint);
        if (!sites) {
            throw WitnessError(
                std::string("no ") + (is_left ? "left" : "right") + " cap of weight <= " +
                std::to_string(options.max_cap_per_endpoint) + " within radius " + std::to_string(options.radius) +
                "; " + describe_residual(code, target));
        }
        auto &cap = is_left ? chain.left_cap : chain.right_cap;
        for (const auto &site : *sites) {
            chain.error.set_letter(site.qubit, site.letter);
            cap.push_back(site.qubit);
            taken.insert(std::lower_bound(taken.begin(), taken.end(), site.qubit), site.qubit);
        }
        residual = checker.syndrome(chain.error);
    }
    if (residual.any()) {
        throw WitnessError("Y highway leaves checks outside both cap neighbourhoods; " + describe_residual(code, residual));
    }

    fill_derived(checker, chain);
    if (checker.syndrome(chain.error).any()) {
        throw std::logic_error("cap completion left a nonzero syndrome");
    }
    return chain;
}

WitnessReport verify_witness(const StabilizerCode &code, const ErrorChain &chain, int radius) {
    if (chain.error.num_qubits() != code.n) {
        throw std::invalid_argument(
            "chain has " + std::to_string(chain.error.num_qubits()) + " qubits but the code has " +
            std::to_string(code.n));
    }
    WitnessReport report;
    BitVector syn = syndrome(code, chain.error);
    report.syndrome_weight = syn.popcount();
    report.undetected = syn.none();
    report.classification = CodeChecker(code).classify(chain.error);
    report.weight_full = weight(chain.error, ErrorModel::kFull);
    report.weight_xz = weight(chain.error, ErrorModel::kXZOnly);
    report.L = chain.L;
    if (code.spec && chain.dislocation < code.spec->dislocations.size()) {
        report.L = code.spec->dislocations[chain.dislocation].length;
    }
    report.margin = static_cast<long>(report.weight_full) - report.L;
    report.body_all_y = std::all_of(chain.body_qubits.begin(), chain.body_qubits.end(), [&](size_t q) {
        return q < code.n && chain.error.letter(q) == 'Y';
    });
    report.caps_local = false;
    if (code.spec && chain.dislocation < code.spec->dislocations.size()) {
        std::vector<size_t> near = twist_neighbourhood(code, chain.dislocation, true, radius);
        std::vector<size_t> right = twist_neighbourhood(code, chain.dislocation, false, radius);
        near.insert(near.end(), right.begin(), right.end());
        near = sorted(near);
        auto caps = chain.cap_qubits();
        report.caps_local = std::all_of(caps.begin(), caps.end(), [&](size_t q) {
            return std::binary_search(near.begin(), near.end(), q);
        });
    }
    return report;
}

json witness_report_to_json(const WitnessReport &report) {
    json action = json::array();
    for (const auto &a : report.classification.logical_action) {
        action.push_back({{"anticommutes_xbar", a.anticommutes_xbar}, {"anticommutes_zbar", a.anticommutes_zbar}});
    }
    return {
        {"undetected", report.undetected},
        {"classification", std::string(class_name(report.classification.kind))},
        {"logical_action", action},
        {"weight_full", report.weight_full},
        {"weight_xz", report.weight_xz},
        {"L", report.L},
        {"margin", report.margin},
        {"syndrome_weight", report.syndrome_weight},
        {"body_all_y", report.body_all_y},
        {"caps_local", report.caps_local},
    };
}

std::string format_witness_report(const WitnessReport &report) {
    std::ostringstream out;
    out << "undetected: " << (report.undetected ? "yes" : "no") << "\n";
    out << "classification: " << class_name(report.classification.kind) << "\n";
    for (size_t i = 0; i < report.classification.logical_action.size(); i++) {
        const auto &a = report.classification.logical_action[i];
        out << "logical " << i << ": anticommutes with xbar=" << (a.anticommutes_xbar ? "yes" : "no")
            << " zbar=" << (a.anticommutes_zbar ? "yes" : "no") << "\n";
    }
    out << "weight FULL: " << report.weight_full << "\n";
    out << "weight XZ_ONLY: " << report.weight_xz << "\n";
    out << "L: " << report.L << "\n";
    out << "margin (FULL weight - L): " << report.margin << "\n";
    return out.str();
}

json chain_to_json(const StabilizerCode &code, const ErrorChain &chain) {
    json sites = json::array();
    for (size_t q : chain.error.support()) {
        json site = {{"qubit", q}, {"letter", std::string(1, chain.error.letter(q))}};
        if (code.has_coords()) {
            site["row"] = code.coords[q].row;
            site["col"] = code.coords[q].col;
        }
        sites.push_back(site);
    }
    return {
        {"pauli", format_pauli(chain.error)},
        {"dislocation", chain.dislocation},
        {"L", chain.L},
        {"body_qubits", chain.body_qubits},
        {"cap_qubits", chain.cap_qubits()},
        {"left_cap", chain.left_cap},
        {"right_cap", chain.right_cap},
        {"weights", {{"FULL", chain.weight_full}, {"XZ_ONLY", chain.weight_xz}}},
        {"classification", std::string(class_name(chain.classification.kind))},
        {"sites", sites},
    };
}

ErrorChain chain_from_json(const StabilizerCode &code, const json &input) {
    const json &j = input.contains("chain") ? input["chain"] : input;
    if (!j.is_object()) {
        throw FormatError("chain description must be a JSON object");
    }
    ErrorChain chain;
    try {
        if (j.contains("pauli")) {
            chain.error = parse_pauli(j["pauli"].get<std::string>());
        } else if (j.contains("sites")) {
            chain.error = PauliOperator(code.n);
            for (const auto &s : j["sites"]) {
                std::string letter = s.at("letter").get<std::string>();
                size_t q = s.at("qubit").get<size_t>();
                if (letter.size() != 1 || q >= code.n) {
                    throw FormatError("chain: bad site entry " + s.dump());
                }
                chain.error.set_letter(q, letter[0]);
            }
        } else {
            throw FormatError("chain: needs 'pauli' or 'sites'");
        }
        if (chain.error.num_qubits() != code.n) {
            throw FormatError(
                "chain: Pauli string has " + std::to_string(chain.error.num_qubits()) + " letters but the code has " +
                std::to_string(code.n) + " qubits");
        }
        chain.dislocation = j.value("dislocation", size_t{0});
        chain.L = j.value("L", 0);
        chain.body_qubits = j.value("body_qubits", std::vector<size_t>{});
        if (j.contains("left_cap") || j.contains("right_cap")) {
            chain.left_cap = j.value("left_cap", std::vector<size_t>{});
            chain.right_cap = j.value("right_cap", std::vector<size_t>{});
        } else {
            chain.left_cap = j.value("cap_qubits", std::vector<size_t>{});
        }
    } catch (const json::exception &e) {
        throw FormatError(std::string("chain: ") + e.what());
    } catch (const std::invalid_argument &e) {
        throw FormatError(std::string("chain: ") + e.what());
    }
    for (size_t q : chain.body_qubits) {
        if (q >= code.n) {
            throw FormatError("chain: body qubit " + std::to_string(q) + " out of range");
        }
    }
    for (size_t q : chain.cap_qubits()) {
        if (q >= code.n) {
            throw FormatError("chain: cap qubit " + std::to_string(q) + " out of range");
        }
    }
    chain.weight_full = weight(chain.error, ErrorModel::kFull);
    chain.weight_xz = weight(chain.error, ErrorModel::kXZOnly);
    chain.classification = CodeChecker(code).classify(chain.error);
    return chain;
}

ErrorChain load_chain(const std::filesystem::path &path, const StabilizerCode &code) {
    std::string text = read_text_file(path);
    json j;
    try {
        j = json::parse(text);
    } catch (const json::parse_error &e) {
        throw FormatError(path.string() + ": " + e.what());
    }
    return chain_from_json(code, j);
}

void save_chain(const std::filesystem::path &path, const StabilizerCode &code, const ErrorChain &chain) {
    write_text_file(path, chain_to_json(code, chain).dump(1) + "\n");
}

}  // namespace dislo

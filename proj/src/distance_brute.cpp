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

#include <optional>

#include "search_space.h"

namespace dislo {

namespace {

struct Site {
    size_t qubit;
    char letter;
};

class BruteSearch {
   public:
    BruteSearch(const StabilizerCode &code, const CodeChecker &checker, ErrorModel model, std::optional<size_t> logical)
        : code_(code), checker_(checker), model_(model), logical_(logical), closure_(detail::build_closure_masks(code)) {
        size_t g = code.generators.size();
        words_ = (g + 63) / 64;
        x_syn_.words = z_syn_.words = words_;
        x_syn_.data.assign(code.n * words_, 0);
        z_syn_.data.assign(code.n * words_, 0);
        for (size_t i = 0; i < g; i++) {
            const auto &op = code.generators[i].op;
            for (size_t q = 0; q < code.n; q++) {
                // A single X flips the checks holding Z or Y there, and vice versa.
                if (op.zs()[q]) {
                    x_syn_.row(q)[i >> 6] |= uint64_t{1} << (i & 63);
                }
                if (op.xs()[q]) {
                    z_syn_.row(q)[i >> 6] |= uint64_t{1} << (i & 63);
                }
            }
        }
    }

    /// Lexicographically first accepted error of exactly this weight whose
    /// first site is on qubit q0.
    std::optional<std::vector<Site>> run_task(size_t weight, size_t q0, uint64_t &visited) const {
        std::vector<uint64_t> syn(words_, 0);
        std::vector<Site> sites;
        if (dfs(weight, q0, q0 + 1, syn, sites, visited)) {
            return sites;
        }
        return std::nullopt;
    }

    PauliOperator to_operator(const std::vector<Site> &sites) const {
        PauliOperator e(code_.n);
        for (const auto &s : sites) {
            e.set_letter(s.qubit, s.letter);
        }
        return e;
    }

   private:
    const StabilizerCode &code_;
    const CodeChecker &checker_;
    ErrorModel model_;
    std::optional<size_t> logical_;
    detail::ClosureMasks closure_;
    size_t words_;
    detail::MaskTable x_syn_;
    detail::MaskTable z_syn_;

    void apply(std::vector<uint64_t> &syn, size_t q, char letter) const {
        if (letter != 'Z') {
            detail::xor_into(syn, x_syn_.row(q));
        }
        if (letter != 'X') {
            detail::xor_into(syn, z_syn_.row(q));
        }
    }

    bool accept(const std::vector<Site> &sites) const {
        PauliOperator e = to_operator(sites);
        if (logical_) {
            const auto &pair = checker_.logicals()[*logical_];
            return !commutes(e, pair.xbar) || !commutes(e, pair.zbar);
        }
        return !checker_.in_stabilizer_group(e);
    }

    // Places the next site on a qubit in [first, last).
    bool dfs(
        size_t remaining,
        size_t first,
        size_t last,
        std::vector<uint64_t> &syn,
        std::vector<Site> &sites,
        uint64_t &visited) const {
        visited++;
        if (remaining == 0) {
            return detail::all_zero(syn) && accept(sites);
        }
        for (size_t q = first; q < last && q < code_.n; q++) {
            if (detail::intersects(closure_.closed_before.row(q), syn)) {
                break;
            }
            for (char letter : {'X', 'Y', 'Z'}) {
                size_t cost = letter_cost(letter, model_);
                if (cost > remaining) {
                    continue;
                }
                apply(syn, q, letter);
                sites.push_back({q, letter});
                if (dfs(remaining - cost, q + 1, code_.n, syn, sites, visited)) {
                    return true;
                }
                sites.pop_back();
                apply(syn, q, letter);
            }
        }
        return false;
    }
};

}  // namespace

DistanceReport brute_force_search(
    const StabilizerCode &code,
    ErrorModel model,
    size_t cap,
    const SearchOptions &options,
    std::optional<size_t> logical) {
    if (cap < 1) {
        throw std::invalid_argument("cap must be at least 1");
    }
    auto start = std::chrono::steady_clock::now();
    CodeChecker checker(code);
    if (checker.k() == 0) {
        throw InvalidCodeError("code encodes no logical qubits, so its distance is undefined");
    }
    if (logical && *logical >= checker.k()) {
        throw std::out_of_range(
            "logical index " + std::to_string(*logical) + " out of range (k = " + std::to_string(checker.k()) + ")");
    }
    BruteSearch search(code, checker, model, logical);

    DistanceReport report;
    report.model = model;
    report.engine = Engine::kBrute;
    report.cap = cap;
    std::atomic<uint64_t> visited{0};
    for (size_t w = 1; w <= cap && !report.d; w++) {
        std::vector<std::optional<std::vector<Site>>> hits(code.n);
        size_t best = detail::first_hit(code.n, options.threads, [&](size_t q0) {
            uint64_t local = 0;
            hits[q0] = search.run_task(w, q0, local);
            visited += local;
            return hits[q0].has_value();
        });
        if (best < code.n) {
            report.d = w;
            report.witness = search.to_operator(*hits[best]);
        }
    }
    report.stats.candidates = visited.load();
    report.stats.seconds = detail::seconds_since(start);
    return report;
}

DistanceReport brute_force_distance(const StabilizerCode &code, ErrorModel model, size_t cap, const SearchOptions &options) {
    return brute_force_search(code, model, cap, options, std::nullopt);
}

}  // namespace dislo

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


#ifndef DISLO_TESTS_TEST_UTIL_H
#define DISLO_TESTS_TEST_UTIL_H

#include <cstdint>
#include <initializer_list>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "dislo/pauli.h"
#include "dislo/stabilizer_code.h"

namespace dislo::fixtures {

inline StabilizerCode code_of(std::initializer_list<const char *> generators) {
    StabilizerCode code;
    for (const char *g : generators) {
        code.generators.push_back({parse_pauli(g), GeneratorKind::kOther});
    }
    code.n = code.generators.empty() ? 0 : code.generators[0].op.num_qubits();
    return code;
}

inline StabilizerCode five_qubit_code() {
    return code_of({"XZZXI", "IXZZX", "XIXZZ", "ZXIXZ"});
}

inline PauliOperator random_pauli(size_t n, std::mt19937_64 &rng) {
    PauliOperator p(n);
    for (size_t q = 0; q < n; ++q) {
        p.set_letter(q, "IXYZ"[rng() & 3]);
    }
    return p;
}

/// Sparse random operator: each qubit is non-identity with probability `density`.
inline PauliOperator random_sparse_pauli(size_t n, double density, std::mt19937_64 &rng) {
    std::bernoulli_distribution hit(density);
    PauliOperator p(n);
    for (size_t q = 0; q < n; ++q) {
        if (hit(rng)) {
            p.set_letter(q, "XYZ"[rng() % 3]);
        }
    }
    return p;
}

// Plain character-level reference implementations; deliberately share no code
// with the bit-vector library.

inline bool ref_anticommutes(const std::string &a, const std::string &b) {
    int parity = 0;
    for (size_t q = 0; q < a.size(); ++q) {
        if (a[q] != 'I' && b[q] != 'I' && a[q] != b[q]) {
            parity ^= 1;
        }
    }
    return parity;
}

inline char ref_product(char a, char b) {
    if (a == 'I') {
        return b;
    }
    if (b == 'I') {
        return a;
    }
    if (a == b) {
        return 'I';
    }
    for (char c : std::string("XYZ")) {
        if (c != a && c != b) {
            return c;
        }
    }
    return '?';
}

inline std::string ref_compose(const std::string &a, const std::string &b) {
    std::string out(a.size(), 'I');
    for (size_t q = 0; q < a.size(); ++q) {
        out[q] = ref_product(a[q], b[q]);
    }
    return out;
}

inline size_t ref_weight(const std::string &p, bool xz_only) {
    size_t w = 0;
    for (char c : p) {
        w += c == 'I' ? 0 : (c == 'Y' && xz_only ? 2 : 1);
    }
    return w;
}

/// Exhaustive distance over all 4^n operators: the group generated by the
/// stabilizers is enumerated explicitly, so no elimination is involved.
inline std::optional<size_t> exhaustive_distance(const StabilizerCode &code, bool xz_only) {
    size_t n = code.n;
    std::vector<std::string> gens;
    for (const auto &g : code.generators) {
        gens.push_back(format_pauli(g.op));
    }
    std::vector<std::string> group{std::string(n, 'I')};
    for (const auto &g : gens) {
        std::vector<std::string> next = group;
        for (const auto &s : group) {
            std::string t = ref_compose(s, g);
            bool seen = false;
            for (const auto &u : next) {
                seen = seen || u == t;
            }
            if (!seen) {
                next.push_back(t);
            }
        }
        group = std::move(next);
    }
    std::optional<size_t> best;
    uint64_t total = uint64_t{1} << (2 * n);
    std::string p(n, 'I');
    for (uint64_t code_word = 1; code_word < total; ++code_word) {
        for (size_t q = 0; q < n; ++q) {
            p[q] = "IXYZ"[(code_word >> (2 * q)) & 3];
        }
        size_t w = ref_weight(p, xz_only);
        if (best && w >= *best) {
            continue;
        }
        bool undetected = true;
        for (const auto &g : gens) {
            undetected = undetected && !ref_anticommutes(p, g);
        }
        if (!undetected) {
            continue;
        }
        bool stabilizer = false;
        for (const auto &s : group) {
            stabilizer = stabilizer || s == p;
        }
        if (!stabilizer) {
            best = w;
        }
    }
    return best;
}

/// Random valid code: greedily adds random operators that commute with the
/// generators so far and are independent of them.
inline StabilizerCode random_commuting_code(size_t n, size_t num_generators, std::mt19937_64 &rng) {
    StabilizerCode code;
    code.n = n;
    std::vector<std::string> group{std::string(n, 'I')};
    for (int attempt = 0; attempt < 2000 && code.generators.size() < num_generators; ++attempt) {
        PauliOperator p = random_sparse_pauli(n, 0.5, rng);
        std::string s = format_pauli(p);
        bool ok = !p.is_identity();
        for (const auto &g : code.generators) {
            ok = ok && !ref_anticommutes(s, format_pauli(g.op));
        }
        for (const auto &u : group) {
            ok = ok && u != s;
        }
        if (!ok) {
            continue;
        }
        code.generators.push_back({p, GeneratorKind::kOther});
        std::vector<std::string> next = group;
        for (const auto &u : group) {
            next.push_back(ref_compose(u, s));
        }
        group = std::move(next);
    }
    return code;
}

}  // namespace dislo::fixtures

#endif

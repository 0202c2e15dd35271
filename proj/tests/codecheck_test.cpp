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


#include "dislo/codecheck.h"

#include <random>

#include "dislo/lattice.h"
#include "gtest/gtest.h"
#include "test_util.h"

using namespace dislo;
using dislo::fixtures::code_of;

namespace {

void expect_logical_invariants(const StabilizerCode &code) {
    auto pairs = extract_logicals(code);
    ASSERT_EQ(pairs.size(), logical_count(code));
    for (size_t i = 0; i < pairs.size(); ++i) {
        EXPECT_EQ(pairs[i].index, i);
        for (const auto &g : code.generators) {
            EXPECT_TRUE(commutes(pairs[i].xbar, g.op));
            EXPECT_TRUE(commutes(pairs[i].zbar, g.op));
        }
        EXPECT_FALSE(commutes(pairs[i].xbar, pairs[i].zbar));
        for (size_t j = 0; j < i; ++j) {
            EXPECT_TRUE(commutes(pairs[i].xbar, pairs[j].xbar));
            EXPECT_TRUE(commutes(pairs[i].xbar, pairs[j].zbar));
            EXPECT_TRUE(commutes(pairs[i].zbar, pairs[j].xbar));
            EXPECT_TRUE(commutes(pairs[i].zbar, pairs[j].zbar));
        }
    }
}

TEST(Validate, reports) {
    auto good = validate(code_of({"XX", "ZZ"}));
    EXPECT_TRUE(good.ok);
    EXPECT_EQ(good.rank, 2u);
    EXPECT_EQ(good.logical_count(), 0u);

    auto bad = validate(code_of({"XI", "ZI"}));
    EXPECT_FALSE(bad.ok);
    ASSERT_EQ(bad.offending.size(), 1u);
    EXPECT_EQ(bad.offending[0], (std::pair<size_t, size_t>{0, 1}));

    auto ragged = code_of({"XX", "ZZ"});
    ragged.generators.push_back({parse_pauli("ZZZ"), GeneratorKind::kOther});
    auto r = validate(ragged);
    EXPECT_FALSE(r.ok);
    EXPECT_EQ(r.wrong_length, std::vector<size_t>{2});

    EXPECT_NE(format_report(bad).find("no"), std::string::npos);
    EXPECT_EQ(report_to_json(good)["ok"], true);
}

TEST(Validate, dependent_generators_are_accepted) {
    auto code = code_of({"ZZI", "IZZ", "ZIZ"});
    auto r = validate(code);
    EXPECT_TRUE(r.ok);
    EXPECT_EQ(r.rank, 2u);
    EXPECT_EQ(logical_count(code), 1u);
}

TEST(LogicalCount, examples) {
    EXPECT_EQ(logical_count(fixtures::five_qubit_code()), 1u);
    EXPECT_EQ(logical_count(build_plain_patch(3, 3, Boundary::kUniform)), 0u);
    EXPECT_EQ(logical_count(build_dislocation_code(default_dislocation_spec(2))), 1u);
    EXPECT_THROW(logical_count(code_of({"XI", "ZI"})), InvalidCodeError);
}

TEST(ExtractLogicals, invariants_on_fixtures) {
    expect_logical_invariants(code_of({"ZZ"}));
    expect_logical_invariants(code_of({"ZZI", "IZZ"}));
    expect_logical_invariants(fixtures::five_qubit_code());
    expect_logical_invariants(build_plain_patch(3, 3, Boundary::kMixed));
    expect_logical_invariants(build_dislocation_code(default_dislocation_spec(2)));
    expect_logical_invariants(code_of({"ZZII", "IIZZ"}));
    EXPECT_THROW(extract_logicals(code_of({"XX", "ZZ"})), InvalidCodeError);
}

TEST(ExtractLogicals, five_qubit_logicals_have_weight_three) {
    auto pairs = extract_logicals(fixtures::five_qubit_code());
    ASSERT_EQ(pairs.size(), 1u);
    EXPECT_GE(weight(pairs[0].xbar, ErrorModel::kFull), 3u);
    EXPECT_GE(weight(pairs[0].zbar, ErrorModel::kFull), 3u);
}

TEST(ExtractLogicals, dislocation_logicals_touch_the_defects) {
    auto code = build_dislocation_code(default_dislocation_spec(3));
    auto pairs = extract_logicals(code);
    ASSERT_EQ(pairs.size(), 1u);
    std::set<size_t> defect;
    for (const auto &g : code.generators) {
        if (g.kind == GeneratorKind::kDislocation || g.kind == GeneratorKind::kTwist) {
            for (size_t q : g.op.support()) {
                defect.insert(q);
            }
        }
    }
    for (const auto *op : {&pairs[0].xbar, &pairs[0].zbar}) {
        bool touches = false;
        for (size_t q : op->support()) {
            touches = touches || defect.count(q);
        }
        EXPECT_TRUE(touches) << format_pauli(*op);
    }
}

TEST(ExtractLogicals, deterministic) {
    auto code = build_dislocation_code(default_dislocation_spec(3));
    auto a = extract_logicals(code);
    auto b = extract_logicals(code);
    EXPECT_EQ(a[0].xbar, b[0].xbar);
    EXPECT_EQ(a[0].zbar, b[0].zbar);
}

TEST(Syndrome, examples) {
    auto code = build_plain_patch(5, 5, Boundary::kMixed);
    for (const auto &g : code.generators) {
        EXPECT_TRUE(syndrome(code, g.op).none());
    }
    EXPECT_TRUE(syndrome(code, PauliOperator(code.n)).none());

    // Centre qubit (2,2): X flips the Z plaquettes among its four cells.
    PauliOperator e(code.n);
    e.set_letter(12, 'X');
    BitVector s = syndrome(code, e);
    EXPECT_EQ(s.popcount(), 2u);
    for (size_t i : s.set_bits()) {
        EXPECT_EQ(code.generators[i].kind, GeneratorKind::kZPlaquette);
    }
    EXPECT_THROW(syndrome(code, PauliOperator(3)), std::invalid_argument);
}

TEST(Classify, examples) {
    auto code = fixtures::five_qubit_code();
    CodeChecker checker(code);
    EXPECT_EQ(checker.classify(code.generators[0].op).kind, ErrorClassKind::kStabilizer);
    EXPECT_EQ(checker.classify(parse_pauli("XIIII")).kind, ErrorClassKind::kDetected);
    const auto &pair = checker.logicals()[0];
    auto c = checker.classify(pair.xbar);
    ASSERT_EQ(c.kind, ErrorClassKind::kLogical);
    ASSERT_EQ(c.logical_action.size(), 1u);
    EXPECT_FALSE(c.logical_action[0].anticommutes_xbar);
    EXPECT_TRUE(c.logical_action[0].anticommutes_zbar);
    auto y = checker.classify(compose(pair.xbar, pair.zbar));
    EXPECT_TRUE(y.logical_action[0].anticommutes_xbar);
    EXPECT_TRUE(y.logical_action[0].anticommutes_zbar);
    EXPECT_THROW(checker.classify(parse_pauli("XX")), std::invalid_argument);
    EXPECT_THROW(CodeChecker(code_of({"XI", "ZI"})), InvalidCodeError);
    EXPECT_EQ(class_name(ErrorClassKind::kLogical), "LOGICAL");
}

// Random stabilizer products and logical-times-stabilizer elements are checked
// against the definitions directly.
TEST(ClassifyProperty, stabilizer_and_logical_cosets) {
    std::mt19937_64 rng(21);
    std::vector<StabilizerCode> codes = {
        fixtures::five_qubit_code(),
        build_plain_patch(3, 3, Boundary::kMixed),
        build_plain_patch(4, 3, Boundary::kMixed),
        build_dislocation_code(default_dislocation_spec(2)),
        code_of({"ZZII", "IIZZ"}),
    };
    for (const auto &code : codes) {
        CodeChecker checker(code);
        auto pairs = checker.logicals();
        for (int trial = 0; trial < 200; ++trial) {
            PauliOperator s(code.n);
            for (const auto &g : code.generators) {
                if (rng() & 1) {
                    s *= g.op;
                }
            }
            auto cs = checker.classify(s);
            ASSERT_EQ(cs.kind, ErrorClassKind::kStabilizer);
            ASSERT_TRUE(checker.syndrome(s).none());

            PauliOperator l(code.n);
            std::vector<LogicalAction> expected(pairs.size());
            bool any = false;
            for (size_t i = 0; i < pairs.size(); ++i) {
                if (rng() & 1) {
                    l *= pairs[i].xbar;
                    expected[i].anticommutes_zbar = true;
                    any = true;
                }
                if (rng() & 1) {
                    l *= pairs[i].zbar;
                    expected[i].anticommutes_xbar = true;
                    any = true;
                }
            }
            l *= s;
            auto cl = checker.classify(l);
            ASSERT_TRUE(checker.syndrome(l).none());
            if (!any) {
                ASSERT_EQ(cl.kind, ErrorClassKind::kStabilizer);
                continue;
            }
            ASSERT_EQ(cl.kind, ErrorClassKind::kLogical);
            ASSERT_EQ(cl.logical_action, expected);

            // Multiplying by any generator keeps the class and the action.
            const auto &g = code.generators[rng() % code.generators.size()].op;
            auto moved = checker.classify(compose(l, g));
            ASSERT_EQ(moved.kind, cl.kind);
            ASSERT_EQ(moved.logical_action, cl.logical_action);

            // A random single-qubit flip on top is either detected or still
            // consistent with the syndrome definition.
            PauliOperator e = l;
            e.set_letter(rng() % code.n, "XYZ"[rng() % 3]);
            auto ce = checker.classify(e);
            ASSERT_EQ(ce.kind == ErrorClassKind::kDetected, checker.syndrome(e).any());
        }
    }
}

TEST(ClassifyProperty, row_mixing_preserves_logical_count) {
    std::mt19937_64 rng(22);
    for (auto base : {fixtures::five_qubit_code(), build_plain_patch(3, 4, Boundary::kMixed),
                      build_dislocation_code(default_dislocation_spec(2))}) {
        size_t k = logical_count(base);
        for (int trial = 0; trial < 20; ++trial) {
            auto mixed = base;
            size_t m = mixed.generators.size();
            for (int step = 0; step < 40; ++step) {
                size_t i = rng() % m;
                size_t j = rng() % m;
                if (i != j) {
                    mixed.generators[i].op *= mixed.generators[j].op;
                }
            }
            ASSERT_TRUE(validate(mixed).ok);
            ASSERT_EQ(logical_count(mixed), k);
        }
    }
}

TEST(ClassifyProperty, random_codes_match_definitions) {
    std::mt19937_64 rng(23);
    for (int trial = 0; trial < 60; ++trial) {
        size_t n = 3 + rng() % 5;
        auto code = fixtures::random_commuting_code(n, 1 + rng() % (n - 1), rng);
        if (code.generators.empty()) {
            continue;
        }
        expect_logical_invariants(code);
        CodeChecker checker(code);
        for (int probe = 0; probe < 50; ++probe) {
            auto e = fixtures::random_pauli(n, rng);
            auto c = checker.classify(e);
            bool undetected = true;
            for (const auto &g : code.generators) {
                undetected = undetected && commutes(e, g.op);
            }
            ASSERT_EQ(c.kind == ErrorClassKind::kDetected, !undetected);
        }
    }
}

}  // namespace

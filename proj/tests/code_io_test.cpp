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

#include <filesystem>

#include "dislo/lattice.h"
#include "gtest/gtest.h"

using namespace dislo;
using nlohmann::json;

namespace {

TEST(CodeIo, round_trip_built_code) {
    auto code = build_dislocation_code(default_dislocation_spec(2));
    auto back = code_from_json(code_to_json(code));
    EXPECT_EQ(back.n, code.n);
    EXPECT_EQ(back.coords, code.coords);
    ASSERT_EQ(back.generators.size(), code.generators.size());
    for (size_t i = 0; i < code.generators.size(); ++i) {
        EXPECT_EQ(back.generators[i].op, code.generators[i].op);
        EXPECT_EQ(back.generators[i].kind, code.generators[i].kind);
    }
    ASSERT_TRUE(back.spec.has_value());
    EXPECT_EQ(*back.spec, *code.spec);
}

TEST(CodeIo, file_round_trip) {
    auto code = build_plain_patch(3, 2, Boundary::kMixed);
    auto path = std::filesystem::temp_directory_path() / "dislo_code_io_test.json";
    save_code(path, code);
    auto back = load_code(path);
    EXPECT_EQ(back.n, code.n);
    EXPECT_EQ(back.generators.size(), code.generators.size());
    std::filesystem::remove(path);
    EXPECT_THROW(load_code(path), IoError);
}

TEST(CodeIo, hand_written_codes) {
    json five = {
        {"n", 5},
        {"generators", {"XZZXI", "IXZZX", "XIXZZ", "ZXIXZ"}},
    };
    auto code = code_from_json(five);
    EXPECT_EQ(code.n, 5u);
    EXPECT_EQ(code.generators[2].op, parse_pauli("XIXZZ"));
    EXPECT_EQ(code.generators[2].kind, GeneratorKind::kOther);
    EXPECT_FALSE(code.has_coords());
    EXPECT_FALSE(code.spec.has_value());

    json keyed = {
        {"n", 2},
        {"coords", {{"0", {0, 0}}, {"1", {0, 1}}}},
        {"generators", {{{"pauli", "Z_Z"}, {"kind", "Z_PLAQUETTE"}}}},
    };
    EXPECT_THROW(code_from_json(keyed), FormatError);
    keyed["generators"] = {{{"pauli", "ZZ"}, {"kind", "Z_PLAQUETTE"}}};
    auto c2 = code_from_json(keyed);
    EXPECT_EQ(c2.coords[1], (Coord{0, 1}));
    EXPECT_EQ(c2.generators[0].kind, GeneratorKind::kZPlaquette);
}

TEST(CodeIo, malformed_input) {
    EXPECT_THROW(code_from_json(json::array()), FormatError);
    EXPECT_THROW(code_from_json(json{{"generators", json::array()}}), FormatError);
    EXPECT_THROW(code_from_json(json{{"n", 2}, {"generators", {"ZQ"}}}), FormatError);
    EXPECT_THROW(code_from_json(json{{"n", 2}, {"generators", {{{"pauli", "ZZ"}, {"kind", "SQUARE"}}}}}),
                 FormatError);
    EXPECT_THROW(code_from_json(json{{"n", 2}, {"coords", {{0, 0}}}, {"generators", {"ZZ"}}}), FormatError);
    EXPECT_THROW(spec_from_json(json{{"width", 5}}), FormatError);
}

TEST(CodeIo, spec_round_trip) {
    auto spec = default_dislocation_spec(4, 3, 6);
    spec.boundary = Boundary::kMixed;
    EXPECT_EQ(spec_from_json(spec_to_json(spec)), spec);
}

}  // namespace

// Copyright 2026 The hopfconc Authors
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

#include "hopfconc/state_io.h"

#include <cmath>
#include <filesystem>

#include "gtest/gtest.h"
#include "hopfconc/error.h"
#include "test_util.h"

using namespace hopfconc;

namespace {

ErrorKind parse_error_of(const std::string &text) {
    try {
        parse_state_json(text);
    } catch (const Error &e) {
        return e.kind();
    }
    ADD_FAILURE() << "parsed: " << text;
    return ErrorKind::Io;
}

}  // namespace

TEST(StateJson, ParsesDocument) {
    PureState s = parse_state_json(R"({"dims": [2, 2], "amplitudes": [[0.7071067811865476, 0], [0, 0], [0, 0], [0, 0.7071067811865476]]})");
    EXPECT_EQ(s.dims(), (std::vector<std::size_t>{2, 2}));
    EXPECT_NEAR(s[3].imag(), M_SQRT1_2, 1e-16);
}

TEST(StateJson, Rejects) {
    EXPECT_EQ(parse_error_of("{"), ErrorKind::Parse);
    EXPECT_EQ(parse_error_of(R"([1, 2])"), ErrorKind::Parse);
    EXPECT_EQ(parse_error_of(R"({"dims": [2]})"), ErrorKind::Parse);
    EXPECT_EQ(parse_error_of(R"({"dims": [2], "amplitudes": [1, 0]})"), ErrorKind::Parse);
    EXPECT_EQ(parse_error_of(R"({"dims": [2.5], "amplitudes": [[1, 0], [0, 0]]})"), ErrorKind::Parse);
    EXPECT_EQ(parse_error_of(R"({"dims": [2], "amplitudes": [[1, 0], [0, 0], [0, 0]]})"), ErrorKind::DimensionMismatch);
    EXPECT_EQ(parse_error_of(R"({"dims": [2], "amplitudes": [[1, 0], [0.01, 0]]})"), ErrorKind::NotNormalized);
}

TEST(StateJson, RoundTripsRandomStates) {
    auto rng = hopfconc::testing::test_rng(20);
    for (int n = 0; n < 20; n++) {
        PureState s = random_state(rng, {2, 3, 2});
        PureState back = parse_state_json(state_to_json(s));
        ASSERT_EQ(back.dims(), s.dims());
        for (std::size_t i = 0; i < s.size(); i++) {
            EXPECT_LT(std::abs(back[i] - s[i]), 1e-15);
        }
    }
}

TEST(StateJson, MissingFile) {
    try {
        load_state_file(std::filesystem::temp_directory_path() / "hopfconc-no-such-file.json");
        FAIL();
    } catch (const Error &e) {
        EXPECT_EQ(e.kind(), ErrorKind::Io);
    }
}

// Copyright 2026 The cohmzi Authors
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

#include "cohmzi/numeric.h"

#include <cmath>
#include <random>

#include "gtest/gtest.h"
#include "oracles.h"

using namespace cohmzi;
using oracle::kPi;

TEST(parse_number, plain_reals) {
    EXPECT_EQ(parse_number("0"), 0.0);
    EXPECT_EQ(parse_number("1.0"), 1.0);
    EXPECT_EQ(parse_number("-0.25"), -0.25);
    EXPECT_EQ(parse_number("+3"), 3.0);
    EXPECT_EQ(parse_number("80e6"), 80e6);
    EXPECT_EQ(parse_number("3.125e-9"), 3.125e-9);
    EXPECT_EQ(parse_number("1.935E14"), 1.935e14);
    EXPECT_EQ(parse_number(".5"), 0.5);
}

TEST(parse_number, pi_expressions) {
    EXPECT_EQ(parse_number("pi"), kPi);
    EXPECT_EQ(parse_number("-pi"), -kPi);
    EXPECT_EQ(parse_number("pi/2"), kPi / 2);
    EXPECT_EQ(parse_number("-pi/4"), -kPi / 4);
    EXPECT_EQ(parse_number("2*pi"), 2 * kPi);
    EXPECT_EQ(parse_number("4pi"), 4 * kPi);
    EXPECT_DOUBLE_EQ(parse_number("3pi/4"), 3 * kPi / 4);
    EXPECT_DOUBLE_EQ(parse_number("0.5*pi"), kPi / 2);
}

TEST(parse_number, rejects_malformed) {
    for (const char *bad : {"", "-", "+", "pi*2", "2/pi", "pi+1", "pi/", "pi/0", "pi/-2", "2**pi", "1e", "abc",
                            "inf", "nan", "-inf", "0x10", "1e999", "1.2.3", "p", "pI", "Pi", " 1", "1 ", "--1"}) {
        EXPECT_THROW(parse_number(bad), NumberFormatError) << bad;
    }
}

TEST(parse_number, error_offset_points_into_literal) {
    try {
        parse_number("pi*2");
        FAIL();
    } catch (const NumberFormatError &e) {
        EXPECT_EQ(e.offset(), 2u);
    }
}

TEST(format, roundtrip_is_exact) {
    std::mt19937_64 rng(3);
    std::uniform_real_distribution<double> u(-1e3, 1e3);
    for (int i = 0; i < 2000; ++i) {
        const double x = i % 3 == 0 ? u(rng) * 1e-12 : u(rng);
        ASSERT_EQ(parse_number(format_roundtrip(x)), x);
        ASSERT_EQ(std::stod(format_17g(x)), x);
    }
    EXPECT_EQ(format_17g(0.5), "0.5");
    EXPECT_EQ(format_17g(kPi), "3.1415926535897931");
}

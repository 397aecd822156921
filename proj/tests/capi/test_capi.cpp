// Copyright 2026 The qlego Authors
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

#include <gtest/gtest.h>

#include <string>

#include "qlego/qlego.h"

namespace {

/// Takes ownership of a returned string.
std::string take(char *s) {
    std::string out = s == nullptr ? "" : s;
    qlego_string_free(s);
    return out;
}

struct Net {
    qlego_network *ptr = nullptr;
    ~Net() { qlego_network_free(ptr); }
};

struct Code {
    qlego_code *ptr = nullptr;
    ~Code() { qlego_code_free(ptr); }
};

TEST(CApi, SteaneFromDemo) {
    Net net;
    ASSERT_EQ(qlego_network_demo("steane-from-422", nullptr, &net.ptr), QLEGO_OK);
    Code code;
    ASSERT_EQ(qlego_code_build(net.ptr, &code.ptr), QLEGO_OK);
    size_t n = 0, ak = 0, k = 0;
    ASSERT_EQ(qlego_code_params(code.ptr, &n, &ak, &k), QLEGO_OK);
    EXPECT_EQ(n, 7u);
    EXPECT_EQ(k, 1u);
    int css = 0, self_dual = 0;
    ASSERT_EQ(qlego_code_flags(code.ptr, &css, &self_dual), QLEGO_OK);
    EXPECT_EQ(css, 1);
    qlego_report_options options{1, 0, 0, 0, 0};
    char *text = nullptr;
    ASSERT_EQ(qlego_code_report(code.ptr, &options, &text), QLEGO_OK);
    EXPECT_EQ(take(text).rfind("code [[7,1,3]]", 0), 0u);
    options.json = 1;
    ASSERT_EQ(qlego_code_report(code.ptr, &options, &text), QLEGO_OK);
    EXPECT_NE(take(text).find("\"n\": 7"), std::string::npos);
}

TEST(CApi, WriteParseRoundTrip) {
    Net net;
    ASSERT_EQ(qlego_network_demo("chain", R"({"m": 4})", &net.ptr), QLEGO_OK);
    char *text = nullptr;
    ASSERT_EQ(qlego_network_write(net.ptr, &text), QLEGO_OK);
    std::string written = take(text);
    Net back;
    ASSERT_EQ(qlego_network_parse(written.c_str(), &back.ptr), QLEGO_OK);
    ASSERT_EQ(qlego_network_write(back.ptr, &text), QLEGO_OK);
    EXPECT_EQ(take(text), written);
    ASSERT_EQ(qlego_network_plan(net.ptr, &text), QLEGO_OK);
    EXPECT_FALSE(take(text).empty());
}

TEST(CApi, ErrorsCarryCodesAndMessages) {
    Net net;
    EXPECT_EQ(qlego_network_parse("{\n  oops", &net.ptr), QLEGO_ERR_USAGE);
    EXPECT_EQ(net.ptr, nullptr);
    EXPECT_NE(std::string(qlego_last_error()).find("line 2"), std::string::npos);
    EXPECT_EQ(qlego_network_load("/nonexistent.json", &net.ptr), QLEGO_ERR_USAGE);
    EXPECT_EQ(qlego_network_demo("no-such-demo", nullptr, &net.ptr), QLEGO_ERR_USAGE);
    EXPECT_EQ(qlego_network_demo("toric", "{\"L\": ", &net.ptr), QLEGO_ERR_USAGE);
    EXPECT_EQ(qlego_network_parse(nullptr, &net.ptr), QLEGO_ERR_USAGE);
    EXPECT_EQ(qlego_network_parse("{}", nullptr), QLEGO_ERR_USAGE);
    EXPECT_EQ(qlego_code_build(nullptr, nullptr), QLEGO_ERR_USAGE);
    qlego_network_free(nullptr);
    qlego_code_free(nullptr);
    qlego_string_free(nullptr);
}

TEST(CApi, BudgetExceededOnLargeDecode) {
    Net net;
    ASSERT_EQ(qlego_network_demo("toric", R"({"L": 4})", &net.ptr), QLEGO_OK);
    Code code;
    ASSERT_EQ(qlego_code_build(net.ptr, &code.ptr), QLEGO_OK);
    char *csv = nullptr;
    EXPECT_EQ(qlego_code_decode(code.ptr, 0.01, 10, 1, 0, &csv), QLEGO_ERR_BUDGET);
    EXPECT_FALSE(std::string(qlego_last_error()).empty());
}

TEST(CApi, ErasureGaugeFixAndDecode) {
    Net net;
    ASSERT_EQ(qlego_network_demo("steane-from-422", nullptr, &net.ptr), QLEGO_OK);
    Code code;
    ASSERT_EQ(qlego_code_build(net.ptr, &code.ptr), QLEGO_OK);
    int ok = -1;
    ASSERT_EQ(qlego_code_erasure(code.ptr, "", &ok), QLEGO_OK);
    EXPECT_EQ(ok, 1);
    EXPECT_EQ(qlego_code_erasure(code.ptr, "zz.9", &ok), QLEGO_ERR_USAGE);
    char *csv = nullptr;
    ASSERT_EQ(qlego_code_decode(code.ptr, 0.0, 100, 1, 1, &csv), QLEGO_OK);
    EXPECT_EQ(take(csv), "p,trials,failures,rate,ci_low,ci_high\n0,100,0,0,0,0.03699349821\n");
    char *tl = nullptr;
    ASSERT_EQ(qlego_code_export_tl(code.ptr, "X", &tl), QLEGO_OK);
    EXPECT_EQ(take(tl).rfind("# T(X) n=7 entries=64\n", 0), 0u);

    Net bs;
    ASSERT_EQ(qlego_network_demo("bacon-shor", nullptr, &bs.ptr), QLEGO_OK);
    Code sub;
    ASSERT_EQ(qlego_code_build(bs.ptr, &sub.ptr), QLEGO_OK);
    size_t keep = 4;
    ASSERT_EQ(qlego_code_gauge_fix(sub.ptr, 2, &keep, 1), QLEGO_OK);
    size_t n = 0, ak = 0, k = 0;
    ASSERT_EQ(qlego_code_params(sub.ptr, &n, &ak, &k), QLEGO_OK);
    EXPECT_EQ(n, 9u);
    EXPECT_EQ(k, 1u);
    size_t bad = 99;
    EXPECT_EQ(qlego_code_gauge_fix(sub.ptr, 2, &bad, 1), QLEGO_ERR_USAGE);
}

TEST(CApi, PushAndRepresent) {
    Net net;
    ASSERT_EQ(qlego_network_demo("rm-pair", nullptr, &net.ptr), QLEGO_OK);
    int ok = 0;
    char *text = nullptr;
    char *dot = nullptr;
    ASSERT_EQ(qlego_network_push(net.ptr, R"({"a": "logical_Tdag", "b": "logical_T"})", &ok, &text, &dot),
              QLEGO_OK);
    EXPECT_EQ(ok, 1);
    EXPECT_EQ(take(text).rfind("ok\n", 0), 0u);
    EXPECT_EQ(take(dot).rfind("graph flow {", 0), 0u);
    EXPECT_EQ(qlego_network_push(net.ptr, R"({"a": "bogus"})", &ok, &text, nullptr), QLEGO_ERR_USAGE);

    Net steane;
    ASSERT_EQ(qlego_network_demo("steane-from-422", nullptr, &steane.ptr), QLEGO_OK);
    int found = 0;
    ASSERT_EQ(qlego_network_represent(steane.ptr, R"({"b.3": "Z"})", &found, &text, &dot), QLEGO_OK);
    EXPECT_EQ(found, 1);
    EXPECT_EQ(take(text).rfind("representation ", 0), 0u);
    take(dot);
}

TEST(CApi, ControlledZCheck) {
    int pass = 0;
    ASSERT_EQ(qlego_verify_cz(3, &pass), QLEGO_OK);
    EXPECT_EQ(pass, 1);
    EXPECT_EQ(qlego_verify_cz(4, &pass), QLEGO_ERR_USAGE);
}

}  // namespace

// Copyright 2026 The ghzpurify Authors
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

#include "verify.hpp"

#include <gtest/gtest.h>

#include "test_util.hpp"

using namespace ghzpurify;

TEST(verify, default_run_passes) {
    auto report = run_verify({});
    EXPECT_TRUE(report.passed);
    EXPECT_EQ(report.tolerance, 1e-12);
    bool saw_link = false, saw_phase = false;
    for (const auto &row : report.rows) {
        EXPECT_LE(row.max_abs_deviation, 1e-12) << row.n << " " << row.tag;
        EXPECT_GT(row.cases, 0);
        saw_link |= row.tag == "link";
        saw_phase |= row.tag == "phase-residual";
    }
    EXPECT_TRUE(saw_link);
    EXPECT_TRUE(saw_phase);
}

TEST(verify, exact_run_has_zero_deviation) {
    VerifyOptions opts;
    opts.ns = {3};
    opts.exact = true;
    auto report = run_verify(opts);
    EXPECT_TRUE(report.passed);
    for (const auto &row : report.rows) {
        EXPECT_EQ(row.max_abs_deviation, 0.0) << row.tag;
    }
}

TEST(verify, injected_fault_fails) {
    VerifyOptions opts;
    opts.ns = {3};
    opts.inject_fault = true;
    EXPECT_FALSE(run_verify(opts).passed);
    opts.exact = true;
    EXPECT_FALSE(run_verify(opts).passed);
}

TEST(verify, size_cap) {
    VerifyOptions opts;
    opts.ns = {6};
    EXPECT_THROW_CODE(run_verify(opts), ErrorCode::size_cap);
}

TEST(verify, asymmetric_vectors_are_fixed) {
    auto a = asymmetric_vectors(3, 20, 0x67687a70ULL);
    auto b = asymmetric_vectors(3, 20, 0x67687a70ULL);
    EXPECT_EQ(a, b);
    ASSERT_EQ(a.size(), 20u);
    for (const auto &v : a) {
        ASSERT_EQ(v.size(), 4u);
        for (auto x : v) {
            EXPECT_GE(x, 1u);
            EXPECT_LE(x, 1000u);
        }
    }
    EXPECT_NE(a, asymmetric_vectors(3, 20, 1));
}

TEST(verify, csv_layout) {
    VerifyOptions opts;
    opts.ns = {3};
    opts.asymmetric = 2;
    std::string csv = verify_csv(run_verify(opts));
    EXPECT_EQ(csv.rfind("n,class,max_abs_deviation\n", 0), 0u);
    EXPECT_NE(csv.find("\n3,010,"), std::string::npos);
}

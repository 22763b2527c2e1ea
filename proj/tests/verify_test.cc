// Copyright 2026 The cvtele Authors
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

#include "cvtele/verify.h"

#include <sstream>

#include "gtest/gtest.h"

using namespace cvtele;

TEST(verify, all_checks_pass) {
    std::ostringstream out;
    const VerifyReport report = run_verify(out);
    EXPECT_EQ(report.checks.size(), 12u);
    for (const auto &c : report.checks) {
        EXPECT_TRUE(c.passed) << c.name << ": " << c.detail;
        // The discrepancy check is a lower bound: it needs the unweighted sum to be off.
        if (c.name == "unweighted_sum_discrepancy") {
            EXPECT_GT(c.max_deviation, c.tolerance);
        } else {
            EXPECT_LE(c.max_deviation, c.tolerance) << c.name;
        }
    }
    EXPECT_TRUE(report.passed());
    EXPECT_NE(out.str().find("verify: 12/12 checks passed"), std::string::npos);
}

TEST(verify, unweighted_discrepancy_is_reported) {
    std::ostringstream out;
    const VerifyReport report = run_verify(out);
    const CheckResult *c = report.find("unweighted_sum_discrepancy");
    ASSERT_NE(c, nullptr);
    EXPECT_TRUE(c->passed);
    EXPECT_NE(c->detail.find("N=1 m=2: unweighted deviation 1.000e+00 (ratio 2.000e+00)"), std::string::npos)
        << c->detail;
    EXPECT_EQ(report.find("no_such_check"), nullptr);
}

TEST(verify, transfer_table) {
    const auto table = compare_transfer_weights(3);
    ASSERT_FALSE(table.empty());
    for (const auto &row : table) {
        EXPECT_NEAR(row.weighted, row.oracle, 1e-10) << "N=" << row.arms << " m=" << row.photons;
        if (row.arms == 1 && row.photons == 2) {
            EXPECT_NEAR(row.oracle, 1.0, 1e-12);
            EXPECT_NEAR(row.unweighted, 2.0, 1e-12);
        }
    }
}

TEST(verify, unweighted_transfer_fails) {
    std::ostringstream out;
    VerifyOptions options;
    options.unweighted_transfer = true;
    const VerifyReport report = run_verify(out, options);
    EXPECT_FALSE(report.passed());
    EXPECT_FALSE(report.find("transfer_weights_vs_oracle")->passed);
    EXPECT_FALSE(report.find("ideal_oracle_qutrit")->passed);
    EXPECT_NE(out.str().find("[FAIL]"), std::string::npos);
}

TEST(verify, corrupted_kraus_fails) {
    std::ostringstream out;
    VerifyOptions options;
    options.kraus = [](NoiseKind kind, double p) {
        KrausSet k = kraus_set(kind, p);
        k.weights.front() *= 1.02;
        return k;
    };
    const VerifyReport report = run_verify(out, options);
    EXPECT_FALSE(report.passed());
    EXPECT_FALSE(report.find("kraus_completeness")->passed);
}

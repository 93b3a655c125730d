// Copyright 2026 The qdspin Authors
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

#include "qdspin/verify.h"

#include "gtest/gtest.h"

using namespace qdspin;

TEST(verify, ideal_build_passes) {
    for (auto target : {VerifyTarget::kPhaseGate, VerifyTarget::kCnot, VerifyTarget::kAll}) {
        auto report = verify(target);
        ASSERT_TRUE(report.passed()) << report.str();
        ASSERT_FALSE(report.checks.empty());
    }
}

TEST(verify, report_lines) {
    auto pg = verify(VerifyTarget::kPhaseGate).str();
    ASSERT_NE(pg.find("gate == diag(1,1,1,-1): PASS"), std::string::npos) << pg;
    auto cn = verify(VerifyTarget::kCnot);
    int probability_checks = 0;
    for (const auto &c : cn.checks) {
        if (c.name.find("== 0.25") != std::string::npos) {
            probability_checks++;
        }
    }
    ASSERT_EQ(probability_checks, 4) << cn.str();
}

TEST(verify, parse_target) {
    ASSERT_EQ(parse_verify_target("all"), VerifyTarget::kAll);
    ASSERT_EQ(parse_verify_target("cnot"), VerifyTarget::kCnot);
    ASSERT_EQ(parse_verify_target("phase-gate"), VerifyTarget::kPhaseGate);
    ASSERT_FALSE(parse_verify_target("both").has_value());
}

TEST(verify, reference_table_is_ideal_response) {
    ASSERT_LT((reference_interaction_table() - scatter_matrix(ScatterCoefficients::ideal())).norm(), kExactTol);
}

TEST(verify, catches_every_single_sign_flip_in_cavity_rules) {
    Eigen::MatrixXcd table = reference_interaction_table();
    for (int site : {1, 2}) {
        for (int col = 0; col < 8; col++) {
            for (int row = 0; row < 8; row++) {
                if (table(row, col) == Complex(0)) {
                    continue;
                }
                Hardware hw = Hardware::ideal();
                Eigen::MatrixXcd &m = site == 1 ? hw.cavity1 : hw.cavity2;
                m(row, col) = -m(row, col);
                ASSERT_FALSE(verify(VerifyTarget::kAll, hw).passed()) << "site " << site << " column " << col;
            }
        }
    }
}

TEST(verify, catches_every_single_sign_flip_in_waveplate) {
    for (int k = 0; k < 4; k++) {
        Hardware hw = Hardware::ideal();
        hw.hwp1(k / 2, k % 2) *= -1;
        ASSERT_FALSE(verify(VerifyTarget::kAll, hw).passed()) << k;
        // The protocol checks catch it too, not just the element check.
        auto pg = verify(VerifyTarget::kPhaseGate, hw);
        ASSERT_FALSE(pg.passed()) << k;
    }
}

TEST(verify, lossy_hardware_fails) {
    CavityParams p;
    ASSERT_FALSE(verify(VerifyTarget::kAll, Hardware::from(p)).passed());
}

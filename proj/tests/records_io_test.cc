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

#include "qdspin/records_io.h"

#include <random>

#include "gtest/gtest.h"
#include "json.hpp"

using namespace qdspin;

namespace {

std::vector<SweepRecord> sample_records() {
    return {
        {Protocol::kPhaseGate, 0.1, 0, 0.1, 0, 0.123456789123, 1.5e-5, 0.5, 2000, 42},
        {Protocol::kCnot, 2.5, 0.05, 0.1, -0.25, 0.999999999999, 0, 1, 1, 18446744073709551615ull},
    };
}

std::vector<std::string> lines(const std::string &text) {
    std::vector<std::string> out;
    size_t start = 0;
    for (size_t nl; (nl = text.find('\n', start)) != std::string::npos; start = nl + 1) {
        out.push_back(text.substr(start, nl - start));
    }
    return out;
}

}  // namespace

TEST(records_io, format_sig9) {
    ASSERT_EQ(format_sig9(0.1), "0.1");
    ASSERT_EQ(format_sig9(0.123456789123), "0.123456789");
    ASSERT_EQ(format_sig9(1.5e-5), "1.5e-05");
    ASSERT_EQ(format_sig9(0), "0");
}

TEST(records_io, csv_layout) {
    auto text = records_to_csv(sample_records());
    auto rows = lines(text);
    ASSERT_EQ(rows.size(), 3u);
    ASSERT_EQ(rows[0],
              "protocol,g_over_kappa,kappa_s_over_kappa,gamma_over_kappa,detuning_over_kappa,mean_fidelity,std_error,"
              "efficiency,n_samples,seed");
    ASSERT_EQ(rows[1], "phase-gate,0.1,0,0.1,0,0.123456789,1.5e-05,0.5,2000,42");
    ASSERT_EQ(rows[2], "cnot,2.5,0.05,0.1,-0.25,1,0,1,1,18446744073709551615");
}

TEST(records_io, csv_round_trip) {
    std::mt19937_64 rng(8);
    std::uniform_real_distribution<double> u(0, 1);
    std::vector<SweepRecord> records;
    for (int k = 0; k < 200; k++) {
        records.push_back({k % 2 ? Protocol::kCnot : Protocol::kPhaseGate, 3 * u(rng), 0.5 * u(rng), u(rng),
                           4 * u(rng) - 2, u(rng), 1e-3 * u(rng), u(rng), static_cast<size_t>(k + 1), rng()});
    }
    auto text = records_to_csv(records);
    auto parsed = parse_records_csv(text);
    ASSERT_EQ(parsed.size(), records.size());
    for (size_t i = 0; i < records.size(); i++) {
        ASSERT_EQ(parsed[i].protocol, records[i].protocol);
        ASSERT_EQ(format_sig9(parsed[i].mean_fidelity), format_sig9(records[i].mean_fidelity));
        ASSERT_EQ(format_sig9(parsed[i].g_over_kappa), format_sig9(records[i].g_over_kappa));
        ASSERT_EQ(parsed[i].n_samples, records[i].n_samples);
        ASSERT_EQ(parsed[i].seed, records[i].seed);
    }
    ASSERT_EQ(records_to_csv(parsed), text);
}

TEST(records_io, csv_errors) {
    ASSERT_THROW(parse_records_csv("nope\n"), std::invalid_argument);
    std::string header(kCsvHeader);
    ASSERT_THROW(parse_records_csv(header + "\ncnot,1,2\n"), std::invalid_argument);
    ASSERT_THROW(parse_records_csv(header + "\ncz,1,0,0.1,0,1,0,1,10,1\n"), std::invalid_argument);
    ASSERT_THROW(parse_records_csv(header + "\ncnot,x,0,0.1,0,1,0,1,10,1\n"), std::invalid_argument);
    ASSERT_TRUE(parse_records_csv(header + "\n").empty());
}

TEST(records_io, json_keys_match_csv) {
    auto doc = nlohmann::json::parse(records_to_json(sample_records()));
    ASSERT_TRUE(doc.is_array());
    ASSERT_EQ(doc.size(), 2u);
    std::vector<std::string> keys;
    for (auto it = doc[0].begin(); it != doc[0].end(); ++it) {
        keys.push_back(it.key());
    }
    // Plain json sorts its keys; the emitted order is checked with ordered_json.
    auto ordered = nlohmann::ordered_json::parse(records_to_json(sample_records()));
    std::string header;
    for (auto it = ordered[0].begin(); it != ordered[0].end(); ++it) {
        header += (header.empty() ? "" : ",") + it.key();
    }
    ASSERT_EQ(header, kCsvHeader);
    ASSERT_EQ(keys.size(), 10u);
    ASSERT_EQ(doc[0]["protocol"], "phase-gate");
    ASSERT_EQ(doc[0]["mean_fidelity"].get<double>(), 0.123456789);
    ASSERT_EQ(doc[1]["seed"].get<uint64_t>(), 18446744073709551615ull);
}

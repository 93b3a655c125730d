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

#include <charconv>
#include <cstdio>
#include <stdexcept>

#include "json.hpp"

namespace qdspin {

namespace {

double round_sig9(double v) { return std::strtod(format_sig9(v).c_str(), nullptr); }

std::vector<std::string_view> split(std::string_view s, char sep) {
    std::vector<std::string_view> out;
    size_t start = 0;
    while (true) {
        size_t pos = s.find(sep, start);
        out.push_back(s.substr(start, pos - start));
        if (pos == std::string_view::npos) {
            return out;
        }
        start = pos + 1;
    }
}

double parse_double(std::string_view field) {
    std::string tmp(field);
    char *end = nullptr;
    double v = std::strtod(tmp.c_str(), &end);
    if (tmp.empty() || *end != '\0') {
        throw std::invalid_argument("bad float field: " + tmp);
    }
    return v;
}

template <typename T>
T parse_unsigned(std::string_view field) {
    T v{};
    auto [ptr, ec] = std::from_chars(field.data(), field.data() + field.size(), v);
    if (ec != std::errc() || ptr != field.data() + field.size()) {
        throw std::invalid_argument("bad integer field: " + std::string(field));
    }
    return v;
}

}  // namespace

std::string format_sig9(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.9g", v == 0 ? 0.0 : v);
    return buf;
}

std::string records_to_csv(const std::vector<SweepRecord> &records) {
    std::string out(kCsvHeader);
    out += '\n';
    for (const auto &r : records) {
        out += protocol_name(r.protocol);
        for (double v : {r.g_over_kappa, r.kappa_s_over_kappa, r.gamma_over_kappa, r.detuning_over_kappa,
                         r.mean_fidelity, r.std_error, r.efficiency}) {
            out += ',';
            out += format_sig9(v);
        }
        out += ',' + std::to_string(r.n_samples) + ',' + std::to_string(r.seed) + '\n';
    }
    return out;
}

std::string records_to_json(const std::vector<SweepRecord> &records) {
    auto arr = nlohmann::ordered_json::array();
    for (const auto &r : records) {
        nlohmann::ordered_json o;
        o["protocol"] = std::string(protocol_name(r.protocol));
        o["g_over_kappa"] = round_sig9(r.g_over_kappa);
        o["kappa_s_over_kappa"] = round_sig9(r.kappa_s_over_kappa);
        o["gamma_over_kappa"] = round_sig9(r.gamma_over_kappa);
        o["detuning_over_kappa"] = round_sig9(r.detuning_over_kappa);
        o["mean_fidelity"] = round_sig9(r.mean_fidelity);
        o["std_error"] = round_sig9(r.std_error);
        o["efficiency"] = round_sig9(r.efficiency);
        o["n_samples"] = r.n_samples;
        o["seed"] = r.seed;
        arr.push_back(std::move(o));
    }
    return arr.dump(2) + "\n";
}

std::vector<SweepRecord> parse_records_csv(std::string_view text) {
    auto lines = split(text, '\n');
    if (lines.empty() || lines[0] != kCsvHeader) {
        throw std::invalid_argument("missing or unexpected CSV header");
    }
    std::vector<SweepRecord> out;
    for (size_t i = 1; i < lines.size(); i++) {
        if (lines[i].empty()) {
            continue;
        }
        auto f = split(lines[i], ',');
        if (f.size() != 10) {
            throw std::invalid_argument("CSV row " + std::to_string(i) + " has " + std::to_string(f.size()) +
                                        " fields");
        }
        auto protocol = parse_protocol(f[0]);
        if (!protocol) {
            throw std::invalid_argument("unknown protocol in CSV: " + std::string(f[0]));
        }
        out.push_back({*protocol, parse_double(f[1]), parse_double(f[2]), parse_double(f[3]), parse_double(f[4]),
                       parse_double(f[5]), parse_double(f[6]), parse_double(f[7]), parse_unsigned<size_t>(f[8]),
                       parse_unsigned<uint64_t>(f[9])});
    }
    return out;
}

}  // namespace qdspin

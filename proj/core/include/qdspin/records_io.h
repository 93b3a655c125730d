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

#ifndef QDSPIN_RECORDS_IO_H
#define QDSPIN_RECORDS_IO_H

#include <string>
#include <string_view>
#include <vector>

#include "qdspin/analysis.h"

namespace qdspin {

inline constexpr std::string_view kCsvHeader =
    "protocol,g_over_kappa,kappa_s_over_kappa,gamma_over_kappa,detuning_over_kappa,mean_fidelity,std_error,"
    "efficiency,n_samples,seed";

/// Nine significant digits, locale independent.
std::string format_sig9(double v);

/// Header line plus one line per record, each terminated by '\n'.
std::string records_to_csv(const std::vector<SweepRecord> &records);

/// Array of objects keyed like the CSV header; floats rounded to nine significant digits.
std::string records_to_json(const std::vector<SweepRecord> &records);

/// Parses text produced by records_to_csv. Throws std::invalid_argument on malformed input.
std::vector<SweepRecord> parse_records_csv(std::string_view text);

}  // namespace qdspin

#endif  // QDSPIN_RECORDS_IO_H

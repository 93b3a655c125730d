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

#ifndef QDSPIN_VERIFY_H
#define QDSPIN_VERIFY_H

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "qdspin/protocols.h"

namespace qdspin {

enum class VerifyTarget { kPhaseGate, kCnot, kAll };

std::optional<VerifyTarget> parse_verify_target(std::string_view name);

struct Check {
    std::string name;
    bool passed;
    std::string detail;
};

struct VerifyReport {
    std::vector<Check> checks;

    bool passed() const;
    /// One "name: PASS|FAIL (detail)" line per check.
    std::string str() const;
};

/// Ideal-case self check of the optical elements and both protocols.
///
/// Compares the cavity responses against the eight spin-selective scattering
/// rules, the waveplate against its defining transformation, the extracted gate
/// matrices against CZ / CNOT, the branch statistics, the projected spin states
/// against the measurement tables, and every traced stage against closed-form
/// states at amplitudes (0.6, 0.8) and (0.8, 0.6). Exceptions thrown while
/// running a check count as failures.
VerifyReport verify(VerifyTarget target, const Hardware &hw = Hardware::ideal());

/// The reference cavity response with each of the eight rules written out.
Eigen::MatrixXcd reference_interaction_table();

}  // namespace qdspin

#endif  // QDSPIN_VERIFY_H

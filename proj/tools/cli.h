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

#ifndef QDSPIN_TOOLS_CLI_H
#define QDSPIN_TOOLS_CLI_H

#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "qdspin/statevec.h"

namespace qdspin::cli {

enum ExitCode : int {
    kOk = 0,
    kVerifyFailed = 1,
    kUsage = 2,
    kInvalidInput = 3,
    kIoError = 4,
};

/// Runs `qdspin <args...>`; args excludes the program name.
int run(const std::vector<std::string> &args, std::ostream &out, std::ostream &err);

/// "re:im,re:im" -> spinor. Returns nullopt on syntax errors.
std::optional<Spinor> parse_spinor(std::string_view text);

/// "a,b,c" or "lo/hi/steps". Returns nullopt on syntax errors or zero steps.
std::optional<std::vector<double>> parse_value_list(std::string_view text);

/// Complex number as "re+im i" with six significant digits.
std::string format_complex6(Complex c);

}  // namespace qdspin::cli

#endif  // QDSPIN_TOOLS_CLI_H

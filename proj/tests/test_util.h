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

#ifndef QDSPIN_TESTS_TEST_UTIL_H
#define QDSPIN_TESTS_TEST_UTIL_H

#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <string>

#include "qdspin/statevec.h"

namespace qdspin::testing {

inline Spinor spinor(Complex a, Complex b) {
    Spinor s;
    s << a, b;
    return s;
}

inline const Spinor kUp = spinor(1, 0);
inline const Spinor kDown = spinor(0, 1);
inline const Spinor kPlus = spinor(M_SQRT1_2, M_SQRT1_2);

inline StateVector two_spin(Complex uu, Complex ud, Complex du, Complex dd) {
    Eigen::VectorXcd v(4);
    v << uu, ud, du, dd;
    return StateVector({spin_label(1), spin_label(2)}, v);
}

/// Scratch directory for files written by tests.
inline std::string tmp_path(const std::string &name) {
    const char *dir = std::getenv("QDSPIN_TEST_TMPDIR");
    return (dir ? std::filesystem::path(dir) : std::filesystem::temp_directory_path()) / name;
}

}  // namespace qdspin::testing

#endif  // QDSPIN_TESTS_TEST_UTIL_H

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

#ifndef QDSPIN_OPTICS_H
#define QDSPIN_OPTICS_H

#include "qdspin/statevec.h"

namespace qdspin {

enum class Circular { kR = 0, kL = 1 };
enum class Direction { kUp = 0, kDown = 1 };

inline Circular opposite(Circular p) { return p == Circular::kR ? Circular::kL : Circular::kR; }
inline Direction opposite(Direction d) { return d == Direction::kUp ? Direction::kDown : Direction::kUp; }

enum class Pauli { kI, kX, kZ };

char pauli_char(Pauli p);

/// Half-wave plate mixing the circular basis:
///   R -> (R + L)/sqrt2,   L -> -(L - R)/sqrt2.
Eigen::Matrix2cd hwp1_matrix();
Operator hwp1(int photon);
Operator hwp1(int photon, const Eigen::Matrix2cd &matrix);

/// Relabels the circular frame as the linear one (R <-> H, L <-> V) or back.
/// Amplitudes are untouched; only the frame flag of the photon changes.
StateVector hwp2(const StateVector &state, int photon);

/// Circular-basis PBS network: sends the R component onto `dir_for_r` and the L
/// component onto `dir_for_l`. Amplitudes of equal polarization arriving from
/// different directions add coherently.
StateVector route(const StateVector &state, int photon, Direction dir_for_r, Direction dir_for_l);

Eigen::Matrix2cd hadamard_matrix();
Eigen::Matrix2cd pauli_matrix(Pauli p);

Operator spin_hadamard(int spin);
Operator spin_pauli(Pauli p, int spin);

}  // namespace qdspin

#endif  // QDSPIN_OPTICS_H

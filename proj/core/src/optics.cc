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

#include "qdspin/optics.h"

#include <cmath>
#include <stdexcept>

namespace qdspin {

char pauli_char(Pauli p) {
    switch (p) {
        case Pauli::kI:
            return 'I';
        case Pauli::kX:
            return 'X';
        case Pauli::kZ:
            return 'Z';
    }
    return '?';
}

Eigen::Matrix2cd hwp1_matrix() {
    const double s = 1 / std::sqrt(2.0);
    Eigen::Matrix2cd m;
    // Columns are the images of R and L.
    m << s, s,
         s, -s;
    return m;
}

Operator hwp1(int photon) { return hwp1(photon, hwp1_matrix()); }

Operator hwp1(int photon, const Eigen::Matrix2cd &matrix) {
    return {{polarization_id(photon)}, matrix, PolarizationFrame::kCircular};
}

StateVector hwp2(const StateVector &state, int photon) {
    auto label = state.label(polarization_id(photon));
    label.frame =
        label.frame == PolarizationFrame::kCircular ? PolarizationFrame::kLinear : PolarizationFrame::kCircular;
    return state.with_label(label.id, label);
}

StateVector route(const StateVector &state, int photon, Direction dir_for_r, Direction dir_for_l) {
    if (state.label(polarization_id(photon)).frame != PolarizationFrame::kCircular) {
        throw std::invalid_argument("route requires photon " + std::to_string(photon) + " in the circular frame");
    }
    const size_t pol_bit = state.bit(polarization_id(photon));
    const size_t dir_bit = state.bit(direction_id(photon));
    const auto &in = state.amplitudes();
    Eigen::VectorXcd out = Eigen::VectorXcd::Zero(in.size());
    for (size_t idx = 0; idx < state.dimension(); idx++) {
        Direction target = (idx & pol_bit) ? dir_for_l : dir_for_r;
        size_t dst = (idx & ~dir_bit) | (target == Direction::kDown ? dir_bit : 0);
        out[static_cast<Eigen::Index>(dst)] += in[static_cast<Eigen::Index>(idx)];
    }
    return StateVector(state.subsystems(), std::move(out));
}

Eigen::Matrix2cd hadamard_matrix() {
    const double s = 1 / std::sqrt(2.0);
    Eigen::Matrix2cd m;
    m << s, s,
         s, -s;
    return m;
}

Eigen::Matrix2cd pauli_matrix(Pauli p) {
    Eigen::Matrix2cd m;
    switch (p) {
        case Pauli::kI:
            m << 1, 0,
                 0, 1;
            break;
        case Pauli::kX:
            m << 0, 1,
                 1, 0;
            break;
        case Pauli::kZ:
            m << 1, 0,
                 0, -1;
            break;
    }
    return m;
}

Operator spin_hadamard(int spin) { return {{spin_id(spin)}, hadamard_matrix(), std::nullopt}; }

Operator spin_pauli(Pauli p, int spin) { return {{spin_id(spin)}, pauli_matrix(p), std::nullopt}; }

}  // namespace qdspin

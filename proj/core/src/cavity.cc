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

#include "qdspin/cavity.h"

#include <cmath>
#include <stdexcept>

namespace qdspin {

namespace {

constexpr Complex kI{0.0, 1.0};
constexpr double kMinDenominator = 1e-15;

Complex checked_quotient(Complex num, Complex den) {
    if (std::abs(den) < kMinDenominator) {
        throw std::domain_error("cavity response denominator vanishes for these parameters");
    }
    return num / den;
}

size_t local_index(Circular pol, Direction dir, int spin_down) {
    return 4 * static_cast<size_t>(pol) + 2 * static_cast<size_t>(dir) + static_cast<size_t>(spin_down);
}

}  // namespace

void CavityParams::validate() const {
    for (double v : {g, kappa, kappa_s, gamma, probe_detuning, cavity_detuning, dipole_detuning}) {
        if (!std::isfinite(v)) {
            throw std::domain_error("cavity parameters must be finite");
        }
    }
    if (g < 0 || kappa_s < 0 || gamma < 0) {
        throw std::domain_error("g, kappa_s and gamma must be non-negative");
    }
    if (kappa <= 0) {
        throw std::domain_error("kappa must be positive");
    }
}

ScatterCoefficients ScatterCoefficients::ideal() { return {1.0, 0.0, 0.0, -1.0}; }

bool ScatterCoefficients::lossless(double tol) const {
    return std::abs(hot_power() - 1) <= tol && std::abs(cold_power() - 1) <= tol;
}

CoefficientPair hot_coefficients(const CavityParams &p) {
    p.validate();
    const Complex dipole = kI * (p.dipole_detuning - p.probe_detuning) + p.gamma / 2;
    const Complex cavity = kI * (p.cavity_detuning - p.probe_detuning);
    const double g2 = p.g * p.g;
    const Complex den = dipole * (cavity + p.kappa + p.kappa_s / 2) + g2;
    return {checked_quotient(dipole * (cavity + p.kappa_s / 2) + g2, den), checked_quotient(-p.kappa * dipole, den)};
}

CoefficientPair cold_coefficients(const CavityParams &p) {
    p.validate();
    const Complex cavity = kI * (p.cavity_detuning - p.probe_detuning);
    const Complex den = cavity + p.kappa + p.kappa_s / 2;
    return {checked_quotient(cavity + p.kappa_s / 2, den), checked_quotient(Complex(-p.kappa), den)};
}

ScatterCoefficients scatter_coefficients(const CavityParams &p) {
    auto hot = hot_coefficients(p);
    auto cold = cold_coefficients(p);
    return {hot.reflection, hot.transmission, cold.reflection, cold.transmission};
}

int sz_of_mode(Circular pol, Direction dir) {
    return (pol == Circular::kR) == (dir == Direction::kUp) ? +1 : -1;
}

Eigen::MatrixXcd scatter_matrix(const ScatterCoefficients &c) {
    if (c.hot_power() > 1 + kBoundTol || c.cold_power() > 1 + kBoundTol) {
        throw std::domain_error("scatter coefficients exceed unit power");
    }
    Eigen::MatrixXcd m = Eigen::MatrixXcd::Zero(8, 8);
    for (Circular pol : {Circular::kR, Circular::kL}) {
        for (Direction dir : {Direction::kUp, Direction::kDown}) {
            for (int spin_down : {0, 1}) {
                const int coupled_sz = spin_down ? -1 : +1;
                const bool hot = sz_of_mode(pol, dir) == coupled_sz;
                const size_t in = local_index(pol, dir, spin_down);
                const size_t flipped = local_index(opposite(pol), opposite(dir), spin_down);
                const auto i = static_cast<Eigen::Index>(in);
                const auto f = static_cast<Eigen::Index>(flipped);
                m(f, i) += hot ? c.r : c.r0;
                m(i, i) += hot ? c.t : c.t0;
            }
        }
    }
    return m;
}

Operator scatter_operator(const ScatterCoefficients &c, int photon, int spin) {
    return scatter_operator(scatter_matrix(c), photon, spin);
}

Operator scatter_operator(const Eigen::MatrixXcd &local_response, int photon, int spin) {
    if (local_response.rows() != 8 || local_response.cols() != 8) {
        throw std::invalid_argument("cavity response must be 8x8");
    }
    return {{polarization_id(photon), direction_id(photon), spin_id(spin)},
            local_response,
            PolarizationFrame::kCircular};
}

}  // namespace qdspin

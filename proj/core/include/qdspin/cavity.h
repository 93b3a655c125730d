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

#ifndef QDSPIN_CAVITY_H
#define QDSPIN_CAVITY_H

#include "qdspin/optics.h"
#include "qdspin/statevec.h"

namespace qdspin {

/// Physical rates of a double-sided QD-microcavity unit.
///
/// All rates and detunings are in units of the cavity field decay rate, so
/// `kappa` stays at 1 unless a caller deliberately rescales everything.
struct CavityParams {
    double g = 1.0;
    double kappa = 1.0;
    double kappa_s = 0.0;
    double gamma = 0.1;
    /// Probe detuning, omega - omega_0.
    double probe_detuning = 0.0;
    /// omega_c - omega_0.
    double cavity_detuning = 0.0;
    /// omega_X - omega_0.
    double dipole_detuning = 0.0;

    /// Throws std::domain_error for negative rates or non-finite values.
    void validate() const;
};

struct CoefficientPair {
    Complex reflection;
    Complex transmission;
};

/// Hot (dot coupled) and cold (dot uncoupled) amplitude responses.
struct ScatterCoefficients {
    Complex r;
    Complex t;
    Complex r0;
    Complex t0;

    /// The strong-coupling, lossless limit: r = 1, t = 0, r0 = 0, t0 = -1.
    static ScatterCoefficients ideal();

    double hot_power() const { return std::norm(r) + std::norm(t); }
    double cold_power() const { return std::norm(r0) + std::norm(t0); }
    bool lossless(double tol = kExactTol) const;
};

/// Weak-excitation response with the dot coupled.
CoefficientPair hot_coefficients(const CavityParams &p);

/// Empty-cavity response, i.e. the g = 0 case of the coupled response.
CoefficientPair cold_coefficients(const CavityParams &p);

ScatterCoefficients scatter_coefficients(const CavityParams &p);

/// Photon spin angular momentum along z: +1 for (R, up) and (L, down), -1 otherwise.
int sz_of_mode(Circular pol, Direction dir);

/// Local response on (polarization, direction, spin), index = 4*pol + 2*dir + spin.
///
/// Spin up couples the s_z = +1 modes and spin down the s_z = -1 modes. A coupled
/// mode goes to r * flip(mode) + t * mode and an uncoupled one to
/// r0 * flip(mode) + t0 * mode, where flip reverses both handedness and direction.
/// Throws std::domain_error if either power exceeds 1 + 1e-9.
Eigen::MatrixXcd scatter_matrix(const ScatterCoefficients &c);

Operator scatter_operator(const ScatterCoefficients &c, int photon, int spin);
Operator scatter_operator(const Eigen::MatrixXcd &local_response, int photon, int spin);

}  // namespace qdspin

#endif  // QDSPIN_CAVITY_H

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

#ifndef QDSPIN_PROTOCOLS_H
#define QDSPIN_PROTOCOLS_H

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "qdspin/cavity.h"
#include "qdspin/optics.h"
#include "qdspin/statevec.h"

namespace qdspin {

enum class Protocol { kPhaseGate, kCnot };

std::string_view protocol_name(Protocol p);
std::optional<Protocol> parse_protocol(std::string_view name);

/// The optical elements a protocol run is built from.
///
/// `cavity1` and `cavity2` are local 8x8 responses on (polarization, direction,
/// spin) as produced by `scatter_matrix`. Keeping them as plain matrices lets the
/// verifier be pointed at deliberately corrupted hardware.
struct Hardware {
    Eigen::Matrix2cd hwp1;
    Eigen::MatrixXcd cavity1;
    Eigen::MatrixXcd cavity2;

    static Hardware ideal();
    static Hardware from(const ScatterCoefficients &both);
    static Hardware from(const ScatterCoefficients &site1, const ScatterCoefficients &site2);
    static Hardware from(const CavityParams &both);
};

struct Correction {
    Pauli spin1;
    Pauli spin2;
};

std::string correction_str(const Correction &c);

/// One heralded detector pattern.
struct ProtocolOutcome {
    std::string pattern;
    /// Probability of this pattern, counting photons lost to leakage as failures.
    double raw_probability;
    /// Probability given that the photon(s) were detected.
    double conditioned_probability;
    /// Normalized spin state right after detection, before correction.
    StateVector projected;
    Correction correction;
    StateVector corrected;
    /// Ideal gate applied to the input spins.
    StateVector reference;
};

struct Stage {
    std::string name;
    StateVector state;
};

struct ProtocolRun {
    std::vector<ProtocolOutcome> outcomes;
    std::vector<Stage> trace;
    /// Sum of raw probabilities.
    double efficiency = 0;

    const Stage &stage(std::string_view name) const;
    const ProtocolOutcome *outcome(std::string_view pattern) const;
};

// Stage names recorded by run_phase_gate, in order:
//   input     photon |L, up> injected, spins in their input states
//   cavity1   after reflection/transmission at the spin-1 cavity
//   merge1    both polarizations recombined onto the up path
//   hwp1      after the mixing half-wave plate
//   route2    R sent down, L sent up into the spin-2 cavity
//   cavity2   after the spin-2 cavity
//   merge2    recombined onto the up path
//   hwp2      circular frame relabelled linear, ready for detection
inline constexpr const char *kPhaseGateStages[] = {"input",  "cavity1", "merge1", "hwp1",
                                                   "route2", "cavity2", "merge2", "hwp2"};

// Stage names recorded by run_cnot_teleportation, in order:
//   input               photon pair (RR + LL)/sqrt2 on the up paths, spins in their inputs
//   spin2_hadamard      Hadamard on spin 2
//   photon2_hwp1        mixing half-wave plate on photon 2
//   route_in            both photons: R sent down, L sent up
//   cavity1             photon 1 scattered by the spin-1 cavity
//   cavity2             photon 2 scattered by the spin-2 cavity
//   merge_out           both photons recombined onto the up path
//   hwp2                both photons relabelled linear
//   spin2_hadamard_out  final Hadamard on spin 2
inline constexpr const char *kCnotStages[] = {"input",    "spin2_hadamard", "photon2_hwp1",
                                              "route_in", "cavity1",        "cavity2",
                                              "merge_out", "hwp2",          "spin2_hadamard_out"};

/// Two-spin controlled-phase gate mediated by one photon.
/// Spin inputs must be normalized to 1e-12.
ProtocolRun run_phase_gate(const Spinor &spin1, const Spinor &spin2, const Hardware &hw = Hardware::ideal(),
                           bool record_trace = true);

/// CNOT between remote spins using a shared photon pair.
ProtocolRun run_cnot_teleportation(const Spinor &spin1, const Spinor &spin2, const Hardware &hw = Hardware::ideal(),
                                   bool record_trace = true);

ProtocolRun run_protocol(Protocol p, const Spinor &spin1, const Spinor &spin2, const Hardware &hw = Hardware::ideal(),
                         bool record_trace = true);

/// Detector patterns in canonical order: {H, V} or {HH, HV, VH, VV}.
std::vector<std::string> outcome_patterns(Protocol p);

/// Pauli correction for a detector pattern; throws std::invalid_argument for unknown patterns.
Correction correction_for(Protocol p, std::string_view pattern);

/// Applies the correction for `pattern` to a two-spin state.
StateVector feed_forward(Protocol p, std::string_view pattern, const StateVector &spins);

/// diag(1,1,1,-1) for the phase gate, CNOT (control spin 1) for the teleported gate.
/// Basis order: |up up>, |up down>, |down up>, |down down>.
Eigen::Matrix4cd ideal_gate(Protocol p);

/// Two-spin state over [spin1, spin2].
StateVector spin_pair(const Spinor &spin1, const Spinor &spin2);

/// Effective corrected two-spin map for one detector pattern.
///
/// Columns are the unnormalized corrected outputs for the four basis inputs. The
/// matrix is then divided by the norm of its |up up> column and rotated so the
/// first nonzero entry of that column is real positive. Throws std::runtime_error
/// if any basis input cannot produce `pattern`.
Eigen::Matrix4cd extract_gate_matrix(Protocol p, std::string_view pattern, const Hardware &hw = Hardware::ideal());

}  // namespace qdspin

#endif  // QDSPIN_PROTOCOLS_H

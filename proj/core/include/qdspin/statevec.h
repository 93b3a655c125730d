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

#ifndef QDSPIN_STATEVEC_H
#define QDSPIN_STATEVEC_H

#include <complex>
#include <cstddef>
#include <optional>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include <Eigen/Dense>

namespace qdspin {

using Complex = std::complex<double>;
using Spinor = Eigen::Vector2cd;

/// Tolerance for claims that hold exactly in exact arithmetic.
inline constexpr double kExactTol = 1e-12;
/// Tolerance for singular-value and energy bounds.
inline constexpr double kBoundTol = 1e-9;

enum class SubsystemKind { kSpin, kPolarization, kDirection };

/// Circular frame: basis (R, L). Linear frame: basis (H, V).
enum class PolarizationFrame { kCircular, kLinear };

/// Identifies one two-level degree of freedom of one particle.
struct SubsystemId {
    SubsystemKind kind;
    int owner;

    bool operator==(const SubsystemId &) const = default;
};

/// A subsystem together with the polarization frame it is currently expressed in.
/// The frame is set iff the kind is kPolarization.
struct SubsystemLabel {
    SubsystemId id;
    std::optional<PolarizationFrame> frame;

    bool operator==(const SubsystemLabel &) const = default;
};

SubsystemLabel spin_label(int owner);
SubsystemLabel polarization_label(int photon, PolarizationFrame frame = PolarizationFrame::kCircular);
SubsystemLabel direction_label(int photon);

inline SubsystemId spin_id(int owner) { return {SubsystemKind::kSpin, owner}; }
inline SubsystemId polarization_id(int photon) { return {SubsystemKind::kPolarization, photon}; }
inline SubsystemId direction_id(int photon) { return {SubsystemKind::kDirection, photon}; }

std::string describe(const SubsystemLabel &label);

/// Dense state over an ordered tensor product of two-level subsystems.
///
/// Basis value 0 is R (or H), up, spin-up; value 1 is L (or V), down, spin-down.
/// The first subsystem is the most significant bit of the amplitude index.
/// Values are immutable; every transformation returns a new state.
class StateVector {
   public:
    StateVector(std::vector<SubsystemLabel> subsystems, Eigen::VectorXcd amplitudes);

    const std::vector<SubsystemLabel> &subsystems() const { return subsystems_; }
    const Eigen::VectorXcd &amplitudes() const { return amplitudes_; }
    size_t num_subsystems() const { return subsystems_.size(); }
    size_t dimension() const { return static_cast<size_t>(amplitudes_.size()); }
    double squared_norm() const { return amplitudes_.squaredNorm(); }

    /// Position of a subsystem in the ordered list; throws if absent.
    size_t position(const SubsystemId &id) const;
    bool contains(const SubsystemId &id) const;
    const SubsystemLabel &label(const SubsystemId &id) const;

    /// Bit mask of a subsystem inside the amplitude index.
    size_t bit(const SubsystemId &id) const;

    Complex amplitude(size_t index) const { return amplitudes_[static_cast<Eigen::Index>(index)]; }

    StateVector normalized() const;
    StateVector scaled(Complex factor) const;
    StateVector with_label(const SubsystemId &id, SubsystemLabel replacement) const;

    std::string str() const;

   private:
    std::vector<SubsystemLabel> subsystems_;
    Eigen::VectorXcd amplitudes_;
};

/// A linear map acting on an ordered list of target subsystems.
///
/// When `required_frame` is set, every polarization target must currently be in that frame.
struct Operator {
    std::vector<SubsystemId> targets;
    Eigen::MatrixXcd matrix;
    std::optional<PolarizationFrame> required_frame;
};

bool is_unitary(const Eigen::MatrixXcd &m, double tol = kExactTol);
double max_singular_value(const Eigen::MatrixXcd &m);

/// Tensor product of the given factors in declared order.
/// Each factor must have unit norm (within 1e-12) and labels must be unique.
StateVector make_product_state(const std::vector<std::pair<SubsystemLabel, Spinor>> &factors);

/// Applies `op` on its targets and identity elsewhere.
StateVector apply_operator(const StateVector &state, const Operator &op);

/// |<a|b>|^2 / (|a|^2 |b|^2). Subsystem lists must match exactly.
double fidelity(const StateVector &a, const StateVector &b);

/// |<a|b>| / (|a| |b|) without requiring identical frames; used for "equal up to global phase" checks.
double overlap_magnitude(const StateVector &a, const StateVector &b);

/// Equality up to a global phase, with both states normalized first.
bool equal_up_to_phase(const StateVector &a, const StateVector &b, double tol = kExactTol);

enum class LinearOutcome { kH, kV };
char outcome_char(LinearOutcome o);

struct MeasurementBranch {
    LinearOutcome outcome;
    double probability;
    StateVector state;
};

/// Projective H/V measurement of one photon. Both the photon's polarization and
/// direction subsystems are removed from the returned states. Branches whose
/// projection vanishes are omitted.
std::vector<MeasurementBranch> measure_polarization(const StateVector &state, int photon);

/// Haar-distributed pure qubit state drawn from `rng`.
Spinor haar_random_spin(std::mt19937_64 &rng);

}  // namespace qdspin

#endif  // QDSPIN_STATEVEC_H

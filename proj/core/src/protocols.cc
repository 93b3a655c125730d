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

#include "qdspin/protocols.h"

#include <cmath>
#include <stdexcept>

namespace qdspin {

namespace {

constexpr int kSpin1 = 1;
constexpr int kSpin2 = 2;
constexpr int kPhoton1 = 1;
constexpr int kPhoton2 = 2;

class Tracer {
   public:
    explicit Tracer(bool enabled) : enabled_(enabled) {}

    void record(const char *name, const StateVector &s) {
        if (enabled_) {
            stages_.push_back({name, s});
        }
    }

    std::vector<Stage> take() { return std::move(stages_); }

   private:
    bool enabled_;
    std::vector<Stage> stages_;
};

StateVector apply_correction(const StateVector &spins, const Correction &c) {
    auto s = apply_operator(spins, spin_pauli(c.spin1, kSpin1));
    return apply_operator(s, spin_pauli(c.spin2, kSpin2));
}

StateVector reference_output(Protocol p, const Spinor &spin1, const Spinor &spin2) {
    auto input = spin_pair(spin1, spin2);
    Eigen::VectorXcd out = ideal_gate(p) * input.amplitudes();
    return StateVector(input.subsystems(), std::move(out));
}

// Turns measured branches into heralded outcomes. `branches` carries the joint
// pattern, the probability relative to the pre-measurement state, and the
// projected spin state.
struct RawBranch {
    std::string pattern;
    double probability;
    StateVector spins;
};

std::vector<ProtocolOutcome> finish_outcomes(Protocol p, std::vector<RawBranch> branches, double surviving_norm2,
                                             const StateVector &reference, double *efficiency) {
    std::vector<ProtocolOutcome> outcomes;
    double total = 0;
    for (const auto &b : branches) {
        total += b.probability * surviving_norm2;
    }
    *efficiency = total;
    for (auto &b : branches) {
        double raw = b.probability * surviving_norm2;
        Correction c = correction_for(p, b.pattern);
        auto corrected = apply_correction(b.spins, c);
        outcomes.push_back({b.pattern, raw, raw / total, std::move(b.spins), c, std::move(corrected), reference});
    }
    return outcomes;
}

}  // namespace

std::string_view protocol_name(Protocol p) { return p == Protocol::kPhaseGate ? "phase-gate" : "cnot"; }

std::optional<Protocol> parse_protocol(std::string_view name) {
    if (name == "phase-gate") {
        return Protocol::kPhaseGate;
    }
    if (name == "cnot") {
        return Protocol::kCnot;
    }
    return std::nullopt;
}

Hardware Hardware::ideal() { return from(ScatterCoefficients::ideal()); }

Hardware Hardware::from(const ScatterCoefficients &both) { return from(both, both); }

Hardware Hardware::from(const ScatterCoefficients &site1, const ScatterCoefficients &site2) {
    return {hwp1_matrix(), scatter_matrix(site1), scatter_matrix(site2)};
}

Hardware Hardware::from(const CavityParams &both) { return from(scatter_coefficients(both)); }

std::string correction_str(const Correction &c) {
    return std::string{pauli_char(c.spin1)} + "1 " + pauli_char(c.spin2) + "2";
}

const Stage &ProtocolRun::stage(std::string_view name) const {
    for (const auto &s : trace) {
        if (s.name == name) {
            return s;
        }
    }
    throw std::out_of_range("no stage named " + std::string(name));
}

const ProtocolOutcome *ProtocolRun::outcome(std::string_view pattern) const {
    for (const auto &o : outcomes) {
        if (o.pattern == pattern) {
            return &o;
        }
    }
    return nullptr;
}

StateVector spin_pair(const Spinor &spin1, const Spinor &spin2) {
    return make_product_state({{spin_label(kSpin1), spin1}, {spin_label(kSpin2), spin2}});
}

ProtocolRun run_phase_gate(const Spinor &spin1, const Spinor &spin2, const Hardware &hw, bool record_trace) {
    const Spinor photon_l(0, 1);
    const Spinor path_up(1, 0);
    auto state = make_product_state({{spin_label(kSpin1), spin1},
                                     {spin_label(kSpin2), spin2},
                                     {polarization_label(kPhoton1), photon_l},
                                     {direction_label(kPhoton1), path_up}});
    Tracer trace(record_trace);
    trace.record("input", state);

    state = apply_operator(state, scatter_operator(hw.cavity1, kPhoton1, kSpin1));
    trace.record("cavity1", state);
    state = route(state, kPhoton1, Direction::kUp, Direction::kUp);
    trace.record("merge1", state);
    state = apply_operator(state, hwp1(kPhoton1, hw.hwp1));
    trace.record("hwp1", state);
    state = route(state, kPhoton1, Direction::kDown, Direction::kUp);
    trace.record("route2", state);
    state = apply_operator(state, scatter_operator(hw.cavity2, kPhoton1, kSpin2));
    trace.record("cavity2", state);
    state = route(state, kPhoton1, Direction::kUp, Direction::kUp);
    trace.record("merge2", state);
    state = hwp2(state, kPhoton1);
    trace.record("hwp2", state);

    ProtocolRun run;
    run.trace = trace.take();
    const double surviving = state.squared_norm();
    if (surviving == 0) {
        return run;
    }
    std::vector<RawBranch> branches;
    for (auto &b : measure_polarization(state, kPhoton1)) {
        branches.push_back({std::string{outcome_char(b.outcome)}, b.probability, std::move(b.state)});
    }
    run.outcomes = finish_outcomes(Protocol::kPhaseGate, std::move(branches), surviving,
                                   reference_output(Protocol::kPhaseGate, spin1, spin2), &run.efficiency);
    return run;
}

ProtocolRun run_cnot_teleportation(const Spinor &spin1, const Spinor &spin2, const Hardware &hw, bool record_trace) {
    auto spins = spin_pair(spin1, spin2);
    std::vector<SubsystemLabel> labels = spins.subsystems();
    for (int photon : {kPhoton1, kPhoton2}) {
        labels.push_back(polarization_label(photon));
        labels.push_back(direction_label(photon));
    }
    // (|R>|R> + |L>|L>)/sqrt2 on the up paths; photon bits are p1 d1 p2 d2.
    const double s = 1 / std::sqrt(2.0);
    Eigen::VectorXcd amps = Eigen::VectorXcd::Zero(64);
    for (Eigen::Index k = 0; k < 4; k++) {
        amps[(k << 4) | 0b0000] = spins.amplitudes()[k] * s;
        amps[(k << 4) | 0b1010] = spins.amplitudes()[k] * s;
    }
    StateVector state(std::move(labels), std::move(amps));
    Tracer trace(record_trace);
    trace.record("input", state);

    state = apply_operator(state, spin_hadamard(kSpin2));
    trace.record("spin2_hadamard", state);
    state = apply_operator(state, hwp1(kPhoton2, hw.hwp1));
    trace.record("photon2_hwp1", state);
    for (int photon : {kPhoton1, kPhoton2}) {
        state = route(state, photon, Direction::kDown, Direction::kUp);
    }
    trace.record("route_in", state);
    state = apply_operator(state, scatter_operator(hw.cavity1, kPhoton1, kSpin1));
    trace.record("cavity1", state);
    state = apply_operator(state, scatter_operator(hw.cavity2, kPhoton2, kSpin2));
    trace.record("cavity2", state);
    for (int photon : {kPhoton1, kPhoton2}) {
        state = route(state, photon, Direction::kUp, Direction::kUp);
    }
    trace.record("merge_out", state);
    state = hwp2(hwp2(state, kPhoton1), kPhoton2);
    trace.record("hwp2", state);
    state = apply_operator(state, spin_hadamard(kSpin2));
    trace.record("spin2_hadamard_out", state);

    ProtocolRun run;
    run.trace = trace.take();
    const double surviving = state.squared_norm();
    if (surviving == 0) {
        return run;
    }
    std::vector<RawBranch> branches;
    for (auto &first : measure_polarization(state, kPhoton1)) {
        for (auto &second : measure_polarization(first.state, kPhoton2)) {
            branches.push_back({std::string{outcome_char(first.outcome), outcome_char(second.outcome)},
                                first.probability * second.probability, std::move(second.state)});
        }
    }
    run.outcomes = finish_outcomes(Protocol::kCnot, std::move(branches), surviving,
                                   reference_output(Protocol::kCnot, spin1, spin2), &run.efficiency);
    return run;
}

ProtocolRun run_protocol(Protocol p, const Spinor &spin1, const Spinor &spin2, const Hardware &hw,
                         bool record_trace) {
    return p == Protocol::kPhaseGate ? run_phase_gate(spin1, spin2, hw, record_trace)
                                     : run_cnot_teleportation(spin1, spin2, hw, record_trace);
}

std::vector<std::string> outcome_patterns(Protocol p) {
    if (p == Protocol::kPhaseGate) {
        return {"H", "V"};
    }
    return {"HH", "HV", "VH", "VV"};
}

Correction correction_for(Protocol p, std::string_view pattern) {
    if (p == Protocol::kPhaseGate) {
        if (pattern == "H") return {Pauli::kZ, Pauli::kI};
        if (pattern == "V") return {Pauli::kI, Pauli::kI};
    } else {
        if (pattern == "HH") return {Pauli::kZ, Pauli::kX};
        if (pattern == "HV") return {Pauli::kI, Pauli::kX};
        if (pattern == "VH") return {Pauli::kZ, Pauli::kI};
        if (pattern == "VV") return {Pauli::kI, Pauli::kI};
    }
    throw std::invalid_argument("unknown detector pattern '" + std::string(pattern) + "' for " +
                                std::string(protocol_name(p)));
}

StateVector feed_forward(Protocol p, std::string_view pattern, const StateVector &spins) {
    return apply_correction(spins, correction_for(p, pattern));
}

Eigen::Matrix4cd ideal_gate(Protocol p) {
    Eigen::Matrix4cd m = Eigen::Matrix4cd::Zero();
    if (p == Protocol::kPhaseGate) {
        m.diagonal() << 1, 1, 1, -1;
    } else {
        m(0, 0) = 1;
        m(1, 1) = 1;
        m(3, 2) = 1;
        m(2, 3) = 1;
    }
    return m;
}

Eigen::Matrix4cd extract_gate_matrix(Protocol p, std::string_view pattern, const Hardware &hw) {
    correction_for(p, pattern);
    Eigen::Matrix4cd m;
    for (int col = 0; col < 4; col++) {
        Spinor s1 = Spinor::Zero();
        Spinor s2 = Spinor::Zero();
        s1[col >> 1] = 1;
        s2[col & 1] = 1;
        auto run = run_protocol(p, s1, s2, hw, false);
        const auto *o = run.outcome(pattern);
        if (o == nullptr) {
            throw std::runtime_error("pattern " + std::string(pattern) + " has zero probability for basis input " +
                                     std::to_string(col));
        }
        m.col(col) = o->corrected.amplitudes() * std::sqrt(o->raw_probability);
    }
    const double n0 = m.col(0).norm();
    Complex phase = 1;
    for (int row = 0; row < 4; row++) {
        if (std::abs(m(row, 0)) > 1e-9 * n0) {
            phase = m(row, 0) / std::abs(m(row, 0));
            break;
        }
    }
    return m / (n0 * phase);
}

}  // namespace qdspin

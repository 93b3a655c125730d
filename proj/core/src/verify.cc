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

#include "qdspin/verify.h"

#include <cmath>
#include <cstdio>
#include <exception>
#include <functional>
#include <initializer_list>
#include <sstream>

namespace qdspin {

namespace {

// Generic, unequal amplitudes so that sign and swap errors cannot cancel.
constexpr double kA = 0.6, kB = 0.8, kC = 0.8, kD = 0.6;

std::string sci(double v) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.3e", v);
    return buf;
}

class Builder {
   public:
    explicit Builder(std::vector<SubsystemLabel> labels)
        : labels_(std::move(labels)), amps_(Eigen::VectorXcd::Zero(Eigen::Index{1} << labels_.size())) {}

    void add(Complex amp, std::initializer_list<int> bits) {
        Eigen::Index idx = 0;
        for (int b : bits) {
            idx = (idx << 1) | b;
        }
        amps_[idx] += amp;
    }

    StateVector build() const { return StateVector(labels_, amps_); }

   private:
    std::vector<SubsystemLabel> labels_;
    Eigen::VectorXcd amps_;
};

std::vector<SubsystemLabel> phase_gate_labels(PolarizationFrame f) {
    return {spin_label(1), spin_label(2), polarization_label(1, f), direction_label(1)};
}

std::vector<SubsystemLabel> cnot_labels(PolarizationFrame f) {
    return {spin_label(1), spin_label(2), polarization_label(1, f), direction_label(1), polarization_label(2, f),
            direction_label(2)};
}

// Closed-form phase-gate stages; bits are (spin1, spin2, pol, dir).
StateVector phase_after_cavity1() {
    Builder s(phase_gate_labels(PolarizationFrame::kCircular));
    const double spin2[2] = {kC, kD};
    for (int j : {0, 1}) {
        s.add(-kA * spin2[j], {0, j, 1, 0});
        s.add(kB * spin2[j], {1, j, 0, 1});
    }
    return s.build();
}

StateVector phase_after_hwp1() {
    Builder s(phase_gate_labels(PolarizationFrame::kCircular));
    const double spin2[2] = {kC, kD};
    const double r = 1 / std::sqrt(2.0);
    for (int j : {0, 1}) {
        s.add(-r * kA * spin2[j], {0, j, 0, 0});
        s.add(r * kA * spin2[j], {0, j, 1, 0});
        s.add(r * kB * spin2[j], {1, j, 0, 0});
        s.add(r * kB * spin2[j], {1, j, 1, 0});
    }
    return s.build();
}

StateVector phase_after_cavity2() {
    Builder s(phase_gate_labels(PolarizationFrame::kCircular));
    const double spin2[2] = {kC, kD};
    const double r = 1 / std::sqrt(2.0);
    for (int j : {0, 1}) {
        const double z = j == 0 ? 1 : -1;
        s.add(r * kA * spin2[j], {0, j, 0, 1});
        s.add(-r * kA * spin2[j], {0, j, 1, 0});
        s.add(-r * kB * z * spin2[j], {1, j, 0, 1});
        s.add(-r * kB * z * spin2[j], {1, j, 1, 0});
    }
    return s.build();
}

StateVector phase_after_hwp2() {
    Builder s(phase_gate_labels(PolarizationFrame::kLinear));
    const double spin2[2] = {kC, kD};
    const double r = 1 / std::sqrt(2.0);
    for (int j : {0, 1}) {
        const double z = j == 0 ? 1 : -1;
        s.add(r * kA * spin2[j], {0, j, 0, 0});
        s.add(-r * kB * z * spin2[j], {1, j, 0, 0});
        s.add(-r * kA * spin2[j], {0, j, 1, 0});
        s.add(-r * kB * z * spin2[j], {1, j, 1, 0});
    }
    return s.build();
}

StateVector two_spin(double up_up, double up_down, double down_up, double down_down) {
    Eigen::VectorXcd v(4);
    v << up_up, up_down, down_up, down_down;
    return StateVector({spin_label(1), spin_label(2)}, v);
}

// Projected spin states listed per detector pattern, before correction.
StateVector phase_table_row(std::string_view pattern) {
    if (pattern == "H") {
        return two_spin(kA * kC, kA * kD, -kB * kC, kB * kD);
    }
    return two_spin(kA * kC, kA * kD, kB * kC, -kB * kD);
}

StateVector cnot_table_row(std::string_view pattern) {
    // alpha, beta, gamma, delta = kA, kB, kC, kD.
    if (pattern == "HH") return two_spin(kA * kD, kA * kC, -kB * kC, -kB * kD);
    if (pattern == "HV") return two_spin(kA * kD, kA * kC, kB * kC, kB * kD);
    if (pattern == "VH") return two_spin(kA * kC, kA * kD, -kB * kD, -kB * kC);
    return two_spin(kA * kC, kA * kD, kB * kD, kB * kC);
}

// Closed-form CNOT stages; bits are (spin1, spin2, pol1, dir1, pol2, dir2).
StateVector cnot_after_photon2_hwp1() {
    Builder s(cnot_labels(PolarizationFrame::kCircular));
    const double q = 1 / (2 * std::sqrt(2.0));
    const double spin1[2] = {kA, kB};
    const double spin2[2] = {kC + kD, kC - kD};
    // R(R + L) + L(R - L)
    const double photons[2][2] = {{1, 1}, {1, -1}};
    for (int i : {0, 1}) {
        for (int j : {0, 1}) {
            for (int p1 : {0, 1}) {
                for (int p2 : {0, 1}) {
                    s.add(q * spin1[i] * spin2[j] * photons[p1][p2], {i, j, p1, 0, p2, 0});
                }
            }
        }
    }
    return s.build();
}

StateVector cnot_after_cavities() {
    Builder s(cnot_labels(PolarizationFrame::kCircular));
    const double q = 1 / (2 * std::sqrt(2.0));
    // gamma(up - down) + delta(up + down) and gamma(up + down) + delta(up - down).
    const double v[2] = {kC + kD, -kC + kD};
    const double w[2] = {kC + kD, kC - kD};
    // Modes as (pol, dir): R-down = (0, 1), L-up = (1, 0).
    auto term = [&](double coeff, int spin1, const double *spin2, int p1, int d1, double second_sign) {
        for (int j : {0, 1}) {
            s.add(q * coeff * spin2[j], {spin1, j, p1, d1, 0, 1});
            s.add(q * coeff * spin2[j] * second_sign, {spin1, j, p1, d1, 1, 0});
        }
    };
    term(kA, 0, v, 0, 1, +1);
    term(kA, 0, w, 1, 0, -1);
    term(-kB, 1, v, 1, 0, +1);
    term(-kB, 1, w, 0, 1, -1);
    return s.build();
}

StateVector cnot_final() {
    Builder s(cnot_labels(PolarizationFrame::kLinear));
    const char *patterns[] = {"HH", "HV", "VH", "VV"};
    for (const char *p : patterns) {
        auto row = cnot_table_row(p).amplitudes();
        const double sign = std::string_view(p) == "VV" ? -1 : 1;
        const int o1 = p[0] == 'V', o2 = p[1] == 'V';
        for (int k = 0; k < 4; k++) {
            s.add(0.5 * sign * row[k], {k >> 1, k & 1, o1, 0, o2, 0});
        }
    }
    return s.build();
}

double matrix_distance(const Eigen::MatrixXcd &a, const Eigen::MatrixXcd &b) {
    if (a.rows() != b.rows() || a.cols() != b.cols()) {
        return INFINITY;
    }
    return (a - b).norm();
}

class Runner {
   public:
    void check(std::string name, const std::function<std::pair<bool, std::string>()> &fn) {
        try {
            auto [ok, detail] = fn();
            report_.checks.push_back({std::move(name), ok, std::move(detail)});
        } catch (const std::exception &e) {
            report_.checks.push_back({std::move(name), false, std::string("error: ") + e.what()});
        }
    }

    VerifyReport take() { return std::move(report_); }

   private:
    VerifyReport report_;
};

std::pair<bool, std::string> within(double err, double tol) { return {err < tol, "err=" + sci(err)}; }

void check_elements(Runner &r, const Hardware &hw) {
    const auto table = reference_interaction_table();
    r.check("cavity 1 response == spin-selective rules", [&] {
        return within(matrix_distance(hw.cavity1, table), kExactTol);
    });
    r.check("cavity 2 response == spin-selective rules", [&] {
        return within(matrix_distance(hw.cavity2, table), kExactTol);
    });
    r.check("hwp1: R -> (R+L)/sqrt2, L -> -(L-R)/sqrt2", [&] {
        const double s = 1 / std::sqrt(2.0);
        Eigen::Matrix2cd expected;
        expected.col(0) << s, s;
        expected.col(1) << s, -s;
        return within(matrix_distance(hw.hwp1, expected), kExactTol);
    });
}

void check_protocol(Runner &r, Protocol p, const Hardware &hw) {
    const bool phase = p == Protocol::kPhaseGate;
    const std::string gate_name = phase ? "gate == diag(1,1,1,-1)" : "gate == CNOT";
    const auto patterns = outcome_patterns(p);

    r.check(gate_name, [&] {
        double worst = 0;
        std::string detail;
        for (const auto &pattern : patterns) {
            double d = matrix_distance(extract_gate_matrix(p, pattern, hw), ideal_gate(p));
            worst = std::max(worst, d);
            detail += (detail.empty() ? "" : " ") + pattern + "=" + sci(d);
        }
        return std::pair{worst < kExactTol, detail};
    });

    Spinor s1(kA, kB), s2(kC, kD);
    auto run = run_protocol(p, s1, s2, hw);
    const double expected_p = phase ? 0.5 : 0.25;

    for (const auto &pattern : patterns) {
        char name[64];
        std::snprintf(name, sizeof(name), "P(%s) == %g", pattern.c_str(), expected_p);
        r.check(name, [&] {
            const auto *o = run.outcome(pattern);
            double prob = o ? o->raw_probability : 0;
            return within(std::abs(prob - expected_p), kExactTol);
        });
    }
    r.check(std::string(protocol_name(p)) + " efficiency == 1",
            [&] { return within(std::abs(run.efficiency - 1), kExactTol); });

    for (const auto &pattern : patterns) {
        r.check("projected state [" + pattern + "] == table row", [&] {
            const auto *o = run.outcome(pattern);
            if (!o) {
                return std::pair{false, std::string("pattern missing")};
            }
            auto row = phase ? phase_table_row(pattern) : cnot_table_row(pattern);
            return within(std::abs(1 - overlap_magnitude(o->projected, row)), kExactTol);
        });
        r.check("corrected state [" + pattern + "] == ideal gate output", [&] {
            const auto *o = run.outcome(pattern);
            if (!o) {
                return std::pair{false, std::string("pattern missing")};
            }
            return within(1 - fidelity(o->corrected, o->reference), kExactTol);
        });
    }

    std::vector<std::pair<const char *, StateVector>> stages;
    if (phase) {
        stages = {{"cavity1", phase_after_cavity1()},
                  {"hwp1", phase_after_hwp1()},
                  {"cavity2", phase_after_cavity2()},
                  {"hwp2", phase_after_hwp2()}};
    } else {
        stages = {{"photon2_hwp1", cnot_after_photon2_hwp1()},
                  {"cavity2", cnot_after_cavities()},
                  {"spin2_hadamard_out", cnot_final()}};
    }
    for (const auto &[stage, expected] : stages) {
        r.check(std::string(protocol_name(p)) + " trace '" + stage + "' == closed form", [&] {
            const auto &got = run.stage(stage).state;
            if (got.subsystems() != expected.subsystems()) {
                return std::pair{false, std::string("subsystem mismatch")};
            }
            bool ok = equal_up_to_phase(got, expected, kExactTol);
            return std::pair{ok, "1-|overlap|=" + sci(std::abs(1 - overlap_magnitude(got, expected)))};
        });
    }
}

}  // namespace

std::optional<VerifyTarget> parse_verify_target(std::string_view name) {
    if (name == "phase-gate") return VerifyTarget::kPhaseGate;
    if (name == "cnot") return VerifyTarget::kCnot;
    if (name == "all") return VerifyTarget::kAll;
    return std::nullopt;
}

bool VerifyReport::passed() const {
    for (const auto &c : checks) {
        if (!c.passed) {
            return false;
        }
    }
    return !checks.empty();
}

std::string VerifyReport::str() const {
    std::ostringstream out;
    for (const auto &c : checks) {
        out << c.name << ": " << (c.passed ? "PASS" : "FAIL");
        if (!c.detail.empty()) {
            out << " (" << c.detail << ")";
        }
        out << "\n";
    }
    return out.str();
}

Eigen::MatrixXcd reference_interaction_table() {
    struct Rule {
        int pol_in, dir_in, spin, pol_out, dir_out;
        double sign;
    };
    // pol: 0 = R, 1 = L; dir: 0 = up, 1 = down; spin: 0 = up, 1 = down.
    static constexpr Rule kRules[] = {
        {0, 0, 0, 1, 1, +1},  // R-up,   spin up   -> L-down
        {1, 0, 0, 1, 0, -1},  // L-up,   spin up   -> -L-up
        {0, 1, 0, 0, 1, -1},  // R-down, spin up   -> -R-down
        {1, 1, 0, 0, 0, +1},  // L-down, spin up   -> R-up
        {0, 0, 1, 0, 0, -1},  // R-up,   spin down -> -R-up
        {1, 0, 1, 0, 1, +1},  // L-up,   spin down -> R-down
        {0, 1, 1, 1, 0, +1},  // R-down, spin down -> L-up
        {1, 1, 1, 1, 1, -1},  // L-down, spin down -> -L-down
    };
    Eigen::MatrixXcd m = Eigen::MatrixXcd::Zero(8, 8);
    for (const auto &rule : kRules) {
        m(4 * rule.pol_out + 2 * rule.dir_out + rule.spin, 4 * rule.pol_in + 2 * rule.dir_in + rule.spin) = rule.sign;
    }
    return m;
}

VerifyReport verify(VerifyTarget target, const Hardware &hw) {
    Runner r;
    check_elements(r, hw);
    if (target != VerifyTarget::kCnot) {
        check_protocol(r, Protocol::kPhaseGate, hw);
    }
    if (target != VerifyTarget::kPhaseGate) {
        check_protocol(r, Protocol::kCnot, hw);
    }
    return r.take();
}

}  // namespace qdspin

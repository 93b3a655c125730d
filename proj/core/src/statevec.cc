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

#include "qdspin/statevec.h"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <sstream>
#include <stdexcept>

namespace qdspin {

namespace {

constexpr size_t kMaxSubsystems = 8;

// Relative weight below which a measurement branch is treated as empty.
constexpr double kEmptyBranch = 1e-28;

void check_labels(const std::vector<SubsystemLabel> &labels) {
    if (labels.size() > kMaxSubsystems) {
        throw std::invalid_argument("state has more than 8 subsystems");
    }
    for (size_t i = 0; i < labels.size(); i++) {
        const auto &a = labels[i];
        if (a.frame.has_value() != (a.id.kind == SubsystemKind::kPolarization)) {
            throw std::invalid_argument("frame must be set exactly on polarization subsystems: " + describe(a));
        }
        for (size_t j = i + 1; j < labels.size(); j++) {
            if (labels[j].id == a.id) {
                throw std::invalid_argument("duplicate subsystem label: " + describe(a));
            }
        }
    }
    // Every photon carries exactly one polarization and one direction subsystem.
    for (const auto &a : labels) {
        if (a.id.kind == SubsystemKind::kSpin) {
            continue;
        }
        SubsystemKind partner =
            a.id.kind == SubsystemKind::kPolarization ? SubsystemKind::kDirection : SubsystemKind::kPolarization;
        bool found = std::any_of(labels.begin(), labels.end(), [&](const SubsystemLabel &b) {
            return b.id == SubsystemId{partner, a.id.owner};
        });
        if (!found) {
            throw std::invalid_argument("photon " + std::to_string(a.id.owner) +
                                        " needs both a polarization and a direction subsystem");
        }
    }
}

std::string format_complex(Complex c) {
    char buf[64];
    double re = c.real() == 0 ? 0.0 : c.real();
    double im = c.imag() == 0 ? 0.0 : c.imag();
    std::snprintf(buf, sizeof(buf), "%.6g%c%.6gi", re, im < 0 ? '-' : '+', std::abs(im));
    return buf;
}

}  // namespace

SubsystemLabel spin_label(int owner) { return {spin_id(owner), std::nullopt}; }

SubsystemLabel polarization_label(int photon, PolarizationFrame frame) { return {polarization_id(photon), frame}; }

SubsystemLabel direction_label(int photon) { return {direction_id(photon), std::nullopt}; }

std::string describe(const SubsystemLabel &label) {
    std::string owner = std::to_string(label.id.owner);
    switch (label.id.kind) {
        case SubsystemKind::kSpin:
            return "spin" + owner;
        case SubsystemKind::kPolarization:
            return "pol" + owner + (label.frame == PolarizationFrame::kLinear ? "(HV)" : "(RL)");
        case SubsystemKind::kDirection:
            return "dir" + owner;
    }
    return "?";
}

StateVector::StateVector(std::vector<SubsystemLabel> subsystems, Eigen::VectorXcd amplitudes)
    : subsystems_(std::move(subsystems)), amplitudes_(std::move(amplitudes)) {
    check_labels(subsystems_);
    if (amplitudes_.size() != (Eigen::Index{1} << subsystems_.size())) {
        throw std::invalid_argument("amplitude count must equal 2^(number of subsystems)");
    }
}

size_t StateVector::position(const SubsystemId &id) const {
    for (size_t i = 0; i < subsystems_.size(); i++) {
        if (subsystems_[i].id == id) {
            return i;
        }
    }
    throw std::invalid_argument("unknown subsystem: " + describe({id, std::nullopt}));
}

bool StateVector::contains(const SubsystemId &id) const {
    return std::any_of(subsystems_.begin(), subsystems_.end(), [&](const auto &l) { return l.id == id; });
}

const SubsystemLabel &StateVector::label(const SubsystemId &id) const { return subsystems_[position(id)]; }

size_t StateVector::bit(const SubsystemId &id) const {
    return size_t{1} << (subsystems_.size() - 1 - position(id));
}

StateVector StateVector::normalized() const {
    double n = amplitudes_.norm();
    if (n == 0) {
        throw std::invalid_argument("cannot normalize a zero state");
    }
    return StateVector(subsystems_, amplitudes_ / n);
}

StateVector StateVector::scaled(Complex factor) const { return StateVector(subsystems_, amplitudes_ * factor); }

StateVector StateVector::with_label(const SubsystemId &id, SubsystemLabel replacement) const {
    auto labels = subsystems_;
    labels[position(id)] = replacement;
    return StateVector(std::move(labels), amplitudes_);
}

std::string StateVector::str() const {
    std::ostringstream out;
    out << "[";
    for (size_t i = 0; i < subsystems_.size(); i++) {
        out << (i ? " " : "") << describe(subsystems_[i]);
    }
    out << "]";
    for (Eigen::Index k = 0; k < amplitudes_.size(); k++) {
        if (std::abs(amplitudes_[k]) < 1e-15) {
            continue;
        }
        out << " " << format_complex(amplitudes_[k]) << "|";
        for (size_t i = 0; i < subsystems_.size(); i++) {
            bool one = (static_cast<size_t>(k) >> (subsystems_.size() - 1 - i)) & 1;
            switch (subsystems_[i].id.kind) {
                case SubsystemKind::kSpin:
                    out << (one ? 'd' : 'u');
                    break;
                case SubsystemKind::kPolarization:
                    if (subsystems_[i].frame == PolarizationFrame::kLinear) {
                        out << (one ? 'V' : 'H');
                    } else {
                        out << (one ? 'L' : 'R');
                    }
                    break;
                case SubsystemKind::kDirection:
                    out << (one ? 'v' : '^');
                    break;
            }
        }
        out << ">";
    }
    return out.str();
}

bool is_unitary(const Eigen::MatrixXcd &m, double tol) {
    if (m.rows() != m.cols()) {
        return false;
    }
    Eigen::MatrixXcd err = m.adjoint() * m - Eigen::MatrixXcd::Identity(m.rows(), m.cols());
    return err.cwiseAbs().maxCoeff() <= tol;
}

double max_singular_value(const Eigen::MatrixXcd &m) {
    Eigen::JacobiSVD<Eigen::MatrixXcd> svd(m);
    return svd.singularValues().maxCoeff();
}

StateVector make_product_state(const std::vector<std::pair<SubsystemLabel, Spinor>> &factors) {
    std::vector<SubsystemLabel> labels;
    labels.reserve(factors.size());
    Eigen::VectorXcd amps = Eigen::VectorXcd::Ones(1);
    for (const auto &[label, v] : factors) {
        double n = v.norm();
        if (n == 0) {
            throw std::invalid_argument("zero-norm factor for " + describe(label));
        }
        if (std::abs(n - 1) > kExactTol) {
            throw std::invalid_argument("factor for " + describe(label) + " is not normalized");
        }
        Eigen::VectorXcd next(amps.size() * 2);
        for (Eigen::Index i = 0; i < amps.size(); i++) {
            next[2 * i] = amps[i] * v[0];
            next[2 * i + 1] = amps[i] * v[1];
        }
        amps = std::move(next);
        labels.push_back(label);
    }
    return StateVector(std::move(labels), std::move(amps));
}

StateVector apply_operator(const StateVector &state, const Operator &op) {
    const size_t k = op.targets.size();
    const auto dim = static_cast<Eigen::Index>(size_t{1} << k);
    if (op.matrix.rows() != dim || op.matrix.cols() != dim) {
        throw std::invalid_argument("operator dimension does not match its target count");
    }
    std::vector<size_t> masks;
    masks.reserve(k);
    size_t all = 0;
    for (const auto &t : op.targets) {
        const auto &label = state.label(t);
        if (op.required_frame && label.id.kind == SubsystemKind::kPolarization && label.frame != op.required_frame) {
            throw std::invalid_argument("operator applied to " + describe(label) + " in the wrong polarization frame");
        }
        size_t m = state.bit(t);
        if (all & m) {
            throw std::invalid_argument("operator targets repeat a subsystem");
        }
        all |= m;
        masks.push_back(m);
    }

    // offsets[j] is the amplitude-index contribution of local basis index j.
    std::vector<size_t> offsets(static_cast<size_t>(dim), 0);
    for (size_t j = 0; j < offsets.size(); j++) {
        for (size_t b = 0; b < k; b++) {
            if ((j >> (k - 1 - b)) & 1) {
                offsets[j] |= masks[b];
            }
        }
    }

    const auto &in = state.amplitudes();
    Eigen::VectorXcd out = Eigen::VectorXcd::Zero(in.size());
    Eigen::VectorXcd local(dim);
    for (size_t base = 0; base < state.dimension(); base++) {
        if (base & all) {
            continue;
        }
        for (Eigen::Index j = 0; j < dim; j++) {
            local[j] = in[static_cast<Eigen::Index>(base | offsets[static_cast<size_t>(j)])];
        }
        Eigen::VectorXcd mapped = op.matrix * local;
        for (Eigen::Index j = 0; j < dim; j++) {
            out[static_cast<Eigen::Index>(base | offsets[static_cast<size_t>(j)])] = mapped[j];
        }
    }
    return StateVector(state.subsystems(), std::move(out));
}

double fidelity(const StateVector &a, const StateVector &b) {
    if (a.subsystems() != b.subsystems()) {
        throw std::invalid_argument("fidelity requires identical subsystem lists");
    }
    double na = a.squared_norm();
    double nb = b.squared_norm();
    if (na == 0 || nb == 0) {
        throw std::invalid_argument("fidelity of a zero vector");
    }
    double f = std::norm(a.amplitudes().dot(b.amplitudes())) / (na * nb);
    return std::clamp(f, 0.0, 1.0);
}

double overlap_magnitude(const StateVector &a, const StateVector &b) {
    if (a.num_subsystems() != b.num_subsystems()) {
        throw std::invalid_argument("overlap requires the same subsystems");
    }
    for (size_t i = 0; i < a.num_subsystems(); i++) {
        if (a.subsystems()[i].id != b.subsystems()[i].id) {
            throw std::invalid_argument("overlap requires the same subsystem order");
        }
    }
    double na = a.amplitudes().norm();
    double nb = b.amplitudes().norm();
    if (na == 0 || nb == 0) {
        throw std::invalid_argument("overlap of a zero vector");
    }
    return std::abs(a.amplitudes().dot(b.amplitudes())) / (na * nb);
}

bool equal_up_to_phase(const StateVector &a, const StateVector &b, double tol) {
    if (a.subsystems() != b.subsystems()) {
        return false;
    }
    auto ua = a.normalized().amplitudes();
    auto ub = b.normalized().amplitudes();
    Complex inner = ua.dot(ub);
    if (std::abs(inner) == 0) {
        return false;
    }
    Complex phase = inner / std::abs(inner);
    return (ua * phase - ub).cwiseAbs().maxCoeff() <= tol;
}

char outcome_char(LinearOutcome o) { return o == LinearOutcome::kH ? 'H' : 'V'; }

std::vector<MeasurementBranch> measure_polarization(const StateVector &state, int photon) {
    const auto &pol = state.label(polarization_id(photon));
    if (pol.frame != PolarizationFrame::kLinear) {
        throw std::invalid_argument("photon " + std::to_string(photon) + " must be in the linear frame before detection");
    }
    const size_t pol_bit = state.bit(polarization_id(photon));
    const size_t dir_bit = state.bit(direction_id(photon));
    const double total = state.squared_norm();
    if (total == 0) {
        throw std::invalid_argument("cannot measure a zero state");
    }

    std::vector<SubsystemLabel> kept;
    std::vector<size_t> kept_bits;
    for (const auto &l : state.subsystems()) {
        if (l.id.owner == photon && l.id.kind != SubsystemKind::kSpin) {
            continue;
        }
        kept.push_back(l);
        kept_bits.push_back(state.bit(l.id));
    }

    std::vector<MeasurementBranch> branches;
    for (LinearOutcome o : {LinearOutcome::kH, LinearOutcome::kV}) {
        const size_t pol_value = o == LinearOutcome::kV ? pol_bit : 0;
        Eigen::VectorXcd up = Eigen::VectorXcd::Zero(Eigen::Index{1} << kept.size());
        Eigen::VectorXcd down = up;
        for (size_t idx = 0; idx < state.dimension(); idx++) {
            if ((idx & pol_bit) != pol_value) {
                continue;
            }
            size_t reduced = 0;
            for (size_t b : kept_bits) {
                reduced = (reduced << 1) | ((idx & b) ? 1 : 0);
            }
            auto &dst = (idx & dir_bit) ? down : up;
            dst[static_cast<Eigen::Index>(reduced)] = state.amplitude(idx);
        }
        double wu = up.squaredNorm();
        double wd = down.squaredNorm();
        if (wu > kEmptyBranch * total && wd > kEmptyBranch * total) {
            throw std::invalid_argument("photon " + std::to_string(photon) +
                                        " occupies both directions at detection; paths must be merged first");
        }
        double w = wu + wd;
        if (w <= kEmptyBranch * total) {
            continue;
        }
        Eigen::VectorXcd v = wu >= wd ? up : down;
        branches.push_back({o, w / total, StateVector(kept, v / std::sqrt(w))});
    }
    return branches;
}

Spinor haar_random_spin(std::mt19937_64 &rng) {
    // A normalized complex Gaussian vector is Haar distributed on the state sphere.
    std::normal_distribution<double> normal(0.0, 1.0);
    while (true) {
        double x0 = normal(rng), y0 = normal(rng), x1 = normal(rng), y1 = normal(rng);
        Spinor v(Complex(x0, y0), Complex(x1, y1));
        double n = v.norm();
        if (n > 1e-150) {
            return v / n;
        }
    }
}

}  // namespace qdspin

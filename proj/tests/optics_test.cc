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

#include <random>

#include "gtest/gtest.h"

#include "test_util.h"

using namespace qdspin;
using qdspin::testing::spinor;

namespace {

// Photon 1 alone; amplitude index = 2 * pol + dir.
StateVector photon(Complex r_up, Complex r_down, Complex l_up, Complex l_down) {
    Eigen::VectorXcd v(4);
    v << r_up, r_down, l_up, l_down;
    return StateVector({polarization_label(1), direction_label(1)}, v);
}

StateVector photon_mode(Circular p, Direction d) {
    Eigen::VectorXcd v = Eigen::VectorXcd::Zero(4);
    v[2 * static_cast<int>(p) + static_cast<int>(d)] = 1;
    return StateVector({polarization_label(1), direction_label(1)}, v);
}

void expect_amplitudes(const StateVector &s, std::initializer_list<Complex> expected) {
    ASSERT_EQ(s.dimension(), expected.size());
    size_t k = 0;
    for (Complex e : expected) {
        EXPECT_NEAR(std::abs(s.amplitude(k) - e), 0, kExactTol) << "index " << k << " of " << s.str();
        k++;
    }
}

}  // namespace

TEST(optics, hwp1_on_r) {
    auto out = apply_operator(photon_mode(Circular::kR, Direction::kUp), hwp1(1));
    expect_amplitudes(out, {M_SQRT1_2, 0, M_SQRT1_2, 0});
}

TEST(optics, hwp1_on_l) {
    // -(1/sqrt2)(L - R)
    auto out = apply_operator(photon_mode(Circular::kL, Direction::kUp), hwp1(1));
    expect_amplitudes(out, {M_SQRT1_2, 0, -M_SQRT1_2, 0});
}

TEST(optics, hwp1_twice_is_identity) {
    Eigen::Matrix2cd m = hwp1_matrix();
    ASSERT_TRUE(is_unitary(m));
    ASSERT_LT((m * m - Eigen::Matrix2cd::Identity()).norm(), kExactTol);
    ASSERT_LT((m.adjoint() * m - Eigen::Matrix2cd::Identity()).norm(), kExactTol);
    ASSERT_LT((m - hadamard_matrix()).norm(), kExactTol);
}

TEST(optics, hwp1_requires_circular) {
    auto linear = hwp2(photon_mode(Circular::kR, Direction::kUp), 1);
    ASSERT_THROW(apply_operator(linear, hwp1(1)), std::invalid_argument);
}

TEST(optics, hwp2_relabels) {
    auto r = photon_mode(Circular::kR, Direction::kUp);
    auto h = hwp2(r, 1);
    ASSERT_EQ(h.label(polarization_id(1)).frame, PolarizationFrame::kLinear);
    ASSERT_EQ(h.amplitudes(), r.amplitudes());
    auto l = photon_mode(Circular::kL, Direction::kDown);
    auto v = hwp2(l, 1);
    ASSERT_EQ(v.amplitudes(), l.amplitudes());
    ASSERT_TRUE(v.str().find("HV") != std::string::npos);
}

TEST(optics, hwp2_involution) {
    auto s = photon(0.1, Complex(0, 0.7), -0.5, 0.5).normalized();
    auto twice = hwp2(hwp2(s, 1), 1);
    ASSERT_EQ(twice.subsystems(), s.subsystems());
    ASSERT_EQ(twice.amplitudes(), s.amplitudes());
}

TEST(optics, hwp2_errors) { ASSERT_THROW(hwp2(photon_mode(Circular::kR, Direction::kUp), 2), std::invalid_argument); }

TEST(optics, route_examples) {
    auto a = route(photon_mode(Circular::kR, Direction::kUp), 1, Direction::kDown, Direction::kUp);
    expect_amplitudes(a, {0, 1, 0, 0});
    auto b = route(photon_mode(Circular::kL, Direction::kDown), 1, Direction::kDown, Direction::kUp);
    expect_amplitudes(b, {0, 0, 1, 0});
    const double alpha = 0.6, beta = 0.8;
    auto c = route(photon(alpha, 0, beta, 0), 1, Direction::kDown, Direction::kUp);
    expect_amplitudes(c, {0, alpha, beta, 0});
    ASSERT_NEAR(c.squared_norm(), 1, kExactTol);
}

TEST(optics, route_sums_coherently) {
    auto s = photon(0.5, -0.5, 0.5, 0.5);
    auto merged = route(s, 1, Direction::kUp, Direction::kUp);
    expect_amplitudes(merged, {0, 0, 1, 0});
}

TEST(optics, route_errors) {
    auto linear = hwp2(photon_mode(Circular::kR, Direction::kUp), 1);
    ASSERT_THROW(route(linear, 1, Direction::kUp, Direction::kDown), std::invalid_argument);
    ASSERT_THROW(route(photon_mode(Circular::kR, Direction::kUp), 2, Direction::kUp, Direction::kDown),
                 std::invalid_argument);
}

TEST(optics, route_live_mode_closure) {
    // Sets closed under the joint flip (P, d) -> (opposite P, opposite d).
    const std::vector<std::vector<int>> closed_sets = {{0, 3}, {1, 2}, {0, 1, 2, 3}};
    std::mt19937_64 rng(11);
    std::normal_distribution<double> n(0, 1);
    for (const auto &set : closed_sets) {
        for (Direction dir_r : {Direction::kUp, Direction::kDown}) {
            Eigen::VectorXcd v = Eigen::VectorXcd::Zero(4);
            for (int k : set) {
                v[k] = Complex(n(rng), n(rng));
            }
            auto out = route(StateVector({polarization_label(1), direction_label(1)}, v.normalized()), 1, dir_r,
                             opposite(dir_r));
            for (int k = 0; k < 4; k++) {
                bool occupied = std::abs(out.amplitude(k)) > 0;
                bool partner = std::abs(out.amplitude(3 - k)) > 0;
                ASSERT_EQ(occupied, partner) << "mode " << k;
            }
            if (set.size() == 2) {
                ASSERT_NEAR(out.squared_norm(), 1, kExactTol);
            }
        }
    }
}

TEST(optics, spin_hadamard) {
    auto up = make_product_state({{spin_label(1), spinor(1, 0)}});
    auto down = make_product_state({{spin_label(1), spinor(0, 1)}});
    expect_amplitudes(apply_operator(up, spin_hadamard(1)), {M_SQRT1_2, M_SQRT1_2});
    expect_amplitudes(apply_operator(down, spin_hadamard(1)), {M_SQRT1_2, -M_SQRT1_2});
    Eigen::Matrix2cd h = hadamard_matrix();
    ASSERT_LT((h * h - Eigen::Matrix2cd::Identity()).norm(), kExactTol);
}

TEST(optics, paulis) {
    auto up = make_product_state({{spin_label(1), spinor(1, 0)}});
    expect_amplitudes(apply_operator(up, spin_pauli(Pauli::kX, 1)), {0, 1});
    auto ab = make_product_state({{spin_label(1), spinor(0.6, 0.8)}});
    expect_amplitudes(apply_operator(ab, spin_pauli(Pauli::kZ, 1)), {0.6, -0.8});
    Eigen::Matrix2cd x = pauli_matrix(Pauli::kX), z = pauli_matrix(Pauli::kZ);
    ASSERT_LT((x * z + z * x).norm(), kExactTol);
    for (Pauli p : {Pauli::kI, Pauli::kX, Pauli::kZ}) {
        Eigen::Matrix2cd m = pauli_matrix(p);
        ASSERT_TRUE(is_unitary(m));
        ASSERT_LT((m * m - Eigen::Matrix2cd::Identity()).norm(), kExactTol);
    }
    ASSERT_EQ(pauli_char(Pauli::kI), 'I');
    ASSERT_EQ(pauli_char(Pauli::kX), 'X');
    ASSERT_EQ(pauli_char(Pauli::kZ), 'Z');
}

TEST(optics, opposite) {
    ASSERT_EQ(opposite(Circular::kR), Circular::kL);
    ASSERT_EQ(opposite(Direction::kDown), Direction::kUp);
}

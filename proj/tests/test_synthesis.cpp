// Copyright 2026 The qlss Authors
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

#include <random>

#include <gtest/gtest.h>

#include "oracle.hpp"
#include "qlss/state.hpp"
#include "qlss/synthesis.hpp"

using namespace qlss;

namespace {

bool lowered_only(const Circuit& c)
{
    for (const Gate& g : c.gates) {
        if (g.kind == GateKind::CX && g.controls.size() == 1 && g.targets.size() == 1) continue;
        if (g.targets.size() != 1 || !g.controls.empty()) return false;
    }
    return true;
}

long long cx_count(const Circuit& c)
{
    long long n = 0;
    for (const Gate& g : c.gates) n += g.kind == GateKind::CX;
    return n;
}

double unitary_error(const Circuit& a, const Circuit& b)
{
    return (oracle::circuit_unitary(a) - oracle::circuit_unitary(b)).cwiseAbs().maxCoeff();
}

} // namespace

TEST(Synthesis, zyz_reconstructs) {
    std::mt19937_64 rng(67);
    for (int trial = 0; trial < 50; ++trial) {
        const CMatrix u = oracle::random_unitary(2, rng);
        const auto a = synth::zyz(u);
        const CMatrix r = std::polar(1.0, a.phase) * rz_matrix(a.beta) * ry_matrix(a.gamma) * rz_matrix(a.delta);
        EXPECT_LE((r - u).cwiseAbs().maxCoeff(), 1e-12);
    }
}

TEST(Synthesis, cx_passes_through) {
    Circuit c(2);
    c.add(gates::cx(0, 1));
    const Circuit d = decompose(c);
    ASSERT_EQ(d.size(), 1u);
    EXPECT_EQ(d.gates[0].kind, GateKind::CX);
}

TEST(Synthesis, two_qubit_at_most_three_cx) {
    std::mt19937_64 rng(71);
    for (int trial = 0; trial < 30; ++trial) {
        Circuit c(2);
        c.add(gates::unitary(oracle::random_unitary(4, rng), {0, 1}));
        const Circuit d = decompose(c);
        EXPECT_TRUE(lowered_only(d));
        EXPECT_LE(cx_count(d), 3);
        for (int k = 0; k < 20; ++k) {
            const auto in = QuantumState::from_vector(oracle::random_state(4, rng));
            EXPECT_LE((run(c, in).to_vector() - run(d, in).to_vector()).norm(), 1e-10);
        }
    }
}

TEST(Synthesis, two_qubit_special_cases) {
    Circuit swap(2);
    swap.add(gates::swap(0, 1));
    EXPECT_LE(unitary_error(swap, decompose(swap)), 1e-12);
    Circuit local(2);
    std::mt19937_64 rng(73);
    local.add(gates::unitary(oracle::kron(oracle::random_unitary(2, rng), oracle::random_unitary(2, rng)), {0, 1}));
    const Circuit d = decompose(local);
    EXPECT_EQ(cx_count(d), 0);
    EXPECT_LE(unitary_error(local, d), 1e-12);
    Circuit cz(2);
    cz.add(gates::controlled(gates::z(1), {0}));
    EXPECT_LE(unitary_error(cz, decompose(cz)), 1e-12);
}

TEST(Synthesis, controlled_single_uses_two_cx) {
    std::mt19937_64 rng(79);
    Circuit c(2);
    c.add(gates::unitary(oracle::random_unitary(2, rng), {1}, {0}));
    const Circuit d = decompose(c);
    EXPECT_EQ(cx_count(d), 2);
    EXPECT_LE(unitary_error(c, d), 1e-12);
}

TEST(Synthesis, controlled_4x4_lowered) {
    std::mt19937_64 rng(83);
    for (int trial = 0; trial < 5; ++trial) {
        Circuit c(3);
        c.add(gates::unitary(oracle::random_unitary(4, rng), {0, 2}, {1}));
        const Circuit d = decompose(c);
        EXPECT_TRUE(lowered_only(d));
        EXPECT_LE(unitary_error(c, d), 1e-7);
    }
}

TEST(Synthesis, dense_blocks_up_to_five_qubits) {
    std::mt19937_64 rng(89);
    for (int n = 3; n <= 5; ++n) {
        Circuit c(n);
        std::vector<int> targets(static_cast<std::size_t>(n));
        for (int i = 0; i < n; ++i) targets[static_cast<std::size_t>(i)] = (n - 1 - i + 2) % n;
        c.add(gates::unitary(oracle::random_unitary(1 << n, rng), targets));
        const Circuit d = decompose(c);
        EXPECT_TRUE(lowered_only(d));
        EXPECT_LE(unitary_error(c, d), 1e-10) << "n=" << n;
    }
}

TEST(Synthesis, multi_controlled) {
    Circuit c(4);
    c.add(gates::controlled(gates::x(3), {0, 1, 2}));
    c.add(gates::controlled(gates::rz(0, 0.4), {1, 3}));
    const Circuit d = decompose(c);
    EXPECT_TRUE(lowered_only(d));
    EXPECT_LE(unitary_error(c, d), 1e-10);
}

TEST(Synthesis, repeat_emits_copies) {
    std::mt19937_64 rng(97);
    const CMatrix base = oracle::random_unitary(2, rng);
    Circuit one(2);
    one.add(gates::unitary(base, {1}, {0}));
    Circuit four(2);
    four.add(gates::unitary_power(base, 4, {1}, {0}));
    const Circuit d1 = decompose(one);
    const Circuit d4 = decompose(four);
    EXPECT_EQ(d4.size(), 4 * d1.size());
    EXPECT_LE(unitary_error(four, d4), 1e-10);
}

TEST(Synthesis, random_circuits_exact_including_phase) {
    std::mt19937_64 rng(101);
    for (int trial = 0; trial < 50; ++trial) {
        const int n = 1 + trial % 5;
        const Circuit c = oracle::random_circuit(n, 12, rng);
        EXPECT_LE(unitary_error(c, decompose(c)), 1e-9) << "trial " << trial;
    }
}

TEST(Synthesis, wide_random_circuits_preserve_states) {
    std::mt19937_64 rng(103);
    for (int trial = 0; trial < 10; ++trial) {
        const int n = 6 + trial % 5;
        const Circuit c = oracle::random_circuit(n, 20, rng);
        const auto in = QuantumState::from_vector(oracle::random_state(1 << n, rng));
        EXPECT_GE(fidelity(run(c, in), run(decompose(c), in)), 1.0 - 1e-7);
    }
}

TEST(Synthesis, too_wide_block_throws) {
    std::mt19937_64 rng(107);
    Circuit c(3);
    c.add(gates::unitary(oracle::random_unitary(8, rng), {0, 1, 2}));
    EXPECT_THROW(decompose(c, SynthesisOptions{2}), DecompositionError);
}

TEST(Synthesis, multiplexed_rotation_matches_block_diagonal) {
    std::mt19937_64 rng(109);
    std::uniform_real_distribution<double> a(-kPi, kPi);
    for (auto axis : {synth::Axis::Y, synth::Axis::Z}) {
        std::vector<double> angles(4);
        for (double& x : angles) x = a(rng);
        Circuit c(3);
        const std::vector<int> controls{0, 1};
        synth::append_multiplexed_rotation(c, axis, angles, 2, controls);
        const CMatrix u = oracle::circuit_unitary(c);
        for (int ctrl = 0; ctrl < 4; ++ctrl) {
            const CMatrix r = axis == synth::Axis::Y ? ry_matrix(angles[static_cast<std::size_t>(ctrl)])
                                                     : rz_matrix(angles[static_cast<std::size_t>(ctrl)]);
            for (int i = 0; i < 2; ++i)
                for (int j = 0; j < 2; ++j)
                    EXPECT_LE(std::abs(u(ctrl + 4 * i, ctrl + 4 * j) - r(i, j)), 1e-12);
        }
    }
}

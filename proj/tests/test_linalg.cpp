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
#include "qlss/heat.hpp"
#include "qlss/linalg.hpp"

using namespace qlss;

TEST(Linalg, make_system_normalizes) {
    CVector b(2);
    b << 3.0, 4.0;
    const auto s = make_system(CMatrix::Identity(2, 2), b);
    EXPECT_NEAR(s.b.norm(), 1.0, 1e-15);
    EXPECT_DOUBLE_EQ(s.b_norm, 5.0);
    EXPECT_FALSE(s.hermitized);
}

TEST(Linalg, make_system_rejects_bad_input) {
    EXPECT_THROW(make_system(CMatrix::Identity(2, 3), CVector::Ones(2)), std::invalid_argument);
    EXPECT_THROW(make_system(CMatrix::Identity(2, 2), CVector::Ones(3)), std::invalid_argument);
    EXPECT_THROW(make_system(CMatrix::Identity(2, 2), CVector::Zero(2)), std::invalid_argument);
    CMatrix bad = CMatrix::Identity(2, 2);
    bad(0, 1) = std::numeric_limits<double>::quiet_NaN();
    EXPECT_THROW(make_system(bad, CVector::Ones(2)), std::invalid_argument);
}

TEST(Linalg, pad_to_pow2_shapes) {
    const auto s3 = pad_to_pow2(make_system(CMatrix::Identity(3, 3), CVector::Ones(3)));
    EXPECT_EQ(s3.dim(), 4);
    EXPECT_EQ(s3.original_dim, 3);
    EXPECT_EQ(s3.b(3), cplx{});
    EXPECT_EQ(s3.a(3, 3), cplx(1.0));
    const auto s1 = pad_to_pow2(make_system(CMatrix::Identity(1, 1), CVector::Ones(1)));
    EXPECT_EQ(s1.dim(), 2);
    const auto s4 = pad_to_pow2(make_system(CMatrix::Identity(4, 4), CVector::Ones(4)));
    EXPECT_EQ(s4.dim(), 4);
}

TEST(Linalg, pad_preserves_solution) {
    std::mt19937_64 rng(3);
    for (int n : {3, 5, 6, 7}) {
        const CMatrix a = oracle::random_hermitian(n, rng) + 4.0 * CMatrix::Identity(n, n);
        const CVector b = oracle::random_state(n, rng);
        const auto raw = make_system(a, b);
        const auto padded = pad_to_pow2(raw);
        const CVector x_raw = classical_solve(raw);
        const CVector x_pad = classical_solve(padded);
        EXPECT_LE((x_pad.head(n) - x_raw).norm(), 1e-10);
        EXPECT_LE(x_pad.tail(padded.dim() - n).norm(), 1e-10);
    }
}

TEST(Linalg, hermitize_layout) {
    CMatrix a(2, 2);
    a << 1.0, 2.0, 0.0, 1.0;
    const auto s = hermitize(a, CVector::Ones(2));
    EXPECT_TRUE(s.hermitized);
    EXPECT_EQ(s.dim(), 4);
    EXPECT_EQ(s.solution_offset, 2);
    EXPECT_TRUE(is_hermitian(s.a));
    EXPECT_EQ(s.b.tail(2).norm(), 0.0);
}

TEST(Linalg, hermitize_pads_before_doubling) {
    std::mt19937_64 rng(5);
    CMatrix a = CMatrix::Random(5, 5);
    const auto s = hermitize(a, CVector::Ones(5));
    EXPECT_EQ(s.dim(), 16);
    EXPECT_EQ(s.solution_offset, 8);
}

TEST(Linalg, hermitize_solve_matches_direct_solve) {
    std::mt19937_64 rng(11);
    std::uniform_int_distribution<int> dim(2, 8);
    std::normal_distribution<double> d;
    for (int trial = 0; trial < 100; ++trial) {
        const int n = dim(rng);
        CMatrix a(n, n);
        for (Eigen::Index i = 0; i < n; ++i)
            for (Eigen::Index j = 0; j < n; ++j) a(i, j) = {d(rng), d(rng)};
        a += 3.0 * CMatrix::Identity(n, n);
        const CVector b = oracle::random_state(n, rng);
        const auto s = hermitize(a, b);
        const CVector x = s.extract(classical_solve(s)) * s.b_norm;
        const CVector expected = a.fullPivLu().solve(b);
        EXPECT_LE((x - expected).norm(), 1e-9 * expected.norm()) << "trial " << trial;
    }
}

TEST(Linalg, hermitian_input_is_not_doubled) {
    const auto s = hermitize(CMatrix::Identity(4, 4), CVector::Ones(4));
    EXPECT_FALSE(s.hermitized);
    EXPECT_EQ(s.dim(), 4);
}

TEST(Linalg, eig_identity) {
    const auto e = eig_hermitian(CMatrix::Identity(4, 4));
    EXPECT_LE((e.values - RVector::Ones(4)).norm(), 1e-14);
}

TEST(Linalg, eig_pauli_x) {
    CMatrix x(2, 2);
    x << 0.0, 1.0, 1.0, 0.0;
    const auto e = eig_hermitian(x);
    EXPECT_NEAR(e.values(0), -1.0, 1e-14);
    EXPECT_NEAR(e.values(1), 1.0, 1e-14);
}

TEST(Linalg, eig_invariants_random) {
    std::mt19937_64 rng(17);
    for (int n : {2, 4, 8, 16}) {
        const CMatrix a = oracle::random_hermitian(n, rng);
        const auto e = eig_hermitian(a);
        const double scale = a.norm();
        for (Eigen::Index j = 0; j < n; ++j) {
            EXPECT_LE((a * e.vectors.col(j) - e.values(j) * e.vectors.col(j)).norm(), 1e-10 * scale);
            if (j > 0) EXPECT_LE(e.values(j - 1), e.values(j));
        }
        EXPECT_LE((e.vectors.adjoint() * e.vectors - CMatrix::Identity(n, n)).cwiseAbs().maxCoeff(), 1e-10);
    }
}

TEST(Linalg, eig_rejects_non_hermitian) {
    CMatrix a(2, 2);
    a << 0.0, 1.0, 0.0, 0.0;
    EXPECT_THROW(eig_hermitian(a), std::invalid_argument);
}

TEST(Linalg, heat_spectrum_near_one) {
    const double r = 0.00016;
    const auto e = eig_hermitian(heat_matrix(HeatSpec::uniform(3, r)).a);
    EXPECT_GE(e.values.minCoeff(), 1.0 - 8 * r);
    EXPECT_LE(e.values.maxCoeff(), 1.0 + 8 * r);
}

TEST(Linalg, unitary_exp_cases) {
    EXPECT_LE((unitary_exp(CMatrix::Identity(3, 3) * 2.0, 0.0) - CMatrix::Identity(3, 3)).norm(), 1e-15);
    CMatrix d = CMatrix::Zero(2, 2);
    d(0, 0) = 1.0;
    d(1, 1) = 2.0;
    const CMatrix u = unitary_exp(d, kPi);
    EXPECT_LE(std::abs(u(0, 0) - cplx(-1.0)), 1e-14);
    EXPECT_LE(std::abs(u(1, 1) - cplx(1.0)), 1e-14);
}

TEST(Linalg, unitary_exp_group_law) {
    std::mt19937_64 rng(23);
    for (int trial = 0; trial < 10; ++trial) {
        const CMatrix a = oracle::random_hermitian(4, rng);
        const CMatrix u1 = unitary_exp(a, 0.37);
        const CMatrix u2 = unitary_exp(a, 1.21);
        EXPECT_TRUE(is_unitary(u1));
        EXPECT_LE((u1 * u2 - unitary_exp(a, 1.58)).cwiseAbs().maxCoeff(), 1e-9);
    }
}

TEST(Linalg, metrics_identity) {
    const auto m = metrics(CMatrix::Identity(8, 8));
    EXPECT_DOUBLE_EQ(m.condition_number, 1.0);
    EXPECT_NEAR(m.sparsity, 1.0 - 1.0 / 8.0, 1e-15);
    EXPECT_FALSE(m.has_negative);
}

TEST(Linalg, metrics_singular) {
    CMatrix a = CMatrix::Zero(2, 2);
    a(0, 0) = 1.0;
    EXPECT_THROW(metrics(a), SingularMatrixError);
}

TEST(Linalg, classical_solve_cases) {
    CVector e3 = CVector::Zero(4);
    e3(3) = 1.0;
    EXPECT_LE((classical_solve(make_system(CMatrix::Identity(4, 4), e3)) - e3).norm(), 1e-15);

    CMatrix d = CMatrix::Zero(2, 2);
    d(0, 0) = 1.0;
    d(1, 1) = 2.0;
    CVector b(2);
    b << 0.0, 1.0;
    const CVector x = classical_solve(make_system(d, b));
    EXPECT_NEAR(std::abs(x(0)), 0.0, 1e-15);
    EXPECT_NEAR(x(1).real(), 0.5, 1e-15);
}

TEST(Linalg, classical_solve_heat_residual) {
    const auto s = heat_matrix(HeatSpec::uniform(3, 0.00016));
    const CVector x = classical_solve(s);
    EXPECT_LE((s.a * x - s.b).norm(), 1e-10);
}

TEST(Linalg, classical_solve_singular) {
    EXPECT_THROW(solve_dense(CMatrix::Zero(2, 2), CVector::Ones(2)), SingularMatrixError);
}

TEST(Linalg, sparsity_reproduces_heat_values) {
    EXPECT_NEAR(sparsity(heat_matrix(HeatSpec::uniform(3, 0.00016)).a), 0.828125, 1e-12);
    EXPECT_NEAR(sparsity(heat_matrix(HeatSpec::uniform(5, 0.00064)).a), 0.8828125, 1e-12);
}

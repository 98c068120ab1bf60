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

// Independent reference computations shared by the tests. Nothing here calls
// into the simulator kernels; matrices are assembled from Kronecker products
// and closed-form sums.

#pragma once

#include <algorithm>
#include <cmath>
#include <random>
#include <vector>

#include <Eigen/QR>

#include "qlss/circuit.hpp"
#include "qlss/hhl.hpp"
#include "qlss/powerflow.hpp"

namespace qlss::oracle {

inline CMatrix ket_bra(int a, int b)
{
    CMatrix m = CMatrix::Zero(2, 2);
    m(a, b) = 1.0;
    return m;
}

inline CMatrix kron(const CMatrix& a, const CMatrix& b)
{
    CMatrix out(a.rows() * b.rows(), a.cols() * b.cols());
    for (Eigen::Index i = 0; i < a.rows(); ++i)
        for (Eigen::Index j = 0; j < a.cols(); ++j)
            out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
    return out;
}

/// Full 2^n x 2^n matrix of one gate:
/// I + P_controls (x) sum_{a,b} (U - I)[a,b] |a><b|_targets, qubit 0 rightmost.
inline CMatrix gate_unitary(const Gate& g, int n)
{
    const auto dim = Eigen::Index{1} << n;
    CMatrix full = CMatrix::Identity(dim, dim);
    const CMatrix delta = g.matrix - CMatrix::Identity(g.matrix.rows(), g.matrix.cols());
    for (Eigen::Index a = 0; a < delta.rows(); ++a) {
        for (Eigen::Index b = 0; b < delta.cols(); ++b) {
            if (delta(a, b) == cplx{}) continue;
            CMatrix term = CMatrix::Identity(1, 1);
            for (int q = n - 1; q >= 0; --q) {
                CMatrix op = CMatrix::Identity(2, 2);
                for (std::size_t i = 0; i < g.targets.size(); ++i)
                    if (g.targets[i] == q) op = ket_bra(int((a >> i) & 1), int((b >> i) & 1));
                for (int c : g.controls)
                    if (c == q) op = ket_bra(1, 1);
                term = kron(term, op);
            }
            full += delta(a, b) * term;
        }
    }
    return full;
}

inline CMatrix circuit_unitary(const Circuit& c)
{
    const auto dim = Eigen::Index{1} << c.n_qubits;
    CMatrix u = CMatrix::Identity(dim, dim);
    for (const Gate& g : c.gates) u = gate_unitary(g, c.n_qubits) * u;
    return std::polar(1.0, c.global_phase) * u;
}

inline CMatrix random_unitary(int dim, std::mt19937_64& rng)
{
    std::normal_distribution<double> d;
    CMatrix z(dim, dim);
    for (Eigen::Index i = 0; i < dim; ++i)
        for (Eigen::Index j = 0; j < dim; ++j) z(i, j) = {d(rng), d(rng)};
    Eigen::HouseholderQR<CMatrix> qr(z);
    CMatrix q = qr.householderQ();
    const CMatrix r = qr.matrixQR();
    for (Eigen::Index j = 0; j < dim; ++j) q.col(j) *= std::polar(1.0, std::arg(r(j, j)));
    return q;
}

inline CVector random_state(int dim, std::mt19937_64& rng)
{
    std::normal_distribution<double> d;
    CVector v(dim);
    for (Eigen::Index i = 0; i < dim; ++i) v(i) = {d(rng), d(rng)};
    return v / v.norm();
}

inline CMatrix random_hermitian(int dim, std::mt19937_64& rng)
{
    std::normal_distribution<double> d;
    CMatrix z(dim, dim);
    for (Eigen::Index i = 0; i < dim; ++i)
        for (Eigen::Index j = 0; j < dim; ++j) z(i, j) = {d(rng), d(rng)};
    return 0.5 * (z + z.adjoint());
}

/// Distinct random qubits.
inline std::vector<int> pick_qubits(int n, int k, std::mt19937_64& rng)
{
    std::vector<int> all(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) all[static_cast<std::size_t>(i)] = i;
    std::shuffle(all.begin(), all.end(), rng);
    all.resize(static_cast<std::size_t>(k));
    return all;
}

/// Mix of named, rotation, two-qubit, dense and controlled-dense gates.
inline Circuit random_circuit(int n, int n_gates, std::mt19937_64& rng)
{
    Circuit c(n);
    std::uniform_int_distribution<int> kind(0, n >= 3 ? 9 : (n >= 2 ? 7 : 4));
    std::uniform_real_distribution<double> angle(-kPi, kPi);
    for (int i = 0; i < n_gates; ++i) {
        const int pick = kind(rng);
        const auto q = pick_qubits(n, std::min(n, 3), rng);
        switch (pick) {
        case 0: c.add(gates::h(q[0])); break;
        case 1: c.add(gates::t(q[0])); break;
        case 2: c.add(gates::rz(q[0], angle(rng))); break;
        case 3: c.add(gates::ry(q[0], angle(rng))); break;
        case 4: c.add(gates::unitary(random_unitary(2, rng), {q[0]})); break;
        case 5: c.add(gates::cx(q[0], q[1])); break;
        case 6: c.add(gates::controlled(gates::phase(q[1], angle(rng)), {q[0]})); break;
        case 7: c.add(gates::unitary(random_unitary(4, rng), {q[0], q[1]})); break;
        case 8: c.add(gates::unitary(random_unitary(2, rng), {q[2]}, {q[0], q[1]})); break;
        default: c.add(gates::unitary(random_unitary(4, rng), {q[1], q[2]}, {q[0]})); break;
        }
    }
    return c;
}

/// Probability that an n_c-qubit phase register reads k for eigenphase phi.
inline double qpe_probability(double phi, int k, int n_c)
{
    const double m = std::ldexp(1.0, n_c);
    cplx sum{};
    for (long long x = 0; x < (1LL << n_c); ++x) sum += std::polar(1.0, 2.0 * kPi * double(x) * (phi - k / m));
    return std::norm(sum / m);
}

/// F[j,k] = e^{2 pi i jk/N}/sqrt(N).
inline CMatrix dft(int n_qubits)
{
    const auto n = Eigen::Index{1} << n_qubits;
    CMatrix f(n, n);
    for (Eigen::Index j = 0; j < n; ++j)
        for (Eigen::Index k = 0; k < n; ++k)
            f(j, k) = std::polar(1.0 / std::sqrt(double(n)), 2.0 * kPi * double(j * k % n) / double(n));
    return f;
}

/// P_k = sum_j |V_k||V_j| (G cos th_kj + B sin th_kj), Q_k = sum_j |V_k||V_j| (G sin th_kj - B cos th_kj).
inline Injections trig_injections(const PowerFlowCase& pf)
{
    const auto n = static_cast<Eigen::Index>(pf.buses.size());
    Injections out{RVector::Zero(n), RVector::Zero(n)};
    for (Eigen::Index k = 0; k < n; ++k) {
        const Bus& bk = pf.buses[static_cast<std::size_t>(k)];
        for (Eigen::Index j = 0; j < n; ++j) {
            const Bus& bj = pf.buses[static_cast<std::size_t>(j)];
            const double g = pf.y_bus(k, j).real();
            const double b = pf.y_bus(k, j).imag();
            const double th = bk.theta - bj.theta;
            out.p(k) += bk.v_mag * bj.v_mag * (g * std::cos(th) + b * std::sin(th));
            out.q(k) += bk.v_mag * bj.v_mag * (g * std::sin(th) - b * std::cos(th));
        }
    }
    return out;
}

inline RMatrix finite_difference_jacobian(const PowerFlowCase& pf, double h)
{
    const RVector x0 = pf.unknowns();
    const auto n = x0.size();
    RMatrix j(n, n);
    for (Eigen::Index c = 0; c < n; ++c) {
        PowerFlowCase plus = pf;
        PowerFlowCase minus = pf;
        RVector xp = x0;
        RVector xm = x0;
        xp(c) += h;
        xm(c) -= h;
        plus.set_unknowns(xp);
        minus.set_unknowns(xm);
        j.col(c) = (mismatch(plus) - mismatch(minus)) / (2.0 * h);
    }
    return j;
}

struct ExactFixture {
    LinearSystem system;
    HHLConfig config;
    RVector lambdas;
    CMatrix vectors;
};

/// A = V diag(lambda) V^dagger with integer eigenvalues and t = 2 pi / 2^n_c, so
/// every eigenvalue sits exactly on a clock value and C = 1.
inline ExactFixture exact_fixture(int n_d, int n_c, bool with_negative, std::mt19937_64& rng)
{
    const int dim = 1 << n_d;
    const int half = 1 << (n_c - 1);
    std::uniform_int_distribution<int> pos(1, with_negative ? half - 1 : 2 * half - 1);
    std::bernoulli_distribution flip(0.5);
    RVector lambdas(dim);
    for (int j = 0; j < dim; ++j) {
        int v = pos(rng);
        if (with_negative && (j == 0 || flip(rng))) v = -v;
        lambdas(j) = v;
    }
    const CMatrix vectors = oracle::random_unitary(dim, rng);
    const CMatrix a = vectors * lambdas.cast<cplx>().asDiagonal() * vectors.adjoint();
    ExactFixture f;
    f.system = make_system(0.5 * (a + a.adjoint()), oracle::random_state(dim, rng));
    f.config.n_c = n_c;
    f.config.t = 2.0 * kPi / double(1 << n_c);
    f.config.c_const = 1.0;
    f.config.signed_phases = with_negative;
    f.lambdas = lambdas;
    f.vectors = vectors;
    return f;
}

/// C^2 sum_j |<v_j|b>|^2 / lambda_j^2 from the construction spectrum.
inline double expected_success(const ExactFixture& f)
{
    const CVector beta = f.vectors.adjoint() * f.system.b;
    double p = 0.0;
    for (Eigen::Index j = 0; j < beta.size(); ++j)
        p += std::norm(beta(j)) * f.config.c_const * f.config.c_const / (f.lambdas(j) * f.lambdas(j));
    return p;
}

/// |<a|b>| for normalized vectors.
inline double overlap(const CVector& a, const CVector& b) { return std::abs(a.dot(b)); }

} // namespace qlss::oracle

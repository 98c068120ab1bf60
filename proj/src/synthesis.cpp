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

#include "qlss/synthesis.hpp"

#include <array>
#include <bit>
#include <cmath>

#include <Eigen/Eigenvalues>
#include <Eigen/QR>
#include <Eigen/SVD>
#include <unsupported/Eigen/KroneckerProduct>

#include "qlss/kernels.hpp"
#include "qlss/linalg.hpp"

namespace qlss {

namespace synth {

namespace {

constexpr double kAngleTol = 1e-12;
constexpr double kBlockTol = 1e-13;
const cplx kI{0.0, 1.0};

/// Rotation gates have period 4 pi with R(a + 2 pi) = -R(a); fold into [-pi, pi].
double wrap_rotation(double a, double& phase)
{
    const double k = std::round(a / (2 * kPi));
    if (k != 0.0) {
        a -= 2 * kPi * k;
        phase += kPi * k;
    }
    return a;
}

void emit_rotation(Circuit& out, Axis axis, int q, double angle)
{
    angle = wrap_rotation(angle, out.global_phase);
    if (std::abs(angle) < kAngleTol) return;
    out.add(axis == Axis::Y ? gates::ry(q, angle) : gates::rz(q, angle));
}

bool proportional_to_identity(const CMatrix& u, double tol = kAngleTol)
{
    const cplx d = u(0, 0);
    for (Eigen::Index j = 0; j < u.cols(); ++j)
        for (Eigen::Index i = 0; i < u.rows(); ++i)
            if (std::abs(u(i, j) - (i == j ? d : cplx{0.0, 0.0})) > tol) return false;
    return true;
}

void emit_single(Circuit& out, const CMatrix& u, int q)
{
    if (proportional_to_identity(u)) {
        out.global_phase += std::arg(u(0, 0));
        return;
    }
    const ZyzAngles a = zyz(u);
    out.global_phase += a.phase;
    if (std::abs(a.gamma) < kAngleTol) {
        emit_rotation(out, Axis::Z, q, a.beta + a.delta);
        return;
    }
    emit_rotation(out, Axis::Z, q, a.delta);
    emit_rotation(out, Axis::Y, q, a.gamma);
    emit_rotation(out, Axis::Z, q, a.beta);
}

/// Controlled-U for a single-qubit U with two CX (A X B X C = e^{-i alpha} U, ABC = I).
void emit_controlled_single(Circuit& out, const CMatrix& u, int control, int target)
{
    const ZyzAngles a = zyz(u);
    emit_rotation(out, Axis::Z, target, (a.delta - a.beta) / 2);
    out.add(gates::cx(control, target));
    emit_rotation(out, Axis::Z, target, -(a.delta + a.beta) / 2);
    emit_rotation(out, Axis::Y, target, -a.gamma / 2);
    out.add(gates::cx(control, target));
    emit_rotation(out, Axis::Y, target, a.gamma / 2);
    emit_rotation(out, Axis::Z, target, a.beta);
    if (std::abs(std::remainder(a.phase, 2 * kPi)) > kAngleTol) out.add(gates::phase(control, a.phase));
}

Circuit remap(const Circuit& local, std::span<const int> qubits, int n_qubits)
{
    Circuit out(n_qubits);
    out.global_phase = local.global_phase;
    out.gates.reserve(local.gates.size());
    for (Gate g : local.gates) {
        for (int& q : g.targets) q = qubits[q];
        for (int& q : g.controls) q = qubits[q];
        out.add(std::move(g));
    }
    return out;
}

const CMatrix& magic_basis()
{
    static const CMatrix b = [] {
        CMatrix m(4, 4);
        m << 1, 0, 0, kI, 0, kI, 1, 0, 0, kI, -1, 0, 1, 0, 0, -kI;
        return CMatrix(m / std::sqrt(2.0));
    }();
    return b;
}

/// Splits a 4x4 local operator into hi (qubit 1) and lo (qubit 0) factors.
std::pair<CMatrix, CMatrix> factor_kron(const CMatrix& l)
{
    int bi = 0, bj = 0;
    double best = -1.0;
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j) {
            const double nrm = l.block(2 * i, 2 * j, 2, 2).norm();
            if (nrm > best) {
                best = nrm;
                bi = i;
                bj = j;
            }
        }
    const CMatrix blk = l.block(2 * bi, 2 * bj, 2, 2);
    const CMatrix lo = blk / std::sqrt(blk.determinant());
    CMatrix hi(2, 2);
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j) hi(i, j) = (lo.adjoint() * l.block(2 * i, 2 * j, 2, 2)).trace() / 2.0;
    return {hi, lo};
}

void emit_two_qubit(Circuit& out, const CMatrix& u, int q0, int q1)
{
    const CMatrix& mb = magic_basis();
    const double det_phase = std::arg(u.determinant()) / 4;
    const CMatrix us = u * std::polar(1.0, -det_phase);
    const CMatrix up = mb.adjoint() * us * mb;
    const CMatrix m2 = up.transpose() * up;

    // m2 is symmetric unitary: its real and imaginary parts are commuting real
    // symmetric matrices, so a generic combination shares their eigenbasis.
    RMatrix p;
    bool found = false;
    for (double mix : {0.6180339887, 1.4142135623, 0.3183098861, 2.7182818284, 0.1234567891}) {
        Eigen::SelfAdjointEigenSolver<RMatrix> es(m2.real() + mix * m2.imag());
        p = es.eigenvectors();
        const CMatrix d = p.transpose().cast<cplx>() * m2 * p.cast<cplx>();
        const CMatrix off = d - CMatrix(d.diagonal().asDiagonal());
        if (off.cwiseAbs().maxCoeff() < 1e-10) {
            found = true;
            break;
        }
    }
    if (!found) throw DecompositionError("two-qubit KAK: failed to diagonalize");
    if (p.determinant() < 0) p.col(0) *= -1.0;
    const CMatrix pc = p.cast<cplx>();
    CVector d = (pc.transpose() * m2 * pc).diagonal();
    CVector ds(4);
    for (int k = 0; k < 4; ++k) ds(k) = std::sqrt(d(k));
    if ((ds(0) * ds(1) * ds(2) * ds(3)).real() < 0) ds(0) = -ds(0);

    const CMatrix k1 = up * pc * ds.cwiseInverse().asDiagonal();
    const CMatrix left = mb * k1 * mb.adjoint();
    const CMatrix right = mb * pc.transpose() * mb.adjoint();

    // Middle factor exp(i(phi + a XX + b YY + c ZZ)) is diagonal in the magic basis.
    static const RMatrix paulis = [] {
        const CMatrix& m = magic_basis();
        CMatrix x(2, 2), y(2, 2), z(2, 2);
        x << 0, 1, 1, 0;
        y << 0, -kI, kI, 0;
        z << 1, 0, 0, -1;
        RMatrix out(4, 4);
        const std::array<CMatrix, 3> pp{Eigen::kroneckerProduct(x, x).eval(), Eigen::kroneckerProduct(y, y).eval(),
                                        Eigen::kroneckerProduct(z, z).eval()};
        for (int c = 0; c < 3; ++c) out.col(c) = (m.adjoint() * pp[static_cast<std::size_t>(c)] * m).diagonal().real();
        out.col(3).setOnes();
        return out;
    }();
    RVector angles(4);
    for (int k = 0; k < 4; ++k) angles(k) = std::arg(ds(k));
    const RVector abcp = paulis.partialPivLu().solve(angles);

    Circuit local(2);
    const auto [r_hi, r_lo] = factor_kron(right);
    emit_single(local, r_lo, 0);
    emit_single(local, r_hi, 1);
    const bool local_only = std::abs(std::remainder(abcp(0), kPi / 2)) < kAngleTol &&
                            std::abs(std::remainder(abcp(1), kPi / 2)) < kAngleTol &&
                            std::abs(std::remainder(abcp(2), kPi / 2)) < kAngleTol;
    if (!local_only) {
        const double a = abcp(0), b = abcp(1), c = abcp(2);
        emit_rotation(local, Axis::Z, 1, kPi / 2);
        local.add(gates::cx(1, 0));
        emit_rotation(local, Axis::Z, 0, -2 * c + kPi / 2);
        emit_rotation(local, Axis::Y, 1, -2 * a + kPi / 2);
        local.add(gates::cx(0, 1));
        emit_rotation(local, Axis::Y, 1, 2 * b - kPi / 2);
        local.add(gates::cx(1, 0));
        emit_rotation(local, Axis::Z, 0, -kPi / 2);
    } else {
        // Interaction angles on multiples of pi/2 are local Paulis; absorb them below.
        const CMatrix mid = mb * ds.asDiagonal() * mb.adjoint();
        const auto [m_hi, m_lo] = factor_kron(mid);
        emit_single(local, m_lo, 0);
        emit_single(local, m_hi, 1);
    }
    const auto [l_hi, l_lo] = factor_kron(left);
    emit_single(local, l_lo, 0);
    emit_single(local, l_hi, 1);

    // Settle the global phase against the target exactly.
    local.global_phase = 0.0;
    const CMatrix built = local_matrix(local);
    const cplx overlap = (built.adjoint() * u).trace() / 4.0;
    local.global_phase = std::arg(overlap);
    if (std::abs(std::abs(overlap) - 1.0) > 1e-8) throw DecompositionError("two-qubit KAK: reconstruction failed");

    const std::array<int, 2> map{q0, q1};
    out.append(remap(local, map, out.n_qubits));
}

void emit_demultiplex(Circuit& out, const CMatrix& u0, const CMatrix& u1, std::span<const int> qubits);

void emit_qsd(Circuit& out, const CMatrix& u, std::span<const int> qubits)
{
    const Eigen::Index m = u.rows() / 2;
    const int msb = qubits.back();
    const std::span<const int> lower = qubits.first(qubits.size() - 1);
    const CMatrix u00 = u.topLeftCorner(m, m), u01 = u.topRightCorner(m, m);
    const CMatrix u10 = u.bottomLeftCorner(m, m), u11 = u.bottomRightCorner(m, m);

    if (u01.cwiseAbs().maxCoeff() < kBlockTol && u10.cwiseAbs().maxCoeff() < kBlockTol) {
        emit_demultiplex(out, u00, u11, qubits);
        return;
    }

    // Cosine-sine decomposition: u = diag(L0, L1) [[C, -S], [S, C]] diag(R0, R1).
    Eigen::JacobiSVD<CMatrix> svd(u00, Eigen::ComputeFullU | Eigen::ComputeFullV);
    const CMatrix l0 = svd.matrixU();
    const CMatrix r0 = svd.matrixV().adjoint();
    const RVector cvals = svd.singularValues().cwiseMin(1.0);

    const CMatrix y = u10 * r0.adjoint();
    Eigen::ColPivHouseholderQR<CMatrix> qr(y);
    const CMatrix q = qr.householderQ();
    const CMatrix rr = qr.matrixR().template triangularView<Eigen::Upper>();
    const auto& perm = qr.colsPermutation().indices();

    CMatrix l1(m, m);
    RVector svals(m);
    for (Eigen::Index k = 0; k < m; ++k) {
        const cplx r = rr(k, k);
        const double mag = std::abs(r);
        const cplx ph = mag > 0 ? r / mag : cplx{1.0, 0.0};
        l1.col(perm(k)) = q.col(k) * ph;
        svals(perm(k)) = mag;
    }

    std::vector<double> theta(static_cast<std::size_t>(m));
    RVector c(m), s(m);
    for (Eigen::Index i = 0; i < m; ++i) {
        theta[static_cast<std::size_t>(i)] = std::atan2(svals(i), cvals(i));
        c(i) = std::cos(theta[static_cast<std::size_t>(i)]);
        s(i) = std::sin(theta[static_cast<std::size_t>(i)]);
    }
    const CMatrix from_u11 = l1.adjoint() * u11;
    const CMatrix from_u01 = -(l0.adjoint() * u01);
    CMatrix r1(m, m);
    for (Eigen::Index i = 0; i < m; ++i)
        r1.row(i) = c(i) >= s(i) ? CMatrix(from_u11.row(i) / c(i)) : CMatrix(from_u01.row(i) / s(i));

    emit_demultiplex(out, r0, r1, qubits);
    std::vector<double> ry_angles(static_cast<std::size_t>(m));
    for (Eigen::Index i = 0; i < m; ++i) ry_angles[static_cast<std::size_t>(i)] = 2 * theta[static_cast<std::size_t>(i)];
    append_multiplexed_rotation(out, Axis::Y, ry_angles, msb, lower);
    emit_demultiplex(out, l0, l1, qubits);
}

/// diag(u0, u1) on (lower, msb) = (I (x) V) (D (+) D^dagger) (I (x) W).
void emit_demultiplex(Circuit& out, const CMatrix& u0, const CMatrix& u1, std::span<const int> qubits)
{
    const std::span<const int> lower = qubits.first(qubits.size() - 1);
    const int msb = qubits.back();
    const CMatrix x = u0 * u1.adjoint();
    if (proportional_to_identity(x, kBlockTol)) {
        // Both blocks agree up to a phase: a single-qubit phase rotation on msb times u1.
        const double ph = std::arg(x(0, 0));
        append_unitary(out, u1, lower);
        emit_rotation(out, Axis::Z, msb, -ph);
        out.global_phase += ph / 2;
        return;
    }
    Eigen::ComplexSchur<CMatrix> schur(x);
    const CMatrix v = schur.matrixU();
    const CVector ev = schur.matrixT().diagonal();
    CVector d(ev.size());
    std::vector<double> rz_angles(static_cast<std::size_t>(ev.size()));
    for (Eigen::Index i = 0; i < ev.size(); ++i) {
        d(i) = std::polar(1.0, std::arg(ev(i)) / 2);
        rz_angles[static_cast<std::size_t>(i)] = -std::arg(ev(i));
    }
    const CMatrix w = d.asDiagonal() * v.adjoint() * u1;
    append_unitary(out, w, lower);
    append_multiplexed_rotation(out, Axis::Z, rz_angles, msb, lower);
    append_unitary(out, v, lower);
}

CMatrix controlled_full_matrix(const Gate& g)
{
    const Eigen::Index block = Eigen::Index{1} << g.targets.size();
    const Eigen::Index dim = block << g.controls.size();
    CMatrix full = CMatrix::Identity(dim, dim);
    full.bottomRightCorner(block, block) = g.matrix;
    return full;
}

void lower_gate(Circuit& out, const Gate& g, const SynthesisOptions& options)
{
    if (g.controls.empty() && g.targets.size() == 1) {
        if (g.kind == GateKind::UNITARY)
            emit_single(out, g.matrix, g.targets[0]);
        else
            out.add(g);
        return;
    }
    if (g.kind == GateKind::CX && g.controls.size() == 1) {
        out.add(g);
        return;
    }
    if (g.kind == GateKind::SWAP && g.controls.empty()) {
        out.add(gates::cx(g.targets[0], g.targets[1]));
        out.add(gates::cx(g.targets[1], g.targets[0]));
        out.add(gates::cx(g.targets[0], g.targets[1]));
        return;
    }
    if (g.targets.size() == 1 && g.controls.size() == 1) {
        if (g.kind == GateKind::X) {
            out.add(gates::cx(g.controls[0], g.targets[0]));
            return;
        }
        emit_controlled_single(out, g.matrix, g.controls[0], g.targets[0]);
        return;
    }
    const std::vector<int> qs = g.qubits();
    if (static_cast<int>(qs.size()) > options.max_block_qubits) {
        throw DecompositionError("gate on " + std::to_string(qs.size()) + " qubits exceeds the synthesis limit of " +
                                 std::to_string(options.max_block_qubits));
    }
    append_unitary(out, controlled_full_matrix(g), qs);
}

} // namespace

ZyzAngles zyz(const CMatrix& u)
{
    const cplx det = u(0, 0) * u(1, 1) - u(0, 1) * u(1, 0);
    const double alpha = std::arg(det) / 2;
    const CMatrix v = u * std::polar(1.0, -alpha);
    const double c = std::abs(v(0, 0));
    const double s = std::abs(v(1, 0));
    ZyzAngles a;
    a.gamma = 2 * std::atan2(s, c);
    const double sum = c > 1e-14 ? 2 * std::arg(v(1, 1)) : 0.0;
    const double diff = s > 1e-14 ? 2 * std::arg(v(1, 0)) : 0.0;
    a.beta = (sum + diff) / 2;
    a.delta = (sum - diff) / 2;
    const CMatrix r = rz_matrix(a.beta) * ry_matrix(a.gamma) * rz_matrix(a.delta);
    a.phase = std::arg((r.adjoint() * u).trace());
    return a;
}

void append_unitary(Circuit& out, const CMatrix& u, std::span<const int> qubits)
{
    const Eigen::Index dim = Eigen::Index{1} << qubits.size();
    if (u.rows() != dim || u.cols() != dim) throw std::invalid_argument("append_unitary: size mismatch");
    if (proportional_to_identity(u)) {
        out.global_phase += std::arg(u(0, 0));
        return;
    }
    if (qubits.size() == 1) {
        emit_single(out, u, qubits[0]);
    } else if (qubits.size() == 2) {
        emit_two_qubit(out, u, qubits[0], qubits[1]);
    } else {
        emit_qsd(out, u, qubits);
    }
}

void append_multiplexed_rotation(Circuit& out, Axis axis, std::span<const double> angles, int target,
                                 std::span<const int> controls)
{
    const std::size_t k = controls.size();
    const std::size_t n = std::size_t{1} << k;
    if (angles.size() != n) throw std::invalid_argument("multiplexed rotation: expected 2^k angles");
    bool all_zero = true;
    for (double a : angles) all_zero = all_zero && std::abs(a) < kAngleTol;
    if (all_zero) return;
    if (k == 0) {
        emit_rotation(out, axis, target, angles[0]);
        return;
    }
    const double scale = 1.0 / static_cast<double>(n);
    for (std::size_t i = 0; i < n; ++i) {
        const std::size_t gray = i ^ (i >> 1);
        double theta = 0.0;
        for (std::size_t j = 0; j < n; ++j) {
            const int sign = std::popcount(j & gray) % 2 == 0 ? 1 : -1;
            theta += sign * angles[j];
        }
        emit_rotation(out, axis, target, theta * scale);
        const std::size_t pos = i + 1 == n ? k - 1 : static_cast<std::size_t>(std::countr_zero(i + 1));
        out.add(gates::cx(controls[pos], target));
    }
}

CMatrix local_matrix(const Circuit& c)
{
    const Eigen::Index dim = Eigen::Index{1} << c.n_qubits;
    CMatrix m(dim, dim);
    std::vector<cplx> col(static_cast<std::size_t>(dim));
    for (Eigen::Index j = 0; j < dim; ++j) {
        std::fill(col.begin(), col.end(), cplx{0.0, 0.0});
        col[static_cast<std::size_t>(j)] = 1.0;
        for (const Gate& g : c.gates) kernels::apply(col, c.n_qubits, g);
        for (Eigen::Index i = 0; i < dim; ++i) m(i, j) = col[static_cast<std::size_t>(i)];
    }
    return m * std::polar(1.0, c.global_phase);
}

} // namespace synth

Circuit decompose(const Circuit& circuit, const SynthesisOptions& options)
{
    Circuit out(circuit.n_qubits);
    out.global_phase = circuit.global_phase;
    for (const Gate& g : circuit.gates) {
        if (g.repeat > 1) {
            Gate base = g;
            base.matrix = g.base;
            base.repeat = 1;
            base.base = CMatrix();
            Circuit once(circuit.n_qubits);
            synth::lower_gate(once, base, options);
            for (int r = 0; r < g.repeat; ++r) out.append(once);
        } else {
            synth::lower_gate(out, g, options);
        }
    }
    return out;
}

} // namespace qlss
